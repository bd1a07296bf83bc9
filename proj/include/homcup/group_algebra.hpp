#pragma once

#include <optional>
#include <vector>

#include "homcup/fqpoly.hpp"
#include "homcup/json_fwd.hpp"

namespace homcup {

/// Element of the group algebra F_q[C_l] = F_q[x]/(x^l - 1), l odd.
/// coeffs[i] is the coefficient of x^i.
struct GroupAlgebraElement {
    Field field;
    int l = 1;
    std::vector<felem> coeffs;

    GroupAlgebraElement() = default;
    GroupAlgebraElement(const Field& f, int l_) : field(f), l(l_), coeffs(l_, 0) {
        require(l_ >= 1, "group order must be positive");
    }
    GroupAlgebraElement(const Field& f, std::vector<felem> c)
        : field(f), l((int)c.size()), coeffs(std::move(c)) {}

    static GroupAlgebraElement one(const Field& f, int l) {
        GroupAlgebraElement e(f, l);
        e.coeffs[0] = 1;
        return e;
    }
    static GroupAlgebraElement monomial(const Field& f, int l, int j, felem c = 1) {
        GroupAlgebraElement e(f, l);
        e.coeffs[((j % l) + l) % l] = c;
        return e;
    }

    bool is_zero() const {
        for (felem c : coeffs)
            if (c) return false;
        return true;
    }
    bool operator==(const GroupAlgebraElement& o) const {
        return field == o.field && l == o.l && coeffs == o.coeffs;
    }

    FqPoly to_poly() const { return FqPoly(field, coeffs); }
    static GroupAlgebraElement from_poly(const FqPoly& p, int l);

    nlohmann::json to_json() const;
    static GroupAlgebraElement from_json(const nlohmann::json& j);
};

GroupAlgebraElement ga_add(const GroupAlgebraElement& u, const GroupAlgebraElement& v);
/// Cyclic convolution; agrees with the circulant-matrix action Circ(u) * v.
GroupAlgebraElement ga_mul(const GroupAlgebraElement& u, const GroupAlgebraElement& v);
/// x^k * u (cyclic shift by k).
GroupAlgebraElement ga_shift(const GroupAlgebraElement& u, int k);
/// The l x l circulant matrix of u, column j = x^j * u (as dense columns).
std::vector<std::vector<felem>> circulant(const GroupAlgebraElement& u);

/// Irreducible monic factors of x^l - 1 over the field, l odd (so the
/// factorization is squarefree in characteristic 2). Sorted; contains x+1.
std::vector<FqPoly> factor_cyclic(int l, const Field& field);

struct IdealAnalysis {
    int dimension = 0;        // dim of the ideal spanned by the generators
    bool is_whole_algebra = false;
    FqPoly generator_gcd;     // gcd(generators, x^l - 1); the ideal is <gcd>
    std::vector<FqPoly> containing_maximal_ideals; // irreducible f with <gen> in <f>
};

/// Ideal generated by the given elements inside F_q[C_l]:
/// dimension = l - deg gcd(generators, x^l - 1); containment in the maximal
/// ideal <f> holds iff f divides the gcd.
IdealAnalysis ideal_analyze(const std::vector<GroupAlgebraElement>& generators,
                            const Field& field, int l);

struct StandardBasisSolution {
    std::vector<GroupAlgebraElement> coefficients; // f_i with sum f_i * v_i = x^j
};

/// Solve sum_i f_i * v_i = x^j over F_q[C_l]; requires the generators to span
/// the whole algebra (otherwise throws, citing a containing maximal ideal).
/// Deterministic: leftmost-pivot RREF of the stacked circulant system.
StandardBasisSolution standard_basis_solve(const std::vector<GroupAlgebraElement>& generators,
                                           int target_index);

} // namespace homcup
