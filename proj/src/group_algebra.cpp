#include "homcup/group_algebra.hpp"

#include <json.hpp>

#include "homcup/matrix.hpp"

namespace homcup {

GroupAlgebraElement GroupAlgebraElement::from_poly(const FqPoly& p, int l) {
    GroupAlgebraElement e(p.field, l);
    for (int i = 0; i <= p.deg(); ++i) e.coeffs[i % l] ^= p.at(i);
    return e;
}

nlohmann::json GroupAlgebraElement::to_json() const {
    std::vector<int> c(coeffs.begin(), coeffs.end());
    return {{"l", l}, {"field", field.to_json()}, {"coeffs", c}};
}

GroupAlgebraElement GroupAlgebraElement::from_json(const nlohmann::json& j) {
    Field f = Field::from_json(j.at("field"));
    auto c = j.at("coeffs").get<std::vector<int>>();
    GroupAlgebraElement e(f, (int)c.size());
    for (std::size_t i = 0; i < c.size(); ++i) e.coeffs[i] = (felem)c[i];
    require(e.l == j.at("l").get<int>(), "group algebra length mismatch");
    return e;
}

GroupAlgebraElement ga_add(const GroupAlgebraElement& u, const GroupAlgebraElement& v) {
    require(u.field == v.field && u.l == v.l, "group algebra mismatch");
    GroupAlgebraElement r = u;
    for (int i = 0; i < u.l; ++i) r.coeffs[i] ^= v.coeffs[i];
    return r;
}

GroupAlgebraElement ga_mul(const GroupAlgebraElement& u, const GroupAlgebraElement& v) {
    require(u.field == v.field && u.l == v.l, "group algebra mismatch");
    GroupAlgebraElement r(u.field, u.l);
    for (int i = 0; i < u.l; ++i) {
        if (!u.coeffs[i]) continue;
        for (int j = 0; j < u.l; ++j) {
            if (!v.coeffs[j]) continue;
            int k = i + j;
            if (k >= u.l) k -= u.l;
            r.coeffs[k] ^= u.field.mul(u.coeffs[i], v.coeffs[j]);
        }
    }
    return r;
}

GroupAlgebraElement ga_shift(const GroupAlgebraElement& u, int k) {
    GroupAlgebraElement r(u.field, u.l);
    k = ((k % u.l) + u.l) % u.l;
    for (int i = 0; i < u.l; ++i) r.coeffs[(i + k) % u.l] = u.coeffs[i];
    return r;
}

std::vector<std::vector<felem>> circulant(const GroupAlgebraElement& u) {
    std::vector<std::vector<felem>> cols(u.l);
    for (int j = 0; j < u.l; ++j) cols[j] = ga_shift(u, j).coeffs;
    return cols;
}

std::vector<FqPoly> factor_cyclic(int l, const Field& field) {
    require(l >= 1 && l % 2 == 1, "lift order must be odd (even orders break the induction lemmas)");
    require(l <= 10000, "cyclic factorization supported for l <= 10^4");
    return factor(FqPoly::xn_plus(field, l, 1), /*seed=*/0x5eedull + (unsigned)l);
}

IdealAnalysis ideal_analyze(const std::vector<GroupAlgebraElement>& generators,
                            const Field& field, int l) {
    IdealAnalysis out;
    FqPoly xl1 = FqPoly::xn_plus(field, l, 1);
    FqPoly g = xl1;
    bool any = false;
    for (const auto& v : generators) {
        require(v.field == field && v.l == l, "generator field/length mismatch");
        if (v.is_zero()) continue;
        any = true;
        g = gcd(g, v.to_poly());
    }
    if (!any) {
        out.dimension = 0;
        out.generator_gcd = xl1;
        out.containing_maximal_ideals = factor_cyclic(l, field);
        return out;
    }
    out.generator_gcd = g;
    out.dimension = l - g.deg();
    out.is_whole_algebra = (out.dimension == l);
    for (const auto& f : factor_cyclic(l, field))
        if (mod(g, f).is_zero()) out.containing_maximal_ideals.push_back(f);
    return out;
}

StandardBasisSolution standard_basis_solve(const std::vector<GroupAlgebraElement>& generators,
                                           int target_index) {
    require(!generators.empty(), "no generators");
    const Field field = generators[0].field;
    const int l = generators[0].l;
    IdealAnalysis ia = ideal_analyze(generators, field, l);
    if (!ia.is_whole_algebra) {
        std::string ideal = ia.containing_maximal_ideals.empty()
                                ? std::string("<unknown>")
                                : ia.containing_maximal_ideals.front().to_string();
        throw error("generators span a proper ideal of F_q[C_l]; contained in the maximal ideal <" +
                    ideal + ">");
    }
    // Stack circulants: [Circ(v_1) | Circ(v_2) | ...] f = e_j, leftmost-pivot RREF.
    const int k = (int)generators.size();
    Matrix A(field, l, l * k);
    for (int g = 0; g < k; ++g) {
        auto cols = circulant(generators[g]);
        for (int j = 0; j < l; ++j)
            for (int i = 0; i < l; ++i)
                if (cols[j][i]) A.set(i, g * l + j, cols[j][i]);
    }
    Vec e(field, l);
    e[((target_index % l) + l) % l] = 1;
    MembershipResult m = image_membership(A, e, Side::Right);
    require(m.member, "standard basis solve failed unexpectedly");
    StandardBasisSolution sol;
    for (int g = 0; g < k; ++g) {
        GroupAlgebraElement f(field, l);
        for (int j = 0; j < l; ++j) f.coeffs[j] = m.coefficients[g * l + j];
        sol.coefficients.push_back(std::move(f));
    }
    // Postcondition: re-multiplication reproduces x^j bit-exactly.
    GroupAlgebraElement check(field, l);
    for (int g = 0; g < k; ++g) check = ga_add(check, ga_mul(sol.coefficients[g], generators[g]));
    require(check == GroupAlgebraElement::monomial(field, l, target_index),
            "standard basis solution failed verification");
    return sol;
}

} // namespace homcup
