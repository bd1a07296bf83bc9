#pragma once

#include <vector>

#include "homcup/field.hpp"

namespace homcup {

/// Dense polynomial over F_{2^s}; coeffs[i] is the coefficient of x^i.
/// Normalized so the leading coefficient is nonzero (zero poly = empty).
struct FqPoly {
    Field field;
    std::vector<felem> coeffs;

    FqPoly() = default;
    explicit FqPoly(const Field& f) : field(f) {}
    FqPoly(const Field& f, std::vector<felem> c) : field(f), coeffs(std::move(c)) { trim(); }

    static FqPoly zero(const Field& f) { return FqPoly(f); }
    static FqPoly one(const Field& f) { return FqPoly(f, {1}); }
    static FqPoly x(const Field& f) { return FqPoly(f, {0, 1}); }
    /// x^n + c (handy for x^l - 1 = x^l + 1 in characteristic 2).
    static FqPoly xn_plus(const Field& f, int n, felem c);

    int deg() const { return (int)coeffs.size() - 1; }
    bool is_zero() const { return coeffs.empty(); }
    felem at(int i) const { return (i >= 0 && i < (int)coeffs.size()) ? coeffs[i] : 0; }
    felem lead() const { return coeffs.empty() ? 0 : coeffs.back(); }
    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    bool operator==(const FqPoly& o) const { return field == o.field && coeffs == o.coeffs; }
    bool operator<(const FqPoly& o) const; // degree, then lexicographic on coefficients

    FqPoly monic() const;
    std::string to_string() const; // "1 + x + x^3" style
};

FqPoly add(const FqPoly& a, const FqPoly& b);
FqPoly mul(const FqPoly& a, const FqPoly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
FqPoly mod(const FqPoly& a, const FqPoly& b);
FqPoly gcd(FqPoly a, FqPoly b); // monic
FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m);
FqPoly powmod(const FqPoly& a, std::uint64_t e, const FqPoly& m);
bool irreducible(const FqPoly& p, Rng& rng);

/// Complete factorization into monic irreducibles (with multiplicities,
/// although all inputs used here are squarefree). Distinct-degree splitting
/// followed by trace-based equal-degree splitting (characteristic 2).
std::vector<FqPoly> factor(const FqPoly& p, std::uint64_t seed = 7);

} // namespace homcup
