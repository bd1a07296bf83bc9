#include "homcup/fqpoly.hpp"

#include <algorithm>

namespace homcup {

FqPoly FqPoly::xn_plus(const Field& f, int n, felem c) {
    std::vector<felem> v(n + 1, 0);
    v[0] = c;
    v[n] = 1;
    return FqPoly(f, std::move(v));
}

bool FqPoly::operator<(const FqPoly& o) const {
    if (deg() != o.deg()) return deg() < o.deg();
    for (int i = deg(); i >= 0; --i)
        if (at(i) != o.at(i)) return at(i) < o.at(i);
    return false;
}

FqPoly FqPoly::monic() const {
    if (is_zero() || lead() == 1) return *this;
    FqPoly r(field, coeffs);
    felem inv = field.inv(lead());
    for (auto& c : r.coeffs) c = field.mul(c, inv);
    return r;
}

std::string FqPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = 0; i <= deg(); ++i) {
        felem c = at(i);
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || c != 1) s += std::to_string((int)c);
        if (i > 0) {
            if (c != 1) s += "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

FqPoly add(const FqPoly& a, const FqPoly& b) {
    require(a.field == b.field, "polynomial field mismatch");
    std::vector<felem> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.at((int)i) ^ b.at((int)i);
    return FqPoly(a.field, std::move(c));
}

FqPoly mul(const FqPoly& a, const FqPoly& b) {
    require(a.field == b.field, "polynomial field mismatch");
    if (a.is_zero() || b.is_zero()) return FqPoly::zero(a.field);
    std::vector<felem> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] ^= a.field.mul(a.coeffs[i], b.coeffs[j]);
    }
    return FqPoly(a.field, std::move(c));
}

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
    require(!b.is_zero(), "polynomial division by zero");
    const Field& F = a.field;
    FqPoly r = a;
    std::vector<felem> q(std::max<int>(a.deg() - b.deg() + 1, 0), 0);
    felem linv = F.inv(b.lead());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int shift = r.deg() - b.deg();
        felem coef = F.mul(r.lead(), linv);
        q[shift] = coef;
        for (int i = 0; i <= b.deg(); ++i)
            r.coeffs[i + shift] ^= F.mul(coef, b.at(i));
        r.trim();
    }
    return {FqPoly(F, std::move(q)), r};
}

FqPoly mod(const FqPoly& a, const FqPoly& b) { return divmod(a, b).second; }

FqPoly gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m) { return mod(mul(a, b), m); }

FqPoly powmod(const FqPoly& a, std::uint64_t e, const FqPoly& m) {
    FqPoly r = FqPoly::one(a.field), base = mod(a, m);
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

namespace {

FqPoly random_poly(const Field& F, int max_deg, Rng& rng) {
    std::vector<felem> c(max_deg + 1);
    for (auto& v : c) v = (felem)rng.below(F.order());
    return FqPoly(F, std::move(c));
}

/// Derivative in characteristic 2: odd-degree terms survive.
FqPoly derivative(const FqPoly& p) {
    std::vector<felem> c;
    for (int i = 1; i <= p.deg(); ++i) c.push_back((i % 2) ? p.at(i) : 0);
    return FqPoly(p.field, std::move(c));
}

/// Trace map T(h) = h + h^2 + h^4 + ... + h^(2^(k*s - 1)) mod m, the
/// char-2 splitting polynomial for equal-degree factorization.
FqPoly trace_map(const FqPoly& h, int k, const FqPoly& m) {
    FqPoly acc = mod(h, m), cur = acc;
    std::uint64_t steps = (std::uint64_t)k * (std::uint64_t)m.field.degree();
    for (std::uint64_t i = 1; i < steps; ++i) {
        cur = mulmod(cur, cur, m);
        acc = add(acc, cur);
    }
    return acc;
}

void equal_degree_split(const FqPoly& p, int d, Rng& rng, std::vector<FqPoly>& out) {
    if (p.deg() == d) {
        out.push_back(p.monic());
        return;
    }
    // Cantor–Zassenhaus, characteristic-2 variant via the trace map.
    for (;;) {
        FqPoly h = random_poly(p.field, p.deg() - 1, rng);
        if (h.is_zero()) continue;
        FqPoly t = trace_map(h, d, p);
        FqPoly g = gcd(p, t);
        if (g.deg() > 0 && g.deg() < p.deg()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(divmod(p, g).first.monic(), d, rng, out);
            return;
        }
    }
}

} // namespace

bool irreducible(const FqPoly& p, Rng& rng) {
    auto fs = factor(p, rng.next());
    return fs.size() == 1 && fs[0].deg() == p.deg();
}

std::vector<FqPoly> factor(const FqPoly& p_in, std::uint64_t seed) {
    const Field& F = p_in.field;
    Rng rng(seed);
    std::vector<FqPoly> out;
    FqPoly p = p_in.monic();
    require(p.deg() >= 0, "cannot factor the zero polynomial");
    if (p.deg() == 0) return out;

    // Squarefree part first: p / gcd(p, p'); repeated factors are reinstated
    // by dividing them out and recursing (inputs here are squarefree anyway).
    FqPoly d = derivative(p);
    if (d.is_zero()) {
        // p is a square of a polynomial in x (char 2): p(x) = r(x)^2 with
        // r built from the square roots of the even coefficients.
        std::vector<felem> c;
        for (int i = 0; i <= p.deg(); i += 2)
            c.push_back(F.pow(p.at(i), F.order() / 2)); // sqrt in char 2
        auto sub = factor(FqPoly(F, std::move(c)), rng.next());
        for (auto& f : sub) {
            out.push_back(f);
            out.push_back(f);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    FqPoly g = gcd(p, d);
    if (g.deg() > 0) {
        auto a = factor(divmod(p, g).first, rng.next());
        auto b = factor(g, rng.next());
        out = a;
        out.insert(out.end(), b.begin(), b.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    // Distinct-degree: strip out the product of all irreducible factors of
    // degree k via gcd with x^(q^k) - x.
    FqPoly rest = p;
    FqPoly xq = FqPoly::x(F);
    for (int k = 1; rest.deg() > 0 && k <= rest.deg(); ++k) {
        xq = powmod(xq, F.order(), rest); // x^(q^k) mod rest
        FqPoly gk = gcd(add(xq, FqPoly::x(F)), rest);
        if (gk.deg() > 0) {
            equal_degree_split(gk, k, rng, out);
            rest = divmod(rest, gk).first.monic();
            xq = mod(xq, rest);
        }
        if (2 * (k + 1) > rest.deg() && rest.deg() > 0) {
            out.push_back(rest.monic());
            rest = FqPoly::one(F);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace homcup
