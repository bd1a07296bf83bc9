#include "homcup/field.hpp"

#include <json.hpp>

namespace homcup {

std::string hex64(std::uint64_t v) {
    static const char* d = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = d[v & 0xf];
        v >>= 4;
    }
    return out;
}

std::string library_version() { return "homcup 0.1.0"; }

namespace poly2 {

int deg(std::uint64_t p) {
    if (p == 0) return -1;
    return 63 - __builtin_clzll(p);
}

std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
    int dm = deg(m);
    require(dm >= 0, "zero modulus polynomial");
    for (int da = deg(a); da >= dm; da = deg(a)) a ^= m << (da - dm);
    return a;
}

static std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return mod(clmul(a, b), m);
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a = mod(a, b);
        std::swap(a, b);
    }
    return a;
}

bool irreducible(std::uint64_t p) {
    int d = deg(p);
    if (d <= 0) return false;
    if (d == 1) return true;
    if ((p & 1) == 0) return false; // divisible by x
    // Trial division by every polynomial of degree 1..d/2.
    for (int k = 1; 2 * k <= d; ++k)
        for (std::uint64_t q = (1ull << k); q < (2ull << k); ++q)
            if (mod(p, q) == 0) return false;
    return true;
}

std::uint64_t some_factor(std::uint64_t p) {
    int d = deg(p);
    for (int k = 1; 2 * k <= d; ++k)
        for (std::uint64_t q = (1ull << k); q < (2ull << k); ++q)
            if (mod(p, q) == 0) return q;
    return p;
}

} // namespace poly2

std::uint32_t Field::smallest_irreducible(int s) {
    for (std::uint32_t p = (1u << s); p < (2u << s); ++p)
        if (poly2::irreducible(p)) return p;
    throw error("no irreducible polynomial found"); // unreachable for s >= 1
}

Field::Field(int s) : Field(s, smallest_irreducible(s)) {}

Field::Field(int s, std::uint32_t modulus_bits) : s_(s), mod_(modulus_bits) {
    require(1 <= s && s <= 16, "extension degree must be in 1..16");
    require(poly2::deg(mod_) == s, "modulus degree does not match s");
    if (!poly2::irreducible(mod_)) {
        std::uint64_t f = poly2::some_factor(mod_);
        throw error("modulus is reducible; divisible by the degree-" +
                    std::to_string(poly2::deg(f)) + " polynomial with bits 0x" + hex64(f));
    }
    if (s_ <= 8) build_tables();
}

void Field::build_tables() {
    auto t = std::make_shared<Tables>();
    const std::uint32_t q = order();
    t->exp.assign(2 * q, 0);
    t->log.assign(q, 0);
    // Find a multiplicative generator, then tabulate.
    for (felem g = 2; g < q; ++g) {
        felem v = 1;
        std::uint32_t n = 0;
        bool ok = true;
        do {
            if (n > 0 && v == 1) {
                ok = false;
                break;
            }
            v = (felem)poly2::mulmod(v, g, mod_);
            ++n;
        } while (v != 1);
        if (ok && n == q - 1) {
            v = 1;
            for (std::uint32_t i = 0; i < q - 1; ++i) {
                t->exp[i] = v;
                t->log[v] = (felem)i;
                v = (felem)poly2::mulmod(v, g, mod_);
            }
            for (std::uint32_t i = 0; i < q - 1; ++i) t->exp[q - 1 + i] = t->exp[i];
            tab_ = std::move(t);
            return;
        }
    }
    // q == 2: multiplicative group is trivial.
    t->exp[0] = 1;
    t->log[1] = 0;
    tab_ = std::move(t);
}

felem Field::mul(felem a, felem b) const {
    if (a == 0 || b == 0) return 0;
    if (tab_) return tab_->exp[tab_->log[a] + tab_->log[b]];
    return mul_clmul(a, b);
}

felem Field::mul_clmul(felem a, felem b) const {
    return (felem)poly2::mulmod(a, b, mod_);
}

felem Field::inv(felem a) const {
    require(a != 0, "division by zero in F_{2^s}");
    // a^(q-2) = a^{-1}
    return pow(a, order() - 2);
}

felem Field::pow(felem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    // Exponents act modulo the group order q-1.
    e %= (order() - 1);
    felem r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

felem Field::trace(felem a) const {
    felem acc = 0, v = a;
    for (int i = 0; i < s_; ++i) {
        acc ^= v;
        v = mul(v, v);
    }
    return acc;
}

felem Field::generator() const {
    if (order() == 2) return 1;
    if (tab_) return tab_->exp[1];
    // For s > 8 search directly.
    const std::uint32_t q = order();
    for (felem g = 2; g < q; ++g) {
        felem v = g;
        std::uint32_t n = 1;
        while (v != 1) {
            v = mul(v, g);
            ++n;
        }
        if (n == q - 1) return g;
    }
    return 1;
}

nlohmann::json Field::to_json() const {
    std::vector<int> bits(s_ + 1);
    for (int i = 0; i <= s_; ++i) bits[i] = (mod_ >> i) & 1;
    return nlohmann::json{{"s", s_}, {"modulus_bits", bits}};
}

Field Field::from_json(const nlohmann::json& j) {
    int s = j.at("s").get<int>();
    if (!j.contains("modulus_bits")) return Field(s);
    auto bits = j.at("modulus_bits").get<std::vector<int>>();
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) m |= 1u << i;
    return Field(s, m);
}

} // namespace homcup
