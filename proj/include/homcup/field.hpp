#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "homcup/common.hpp"
#include "homcup/json_fwd.hpp"

namespace homcup {

/// Element of F_{2^s}, stored as the bit vector of a polynomial residue.
using felem = std::uint16_t;

/// Arithmetic engine for F_{2^s}, 1 <= s <= 16. Characteristic 2 throughout.
///
/// Elements are s-bit integers (bit i = coefficient of x^i). Multiplication is
/// table-based (log/antilog) for s <= 8 and carry-less reduction for larger s.
/// Value-semantic and cheap to copy; tables are shared.
class Field {
  public:
    Field() : Field(1) {}
    /// Smallest irreducible modulus of degree s is chosen.
    explicit Field(int s);
    /// Explicit modulus, given as bits of a degree-s polynomial (bit s set).
    /// Rejects reducible moduli, naming a nontrivial factor.
    Field(int s, std::uint32_t modulus_bits);

    int degree() const { return s_; }
    std::uint32_t order() const { return 1u << s_; }
    std::uint32_t modulus_bits() const { return mod_; }

    felem zero() const { return 0; }
    felem one() const { return 1; }
    felem add(felem a, felem b) const { return a ^ b; }
    felem sub(felem a, felem b) const { return a ^ b; }
    felem mul(felem a, felem b) const;
    felem inv(felem a) const; // throws on a == 0
    felem div(felem a, felem b) const { return mul(a, inv(b)); }
    felem pow(felem a, std::uint64_t e) const;

    /// tr(a) = a + a^2 + a^4 + ... + a^(2^(s-1)); lands in {0, 1}.
    felem trace(felem a) const;

    /// A generator of the multiplicative group (the element behind the log table).
    felem generator() const;

    bool operator==(const Field& o) const { return s_ == o.s_ && mod_ == o.mod_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    nlohmann::json to_json() const;
    static Field from_json(const nlohmann::json& j);

    /// Lexicographically smallest irreducible polynomial of degree s over F_2.
    static std::uint32_t smallest_irreducible(int s);

  private:
    int s_ = 1;
    std::uint32_t mod_ = 0b10; // x for the prime field
    struct Tables {
        std::vector<felem> exp, log; // s <= 8 only
    };
    std::shared_ptr<const Tables> tab_;

    felem mul_clmul(felem a, felem b) const;
    void build_tables();
};

/// Arithmetic on bit-packed polynomials over F_2 (bit i = coeff of x^i).
namespace poly2 {
int deg(std::uint64_t p);
std::uint64_t mod(std::uint64_t a, std::uint64_t m);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
bool irreducible(std::uint64_t p);
/// Some nontrivial factor of a reducible p (smallest degree, then value).
std::uint64_t some_factor(std::uint64_t p);
} // namespace poly2

/// Scalar wrapper pairing a value with its field; the convenience layer used
/// by the bindings and the CLI. Mixed-field operations are rejected.
struct FieldElement {
    Field field;
    felem value = 0;

    FieldElement() = default;
    FieldElement(const Field& f, felem v) : field(f), value(v) {
        require(v < f.order(), "field element out of range");
    }

    FieldElement operator+(const FieldElement& o) const {
        check(o);
        return {field, field.add(value, o.value)};
    }
    FieldElement operator*(const FieldElement& o) const {
        check(o);
        return {field, field.mul(value, o.value)};
    }
    FieldElement inverse() const { return {field, field.inv(value)}; }
    FieldElement pow(std::uint64_t e) const { return {field, field.pow(value, e)}; }
    FieldElement trace() const { return {field, field.trace(value)}; }
    bool operator==(const FieldElement& o) const { return field == o.field && value == o.value; }

  private:
    void check(const FieldElement& o) const {
        require(field == o.field, "field config mismatch between operands");
    }
};

} // namespace homcup
