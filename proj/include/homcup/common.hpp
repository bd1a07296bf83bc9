#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace homcup {

/// Error type thrown by every precondition / contract violation in the library.
class error : public std::runtime_error {
  public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw error(msg);
}

/// FNV-1a over a byte string; used for content hashes embedded in reports.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v);

/// Counter-based PRNG (splitmix64). Deterministic across platforms; every
/// randomized routine takes an explicit seed and derives its stream from it.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    Rng fork(std::uint64_t stream) const { return Rng(state_ ^ (stream * 0x9fb21c651e98df25ull)); }

  private:
    std::uint64_t state_;
};

std::string library_version();

} // namespace homcup
