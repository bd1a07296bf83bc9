#pragma once

#include <array>
#include <unordered_map>

#include "homcup/graph.hpp"

namespace homcup {

inline constexpr int kMaxT = 4;

/// A p-cube [g; (a_i)_{i in S}, (b_j)_{j not in S}] of a cubical complex,
/// stored in canonical form: (h, v) is the corner at which every Action
/// direction carries bit 0, so inverse-action spellings never occur.
struct Cube {
    std::int32_t h = 0;                   // lift element (0 when l = 1)
    std::array<std::uint8_t, kMaxT> v{};  // base vertex per direction
    std::uint8_t action_mask = 0;         // bit j set: direction j is an Action slot
    std::array<std::uint8_t, kMaxT> s{};  // label mu (action) or bit 0/1

    int dim() const { return __builtin_popcount(action_mask); }
    bool is_action(int j) const { return (action_mask >> j) & 1; }

    using Key = std::pair<std::uint64_t, std::uint64_t>;
    Key key() const {
        std::uint64_t a = (std::uint64_t)(std::uint32_t)h;
        for (int j = 0; j < kMaxT; ++j) a = (a << 8) | v[j];
        std::uint64_t b = action_mask;
        for (int j = 0; j < kMaxT; ++j) b = (b << 8) | s[j];
        return {a, b};
    }
    bool operator==(const Cube& o) const { return key() == o.key(); }
};

struct CubeKeyHash {
    std::size_t operator()(const Cube::Key& k) const {
        std::uint64_t x = k.first * 0x9e3779b97f4a7c15ull ^ (k.second + 0x7f4a7c159e3779b9ull);
        x ^= x >> 29;
        x *= 0xbf58476d1ce4e5b9ull;
        x ^= x >> 32;
        return (std::size_t)x;
    }
};

/// Cubical complex from the t-fold Cartesian product of (the double cover of)
/// a lifted base graph: vertices H x V(G_0)^t x {0,1}^t, generator actions
/// a_j^mu moving direction j along its mu-labeled edge, multiplying the lift
/// coordinate by the edge voltage and flipping bit j. l = 1 is the designated
/// representation of the pure product X' (the hypergraph product); there is no
/// separate HGP code path.
class CubicalComplex {
  public:
    static CubicalComplex build(const BaseGraph& base, int t, int l, const Voltage& voltage);
    static CubicalComplex build(const BaseGraph& base, int t, int l = 1,
                                std::uint64_t voltage_seed = 0);

    const BaseGraph& base() const { return base_; }
    int t() const { return t_; }
    int l() const { return l_; }
    const Voltage& voltage() const { return voltage_; }

    /// |X(p)| = C(t,p) 2^(t-p) n^p |G|, |G| = l n'^t.
    long long cell_count(int p) const;
    long long group_size() const;

    /// Voltage picked up when moving from v along its mu-labeled edge.
    int volt(int v, int mu) const;
    /// Generator action a_j^mu on the corner (h, v_j): lift and vertex parts.
    std::pair<int, int> act(int h, int v, int mu) const;

    bool contains(const Cube& c) const;

    /// Faces of a p-cube: 2p cubes of dimension p-1 (bit-0 and bit-1 face per
    /// action direction). Canonically ordered by direction, bit last.
    std::vector<Cube> faces(const Cube& c) const;
    /// Cofaces: the exact preimages; n per bit direction.
    std::vector<Cube> cofaces(const Cube& c) const;

    /// Cells of level p in canonical order: lexicographic on (sorted action
    /// set, labels, bits, h, vertices). Enumerated lazily and cached.
    const std::vector<Cube>& cells(int p) const;
    int cell_index(int p, const Cube& c) const;

    nlohmann::json to_json() const;

  private:
    BaseGraph base_;
    int t_ = 1;
    int l_ = 1;
    Voltage voltage_;
    mutable std::vector<std::vector<Cube>> cells_;
    mutable std::vector<std::unordered_map<Cube::Key, int, CubeKeyHash>> index_;

    void enumerate_level(int p) const;
};

/// Subsets of [t] of size p in the canonical order (lex on the sorted list).
std::vector<std::uint8_t> action_masks(int t, int p);

} // namespace homcup
