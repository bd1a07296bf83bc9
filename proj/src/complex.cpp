#include "homcup/complex.hpp"

#include <algorithm>
#include <json.hpp>

namespace homcup {

std::vector<std::uint8_t> action_masks(int t, int p) {
    // All masks with popcount p, ordered lexicographically on the sorted
    // direction lists (e.g. {0,3} before {1,2}).
    std::vector<std::vector<int>> sets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if ((int)cur.size() == p) {
            sets.push_back(cur);
            return;
        }
        for (int j = start; j < t; ++j) {
            cur.push_back(j);
            self(self, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::vector<std::uint8_t> masks;
    for (auto& s : sets) {
        std::uint8_t m = 0;
        for (int j : s) m |= (std::uint8_t)(1 << j);
        masks.push_back(m);
    }
    return masks;
}

CubicalComplex CubicalComplex::build(const BaseGraph& base, int t, int l, const Voltage& voltage) {
    require(1 <= t && t <= kMaxT, "dimension t must be in 1..4");
    require(l >= 1, "lift order must be >= 1");
    require(l == 1 || l % 2 == 1,
            "lift group must have odd order (the group H must be abelian and odd for the "
            "induction lemmas; even lifts reproduce the [[4,1,2]] counterexample)");
    base.validate();
    require(voltage.l == l && (int)voltage.per_edge.size() == base.num_edges(),
            "voltage does not match base graph and lift order");
    CubicalComplex X;
    X.base_ = base;
    X.t_ = t;
    X.l_ = l;
    X.voltage_ = voltage;
    X.cells_.resize(t + 1);
    X.index_.resize(t + 1);

    // Construction check at desk scale: enumerate and verify the closed
    // cell-count formula together with cube distinctness.
    long long total = 0;
    for (int p = 0; p <= t; ++p) total += X.cell_count(p);
    if (total <= 200000) {
        for (int p = 0; p <= t; ++p) {
            X.enumerate_level(p);
            require((long long)X.cells_[p].size() == X.cell_count(p),
                    "cell enumeration disagrees with the closed formula");
        }
    }
    return X;
}

CubicalComplex CubicalComplex::build(const BaseGraph& base, int t, int l,
                                     std::uint64_t voltage_seed) {
    Voltage v = (l == 1) ? Voltage::trivial(base, 1) : Voltage::random(base, l, voltage_seed);
    return build(base, t, l, v);
}

long long CubicalComplex::group_size() const {
    long long g = l_;
    for (int j = 0; j < t_; ++j) g *= base_.num_vertices;
    return g;
}

long long CubicalComplex::cell_count(int p) const {
    require(0 <= p && p <= t_, "level out of range");
    long long binom = 1;
    for (int i = 0; i < p; ++i) binom = binom * (t_ - i) / (i + 1);
    long long npow = 1;
    for (int i = 0; i < p; ++i) npow *= base_.degree;
    return binom * (1ll << (t_ - p)) * npow * group_size();
}

int CubicalComplex::volt(int v, int mu) const {
    int e = base_.edge_of(v, mu);
    int g = voltage_.per_edge[e] % l_;
    if (base_.edges[e].u != v) g = -g;
    return ((g % l_) + l_) % l_;
}

std::pair<int, int> CubicalComplex::act(int h, int v, int mu) const {
    return {(h + volt(v, mu)) % l_, base_.step(v, mu)};
}

bool CubicalComplex::contains(const Cube& c) const {
    if (c.h < 0 || c.h >= l_) return false;
    for (int j = 0; j < t_; ++j) {
        if (c.v[j] >= base_.num_vertices) return false;
        if (c.is_action(j)) {
            if (c.s[j] >= base_.degree) return false;
        } else if (c.s[j] > 1) {
            return false;
        }
    }
    for (int j = t_; j < kMaxT; ++j)
        if (c.v[j] != 0 || c.s[j] != 0 || c.is_action(j)) return false;
    return true;
}

std::vector<Cube> CubicalComplex::faces(const Cube& c) const {
    std::vector<Cube> out;
    for (int j = 0; j < t_; ++j) {
        if (!c.is_action(j)) continue;
        int mu = c.s[j];
        Cube f0 = c; // bit-0 face keeps the corner
        f0.action_mask &= ~(std::uint8_t)(1 << j);
        f0.s[j] = 0;
        out.push_back(f0);
        Cube f1 = c; // bit-1 face advances the corner through the action
        f1.action_mask &= ~(std::uint8_t)(1 << j);
        f1.s[j] = 1;
        auto [h2, v2] = act(c.h, c.v[j], mu);
        f1.h = h2;
        f1.v[j] = (std::uint8_t)v2;
        out.push_back(f1);
    }
    return out;
}

std::vector<Cube> CubicalComplex::cofaces(const Cube& c) const {
    std::vector<Cube> out;
    for (int j = 0; j < t_; ++j) {
        if (c.is_action(j)) continue;
        if (c.s[j] == 0) {
            // tau with the same corner and any label at direction j
            for (int mu = 0; mu < base_.degree; ++mu) {
                Cube tau = c;
                tau.action_mask |= (std::uint8_t)(1 << j);
                tau.s[j] = (std::uint8_t)mu;
                out.push_back(tau);
            }
        } else {
            // tau whose bit-1 face at direction j is c: walk backwards along
            // every edge arriving at v[j].
            for (int nu = 0; nu < base_.degree; ++nu) {
                int u = base_.step(c.v[j], nu);
                int mu = base_.step_label(c.v[j], nu); // label of the same edge at u
                int h = (c.h - volt(u, mu) % l_ + l_) % l_;
                Cube tau = c;
                tau.action_mask |= (std::uint8_t)(1 << j);
                tau.s[j] = (std::uint8_t)mu;
                tau.v[j] = (std::uint8_t)u;
                tau.h = h;
                out.push_back(tau);
            }
        }
    }
    return out;
}

void CubicalComplex::enumerate_level(int p) const {
    if (!cells_[p].empty() || cell_count(p) == 0) return;
    std::vector<Cube>& out = cells_[p];
    out.reserve(cell_count(p));
    for (std::uint8_t mask : action_masks(t_, p)) {
        std::vector<int> in_s, out_s;
        for (int j = 0; j < t_; ++j) ((mask >> j) & 1 ? in_s : out_s).push_back(j);
        // order: labels (ascending direction), bits, h, vertices
        std::vector<int> labels(p, 0), bits(t_ - p, 0), verts(t_, 0);
        auto emit = [&]() {
            Cube c;
            c.action_mask = mask;
            c.h = 0;
            for (int i = 0; i < p; ++i) c.s[in_s[i]] = (std::uint8_t)labels[i];
            for (int i = 0; i < t_ - p; ++i) c.s[out_s[i]] = (std::uint8_t)bits[i];
            for (int h = 0; h < l_; ++h) {
                c.h = h;
                // vertices vary fastest, in lexicographic order v_1..v_t
                std::vector<int> vv(t_, 0);
                for (;;) {
                    for (int j = 0; j < t_; ++j) c.v[j] = (std::uint8_t)vv[j];
                    out.push_back(c);
                    int k = t_ - 1;
                    while (k >= 0 && ++vv[k] == base_.num_vertices) vv[k--] = 0;
                    if (k < 0) break;
                }
            }
        };
        // iterate labels x bits in lex order
        auto iter_bits = [&](auto&& self, int i) -> void {
            if (i == t_ - p) {
                emit();
                return;
            }
            for (bits[i] = 0; bits[i] < 2; ++bits[i]) self(self, i + 1);
            bits[i] = 0;
        };
        auto iter_labels = [&](auto&& self, int i) -> void {
            if (i == p) {
                iter_bits(iter_bits, 0);
                return;
            }
            for (labels[i] = 0; labels[i] < base_.degree; ++labels[i]) self(self, i + 1);
            labels[i] = 0;
        };
        iter_labels(iter_labels, 0);
    }
    require((long long)out.size() == cell_count(p),
            "cell enumeration disagrees with the closed formula");
    auto& idx = index_[p];
    idx.reserve(out.size() * 2);
    for (int i = 0; i < (int)out.size(); ++i) {
        bool fresh = idx.emplace(out[i].key(), i).second;
        require(fresh, "duplicate cube in enumeration");
    }
}

const std::vector<Cube>& CubicalComplex::cells(int p) const {
    require(0 <= p && p <= t_, "level out of range");
    enumerate_level(p);
    return cells_[p];
}

int CubicalComplex::cell_index(int p, const Cube& c) const {
    enumerate_level(p);
    auto it = index_[p].find(c.key());
    require(it != index_[p].end(), "cube not in complex");
    return it->second;
}

nlohmann::json CubicalComplex::to_json() const {
    nlohmann::json j{{"t", t_}, {"l", l_}, {"base", base_.to_json()}};
    if (l_ > 1) {
        j["voltage"] = voltage_.per_edge;
        if (voltage_.seed) j["seed"] = *voltage_.seed;
    }
    nlohmann::json counts = nlohmann::json::array();
    for (int p = 0; p <= t_; ++p) counts.push_back(cell_count(p));
    j["cell_counts"] = counts;
    return j;
}

} // namespace homcup
