#include "homcup/cochain.hpp"

#include <json.hpp>

#include "homcup/group_algebra.hpp"

namespace homcup {

void Cochain::add(const Cube& c, const std::vector<felem>& v) {
    auto key = c.key();
    auto it = vals.find(key);
    if (it == vals.end()) {
        bool nonzero = false;
        for (felem x : v) nonzero |= (x != 0);
        if (!nonzero) return;
        vals.emplace(key, v);
        cubes.emplace(key, c);
        return;
    }
    bool nonzero = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        it->second[i] ^= v[i];
        nonzero |= (it->second[i] != 0);
    }
    if (!nonzero) {
        vals.erase(key);
        cubes.erase(key);
    }
}

void Cochain::add_unit(const Cube& c, int coord, felem value) {
    std::vector<felem> v(F->dim(c.action_mask), 0);
    v[coord] = value;
    add(c, v);
}

const std::vector<felem>* Cochain::at(const Cube& c) const {
    auto it = vals.find(c.key());
    return it == vals.end() ? nullptr : &it->second;
}

Cochain Cochain::operator+(const Cochain& o) const {
    require(X == o.X && p == o.p, "cochain addition level/complex mismatch");
    Cochain r = *this;
    for (auto& [k, v] : o.vals) r.add(o.cubes.at(k), v);
    return r;
}

Cochain Cochain::scaled(felem c) const {
    Cochain r(*X, F, p);
    if (c == 0) return r;
    const Field& field = F->field();
    for (auto& [k, v] : vals) {
        std::vector<felem> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = field.mul(c, v[i]);
        r.vals.emplace(k, std::move(w));
        r.cubes.emplace(k, cubes.at(k));
    }
    return r;
}

bool Cochain::operator==(const Cochain& o) const {
    if (p != o.p || vals.size() != o.vals.size()) return false;
    for (auto& [k, v] : vals) {
        auto it = o.vals.find(k);
        if (it == o.vals.end() || it->second != v) return false;
    }
    return true;
}

Vec Cochain::to_vec() const {
    auto off = level_offsets(*X, *F, p);
    Vec v(F->field(), (int)off.back());
    for (auto& [k, val] : vals) {
        int ci = X->cell_index(p, cubes.at(k));
        for (std::size_t i = 0; i < val.size(); ++i) v[(int)off[ci] + (int)i] = val[i];
    }
    return v;
}

Cochain Cochain::from_vec(const CubicalComplex& X, std::shared_ptr<const CoefficientSystem> F,
                          int p, const Vec& v) {
    Cochain x(X, F, p);
    auto off = level_offsets(X, *F, p);
    require(v.len() == (int)off.back(), "vector length does not match the level dimension");
    const auto& cs = X.cells(p);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        std::vector<felem> local(v.a.begin() + off[i], v.a.begin() + off[i + 1]);
        x.add(cs[i], local);
    }
    return x;
}

Cochain apply_delta(const Cochain& x) {
    Cochain out(*x.X, x.F, x.p + 1);
    for (auto& [k, v] : x.vals) {
        const Cube& sigma = x.cubes.at(k);
        for (const Cube& tau : x.X->cofaces(sigma)) {
            const Matrix& M = x.F->morphism(sigma.action_mask, tau);
            std::vector<felem> w(M.rows, 0);
            for (int r = 0; r < M.rows; ++r) {
                felem s = 0;
                for (int c = 0; c < M.cols; ++c) s ^= M.field.mul(M.at(r, c), v[c]);
                w[r] = s;
            }
            out.add(tau, w);
        }
    }
    return out;
}

Chain apply_boundary(const Chain& xi) {
    Chain out(*xi.X, xi.F, xi.p - 1);
    for (auto& [k, v] : xi.vals) {
        const Cube& tau = xi.cubes.at(k);
        for (const Cube& sigma : xi.X->faces(tau)) {
            const Matrix& M = xi.F->morphism(sigma.action_mask, tau);
            std::vector<felem> w(M.cols, 0); // transpose application
            for (int c = 0; c < M.cols; ++c) {
                felem s = 0;
                for (int r = 0; r < M.rows; ++r) s ^= M.field.mul(M.at(r, c), v[r]);
                w[c] = s;
            }
            out.add(sigma, w);
        }
    }
    return out;
}

felem pairing(const Cochain& x, const Chain& xi) {
    require(x.p == xi.p, "pairing level mismatch");
    const Field& f = x.F->field();
    felem s = 0;
    const Cochain& small = x.vals.size() <= xi.vals.size() ? x : xi;
    const Cochain& big = x.vals.size() <= xi.vals.size() ? xi : x;
    for (auto& [k, v] : small.vals) {
        auto it = big.vals.find(k);
        if (it == big.vals.end()) continue;
        require(v.size() == it->second.size(), "pairing local dimension mismatch");
        for (std::size_t i = 0; i < v.size(); ++i) s ^= f.mul(v[i], it->second[i]);
    }
    return s;
}

Cochain fiber_shift(const Cochain& x, int k) {
    const int l = x.X->l();
    Cochain out(*x.X, x.F, x.p);
    for (auto& [key, v] : x.vals) {
        Cube c = x.cubes.at(key);
        c.h = (int)(((c.h + k) % l + l) % l);
        out.add(c, v);
    }
    return out;
}

Cochain ga_act(const GroupAlgebraElement& f, const Cochain& x) {
    require(f.l == x.X->l(), "group algebra order does not match the lift");
    Cochain out(*x.X, x.F, x.p);
    for (int k = 0; k < f.l; ++k) {
        if (!f.coeffs[k]) continue;
        out = out + fiber_shift(x, k).scaled(f.coeffs[k]);
    }
    return out;
}

nlohmann::json cube_to_json(const Cube& c, int t) {
    nlohmann::json slots = nlohmann::json::array();
    for (int j = 0; j < t; ++j) {
        if (c.is_action(j))
            slots.push_back({{"a", (int)c.s[j]}});
        else
            slots.push_back({{"b", (int)c.s[j]}});
    }
    std::vector<int> vs;
    for (int j = 0; j < t; ++j) vs.push_back(c.v[j]);
    return {{"h", c.h}, {"v", vs}, {"slots", slots}};
}

Cube cube_from_json(const nlohmann::json& j) {
    Cube c;
    c.h = j.at("h").get<int>();
    auto vs = j.at("v").get<std::vector<int>>();
    for (std::size_t i = 0; i < vs.size(); ++i) c.v[i] = (std::uint8_t)vs[i];
    int t = (int)j.at("slots").size();
    for (int i = 0; i < t; ++i) {
        const auto& s = j.at("slots")[i];
        if (s.contains("a")) {
            c.action_mask |= (std::uint8_t)(1 << i);
            c.s[i] = (std::uint8_t)s.at("a").get<int>();
        } else {
            c.s[i] = (std::uint8_t)s.at("b").get<int>();
        }
    }
    return c;
}

nlohmann::json Cochain::to_json() const {
    nlohmann::json cells = nlohmann::json::array();
    for (auto& [k, v] : vals) {
        std::vector<int> local(v.begin(), v.end());
        cells.push_back({{"cube", cube_to_json(cubes.at(k), X->t())}, {"value", local}});
    }
    return {{"level", p}, {"cells", cells}};
}

} // namespace homcup
