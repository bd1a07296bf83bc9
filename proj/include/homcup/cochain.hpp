#pragma once

#include "homcup/group_algebra.hpp"
#include "homcup/sheaf.hpp"

namespace homcup {

/// Sparse cochain (or chain; the grading and the applicable operator differ,
/// the storage does not): level p cells mapped to local coefficient vectors.
struct Cochain {
    const CubicalComplex* X = nullptr;
    std::shared_ptr<const CoefficientSystem> F;
    int p = 0;
    std::unordered_map<Cube::Key, std::vector<felem>, CubeKeyHash> vals;
    std::unordered_map<Cube::Key, Cube, CubeKeyHash> cubes; // key -> cube for iteration

    Cochain() = default;
    Cochain(const CubicalComplex& X_, std::shared_ptr<const CoefficientSystem> F_, int p_)
        : X(&X_), F(std::move(F_)), p(p_) {}

    bool is_zero() const { return vals.empty(); }
    std::size_t support_size() const { return vals.size(); }

    /// Accumulate a local vector at a cube (dropping the entry if it cancels).
    void add(const Cube& c, const std::vector<felem>& v);
    void add_unit(const Cube& c, int coord, felem value);
    const std::vector<felem>* at(const Cube& c) const;

    Cochain operator+(const Cochain& o) const;
    Cochain scaled(felem c) const;
    bool operator==(const Cochain& o) const;

    /// Flatten against the canonical cell order of the level (dense).
    Vec to_vec() const;
    static Cochain from_vec(const CubicalComplex& X, std::shared_ptr<const CoefficientSystem> F,
                            int p, const Vec& v);

    nlohmann::json to_json() const;
};

using Chain = Cochain;

/// delta(x)(tau) = sum_{sigma < tau} F_{sigma,tau} x(sigma).
Cochain apply_delta(const Cochain& x);
/// boundary(xi)(sigma) = sum_{tau > sigma} F_{sigma,tau}^T xi(tau).
Chain apply_boundary(const Chain& xi);

/// <x, xi> = sum_sigma <x(sigma), xi(sigma)>.
felem pairing(const Cochain& x, const Chain& xi);

/// Cyclic fiber shift h' . x (lift coordinate translated by k).
Cochain fiber_shift(const Cochain& x, int k);
/// Multiply by a group algebra element: sum_k f_k x^k . x.
Cochain ga_act(const GroupAlgebraElement& f, const Cochain& x);

nlohmann::json cube_to_json(const Cube& c, int t);
Cube cube_from_json(const nlohmann::json& j);

} // namespace homcup
