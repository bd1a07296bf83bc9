#pragma once

#include "homcup/cochain.hpp"

namespace homcup {

/// Honest distance reporting: a certified floor (no logical below it) plus an
/// explicit witness weight when one is known; exact only when they meet.
struct DistanceBound {
    int certified_floor = 1;      // every logical has weight >= this
    std::optional<int> witness;   // weight of an explicit logical, if found
    bool exact() const { return witness && *witness == certified_floor; }
    std::string status() const;
    nlohmann::json to_json() const;
};

struct CssCode {
    Field field;
    Matrix Hx, Hz; // H_Z = delta^p, H_X = (delta^{p-1})^T
    long long N = 0, k = 0;
    DistanceBound dx, dz;

    void validate() const; // Hx Hz^T = 0 and the rank formula for k
    nlohmann::json to_json() const;
};

/// Extract the CSS code at level p: qudits on X(p), H_Z = delta^p,
/// H_X = (delta^{p-1})^T; k from exact ranks. Distances stay unset here.
CssCode css_extract(const CubicalComplex& X, const CoefficientSystem& F, int p);
CssCode css_from_deltas(const Matrix& delta_pm1, const Matrix& delta_p);

/// The 3D hypergraph product blocks of three classical maps H_i (N_i x M_i).
struct Hgp3 {
    Matrix d0, d1, d2;
    long long N() const { return d1.cols; }
};
Hgp3 hgp3_coboundaries(const Matrix& H1, const Matrix& H2, const Matrix& H3);
/// k_1 k_2 k_3^T + k_1 k_2^T k_3 + k_1^T k_2 k_3 from the classical ranks.
long long hgp3_k_formula(const Matrix& H1, const Matrix& H2, const Matrix& H3);

enum class CssSide { X, Z };

struct DistanceSearchBudget {
    enum class Mode { ExactUpto, ExhaustiveSmall, Heuristic } mode = Mode::Heuristic;
    int w = 0;                 // ExactUpto: certify no logical of weight <= w
    std::uint64_t seed = 0;    // Heuristic
    int iters = 1000;          // Heuristic
};

/// Update one side's distance bound. ExactUpto enumerates all supports of
/// weight <= w (prime field fast path); it also finds witnesses if any logical
/// lives that low. ExhaustiveSmall enumerates the whole kernel (dim <= 20).
/// Heuristic samples kernel cosets and keeps the lightest logical seen.
DistanceBound distance_search(const CssCode& code, CssSide side, const DistanceSearchBudget& b);

} // namespace homcup
