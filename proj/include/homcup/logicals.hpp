#pragma once

#include "homcup/cochain.hpp"
#include "homcup/css.hpp"

namespace homcup {

/// A certified logical representative: a cocycle together with a cycle
/// witness pairing nontrivially against it (so it cannot be a coboundary;
/// <delta y, xi> = <y, boundary xi> = 0 for every cycle xi).
struct LogicalRep {
    Cochain x;
    Chain witness;
    felem pairing_value = 0;
};

struct LogicalBasis {
    enum class Kind { CanonicalHgp, AllOnesLift, Polarized, Standardized };
    Kind kind = Kind::CanonicalHgp;
    int direction = 0; // the group / polarization direction
    std::vector<LogicalRep> reps;
    nlohmann::json provenance() const;
    nlohmann::json prov_extra; // anchor / probe / solver metadata

    /// Re-certify: every x a cocycle, every witness a cycle, pairing matrix
    /// against the witnesses distinguishes all representatives pairwise.
    void verify() const;
};

/// Canonical X logical representatives of the l = 1 (hypergraph product)
/// complex in the given direction: one per free variable of the direction
/// check matrix, of the form (free edge) (x) zeta (x) ... with zeta constant
/// equal to z_j on every vertex. Trivial sheaf: z vacuous (all-ones scalar).
/// For sheaves, z_j must satisfy the normalization h_j^T(a_j,-) z_j = 1 for
/// the targeted labels; infeasible targets raise an error listing admissible
/// labels.
LogicalBasis hgp_canonical_logicals(const CubicalComplex& X,
                                    std::shared_ptr<const CoefficientSystem> F, int direction,
                                    const std::vector<Vec>& z_choices = {});

/// A local vector z with h_j^T(a,-) z = 1 for the targeted label; throws with
/// the list of admissible labels when the selected column is zero.
Vec solve_z_normalization(const Sheaf& S, int j, int target_label);

/// The direction-d check matrix of the complex (rows: direction-d 1-cubes in
/// canonical order; columns: (vertex, check) of the doubled lifted graph).
/// With the trivial sheaf this is the graph coboundary of the doubled lift.
Matrix direction_check_matrix(const CubicalComplex& X, const Sheaf& F, int direction);
/// The 1-cube of the complex matching row r of direction_check_matrix.
Cube direction_edge_cube(const CubicalComplex& X, int direction, int row);

struct Probe {
    std::array<int, kMaxT> v{};      // base vertices per direction
    int direction = 0;               // polarization direction
    int label = 0;                   // a at the polarized direction
    std::array<int, kMaxT> labels{}; // evaluation labels a_j for j != direction
    nlohmann::json to_json(int t) const;
};

/// Polarized logical representatives on an l-lift (l >= 3 prime): a basis of
/// the kernel of the anchor block of the restricted coboundary operator,
/// embedded on the fibers of the anchor edge, each certified cocycle and
/// non-coboundary via Tanner-codeword cycle witnesses. Also reports whether
/// the group-algebra tensor products of the per-direction kernels span the
/// computed kernel, and the Lemma lower bound on its dimension.
struct PolarizedResult {
    LogicalBasis basis;
    long long kernel_dim = 0;
    double lemma_lower_bound = 0; // rank-count bound; may be <= 0 at desk scale
    bool tensor_span_confirmed = false;
};
PolarizedResult polarized_logicals(const CubicalComplex& X, std::shared_ptr<const Sheaf> F,
                                   const Probe& anchor);

/// Induced vectors: restriction of each representative to the fibers of the
/// probe's base 1-cube, evaluated through the dual local-code rows
/// h_2^T(a_2,-) (x) h_3^T(a_3,-), bit-0 convention.
std::vector<GroupAlgebraElement> induced_vectors(const LogicalBasis& basis, const Probe& probe);

/// Standardize: exactly l representatives L^j whose induced vectors are the
/// standard basis x^j, built via standard_basis_solve and the cyclic fiber
/// action. Throws (naming the containing maximal ideal) if the induced
/// vectors only span a proper ideal.
LogicalBasis standardize_logicals(const LogicalBasis& basis, const Probe& probe);

/// Enumerate probes in canonical order until the whole-algebra condition
/// holds; all tried probes are logged in the result's provenance.
struct ProbeSearchResult {
    bool success = false;
    Probe probe;
    LogicalBasis basis;
    std::vector<nlohmann::json> tried;
    std::string obstruction; // maximal ideal description on failure
};
ProbeSearchResult standardize_with_probe_search(const LogicalBasis& basis);

} // namespace homcup
