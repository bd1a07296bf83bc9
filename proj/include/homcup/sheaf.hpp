#pragma once

#include <map>
#include <memory>

#include "homcup/complex.hpp"

namespace homcup {

/// Coefficient system on a cubical complex: a vector space per cell (depending
/// only on the cell's action mask) plus the morphism F_{sigma,tau} for every
/// face relation. Implemented by Sheaf (t local codes) and TensorSheaf.
class CoefficientSystem {
  public:
    virtual ~CoefficientSystem() = default;
    virtual const Field& field() const = 0;
    virtual int t() const = 0;
    /// dim F(sigma) for a cell with the given action mask.
    virtual int dim(std::uint8_t action_mask) const = 0;
    /// F_{sigma,tau} as a dim(tau) x dim(sigma) matrix; sigma is any face of
    /// tau with the given action mask (the morphism from a bit-1 face equals
    /// the one from the bit-0 face, so only tau's labels enter).
    virtual const Matrix& morphism(std::uint8_t mask_sigma, const Cube& tau) const = 0;
    virtual nlohmann::json to_json() const = 0;
};

/// Sheaf generated by t local parity-check matrices h_j (m_j x n, full rank):
/// F(sigma) = tensor over the bit directions j of F_q^{m_j}; an upgraded
/// direction contracts with the row h_j^T(a_j, -). The trivial (scalar)
/// coefficient system is the all-ones 1 x n special case, under which the
/// coboundary operators reduce to plain cell incidence.
class Sheaf : public CoefficientSystem {
  public:
    Sheaf(const Field& f, std::vector<Matrix> locals);
    static Sheaf trivial(const Field& f, int t, int degree);
    static std::shared_ptr<const Sheaf> trivial_ptr(const Field& f, int t, int degree);

    const Field& field() const override { return field_; }
    int t() const override { return (int)locals_.size(); }
    int n() const { return locals_.empty() ? 0 : locals_[0].cols; }
    int m(int j) const { return locals_[j].rows; }
    const Matrix& local(int j) const { return locals_[j]; }
    bool is_trivial() const;

    int dim(std::uint8_t action_mask) const override;
    const Matrix& morphism(std::uint8_t mask_sigma, const Cube& tau) const override;
    nlohmann::json to_json() const override;

  private:
    Field field_;
    std::vector<Matrix> locals_;
    mutable std::map<std::uint64_t, Matrix> cache_;
};

/// Element-wise tensor of sheaves on the same complex: local space at sigma is
/// the tensor of the factor spaces (factor-major layout); morphisms tensor.
class TensorSheaf : public CoefficientSystem {
  public:
    explicit TensorSheaf(std::vector<std::shared_ptr<const Sheaf>> factors);

    const Field& field() const override { return factors_[0]->field(); }
    int t() const override { return factors_[0]->t(); }
    int rho() const { return (int)factors_.size(); }
    const Sheaf& factor(int i) const { return *factors_[i]; }

    int dim(std::uint8_t action_mask) const override;
    const Matrix& morphism(std::uint8_t mask_sigma, const Cube& tau) const override;
    nlohmann::json to_json() const override;

  private:
    std::vector<std::shared_ptr<const Sheaf>> factors_;
    mutable std::map<std::uint64_t, Matrix> cache_;
};

/// The coboundary operator delta^p as a sparse block matrix: rows indexed by
/// (tau in X(p+1)) x F(tau), columns by (sigma in X(p)) x F(sigma), block
/// (tau,sigma) = F_{sigma,tau} for sigma < tau.
SparseMatrix coboundary_sparse(const CubicalComplex& X, const CoefficientSystem& F, int p);
Matrix coboundary_matrix(const CubicalComplex& X, const CoefficientSystem& F, int p);
/// Offsets of each level-p cell's coefficient block in the flattened vector.
std::vector<long long> level_offsets(const CubicalComplex& X, const CoefficientSystem& F, int p);
long long level_dim(const CubicalComplex& X, const CoefficientSystem& F, int p);

/// Sub-block of delta^1 with columns restricted to direction-j 1-cubes and
/// rows to the 2-cube types containing direction j. Kernel elements, embedded
/// at a fixed direction-j edge, extend to elements of ker delta^1 supported on
/// direction-j edges.
SparseMatrix restricted_coboundary(const CubicalComplex& X, const CoefficientSystem& F,
                                   int direction);

/// Classical Tanner check matrix on the double cover of the given labeled
/// graph: rows (vertex, check), columns edges of the double cover; the entry
/// at (w, c) for an edge labeled mu at its tail is h(c, mu), and both endpoint
/// rows of an edge use the same column of h. With h = (1 1 ... 1) this is the
/// graph boundary operator of the double cover.
Matrix tanner_check_matrix(const BaseGraph& g, const Matrix& h);

/// Column-wise (Hadamard/Kronecker) tensor of local codes: column a of the
/// result is the Kronecker product of the columns a of the inputs. The kernel
/// is the local coefficient of the tensor-sheaf boundary operator.
Matrix tensored_local(const std::vector<Matrix>& hs);

struct LocalCodeStats {
    int distance = 0;      // min weight of ker h (0 if the kernel is trivial)
    int dual_distance = 0; // min weight of the row space of h
};
/// Exhaustive weight enumeration; requires n <= 12 and q^(n-m) feasible.
LocalCodeStats local_code_stats(const Matrix& h);

/// Local parity-check library: the dual-of-repetition row, Reed-Solomon
/// Vandermonde matrices, and seeded random codes with distance floors.
Matrix repetition_dual(const Field& f, int n);
Matrix rs_vandermonde(const Field& f, const std::vector<felem>& betas, int m);
/// First n field elements as evaluation points (requires q >= n).
Matrix rs_vandermonde(const Field& f, int n, int m);
struct RandomCodeRequest {
    int m = 1, n = 2;
    int min_dist = 1, min_dual_dist = 1;
    std::uint64_t seed = 0;
    int max_tries = 200;
};
Matrix random_local_code(const Field& f, const RandomCodeRequest& req);

} // namespace homcup
