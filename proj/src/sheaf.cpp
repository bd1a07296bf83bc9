#include "homcup/sheaf.hpp"

#include <algorithm>
#include <json.hpp>

namespace homcup {

namespace {

/// Cache key for a morphism: (mask_sigma, mask_tau, labels of tau on the
/// upgraded directions). Fits easily in 64 bits for t <= 4.
std::uint64_t morphism_key(std::uint8_t mask_sigma, const Cube& tau) {
    std::uint64_t k = mask_sigma | ((std::uint64_t)tau.action_mask << 8);
    for (int j = 0; j < kMaxT; ++j)
        k |= (std::uint64_t)(tau.is_action(j) ? tau.s[j] + 1 : 0) << (16 + 6 * j);
    return k;
}

} // namespace

Sheaf::Sheaf(const Field& f, std::vector<Matrix> locals) : field_(f), locals_(std::move(locals)) {
    require(!locals_.empty() && (int)locals_.size() <= kMaxT, "need 1..4 local codes");
    int n = locals_[0].cols;
    for (const auto& h : locals_) {
        require(h.field == field_, "local code field mismatch");
        require(h.cols == n, "local codes must share the column count n");
        require(rank(h) == h.rows, "local parity-check matrices must have full rank");
    }
}

Sheaf Sheaf::trivial(const Field& f, int t, int degree) {
    std::vector<Matrix> locals;
    for (int j = 0; j < t; ++j) locals.push_back(repetition_dual(f, degree));
    return Sheaf(f, std::move(locals));
}

std::shared_ptr<const Sheaf> Sheaf::trivial_ptr(const Field& f, int t, int degree) {
    return std::make_shared<Sheaf>(trivial(f, t, degree));
}

bool Sheaf::is_trivial() const {
    for (const auto& h : locals_)
        if (h.rows != 1) return false;
    return true;
}

int Sheaf::dim(std::uint8_t action_mask) const {
    int d = 1;
    for (int j = 0; j < t(); ++j)
        if (!((action_mask >> j) & 1)) d *= m(j);
    return d;
}

const Matrix& Sheaf::morphism(std::uint8_t mask_sigma, const Cube& tau) const {
    std::uint64_t key = morphism_key(mask_sigma, tau);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    require((mask_sigma & tau.action_mask) == mask_sigma, "sigma is not a face of tau");
    // Tensor over sigma's bit directions (ascending): identity if still a bit
    // in tau, the selected column of h_j (as a row) if upgraded.
    Matrix result = Matrix::identity(field_, 1);
    for (int j = 0; j < t(); ++j) {
        if ((mask_sigma >> j) & 1) continue; // action in sigma already
        if (tau.is_action(j)) {
            Matrix rowj(field_, 1, m(j));
            for (int c = 0; c < m(j); ++c) rowj.set(0, c, locals_[j].at(c, tau.s[j]));
            result = kron(result, rowj);
        } else {
            result = kron(result, Matrix::identity(field_, m(j)));
        }
    }
    return cache_.emplace(key, std::move(result)).first->second;
}

nlohmann::json Sheaf::to_json() const {
    nlohmann::json locals = nlohmann::json::array();
    for (const auto& h : locals_) locals.push_back(h.to_json());
    return {{"kind", "sheaf"}, {"locals", locals}};
}

TensorSheaf::TensorSheaf(std::vector<std::shared_ptr<const Sheaf>> factors)
    : factors_(std::move(factors)) {
    require(!factors_.empty(), "tensor sheaf needs at least one factor");
    for (const auto& f : factors_) {
        require(f->field() == factors_[0]->field(), "tensor factors must share the field");
        require(f->t() == factors_[0]->t(), "tensor factors must share t");
        require(f->n() == factors_[0]->n(), "tensor factors must share the degree n");
    }
}

int TensorSheaf::dim(std::uint8_t action_mask) const {
    int d = 1;
    for (const auto& f : factors_) d *= f->dim(action_mask);
    return d;
}

const Matrix& TensorSheaf::morphism(std::uint8_t mask_sigma, const Cube& tau) const {
    std::uint64_t key = morphism_key(mask_sigma, tau);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Matrix result = Matrix::identity(field(), 1);
    for (const auto& f : factors_) result = kron(result, f->morphism(mask_sigma, tau));
    return cache_.emplace(key, std::move(result)).first->second;
}

nlohmann::json TensorSheaf::to_json() const {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : factors_) fs.push_back(f->to_json());
    return {{"kind", "tensor_sheaf"}, {"factors", fs}};
}

std::vector<long long> level_offsets(const CubicalComplex& X, const CoefficientSystem& F, int p) {
    const auto& cs = X.cells(p);
    std::vector<long long> off(cs.size() + 1, 0);
    for (std::size_t i = 0; i < cs.size(); ++i) off[i + 1] = off[i] + F.dim(cs[i].action_mask);
    return off;
}

long long level_dim(const CubicalComplex& X, const CoefficientSystem& F, int p) {
    long long d = 0;
    for (std::uint8_t mask : action_masks(X.t(), p)) {
        long long cnt = (1ll << (X.t() - p)) * X.group_size();
        for (int i = 0; i < p; ++i) cnt *= X.base().degree;
        d += cnt * F.dim(mask);
    }
    return d;
}

SparseMatrix coboundary_sparse(const CubicalComplex& X, const CoefficientSystem& F, int p) {
    require(0 <= p && p < X.t(), "coboundary level out of range");
    auto off_lo = level_offsets(X, F, p);
    auto off_hi = level_offsets(X, F, p + 1);
    SparseMatrix D(F.field(), (int)off_hi.back(), (int)off_lo.back());
    const auto& lo = X.cells(p);
    for (std::size_t i = 0; i < lo.size(); ++i) {
        const Cube& sigma = lo[i];
        for (const Cube& tau : X.cofaces(sigma)) {
            int r0 = (int)off_hi[X.cell_index(p + 1, tau)];
            const Matrix& M = F.morphism(sigma.action_mask, tau);
            for (auto& [r, c, v] : M.entries()) D.add_entry(r0 + r, (int)off_lo[i] + c, v);
        }
    }
    D.sort_rows();
    return D;
}

Matrix coboundary_matrix(const CubicalComplex& X, const CoefficientSystem& F, int p) {
    return coboundary_sparse(X, F, p).to_dense();
}

SparseMatrix restricted_coboundary(const CubicalComplex& X, const CoefficientSystem& F,
                                   int direction) {
    require(X.t() >= 2, "restricted coboundary needs t >= 2");
    require(0 <= direction && direction < X.t(), "invalid direction");
    // Columns: direction-j 1-cubes; rows: 2-cubes whose action set contains j.
    const auto& ones = X.cells(1);
    const auto& twos = X.cells(2);
    std::vector<int> col_of(ones.size(), -1), row_of(twos.size(), -1);
    long long ncols = 0, nrows = 0;
    for (std::size_t i = 0; i < ones.size(); ++i)
        if (ones[i].is_action(direction)) {
            col_of[i] = (int)ncols;
            ncols += F.dim(ones[i].action_mask);
        }
    for (std::size_t i = 0; i < twos.size(); ++i)
        if (twos[i].is_action(direction)) {
            row_of[i] = (int)nrows;
            nrows += F.dim(twos[i].action_mask);
        }
    SparseMatrix D(F.field(), (int)nrows, (int)ncols);
    for (std::size_t i = 0; i < ones.size(); ++i) {
        if (col_of[i] < 0) continue;
        for (const Cube& tau : X.cofaces(ones[i])) {
            int ti = X.cell_index(2, tau);
            if (row_of[ti] < 0) continue;
            const Matrix& M = F.morphism(ones[i].action_mask, tau);
            for (auto& [r, c, v] : M.entries()) D.add_entry(row_of[ti] + r, col_of[i] + c, v);
        }
    }
    D.sort_rows();
    return D;
}

Matrix tanner_check_matrix(const BaseGraph& g, const Matrix& h) {
    require(h.cols == g.degree, "local code must have n = graph degree columns");
    BaseGraph dc = double_cover(g);
    const int m = h.rows;
    Matrix H(h.field, m * dc.num_vertices, dc.num_edges());
    for (int e = 0; e < dc.num_edges(); ++e) {
        const auto& ed = dc.edges[e];
        // Both endpoints read the same column of h: the label at the bit-0
        // endpoint (the corner at which the corresponding 1-cube is anchored).
        int mu = (ed.u < g.num_vertices) ? ed.label_u : ed.label_v;
        for (int c = 0; c < m; ++c) {
            H.addto(ed.u * m + c, e, h.at(c, mu));
            H.addto(ed.v * m + c, e, h.at(c, mu));
        }
    }
    return H;
}

Matrix tensored_local(const std::vector<Matrix>& hs) {
    require(!hs.empty(), "no local codes");
    int n = hs[0].cols;
    int rows = 1;
    for (const auto& h : hs) {
        require(h.cols == n && h.field == hs[0].field, "tensored locals must share n and field");
        rows *= h.rows;
    }
    Matrix T(hs[0].field, rows, n);
    for (int a = 0; a < n; ++a) {
        std::vector<felem> col{1};
        for (const auto& h : hs) {
            std::vector<felem> next(col.size() * h.rows);
            for (std::size_t i = 0; i < col.size(); ++i)
                for (int r = 0; r < h.rows; ++r)
                    next[i * h.rows + r] = hs[0].field.mul(col[i], h.at(r, a));
            col = std::move(next);
        }
        for (int r = 0; r < rows; ++r) T.set(r, a, col[r]);
    }
    return T;
}

LocalCodeStats local_code_stats(const Matrix& h) {
    require(h.cols <= 12, "weight enumeration supported for n <= 12");
    LocalCodeStats st;
    // Kernel sweep: enumerate all combinations of a kernel basis.
    auto ker = kernel_basis(h, Side::Right);
    const Field& F = h.field;
    int best = h.cols + 1;
    long long total = 1;
    for (std::size_t i = 0; i < ker.size(); ++i) {
        total *= F.order();
        require(total <= 2000000, "kernel too large for exhaustive enumeration");
    }
    std::vector<felem> coeff(ker.size(), 0);
    for (long long it = 1; it < total; ++it) {
        long long x = it;
        for (std::size_t i = 0; i < ker.size(); ++i) {
            coeff[i] = (felem)(x % F.order());
            x /= F.order();
        }
        Vec v(F, h.cols);
        for (std::size_t i = 0; i < ker.size(); ++i) {
            if (!coeff[i]) continue;
            for (int c = 0; c < h.cols; ++c) v[c] ^= F.mul(coeff[i], ker[i][c]);
        }
        if (!v.is_zero()) best = std::min(best, v.weight());
    }
    st.distance = ker.empty() ? 0 : best;
    // Dual sweep over the row space.
    int dbest = h.cols + 1;
    long long dtotal = 1;
    for (int i = 0; i < h.rows; ++i) {
        dtotal *= F.order();
        require(dtotal <= 2000000, "row space too large for exhaustive enumeration");
    }
    std::vector<felem> rc(h.rows, 0);
    for (long long it = 1; it < dtotal; ++it) {
        long long x = it;
        for (int i = 0; i < h.rows; ++i) {
            rc[i] = (felem)(x % F.order());
            x /= F.order();
        }
        Vec v(F, h.cols);
        for (int i = 0; i < h.rows; ++i) {
            if (!rc[i]) continue;
            for (int c = 0; c < h.cols; ++c) v[c] ^= F.mul(rc[i], h.at(i, c));
        }
        if (!v.is_zero()) dbest = std::min(dbest, v.weight());
    }
    st.dual_distance = h.rows == 0 ? 0 : dbest;
    return st;
}

Matrix repetition_dual(const Field& f, int n) {
    Matrix h(f, 1, n);
    for (int c = 0; c < n; ++c) h.set(0, c, 1);
    return h;
}

Matrix rs_vandermonde(const Field& f, const std::vector<felem>& betas, int m) {
    const int n = (int)betas.size();
    require(m >= 1 && m <= n, "Vandermonde rank out of range");
    require((int)f.order() > n - 1, "Reed-Solomon needs q > n - 1");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            require(betas[i] != betas[j], "evaluation points must be distinct");
    Matrix h(f, m, n);
    for (int c = 0; c < n; ++c) {
        felem p = 1;
        for (int r = 0; r < m; ++r) {
            h.set(r, c, p);
            p = f.mul(p, betas[c]);
        }
    }
    return h;
}

Matrix rs_vandermonde(const Field& f, int n, int m) {
    require((std::uint32_t)n <= f.order(), "not enough field elements for n points");
    std::vector<felem> betas(n);
    for (int i = 0; i < n; ++i) betas[i] = (felem)i;
    return rs_vandermonde(f, betas, m);
}

Matrix random_local_code(const Field& f, const RandomCodeRequest& req) {
    Rng rng(req.seed);
    LocalCodeStats best{};
    for (int attempt = 0; attempt < req.max_tries; ++attempt) {
        Matrix h(f, req.m, req.n);
        for (int r = 0; r < req.m; ++r)
            for (int c = 0; c < req.n; ++c) h.set(r, c, (felem)rng.below(f.order()));
        if (rank(h) != req.m) continue;
        LocalCodeStats st = local_code_stats(h);
        if (st.distance >= req.min_dist && st.dual_distance >= req.min_dual_dist) return h;
        if (st.distance + st.dual_distance > best.distance + best.dual_distance) best = st;
    }
    throw error("random code search exhausted " + std::to_string(req.max_tries) +
                " tries; best distances found d=" + std::to_string(best.distance) +
                " d_dual=" + std::to_string(best.dual_distance));
}

} // namespace homcup
