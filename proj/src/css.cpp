#include "homcup/css.hpp"

#include <algorithm>
#include <json.hpp>

namespace homcup {

std::string DistanceBound::status() const {
    if (exact()) return "exact";
    if (witness)
        return "bracketed[" + std::to_string(certified_floor) + "," + std::to_string(*witness) +
               "]";
    return "lower_bounded(" + std::to_string(certified_floor) + ")";
}

nlohmann::json DistanceBound::to_json() const {
    nlohmann::json j{{"certified_floor", certified_floor}, {"status", status()}};
    if (witness) j["witness"] = *witness;
    return j;
}

void CssCode::validate() const {
    require(mul(Hx, Hz.transpose()).is_zero(), "CSS condition H_X H_Z^T = 0 violated");
    require(k == N - rank(Hx) - rank(Hz), "code dimension does not match the rank formula");
}

nlohmann::json CssCode::to_json() const {
    return {{"N", N},
            {"k", k},
            {"rank_Hx", rank(Hx)},
            {"rank_Hz", rank(Hz)},
            {"d_x", dx.to_json()},
            {"d_z", dz.to_json()},
            {"field", field.to_json()}};
}

CssCode css_extract(const CubicalComplex& X, const CoefficientSystem& F, int p) {
    require(1 <= p && p <= X.t() - 1, "qudit level must satisfy 1 <= p <= t-1");
    Matrix d_pm1 = coboundary_matrix(X, F, p - 1);
    Matrix d_p = coboundary_matrix(X, F, p);
    return css_from_deltas(d_pm1, d_p);
}

CssCode css_from_deltas(const Matrix& delta_pm1, const Matrix& delta_p) {
    require(delta_p.cols == delta_pm1.rows, "coboundary shapes do not chain");
    CssCode code;
    code.field = delta_p.field;
    code.Hz = delta_p;
    code.Hx = delta_pm1.transpose();
    code.N = delta_p.cols;
    require(mul(code.Hx, code.Hz.transpose()).is_zero(), "delta delta != 0");
    code.k = code.N - rank(code.Hx) - rank(code.Hz);
    return code;
}

Hgp3 hgp3_coboundaries(const Matrix& H1, const Matrix& H2, const Matrix& H3) {
    const Field& f = H1.field;
    require(H2.field == f && H3.field == f, "factor field mismatch");
    const int N1 = H1.rows, M1 = H1.cols;
    const int N2 = H2.rows, M2 = H2.cols;
    const int N3 = H3.rows, M3 = H3.cols;
    auto I = [&](int n) { return Matrix::identity(f, n); };

    Hgp3 out;
    // delta^0: C^0 = M1 M2 M3 -> (N1 M2 M3) + (M1 N2 M3) + (M1 M2 N3)
    out.d0 = vstack(vstack(kron(kron(H1, I(M2)), I(M3)), kron(kron(I(M1), H2), I(M3))),
                    kron(kron(I(M1), I(M2)), H3));
    // delta^1 row blocks: (M1 N2 N3), (N1 M2 N3), (N1 N2 M3)
    Matrix z1(f, M1 * N2 * N3, N1 * M2 * M3);
    Matrix z2(f, N1 * M2 * N3, M1 * N2 * M3);
    Matrix z3(f, N1 * N2 * M3, M1 * M2 * N3);
    Matrix row1 = hstack(hstack(z1, kron(kron(I(M1), I(N2)), H3)), kron(kron(I(M1), H2), I(N3)));
    Matrix row2 = hstack(hstack(kron(kron(I(N1), I(M2)), H3), z2), kron(kron(H1, I(M2)), I(N3)));
    Matrix row3 = hstack(hstack(kron(kron(I(N1), H2), I(M3)), kron(kron(H1, I(N2)), I(M3))), z3);
    out.d1 = vstack(vstack(row1, row2), row3);
    out.d2 = hstack(hstack(kron(kron(H1, I(N2)), I(N3)), kron(kron(I(N1), H2), I(N3))),
                    kron(kron(I(N1), I(N2)), H3));
    require(mul(out.d1, out.d0).is_zero() && mul(out.d2, out.d1).is_zero(),
            "HGP coboundary condition failed");
    return out;
}

long long hgp3_k_formula(const Matrix& H1, const Matrix& H2, const Matrix& H3) {
    auto kk = [](const Matrix& H) { return (long long)(H.cols - rank(H)); };
    auto kt = [](const Matrix& H) { return (long long)(H.rows - rank(H)); };
    return kk(H1) * kk(H2) * kt(H3) + kk(H1) * kt(H2) * kk(H3) + kt(H1) * kk(H2) * kk(H3);
}

namespace {

/// Support enumeration for the certified floor: every vector of weight <= w in
/// the kernel is checked against the image; any miss is a real logical.
struct ExactUptoScan {
    const Matrix& Hker; // x must satisfy Hker x = 0
    const Matrix& Himg; // x must avoid rowspace(Himg)
    int w;
    const Field& F;
    std::optional<Vec> found;
    RrefResult img_rref; // row rref of Himg for fast membership

    ExactUptoScan(const Matrix& hker, const Matrix& himg, int w_)
        : Hker(hker), Himg(himg), w(w_), F(hker.field) {
        img_rref = rref(Himg, EchelonMode::Row);
    }

    bool in_rowspace(const Vec& x) const {
        // reduce x against the rref rows
        Vec r = x;
        for (std::size_t i = 0; i < img_rref.pivots.size(); ++i) {
            felem c = r[img_rref.pivots[i]];
            if (!c) continue;
            for (int j = 0; j < r.len(); ++j) r[j] ^= F.mul(c, img_rref.echelon.at((int)i, j));
        }
        return r.is_zero();
    }

    void run() {
        std::vector<felem> values;
        for (std::uint32_t v = 1; v < F.order(); ++v) values.push_back((felem)v);
        Vec x(F, Hker.cols);
        Vec synd(F, Hker.rows);
        // Layered by weight so the first hit is the lightest logical.
        for (int target = 1; target <= w && !found; ++target) dfs(0, target, x, synd, values);
    }

    void dfs(int start, int remaining, Vec& x, Vec& synd, const std::vector<felem>& values) {
        if (found) return;
        if (remaining == 0) {
            if (synd.is_zero() && !in_rowspace(x)) found = x;
            return;
        }
        for (int i = start; i + remaining <= x.len(); ++i) {
            for (felem v : values) {
                x[i] = v;
                for (int r = 0; r < Hker.rows; ++r) synd[r] ^= F.mul(Hker.at(r, i), v);
                dfs(i + 1, remaining - 1, x, synd, values);
                for (int r = 0; r < Hker.rows; ++r) synd[r] ^= F.mul(Hker.at(r, i), v);
                x[i] = 0;
                if (found) return;
            }
        }
    }
};

} // namespace

DistanceBound distance_search(const CssCode& code, CssSide side, const DistanceSearchBudget& b) {
    // d_X = min |x| over ker Hz \ rowspace(Hx); d_Z mirrors with roles swapped.
    const Matrix& ker_side = side == CssSide::X ? code.Hz : code.Hx;
    const Matrix& img_side = side == CssSide::X ? code.Hx : code.Hz;
    DistanceBound out;

    if (b.mode == DistanceSearchBudget::Mode::ExactUpto) {
        ExactUptoScan scan(ker_side, img_side, b.w);
        scan.run();
        if (scan.found) {
            out.certified_floor = scan.found->weight();
            out.witness = scan.found->weight();
        } else {
            out.certified_floor = b.w + 1;
        }
        return out;
    }

    if (b.mode == DistanceSearchBudget::Mode::ExhaustiveSmall) {
        auto ker = kernel_basis(ker_side, Side::Right);
        require(ker.size() <= 20, "kernel too large for exhaustive enumeration");
        require(code.field.degree() == 1, "exhaustive_small implemented for the prime field");
        int best = -1;
        Vec x(code.field, ker_side.cols);
        std::uint64_t prev = 0;
        for (std::uint64_t it = 1; it < (1ull << ker.size()); ++it) {
            std::uint64_t gray = it ^ (it >> 1);
            int bit = __builtin_ctzll(gray ^ prev);
            prev = gray;
            for (int i = 0; i < x.len(); ++i) x[i] ^= ker[bit][i];
            if (x.is_zero()) continue;
            int wgt = x.weight();
            if (best >= 0 && wgt >= best) continue;
            if (!image_membership(img_side.transpose(), x, Side::Right).member) best = wgt;
        }
        if (best >= 0) {
            out.certified_floor = best;
            out.witness = best;
        } else {
            out.certified_floor = ker_side.cols + 1; // k = 0: no logicals exist
        }
        return out;
    }

    auto ker = kernel_basis(ker_side, Side::Right);
    Rng rng(b.seed);
    int best = -1;
    for (int it = 0; it < b.iters && !ker.empty(); ++it) {
        Vec x(code.field, ker_side.cols);
        for (auto& kv : ker)
            if (rng.below(2)) x = add(x, kv);
        if (x.is_zero()) continue;
        bool improved = true; // greedy reduction by stabilizer rows
        while (improved) {
            improved = false;
            for (int r = 0; r < img_side.rows; ++r) {
                Vec cand = x;
                for (int c = 0; c < cand.len(); ++c) cand[c] ^= img_side.at(r, c);
                if (cand.weight() < x.weight() && !cand.is_zero()) {
                    x = cand;
                    improved = true;
                }
            }
        }
        if (best >= 0 && x.weight() >= best) continue;
        if (!image_membership(img_side.transpose(), x, Side::Right).member) best = x.weight();
    }
    if (best >= 0) out.witness = best;
    return out;
}

} // namespace homcup
