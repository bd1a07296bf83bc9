#include "homcup/matrix.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <sstream>

namespace homcup {

Vec add(const Vec& u, const Vec& v) {
    require(u.field == v.field && u.len() == v.len(), "vector shape/field mismatch");
    Vec r = u;
    for (int i = 0; i < v.len(); ++i) r.a[i] ^= v.a[i];
    return r;
}

felem dot(const Vec& u, const Vec& v) {
    require(u.field == v.field && u.len() == v.len(), "vector shape/field mismatch");
    felem s = 0;
    for (int i = 0; i < u.len(); ++i) s ^= u.field.mul(u.a[i], v.a[i]);
    return s;
}

nlohmann::json Vec::to_json() const {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < len(); ++i)
        if (a[i]) entries.push_back({i, (int)a[i]});
    return {{"len", len()}, {"field", field.to_json()}, {"entries", entries}};
}

Vec Vec::from_json(const nlohmann::json& j) {
    Vec v(Field::from_json(j.at("field")), j.at("len").get<int>());
    for (const auto& e : j.at("entries")) v.a[e[0].get<int>()] = (felem)e[1].get<int>();
    return v;
}

Matrix Matrix::identity(const Field& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_entries(const Field& f, int rows, int cols,
                            const std::vector<std::tuple<int, int, felem>>& entries) {
    Matrix m(f, rows, cols);
    for (auto& [r, c, v] : entries) {
        require(0 <= r && r < rows && 0 <= c && c < cols, "entry index out of range");
        m.set(r, c, v);
    }
    return m;
}

std::vector<std::tuple<int, int, felem>> Matrix::entries() const {
    std::vector<std::tuple<int, int, felem>> out;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (at(r, c)) out.emplace_back(r, c, at(r, c));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(field, cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.set(c, r, at(r, c));
    return t;
}

bool Matrix::is_zero() const {
    for (felem v : a)
        if (v) return false;
    return true;
}

Vec Matrix::row(int r) const {
    Vec v(field, cols);
    for (int c = 0; c < cols; ++c) v[c] = at(r, c);
    return v;
}

Vec Matrix::col(int c) const {
    Vec v(field, rows);
    for (int r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
}

nlohmann::json Matrix::to_json() const {
    nlohmann::json es = nlohmann::json::array();
    for (auto& [r, c, v] : entries()) es.push_back({r, c, (int)v});
    return {{"rows", rows}, {"cols", cols}, {"field", field.to_json()}, {"entries", es}};
}

Matrix Matrix::from_json(const nlohmann::json& j) {
    Matrix m(Field::from_json(j.at("field")), j.at("rows").get<int>(), j.at("cols").get<int>());
    for (const auto& e : j.at("entries"))
        m.set(e[0].get<int>(), e[1].get<int>(), (felem)e[2].get<int>());
    return m;
}

std::string Matrix::to_matrix_market() const {
    auto es = entries();
    std::ostringstream os;
    os << "%%MatrixMarket matrix coordinate integer general\n";
    os << "% field GF(2^" << field.degree() << "), modulus bits 0x" << std::hex
       << field.modulus_bits() << std::dec << "\n";
    os << rows << " " << cols << " " << es.size() << "\n";
    for (auto& [r, c, v] : es) os << r + 1 << " " << c + 1 << " " << (int)v << "\n";
    return os.str();
}

Matrix add(const Matrix& A, const Matrix& B) {
    require(A.field == B.field && A.rows == B.rows && A.cols == B.cols, "matrix shape mismatch");
    Matrix C = A;
    for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] ^= B.a[i];
    return C;
}

Matrix mul(const Matrix& A, const Matrix& B) {
    require(A.field == B.field, "matrix field mismatch");
    require(A.cols == B.rows, "matrix dimension mismatch in product");
    Matrix C(A.field, A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            felem aik = A.at(i, k);
            if (!aik) continue;
            if (aik == 1) {
                for (int j = 0; j < B.cols; ++j) C.a[(std::size_t)i * C.cols + j] ^= B.at(k, j);
            } else {
                for (int j = 0; j < B.cols; ++j)
                    C.a[(std::size_t)i * C.cols + j] ^= A.field.mul(aik, B.at(k, j));
            }
        }
    return C;
}

Vec mul(const Matrix& A, const Vec& v) {
    require(A.cols == v.len(), "matrix-vector dimension mismatch");
    Vec r(A.field, A.rows);
    for (int i = 0; i < A.rows; ++i) {
        felem s = 0;
        for (int k = 0; k < A.cols; ++k) s ^= A.field.mul(A.at(i, k), v[k]);
        r[i] = s;
    }
    return r;
}

Vec mul(const Vec& v, const Matrix& A) {
    require(A.rows == v.len(), "vector-matrix dimension mismatch");
    Vec r(A.field, A.cols);
    for (int k = 0; k < A.rows; ++k) {
        felem vk = v[k];
        if (!vk) continue;
        for (int j = 0; j < A.cols; ++j) r[j] ^= A.field.mul(vk, A.at(k, j));
    }
    return r;
}

Matrix kron(const Matrix& A, const Matrix& B) {
    require(A.field == B.field, "matrix field mismatch");
    Matrix C(A.field, A.rows * B.rows, A.cols * B.cols);
    for (int ia = 0; ia < A.rows; ++ia)
        for (int ja = 0; ja < A.cols; ++ja) {
            felem v = A.at(ia, ja);
            if (!v) continue;
            for (int ib = 0; ib < B.rows; ++ib)
                for (int jb = 0; jb < B.cols; ++jb) {
                    felem w = B.at(ib, jb);
                    if (w) C.set(ia * B.rows + ib, ja * B.cols + jb, A.field.mul(v, w));
                }
        }
    return C;
}

Matrix vstack(const Matrix& A, const Matrix& B) {
    require(A.field == B.field && A.cols == B.cols, "vstack shape mismatch");
    Matrix C(A.field, A.rows + B.rows, A.cols);
    std::copy(A.a.begin(), A.a.end(), C.a.begin());
    std::copy(B.a.begin(), B.a.end(), C.a.begin() + A.a.size());
    return C;
}

Matrix hstack(const Matrix& A, const Matrix& B) {
    require(A.field == B.field && A.rows == B.rows, "hstack shape mismatch");
    Matrix C(A.field, A.rows, A.cols + B.cols);
    for (int r = 0; r < A.rows; ++r) {
        std::copy(A.a.begin() + (std::size_t)r * A.cols, A.a.begin() + (std::size_t)(r + 1) * A.cols,
                  C.a.begin() + (std::size_t)r * C.cols);
        std::copy(B.a.begin() + (std::size_t)r * B.cols, B.a.begin() + (std::size_t)(r + 1) * B.cols,
                  C.a.begin() + (std::size_t)r * C.cols + A.cols);
    }
    return C;
}

namespace {

/// Reduced row echelon with transform, generic path. Pivot rule: scan columns
/// left to right, take the topmost unused row. Operations mirrored into T.
struct EchelonEngine {
    static void run_generic(Matrix& M, Matrix& T, std::vector<int>& pivots) {
        const Field F = M.field;
        int r = 0;
        for (int c = 0; c < M.cols && r < M.rows; ++c) {
            int sel = -1;
            for (int i = r; i < M.rows; ++i)
                if (M.at(i, c)) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            if (sel != r) {
                for (int j = 0; j < M.cols; ++j) std::swap(M.a[(std::size_t)sel * M.cols + j], M.a[(std::size_t)r * M.cols + j]);
                for (int j = 0; j < T.cols; ++j) std::swap(T.a[(std::size_t)sel * T.cols + j], T.a[(std::size_t)r * T.cols + j]);
            }
            felem inv = F.inv(M.at(r, c));
            if (inv != 1) {
                for (int j = 0; j < M.cols; ++j) M.set(r, j, F.mul(M.at(r, j), inv));
                for (int j = 0; j < T.cols; ++j) T.set(r, j, F.mul(T.at(r, j), inv));
            }
            for (int i = 0; i < M.rows; ++i) {
                if (i == r) continue;
                felem f = M.at(i, c);
                if (!f) continue;
                if (f == 1) {
                    for (int j = 0; j < M.cols; ++j) M.a[(std::size_t)i * M.cols + j] ^= M.at(r, j);
                    for (int j = 0; j < T.cols; ++j) T.a[(std::size_t)i * T.cols + j] ^= T.at(r, j);
                } else {
                    for (int j = 0; j < M.cols; ++j) M.a[(std::size_t)i * M.cols + j] ^= F.mul(f, M.at(r, j));
                    for (int j = 0; j < T.cols; ++j) T.a[(std::size_t)i * T.cols + j] ^= F.mul(f, T.at(r, j));
                }
            }
            pivots.push_back(c);
            ++r;
        }
    }

    /// Prime-field path: rows packed 64 entries per word, XOR row updates.
    static void run_f2(Matrix& M, Matrix& T, std::vector<int>& pivots) {
        const int wm = (M.cols + 63) / 64, wt = (T.cols + 63) / 64;
        std::vector<std::uint64_t> bm((std::size_t)M.rows * wm, 0), bt((std::size_t)T.rows * wt, 0);
        for (int i = 0; i < M.rows; ++i) {
            for (int j = 0; j < M.cols; ++j)
                if (M.at(i, j)) bm[(std::size_t)i * wm + j / 64] |= 1ull << (j % 64);
            for (int j = 0; j < T.cols; ++j)
                if (T.at(i, j)) bt[(std::size_t)i * wt + j / 64] |= 1ull << (j % 64);
        }
        int r = 0;
        for (int c = 0; c < M.cols && r < M.rows; ++c) {
            const std::uint64_t mask = 1ull << (c % 64);
            const int w = c / 64;
            int sel = -1;
            for (int i = r; i < M.rows; ++i)
                if (bm[(std::size_t)i * wm + w] & mask) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            if (sel != r) {
                for (int j = 0; j < wm; ++j) std::swap(bm[(std::size_t)sel * wm + j], bm[(std::size_t)r * wm + j]);
                for (int j = 0; j < wt; ++j) std::swap(bt[(std::size_t)sel * wt + j], bt[(std::size_t)r * wt + j]);
            }
            for (int i = 0; i < M.rows; ++i) {
                if (i == r) continue;
                if (bm[(std::size_t)i * wm + w] & mask) {
                    std::uint64_t* mi = &bm[(std::size_t)i * wm];
                    const std::uint64_t* mr = &bm[(std::size_t)r * wm];
                    for (int j = w; j < wm; ++j) mi[j] ^= mr[j];
                    std::uint64_t* ti = &bt[(std::size_t)i * wt];
                    const std::uint64_t* tr = &bt[(std::size_t)r * wt];
                    for (int j = 0; j < wt; ++j) ti[j] ^= tr[j];
                }
            }
            pivots.push_back(c);
            ++r;
        }
        for (int i = 0; i < M.rows; ++i) {
            for (int j = 0; j < M.cols; ++j)
                M.set(i, j, (bm[(std::size_t)i * wm + j / 64] >> (j % 64)) & 1);
            for (int j = 0; j < T.cols; ++j)
                T.set(i, j, (bt[(std::size_t)i * wt + j / 64] >> (j % 64)) & 1);
        }
    }
};

} // namespace

RrefResult rref(const Matrix& M, EchelonMode mode) {
    if (mode == EchelonMode::Column) {
        RrefResult rt = rref(M.transpose(), EchelonMode::Row);
        RrefResult out;
        out.echelon = rt.echelon.transpose();
        out.transform = rt.transform.transpose();
        out.pivots = rt.pivots; // pivot rows of the column echelon form
        return out;
    }
    RrefResult out;
    out.echelon = M;
    out.transform = Matrix::identity(M.field, M.rows);
    if (M.field.degree() == 1)
        EchelonEngine::run_f2(out.echelon, out.transform, out.pivots);
    else
        EchelonEngine::run_generic(out.echelon, out.transform, out.pivots);
    return out;
}

int rank(const Matrix& M) { return (int)rref(M, EchelonMode::Row).pivots.size(); }

std::vector<Vec> kernel_basis(const Matrix& M, Side side) {
    if (side == Side::Left) {
        // Rows of the transform matching zero rows of the echelon form.
        RrefResult r = rref(M, EchelonMode::Row);
        std::vector<Vec> out;
        for (int i = (int)r.pivots.size(); i < M.rows; ++i) out.push_back(r.transform.row(i));
        return out;
    }
    RrefResult r = rref(M, EchelonMode::Row);
    std::vector<bool> is_pivot(M.cols, false);
    std::vector<int> pivot_row(M.cols, -1);
    for (int i = 0; i < (int)r.pivots.size(); ++i) {
        is_pivot[r.pivots[i]] = true;
        pivot_row[r.pivots[i]] = i;
    }
    std::vector<Vec> out;
    for (int c = 0; c < M.cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v(M.field, M.cols);
        v[c] = 1;
        for (int pc = 0; pc < M.cols; ++pc)
            if (is_pivot[pc]) v[pc] = r.echelon.at(pivot_row[pc], c); // char 2: -x = x
        out.push_back(std::move(v));
    }
    return out;
}

MembershipResult image_membership(const Matrix& M, const Vec& v, Side side) {
    if (side == Side::Left) {
        // c M = v  <=>  M^T c^T = v^T; the witness becomes a right-kernel
        // vector w with M w = 0 and v . w != 0.
        return image_membership(M.transpose(), v, Side::Right);
    }
    require(v.len() == M.rows, "membership vector length mismatch");
    RrefResult r = rref(M, EchelonMode::Row);
    Vec u = mul(r.transform, v);
    MembershipResult out;
    for (int i = (int)r.pivots.size(); i < M.rows; ++i) {
        if (u[i]) {
            out.member = false;
            out.witness = r.transform.row(i); // w M = 0, w.v = u[i] != 0
            return out;
        }
    }
    out.member = true;
    out.coefficients = Vec(M.field, M.cols);
    for (int i = 0; i < (int)r.pivots.size(); ++i) out.coefficients[r.pivots[i]] = u[i];
    return out;
}

FreeVariables free_variables(const Matrix& M) {
    RrefResult r = rref(M, EchelonMode::Column);
    FreeVariables fv;
    std::vector<bool> is_pivot(M.rows, false);
    for (int p : r.pivots) is_pivot[p] = true;
    for (int i = 0; i < M.rows; ++i)
        (is_pivot[i] ? fv.pivot_rows : fv.free_rows).push_back(i);
    return fv;
}

std::vector<Vec> eta_basis(const Matrix& M) {
    RrefResult r = rref(M, EchelonMode::Column); // echelon = M * transform
    std::vector<bool> is_pivot(M.rows, false);
    for (int p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> out;
    for (int f = 0; f < M.rows; ++f) {
        if (is_pivot[f]) continue;
        Vec eta(M.field, M.rows);
        eta[f] = 1;
        for (int j = 0; j < (int)r.pivots.size(); ++j)
            eta[r.pivots[j]] = r.echelon.at(f, j); // J entries; char 2
        out.push_back(std::move(eta));
    }
    return out;
}

void SparseMatrix::add_entry(int r, int c, felem v) {
    require(0 <= r && r < rows && 0 <= c && c < cols, "sparse entry out of range");
    if (v) row_entries[r].emplace_back(c, v);
}

void SparseMatrix::sort_rows() {
    for (auto& row : row_entries) {
        std::sort(row.begin(), row.end());
        // merge duplicates (entries accumulate additively)
        std::vector<std::pair<int, felem>> merged;
        for (auto& [c, v] : row) {
            if (!merged.empty() && merged.back().first == c)
                merged.back().second ^= v;
            else
                merged.emplace_back(c, v);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](auto& p) { return p.second == 0; }),
                     merged.end());
        row = std::move(merged);
    }
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (auto& r : row_entries) n += r.size();
    return n;
}

bool SparseMatrix::is_zero() const {
    for (auto& r : row_entries)
        if (!r.empty()) return false;
    return true;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(field, cols, rows);
    for (int r = 0; r < rows; ++r)
        for (auto& [c, v] : row_entries[r]) t.row_entries[c].emplace_back(r, v);
    t.sort_rows();
    return t;
}

Matrix SparseMatrix::to_dense() const {
    Matrix m(field, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (auto& [c, v] : row_entries[r]) m.addto(r, c, v);
    return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& M) {
    SparseMatrix s(M.field, M.rows, M.cols);
    for (auto& [r, c, v] : M.entries()) s.add_entry(r, c, v);
    s.sort_rows();
    return s;
}

Vec SparseMatrix::apply(const Vec& v) const {
    require(v.len() == cols, "sparse apply dimension mismatch");
    Vec out(field, rows);
    for (int r = 0; r < rows; ++r) {
        felem s = 0;
        for (auto& [c, val] : row_entries[r]) s ^= field.mul(val, v[c]);
        out[r] = s;
    }
    return out;
}

SparseMatrix mul(const SparseMatrix& A, const SparseMatrix& B) {
    require(A.field == B.field && A.cols == B.rows, "sparse product shape mismatch");
    SparseMatrix C(A.field, A.rows, B.cols);
    std::map<int, felem> acc;
    for (int i = 0; i < A.rows; ++i) {
        acc.clear();
        for (auto& [k, av] : A.row_entries[i])
            for (auto& [j, bv] : B.row_entries[k]) acc[j] ^= A.field.mul(av, bv);
        for (auto& [j, v] : acc)
            if (v) C.row_entries[i].emplace_back(j, v);
    }
    return C;
}

} // namespace homcup
