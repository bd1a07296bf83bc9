#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "homcup/field.hpp"
#include "homcup/json_fwd.hpp"

namespace homcup {

/// Dense vector over F_{2^s}.
struct Vec {
    Field field;
    std::vector<felem> a;

    Vec() = default;
    Vec(const Field& f, int len) : field(f), a(len, 0) {}
    Vec(const Field& f, std::vector<felem> v) : field(f), a(std::move(v)) {}

    int len() const { return (int)a.size(); }
    felem operator[](int i) const { return a[i]; }
    felem& operator[](int i) { return a[i]; }
    bool is_zero() const {
        for (felem c : a)
            if (c) return false;
        return true;
    }
    int weight() const {
        int w = 0;
        for (felem c : a) w += (c != 0);
        return w;
    }
    bool operator==(const Vec& o) const { return field == o.field && a == o.a; }

    nlohmann::json to_json() const;
    static Vec from_json(const nlohmann::json& j);
};

Vec add(const Vec& u, const Vec& v);
felem dot(const Vec& u, const Vec& v);

/// Dense matrix over F_{2^s} with a sparse-entry external interface.
/// Row elimination uses bit-packed XOR rows for the prime field and the
/// generic table-multiply path otherwise; both follow identical pivot rules
/// (leftmost column, topmost row), so results are bit-exact across paths.
struct Matrix {
    Field field;
    int rows = 0, cols = 0;
    std::vector<felem> a; // row-major

    Matrix() = default;
    Matrix(const Field& f, int r, int c) : field(f), rows(r), cols(c) {
        require((long long)r * c <= 200'000'000ll, "dense matrix too large; use SparseMatrix");
        a.assign((std::size_t)r * c, 0);
    }

    felem at(int r, int c) const { return a[(std::size_t)r * cols + c]; }
    void set(int r, int c, felem v) { a[(std::size_t)r * cols + c] = v; }
    void addto(int r, int c, felem v) { a[(std::size_t)r * cols + c] ^= v; }

    static Matrix identity(const Field& f, int n);
    static Matrix from_entries(const Field& f, int rows, int cols,
                               const std::vector<std::tuple<int, int, felem>>& entries);
    /// Canonically sorted (row, col) nonzero entries.
    std::vector<std::tuple<int, int, felem>> entries() const;

    Matrix transpose() const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const {
        return field == o.field && rows == o.rows && cols == o.cols && a == o.a;
    }

    Vec row(int r) const;
    Vec col(int c) const;

    nlohmann::json to_json() const;
    static Matrix from_json(const nlohmann::json& j);
    std::string to_matrix_market() const;
};

Matrix add(const Matrix& A, const Matrix& B);
Matrix mul(const Matrix& A, const Matrix& B);
Vec mul(const Matrix& A, const Vec& v);
Vec mul(const Vec& v, const Matrix& A);
Matrix kron(const Matrix& A, const Matrix& B);
Matrix vstack(const Matrix& A, const Matrix& B);
Matrix hstack(const Matrix& A, const Matrix& B);

enum class EchelonMode { Row, Column };
enum class Side { Right, Left };

struct RrefResult {
    Matrix echelon;   // row mode: transform * M; column mode: M * transform
    Matrix transform; // invertible
    std::vector<int> pivots; // pivot columns (row mode) / pivot rows (column mode), increasing
};

RrefResult rref(const Matrix& M, EchelonMode mode);
int rank(const Matrix& M);

/// Basis of {v : M v = 0} (Right) or {v : v M = 0} (Left).
std::vector<Vec> kernel_basis(const Matrix& M, Side side);

struct MembershipResult {
    bool member = false;
    Vec coefficients; // member: M c = v (column) or c M = v (row)
    Vec witness;      // non-member: w M = 0 and w . v != 0 (column side)
};

/// Solve v against the column span (column) or row span (row) of M. A
/// non-member always comes with a verified kernel witness, never a bare flag.
MembershipResult image_membership(const Matrix& M, const Vec& v, Side side = Side::Right);

struct FreeVariables {
    std::vector<int> free_rows;  // row indices of the J block
    std::vector<int> pivot_rows; // row indices of the leading identity
};

/// Partition of row indices from the reduced column echelon form of M.
FreeVariables free_variables(const Matrix& M);

/// Left-kernel basis aligned with the free rows: eta_k is one-hot on free row
/// k plus corrections on pivot rows (the rows of (J I) in echelon terms);
/// pairs to delta_{jk} against the one-hot vectors on free rows.
std::vector<Vec> eta_basis(const Matrix& M);

/// Row-compressed sparse matrix for operators too large to densify.
struct SparseMatrix {
    Field field;
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, felem>>> row_entries; // sorted by col

    SparseMatrix() = default;
    SparseMatrix(const Field& f, int r, int c) : field(f), rows(r), cols(c), row_entries(r) {}

    void add_entry(int r, int c, felem v);
    void sort_rows();
    std::size_t nnz() const;
    bool is_zero() const;
    SparseMatrix transpose() const;
    Matrix to_dense() const;
    static SparseMatrix from_dense(const Matrix& M);
    Vec apply(const Vec& v) const; // M v
};

SparseMatrix mul(const SparseMatrix& A, const SparseMatrix& B);

} // namespace homcup
