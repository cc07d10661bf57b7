#ifndef QREP_MATRIX_HPP
#define QREP_MATRIX_HPP

#include <vector>

#include "qrep/poly.hpp"

namespace qrep {

/// Dense matrix over an exact field. Zero rows and/or columns are legal
/// ("formal" matrices); the entry vector always has rows*cols elements.
class Mat {
  public:
    Mat() : field_(FieldSpec::gf(2)) {}
    Mat(const FieldSpec& f, int rows, int cols);

    static Mat zero(const FieldSpec& f, int rows, int cols) { return Mat(f, rows, cols); }
    static Mat identity(const FieldSpec& f, int n);
    static Mat from_ints(const FieldSpec& f, const std::vector<std::vector<long long>>& rows);

    const FieldSpec& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& at(int i, int j);
    const Scalar& at(int i, int j) const;

    bool is_zero() const;
    bool is_identity() const;

    Mat transpose() const;
    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    // in-place elementary operations
    void row_swap(int i, int j);
    void row_scale(int i, const Scalar& s);          // s nonzero
    void row_axpy(int dst, int src, const Scalar& s);  // row dst += s * row src
    void col_swap(int i, int j);
    void col_scale(int j, const Scalar& s);
    void col_axpy(int dst, int src, const Scalar& s);

    Mat submatrix(int r0, int r1, int c0, int c1) const;  // half-open ranges

    std::string to_string() const;

  private:
    FieldSpec field_;
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

/// Invertible pair recording an equivalence P * M * Q = (claimed form).
struct TransformWitness {
    Mat P, Q;
};

enum class ElementaryOp { swap, scale, add_multiple };

/// One elementary row (column) operation as a standalone value operation.
/// add_multiple: row i += s * row j (resp. column).
Mat elementary_row(const Mat& m, ElementaryOp op, int i, int j, const Scalar& s);
Mat elementary_col(const Mat& m, ElementaryOp op, int i, int j, const Scalar& s);

/// Row echelon reduction: P * m = R with P invertible, R reduced
/// (pivots are 1 with zeros above and below), pivot columns listed in order.
struct RowReduction {
    Mat R;
    Mat P;
    std::vector<int> pivot_cols;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};
RowReduction row_reduce(const Mat& m);

int rank(const Mat& m);
Mat inverse(const Mat& m);  // throws std::domain_error when singular
bool is_invertible(const Mat& m);

/// Rank normal form S = P*m*Q with an identity block of size r in the
/// top-left corner and zeros elsewhere.
struct StandardForm {
    Mat S;
    int r = 0;
    TransformWitness w;
};
StandardForm standard_form(const Mat& m);

/// Basis of the right null space (columns x with m x = 0), deterministic
/// order derived from the reduced echelon form.
std::vector<Mat> nullspace(const Mat& m);

/// One solution of m x = b, if any.
bool solve(const Mat& m, const Mat& b, Mat& x);

Mat direct_sum_diag(const std::vector<Mat>& blocks, const FieldSpec& f);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

// named block builders
Mat build_i_up(const FieldSpec& f, int n);     // (n+1) x n, zero row on top
Mat build_i_down(const FieldSpec& f, int n);   // (n+1) x n, zero row below
Mat build_i_right(const FieldSpec& f, int n);  // n x (n+1), zero column at right
Mat build_i_left(const FieldSpec& f, int n);   // n x (n+1), zero column at left
/// companion matrix of p^s: ones on the subdiagonal, negated coefficients
/// of p^s in the last column
Mat build_frobenius(const Poly& p, int s);
Mat build_jordan(const FieldSpec& f, int n, bool upper);  // J^+/J^- of order n, eigenvalue 0

/// reversal permutation matrix (antidiagonal ones)
Mat reversal(const FieldSpec& f, int n);

/// evaluate a polynomial at a square matrix
Mat poly_at(const Poly& f, const Mat& m);

}  // namespace qrep

#endif
