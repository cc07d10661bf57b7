#include "qrep/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace qrep {

Mat::Mat(const FieldSpec& f, int rows, int cols) : field_(f), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    a_.assign(static_cast<size_t>(rows) * cols, Scalar::zero(f));
}

Mat Mat::identity(const FieldSpec& f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Mat Mat::from_ints(const FieldSpec& f, const std::vector<std::vector<long long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Mat m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("ragged matrix literal");
        for (int j = 0; j < c; ++j) m.at(i, j) = Scalar::of_int(f, rows[i][j]);
    }
    return m;
}

Scalar& Mat::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("matrix index out of range");
    return a_[static_cast<size_t>(i) * cols_ + j];
}

const Scalar& Mat::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("matrix index out of range");
    return a_[static_cast<size_t>(i) * cols_ + j];
}

bool Mat::is_zero() const {
    for (const Scalar& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat m(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (field_ != o.field_) throw std::invalid_argument("matrix field mismatch");
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Mat m(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) m.at(i, j) = m.at(i, j) + x * o.at(k, j);
        }
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in sum");
    Mat m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = m.a_[i] + o.a_[i];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in difference");
    Mat m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = m.a_[i] - o.a_[i];
    return m;
}

bool Mat::operator==(const Mat& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

void Mat::row_swap(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void Mat::row_scale(int i, const Scalar& s) {
    if (s.is_zero()) throw std::invalid_argument("zero scale factor");
    for (int c = 0; c < cols_; ++c) at(i, c) = s * at(i, c);
}

void Mat::row_axpy(int dst, int src, const Scalar& s) {
    if (dst == src) throw std::invalid_argument("row_axpy with equal indices");
    for (int c = 0; c < cols_; ++c) at(dst, c) = at(dst, c) + s * at(src, c);
}

void Mat::col_swap(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void Mat::col_scale(int j, const Scalar& s) {
    if (s.is_zero()) throw std::invalid_argument("zero scale factor");
    for (int r = 0; r < rows_; ++r) at(r, j) = s * at(r, j);
}

void Mat::col_axpy(int dst, int src, const Scalar& s) {
    if (dst == src) throw std::invalid_argument("col_axpy with equal indices");
    for (int r = 0; r < rows_; ++r) at(r, dst) = at(r, dst) + s * at(r, src);
}

Mat Mat::submatrix(int r0, int r1, int c0, int c1) const {
    if (r0 < 0 || r1 > rows_ || c0 < 0 || c1 > cols_ || r0 > r1 || c0 > c1)
        throw std::out_of_range("bad submatrix range");
    Mat m(field_, r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) m.at(i - r0, j - c0) = at(i, j);
    return m;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << "[" << rows_ << "x" << cols_ << "]";
    for (int i = 0; i < rows_; ++i) {
        os << "\n";
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).to_string();
    }
    return os.str();
}

Mat elementary_row(const Mat& m, ElementaryOp op, int i, int j, const Scalar& s) {
    Mat r = m;
    switch (op) {
        case ElementaryOp::swap: r.row_swap(i, j); break;
        case ElementaryOp::scale: r.row_scale(i, s); break;
        case ElementaryOp::add_multiple: r.row_axpy(i, j, s); break;
    }
    return r;
}

Mat elementary_col(const Mat& m, ElementaryOp op, int i, int j, const Scalar& s) {
    Mat r = m;
    switch (op) {
        case ElementaryOp::swap: r.col_swap(i, j); break;
        case ElementaryOp::scale: r.col_scale(i, s); break;
        case ElementaryOp::add_multiple: r.col_axpy(i, j, s); break;
    }
    return r;
}

RowReduction row_reduce(const Mat& m) {
    RowReduction rr;
    rr.R = m;
    rr.P = Mat::identity(m.field(), m.rows());
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!rr.R.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        rr.R.row_swap(row, pivot);
        rr.P.row_swap(row, pivot);
        Scalar inv = rr.R.at(row, col).inv();
        if (!inv.is_one()) {
            rr.R.row_scale(row, inv);
            rr.P.row_scale(row, inv);
        }
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            Scalar f = rr.R.at(i, col);
            if (f.is_zero()) continue;
            rr.R.row_axpy(i, row, -f);
            rr.P.row_axpy(i, row, -f);
        }
        rr.pivot_cols.push_back(col);
        ++row;
    }
    return rr;
}

int rank(const Mat& m) { return row_reduce(m).rank(); }

bool is_invertible(const Mat& m) { return m.is_square() && rank(m) == m.rows(); }

Mat inverse(const Mat& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    RowReduction rr = row_reduce(m);
    if (rr.rank() != m.rows()) throw std::domain_error("singular matrix");
    return rr.P;
}

StandardForm standard_form(const Mat& m) {
    StandardForm sf;
    RowReduction rr = row_reduce(m);
    sf.r = rr.rank();
    sf.w.P = rr.P;
    sf.w.Q = Mat::identity(m.field(), m.cols());
    Mat R = rr.R;
    // move pivot columns to the front, in order
    for (int k = 0; k < sf.r; ++k) {
        int pc = rr.pivot_cols[k];
        if (pc != k) {
            R.col_swap(k, pc);
            sf.w.Q.col_swap(k, pc);
        }
    }
    // clear the rest of the pivot rows with column operations
    for (int k = 0; k < sf.r; ++k)
        for (int j = sf.r; j < m.cols(); ++j) {
            Scalar f = R.at(k, j);
            if (f.is_zero()) continue;
            R.col_axpy(j, k, -f);
            sf.w.Q.col_axpy(j, k, -f);
        }
    sf.S = R;
    return sf;
}

std::vector<Mat> nullspace(const Mat& m) {
    RowReduction rr = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<Mat> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Mat v(m.field(), m.cols(), 1);
        v.at(free, 0) = Scalar::one(m.field());
        for (int k = 0; k < rr.rank(); ++k) v.at(rr.pivot_cols[k], 0) = -rr.R.at(k, free);
        basis.push_back(v);
    }
    return basis;
}

bool solve(const Mat& m, const Mat& b, Mat& x) {
    if (b.rows() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
    RowReduction rr = row_reduce(m);
    Mat pb = rr.P * b;
    for (int i = rr.rank(); i < m.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (!pb.at(i, j).is_zero()) return false;
    x = Mat(m.field(), m.cols(), b.cols());
    for (int k = 0; k < rr.rank(); ++k)
        for (int j = 0; j < b.cols(); ++j) x.at(rr.pivot_cols[k], j) = pb.at(k, j);
    return true;
}

Mat direct_sum_diag(const std::vector<Mat>& blocks, const FieldSpec& f) {
    int r = 0, c = 0;
    for (const Mat& b : blocks) {
        if (b.field() != f) throw std::invalid_argument("direct sum field mismatch");
        r += b.rows();
        c += b.cols();
    }
    Mat m(f, r, c);
    int ro = 0, co = 0;
    for (const Mat& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m.at(ro + i, co + j) = b.at(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return m;
}

Mat hstack(const Mat& a, const Mat& b) {
    if (a.field() != b.field() || a.rows() != b.rows())
        throw std::invalid_argument("hstack shape mismatch");
    Mat m(a.field(), a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.field() != b.field() || a.cols() != b.cols())
        throw std::invalid_argument("vstack shape mismatch");
    Mat m(a.field(), a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) m.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows(); ++i) m.at(a.rows() + i, j) = b.at(i, j);
    }
    return m;
}

Mat build_i_up(const FieldSpec& f, int n) {
    if (n < 0) throw std::invalid_argument("block size must be >= 0");
    Mat m(f, n + 1, n);
    for (int i = 0; i < n; ++i) m.at(i + 1, i) = Scalar::one(f);
    return m;
}

Mat build_i_down(const FieldSpec& f, int n) {
    if (n < 0) throw std::invalid_argument("block size must be >= 0");
    Mat m(f, n + 1, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Mat build_i_right(const FieldSpec& f, int n) {
    if (n < 0) throw std::invalid_argument("block size must be >= 0");
    Mat m(f, n, n + 1);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Mat build_i_left(const FieldSpec& f, int n) {
    if (n < 0) throw std::invalid_argument("block size must be >= 0");
    Mat m(f, n, n + 1);
    for (int i = 0; i < n; ++i) m.at(i, i + 1) = Scalar::one(f);
    return m;
}

Mat build_frobenius(const Poly& p, int s) {
    if (s < 1) throw std::invalid_argument("power must be >= 1");
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("companion builder needs a monic polynomial of degree >= 1");
    Poly ps = poly_pow(p, s);
    int n = ps.degree();
    Mat m(p.field, n, n);
    for (int i = 0; i + 1 < n; ++i) m.at(i + 1, i) = Scalar::one(p.field);
    for (int i = 0; i < n; ++i) m.at(i, n - 1) = -ps.coeff(i);
    return m;
}

Mat build_jordan(const FieldSpec& f, int n, bool upper) {
    if (n < 1) throw std::invalid_argument("Jordan block order must be >= 1");
    Mat m(f, n, n);
    for (int i = 0; i + 1 < n; ++i) {
        if (upper)
            m.at(i, i + 1) = Scalar::one(f);
        else
            m.at(i + 1, i) = Scalar::one(f);
    }
    return m;
}

Mat reversal(const FieldSpec& f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = Scalar::one(f);
    return m;
}

Mat poly_at(const Poly& f, const Mat& m) {
    if (!m.is_square()) throw std::invalid_argument("polynomial of a non-square matrix");
    Mat acc(m.field(), m.rows(), m.rows());
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * m;
        Scalar ci = f.coeff(i);
        for (int d = 0; d < m.rows(); ++d) acc.at(d, d) = acc.at(d, d) + ci;
    }
    return acc;
}

}  // namespace qrep
