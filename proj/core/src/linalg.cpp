#include "matdiv/linalg.hpp"

#include <sstream>

namespace matdiv {

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0)
        throw dimension_error("negative matrix dimension");
}

Mat::Mat(int rows, int cols, std::vector<Scalar> entries) : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != static_cast<std::size_t>(rows) * cols)
        throw dimension_error("entry count does not match matrix shape");
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = Scalar(1);
    return m;
}

Mat Mat::of(std::initializer_list<std::initializer_list<long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    Mat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw dimension_error("ragged matrix literal");
        int j = 0;
        for (long v : row)
            m.at(i, j++) = Scalar(v);
        ++i;
    }
    return m;
}

bool Mat::is_zero() const {
    for (const Scalar& s : a_)
        if (!s.is_zero())
            return false;
    return true;
}

Mat Mat::operator-() const {
    Mat m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k)
        m.a_[k] = -a_[k];
    return m;
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw dimension_error("matrix addition shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k)
        a_[k] += o.a_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw dimension_error("matrix subtraction shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k)
        a_[k] -= o.a_[k];
    return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_)
        throw dimension_error("matrix product shape mismatch");
    Mat m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero())
                continue;
            for (int j = 0; j < b.cols_; ++j)
                m.at(i, j) += aik * b.at(k, j);
        }
    return m;
}

Mat operator*(const Scalar& c, Mat m) {
    for (int i = 0; i < m.rows_; ++i)
        for (int j = 0; j < m.cols_; ++j)
            m.at(i, j) *= c;
    return m;
}

Mat Mat::transpose() const {
    Mat m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            m.at(j, i) = at(i, j);
    return m;
}

Mat Mat::submatrix(int r0, int c0, int nrows, int ncols) const {
    if (r0 < 0 || c0 < 0 || r0 + nrows > rows_ || c0 + ncols > cols_)
        throw dimension_error("submatrix out of range");
    Mat m(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j)
            m.at(i, j) = at(r0 + i, c0 + j);
    return m;
}

Mat Mat::vstack(const Mat& top, const Mat& bottom) {
    if (top.cols() != bottom.cols())
        throw dimension_error("vstack column mismatch");
    Mat m(top.rows() + bottom.rows(), top.cols());
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j)
            m.at(i, j) = top.at(i, j);
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < bottom.cols(); ++j)
            m.at(top.rows() + i, j) = bottom.at(i, j);
    return m;
}

Mat Mat::hstack(const Mat& left, const Mat& right) {
    if (left.rows() != right.rows())
        throw dimension_error("hstack row mismatch");
    Mat m(left.rows(), left.cols() + right.cols());
    for (int i = 0; i < left.rows(); ++i) {
        for (int j = 0; j < left.cols(); ++j)
            m.at(i, j) = left.at(i, j);
        for (int j = 0; j < right.cols(); ++j)
            m.at(i, left.cols() + j) = right.at(i, j);
    }
    return m;
}

std::vector<Scalar> Mat::row(int i) const {
    std::vector<Scalar> v(cols_);
    for (int j = 0; j < cols_; ++j)
        v[j] = at(i, j);
    return v;
}

void Mat::set_row(int i, const std::vector<Scalar>& v) {
    if (static_cast<int>(v.size()) != cols_)
        throw dimension_error("set_row length mismatch");
    for (int j = 0; j < cols_; ++j)
        at(i, j) = v[j];
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw dimension_error("matrix-vector shape mismatch");
    std::vector<Scalar> out(rows_);
    for (int i = 0; i < rows_; ++i) {
        Scalar acc;
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero())
                acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

Mat Mat::unflatten(const std::vector<Scalar>& v, int rows, int cols) {
    return Mat(rows, cols, v);
}

Mat Mat::commutator(const Mat& o) const {
    return *this * o - o * *this;
}

std::string Mat::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j)
            os << (j ? ", " : "[") << at(i, j).str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0)
        os << "[]";
    return os.str();
}

RrefResult rref(const Mat& m) {
    RrefResult res;
    res.reduced = m;
    Mat& a = res.reduced;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!a.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != r)
            for (int j = 0; j < a.cols(); ++j)
                std::swap(a.at(piv, j), a.at(r, j));
        Scalar inv = a.at(r, c).inverse();
        for (int j = c; j < a.cols(); ++j)
            a.at(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero())
                continue;
            Scalar f = a.at(i, c);
            for (int j = c; j < a.cols(); ++j)
                a.at(i, j) -= f * a.at(r, j);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

int rank_of(const Mat& m) {
    return rref(m).rank;
}

std::optional<std::vector<Scalar>> solve_linear(const Mat& a, const std::vector<Scalar>& rhs) {
    if (static_cast<int>(rhs.size()) != a.rows())
        throw dimension_error("solve_linear: rhs length mismatch");
    Mat aug = Mat::hstack(a, Mat::unflatten(rhs, a.rows(), 1));
    RrefResult rr = rref(aug);
    std::vector<Scalar> x(static_cast<std::size_t>(a.cols()), Scalar(0));
    for (int r = 0; r < rr.rank; ++r) {
        if (rr.pivots[static_cast<std::size_t>(r)] == a.cols())
            return std::nullopt; // pivot in the rhs column: inconsistent
        x[static_cast<std::size_t>(rr.pivots[static_cast<std::size_t>(r)])] = rr.reduced.at(r, a.cols());
    }
    return x;
}

Subspace nullspace(const Mat& m) {
    RrefResult rr = rref(m);
    int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : rr.pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Scalar> v(n);
        v[f] = Scalar(1);
        for (int r = 0; r < rr.rank; ++r)
            v[rr.pivots[r]] = -rr.reduced.at(r, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span_of_vectors(basis, n);
}

Subspace Subspace::full(int ambient) {
    return span_of(Mat::identity(ambient));
}

Subspace Subspace::span_of(const Mat& rows) {
    Subspace s(rows.cols());
    RrefResult rr = rref(rows);
    s.basis_ = rr.reduced.submatrix(0, 0, rr.rank, rows.cols());
    s.pivots_ = rr.pivots;
    return s;
}

Subspace Subspace::span_of_vectors(const std::vector<std::vector<Scalar>>& rows, int ambient) {
    Mat m(static_cast<int>(rows.size()), ambient);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        m.set_row(i, rows[i]);
    return span_of(m);
}

std::vector<Scalar> Subspace::reduce(std::vector<Scalar> v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw dimension_error("vector/ambient mismatch");
    for (int r = 0; r < basis_.rows(); ++r) {
        int p = pivots_[r];
        if (v[p].is_zero())
            continue;
        Scalar f = v[p];
        for (int j = p; j < ambient_; ++j)
            v[j] -= f * basis_.at(r, j);
    }
    return v;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    for (const Scalar& s : reduce(v))
        if (!s.is_zero())
            return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_)
        throw dimension_error("subspace ambient mismatch");
    for (int r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row(r)))
            return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (ambient_ != o.ambient_)
        throw dimension_error("subspace ambient mismatch");
    return span_of(Mat::vstack(basis_, o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (ambient_ != o.ambient_)
        throw dimension_error("subspace ambient mismatch");
    // v is in both row spaces iff it annihilates both perps.
    Subspace pa = annihilator();
    Subspace pb = o.annihilator();
    return nullspace(Mat::vstack(pa.basis(), pb.basis()));
}

Subspace Subspace::annihilator() const {
    return nullspace(basis_);
}

Subspace Subspace::transformed(const Mat& g) const {
    if (g.rows() != ambient_ || g.cols() != ambient_)
        throw dimension_error("transform shape mismatch");
    // Rows are vectors; v -> g v means row r -> r g^T.
    return span_of(basis_ * g.transpose());
}

std::string Subspace::str() const {
    std::ostringstream os;
    os << "span dim " << dim() << " in " << ambient_ << ":\n" << basis_.str();
    return os.str();
}

} // namespace matdiv
