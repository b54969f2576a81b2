#include "matdiv/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace matdiv {

// ---------------------------------------------------------------- scalar

LaurentSeries::LaurentSeries(long low, std::vector<Scalar> coeffs) : low_(low), c_(std::move(coeffs)) {
    normalize();
}

void LaurentSeries::normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero())
        ++lead;
    if (lead > 0) {
        low_ += static_cast<long>(lead);
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    }
}

LaurentSeries LaurentSeries::zero(long horizon) {
    LaurentSeries s;
    s.low_ = horizon;
    return s;
}

LaurentSeries LaurentSeries::constant(const Scalar& c, long horizon) {
    return monomial(c, 0, horizon);
}

LaurentSeries LaurentSeries::monomial(const Scalar& c, long degree, long horizon) {
    if (c.is_zero() || degree >= horizon)
        return zero(std::min(horizon, c.is_zero() ? horizon : degree));
    std::vector<Scalar> v(static_cast<std::size_t>(horizon - degree));
    v[0] = c;
    return LaurentSeries(degree, std::move(v));
}

std::optional<long> LaurentSeries::valuation() const {
    if (c_.empty())
        return std::nullopt;
    return low_;
}

Scalar LaurentSeries::coeff(long d) const {
    if (d < low_)
        return Scalar();
    if (d >= horizon())
        throw precision_error("coefficient requested beyond the known window");
    return c_[static_cast<std::size_t>(d - low_)];
}

LaurentSeries LaurentSeries::shifted(long k) const {
    LaurentSeries s(*this);
    s.low_ += k;
    return s;
}

LaurentSeries LaurentSeries::truncated(long new_horizon) const {
    if (new_horizon >= horizon())
        return *this;
    if (new_horizon <= low_)
        return zero(new_horizon);
    std::vector<Scalar> v(c_.begin(), c_.begin() + (new_horizon - low_));
    return LaurentSeries(low_, std::move(v));
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries s(*this);
    for (Scalar& c : s.c_)
        c = -c;
    return s;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    long horizon = std::min(a.horizon(), b.horizon());
    long low = std::min(a.low_, b.low_);
    if (low >= horizon)
        return LaurentSeries::zero(horizon);
    std::vector<Scalar> v(static_cast<std::size_t>(horizon - low));
    for (long d = low; d < horizon; ++d) {
        Scalar x;
        if (d >= a.low_ && d < a.horizon())
            x += a.coeff(d);
        if (d >= b.low_ && d < b.horizon())
            x += b.coeff(d);
        v[static_cast<std::size_t>(d - low)] = x;
    }
    return LaurentSeries(low, std::move(v));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    return a + (-b);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    long horizon = std::min(a.horizon() + b.low_, b.horizon() + a.low_);
    long low = a.low_ + b.low_;
    if (a.c_.empty() || b.c_.empty() || low >= horizon)
        return LaurentSeries::zero(horizon);
    std::vector<Scalar> v(static_cast<std::size_t>(horizon - low));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            long d = a.low_ + static_cast<long>(i) + b.low_ + static_cast<long>(j);
            if (d >= horizon)
                break;
            v[static_cast<std::size_t>(d - low)] += a.c_[i] * b.c_[j];
        }
    }
    return LaurentSeries(low, std::move(v));
}

LaurentSeries operator*(const Scalar& c, const LaurentSeries& s) {
    LaurentSeries out(s);
    for (Scalar& x : out.c_)
        x *= c;
    out.normalize();
    return out;
}

LaurentSeries LaurentSeries::inverse() const {
    if (c_.empty())
        throw precision_error("insufficient precision or singular: series is zero within its window");
    // *this = z^low * u with u_0 != 0; invert u by the standard recursion.
    std::size_t len = c_.size();
    std::vector<Scalar> r(len);
    Scalar u0inv = c_[0].inverse();
    r[0] = u0inv;
    for (std::size_t t = 1; t < len; ++t) {
        Scalar acc;
        for (std::size_t s = 1; s <= t; ++s)
            acc += c_[s] * r[t - s];
        r[t] = -(u0inv * acc);
    }
    return LaurentSeries(-low_, std::move(r));
}

bool LaurentSeries::equal_in_window(const LaurentSeries& o) const {
    long horizon = std::min(this->horizon(), o.horizon());
    long low = std::min(low_, o.low_);
    for (long d = low; d < horizon; ++d) {
        Scalar x = d < this->horizon() ? coeff(d) : Scalar();
        Scalar y = d < o.horizon() ? o.coeff(d) : Scalar();
        if (x != y)
            return false;
    }
    return true;
}

std::string LaurentSeries::str() const {
    std::ostringstream os;
    bool any = false;
    for (long d = low_; d < horizon(); ++d) {
        Scalar c = coeff(d);
        if (c.is_zero())
            continue;
        if (any)
            os << " + ";
        os << "(" << c.str() << ")z^" << d;
        any = true;
    }
    if (!any)
        os << "0";
    os << " [O(z^" << horizon() << ")]";
    return os.str();
}

// ---------------------------------------------------------------- matrix

MatSeries::MatSeries(long low, std::vector<Mat> coeffs) : low_(low), c_(std::move(coeffs)) {
    if (c_.empty())
        throw dimension_error("matrix series needs at least one coefficient; use zero()");
    rows_ = c_.front().rows();
    cols_ = c_.front().cols();
    for (const Mat& m : c_)
        if (m.rows() != rows_ || m.cols() != cols_)
            throw dimension_error("inconsistent coefficient shapes in matrix series");
    normalize();
}

void MatSeries::normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero())
        ++lead;
    if (lead > 0) {
        low_ += static_cast<long>(lead);
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    }
}

MatSeries MatSeries::zero(int rows, int cols, long horizon) {
    MatSeries s;
    s.rows_ = rows;
    s.cols_ = cols;
    s.low_ = horizon;
    return s;
}

MatSeries MatSeries::identity(int n, long horizon) {
    return constant(Mat::identity(n), horizon);
}

MatSeries MatSeries::constant(const Mat& m, long horizon) {
    return monomial(m, 0, horizon);
}

MatSeries MatSeries::monomial(const Mat& m, long degree, long horizon) {
    if (m.is_zero() || degree >= horizon)
        return zero(m.rows(), m.cols(), m.is_zero() ? horizon : std::min(horizon, degree));
    std::vector<Mat> v;
    v.reserve(static_cast<std::size_t>(horizon - degree));
    v.push_back(m);
    for (long d = degree + 1; d < horizon; ++d)
        v.emplace_back(m.rows(), m.cols());
    MatSeries s;
    s.rows_ = m.rows();
    s.cols_ = m.cols();
    s.low_ = degree;
    s.c_ = std::move(v);
    return s;
}

MatSeries MatSeries::from_entries(const std::vector<std::vector<LaurentSeries>>& grid) {
    int rows = static_cast<int>(grid.size());
    int cols = rows == 0 ? 0 : static_cast<int>(grid.front().size());
    long horizon = 0, low = 0;
    bool first = true;
    for (const auto& r : grid) {
        if (static_cast<int>(r.size()) != cols)
            throw dimension_error("ragged series grid");
        for (const auto& e : r) {
            if (first) {
                horizon = e.horizon();
                low = e.support_low();
                first = false;
            } else {
                horizon = std::min(horizon, e.horizon());
                low = std::min(low, e.support_low());
            }
        }
    }
    if (first || low >= horizon)
        return zero(rows, cols, horizon);
    std::vector<Mat> v;
    for (long d = low; d < horizon; ++d) {
        Mat m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m.at(i, j) = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].coeff(d);
        v.push_back(std::move(m));
    }
    MatSeries s;
    s.rows_ = rows;
    s.cols_ = cols;
    s.low_ = low;
    s.c_ = std::move(v);
    s.normalize();
    return s;
}

std::optional<long> MatSeries::valuation() const {
    if (c_.empty())
        return std::nullopt;
    return low_;
}

Mat MatSeries::coeff(long d) const {
    if (d < low_)
        return Mat(rows_, cols_);
    if (d >= horizon())
        throw precision_error("matrix coefficient requested beyond the known window");
    return c_[static_cast<std::size_t>(d - low_)];
}

LaurentSeries MatSeries::entry(int i, int j) const {
    std::vector<Scalar> v;
    v.reserve(c_.size());
    for (const Mat& m : c_)
        v.push_back(m.at(i, j));
    if (v.empty())
        return LaurentSeries::zero(low_);
    return LaurentSeries(low_, std::move(v));
}

MatSeries MatSeries::shifted(long k) const {
    MatSeries s(*this);
    s.low_ += k;
    return s;
}

MatSeries MatSeries::row_shifted(const std::vector<long>& shifts) const {
    if (static_cast<int>(shifts.size()) != rows_)
        throw dimension_error("row shift count mismatch");
    long horizon = this->horizon();
    long low = this->low_;
    long new_horizon = horizon + *std::min_element(shifts.begin(), shifts.end());
    long new_low = low + *std::min_element(shifts.begin(), shifts.end());
    if (c_.empty())
        return zero(rows_, cols_, new_horizon);
    std::vector<Mat> v;
    for (long d = new_low; d < new_horizon; ++d) {
        Mat m(rows_, cols_);
        for (int i = 0; i < rows_; ++i) {
            long src = d - shifts[static_cast<std::size_t>(i)];
            if (src < low || src >= horizon) {
                if (src >= horizon)
                    throw precision_error("row shift exceeds known window");
                continue; // below support: zero
            }
            for (int j = 0; j < cols_; ++j)
                m.at(i, j) = c_[static_cast<std::size_t>(src - low)].at(i, j);
        }
        v.push_back(std::move(m));
    }
    MatSeries s;
    s.rows_ = rows_;
    s.cols_ = cols_;
    s.low_ = new_low;
    s.c_ = std::move(v);
    s.normalize();
    return s;
}

MatSeries MatSeries::truncated(long new_horizon) const {
    if (new_horizon >= horizon())
        return *this;
    if (new_horizon <= low_)
        return zero(rows_, cols_, new_horizon);
    std::vector<Mat> v(c_.begin(), c_.begin() + (new_horizon - low_));
    MatSeries s;
    s.rows_ = rows_;
    s.cols_ = cols_;
    s.low_ = low_;
    s.c_ = std::move(v);
    s.normalize();
    return s;
}

MatSeries MatSeries::transpose() const {
    MatSeries s(*this);
    std::swap(s.rows_, s.cols_);
    for (Mat& m : s.c_)
        m = m.transpose();
    return s;
}

MatSeries MatSeries::operator-() const {
    MatSeries s(*this);
    for (Mat& m : s.c_)
        m = -m;
    return s;
}

MatSeries operator+(const MatSeries& a, const MatSeries& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw dimension_error("series addition shape mismatch");
    long horizon = std::min(a.horizon(), b.horizon());
    long low = std::min(a.low_, b.low_);
    if (low >= horizon)
        return MatSeries::zero(a.rows_, a.cols_, horizon);
    std::vector<Mat> v;
    for (long d = low; d < horizon; ++d) {
        Mat m(a.rows_, a.cols_);
        if (d >= a.low_)
            m += a.coeff(d);
        if (d >= b.low_)
            m += b.coeff(d);
        v.push_back(std::move(m));
    }
    MatSeries s;
    s.rows_ = a.rows_;
    s.cols_ = a.cols_;
    s.low_ = low;
    s.c_ = std::move(v);
    s.normalize();
    return s;
}

MatSeries operator-(const MatSeries& a, const MatSeries& b) {
    return a + (-b);
}

MatSeries operator*(const MatSeries& a, const MatSeries& b) {
    if (a.cols_ != b.rows_)
        throw dimension_error("series product shape mismatch");
    long horizon = std::min(a.horizon() + b.low_, b.horizon() + a.low_);
    long low = a.low_ + b.low_;
    if (a.c_.empty() || b.c_.empty() || low >= horizon)
        return MatSeries::zero(a.rows_, b.cols_, horizon);
    std::vector<Mat> v;
    for (long d = low; d < horizon; ++d)
        v.emplace_back(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            long d = a.low_ + static_cast<long>(i) + b.low_ + static_cast<long>(j);
            if (d >= horizon)
                break;
            v[static_cast<std::size_t>(d - low)] += a.c_[i] * b.c_[j];
        }
    }
    MatSeries s;
    s.rows_ = a.rows_;
    s.cols_ = b.cols_;
    s.low_ = low;
    s.c_ = std::move(v);
    s.normalize();
    return s;
}

MatSeries operator*(const LaurentSeries& q, const MatSeries& m) {
    std::vector<std::vector<LaurentSeries>> grid(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            grid[static_cast<std::size_t>(i)].push_back(q * m.entry(i, j));
    return MatSeries::from_entries(grid);
}

MatSeries operator*(const Scalar& c, const MatSeries& m) {
    MatSeries s(m);
    for (Mat& x : s.c_)
        x = c * x;
    s.normalize();
    return s;
}

bool MatSeries::equal_in_window(const MatSeries& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        return false;
    long horizon = std::min(this->horizon(), o.horizon());
    long low = std::min(low_, o.low_);
    for (long d = low; d < horizon; ++d) {
        Mat x = d < this->horizon() ? coeff(d) : Mat(rows_, cols_);
        Mat y = d < o.horizon() ? o.coeff(d) : Mat(rows_, cols_);
        if (x != y)
            return false;
    }
    return true;
}

std::string MatSeries::str() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " series, window [" << low_ << ", " << horizon() << ")";
    for (long d = low_; d < horizon(); ++d) {
        if (coeff(d).is_zero())
            continue;
        os << "\n z^" << d << ":\n" << coeff(d).str();
    }
    return os.str();
}

// ------------------------------------------------------------- inversion

Mat mat_inverse(const Mat& m) {
    if (!m.is_square())
        throw dimension_error("inverse of non-square matrix");
    int n = m.rows();
    RrefResult rr = rref(Mat::hstack(m, Mat::identity(n)));
    if (rr.rank < n)
        throw domain_error("singular matrix has no inverse");
    return rr.reduced.submatrix(0, n, n, n);
}

namespace {

using Grid = std::vector<std::vector<LaurentSeries>>;

Grid grid_of(const MatSeries& a) {
    Grid g(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            g[static_cast<std::size_t>(i)].push_back(a.entry(i, j));
    return g;
}

Grid grid_identity(int n, long horizon) {
    Grid g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g[static_cast<std::size_t>(i)].push_back(
                i == j ? LaurentSeries::constant(Scalar(1), horizon) : LaurentSeries::zero(horizon));
    return g;
}

void row_op(Grid& g, int i, int s, const LaurentSeries& q) {
    for (std::size_t c = 0; c < g[static_cast<std::size_t>(i)].size(); ++c)
        g[static_cast<std::size_t>(i)][c] = g[static_cast<std::size_t>(i)][c] - q * g[static_cast<std::size_t>(s)][c];
}

void col_op(Grid& g, int j, int s, const LaurentSeries& q) {
    for (std::size_t r = 0; r < g.size(); ++r)
        g[r][static_cast<std::size_t>(j)] = g[r][static_cast<std::size_t>(j)] - g[r][static_cast<std::size_t>(s)] * q;
}

void row_scale(Grid& g, int i, const LaurentSeries& u) {
    for (std::size_t c = 0; c < g[static_cast<std::size_t>(i)].size(); ++c)
        g[static_cast<std::size_t>(i)][c] = u * g[static_cast<std::size_t>(i)][c];
}

} // namespace

DvrDiagonal dvr_diagonalize(const MatSeries& a) {
    if (!a.rows() || a.rows() != a.cols())
        throw dimension_error("diagonalization needs a nonempty square series");
    int n = a.rows();
    long len = a.horizon() - a.support_low();
    long big = a.horizon() + len + std::max<long>(0, -a.support_low()) * n + 8;

    Grid w = grid_of(a);
    Grid u = grid_identity(n, big);
    Grid v = grid_identity(n, big);
    std::vector<long> expo;

    for (int s = 0; s < n; ++s) {
        long best = 0;
        int bi = -1, bj = -1;
        for (int i = s; i < n; ++i)
            for (int j = s; j < n; ++j) {
                auto val = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].valuation();
                if (val && (bi < 0 || *val < best)) {
                    best = *val;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0)
            throw precision_error(
                "insufficient precision or singular: every remaining entry vanishes within its window; "
                "supply more coefficient terms");
        // A window-zero entry whose horizon does not exceed the chosen
        // valuation could hide a smaller pivot; refuse to guess.
        for (int i = s; i < n; ++i)
            for (int j = s; j < n; ++j) {
                const LaurentSeries& e = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (e.is_zero_window() && e.horizon() <= best)
                    throw precision_error("insufficient precision: an entry is unresolved below degree " +
                                          std::to_string(best + 1) + "; supply at least " +
                                          std::to_string(best - e.horizon() + 1) + " more coefficient terms");
            }
        if (bi != s) {
            std::swap(w[static_cast<std::size_t>(s)], w[static_cast<std::size_t>(bi)]);
            std::swap(u[static_cast<std::size_t>(s)], u[static_cast<std::size_t>(bi)]);
        }
        if (bj != s)
            for (int r = 0; r < n; ++r) {
                std::swap(w[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)],
                          w[static_cast<std::size_t>(r)][static_cast<std::size_t>(bj)]);
                std::swap(v[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)],
                          v[static_cast<std::size_t>(r)][static_cast<std::size_t>(bj)]);
            }
        LaurentSeries pinv = w[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)].inverse();
        for (int i = s + 1; i < n; ++i) {
            LaurentSeries q = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] * pinv;
            if (q.is_zero_window())
                continue;
            row_op(w, i, s, q);
            row_op(u, i, s, q);
        }
        for (int j = s + 1; j < n; ++j) {
            LaurentSeries q = pinv * w[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)];
            if (q.is_zero_window())
                continue;
            col_op(w, j, s, q);
            col_op(v, j, s, q);
        }
        expo.push_back(best);
    }

    // Normalize each pivot to a pure power of z.
    for (int s = 0; s < n; ++s) {
        LaurentSeries unit = w[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)].shifted(-expo[static_cast<std::size_t>(s)]);
        LaurentSeries uinv = unit.inverse();
        row_scale(w, s, uinv);
        row_scale(u, s, uinv);
    }

    // Descending exponent convention; permute symmetrically.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return expo[static_cast<std::size_t>(x)] > expo[static_cast<std::size_t>(y)];
    });
    Grid u2(static_cast<std::size_t>(n)), v2(static_cast<std::size_t>(n));
    std::vector<long> expo2;
    for (int r = 0; r < n; ++r) {
        u2[static_cast<std::size_t>(r)] = u[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])];
        expo2.push_back(expo[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])]);
        v2[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(n), LaurentSeries::zero(0));
    }
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            v2[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                v[static_cast<std::size_t>(r)][static_cast<std::size_t>(order[static_cast<std::size_t>(c)])];

    DvrDiagonal out;
    out.exponents = std::move(expo2);
    out.left = MatSeries::from_entries(u2);
    out.right = MatSeries::from_entries(v2);
    return out;
}

MatSeries series_invert(const MatSeries& a) {
    if (!a.rows() || a.rows() != a.cols())
        throw dimension_error("inverse of a non-square series");
    int n = a.rows();
    if (a.is_zero_window())
        throw precision_error("insufficient precision or singular: series vanishes within its window");

    MatSeries inv;
    long floor = a.support_low();
    Mat lead = a.coeff(floor);
    if (rank_of(lead) == n) {
        // x = sum x_t z^t with (a z^{-floor}) * x = I, then shift back.
        long len = a.horizon() - floor;
        Mat x0 = mat_inverse(lead);
        std::vector<Mat> xs;
        xs.push_back(x0);
        for (long t = 1; t < len; ++t) {
            Mat acc(n, n);
            for (long s = 1; s <= t; ++s)
                acc += a.coeff(floor + s) * xs[static_cast<std::size_t>(t - s)];
            xs.push_back(-(x0 * acc));
        }
        inv = MatSeries(-floor, std::move(xs));
    } else {
        DvrDiagonal d = dvr_diagonalize(a);
        std::vector<long> neg;
        for (long e : d.exponents)
            neg.push_back(-e);
        inv = d.right * d.left.row_shifted(neg);
    }

    MatSeries check = a * inv;
    if (check.horizon() <= 0)
        throw precision_error("insufficient precision: inverse not certifiable within the window");
    if (!check.equal_in_window(MatSeries::identity(n, check.horizon())))
        throw precision_error("insufficient precision or singular: inverse verification failed");
    return inv;
}

} // namespace matdiv
