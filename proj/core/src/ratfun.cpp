#include <matdiv/error.hpp>
#include <matdiv/ratfun.hpp>

#include <sstream>

namespace matdiv {

namespace {

Scalar binom(long n, long k) {
    mpz_class v;
    mpz_bin_uiui(v.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Scalar(mpq_class(v));
}

Scalar power(const Scalar& base, long e) {
    Scalar acc(1);
    for (long i = 0; i < e; ++i) acc *= base;
    return acc;
}

}  // namespace

void RationalMatrix::normalize() {
    while (!poly_.empty() && poly_.back().is_zero()) poly_.pop_back();
    for (auto it = principal_.begin(); it != principal_.end();) {
        std::vector<Mat>& parts = it->second;
        while (!parts.empty() && parts.back().is_zero()) parts.pop_back();
        bool all_zero = true;
        for (const Mat& m : parts)
            if (!m.is_zero()) {
                all_zero = false;
                break;
            }
        if (all_zero)
            it = principal_.erase(it);
        else
            ++it;
    }
}

RationalMatrix RationalMatrix::constant(Mat m) {
    RationalMatrix out(m.rows(), m.cols());
    out.poly_.push_back(std::move(m));
    out.normalize();
    return out;
}

RationalMatrix RationalMatrix::monomial_w(Mat m, int degree) {
    if (degree < 0) throw dimension_error("monomial degree must be nonnegative");
    RationalMatrix out(m.rows(), m.cols());
    out.poly_.assign(static_cast<std::size_t>(degree) + 1, Mat(m.rows(), m.cols()));
    out.poly_.back() = std::move(m);
    out.normalize();
    return out;
}

RationalMatrix RationalMatrix::pole_term(Mat m, const Scalar& p, int j) {
    if (j < 1) throw dimension_error("pole order must be at least 1");
    RationalMatrix out(m.rows(), m.cols());
    std::vector<Mat> parts(static_cast<std::size_t>(j), Mat(m.rows(), m.cols()));
    parts.back() = std::move(m);
    out.principal_[p] = std::move(parts);
    out.normalize();
    return out;
}

long RationalMatrix::pole_order_at(const Scalar& p) const {
    auto it = principal_.find(p);
    return it == principal_.end() ? 0 : static_cast<long>(it->second.size());
}

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix out(rows_, cols_);
    for (const Mat& m : poly_) out.poly_.push_back(-m);
    for (const auto& [p, parts] : principal_) {
        std::vector<Mat> neg;
        for (const Mat& m : parts) neg.push_back(-m);
        out.principal_[p] = std::move(neg);
    }
    return out;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("rational matrix shape mismatch");
    if (poly_.size() < o.poly_.size()) poly_.resize(o.poly_.size(), Mat(rows_, cols_));
    for (std::size_t i = 0; i < o.poly_.size(); ++i) poly_[i] += o.poly_[i];
    for (const auto& [p, parts] : o.principal_) {
        std::vector<Mat>& mine = principal_.try_emplace(p).first->second;
        if (mine.size() < parts.size()) mine.resize(parts.size(), Mat(rows_, cols_));
        for (std::size_t j = 0; j < parts.size(); ++j) mine[j] += parts[j];
    }
    normalize();
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
    return *this += -o;
}

RationalMatrix operator*(const Scalar& c, const RationalMatrix& m) {
    RationalMatrix out(m.rows_, m.cols_);
    for (const Mat& p : m.poly_) out.poly_.push_back(c * p);
    for (const auto& [p, parts] : m.principal_) {
        std::vector<Mat> scaled;
        for (const Mat& x : parts) scaled.push_back(c * x);
        out.principal_[p] = std::move(scaled);
    }
    out.normalize();
    return out;
}

RationalMatrix RationalMatrix::left_mul(const Mat& m) const {
    RationalMatrix out(m.rows(), cols_);
    for (const Mat& p : poly_) out.poly_.push_back(m * p);
    for (const auto& [p, parts] : principal_) {
        std::vector<Mat> mapped;
        for (const Mat& x : parts) mapped.push_back(m * x);
        out.principal_[p] = std::move(mapped);
    }
    out.normalize();
    return out;
}

RationalMatrix RationalMatrix::right_mul(const Mat& m) const {
    RationalMatrix out(rows_, m.cols());
    for (const Mat& p : poly_) out.poly_.push_back(p * m);
    for (const auto& [p, parts] : principal_) {
        std::vector<Mat> mapped;
        for (const Mat& x : parts) mapped.push_back(x * m);
        out.principal_[p] = std::move(mapped);
    }
    out.normalize();
    return out;
}

// Multiply by the coordinate function w.
RationalMatrix RationalMatrix::mul_by_w() const {
    RationalMatrix out(rows_, cols_);
    // Polynomial part shifts one degree up.
    if (!poly_.empty()) {
        out.poly_.push_back(Mat(rows_, cols_));
        for (const Mat& m : poly_) out.poly_.push_back(m);
    }
    // C (w-p)^{-j} w = C (w-p)^{-(j-1)} + p C (w-p)^{-j}.
    for (const auto& [p, parts] : principal_) {
        for (std::size_t j1 = 1; j1 <= parts.size(); ++j1) {
            const Mat& c = parts[j1 - 1];
            if (c.is_zero()) continue;
            RationalMatrix drop = (j1 == 1) ? constant(c) : pole_term(c, p, static_cast<int>(j1) - 1);
            out += drop;
            out += pole_term(p * c, p, static_cast<int>(j1));
        }
    }
    out.normalize();
    return out;
}

// Multiply by (w-q)^{-1}.
RationalMatrix RationalMatrix::mul_by_simple_pole(const Scalar& q) const {
    RationalMatrix out(rows_, cols_);
    // w^t / (w-q) = sum_{s<t} q^{t-1-s} w^s + q^t (w-q)^{-1}.
    for (std::size_t t = 0; t < poly_.size(); ++t) {
        const Mat& m = poly_[t];
        if (m.is_zero()) continue;
        for (std::size_t s = 0; s < t; ++s)
            out += monomial_w(power(q, static_cast<long>(t - 1 - s)) * m, static_cast<int>(s));
        out += pole_term(power(q, static_cast<long>(t)) * m, q, 1);
    }
    // (w-p)^{-j} (w-q)^{-1}: same point deepens the pole; otherwise
    // 1/((w-q)^j (w-p)) = (p-q)^{-j}/(w-p) - sum_t (p-q)^{-(j-t+1)}/(w-q)^t
    // with the roles p <-> q read off the stored pole.
    for (const auto& [p, parts] : principal_) {
        for (std::size_t j1 = 1; j1 <= parts.size(); ++j1) {
            const Mat& c = parts[j1 - 1];
            if (c.is_zero()) continue;
            long j = static_cast<long>(j1);
            if (p == q) {
                out += pole_term(c, p, static_cast<int>(j + 1));
            } else {
                // C (w-p)^{-j} (w-q)^{-1} = (q-p)^{-j} C (w-q)^{-1}
                //   - sum_{t=1}^{j} (q-p)^{-(j-t+1)} C (w-p)^{-t}.
                Scalar dinv = (q - p).inverse();
                out += pole_term(power(dinv, j) * c, q, 1);
                for (long t = 1; t <= j; ++t)
                    out -= pole_term(power(dinv, j - t + 1) * c, p, static_cast<int>(t));
            }
        }
    }
    out.normalize();
    return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw dimension_error("rational matrix product shape mismatch");
    RationalMatrix out(a.rows_, b.cols_);
    // Expand b into scalar-function times constant-matrix terms; scalar
    // functions commute with everything.
    for (std::size_t t = 0; t < b.poly_.size(); ++t) {
        if (b.poly_[t].is_zero()) continue;
        RationalMatrix term = a.right_mul(b.poly_[t]);
        for (std::size_t s = 0; s < t; ++s) term = term.mul_by_w();
        out += term;
    }
    for (const auto& [p, parts] : b.principal_) {
        for (std::size_t j = 1; j <= parts.size(); ++j) {
            if (parts[j - 1].is_zero()) continue;
            RationalMatrix term = a.right_mul(parts[j - 1]);
            for (std::size_t s = 0; s < j; ++s) term = term.mul_by_simple_pole(p);
            out += term;
        }
    }
    out.normalize();
    return out;
}

RationalMatrix RationalMatrix::commutator(const RationalMatrix& o) const {
    return *this * o - o * *this;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && poly_ == o.poly_ && principal_ == o.principal_;
}

MatSeries RationalMatrix::localize(const Scalar& c, long lo, long hi) const {
    if (hi < lo) throw dimension_error("localization window is empty");
    const long width = hi - lo + 1;
    std::vector<Mat> coeffs(static_cast<std::size_t>(width), Mat(rows_, cols_));
    auto add = [&](long d, const Mat& m) {
        if (d >= lo && d <= hi) coeffs[static_cast<std::size_t>(d - lo)] += m;
    };

    // w^t = (c + z)^t.
    for (std::size_t t = 0; t < poly_.size(); ++t) {
        if (poly_[t].is_zero()) continue;
        for (long s = 0; s <= static_cast<long>(t); ++s)
            add(s, (binom(static_cast<long>(t), s) * power(c, static_cast<long>(t) - s)) * poly_[t]);
    }

    for (const auto& [p, parts] : principal_) {
        for (std::size_t j1 = 1; j1 <= parts.size(); ++j1) {
            const Mat& m = parts[j1 - 1];
            if (m.is_zero()) continue;
            long j = static_cast<long>(j1);
            if (p == c) {
                add(-j, m);
            } else {
                // (z - a)^{-j} with a = p - c expands to
                // sum_t (-1)^j binom(j+t-1, t) a^{-j-t} z^t.
                Scalar a = p - c;
                Scalar ainv = a.inverse();
                Scalar sign = (j % 2 == 0) ? Scalar(1) : Scalar(-1);
                for (long t = 0; t <= hi; ++t)
                    add(t, (sign * binom(j + t - 1, t) * power(ainv, j + t)) * m);
            }
        }
    }
    return MatSeries(lo, coeffs);
}

std::string RationalMatrix::str() const {
    std::ostringstream os;
    if (is_zero()) return "0\n";
    for (std::size_t t = 0; t < poly_.size(); ++t) {
        if (poly_[t].is_zero()) continue;
        os << "w^" << t << " *\n" << poly_[t].str();
    }
    for (const auto& [p, parts] : principal_) {
        for (std::size_t j = 1; j <= parts.size(); ++j) {
            if (parts[j - 1].is_zero()) continue;
            os << "(w - " << p.str() << ")^-" << j << " *\n" << parts[j - 1].str();
        }
    }
    return os.str();
}

}  // namespace matdiv
