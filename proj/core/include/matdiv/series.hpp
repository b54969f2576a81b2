#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matdiv/linalg.hpp"

namespace matdiv {

// Truncated Laurent series.  The invariant is a knowledge window: every
// coefficient of degree < horizon() is known exactly, everything below
// support_low() is known to be zero, and nothing is claimed at or above
// horizon().  Arithmetic propagates horizons pessimistically: a result
// never claims more coefficients than the operands certify.
class LaurentSeries {
public:
    LaurentSeries() : low_(0) {}
    // Coefficients for degrees low, low+1, ...; horizon = low + coeffs.size().
    LaurentSeries(long low, std::vector<Scalar> coeffs);

    static LaurentSeries zero(long horizon);
    static LaurentSeries constant(const Scalar& c, long horizon);
    static LaurentSeries monomial(const Scalar& c, long degree, long horizon);

    long horizon() const { return low_ + static_cast<long>(c_.size()); }
    // First possibly-nonzero degree; equals horizon() when zero in window.
    long support_low() const { return low_; }
    bool is_zero_window() const { return c_.empty(); }
    std::optional<long> valuation() const;

    bool knows(long d) const { return d < horizon(); }
    Scalar coeff(long d) const;

    LaurentSeries shifted(long k) const;
    LaurentSeries truncated(long new_horizon) const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const Scalar& c, const LaurentSeries& s);

    // Reciprocal; requires a certified nonzero leading coefficient.
    LaurentSeries inverse() const;

    // True iff the two series agree on every degree both windows know.
    bool equal_in_window(const LaurentSeries& o) const;

    std::string str() const;

private:
    long low_;
    std::vector<Scalar> c_; // degrees low_ .. low_+size-1
    void normalize();
};

// Matrix-valued truncated series with one common knowledge window.
class MatSeries {
public:
    MatSeries() : rows_(0), cols_(0), low_(0) {}
    MatSeries(long low, std::vector<Mat> coeffs);

    static MatSeries zero(int rows, int cols, long horizon);
    static MatSeries identity(int n, long horizon);
    static MatSeries constant(const Mat& m, long horizon);
    static MatSeries monomial(const Mat& m, long degree, long horizon);
    // Common window = min of entry horizons; entries may waive knowledge.
    static MatSeries from_entries(const std::vector<std::vector<LaurentSeries>>& grid);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long horizon() const { return low_ + static_cast<long>(c_.size()); }
    long support_low() const { return low_; }
    bool is_zero_window() const { return c_.empty(); }
    std::optional<long> valuation() const; // degree of first nonzero coefficient

    Mat coeff(long d) const;
    LaurentSeries entry(int i, int j) const;

    MatSeries shifted(long k) const;
    // Row i multiplied by z^{shift[i]} (per-row shifts, e.g. z^{-d} on the left).
    MatSeries row_shifted(const std::vector<long>& shifts) const;
    MatSeries truncated(long new_horizon) const;
    MatSeries transpose() const;

    MatSeries operator-() const;
    friend MatSeries operator+(const MatSeries& a, const MatSeries& b);
    friend MatSeries operator-(const MatSeries& a, const MatSeries& b);
    friend MatSeries operator*(const MatSeries& a, const MatSeries& b);
    friend MatSeries operator*(const LaurentSeries& q, const MatSeries& m);
    friend MatSeries operator*(const Scalar& c, const MatSeries& m);

    bool equal_in_window(const MatSeries& o) const;

    std::string str() const;

private:
    int rows_, cols_;
    long low_;
    std::vector<Mat> c_;
    void normalize();
};

// Exact inverse of a constant matrix (throws domain_error if singular).
Mat mat_inverse(const Mat& m);

// Diagonalization over the valuation ring: left * a * right equals
// diag(z^exponents) within the surviving window, with left and right
// invertible of valuation zero.  Exponents are sorted descending.
struct DvrDiagonal {
    std::vector<long> exponents;
    MatSeries left, right;
};
DvrDiagonal dvr_diagonalize(const MatSeries& a);

// Inverse over the Laurent field.  Uses the constant-term recursion when
// the leading coefficient is invertible, the diagonalization otherwise.
// Throws precision_error when no inverse is certifiable in the window.
MatSeries series_invert(const MatSeries& a);

} // namespace matdiv
