#pragma once

#include <matdiv/linalg.hpp>
#include <matdiv/scalar.hpp>
#include <matdiv/series.hpp>

#include <map>
#include <string>
#include <vector>

namespace matdiv {

// Total order on scalars (lexicographic on real then imaginary part) so they
// can key a map; no arithmetic meaning.
// Matrix-valued rational function of the global coordinate w in exact
// partial-fraction form: polynomial part plus, per pole p, the principal
// part sum_j C_{p,j} (w-p)^{-j}.  Closed under ring operations; every local
// Laurent window is computable exactly.
class RationalMatrix {
  public:
    using Principal = std::map<Scalar, std::vector<Mat>, ScalarLess>;

    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    static RationalMatrix constant(Mat m);
    static RationalMatrix monomial_w(Mat m, int degree);             // m w^degree
    static RationalMatrix pole_term(Mat m, const Scalar& p, int j);  // m (w-p)^{-j}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // Coefficients of w^0, w^1, ...; trailing zeros stripped.
    const std::vector<Mat>& poly() const { return poly_; }
    // p -> coefficients of (w-p)^{-1}, (w-p)^{-2}, ...; empty lists stripped.
    const Principal& principal() const { return principal_; }

    bool is_zero() const { return poly_.empty() && principal_.empty(); }
    long poly_degree() const { return static_cast<long>(poly_.size()) - 1; }
    long pole_order_at(const Scalar& p) const;

    RationalMatrix operator-() const;
    RationalMatrix& operator+=(const RationalMatrix& o);
    RationalMatrix& operator-=(const RationalMatrix& o);
    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
    friend RationalMatrix operator*(const Scalar& c, const RationalMatrix& m);
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

    RationalMatrix left_mul(const Mat& m) const;   // m * this
    RationalMatrix right_mul(const Mat& m) const;  // this * m

    RationalMatrix commutator(const RationalMatrix& o) const;

    bool operator==(const RationalMatrix& o) const;
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

    // Exact Laurent window [lo, hi] in the local coordinate z = w - c.
    MatSeries localize(const Scalar& c, long lo, long hi) const;

    std::string str() const;

  private:
    int rows_, cols_;
    std::vector<Mat> poly_;
    Principal principal_;

    void normalize();
    RationalMatrix mul_by_w() const;
    RationalMatrix mul_by_simple_pole(const Scalar& q) const;
};

}  // namespace matdiv
