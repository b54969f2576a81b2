#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "matdiv/error.hpp"

namespace matdiv {

// Gaussian rational a + b*i with exact rational parts.  This is the
// coefficient field everywhere: all linear algebra, series and rational
// function arithmetic is exact.
//
// Text form is "a/b+c/di" with integer shorthands, e.g. "1/2-3/4i", "2",
// "-i", "3i", "1+i".  Note "1/2i" means (1/2)*i.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    Scalar(const mpq_class& re) : re_(re), im_(0) { re_.canonicalize(); }
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
    static Scalar rational(long num, long den);
    static Scalar parse(std::string_view text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    Scalar inverse() const;

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    bool operator==(const Scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    mpq_class re_, im_;
};

// Total order (lexicographic on re, im); used for map keys, not algebra.
int compare(const Scalar& a, const Scalar& b);

struct ScalarLess {
    bool operator()(const Scalar& a, const Scalar& b) const { return compare(a, b) < 0; }
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// "n" or "n/d" for an exact rational.
std::string rational_str(const mpq_class& q);
mpq_class parse_rational(std::string_view token);

} // namespace matdiv
