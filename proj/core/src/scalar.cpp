#include "matdiv/scalar.hpp"

#include <cctype>
#include <ostream>

namespace matdiv {

Scalar Scalar::rational(long num, long den) {
    if (den == 0)
        throw domain_error("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::inverse() const {
    mpq_class n = norm();
    if (sgn(n) == 0)
        throw domain_error("division by zero scalar");
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    return *this *= o.inverse();
}

int compare(const Scalar& a, const Scalar& b) {
    int c = cmp(a.re(), b.re());
    if (c != 0)
        return c;
    return cmp(a.im(), b.im());
}

std::string rational_str(const mpq_class& q) {
    return q.get_str();
}

namespace {

bool valid_rational_token(std::string_view t) {
    if (t.empty())
        return false;
    std::size_t pos = 0;
    if (t[pos] == '+' || t[pos] == '-')
        ++pos;
    std::size_t digits = 0;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0)
        return false;
    if (pos == t.size())
        return true;
    if (t[pos] != '/')
        return false;
    ++pos;
    digits = 0;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
        ++pos;
        ++digits;
    }
    return digits > 0 && pos == t.size();
}

mpq_class parse_imag_token(std::string_view t) {
    // t still carries the trailing 'i'.
    std::string_view core = t.substr(0, t.size() - 1);
    if (core.empty() || core == "+")
        return 1;
    if (core == "-")
        return -1;
    return parse_rational(core);
}

} // namespace

mpq_class parse_rational(std::string_view token) {
    if (!valid_rational_token(token))
        throw parse_error("bad rational literal: '" + std::string(token) + "'");
    if (token.front() == '+')
        token.remove_prefix(1); // mpq_set_str rejects an explicit plus
    mpq_class q(std::string(token), 10);
    if (sgn(q.get_den()) == 0)
        throw parse_error("zero denominator in '" + std::string(token) + "'");
    q.canonicalize();
    return q;
}

Scalar Scalar::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    if (s.empty())
        throw parse_error("empty scalar literal");

    // Split "re±im i" at the last sign that follows a digit.
    std::size_t split = std::string_view::npos;
    for (std::size_t p = 1; p < s.size(); ++p) {
        if ((s[p] == '+' || s[p] == '-') &&
            std::isdigit(static_cast<unsigned char>(s[p - 1])))
            split = p;
    }

    if (split != std::string_view::npos) {
        std::string_view left = s.substr(0, split);
        std::string_view right = s.substr(split);
        if (right.back() != 'i')
            throw parse_error("expected imaginary second term in '" + std::string(text) + "'");
        return Scalar(parse_rational(left), parse_imag_token(right));
    }
    if (s.back() == 'i')
        return Scalar(mpq_class(0), parse_imag_token(s));
    return Scalar(parse_rational(s));
}

std::string Scalar::str() const {
    if (is_zero())
        return "0";
    std::string out;
    bool have_re = sgn(re_) != 0;
    if (have_re)
        out += rational_str(re_);
    if (sgn(im_) != 0) {
        if (im_ == 1)
            out += have_re ? "+i" : "i";
        else if (im_ == -1)
            out += "-i";
        else {
            if (have_re && sgn(im_) > 0)
                out += '+';
            out += rational_str(im_) + "i";
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
}

} // namespace matdiv
