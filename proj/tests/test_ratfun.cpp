#include <doctest.h>

#include <matdiv/error.hpp>
#include <matdiv/ratfun.hpp>

#include <random>
#include <vector>

using matdiv::LaurentSeries;
using matdiv::Mat;
using matdiv::MatSeries;
using matdiv::RationalMatrix;
using matdiv::Scalar;

namespace {

Mat m2(long a, long b, long c, long d) {
    return Mat::of({{a, b}, {c, d}});
}

RationalMatrix random_ratfun(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> e(-2, 2);
    auto rnd = [&]() { return m2(e(rng), e(rng), e(rng), e(rng)); };
    RationalMatrix f = RationalMatrix::constant(rnd());
    f += RationalMatrix::monomial_w(rnd(), 1);
    f += RationalMatrix::pole_term(rnd(), Scalar(1), 1);
    f += RationalMatrix::pole_term(rnd(), Scalar(1), 2);
    f += RationalMatrix::pole_term(rnd(), Scalar(2), 1);
    return f;
}

}  // namespace

TEST_CASE("construction, normalization, bookkeeping") {
    Mat zero22(2, 2);
    CHECK(RationalMatrix::constant(zero22).is_zero());
    CHECK(RationalMatrix::pole_term(zero22, Scalar(3), 2).is_zero());

    RationalMatrix f = RationalMatrix::monomial_w(m2(1, 0, 0, 1), 2);
    CHECK(f.poly_degree() == 2);
    CHECK(f.pole_order_at(Scalar(1)) == 0);

    RationalMatrix g = RationalMatrix::pole_term(m2(1, 0, 0, 0), Scalar(1), 3);
    CHECK(g.pole_order_at(Scalar(1)) == 3);
    CHECK(g.poly_degree() == -1);

    // Cancellation drops the pole entirely.
    RationalMatrix diff = g - g;
    CHECK(diff.is_zero());
    CHECK(diff.pole_order_at(Scalar(1)) == 0);

    CHECK(f + g == g + f);
    CHECK((f - f).is_zero());
}

TEST_CASE("products against hand partial fractions") {
    Mat id = Mat::identity(2);

    // Same-point poles deepen.
    RationalMatrix p1 = RationalMatrix::pole_term(id, Scalar(1), 1);
    CHECK(p1 * p1 == RationalMatrix::pole_term(id, Scalar(1), 2));

    // 1/((w-1)(w-2)) = -1/(w-1) + 1/(w-2).
    RationalMatrix p2 = RationalMatrix::pole_term(id, Scalar(2), 1);
    RationalMatrix expect = RationalMatrix::pole_term(-id, Scalar(1), 1) +
                            RationalMatrix::pole_term(id, Scalar(2), 1);
    CHECK(p1 * p2 == expect);

    // w/(w-3) = 1 + 3/(w-3).
    RationalMatrix w = RationalMatrix::monomial_w(id, 1);
    RationalMatrix p3 = RationalMatrix::pole_term(id, Scalar(3), 1);
    CHECK(w * p3 == RationalMatrix::constant(id) + RationalMatrix::pole_term(Scalar(3) * id, Scalar(3), 1));

    // Matrix factors do not commute; scalar functions do.
    Mat x = m2(0, 1, 0, 0), y = m2(0, 0, 1, 0);
    RationalMatrix fx = RationalMatrix::pole_term(x, Scalar(1), 1);
    RationalMatrix fy = RationalMatrix::constant(y);
    CHECK(fx * fy != fy * fx);
    CHECK(fx * fy == RationalMatrix::pole_term(x * y, Scalar(1), 1));
    CHECK(fy * fx == RationalMatrix::pole_term(y * x, Scalar(1), 1));

    // [f, f] = 0 and constant commutators reduce to the matrix bracket.
    CHECK(fx.commutator(fx).is_zero());
    CHECK(RationalMatrix::constant(x).commutator(RationalMatrix::constant(y)) ==
          RationalMatrix::constant(x.commutator(y)));
}

TEST_CASE("localization windows") {
    Mat x = m2(1, 2, 3, 4);

    // Constants localize to constant jets.
    MatSeries jc = RationalMatrix::constant(x).localize(Scalar(5), -2, 3);
    CHECK(jc.coeff(0) == x);
    CHECK(jc.coeff(-1).is_zero());
    CHECK(jc.coeff(2).is_zero());

    // Pole at the expansion point comes out verbatim.
    MatSeries jp = RationalMatrix::pole_term(x, Scalar(5), 2).localize(Scalar(5), -3, 2);
    CHECK(jp.coeff(-2) == x);
    CHECK(jp.coeff(-1).is_zero());
    CHECK(jp.coeff(1).is_zero());

    // Simple pole elsewhere: coefficient of z^t is -(p-c)^{-1-t} X.
    MatSeries jg = RationalMatrix::pole_term(x, Scalar(2), 1).localize(Scalar(0), 0, 2);
    CHECK(jg.coeff(0) == Scalar::rational(-1, 2) * x);
    CHECK(jg.coeff(1) == Scalar::rational(-1, 4) * x);
    CHECK(jg.coeff(2) == Scalar::rational(-1, 8) * x);

    // Polynomial recentering: w^2 at c=1 is (1+z)^2.
    MatSeries jw = RationalMatrix::monomial_w(x, 2).localize(Scalar(1), 0, 2);
    CHECK(jw.coeff(0) == x);
    CHECK(jw.coeff(1) == Scalar(2) * x);
    CHECK(jw.coeff(2) == x);
}

TEST_CASE("localization is a ring map") {
    std::mt19937_64 rng(20260814);
    for (int trial = 0; trial < 8; ++trial) {
        RationalMatrix a = random_ratfun(rng);
        RationalMatrix b = random_ratfun(rng);
        RationalMatrix ab = a * b;
        for (Scalar c : {Scalar(1), Scalar(2), Scalar(0), Scalar::rational(1, 2)}) {
            MatSeries ja = a.localize(c, -6, 6);
            MatSeries jb = b.localize(c, -6, 6);
            MatSeries jab = ab.localize(c, -6, 6);
            CHECK((ja * jb).equal_in_window(jab));
            MatSeries jsum = (a + b).localize(c, -6, 6);
            CHECK((ja + jb).equal_in_window(jsum));
        }
    }
}
