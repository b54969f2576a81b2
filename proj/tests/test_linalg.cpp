#include <doctest.h>

#include <matdiv/linalg.hpp>

using matdiv::Mat;
using matdiv::Scalar;
using matdiv::Subspace;

TEST_CASE("rref with exact pivots") {
    // [[1,2,3],[2,4,7],[1,2,4]] has rank 2, pivots in columns 0 and 2.
    Mat m = Mat::of({{1, 2, 3}, {2, 4, 7}, {1, 2, 4}});
    auto rr = matdiv::rref(m);
    CHECK(rr.rank == 2);
    CHECK(rr.pivots == std::vector<int>{0, 2});
    Mat want = Mat::of({{1, 2, 0}, {0, 0, 1}, {0, 0, 0}});
    CHECK(rr.reduced == want);
}

TEST_CASE("rank and inverse-style composition") {
    Mat a = Mat::of({{0, 1}, {1, 0}});
    CHECK(matdiv::rank_of(a) == 2);
    CHECK(matdiv::rank_of(Mat::of({{1, 2}, {2, 4}})) == 1);
    CHECK(matdiv::rank_of(Mat(3, 3)) == 0);
}

TEST_CASE("nullspace oracle") {
    // Kernel of [[1,2,3],[2,4,6]] is 2-dimensional, spanned by (-2,1,0),(-3,0,1).
    Mat m = Mat::of({{1, 2, 3}, {2, 4, 6}});
    Subspace ker = matdiv::nullspace(m);
    CHECK(ker.dim() == 2);
    CHECK(ker.contains({Scalar(-2), Scalar(1), Scalar(0)}));
    CHECK(ker.contains({Scalar(-3), Scalar(0), Scalar(1)}));
    CHECK_FALSE(ker.contains({Scalar(1), Scalar(0), Scalar(0)}));
    for (const auto& row : std::vector<std::vector<Scalar>>{{Scalar(-2), Scalar(1), Scalar(0)}}) {
        auto img = m.apply(row);
        for (const auto& x : img)
            CHECK(x.is_zero());
    }
}

TEST_CASE("subspace lattice") {
    Subspace e1 = Subspace::span_of_vectors({{Scalar(1), Scalar(0), Scalar(0)}}, 3);
    Subspace e12 = Subspace::span_of_vectors({{Scalar(1), Scalar(1), Scalar(0)}, {Scalar(1), Scalar(-1), Scalar(0)}}, 3);
    CHECK(e12.dim() == 2);
    CHECK(e12.contains(e1));
    CHECK_FALSE(e1.contains(e12));

    Subspace e23 = Subspace::span_of_vectors({{Scalar(0), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}}, 3);
    Subspace meet = e12.intersect(e23);
    CHECK(meet.dim() == 1);
    CHECK(meet.contains({Scalar(0), Scalar(5), Scalar(0)}));

    Subspace join = e1.sum(e23);
    CHECK(join == Subspace::full(3));
    CHECK(e12.sum(e12) == e12);

    // dim U + dim W = dim(U+W) + dim(U∩W)
    CHECK(e12.dim() + e23.dim() == join.dim() + meet.dim());
}

TEST_CASE("subspace transform and annihilator") {
    Subspace e1 = Subspace::span_of_vectors({{Scalar(1), Scalar(0)}}, 2);
    Mat swap = Mat::of({{0, 1}, {1, 0}});
    Subspace e2 = e1.transformed(swap);
    CHECK(e2.contains({Scalar(0), Scalar(3)}));
    CHECK_FALSE(e2.contains({Scalar(1), Scalar(0)}));

    Subspace ann = e1.annihilator();
    CHECK(ann.dim() == 1);
    CHECK(ann.contains({Scalar(0), Scalar(1)}));
}

TEST_CASE("matrix block operations") {
    Mat a = Mat::of({{1, 2}, {3, 4}});
    Mat b = Mat::of({{5, 6}, {7, 8}});
    Mat ab = a * b;
    CHECK(ab == Mat::of({{19, 22}, {43, 50}}));
    CHECK(Mat::vstack(a, b).rows() == 4);
    CHECK(Mat::hstack(a, b).cols() == 4);
    CHECK(Mat::hstack(a, b).submatrix(0, 2, 2, 2) == b);
    CHECK(a.transpose().transpose() == a);
    Mat comm = Mat::of({{0, 1}, {0, 0}}).commutator(Mat::of({{0, 0}, {1, 0}}));
    CHECK(comm == Mat::of({{1, 0}, {0, -1}}));
}

TEST_CASE("flatten round trip") {
    Mat a = Mat::of({{1, 2, 3}, {4, 5, 6}});
    auto v = a.flatten();
    CHECK(v.size() == 6);
    CHECK(Mat::unflatten(v, 2, 3) == a);
}
