#include <doctest.h>

#include <matdiv/realization.hpp>

using matdiv::AlgebraForm;
using matdiv::CoweightH;
using matdiv::Family;
using matdiv::Mat;
using matdiv::ModuleTag;
using matdiv::Realization;
using matdiv::Scalar;
using matdiv::Subspace;

namespace {

CoweightH cw(std::vector<std::string> entries) {
    return CoweightH::parse(entries);
}

Mat realize_coweight(const Realization& r, const CoweightH& h) {
    auto coords = r.coweight_coordinates(h);
    auto basis = r.algebra_basis();
    Mat m(r.module_dim, r.module_dim);
    for (std::size_t i = 0; i < coords.size(); ++i)
        m += coords[i] * basis[i];
    return m;
}

} // namespace

TEST_CASE("algebra dimensions and faithfulness") {
    struct Row {
        const char* tag;
        AlgebraForm form;
        int dim;
        int module;
    };
    for (Row row : {Row{"A1d", AlgebraForm::gl, 4, 2}, Row{"A2d", AlgebraForm::gl, 9, 3},
                    Row{"A2d", AlgebraForm::sl, 8, 3}, Row{"A1adj", AlgebraForm::standard, 3, 3},
                    Row{"B2d", AlgebraForm::standard, 10, 5}, Row{"B3d", AlgebraForm::standard, 21, 7},
                    Row{"C2d", AlgebraForm::standard, 10, 4}, Row{"C3d", AlgebraForm::standard, 21, 6},
                    Row{"D2d", AlgebraForm::standard, 6, 4}, Row{"D3d", AlgebraForm::standard, 15, 6}}) {
        Realization r = Realization::from_tag(row.tag, row.form);
        CHECK(r.algebra_dim() == row.dim);
        CHECK(r.module_dim == row.module);
        CHECK(r.module_weights.size() == static_cast<std::size_t>(row.module));

        // realization map injective on the basis
        std::vector<std::vector<Scalar>> flat;
        for (const Mat& m : r.algebra_basis())
            flat.push_back(m.flatten());
        Subspace span = Subspace::span_of_vectors(flat, row.module * row.module);
        CHECK(span.dim() == row.dim);
    }
}

TEST_CASE("cartan commutator identity [h, x_a] = a(h) x_a") {
    for (const char* tag : {"A2d", "B2d", "C2d", "D3d", "A1adj"}) {
        Realization r = Realization::from_tag(tag);
        std::vector<long> ones(static_cast<std::size_t>(r.rs.rank), 1);
        std::vector<long> mixed(static_cast<std::size_t>(r.rs.rank), 0);
        mixed[0] = 2;
        if (r.rs.rank > 1)
            mixed[1] = 1;
        for (const auto& p : {ones, mixed}) {
            CoweightH h = r.coweight_from_simple_values(p);
            Mat hm = realize_coweight(r, h);
            for (std::size_t a = 0; a < r.root_order.size(); ++a) {
                mpq_class v = 0;
                for (std::size_t i = 0; i < h.eps.size(); ++i)
                    v += r.root_order[a].eps[i] * h.eps[i];
                Mat lhs = hm.commutator(r.root_vectors[a]);
                Mat rhs = Scalar(v) * r.root_vectors[a];
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("bracket of root vectors lands in the sum root space") {
    for (const char* tag : {"A2d", "B2d", "C2d", "D3d"}) {
        Realization r = Realization::from_tag(tag);
        for (std::size_t a = 0; a < r.root_order.size(); ++a)
            for (std::size_t b = 0; b < r.root_order.size(); ++b) {
                matdiv::Root sum = r.root_order[a] + r.root_order[b];
                if (!r.rs.contains(sum))
                    continue;
                Mat c = r.root_vectors[a].commutator(r.root_vectors[b]);
                CHECK_FALSE(c.is_zero());
                std::size_t s = 0;
                while (!(r.root_order[s] == sum))
                    ++s;
                Subspace line = Subspace::span_of_vectors({r.root_vectors[s].flatten()},
                                                          r.module_dim * r.module_dim);
                CHECK(line.contains(c.flatten()));
            }
    }
}

TEST_CASE("invariant bilinear form annihilates so and sp realizations") {
    for (const char* tag : {"B2d", "B3d", "D2d", "D3d"}) {
        Realization r = Realization::from_tag(tag);
        int n = r.module_dim;
        Mat s(n, n);
        for (int i = 0; i < n; ++i)
            s.at(i, n - 1 - i) = Scalar(1);
        for (const Mat& x : r.algebra_basis())
            CHECK((x.transpose() * s + s * x).is_zero());
    }
    for (const char* tag : {"C2d", "C3d"}) {
        Realization r = Realization::from_tag(tag);
        int n = r.module_dim;
        Mat omega(n, n);
        for (int i = 0; i < n / 2; ++i) {
            omega.at(i, n - 1 - i) = Scalar(1);
            omega.at(n - 1 - i, i) = Scalar(-1);
        }
        for (const Mat& x : r.algebra_basis())
            CHECK((x.transpose() * omega + omega * x).is_zero());
    }
}

TEST_CASE("root vectors are traceless and defining weights of B/C/D negate") {
    for (const char* tag : {"A2d", "B2d", "C3d", "D3d"}) {
        Realization r = Realization::from_tag(tag);
        for (const Mat& x : r.root_vectors) {
            Scalar tr;
            for (int i = 0; i < r.module_dim; ++i)
                tr += x.at(i, i);
            CHECK(tr.is_zero());
        }
        if (r.rs.family == Family::A)
            continue;
        for (const auto& mu : r.module_weights) {
            std::vector<mpq_class> neg;
            for (const auto& q : mu)
                neg.push_back(-q);
            CHECK(std::find(r.module_weights.begin(), r.module_weights.end(), neg) != r.module_weights.end());
        }
    }
}

TEST_CASE("sl(2) defining and adjoint weight values") {
    Realization def = Realization::from_tag("A1d", AlgebraForm::sl);
    CoweightH coroot = cw({"1", "-1"});
    std::vector<mpq_class> vals;
    for (const auto& mu : def.module_weights)
        vals.push_back(def.weight_value(mu, coroot));
    CHECK(vals == std::vector<mpq_class>{1, -1});

    Realization adj = Realization::from_tag("A1adj");
    vals.clear();
    for (const auto& mu : adj.module_weights)
        vals.push_back(adj.weight_value(mu, coroot));
    CHECK(vals == std::vector<mpq_class>{2, 0, -2});
}

TEST_CASE("dual lattice membership (sl(2) example)") {
    Realization def = Realization::from_tag("A1d", AlgebraForm::sl);
    Realization adj = Realization::from_tag("A1adj");
    CoweightH coroot = cw({"1", "-1"});
    CoweightH half = cw({"1/2", "-1/2"});
    CHECK(def.dual_lattice_check(coroot));
    CHECK(adj.dual_lattice_check(half));
    CHECK_FALSE(def.dual_lattice_check(half));
    CHECK(def.integral(half)); // still a valid grading element
}

TEST_CASE("root pairing values") {
    Realization gl3 = Realization::build(Family::A, 2, ModuleTag::defining);
    CoweightH h = cw({"1", "0", "0"});
    for (const auto& a : gl3.rs.positive)
        if (a.eps[0] == 1)
            CHECK(gl3.pair(a, h) == 1);

    Realization sp4 = Realization::build(Family::C, 2, ModuleTag::defining);
    CoweightH h2 = cw({"1", "0"});
    CHECK(sp4.pair(matdiv::Root{{2, 0}}, h2) == 2);
    CHECK(sp4.pair(matdiv::Root{{1, 1}}, h2) == 1);
    CHECK(sp4.pair(matdiv::Root{{-1, 1}}, h2) == -1);
    CHECK_THROWS_AS(sp4.pair(matdiv::Root{{1, 0, 0}}, h), matdiv::domain_error);
}

TEST_CASE("coweight reconstruction from simple values") {
    Realization gl2 = Realization::from_tag("A1d", AlgebraForm::gl);
    CHECK(gl2.coweight_from_simple_values({1}) == cw({"1", "0"}));
    Realization sl2 = Realization::from_tag("A1d", AlgebraForm::sl);
    CHECK(sl2.coweight_from_simple_values({1}) == cw({"1/2", "-1/2"}));
    Realization c2 = Realization::from_tag("C2d");
    CHECK(c2.coweight_from_simple_values({0, 1}) == cw({"1/2", "1/2"}));
    CHECK_FALSE(c2.dual_lattice_check(c2.coweight_from_simple_values({0, 1})));
    CHECK(c2.coweight_from_simple_values({1, 0}) == cw({"1", "0"}));
    Realization b2 = Realization::from_tag("B2d");
    CHECK(b2.coweight_from_simple_values({0, 1}) == cw({"1", "1"}));
}

TEST_CASE("coweight matrix is the realized Cartan element") {
    for (const char* tag : {"A2d", "B2d", "C2d", "D3d", "A1adj"}) {
        Realization r = Realization::from_tag(tag);
        std::vector<long> p(static_cast<std::size_t>(r.rs.rank), 1);
        CoweightH h = r.coweight_from_simple_values(p);
        CHECK(realize_coweight(r, h) == r.coweight_matrix(h));
    }
    Realization gl2 = Realization::from_tag("A1d", AlgebraForm::gl);
    CoweightH h = cw({"1", "0"});
    Mat want = Mat::of({{1, 0}, {0, 0}});
    CHECK(gl2.coweight_matrix(h) == want);
    CHECK(gl2.chi_value(h) == 1);
}

TEST_CASE("configuration errors") {
    CHECK_THROWS_AS(Realization::build(Family::B, 2, ModuleTag::adjoint), matdiv::config_error);
    CHECK_THROWS_AS(Realization::build(Family::B, 2, ModuleTag::defining, AlgebraForm::sl), matdiv::config_error);
    CHECK_THROWS_AS(Realization::build(Family::A, 1, ModuleTag::adjoint, AlgebraForm::gl), matdiv::config_error);
    CHECK_THROWS_AS(Realization::from_tag("E8d"), matdiv::config_error);
    CHECK_THROWS_AS(Realization::from_tag("A1x"), matdiv::config_error);
    Realization sl2 = Realization::from_tag("A1d", AlgebraForm::sl);
    CHECK_THROWS_AS(sl2.check_coweight(cw({"1", "0"})), matdiv::domain_error);
}
