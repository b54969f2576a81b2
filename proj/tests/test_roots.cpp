#include <doctest.h>

#include <matdiv/roots.hpp>

using matdiv::Family;
using matdiv::Root;
using matdiv::RootSystem;

TEST_CASE("root counts per family") {
    CHECK(RootSystem::build(Family::A, 1).roots.size() == 2);
    CHECK(RootSystem::build(Family::A, 2).roots.size() == 6);
    CHECK(RootSystem::build(Family::A, 3).roots.size() == 12);
    CHECK(RootSystem::build(Family::B, 2).roots.size() == 8);
    CHECK(RootSystem::build(Family::B, 3).roots.size() == 18);
    CHECK(RootSystem::build(Family::C, 2).roots.size() == 8);
    CHECK(RootSystem::build(Family::C, 3).roots.size() == 18);
    CHECK(RootSystem::build(Family::D, 2).roots.size() == 4);
    CHECK(RootSystem::build(Family::D, 3).roots.size() == 12);
    CHECK(RootSystem::build(Family::D, 4).roots.size() == 24);
    CHECK_THROWS_AS(RootSystem::build(Family::D, 1), matdiv::config_error);
}

TEST_CASE("roots split into positive and negative halves") {
    for (auto [fam, rank] : {std::pair{Family::A, 2}, {Family::B, 3}, {Family::C, 2}, {Family::D, 3}}) {
        RootSystem rs = RootSystem::build(fam, rank);
        CHECK(rs.positive.size() * 2 == rs.roots.size());
        CHECK(rs.simple.size() == static_cast<std::size_t>(rank));
        for (const Root& r : rs.positive) {
            CHECK(rs.contains(r));
            CHECK(rs.contains(-r));
            CHECK_FALSE(rs.is_positive(-r));
        }
        // duplicate-free
        for (std::size_t i = 0; i < rs.roots.size(); ++i)
            for (std::size_t j = i + 1; j < rs.roots.size(); ++j)
                CHECK_FALSE(rs.roots[i] == rs.roots[j]);
    }
}

TEST_CASE("positive roots are nonnegative combinations of simple roots") {
    for (auto [fam, rank] : {std::pair{Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}}) {
        RootSystem rs = RootSystem::build(fam, rank);
        for (const Root& r : rs.positive) {
            auto coords = rs.simple_coordinates(r);
            Root rebuilt;
            rebuilt.eps.assign(static_cast<std::size_t>(rs.eps_dim), 0);
            for (std::size_t i = 0; i < coords.size(); ++i) {
                CHECK(coords[i] >= 0);
                for (std::size_t t = 0; t < rebuilt.eps.size(); ++t)
                    rebuilt.eps[t] += coords[i] * rs.simple[i].eps[t];
            }
            CHECK(rebuilt == r);
        }
    }
}

TEST_CASE("specific root sets") {
    RootSystem c2 = RootSystem::build(Family::C, 2);
    CHECK(c2.contains(Root{{2, 0}}));
    CHECK(c2.contains(Root{{1, 1}}));
    CHECK(c2.contains(Root{{1, -1}}));
    CHECK_FALSE(c2.contains(Root{{1, 0}}));

    RootSystem b2 = RootSystem::build(Family::B, 2);
    CHECK(b2.contains(Root{{1, 0}}));
    CHECK_FALSE(b2.contains(Root{{2, 0}}));

    RootSystem d3 = RootSystem::build(Family::D, 3);
    CHECK(d3.contains(Root{{1, 1, 0}}));
    CHECK_FALSE(d3.contains(Root{{1, 0, 0}}));
}
