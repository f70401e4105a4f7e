#include "doctest.h"
#include "helpers.hpp"

using namespace petit;

TEST_CASE("rref, rank and inverse over GF(2)") {
    Mat m(3, 3, 2);
    m.at(0, 0) = 1; m.at(0, 1) = 1;
    m.at(1, 1) = 1; m.at(1, 2) = 1;
    m.at(2, 0) = 1; m.at(2, 2) = 1;
    CHECK(m.rank() == 2);
    CHECK_FALSE(m.inverse().has_value());

    Mat id = Mat::identity(3, 2);
    CHECK(id.inverse().has_value());
    CHECK(*id.inverse() == id);
}

TEST_CASE("solve and nullspace over GF(3)") {
    Mat m(2, 3, 3);
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 1;
    m.at(1, 1) = 1; m.at(1, 2) = 2;
    Mat ns = m.nullspace();
    CHECK(ns.rows() == 1);
    for (int i = 0; i < ns.rows(); ++i) CHECK(is_zero_coords(m.apply(ns.row(i))));

    Coords b = {2, 1};
    auto x = m.solve(b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);
}

TEST_CASE("matrix powers and application") {
    Mat shift(2, 2, 5);
    shift.at(0, 1) = 1;
    shift.at(1, 0) = 1;
    CHECK(shift.pow(2) == Mat::identity(2, 5));
    CHECK(shift.apply(Coords{3, 4}) == Coords{4, 3});
}

TEST_CASE("subspace span, intersection and membership") {
    Subspace a = Subspace::span({{1, 0, 1, 0}, {0, 1, 0, 0}}, 4, 2);
    Subspace b = Subspace::span({{1, 0, 1, 0}, {0, 0, 0, 1}}, 4, 2);
    CHECK(a.dim() == 2);
    CHECK(a.contains(Coords{1, 1, 1, 0}));
    CHECK_FALSE(a.contains(Coords{1, 0, 0, 0}));

    Subspace cap = a.intersect(b);
    CHECK(cap.dim() == 1);
    CHECK(cap.contains(Coords{1, 0, 1, 0}));

    Subspace sum = a.sum(b);
    CHECK(sum.dim() == 3);

    CHECK(Subspace::full(4, 2).contains(a));
    CHECK(a.enumerate().size() == 4);
}

TEST_CASE("subspace equality is representation equality") {
    Subspace a = Subspace::span({{1, 1}, {0, 1}}, 2, 2);
    Subspace b = Subspace::span({{0, 1}, {1, 0}}, 2, 2);
    CHECK(a == b);
}

TEST_CASE("scalar helpers") {
    CHECK(mod_p(-1, 5) == 4);
    CHECK(inv_mod_p(2, 5) == 3);
    CHECK(add_coords({1, 2}, {2, 2}, 3) == Coords{0, 1});
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(9));
}
