#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "latang/oracle.hpp"
#include "oracles.hpp"

using namespace latang;

namespace {

IntVec random_vec(std::mt19937& rng, int dim, std::int64_t height) {
    std::uniform_int_distribution<std::int64_t> dist(-height, height);
    for (;;) {
        std::vector<Int> c;
        for (int i = 0; i < dim; ++i) c.push_back(dist(rng));
        IntVec v(std::move(c));
        if (!is_zero(v)) return v;
    }
}

}  // namespace

TEST_CASE("brute_force_witness on known instances") {
    auto w1 = brute_force_witness(IntVec{1, 1, 0}, AngleClass::oblique(3), 5);
    REQUIRE(w1.has_value());
    CHECK(*w1 == IntVec{0, 1, 1});

    CHECK_FALSE(brute_force_witness(IntVec{1, 0, 0}, AngleClass::oblique(3), 50).has_value());
    CHECK_FALSE(brute_force_witness(IntVec{1, 0, 0}, AngleClass::oblique(3, true), 50).has_value());

    auto w3 = brute_force_witness(IntVec{1, 2, 0}, AngleClass::oblique(1), 5);
    REQUIRE(w3.has_value());
    CHECK(*w3 == IntVec{3, 1, 0});

    CHECK_THROWS_AS(brute_force_witness(IntVec{0, 0, 0}, AngleClass::right(), 5), std::invalid_argument);
}

TEST_CASE("brute_force_witness handles degenerate classes and scaled bases") {
    IntVec a{2, 2, 0};
    auto z = brute_force_witness(a, AngleClass::zero(), 3);
    REQUIRE(z.has_value());
    CHECK(*z == IntVec{1, 1, 0});
    auto s = brute_force_witness(a, AngleClass::straight(), 3);
    REQUIRE(s.has_value());
    CHECK(*s == IntVec{-1, -1, 0});
    auto r = brute_force_witness(a, AngleClass::right(), 3);
    REQUIRE(r.has_value());
    CHECK(dot(a, *r) == 0);
}

TEST_CASE("brute force always rediscovers an angle it was given") {
    std::mt19937 rng(9201);
    for (int dim : {2, 3, 4}) {
        for (int i = 0; i < 60; ++i) {
            IntVec a = random_vec(rng, dim, 4);
            IntVec b = random_vec(rng, dim, 4);
            AngleClass angle = angle_between(a, b);
            auto w = brute_force_witness(a, angle, 4);
            REQUIRE(w.has_value());
            CHECK(angle_between(a, *w) == angle);
        }
    }
}

TEST_CASE("angle_inventory of the unit vector in the plane") {
    AngleInventory inv = angle_inventory(IntVec{1, 0}, 1);
    REQUIRE(inv.classes.size() == 5);
    std::vector<AngleClass> expected{AngleClass::zero(), AngleClass::oblique(1, false),
                                     AngleClass::right(), AngleClass::oblique(1, true),
                                     AngleClass::straight()};
    std::size_t i = 0;
    for (const auto& [angle, vectors] : inv.classes) {
        CHECK(angle == expected[i++]);
        for (const IntVec& v : vectors) {
            CHECK(is_primitive(v));
            CHECK(angle_between(inv.base, v) == angle);
        }
    }
    CHECK(inv.classes.at(AngleClass::right()).size() == 2);
    CHECK(inv.classes.at(AngleClass::zero()) == std::vector<IntVec>{IntVec{1, 0}});
}

TEST_CASE("angle_inventory always contains the degenerate classes") {
    std::mt19937 rng(9202);
    for (int i = 0; i < 20; ++i) {
        IntVec a = random_vec(rng, 3, 2);
        AngleInventory inv = angle_inventory(a, 3);
        CHECK(inv.classes.count(AngleClass::zero()) == 1);
        CHECK(inv.classes.count(AngleClass::right()) == 1);
        CHECK(inv.classes.count(AngleClass::straight()) == 1);
    }
}

TEST_CASE("angle_inventory of (1,1,1) has no 45-degree class") {
    AngleInventory inv = angle_inventory(IntVec{1, 1, 1}, 3);
    CHECK(inv.classes.count(AngleClass::oblique(1, false)) == 0);
    CHECK(inv.classes.count(AngleClass::oblique(1, true)) == 0);
    // consistent with the criterion at norm 3
    CHECK_FALSE(symbol_criterion(3, 1).member);
}

TEST_CASE("angle_inventory is closed under supplements") {
    std::mt19937 rng(9203);
    for (int i = 0; i < 10; ++i) {
        IntVec a = random_vec(rng, 3, 2);
        AngleInventory inv = angle_inventory(a, 3);
        for (const auto& [angle, vectors] : inv.classes) {
            auto sup = inv.classes.find(angle.supplement());
            REQUIRE(sup != inv.classes.end());
            CHECK(sup->second.size() == vectors.size());
        }
    }
}

TEST_CASE("consistency_report at desk scale in dimension 3") {
    ConsistencyReport rep = consistency_report(3, 2, 10, 50);
    CHECK(rep.ok());
    CHECK(rep.violations.empty());
    CHECK(rep.budget_exhausted.empty());
    // 124 bases, 7 square-free classes up to 10, both obtuse flags
    CHECK(rep.instances == 124 * 7 * 2);
    CHECK(rep.witnesses_constructed == rep.member_instances);
    // at this box every member class is realized inside the box as well
    CHECK(rep.oracle_hits == rep.member_instances);
}

TEST_CASE("consistency_report in dimension 2") {
    ConsistencyReport rep = consistency_report(2, 3, 10, 30);
    CHECK(rep.ok());
    CHECK(rep.budget_exhausted.empty());
    CHECK(rep.instances == 48 * 7 * 2);
    // only tan^2 = 1 is a square among square-free classes
    CHECK(rep.member_instances == 48 * 2);
    CHECK(rep.witnesses_constructed == rep.member_instances);
}

TEST_CASE("consistency_report in dimension 4") {
    ConsistencyReport rep = consistency_report(4, 2, 10, 6);
    CHECK(rep.ok());
    CHECK(rep.budget_exhausted.empty());
    CHECK(rep.witnesses_constructed == rep.member_instances);
    // Theta_4 drops exactly the 7 mod 8 class among square-free t <= 10
    CHECK(rep.member_instances == 624 * 6 * 2);
}

TEST_CASE("consistency_report rejects out-of-range dimensions") {
    CHECK_THROWS_AS(consistency_report(1, 2, 5, 5), std::invalid_argument);
    CHECK_THROWS_AS(consistency_report(7, 2, 5, 5), std::invalid_argument);
}
