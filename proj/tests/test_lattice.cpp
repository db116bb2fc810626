#include <doctest.h>

#include <set>

#include "mcgcoh/errors.hpp"
#include "mcgcoh/lattice.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace mcgcoh;
using mcgcoh::testing::Gen;

namespace {

const Genus g3{3};

HomologyClass cls(std::vector<std::int64_t> c) {
    const Genus g(static_cast<int>(c.size() / 2));
    return HomologyClass(g, std::move(c));
}

HomologyClass x(int j) { return HomologyClass::x(g3, j); }
HomologyClass y(int j) { return HomologyClass::y(g3, j); }

}  // namespace

TEST_CASE("genus below three is rejected") {
    CHECK_THROWS_AS(Genus(2), DomainError);
    CHECK_NOTHROW(Genus(3));
    CHECK_THROWS_AS(HomologyClass(g3, {1, 0, 0, 0}), DimensionError);
}

TEST_CASE("intersection") {
    CHECK(intersection(x(1), y(1)) == 1);
    CHECK(intersection(y(1), x(1)) == -1);
    CHECK(intersection(x(1), x(2)) == 0);
    CHECK(intersection(x(1), y(2)) == 0);
    CHECK(intersection(y(2), y(3)) == 0);

    SUBCASE("self pairing vanishes") {
        Gen gen(11);
        for (int i = 0; i < 50; ++i) {
            auto m = gen.homology(g3, 30);
            CHECK(intersection(m, m) == 0);
        }
    }
    SUBCASE("x1 + 2 y2 against y1 by bilinear expansion") {
        auto m = x(1) + 2 * y(2);
        CHECK(mcgcoh::testing::pairing_oracle(mcgcoh::testing::coords_of(m), mcgcoh::testing::coords_of(y(1))) == 1);
        CHECK(intersection(m, y(1)) == 1);
    }
    SUBCASE("genus mismatch") {
        CHECK_THROWS_AS(intersection(x(1), HomologyClass::x(Genus(4), 1)), DimensionError);
    }
}

TEST_CASE("intersection is bilinear and antisymmetric on random triples") {
    Gen gen(1);
    for (int i = 0; i < 1000; ++i) {
        auto a = gen.homology(g3, 20), b = gen.homology(g3, 20), c = gen.homology(g3, 20);
        const std::int64_t k = gen.integer(-5, 5);
        REQUIRE(intersection(a, b) == -intersection(b, a));
        REQUIRE(intersection(a + b, c) == intersection(a, c) + intersection(b, c));
        REQUIRE(intersection(a, k * c) == k * intersection(a, c));
        REQUIRE(intersection(a, b) ==
                mcgcoh::testing::pairing_oracle(mcgcoh::testing::coords_of(a), mcgcoh::testing::coords_of(b)));
    }
}

TEST_CASE("norm1") {
    CHECK(norm1(cls({1, -2, 0, 3, 0, 0})) == 6);
    CHECK(norm1(HomologyClass(g3)) == 0);
    CHECK(norm1(x(1) + y(1)) == 2);
}

TEST_CASE("transvect") {
    CHECK(transvect(x(1), 1, x(1)) == x(1));
    CHECK(transvect(x(1), 1, y(1)) == y(1) + x(1));
    CHECK(transvect(y(1), -1, 2 * x(1) + 3 * y(1)) == 2 * x(1) + 5 * y(1));

    Gen gen(2);
    for (int i = 0; i < 500; ++i) {
        auto c = gen.homology(g3, 8), m = gen.homology(g3, 15);
        const std::int64_t n = gen.integer(-6, 6), k = gen.integer(-6, 6);
        // orientation of c is irrelevant
        REQUIRE(transvect(-c, n, m) == transvect(c, n, m));
        REQUIRE(transvect(c, n + k, m) == transvect(c, n, transvect(c, k, m)));
    }
}

TEST_CASE("twist_matrix") {
    SUBCASE("x1 acts as (a, b) -> (a + b, b) on the first block") {
        auto t = twist_matrix(x(1));
        CHECK(t(0, 0) == 1);
        CHECK(t(0, 1) == 1);
        CHECK(t(1, 0) == 0);
        CHECK(t(1, 1) == 1);
        for (std::size_t r = 2; r < 6; ++r) CHECK(t(r, r) == 1);
    }
    SUBCASE("zero class gives the identity") { CHECK(twist_matrix(HomologyClass(g3)).is_identity()); }
    SUBCASE("inverse") {
        auto t = twist_matrix(x(1) + 3 * y(2) - y(3));
        CHECK((t * t.inverse()).is_identity());
        CHECK((t.inverse() * t).is_identity());
        CHECK(t.pow(-1) == t.inverse());
        CHECK(t.pow(3) == t * t * t);
    }
    SUBCASE("matches the substitution oracle and stays symplectic") {
        Gen gen(3);
        for (int i = 0; i < 1000; ++i) {
            auto c = gen.homology(g3, 20);
            auto t = twist_matrix(c);
            REQUIRE(is_symplectic(t.matrix()));
            REQUIRE(mcgcoh::testing::dense_of(t) == mcgcoh::testing::transvection_oracle(mcgcoh::testing::coords_of(c)));
        }
    }
}

TEST_CASE("is_symplectic") {
    CHECK(is_symplectic(IntMatrix::identity(6)));
    CHECK(is_symplectic(twist_matrix(x(1) + y(2)).matrix()));
    CHECK(mcgcoh::testing::dense_preserves_form(mcgcoh::testing::dense_of(twist_matrix(x(1) + y(2)))));
    const long d[] = {2, 1, 1, 1, 1, 1};
    CHECK_FALSE(is_symplectic(IntMatrix::diagonal(d)));
    CHECK_THROWS_AS(is_symplectic(IntMatrix::identity(5)), DimensionError);
    CHECK_THROWS_AS(is_symplectic(IntMatrix::identity(4)), DomainError);  // genus 2
    CHECK_THROWS_AS(SymplecticMatrix::from_matrix(IntMatrix::diagonal(d)), DomainError);
}

TEST_CASE("apply") {
    CHECK(apply(SymplecticMatrix(g3), 2 * x(2) - y(3)) == 2 * x(2) - y(3));
    CHECK(apply(twist_matrix(x(1)), y(1)) == x(1) + y(1));

    Gen gen(4);
    for (int i = 0; i < 200; ++i) {
        auto a = twist_matrix(gen.homology(g3, 5)), b = twist_matrix(gen.homology(g3, 5));
        auto m = gen.homology(g3, 10);
        REQUIRE(apply(a * b, m) == apply(a, apply(b, m)));
        auto c = gen.homology(g3, 6);
        REQUIRE(apply(twist_matrix(c), m) == transvect(c, 1, m));
    }
    CHECK_THROWS_AS(apply(SymplecticMatrix(Genus(4)), x(1)), DimensionError);
}

TEST_CASE("choose_increasing_twist") {
    auto strictly_increasing = [](const HomologyClass& m, TwistChoice ch, int steps) {
        auto c = HomologyClass::basis(m.genus(), ch.curve_index);
        auto ray = orbit_ray(c, ch.sign, m, static_cast<std::size_t>(steps) + 1);
        for (std::size_t i = 1; i < ray.size(); ++i)
            if (norm1(ray[i]) <= norm1(ray[i - 1])) return false;
        return true;
    };

    SUBCASE("2x1 + 3y1 twists along y1 with b1 growing as 3 + 2n") {
        auto m = 2 * x(1) + 3 * y(1);
        auto ch = choose_increasing_twist(m);
        CHECK(ch.curve_index == 1);
        CHECK(ch.sign == -1);
        auto ray = orbit_ray(y(1), ch.sign, m, 4);
        for (std::size_t n = 0; n < ray.size(); ++n) {
            CHECK(ray[n] == 2 * x(1) + static_cast<std::int64_t>(3 + 2 * n) * y(1));
        }
    }
    SUBCASE("x1 satisfies the postcondition") {
        auto ch = choose_increasing_twist(x(1));
        CHECK(strictly_increasing(x(1), ch, 20));
        CHECK(ch == TwistChoice{1, +1});
    }
    SUBCASE("y3 uses the dual curve x3") {
        auto ch = choose_increasing_twist(y(3));
        CHECK(ch.curve_index == 4);
        CHECK(strictly_increasing(y(3), ch, 20));
    }
    SUBCASE("opposite signs keep sign +1") {
        auto m = 2 * x(1) - 3 * y(1);
        CHECK(choose_increasing_twist(m) == TwistChoice{1, +1});
    }
    SUBCASE("zero class") { CHECK_THROWS_AS(choose_increasing_twist(HomologyClass(g3)), DomainError); }
    SUBCASE("random classes, 20 steps") {
        Gen gen(5);
        for (int i = 0; i < 1000; ++i) {
            auto m = gen.homology(g3, 50, true);
            REQUIRE(strictly_increasing(m, choose_increasing_twist(m), 20));
        }
    }
    SUBCASE("prefers +1 whenever +1 works") {
        Gen gen(6);
        for (int i = 0; i < 300; ++i) {
            auto m = gen.homology(g3, 12, true);
            auto ch = choose_increasing_twist(m);
            INFO(to_string(m));
            if (ch.sign == -1) REQUIRE_FALSE(strictly_increasing(m, {ch.curve_index, +1}, 20));
        }
    }
}

TEST_CASE("orbit_ray") {
    auto ray = orbit_ray(x(1), 1, y(1), 3);
    REQUIRE(ray.size() == 3);
    CHECK(ray[0] == y(1));
    CHECK(ray[1] == y(1) + x(1));
    CHECK(ray[2] == y(1) + 2 * x(1));

    auto fixed = orbit_ray(x(1), -1, x(1) + x(2), 5);
    for (const auto& m : fixed) CHECK(m == x(1) + x(2));

    CHECK_THROWS_AS(orbit_ray(x(1), 1, y(1), 0), DomainError);

    Gen gen(7);
    for (int i = 0; i < 200; ++i) {
        auto c = gen.homology(g3, 6), m = gen.homology(g3, 10);
        if (intersection(c, m) == 0) continue;
        auto r = orbit_ray(c, gen.coin() ? 1 : -1, m, 25);
        std::set<HomologyClass> distinct(r.begin(), r.end());
        REQUIRE(distinct.size() == r.size());
    }
}

TEST_CASE("labels and overflow") {
    CHECK(basis_label(x(1) + 2 * y(3)) == "x1+2y3");
    CHECK(basis_label(-y(1)) == "-y1");
    CHECK(basis_label(HomologyClass(g3)) == "0");
    CHECK(to_string(cls({1, -2, 0, 3, 0, 0})) == "1 -2 0 3 0 0");
    auto big = cls({INT64_MAX, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(big + x(1), OverflowError);
}
