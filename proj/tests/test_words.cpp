#include <doctest.h>

#include <algorithm>

#include "mcgcoh/errors.hpp"
#include "mcgcoh/words.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace mcgcoh;
using mcgcoh::testing::Gen;

namespace {

const Genus g3{3};

HomologyClass x(int j) { return HomologyClass::x(g3, j); }
HomologyClass y(int j) { return HomologyClass::y(g3, j); }

CurveTable table(std::initializer_list<Curve> cs) { return CurveTable(g3, std::vector<Curve>(cs)); }

RelationInstance pair_instance(const std::string& name, const HomologyClass& a, const HomologyClass& b, bool braid) {
    RelationInstance rel{name, table({Curve("a", a), Curve("b", b)}), {}, {}, {}};
    if (braid) {
        rel.lhs = {{"a", 1}, {"b", 1}, {"a", 1}};
        rel.rhs = {{"b", 1}, {"a", 1}, {"b", 1}};
    } else {
        rel.lhs = {{"a", 1}, {"b", 1}};
        rel.rhs = {{"b", 1}, {"a", 1}};
    }
    rel.declared.push_back({"a", "b", intersection(a, b)});
    return rel;
}

std::size_t count_prefix(const std::vector<RelationInstance>& cat, const std::string& prefix) {
    return static_cast<std::size_t>(std::count_if(cat.begin(), cat.end(), [&](const RelationInstance& r) {
        return r.name.rfind(prefix, 0) == 0;
    }));
}

}  // namespace

TEST_CASE("curves and tables") {
    CHECK_THROWS_AS(Curve("s", x(1), true), DomainError);
    CHECK_NOTHROW(Curve("s", HomologyClass(g3), true));
    auto t = table({Curve("x1", x(1))});
    CHECK_THROWS_AS(t.add(Curve("x1", y(1))), DomainError);
    CHECK_THROWS_AS(t.at("nope"), LookupError);
    CHECK_THROWS_AS(t.add(Curve("z", HomologyClass::x(Genus(4), 1))), DimensionError);
}

TEST_CASE("word_matrix") {
    auto t = table({Curve("a", x(1)), Curve("b", y(1) + x(2)), Curve("c", y(3))});
    CHECK(word_matrix(TwistWord{}, t).is_identity());
    CHECK(word_matrix({{"b", 1}}, t) == twist_matrix(y(1) + x(2)));
    CHECK(word_matrix({{"a", -2}}, t) == twist_matrix(x(1)).pow(-2));
    CHECK_THROWS_AS(word_matrix({{"zz", 1}}, t), LookupError);
    CHECK_THROWS_AS(TwistWord({{"a", 0}}), DomainError);

    SUBCASE("w w^-1 is the identity under the dense oracle") {
        TwistWord w{{"a", 2}, {"b", -1}, {"c", 3}, {"a", 1}};
        auto d = mcgcoh::testing::dense_identity(6);
        const TwistWord round_trip = w * w.inverse();
        for (const auto& l : round_trip.letters()) {
            d = mcgcoh::testing::dense_mul(
                d, mcgcoh::testing::transvection_oracle(mcgcoh::testing::coords_of(t.at(l.curve).cls), l.exponent));
        }
        CHECK(d == mcgcoh::testing::dense_identity(6));
        CHECK(word_matrix(w * w.inverse(), t).is_identity());
        CHECK(mcgcoh::testing::dense_of(word_matrix(w, t)) != mcgcoh::testing::dense_identity(6));
    }

    SUBCASE("concatenation maps to the matrix product") {
        Gen gen(21);
        auto rt = mcgcoh::testing::random_curves(gen, g3, 6, 4);
        for (int i = 0; i < 200; ++i) {
            auto w1 = gen.word(rt, 5), w2 = gen.word(rt, 5);
            REQUIRE(word_matrix(w1 * w2, rt) == word_matrix(w1, rt) * word_matrix(w2, rt));
        }
    }
}

TEST_CASE("verify_relation on small instances") {
    CHECK(verify_relation(pair_instance("commute", x(1), x(2), false)));
    CHECK(verify_relation(pair_instance("braid", x(1), y(1), true)));
    CHECK_FALSE(verify_relation(pair_instance("broken braid", x(1), x(2), true)));
    // i = 1 pairs do not commute
    CHECK_FALSE(verify_relation(pair_instance("broken commute", x(1), y(1), false)));

    SUBCASE("wrong metadata is a distinct failure") {
        auto rel = pair_instance("commute", x(1), x(2), false);
        rel.declared[0].value = 1;
        CHECK_THROWS_AS(verify_relation(rel), MetadataError);
    }
    SUBCASE("undeclared letter") {
        auto rel = pair_instance("commute", x(1), x(2), false);
        rel.lhs = rel.lhs * TwistWord{{"q", 1}};
        CHECK_THROWS_AS(verify_relation(rel), MetadataError);
    }
}

TEST_CASE("builtin catalog") {
    CHECK_THROWS_AS(builtin_catalog(Genus(2)), DomainError);
    for (int gv : {3, 4, 5}) {
        const Genus g(gv);
        auto cat = builtin_catalog(g);
        CHECK(count_prefix(cat, "commute") >= 2);
        CHECK(count_prefix(cat, "braid") >= 2);
        CHECK(count_prefix(cat, "chain") == 1);
        CHECK(count_prefix(cat, "lantern") == 1);
        CHECK(count_prefix(cat, "bounding pair") == 2);
        CHECK(count_prefix(cat, "conjugate") >= 2);
        for (const auto& rel : cat) {
            INFO(rel.name);
            CHECK(verify_relation(rel));
        }
        CHECK_NOTHROW(catalog_curves(cat));
    }
}

TEST_CASE("lantern classes") {
    auto cat = builtin_catalog(g3);
    auto it = std::find_if(cat.begin(), cat.end(), [](const auto& r) { return r.name.rfind("lantern", 0) == 0; });
    REQUIRE(it != cat.end());
    CHECK(it->curves.at("x1+x2+x3").cls == x(1) + x(2) + x(3));
    CHECK(it->curves.at("x2+x3").cls == x(2) + x(3));
    // all seven classes pairwise disjoint in homology
    for (const auto& d : it->declared) CHECK(d.value == 0);
    CHECK(it->curves.size() == 7);
}

TEST_CASE("chain boundary classes agree with bounded search") {
    const auto x1 = mcgcoh::testing::coords_of(x(1));
    const auto y1 = mcgcoh::testing::coords_of(y(1));
    const auto c = mcgcoh::testing::coords_of(x(1) + x(2));
    auto step = mcgcoh::testing::dense_mul(
        mcgcoh::testing::dense_mul(mcgcoh::testing::transvection_oracle(x1), mcgcoh::testing::transvection_oracle(y1)),
        mcgcoh::testing::transvection_oracle(c));
    auto target = mcgcoh::testing::dense_identity(6);
    for (int i = 0; i < 4; ++i) target = mcgcoh::testing::dense_mul(target, step);

    auto found = mcgcoh::testing::chain_boundary_search(target, 6);
    REQUIRE(found.has_value());
    auto frozen = chain_boundary_classes(g3);
    CHECK(found->first == mcgcoh::testing::coords_of(frozen.d));
    CHECK(found->second == mcgcoh::testing::coords_of(frozen.e));
}

TEST_CASE("bounding pairs and Torelli membership") {
    auto t = table({Curve("g", x(1)), Curve("d", x(1)), Curve("s", HomologyClass(g3), true), Curve("b", y(2))});
    CHECK(is_torelli({{"g", 1}, {"d", -1}}, t));
    CHECK(word_matrix({{"g", 1}, {"d", -1}}, t).is_identity());
    CHECK_FALSE(is_torelli({{"g", 1}}, t));
    CHECK(apply(word_matrix({{"g", 1}}, t), y(1)) != y(1));
    CHECK(is_torelli({{"s", 1}}, t));
    CHECK(is_torelli({{"s", 3}, {"b", 2}, {"s", -1}, {"b", -2}}, t));
    CHECK_THROWS_AS(is_torelli({{"nope", 1}}, t), LookupError);
}

TEST_CASE("conjugation acts by relabeling classes") {
    Gen gen(22);
    auto basis = basis_curves(g3);
    for (int i = 0; i < 100; ++i) {
        auto phi = gen.word(basis, 4, 1);
        auto w = gen.word(basis, 5, 2);
        const auto mphi = word_matrix(phi, basis);

        CurveTable moved(g3);
        for (const auto& c : basis.curves()) moved.add(Curve(c.id, apply(mphi, c.cls)));
        REQUIRE(word_matrix(phi * w * phi.inverse(), basis) == word_matrix(w, moved));
    }
}

TEST_CASE("curve ids") {
    CHECK(curve_id(x(1) - y(1)) == "x1-y1");
    CHECK(curve_id(x(2), 1) == "x2'");
    CHECK(curve_id(HomologyClass(g3)) == "sep");
    CHECK(basis_curves(g3).size() == 6);
}
