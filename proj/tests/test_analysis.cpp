#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "sea/analysis.hpp"
#include "sea/models.hpp"
#include "sea/sequential.hpp"

using namespace sea;

TEST_CASE("one closure step adjoins supplements, products, defined sums") {
    auto b3 = make_boolean(3);
    auto s1 = *b3->parse_element("{1}");
    auto s23 = *b3->parse_element("{2.3}");

    ElementSet s{s1};
    ElementSet step1 = closure_step(*b3, s);
    CHECK(step1 == ElementSet{s1, s23}); // supplement enters; product of s1 with itself is s1
    ElementSet step2 = closure_step(*b3, step1);
    CHECK(step2 == ElementSet{b3->zero(), s1, s23, b3->one()});

    // {0,1} is a fixpoint in any model
    ElementSet z{b3->zero(), b3->one()};
    CHECK(closure_step(*b3, z) == z);
    auto e0 = make_e0(2);
    ElementSet ze{e0->zero(), e0->one()};
    CHECK(closure_step(*e0, ze) == ze);

    CHECK_THROWS_AS(closure_step(*b3, ElementSet{}), ModelError);
}

TEST_CASE("closure step in the family algebra") {
    auto e0 = make_e0(2);
    ElementSet s{e0_a(1, 0)};
    ElementSet step1 = closure_step(*e0, s);
    CHECK(step1 == ElementSet{e0->zero(), e0_a(1, 0), e0_a(2, 0), e0_b(1, 0)});
    // the sum with the supplement lands one level later
    ElementSet step2 = closure_step(*e0, step1);
    CHECK(step2.contains(e0->one()));
    CHECK(step2.contains(e0_a(1, 0))); // product with the supplement stays put
}

TEST_CASE("generated subalgebra equals the brute-force smallest closed superset") {
    for (int k = 1; k <= 3; ++k) {
        auto model = make_boolean(k);
        auto ops = oracles::FiniteOps::from(*model);
        const std::uint32_t all = (1u << ops.n) - 1;
        for (std::uint32_t gens = 1; gens <= all; ++gens) {
            ClosureResult closure =
                generate_sub_sea(*model, oracles::mask_to_set(ops, gens), {});
            CHECK(closure.reached_fixpoint);
            CHECK_FALSE(closure.size_limit_hit);
            std::uint32_t expect = oracles::generated_mask(ops, gens);
            CHECK(oracles::set_to_mask(ops, closure.elements) == expect);
        }
    }
    // a singleton atom generates its four-element subalgebra quickly
    auto b3 = make_boolean(3);
    ClosureResult r = generate_sub_sea(*b3, ElementSet{*b3->parse_element("{1}")}, {});
    CHECK(r.reached_fixpoint);
    CHECK(r.iterations <= 3);
    CHECK(r.elements.size() == 4);
}

TEST_CASE("fixpoint closures are minimal") {
    // dropping any non-generator breaks closedness
    auto b3 = make_boolean(3);
    auto ops = oracles::FiniteOps::from(*b3);
    for (std::uint32_t gens : {0x02u, 0x0au, 0x81u, 0x46u}) {
        ElementSet a = oracles::mask_to_set(ops, gens);
        ClosureResult closure = generate_sub_sea(*b3, a, {});
        REQUIRE(closure.reached_fixpoint);
        CHECK(is_sub_sea(*b3, closure.elements).closed);
        for (const auto& x : closure.elements) {
            if (a.contains(x)) continue;
            ElementSet smaller = closure.elements;
            smaller.erase(x);
            CHECK_FALSE(is_sub_sea(*b3, smaller).closed);
        }
    }
}

TEST_CASE("levels increase and limits trip cleanly on infinite growth") {
    auto e0 = make_e0(2);
    ClosureLimits limits;
    limits.max_size = 50;
    ClosureResult r = generate_sub_sea(*e0, ElementSet{e0_a(1, 0)}, limits);
    CHECK(r.size_limit_hit);
    CHECK_FALSE(r.reached_fixpoint);
    REQUIRE(r.iterations >= 5);
    const ElementSet* prev = nullptr;
    for (const auto& level : r.levels) {
        if (prev) {
            CHECK(level.size() > prev->size());
            for (const auto& x : *prev) CHECK(level.contains(x));
        }
        prev = &level;
    }
    // iteration cap alone also trips
    ClosureLimits few;
    few.max_iterations = 2;
    ClosureResult r2 = generate_sub_sea(*e0, ElementSet{e0_a(1, 0)}, few);
    CHECK(r2.iterations == 2);
    CHECK_FALSE(r2.reached_fixpoint);

    CHECK_THROWS_AS(generate_sub_sea(*e0, ElementSet{}, {}), ModelError);
}

TEST_CASE("generators alone reach the fixpoint {0,1} from the unit") {
    auto sc = make_scale();
    ClosureResult r = generate_sub_sea(*sc, ElementSet{sc->one()}, {});
    CHECK(r.reached_fixpoint);
    CHECK(r.elements == ElementSet{sc->zero(), sc->one()});
}

TEST_CASE("subalgebra membership check") {
    auto b3 = make_boolean(3);
    ElementSet f{b3->zero(), *b3->parse_element("{1}"), *b3->parse_element("{2.3}"),
                 b3->one()};
    CHECK(is_sub_sea(*b3, f).closed);

    auto e0 = make_e0(2);
    auto check = is_sub_sea(*e0, ElementSet{e0->zero(), e0->one(), e0_a(1, 0)});
    CHECK_FALSE(check.closed);
    REQUIRE(check.witness);
    CHECK(check.witness->operation == "supplement");
    CHECK(check.witness->result == e0_b(1, 0));

    CHECK(is_sub_sea(*e0, ElementSet{e0->zero(), e0->one()}).closed);
    auto missing = is_sub_sea(*e0, ElementSet{e0->one()});
    CHECK_FALSE(missing.closed);
    CHECK(missing.witness->operation == "zero");
}

TEST_CASE("commutant") {
    auto e0 = make_e0(2);
    auto win_e0 = e0->window(3);
    ElementSet full(win_e0.begin(), win_e0.end());
    CHECK(commutant(*e0, ElementSet{e0_a(1, 1)}, win_e0) == full);
    CHECK(commutant(*e0, ElementSet{}, win_e0) == full); // vacuous condition

    auto hs = make_horizontal_sum();
    auto win = hs->window(4);
    ElementSet got = commutant(*hs, ElementSet{hs_left(Rational(1, 2))}, win);
    ElementSet expect;
    for (const auto& x : win) {
        auto kind = x.as<HSSym>()->kind;
        if (kind != HSSym::Kind::Right) expect.insert(x);
    }
    CHECK(got == expect);
    // cross-check against a plain pairwise scan
    for (const auto& x : win) {
        bool in = commutes(*hs, x, hs_left(Rational(1, 2)));
        CHECK(in == got.contains(x));
    }
}

TEST_CASE("maximal commutative extension") {
    auto b2 = make_boolean(2);
    auto car = b2->carrier();
    ElementSet whole(car.begin(), car.end());
    CHECK(maximal_commutative_extension(*b2, ElementSet{b2->zero()}, car) == whole);

    auto hs = make_horizontal_sum();
    auto win = hs->window(4);
    ElementSet got = maximal_commutative_extension(*hs, ElementSet{hs_left(Rational(1, 2))}, win);
    for (const auto& x : got) CHECK(x.as<HSSym>()->kind != HSSym::Kind::Right);
    // maximal: nothing left in the window can join
    for (const auto& x : win) {
        if (got.contains(x)) continue;
        bool joins = true;
        for (const auto& m : got)
            if (!commutes(*hs, x, m)) {
                joins = false;
                break;
            }
        CHECK_FALSE(joins);
    }
    // commutative
    CHECK(is_commutative_set(*hs, got));
    // idempotent on an already maximal set
    CHECK(maximal_commutative_extension(*hs, got, win) == got);

    ElementSet bad{hs_left(Rational(1, 2)), hs_right(Rational(1, 2))};
    CHECK_THROWS_AS(maximal_commutative_extension(*hs, bad, win), ModelError);
    ElementSet outside{hs_left(Rational(1, 7))};
    CHECK_THROWS_AS(maximal_commutative_extension(*hs, outside, win), ModelError);
}

TEST_CASE("generated subalgebras of commutative sets stay commutative") {
    auto b3 = make_boolean(3);
    auto car = b3->carrier();
    ElementSet a{*b3->parse_element("{1}"), *b3->parse_element("{1.2}")};
    auto report = check_commutative_generation(*b3, a, car, {});
    CHECK(report.pass());
    CHECK(report.closure.reached_fixpoint);

    auto e0 = make_e0(2);
    auto win = e0->window(4);
    ClosureLimits limits;
    limits.max_size = 40; // the level after the trip is bounded by max_size^2
    auto r2 = check_commutative_generation(*e0, ElementSet{e0_a(1, 0), e0_b(2, 1)}, win, limits);
    CHECK(r2.closure_commutative);
    CHECK(r2.extension_closed);

    auto sc = make_scale();
    auto r3 = check_commutative_generation(*sc, ElementSet{sc->one()}, sc->window(4), {});
    CHECK(r3.pass());
    CHECK(r3.closure.elements == ElementSet{sc->zero(), sc->one()});

    auto hs = make_horizontal_sum();
    ElementSet bad{hs_left(Rational(1, 2)), hs_right(Rational(1, 2))};
    CHECK_THROWS_AS(check_commutative_generation(*hs, bad, hs->window(4), {}), ModelError);
}

TEST_CASE("random commutative sets in the horizontal sum generate commutatively") {
    auto hs = make_horizontal_sum();
    auto win = hs->window(6);
    std::vector<ElementRef> lefts, rights;
    for (const auto& x : win) {
        if (x.as<HSSym>()->kind == HSSym::Kind::Left) lefts.push_back(x);
        if (x.as<HSSym>()->kind == HSSym::Kind::Right) rights.push_back(x);
    }
    std::mt19937 rng(20240817u);
    ClosureLimits limits;
    limits.max_iterations = 6;
    limits.max_size = 25; // keeps the post-trip level small enough to sweep pairwise
    for (int trial = 0; trial < 120; ++trial) {
        const auto& pool = (trial % 2) ? lefts : rights;
        ElementSet gens;
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        std::uniform_int_distribution<int> count(1, 4);
        int how_many = count(rng);
        for (int i = 0; i < how_many; ++i) gens.insert(pool[pick(rng)]);
        if (rng() % 2) gens.insert(hs->one());
        REQUIRE(is_commutative_set(*hs, gens));
        ClosureResult closure = generate_sub_sea(*hs, gens, limits);
        CHECK(is_commutative_set(*hs, closure.elements));
    }
}

TEST_CASE("uniqueness search classifies the hypothesis cases") {
    auto e0 = make_e0(2);
    auto cases = uniqueness_search(*e0, 2, e0->window(4));
    bool found = false;
    for (const auto& c : cases) {
        CHECK_FALSE(c.inconsistent());
        // every case re-checks: the multiples really agree
        auto na = nat_multiple(*e0, c.a, c.n);
        auto nb = nat_multiple(*e0, c.b, c.n);
        REQUIRE(na);
        REQUIRE(nb);
        CHECK(*na == c.c);
        CHECK(*nb == c.c);
        if (c.a == e0_a(1, 0) && c.b == e0_a(0, 1)) {
            found = true;
            CHECK(c.c == e0_a(2, 0));
            CHECK_FALSE(c.c_sharp);
            CHECK(c.a_commutes_b);
            CHECK_FALSE(c.a_equals_b);
        }
    }
    CHECK(found);

    auto hs = make_horizontal_sum();
    auto hs_cases = uniqueness_search(*hs, 3, hs->window(6));
    bool hs_found = false;
    for (const auto& c : hs_cases)
        if (c.a == hs_left(Rational(1, 3)) && c.b == hs_right(Rational(1, 3))) {
            hs_found = true;
            CHECK(c.c == hs->one());
            CHECK(c.c_sharp);
            CHECK_FALSE(c.a_commutes_b);
            CHECK_FALSE(c.a_equals_b);
            CHECK_FALSE(c.inconsistent()); // the pair does not commute
        }
    CHECK(hs_found);

    auto sc = make_scale();
    for (std::uint32_t n : {2u, 3u, 5u})
        for (const auto& c : uniqueness_search(*sc, n, sc->window(8)))
            CHECK(c.a_equals_b);

    CHECK_THROWS_AS(uniqueness_search(*sc, 1, sc->window(4)), ModelError);
}

TEST_CASE("a law-breaking model is flagged as inconsistent") {
    // two distinct commuting elements with the same double, and that
    // double idempotent: such a model cannot pass the full audit, and
    // the search must mark the case
    FiniteModelData d;
    d.labels = {"0", "x", "y", "c", "1"};
    d.zero_label = "0";
    d.one_label = "1";
    for (const auto& e : {"0", "x", "y", "c", "1"}) {
        d.sum_triples.push_back({"0", e, e, 0});
        if (std::string(e) != "0") d.sum_triples.push_back({e, "0", e, 0});
    }
    for (auto [l, r] : {std::pair{"x", "x"}, {"y", "y"}})
        d.sum_triples.push_back({l, r, "c", 0});
    for (auto [l, r] : {std::pair{"x", "c"}, {"c", "x"}, {"y", "c"}, {"c", "y"}})
        d.sum_triples.push_back({l, r, "1", 0});
    d.has_product = true;
    for (const auto& l : d.labels)
        for (const auto& r : d.labels) {
            std::string res = (l == "1") ? r : (r == "1") ? l : "0";
            if (l == "c" && r == "c") res = "c"; // c squares to itself
            d.product_triples.push_back({l, r, res, 0});
        }
    FiniteModel m(d);

    auto cases = uniqueness_search(m, 2, m.carrier());
    auto bad = inconsistent_cases(cases);
    REQUIRE_FALSE(bad.empty());
    bool found = false;
    for (const auto& c : bad)
        if (m.label(c.a) == "x" && m.label(c.b) == "y") {
            found = true;
            CHECK(m.label(c.c) == "c");
            CHECK(c.c_sharp);
            CHECK(c.a_commutes_b);
            CHECK_FALSE(c.a_equals_b);
        }
    CHECK(found);
    // and indeed the model is not a sequential effect algebra
    CHECK_FALSE(audit_full(m, m.carrier()).clean());
}

TEST_CASE("no audited model yields an inconsistent uniqueness case") {
    std::vector<std::pair<std::unique_ptr<AlgebraModel>, std::int64_t>> models;
    models.emplace_back(make_boolean(2), 0);
    models.emplace_back(make_boolean(3), 0);
    models.emplace_back(make_scale(), 8);
    models.emplace_back(make_horizontal_sum(), 8);
    models.emplace_back(make_e0(2), 6);
    models.emplace_back(make_e0(3), 6);
    for (const auto& [model, bound] : models) {
        auto win = model->window(bound);
        for (std::uint32_t n : {2u, 3u, 4u})
            CHECK(inconsistent_cases(uniqueness_search(*model, n, win)).empty());
    }
}
