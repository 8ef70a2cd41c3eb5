#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "agclone/io.hpp"
#include "agclone/rules.hpp"

using namespace agclone;

namespace {

ChoiceFunction rand_choice(int m, std::mt19937_64& rng) {
    return ChoiceFunction(m, static_cast<std::uint32_t>(rng() % choice_count(m)));
}

}  // namespace

TEST_CASE("coalition validation") {
    // dictator of voter 1
    auto K = DecisiveCoalition::from_subsets(3, {{1}, {1, 2}, {1, 3}, {1, 2, 3}});
    CHECK(K.is_dictatorial());
    CHECK(K.is_monotone());
    // both of a complementary pair present
    CHECK_THROWS_AS(DecisiveCoalition::from_subsets(3, {{1}, {2, 3}, {1, 2}, {1, 3}, {1, 2, 3}}),
                    std::invalid_argument);
    // full set missing
    CHECK_THROWS_AS(DecisiveCoalition::from_subsets(3, {{1}, {1, 2}, {1, 3}}),
                    std::invalid_argument);
    CHECK(all_unanimous_coalitions(3).size() == 8);
    CHECK(all_unanimous_coalitions(5).size() == 32768);
}

TEST_CASE("the four canonical coalitions") {
    CHECK(special_coalition(SpecialRule::Delta) ==
          DecisiveCoalition::from_subsets(3, {{1}, {1, 2}, {1, 3}, {1, 2, 3}}));
    CHECK(special_coalition(SpecialRule::Nu) ==
          DecisiveCoalition::from_subsets(3, {{2}, {3}, {2, 3}, {1, 2, 3}}));
    CHECK(special_coalition(SpecialRule::Lambda) ==
          DecisiveCoalition::from_subsets(3, {{1}, {2}, {3}, {1, 2, 3}}));
    CHECK(special_coalition(SpecialRule::Mu) ==
          DecisiveCoalition::from_subsets(3, {{1, 2}, {2, 3}, {1, 3}, {1, 2, 3}}));
}

TEST_CASE("coalition rule outputs on patterned inputs") {
    int m = 4;
    auto mu = two_function_of_rule(special_rule(SpecialRule::Mu, m));
    auto lambda = two_function_of_rule(special_rule(SpecialRule::Lambda, m));
    auto nu = two_function_of_rule(special_rule(SpecialRule::Nu, m));
    auto delta = two_function_of_rule(special_rule(SpecialRule::Delta, m));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            if (x == y) continue;
            CHECK(mu.eval({x, x, y}) == x);
            CHECK(lambda.eval({x, y, y}) == x);
            CHECK(nu.eval({x, y, y}) == y);
            CHECK(delta.eval({x, y, y}) == x);
        }
}

TEST_CASE("canonical rules are unanimous, local and neutral") {
    for (auto which : {SpecialRule::Delta, SpecialRule::Nu, SpecialRule::Lambda, SpecialRule::Mu}) {
        Rule f = special_rule(which, 3);
        CHECK(f.is_local());
        CHECK(f.is_unanimous());
        CHECK(is_neutral(f));
    }
    std::mt19937_64 rng(0);
    for (const auto& K : all_unanimous_coalitions(5)) {
        if (rng() % 512 != 0) continue;  // sampled at n=5
        Rule f = rule_from_coalition(K, 3);
        CHECK(f.is_unanimous());
        CHECK(is_neutral(f));
    }
}

TEST_CASE("cayley rule tables are exact") {
    TwoFunction g3 = two_function_of_rule(cayley_rule(CayleyRule::A3));
    CHECK(g3.eval({1, 2}) == 2);
    static constexpr int t3[3][3] = {{0, 1, 0}, {1, 1, 2}, {0, 2, 2}};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(g3.eval({a, b}) == t3[a][b]);
    TwoFunction g4 = two_function_of_rule(cayley_rule(CayleyRule::A4));
    CHECK(g4.eval({0, 2}) == 0);
    CHECK(g4.eval({2, 0}) == 2);
    CHECK(g4.eval({1, 2}) == 2);
    static constexpr int t4[4][4] = {{0, 1, 0, 3}, {0, 1, 2, 1}, {2, 1, 2, 3}, {0, 3, 2, 3}};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(g4.eval({a, b}) == t4[a][b]);
    CHECK_FALSE(is_neutral(cayley_rule(CayleyRule::A3)));
    CHECK_FALSE(is_neutral(cayley_rule(CayleyRule::A4)));
    CHECK(cayley_rule(CayleyRule::A3).is_unanimous());
    CHECK(cayley_rule(CayleyRule::A4).is_unanimous());
}

TEST_CASE("neutrality is self-duality over all 64 binary local rules at m=3") {
    for (const auto& g : all_conservative_two_functions(3, 2)) {
        Rule f = rule_of_two_function(g);
        bool all_sigma = true;
        for (const auto& sigma : all_permutations(3))
            for (std::uint32_t a = 0; a < 8 && all_sigma; ++a)
                for (std::uint32_t b = 0; b < 8 && all_sigma; ++b)
                    all_sigma = (apply_acted(f, sigma, {ChoiceFunction(3, a), ChoiceFunction(3, b)}) ==
                                 f.apply({ChoiceFunction(3, a), ChoiceFunction(3, b)}));
        CHECK(is_neutral(f) == all_sigma);
        CHECK(is_neutral(f) == is_self_dual(g));
    }
}

TEST_CASE("tabled rules detect locality") {
    int m = 3;
    // a local table built from the majority rule
    auto make_table = [&](auto&& fn) {
        std::vector<std::uint32_t> outputs;
        for (std::uint32_t b = 0; b < 8; ++b)
            for (std::uint32_t a = 0; a < 8; ++a)
                outputs.push_back(fn(ChoiceFunction(m, a), ChoiceFunction(m, b)));
        return Rule::tabled(m, 2, std::move(outputs));
    };
    auto mu2 = [&](const ChoiceFunction& a, const ChoiceFunction& b) { return a.bits(); };
    Rule proj = make_table(mu2);
    CHECK(proj.is_local());
    CHECK(two_function_of_rule(proj) == TwoFunction::projection(3, 2, 0));
    // pick the first input unless the two inputs differ everywhere: non-local
    Rule weird = make_table([&](const ChoiceFunction& a, const ChoiceFunction& b) {
        return (a.bits() ^ b.bits()) == 7u ? b.bits() : a.bits();
    });
    CHECK_FALSE(weird.is_local());
    CHECK_THROWS_AS(two_function_of_rule(weird), std::invalid_argument);
}

TEST_CASE("local rule / 2-function roundtrip") {
    auto mu = two_function_of_rule(special_rule(SpecialRule::Mu, 3));
    CHECK(two_function_of_rule(rule_of_two_function(mu)) == mu);
}

TEST_CASE("coalition classification matches the four canonical classes") {
    CHECK(classify_coalition(special_coalition(SpecialRule::Delta)) == PostClass::O1);
    CHECK(classify_coalition(special_coalition(SpecialRule::Nu)) == PostClass::D1);
    CHECK(classify_coalition(special_coalition(SpecialRule::Lambda)) == PostClass::L4);
    CHECK(classify_coalition(special_coalition(SpecialRule::Mu)) == PostClass::D2);
}

TEST_CASE("classification agrees with the slice-clone fingerprint") {
    for (const auto& K : all_unanimous_coalitions(3)) {
        PostClass structural = classify_coalition(K);
        PostClass by_closure = post_class({K.boolean_function()});
        CHECK(structural == by_closure);
    }
}

TEST_CASE("correct decision probabilities at p = (0.4, 0.6, 0.6)") {
    std::vector<Rational> p = {Rational::from_decimal("0.4"), Rational::from_decimal("0.6"),
                               Rational::from_decimal("0.6")};
    CHECK(correct_probability(special_coalition(SpecialRule::Delta), p) == Rational(2, 5));
    CHECK(correct_probability(special_coalition(SpecialRule::Nu), p) == Rational(81, 125));
    CHECK(correct_probability(special_coalition(SpecialRule::Mu), p) == Rational(69, 125));
    CHECK(correct_probability(special_coalition(SpecialRule::Lambda), p) == Rational(62, 125));
    CHECK_THROWS_AS(correct_probability(special_coalition(SpecialRule::Mu), {Rational(1, 2)}),
                    std::invalid_argument);
}

TEST_CASE("rational arithmetic basics") {
    CHECK(Rational::from_decimal("0.648") == Rational(81, 125));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(81, 125).to_string() == "81/125");
}

TEST_CASE("json roundtrips") {
    ChoiceFunction c(3, 5);
    CHECK(choice_from_json(to_json(c)) == c);
    auto mu = two_function_of_rule(special_rule(SpecialRule::Mu, 4));
    CHECK(two_function_from_json(to_json(mu)) == mu);
    auto K = special_coalition(SpecialRule::Nu);
    CHECK(coalition_from_json(to_json(K)) == K);
    CHECK(boolean_from_json(to_json(bool_median3())) == bool_median3());
}
