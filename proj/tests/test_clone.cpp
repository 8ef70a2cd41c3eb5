#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "agclone/clone.hpp"
#include "agclone/rules.hpp"

using namespace agclone;

namespace {

bool contains_tt(const std::vector<BooleanFunction>& part, const BooleanFunction& h) {
    for (const auto& f : part)
        if (f == h) return true;
    return false;
}

}  // namespace

TEST_CASE("empty generation yields projections only") {
    auto part = boolean_nary_closure({}, 3);
    CHECK(part.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(contains_tt(part, BooleanFunction::projection(3, i)));
}

TEST_CASE("median generates its class without parity") {
    auto part = boolean_nary_closure({bool_median3()}, 3);
    CHECK(contains_tt(part, bool_median3()));
    CHECK_FALSE(contains_tt(part, bool_xor3()));
    CHECK(part.size() == 4);
}

TEST_CASE("the alternative three-variable generator reaches both median and parity") {
    auto part = boolean_nary_closure({bool_d1_generator()}, 3);
    CHECK(contains_tt(part, bool_median3()));
    CHECK(contains_tt(part, bool_xor3()));
    CHECK(part.size() == 8);
}

TEST_CASE("closure is a fixpoint and monotone") {
    auto part = boolean_nary_closure({bool_median3(), bool_xor3()}, 3);
    auto again = boolean_nary_closure(part, 3);
    CHECK(std::set<BooleanFunction>(part.begin(), part.end()) ==
          std::set<BooleanFunction>(again.begin(), again.end()));
    auto smaller = boolean_nary_closure({bool_median3()}, 3);
    for (const auto& h : smaller) CHECK(contains_tt(part, h));
}

TEST_CASE("post class fingerprints match the generator table") {
    CHECK(post_class({BooleanFunction::projection(1, 0)}) == PostClass::O1);
    CHECK(post_class({bool_d1_generator()}) == PostClass::D1);
    CHECK(post_class({bool_median3(), bool_xor3()}) == PostClass::D1);
    CHECK(post_class({bool_median3()}) == PostClass::D2);
    CHECK(post_class({bool_xor3()}) == PostClass::L4);
    CHECK(post_class({bool_and2(), bool_or2()}) == PostClass::A4);
    CHECK(post_class({bool_c4_generator()}) == PostClass::C4);
}

TEST_CASE("post class rejects generators that move the constants") {
    auto not1 = BooleanFunction::from_lambda(1, [](const std::vector<int>& a) { return 1 - a[0]; });
    CHECK_THROWS_AS(post_class({not1}), std::invalid_argument);
}

TEST_CASE("fingerprint partitions the self-dual ternary single-generator clones") {
    // all 0,1-preserving self-dual ternary functions, one generated clone each
    std::set<PostClass> seen;
    int count = 0;
    for (std::uint64_t tt = 0; tt < 256; ++tt) {
        BooleanFunction h(3, tt);
        if (!h.is_self_dual() || !h.preserves_zero() || !h.preserves_one()) continue;
        ++count;
        PostClass c = post_class({h});
        CHECK(is_self_dual_class(c));
        seen.insert(c);
    }
    CHECK(count == 8);
    CHECK(seen == std::set<PostClass>{PostClass::O1, PostClass::D2, PostClass::L4, PostClass::D1});
}

TEST_CASE("class membership sizes for small arities") {
    CHECK(post_class_members(PostClass::O1, 2).size() == 2);
    CHECK(post_class_members(PostClass::D2, 2).size() == 2);
    CHECK(post_class_members(PostClass::L4, 2).size() == 2);
    CHECK(post_class_members(PostClass::D1, 2).size() == 2);
    CHECK(post_class_members(PostClass::A4, 2).size() == 4);
    CHECK(post_class_members(PostClass::C4, 2).size() == 4);
    CHECK(post_class_members(PostClass::D2, 3).size() == 4);
    CHECK(post_class_members(PostClass::L4, 3).size() == 4);
    CHECK(post_class_members(PostClass::D1, 3).size() == 8);
    CHECK(post_class_members(PostClass::C4, 3).size() == 64);
}

TEST_CASE("closure budget raises instead of running away") {
    ClosureBudget tiny{.max_elements = 10};
    CHECK_THROWS_AS(two_function_nary_closure(
                        {patchwork_lift(bool_and2(), 5, 0, 1), patchwork_lift(bool_or2(), 5, 2, 3)},
                        5, 3, tiny),
                    BudgetExceeded);
}

TEST_CASE("symmetric closure orbits") {
    auto mu = coalition_two_function(special_coalition(SpecialRule::Mu), 5);
    CHECK(symmetric_closure({mu}).size() == 1);
    TwoFunction g = two_function_of_rule(cayley_rule(CayleyRule::A3));
    auto orbit = symmetric_closure({g});
    CHECK(orbit.size() > 1);
    CHECK(6 % orbit.size() == 0);
    for (const auto& member : orbit) CHECK(member.is_conservative());
}

TEST_CASE("classifier verdicts for canonical generators") {
    for (auto [rule, base] :
         {std::pair{SpecialRule::Mu, PostClass::D2}, std::pair{SpecialRule::Lambda, PostClass::L4},
          std::pair{SpecialRule::Nu, PostClass::D1}, std::pair{SpecialRule::Delta, PostClass::O1}}) {
        auto g = coalition_two_function(special_coalition(rule), 5);
        auto cls = classify_symmetric_2clone({g});
        CHECK(cls.kind == ExtensionClassification::Kind::Dependent);
        CHECK(cls.base == base);
    }
    auto cls = classify_symmetric_2clone({patchwork_lift(bool_and2(), 5, 0, 1)});
    CHECK(cls.kind == ExtensionClassification::Kind::Free);
    CHECK(cls.base == PostClass::A4);
}

TEST_CASE("extension membership predicates") {
    auto mu = coalition_two_function(special_coalition(SpecialRule::Mu), 5);
    auto ms = extension_membership(mu, PostClass::D2);
    CHECK(ms.free);
    CHECK(ms.dependent);
    // a patchwork acting as AND on one pair and OR on another is free, not dependent
    TwoFunction patch = TwoFunction::from_lambda(5, 2, [](std::span<const std::uint8_t> t) {
        auto vals = TwoDomain::value_set(t);
        if (vals.size() == 1) return vals[0];
        if (vals[0] == 0 && vals[1] == 1) return std::min<int>(t[0], t[1]);
        if (vals[0] == 2 && vals[1] == 3) return std::max<int>(t[0], t[1]);
        return static_cast<int>(t[0]);
    });
    auto pm = extension_membership(patch, PostClass::A4);
    CHECK(pm.free);
    CHECK_FALSE(pm.dependent);
    auto delta = coalition_two_function(special_coalition(SpecialRule::Delta), 5);
    CHECK(extension_membership(delta, PostClass::O1).dependent);
}

TEST_CASE("two-cell witnesses: projections suffice on a single pair") {
    CloneRealizer realizer(5, {patchwork_lift(bool_and2(), 5, 0, 1)});
    auto w = realizer.two_cell_witness(0, 1, 0, 1, 0, 0);
    REQUIRE(w.has_value());
    CHECK(w->eval({0, 1}) == 0);
}

TEST_CASE("projection-only generators admit no mixed witness") {
    CloneRealizer realizer(5, {TwoFunction::projection(5, 2, 0)});
    CHECK_FALSE(realizer.two_cell_witness(0, 1, 2, 3, 0, 3).has_value());
}

TEST_CASE("interpolation returns generators and projections unchanged") {
    TwoFunction gen = patchwork_lift(bool_and2(), 5, 0, 1);
    CHECK(realize_member({gen}, gen) == gen);
    for (int i = 0; i < 2; ++i) {
        auto p = TwoFunction::projection(5, 2, i);
        CHECK(realize_member({gen}, p) == p);
    }
}

TEST_CASE("interpolation rejects projection-only generators") {
    CHECK_THROWS_AS(realize_member({TwoFunction::projection(5, 2, 0)},
                                  TwoFunction::projection(5, 2, 1)),
                    std::invalid_argument);
}

TEST_CASE("interpolated tables always lie in the generated clone") {
    // realize only composes generators, so a successful binary realization must
    // have its per-pair slices inside the slice clone of the generators
    std::mt19937_64 rng(0);
    std::vector<TwoFunction> gens = {patchwork_lift(bool_c4_generator(), 5, 0, 1)};
    CloneRealizer realizer(5, gens);
    std::vector<BooleanFunction> slice_gens;
    for (const auto& g : realizer.closed_generators())
        for (auto [lo, hi] : all_pairs(5)) slice_gens.push_back(boolean_slice(g, lo, hi, lo));
    auto slice_clone = boolean_nary_closure(slice_gens, 2);
    for (int t = 0; t < 10; ++t) {
        int a = static_cast<int>(rng() % 5), b = static_cast<int>(rng() % 5);
        if (a == b) continue;
        auto w = realizer.two_cell_witness(std::min(a, b), std::max(a, b), std::min(a, b),
                                        std::max(a, b), a, a);
        REQUIRE(w.has_value());
        for (auto [lo, hi] : all_pairs(5))
            CHECK(contains_tt(slice_clone, boolean_slice(*w, lo, hi, lo)));
    }
}
