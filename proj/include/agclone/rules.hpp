#pragma once

// Aggregation rules: local rules backed by conservative 2-functions,
// decisive-coalition rules, the four canonical rules and the two Cayley-table
// counterexamples.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "agclone/boolean.hpp"
#include "agclone/clone.hpp"
#include "agclone/core.hpp"
#include "agclone/rational.hpp"
#include "agclone/two_function.hpp"

namespace agclone {

// Family of voter subsets containing exactly one of each complementary pair;
// the full set must be a member (unanimity).
class DecisiveCoalition {
  public:
    DecisiveCoalition(int n, std::uint64_t mask) : n_(n), mask_(mask) {
        if (n < 1 || n > 6) throw std::invalid_argument("voter count out of range 1..6");
        std::uint64_t full = (std::uint64_t{1} << n) - 1;
        for (std::uint64_t x = 0; x <= full; ++x) {
            bool in_x = (mask >> x) & 1u;
            bool in_comp = (mask >> (full ^ x)) & 1u;
            if (in_x == in_comp)
                throw std::invalid_argument("exactly one of each complementary subset pair required");
        }
        if (!((mask >> full) & 1u))
            throw std::invalid_argument("the full voter set must be decisive (unanimity)");
    }

    int n() const { return n_; }
    std::uint64_t mask() const { return mask_; }
    bool contains(std::uint64_t subset) const { return (mask_ >> subset) & 1u; }

    // Subset lists use 1-based voter indices.
    static DecisiveCoalition from_subsets(int n, const std::vector<std::vector<int>>& subsets) {
        std::uint64_t mask = 0;
        for (const auto& s : subsets) {
            std::uint64_t bits = 0;
            for (int v : s) {
                if (v < 1 || v > n) throw std::invalid_argument("voter index out of range");
                bits |= std::uint64_t{1} << (v - 1);
            }
            mask |= std::uint64_t{1} << bits;
        }
        return DecisiveCoalition(n, mask);
    }

    std::vector<std::vector<int>> subsets() const {
        std::vector<std::vector<int>> out;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n_); ++x)
            if (contains(x)) {
                std::vector<int> s;
                for (int v = 0; v < n_; ++v)
                    if ((x >> v) & 1u) s.push_back(v + 1);
                out.push_back(std::move(s));
            }
        return out;
    }

    // Characteristic Boolean function: 1 iff the set of 1-voters is decisive.
    // Self-dual by the complementation property.
    BooleanFunction boolean_function() const { return BooleanFunction(n_, mask_); }

    bool is_monotone() const { return boolean_function().is_monotone(); }
    bool is_dictatorial() const { return boolean_function().is_projection(); }
    // Counting-out structure: decisive iff an odd number of non-dummy voters agree.
    bool is_odd_parity_family() const { return boolean_function().is_linear(); }

    bool operator==(const DecisiveCoalition&) const = default;

  private:
    int n_;
    std::uint64_t mask_;
};

inline std::vector<DecisiveCoalition> all_unanimous_coalitions(int n) {
    // One free bit per complementary subset pair, with the pair containing the
    // full set forced: 2^(2^(n-1) - 1) coalitions.
    std::uint64_t total = std::uint64_t{1} << n;
    std::uint64_t full = total - 1;
    std::vector<std::uint64_t> reps;  // one subset per complementary pair, full-set pair excluded
    for (std::uint64_t x = 0; x < total; ++x)
        if (x < (full ^ x) && x != 0) reps.push_back(x);
    std::vector<DecisiveCoalition> out;
    out.reserve(std::uint64_t{1} << reps.size());
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << reps.size()); ++pick) {
        std::uint64_t mask = std::uint64_t{1} << full;
        for (std::size_t i = 0; i < reps.size(); ++i)
            mask |= std::uint64_t{1} << ((pick >> i) & 1u ? reps[i] : (full ^ reps[i]));
        out.emplace_back(n, mask);
    }
    return out;
}

// An aggregation rule: either local (backed by a conservative 2-function) or
// an explicit table over C^n for small m.
class Rule {
  public:
    static Rule local(TwoFunction f) {
        if (!f.is_conservative())
            throw std::invalid_argument("local rules require a conservative 2-function");
        return Rule(std::move(f));
    }

    // outputs[idx] with idx = sum c_i * |C|^i (little-endian in the inputs).
    static Rule tabled(int m, int n, std::vector<std::uint32_t> outputs) {
        if (m > 3) throw std::invalid_argument("tabled rules are capped at m <= 3");
        if (n < 1 || n > 3) throw std::invalid_argument("tabled rules are capped at arity <= 3");
        std::uint64_t expect = 1;
        for (int i = 0; i < n; ++i) expect *= choice_count(m);
        if (outputs.size() != expect) throw std::invalid_argument("tabled rule size mismatch");
        for (auto o : outputs)
            if (o >= choice_count(m)) throw std::invalid_argument("tabled output out of range");
        Rule r(m, n, std::move(outputs));
        if (!r.is_unanimous()) throw std::invalid_argument("tabled rule violates unanimity");
        return r;
    }

    bool is_local_variant() const { return two_.has_value(); }
    int m() const { return m_; }
    int arity() const { return n_; }

    ChoiceFunction apply(const std::vector<ChoiceFunction>& inputs) const {
        if (static_cast<int>(inputs.size()) != n_) throw std::invalid_argument("input arity mismatch");
        for (const auto& c : inputs)
            if (c.m() != m_) throw std::invalid_argument("input universe mismatch");
        if (two_) {
            std::uint32_t bits = 0;
            std::vector<std::uint8_t> args(n_);
            for (auto [i, j] : all_pairs(m_)) {
                for (int v = 0; v < n_; ++v) args[v] = static_cast<std::uint8_t>(inputs[v].chosen(i, j));
                if (two_->eval(args) == j) bits |= 1u << pair_index(m_, i, j);
            }
            return ChoiceFunction(m_, bits);
        }
        std::uint64_t idx = 0;
        for (int v = n_ - 1; v >= 0; --v) idx = idx * choice_count(m_) + inputs[v].bits();
        return ChoiceFunction(m_, table_[idx]);
    }

    bool is_unanimous() const {
        if (two_) return two_->is_conservative();
        for (std::uint32_t c = 0; c < choice_count(m_); ++c) {
            std::vector<ChoiceFunction> in(n_, ChoiceFunction(m_, c));
            if (apply(in).bits() != c) return false;
        }
        return true;
    }

    bool is_local() const {
        if (two_) return true;
        // The output at a pair must be a function of the inputs at that pair.
        std::uint64_t total = 1;
        for (int i = 0; i < n_; ++i) total *= choice_count(m_);
        for (auto [i, j] : all_pairs(m_)) {
            std::map<std::vector<int>, int> seen;
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                std::vector<ChoiceFunction> in;
                std::uint64_t rest = idx;
                for (int v = 0; v < n_; ++v) {
                    in.emplace_back(m_, static_cast<std::uint32_t>(rest % choice_count(m_)));
                    rest /= choice_count(m_);
                }
                std::vector<int> key(n_);
                for (int v = 0; v < n_; ++v) key[v] = in[v].chosen(i, j);
                int out = apply(in).chosen(i, j);
                auto [it, inserted] = seen.emplace(key, out);
                if (!inserted && it->second != out) return false;
            }
        }
        return true;
    }

    bool operator==(const Rule&) const = default;

  private:
    explicit Rule(TwoFunction f) : m_(f.m()), n_(f.arity()), two_(std::move(f)) {}
    Rule(int m, int n, std::vector<std::uint32_t> table) : m_(m), n_(n), table_(std::move(table)) {}

    int m_;
    int n_;
    std::optional<TwoFunction> two_;
    std::vector<std::uint32_t> table_;

    friend TwoFunction two_function_of_rule(const Rule&);
};

// f_sigma(c1..cn) = (f(c1_sigma, ..., cn_sigma))_{sigma^{-1}}
inline ChoiceFunction apply_acted(const Rule& f, const Permutation& sigma,
                                  const std::vector<ChoiceFunction>& inputs) {
    std::vector<ChoiceFunction> acted;
    acted.reserve(inputs.size());
    for (const auto& c : inputs) acted.push_back(act(c, sigma));
    return act(f.apply(acted), sigma.inverse());
}

// The unique conservative 2-function representing a local rule.
inline TwoFunction two_function_of_rule(const Rule& f) {
    if (f.is_local_variant()) return *f.two_;
    if (!f.is_local()) throw std::invalid_argument("rule is not local");
    int m = f.m(), n = f.arity();
    return TwoFunction::from_lambda(m, n, [&](std::span<const std::uint8_t> t) {
        auto vals = TwoDomain::value_set(t);
        int lo = vals[0], hi = vals.size() == 2 ? vals[1] : (vals[0] + 1) % m;
        if (lo > hi) std::swap(lo, hi);
        // Choice functions agreeing with the tuple on {lo,hi}; everything else
        // is irrelevant by locality.
        std::vector<ChoiceFunction> in;
        for (int v = 0; v < n; ++v) {
            std::uint32_t bits = 0;
            if (t[v] == hi) bits |= 1u << pair_index(m, lo, hi);
            in.emplace_back(m, bits);
        }
        return f.apply(in).chosen(lo, hi);
    });
}

inline Rule rule_of_two_function(TwoFunction f) { return Rule::local(std::move(f)); }

// The local neutral rule of a decisive coalition: the value whose supporter
// set is decisive wins each pair.
inline TwoFunction coalition_two_function(const DecisiveCoalition& K, int m) {
    return TwoFunction::from_lambda(m, K.n(), [&](std::span<const std::uint8_t> t) {
        auto vals = TwoDomain::value_set(t);
        if (vals.size() == 1) return vals[0];
        std::uint64_t supporters_hi = 0;
        for (std::size_t v = 0; v < t.size(); ++v)
            if (t[v] == vals[1]) supporters_hi |= std::uint64_t{1} << v;
        return K.contains(supporters_hi) ? vals[1] : vals[0];
    });
}

inline Rule rule_from_coalition(const DecisiveCoalition& K, int m) {
    return Rule::local(coalition_two_function(K, m));
}

enum class SpecialRule { Delta, Nu, Lambda, Mu };

inline DecisiveCoalition special_coalition(SpecialRule which) {
    switch (which) {
        case SpecialRule::Delta:
            return DecisiveCoalition::from_subsets(3, {{1}, {1, 2}, {1, 3}, {1, 2, 3}});
        case SpecialRule::Nu:
            return DecisiveCoalition::from_subsets(3, {{2}, {3}, {2, 3}, {1, 2, 3}});
        case SpecialRule::Lambda:
            return DecisiveCoalition::from_subsets(3, {{1}, {2}, {3}, {1, 2, 3}});
        case SpecialRule::Mu:
            return DecisiveCoalition::from_subsets(3, {{1, 2}, {2, 3}, {1, 3}, {1, 2, 3}});
    }
    throw std::logic_error("bad SpecialRule");
}

inline Rule special_rule(SpecialRule which, int m) {
    return rule_from_coalition(special_coalition(which), m);
}

enum class CayleyRule { A3, A4 };

// The two local non-neutral counterexample rules, bit-exact Cayley tables.
inline Rule cayley_rule(CayleyRule which) {
    if (which == CayleyRule::A3) {
        // rows: first argument, columns: second argument
        static constexpr int table[3][3] = {{0, 1, 0}, {1, 1, 2}, {0, 2, 2}};
        return Rule::local(TwoFunction::from_lambda(
            3, 2, [&](std::span<const std::uint8_t> t) { return table[t[0]][t[1]]; }));
    }
    static constexpr int table[4][4] = {
        {0, 1, 0, 3}, {0, 1, 2, 1}, {2, 1, 2, 3}, {0, 3, 2, 3}};
    return Rule::local(TwoFunction::from_lambda(
        4, 2, [&](std::span<const std::uint8_t> t) { return table[t[0]][t[1]]; }));
}

// Locality + self-duality of the representing 2-function; direct generator
// check for tabled rules.
inline bool is_neutral(const Rule& f) {
    if (f.is_local_variant()) return is_self_dual(two_function_of_rule(f));
    int m = f.m();
    std::uint64_t total = 1;
    for (int i = 0; i < f.arity(); ++i) total *= choice_count(m);
    for (const Permutation& sigma : {Permutation::transposition(m, 0, 1), Permutation::cycle(m)}) {
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::vector<ChoiceFunction> in;
            std::uint64_t rest = idx;
            for (int v = 0; v < f.arity(); ++v) {
                in.emplace_back(m, static_cast<std::uint32_t>(rest % choice_count(m)));
                rest /= choice_count(m);
            }
            if (apply_acted(f, sigma, in) != f.apply(in)) return false;
        }
    }
    return true;
}

// The Post class of the clone generated by the coalition's self-dual Boolean
// function.  Self-dual 0,1-preserving clones form the four-element sublattice
// {O1, D2, L4, D1}, so the generated clone is determined by dictatorship,
// monotonicity and linearity alone.
inline PostClass classify_coalition(const DecisiveCoalition& K) {
    if (K.is_dictatorial()) return PostClass::O1;
    if (K.is_monotone()) return PostClass::D2;
    if (K.is_odd_parity_family()) return PostClass::L4;
    return PostClass::D1;
}

// P(correct outcome) = sum over decisive X of prod_{i in X} p_i prod_{i not
// in X} (1 - p_i), exact.
inline Rational correct_probability(const DecisiveCoalition& K, const std::vector<Rational>& p) {
    if (static_cast<int>(p.size()) != K.n()) throw std::invalid_argument("probability vector length mismatch");
    Rational total(0);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << K.n()); ++x) {
        if (!K.contains(x)) continue;
        Rational term(1);
        for (int i = 0; i < K.n(); ++i)
            term = term * ((x >> i) & 1u ? p[i] : Rational(1) - p[i]);
        total = total + term;
    }
    return total;
}

}  // namespace agclone
