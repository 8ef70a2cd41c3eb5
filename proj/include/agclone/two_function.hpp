#pragma once

// Conservative 2-functions: n-ary functions on the tuples with at most two
// distinct entries, the table form of local aggregation rules.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <vector>

#include "agclone/boolean.hpp"
#include "agclone/core.hpp"

namespace agclone {

// Canonical lexicographic enumeration of the tuples in A^n with <= 2 distinct
// values, plus a dense rank map for O(1) table lookup.
class TwoDomain {
  public:
    static const TwoDomain& get(int m, int n) {
        static std::mutex mu;
        static std::map<std::pair<int, int>, std::unique_ptr<TwoDomain>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(m, n);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, std::unique_ptr<TwoDomain>(new TwoDomain(m, n))).first;
        return *it->second;
    }

    int m() const { return m_; }
    int arity() const { return n_; }
    int size() const { return static_cast<int>(tuples_.size()); }

    std::span<const std::uint8_t> tuple(int rank) const {
        return {tuples_[rank].data(), static_cast<std::size_t>(n_)};
    }

    int rank(std::span<const std::uint8_t> t) const {
        int code = 0;
        for (int i = 0; i < n_; ++i) code = code * m_ + t[i];
        int r = rank_by_code_[code];
        if (r < 0) throw std::invalid_argument("tuple has more than two distinct values");
        return r;
    }

    // Distinct values of a tuple; size 1 or 2, ascending.
    static std::vector<int> value_set(std::span<const std::uint8_t> t) {
        std::vector<int> vals;
        for (auto x : t) {
            bool seen = false;
            for (int v : vals) seen |= (v == x);
            if (!seen) vals.push_back(x);
        }
        std::sort(vals.begin(), vals.end());
        return vals;
    }

  private:
    TwoDomain(int m, int n) : m_(m), n_(n) {
        check_m(m);
        if (n < 1 || n > 6) throw std::invalid_argument("2-function arity out of range 1..6");
        int total = 1;
        for (int i = 0; i < n; ++i) total *= m;
        rank_by_code_.assign(total, -1);
        std::vector<std::uint8_t> t(n, 0);
        for (int code = 0; code < total; ++code) {
            int c = code;
            for (int i = n - 1; i >= 0; --i) {
                t[i] = static_cast<std::uint8_t>(c % m);
                c /= m;
            }
            if (value_set(t).size() <= 2) {
                rank_by_code_[code] = static_cast<int>(tuples_.size());
                tuples_.push_back(t);
            }
        }
    }

    int m_;
    int n_;
    std::vector<std::vector<std::uint8_t>> tuples_;
    std::vector<int> rank_by_code_;
};

class TwoFunction {
  public:
    TwoFunction(int m, int n, std::vector<std::uint8_t> table)
        : m_(m), n_(n), table_(std::move(table)) {
        const auto& dom = TwoDomain::get(m, n);
        if (static_cast<int>(table_.size()) != dom.size())
            throw std::invalid_argument("table length does not match the two-valued domain");
    }

    int m() const { return m_; }
    int arity() const { return n_; }
    const std::vector<std::uint8_t>& table() const { return table_; }
    const TwoDomain& domain() const { return TwoDomain::get(m_, n_); }

    int eval(std::span<const std::uint8_t> args) const { return table_[domain().rank(args)]; }

    int eval(std::initializer_list<int> args) const {
        std::vector<std::uint8_t> t(args.size());
        int i = 0;
        for (int a : args) t[i++] = static_cast<std::uint8_t>(a);
        return eval(std::span<const std::uint8_t>(t));
    }

    bool is_conservative() const {
        const auto& dom = domain();
        for (int r = 0; r < dom.size(); ++r) {
            auto t = dom.tuple(r);
            bool hit = false;
            for (auto x : t) hit |= (x == table_[r]);
            if (!hit) return false;
        }
        return true;
    }

    bool is_projection() const {
        for (int i = 0; i < n_; ++i)
            if (*this == projection(m_, n_, i)) return true;
        return false;
    }

    static TwoFunction projection(int m, int n, int i) {
        const auto& dom = TwoDomain::get(m, n);
        std::vector<std::uint8_t> table(dom.size());
        for (int r = 0; r < dom.size(); ++r) table[r] = dom.tuple(r)[i];
        return TwoFunction(m, n, std::move(table));
    }

    static TwoFunction from_lambda(int m, int n, auto&& fn) {
        const auto& dom = TwoDomain::get(m, n);
        std::vector<std::uint8_t> table(dom.size());
        for (int r = 0; r < dom.size(); ++r)
            table[r] = static_cast<std::uint8_t>(fn(dom.tuple(r)));
        return TwoFunction(m, n, std::move(table));
    }

    bool operator==(const TwoFunction& o) const = default;
    auto operator<=>(const TwoFunction& o) const = default;

  private:
    int m_;
    int n_;
    std::vector<std::uint8_t> table_;
};

// g_sigma(x1..xn) = sigma^{-1}(g(sigma(x1)..sigma(xn)))
inline TwoFunction act(const TwoFunction& g, const Permutation& sigma) {
    if (g.m() != sigma.size()) throw std::invalid_argument("2-function/permutation size mismatch");
    Permutation inv = sigma.inverse();
    return TwoFunction::from_lambda(g.m(), g.arity(), [&](std::span<const std::uint8_t> t) {
        std::vector<std::uint8_t> mapped(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) mapped[i] = static_cast<std::uint8_t>(sigma(t[i]));
        return inv(g.eval(mapped));
    });
}

// Checks the two S_A generators; valid by the action law.
inline bool is_self_dual(const TwoFunction& g) {
    int m = g.m();
    if (act(g, Permutation::transposition(m, 0, 1)) != g) return false;
    return act(g, Permutation::cycle(m)) == g;
}

// Pointwise composition g(inner_1, ..., inner_n) on the k-ary domain.
// Conservative inner functions keep every argument tuple within two values.
inline TwoFunction superpose(const TwoFunction& g, const std::vector<TwoFunction>& inner) {
    if (static_cast<int>(inner.size()) != g.arity())
        throw std::invalid_argument("superposition arity mismatch");
    int k = inner.front().arity();
    for (const auto& f : inner)
        if (f.m() != g.m() || f.arity() != k)
            throw std::invalid_argument("inner functions must share m and arity");
    const auto& dom = TwoDomain::get(g.m(), k);
    std::vector<std::uint8_t> table(dom.size());
    std::vector<std::uint8_t> args(g.arity());
    for (int r = 0; r < dom.size(); ++r) {
        for (int i = 0; i < g.arity(); ++i) args[i] = static_cast<std::uint8_t>(inner[i].table()[r]);
        table[r] = static_cast<std::uint8_t>(g.eval(args));
    }
    return TwoFunction(g.m(), k, std::move(table));
}

// Restriction of g to b^n, transported along the bijection that sends
// zero_element to 0 and the other element of b to 1.
inline BooleanFunction boolean_slice(const TwoFunction& g, int lo, int hi, int zero_element) {
    if (lo == hi || lo < 0 || hi >= g.m() || lo > hi) throw std::invalid_argument("invalid pair");
    if (zero_element != lo && zero_element != hi)
        throw std::invalid_argument("zero element outside the pair");
    int one_element = (zero_element == lo) ? hi : lo;
    int n = g.arity();
    std::uint64_t tt = 0;
    std::vector<std::uint8_t> args(n);
    for (int idx = 0; idx < (1 << n); ++idx) {
        for (int i = 0; i < n; ++i)
            args[i] = static_cast<std::uint8_t>((idx >> i) & 1 ? one_element : zero_element);
        if (g.eval(args) == one_element) tt |= std::uint64_t{1} << idx;
    }
    return BooleanFunction(n, tt);
}

inline BooleanFunction boolean_slice(const TwoFunction& g, int lo, int hi) {
    return boolean_slice(g, lo, hi, lo);
}

// Dependent lift of a self-dual Boolean function: one shared h reproduced on
// every pair under every bijection.
inline TwoFunction dependent_lift(const BooleanFunction& h, int m) {
    if (!h.is_self_dual()) throw std::invalid_argument("dependent lift requires a self-dual function");
    if (!h.preserves_zero() || !h.preserves_one())
        throw std::invalid_argument("dependent lift requires a 0,1-preserving function");
    return TwoFunction::from_lambda(m, h.arity(), [&](std::span<const std::uint8_t> t) {
        auto vals = TwoDomain::value_set(t);
        if (vals.size() == 1) return vals[0];
        std::vector<int> bits(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) bits[i] = (t[i] == vals[1]);
        return h.eval_args(bits) ? vals[1] : vals[0];
    });
}

// Patchwork lift: behaves as h (under lo->0, hi->1) on the pair {lo,hi} and
// as the first projection on every other pair.
inline TwoFunction patchwork_lift(const BooleanFunction& h, int m, int lo, int hi) {
    if (!h.preserves_zero() || !h.preserves_one())
        throw std::invalid_argument("patchwork lift requires a 0,1-preserving function");
    return TwoFunction::from_lambda(m, h.arity(), [&](std::span<const std::uint8_t> t) {
        auto vals = TwoDomain::value_set(t);
        if (vals.size() == 1) return vals[0];
        if (vals[0] != lo || vals[1] != hi) return static_cast<int>(t[0]);
        std::vector<int> bits(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) bits[i] = (t[i] == hi);
        return h.eval_args(bits) ? hi : lo;
    });
}

// All conservative n-ary 2-functions: two choices per non-constant tuple.
// Feasible only for small m and n (64 functions at m = 3, n = 2).
inline std::vector<TwoFunction> all_conservative_two_functions(int m, int n) {
    const auto& dom = TwoDomain::get(m, n);
    std::vector<int> free_ranks;
    std::vector<std::uint8_t> base(dom.size());
    for (int r = 0; r < dom.size(); ++r) {
        auto vals = TwoDomain::value_set(dom.tuple(r));
        base[r] = static_cast<std::uint8_t>(vals[0]);
        if (vals.size() == 2) free_ranks.push_back(r);
    }
    if (free_ranks.size() > 24) throw std::invalid_argument("enumeration would be too large");
    std::vector<TwoFunction> out;
    out.reserve(std::size_t{1} << free_ranks.size());
    for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << free_ranks.size()); ++pick) {
        auto table = base;
        for (std::size_t i = 0; i < free_ranks.size(); ++i)
            if ((pick >> i) & 1u) {
                auto vals = TwoDomain::value_set(dom.tuple(free_ranks[i]));
                table[free_ranks[i]] = static_cast<std::uint8_t>(vals[1]);
            }
        out.emplace_back(m, n, std::move(table));
    }
    return out;
}

}  // namespace agclone
