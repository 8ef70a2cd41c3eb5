#pragma once

// Clone closure and membership: n-ary parts of generated clones, Post-class
// fingerprinting, two-cell binary witnesses and the constructive
// interpolation used to certify membership in free extensions.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "agclone/boolean.hpp"
#include "agclone/core.hpp"
#include "agclone/two_function.hpp"

namespace agclone {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A verdict the theory says cannot happen.  Raised instead of guessing.
struct FalsificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class PostClass { O1, D1, D2, L4, A4, C4 };

inline std::string to_string(PostClass c) {
    switch (c) {
        case PostClass::O1: return "O1";
        case PostClass::D1: return "D1";
        case PostClass::D2: return "D2";
        case PostClass::L4: return "L4";
        case PostClass::A4: return "A4";
        case PostClass::C4: return "C4";
    }
    throw std::logic_error("bad PostClass");
}

inline PostClass post_class_from_string(const std::string& s) {
    for (PostClass c : {PostClass::O1, PostClass::D1, PostClass::D2, PostClass::L4, PostClass::A4,
                        PostClass::C4})
        if (to_string(c) == s) return c;
    throw std::invalid_argument("unknown Post class: " + s);
}

inline bool is_self_dual_class(PostClass c) {
    return c == PostClass::O1 || c == PostClass::D1 || c == PostClass::D2 || c == PostClass::L4;
}

inline std::vector<BooleanFunction> post_class_generators(PostClass c) {
    switch (c) {
        case PostClass::O1: return {};
        case PostClass::D1: return {bool_median3(), bool_xor3()};
        case PostClass::D2: return {bool_median3()};
        case PostClass::L4: return {bool_xor3()};
        case PostClass::A4: return {bool_and2(), bool_or2()};
        case PostClass::C4: return {bool_c4_generator()};
    }
    throw std::logic_error("bad PostClass");
}

struct ClosureBudget {
    std::size_t max_elements = 2'000'000;
};

// The n-ary part of the Boolean clone generated by gens: closure of the n
// projections under coordinatewise application of every generator.
inline std::vector<BooleanFunction> boolean_nary_closure(const std::vector<BooleanFunction>& gens,
                                                         int n,
                                                         ClosureBudget budget = {}) {
    std::vector<std::uint64_t> members;
    std::set<std::uint64_t> seen;
    for (int i = 0; i < n; ++i) {
        auto p = BooleanFunction::projection(n, i);
        if (seen.insert(p.tt()).second) members.push_back(p.tt());
    }
    int rows = 1 << n;
    std::size_t frontier = 0;
    while (frontier < members.size()) {
        std::size_t old_size = members.size();
        for (const auto& g : gens) {
            int k = g.arity();
            std::vector<std::size_t> idx(k, 0);
            while (true) {
                bool touches_frontier = false;
                for (int i = 0; i < k; ++i) touches_frontier |= (idx[i] >= frontier);
                if (touches_frontier) {
                    std::uint64_t out = 0;
                    for (int row = 0; row < rows; ++row) {
                        int gidx = 0;
                        for (int i = 0; i < k; ++i)
                            if ((members[idx[i]] >> row) & 1u) gidx |= 1 << i;
                        if (g.eval(gidx)) out |= std::uint64_t{1} << row;
                    }
                    if (seen.insert(out).second) {
                        members.push_back(out);
                        if (members.size() > budget.max_elements)
                            throw BudgetExceeded("boolean closure budget exceeded");
                    }
                }
                int pos = k - 1;
                while (pos >= 0 && ++idx[pos] == old_size) idx[pos--] = 0;
                if (pos < 0) break;
            }
        }
        frontier = old_size;
    }
    std::sort(members.begin(), members.end());
    std::vector<BooleanFunction> out;
    out.reserve(members.size());
    for (auto tt : members) out.emplace_back(n, tt);
    return out;
}

// Same fixpoint for conservative 2-functions over a fixed m.
inline std::vector<TwoFunction> two_function_nary_closure(const std::vector<TwoFunction>& gens,
                                                          int m,
                                                          int n,
                                                          ClosureBudget budget = {}) {
    for (const auto& g : gens) {
        if (g.m() != m) throw std::invalid_argument("generator m mismatch");
        if (!g.is_conservative()) throw std::invalid_argument("generator is not conservative");
    }
    const auto& dom = TwoDomain::get(m, n);
    std::vector<std::vector<std::uint8_t>> members;
    std::set<std::vector<std::uint8_t>> seen;
    for (int i = 0; i < n; ++i) {
        auto t = TwoFunction::projection(m, n, i).table();
        if (seen.insert(t).second) members.push_back(t);
    }
    std::size_t frontier = 0;
    std::vector<std::uint8_t> args;
    while (frontier < members.size()) {
        std::size_t old_size = members.size();
        for (const auto& g : gens) {
            int k = g.arity();
            args.resize(k);
            std::vector<std::size_t> idx(k, 0);
            while (true) {
                bool touches_frontier = false;
                for (int i = 0; i < k; ++i) touches_frontier |= (idx[i] >= frontier);
                if (touches_frontier) {
                    std::vector<std::uint8_t> out(dom.size());
                    for (int r = 0; r < dom.size(); ++r) {
                        for (int i = 0; i < k; ++i) args[i] = members[idx[i]][r];
                        out[r] = static_cast<std::uint8_t>(g.eval(args));
                    }
                    if (seen.insert(out).second) {
                        members.push_back(std::move(out));
                        if (members.size() > budget.max_elements)
                            throw BudgetExceeded("2-function closure budget exceeded");
                    }
                }
                int pos = k - 1;
                while (pos >= 0 && ++idx[pos] == old_size) idx[pos--] = 0;
                if (pos < 0) break;
            }
        }
        frontier = old_size;
    }
    std::sort(members.begin(), members.end());
    std::vector<TwoFunction> out;
    out.reserve(members.size());
    for (auto& t : members) out.emplace_back(m, n, std::move(t));
    return out;
}

// Fingerprint a 0,1-preserving, duality-closed generated clone by membership
// of four probes in its ternary part.
inline PostClass post_class(const std::vector<BooleanFunction>& generators) {
    std::vector<BooleanFunction> closed;
    for (const auto& g : generators) {
        if (!g.preserves_zero() || !g.preserves_one())
            throw std::invalid_argument("generator does not preserve 0 and 1");
        closed.push_back(g);
        closed.push_back(g.dual());
    }
    auto ternary = boolean_nary_closure(closed, 3);
    std::set<std::uint64_t> part;
    for (const auto& f : ternary) part.insert(f.tt());

    auto and3 = BooleanFunction::from_lambda(3, [](const std::vector<int>& a) { return a[0] & a[1]; });
    bool has_median = part.count(bool_median3().tt());
    bool has_xor = part.count(bool_xor3().tt());
    bool has_and = part.count(and3.tt());
    bool has_c4 = part.count(bool_c4_generator().tt());

    if (!has_median && !has_xor && !has_and && !has_c4) return PostClass::O1;
    if (has_median && !has_xor && !has_and && !has_c4) return PostClass::D2;
    if (!has_median && has_xor && !has_and && !has_c4) return PostClass::L4;
    if (has_median && has_xor && !has_and && !has_c4) return PostClass::D1;
    if (has_median && !has_xor && has_and && !has_c4) return PostClass::A4;
    if (has_median && has_xor && has_and && has_c4) return PostClass::C4;
    throw FalsificationError("probe signature outside the six duality-closed classes");
}

// Cached n-ary part of a named Post class.
inline const std::vector<BooleanFunction>& post_class_members(PostClass c, int n) {
    static std::map<std::pair<PostClass, int>, std::vector<BooleanFunction>> cache;
    auto key = std::make_pair(c, n);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::vector<BooleanFunction> gens;
        for (const auto& g : post_class_generators(c)) {
            gens.push_back(g);
            gens.push_back(g.dual());
        }
        it = cache.emplace(key, boolean_nary_closure(gens, n)).first;
    }
    return it->second;
}

// Orbit closure {g_sigma : g in generators, sigma in S_A}.
inline std::vector<TwoFunction> symmetric_closure(const std::vector<TwoFunction>& generators) {
    if (generators.empty()) return {};
    int m = generators.front().m();
    std::set<TwoFunction> seen;
    std::vector<TwoFunction> out;
    for (const auto& sigma : all_permutations(m))
        for (const auto& g : generators) {
            if (g.m() != m) throw std::invalid_argument("generator m mismatch");
            auto h = act(g, sigma);
            if (seen.insert(h).second) out.push_back(std::move(h));
        }
    return out;
}

struct ExtensionClassification {
    enum class Kind { Free, Dependent };
    Kind kind;
    PostClass base;

    bool operator==(const ExtensionClassification&) const = default;
};

inline std::string to_string(ExtensionClassification::Kind k) {
    return k == ExtensionClassification::Kind::Free ? "free" : "dependent";
}

namespace detail {

// Post class of the pair slices of a symmetric generator set.  Slices of the
// full S_A-closure generate exactly G_b, so slicing the closed generators on
// one pair is enough.
inline PostClass slice_post_class(const std::vector<TwoFunction>& closed_gens) {
    std::vector<BooleanFunction> slices;
    for (const auto& g : closed_gens) slices.push_back(boolean_slice(g, 0, 1, 0));
    return post_class(slices);
}

// Searches for a binary non-projection in the generated clone.  The binary
// part is grown from the two projections; as long as only projections appear
// the member set cannot exceed two elements, so this terminates quickly
// either way.
inline std::optional<TwoFunction> find_binary_non_projection(
    const std::vector<TwoFunction>& closed_gens, int m) {
    std::vector<TwoFunction> members = {TwoFunction::projection(m, 2, 0),
                                        TwoFunction::projection(m, 2, 1)};
    std::set<TwoFunction> seen(members.begin(), members.end());
    std::size_t frontier = 0;
    while (frontier < members.size()) {
        std::size_t old_size = members.size();
        for (const auto& g : closed_gens) {
            int k = g.arity();
            std::vector<std::size_t> idx(k, 0);
            while (true) {
                bool touches_frontier = false;
                for (int i = 0; i < k; ++i) touches_frontier |= (idx[i] >= frontier);
                if (touches_frontier) {
                    std::vector<TwoFunction> inner;
                    inner.reserve(k);
                    for (int i = 0; i < k; ++i) inner.push_back(members[idx[i]]);
                    auto out = superpose(g, inner);
                    if (!out.is_projection()) return out;
                    if (seen.insert(out).second) members.push_back(std::move(out));
                }
                int pos = k - 1;
                while (pos >= 0 && ++idx[pos] == old_size) idx[pos--] = 0;
                if (pos < 0) break;
            }
        }
        frontier = old_size;
    }
    return std::nullopt;
}

}  // namespace detail

// Extension classifier: free extension when the binary part of the generated
// symmetric clone holds a non-projection, dependent extension otherwise.
inline ExtensionClassification classify_symmetric_2clone(const std::vector<TwoFunction>& generators) {
    if (generators.empty()) throw std::invalid_argument("empty generator set");
    int m = generators.front().m();
    if (m < 5) throw std::invalid_argument("classification requires at least 5 alternatives");
    for (const auto& g : generators)
        if (!g.is_conservative()) throw std::invalid_argument("generator is not conservative");
    auto closed = symmetric_closure(generators);
    PostClass base = detail::slice_post_class(closed);
    if (detail::find_binary_non_projection(closed, m))
        return {ExtensionClassification::Kind::Free, base};
    if (!is_self_dual_class(base))
        throw FalsificationError("dependent extension with base " + to_string(base) +
                                 " outside {O1, D1, D2, L4}");
    return {ExtensionClassification::Kind::Dependent, base};
}

struct ExtensionMembership {
    bool free;
    bool dependent;
};

// Freely associated: every pair slice lies in H.  Dependently associated: one
// shared self-dual member of H reproduces g on every pair under every
// bijection.
inline ExtensionMembership extension_membership(const TwoFunction& g, PostClass H) {
    if (g.arity() > 3) throw std::invalid_argument("membership checks are limited to arity <= 3");
    std::set<std::uint64_t> part;
    for (const auto& h : post_class_members(H, g.arity())) part.insert(h.tt());

    bool free = true;
    for (auto [lo, hi] : all_pairs(g.m()))
        free = free && part.count(boolean_slice(g, lo, hi, lo).tt()) > 0;

    BooleanFunction candidate = boolean_slice(g, 0, 1, 0);
    bool dependent = candidate.is_self_dual() && part.count(candidate.tt()) > 0;
    if (dependent)
        for (auto [lo, hi] : all_pairs(g.m())) {
            dependent = dependent && boolean_slice(g, lo, hi, lo) == candidate;
            dependent = dependent && boolean_slice(g, lo, hi, hi) == candidate;
        }
    return {free, dependent};
}

// Builds members of the generated clone with prescribed values at up to two
// cells, and interpolates freely-associated targets tuple set by tuple set.
// Every table it hands out is produced by superposition from the closed
// generator set, so a successful realization is a constructive membership
// proof.
class CloneRealizer {
  public:
    CloneRealizer(int m, const std::vector<TwoFunction>& generators)
        : m_(m), gens_(symmetric_closure(generators)) {
        if (gens_.empty()) throw std::invalid_argument("empty generator set");
        for (const auto& g : gens_)
            if (!g.is_conservative()) throw std::invalid_argument("generator is not conservative");
    }

    const std::vector<TwoFunction>& closed_generators() const { return gens_; }

    // A binary member with g(a1,a2) = x and g(a3,a4) = y.  Computed by
    // closing the projection of the binary part onto the two cells; the
    // projection is compatible with superposition, so the reachable cell-value
    // patterns are exactly those of the full binary part.
    std::optional<TwoFunction> two_cell_witness(int a1, int a2, int a3, int a4, int x, int y) {
        if (x != a1 && x != a2) throw std::invalid_argument("x outside {a1,a2}");
        if (y != a3 && y != a4) throw std::invalid_argument("y outside {a3,a4}");
        auto key = std::array<int, 6>{a1, a2, a3, a4, x, y};
        auto it = two_cell_cache_.find(key);
        if (it != two_cell_cache_.end()) return it->second;

        std::map<std::pair<int, int>, TwoFunction> states;
        states.emplace(std::make_pair(a1, a3), TwoFunction::projection(m_, 2, 0));
        states.emplace(std::make_pair(a2, a4), TwoFunction::projection(m_, 2, 1));
        bool grew = true;
        while (grew && !states.count({x, y})) {
            grew = false;
            std::vector<std::pair<std::pair<int, int>, TwoFunction>> snapshot(states.begin(),
                                                                              states.end());
            for (const auto& g : gens_) {
                int k = g.arity();
                std::vector<std::size_t> idx(k, 0);
                while (true) {
                    std::vector<std::uint8_t> us(k), vs(k);
                    for (int i = 0; i < k; ++i) {
                        us[i] = static_cast<std::uint8_t>(snapshot[idx[i]].first.first);
                        vs[i] = static_cast<std::uint8_t>(snapshot[idx[i]].first.second);
                    }
                    std::pair<int, int> st{g.eval(us), g.eval(vs)};
                    if (!states.count(st)) {
                        std::vector<TwoFunction> inner;
                        for (int i = 0; i < k; ++i) inner.push_back(snapshot[idx[i]].second);
                        states.emplace(st, superpose(g, inner));
                        grew = true;
                    }
                    int pos = k - 1;
                    while (pos >= 0 && ++idx[pos] == snapshot.size()) idx[pos--] = 0;
                    if (pos < 0) break;
                }
            }
        }
        std::optional<TwoFunction> out;
        if (auto f = states.find({x, y}); f != states.end()) out = f->second;
        two_cell_cache_.emplace(key, out);
        return out;
    }

    // A member whose slice on {lo,hi} (under lo->0, hi->1) equals the given
    // truth table.  Throws FalsificationError when the slice clone does not
    // contain it.
    const TwoFunction& slice_member(int lo, int hi, int n, std::uint64_t slice_tt) {
        auto& closure = slice_closure(lo, hi, n);
        auto it = closure.find(slice_tt);
        if (it == closure.end())
            throw FalsificationError("target slice is not a member of the pair slice clone");
        return it->second;
    }

    // Free-extension interpolation: a member of the generated clone equal to the
    // freely-associated target on its whole domain.
    TwoFunction realize(const TwoFunction& target) {
        if (target.m() != m_) throw std::invalid_argument("target m mismatch");
        if (!target.is_conservative()) throw std::invalid_argument("target is not conservative");
        int n = target.arity();
        const auto& dom = TwoDomain::get(m_, n);

        // Non-constant tuples grouped by pair, canonical order inside each
        // group.  Constant tuples are forced by conservativity and need no
        // interpolation.
        auto pairs = all_pairs(m_);
        std::vector<std::vector<int>> tuples_of_pair(pairs.size());
        for (int r = 0; r < dom.size(); ++r) {
            auto vals = TwoDomain::value_set(dom.tuple(r));
            if (vals.size() == 2) tuples_of_pair[pair_index(m_, vals[0], vals[1])].push_back(r);
        }

        std::map<std::vector<int>, TwoFunction> memo;
        std::vector<int> fronts(pairs.size(), 0);

        auto rec = [&](auto&& self, std::vector<int> fr) -> TwoFunction {
            if (auto it = memo.find(fr); it != memo.end()) return it->second;
            std::vector<int> active;
            for (std::size_t p = 0; p < pairs.size(); ++p)
                if (fr[p] < static_cast<int>(tuples_of_pair[p].size())) active.push_back(static_cast<int>(p));
            TwoFunction result = TwoFunction::projection(m_, n, 0);
            if (active.size() == 1) {
                int p = active[0];
                auto slice = boolean_slice(target, pairs[p].lo, pairs[p].hi, pairs[p].lo);
                result = slice_member(pairs[p].lo, pairs[p].hi, n, slice.tt());
            } else if (active.size() >= 2) {
                int p1 = active[0], p2 = active[1];
                int x = tuples_of_pair[p1][fr[p1]];
                int y = tuples_of_pair[p2][fr[p2]];
                auto fr_x = fr;
                ++fr_x[p2];  // drop y
                auto fr_y = fr;
                ++fr_y[p1];  // drop x
                TwoFunction g_x = self(self, fr_x);
                TwoFunction g_y = self(self, fr_y);
                int gx_x = g_x.table()[x], gy_x = g_y.table()[x];
                int gx_y = g_x.table()[y], gy_y = g_y.table()[y];
                if (gx_y == gy_y) {
                    result = g_x;  // g_x already matches the target at y
                } else if (gx_x == gy_x) {
                    result = g_y;
                } else {
                    auto w = two_cell_witness(gx_x, gy_x, gx_y, gy_y, gx_x, gy_y);
                    if (!w)
                        throw FalsificationError(
                            "two-cell witness missing during interpolation (projection-only binary part?)");
                    result = superpose(*w, {g_x, g_y});
                }
            }
            memo.emplace(std::move(fr), result);
            return result;
        };
        return rec(rec, std::move(fronts));
    }

  private:
    std::map<std::uint64_t, TwoFunction>& slice_closure(int lo, int hi, int n) {
        auto key = std::make_tuple(lo, hi, n);
        auto it = slice_cache_.find(key);
        if (it != slice_cache_.end()) return it->second;

        // Quotient closure: states are Boolean slices on {lo,hi}; one concrete
        // preimage is tracked per state.  The slice of a superposition depends
        // only on the slices of its parts, so the quotient is exact.
        std::map<std::uint64_t, TwoFunction> states;
        for (int i = 0; i < n; ++i) {
            auto p = TwoFunction::projection(m_, n, i);
            states.emplace(boolean_slice(p, lo, hi, lo).tt(), p);
        }
        // Distinct generator slices with one representative generator each.
        std::vector<std::pair<BooleanFunction, const TwoFunction*>> actions;
        std::set<std::uint64_t> action_seen;
        for (const auto& g : gens_) {
            auto s = boolean_slice(g, lo, hi, lo);
            if (action_seen.insert(s.tt()).second) actions.emplace_back(s, &g);
        }
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::pair<std::uint64_t, const TwoFunction*>> snapshot;
            snapshot.reserve(states.size());
            for (const auto& [tt, f] : states) snapshot.emplace_back(tt, &f);
            int rows = 1 << n;
            for (const auto& [hb, g] : actions) {
                int k = hb.arity();
                std::vector<std::size_t> idx(k, 0);
                while (true) {
                    std::uint64_t out = 0;
                    for (int row = 0; row < rows; ++row) {
                        int gidx = 0;
                        for (int i = 0; i < k; ++i)
                            if ((snapshot[idx[i]].first >> row) & 1u) gidx |= 1 << i;
                        if (hb.eval(gidx)) out |= std::uint64_t{1} << row;
                    }
                    if (!states.count(out)) {
                        std::vector<TwoFunction> inner;
                        for (int i = 0; i < k; ++i) inner.push_back(*snapshot[idx[i]].second);
                        states.emplace(out, superpose(*g, inner));
                        grew = true;
                    }
                    int pos = k - 1;
                    while (pos >= 0 && ++idx[pos] == snapshot.size()) idx[pos--] = 0;
                    if (pos < 0) break;
                }
            }
        }
        return slice_cache_.emplace(key, std::move(states)).first->second;
    }

    int m_;
    std::vector<TwoFunction> gens_;
    std::map<std::array<int, 6>, std::optional<TwoFunction>> two_cell_cache_;
    std::map<std::tuple<int, int, int>, std::map<std::uint64_t, TwoFunction>> slice_cache_;
};

// One-shot wrapper over CloneRealizer matching the operation contract: the
// returned table equals the target everywhere, or a FalsificationError is
// raised.
inline TwoFunction realize_member(const std::vector<TwoFunction>& generators,
                                 const TwoFunction& target) {
    if (generators.empty()) throw std::invalid_argument("empty generator set");
    int m = generators.front().m();
    if (m < 5) throw std::invalid_argument("realization requires at least 5 alternatives");
    CloneRealizer realizer(m, generators);
    if (!detail::find_binary_non_projection(realizer.closed_generators(), m))
        throw std::invalid_argument("generators have a projection-only binary part");
    TwoFunction out = realizer.realize(target);
    if (out != target)
        throw FalsificationError("interpolation produced a table differing from the target");
    return out;
}

}  // namespace agclone
