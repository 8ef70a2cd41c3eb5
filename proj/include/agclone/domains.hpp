#pragma once

// Restricted domains: invariance, triviality, symmetry, orbits and
// invariant-equivalence checking.

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "agclone/core.hpp"
#include "agclone/rules.hpp"

namespace agclone {

// A set D of choice functions, canonically ordered by bitvector.
class DomainSet {
  public:
    DomainSet(int m, std::vector<std::uint32_t> members) : m_(m), members_(std::move(members)) {
        check_m(m);
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        for (auto b : members_)
            if (b >= choice_count(m)) throw std::invalid_argument("member outside the universe");
    }

    static DomainSet of(const std::vector<ChoiceFunction>& cs) {
        if (cs.empty()) throw std::invalid_argument("empty domain set");
        std::vector<std::uint32_t> bits;
        for (const auto& c : cs) {
            if (c.m() != cs.front().m()) throw std::invalid_argument("mixed universes");
            bits.push_back(c.bits());
        }
        return DomainSet(cs.front().m(), std::move(bits));
    }

    static DomainSet full(int m) {
        std::vector<std::uint32_t> bits(choice_count(m));
        for (std::uint32_t b = 0; b < choice_count(m); ++b) bits[b] = b;
        return DomainSet(m, std::move(bits));
    }

    int m() const { return m_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<std::uint32_t>& members() const { return members_; }
    bool contains(std::uint32_t bits) const {
        return std::binary_search(members_.begin(), members_.end(), bits);
    }

    std::vector<ChoiceFunction> choice_functions() const {
        std::vector<ChoiceFunction> out;
        out.reserve(members_.size());
        for (auto b : members_) out.emplace_back(m_, b);
        return out;
    }

    DomainSet acted(const Permutation& sigma) const {
        std::vector<std::uint32_t> bits;
        bits.reserve(members_.size());
        for (auto b : members_) bits.push_back(act(ChoiceFunction(m_, b), sigma).bits());
        return DomainSet(m_, std::move(bits));
    }

    bool all_rational() const {
        for (auto b : members_)
            if (!is_rational(ChoiceFunction(m_, b))) return false;
        return true;
    }

    bool operator==(const DomainSet&) const = default;
    auto operator<=>(const DomainSet&) const = default;

  private:
    int m_;
    std::vector<std::uint32_t> members_;
};

// f maps D^n into D.
inline bool is_invariant(const DomainSet& D, const Rule& f) {
    if (D.m() != f.m()) throw std::invalid_argument("universe mismatch");
    int n = f.arity();
    std::size_t sz = D.size();
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= sz;
    std::vector<ChoiceFunction> in;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        in.clear();
        std::uint64_t rest = idx;
        for (int v = 0; v < n; ++v) {
            in.emplace_back(D.m(), D.members()[rest % sz]);
            rest /= sz;
        }
        if (!D.contains(f.apply(in).bits())) return false;
    }
    return true;
}

// Pairs where every member agrees.
inline std::vector<int> agreement_pairs(const DomainSet& D) {
    std::vector<int> Z;
    auto cs = D.choice_functions();
    for (auto [i, j] : all_pairs(D.m())) {
        bool agree = true;
        for (const auto& c : cs) agree &= (c.chosen(i, j) == cs.front().chosen(i, j));
        if (agree) Z.push_back(pair_index(D.m(), i, j));
    }
    return Z;
}

// D is trivial iff it is the full agreement class of one of its members on
// the common agreement pair set Z; cardinality decides, since D always sits
// inside that class.
inline bool is_trivial(const DomainSet& D) {
    if (D.size() == 0) throw std::invalid_argument("empty domain set");
    int free_pairs = pair_count(D.m()) - static_cast<int>(agreement_pairs(D).size());
    return D.size() == (std::uint64_t{1} << free_pairs);
}

inline std::vector<DomainSet> orbit(const DomainSet& D) {
    std::set<DomainSet> seen;
    std::vector<DomainSet> out;
    for (const auto& sigma : all_permutations(D.m())) {
        auto img = D.acted(sigma);
        if (seen.insert(img).second) out.push_back(std::move(img));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_symmetric(const DomainSet& D) { return orbit(D).size() == 1; }

// Whether a class of domain sets is closed under the permutation action.
inline bool is_symmetric_class(const std::vector<DomainSet>& cls) {
    std::set<DomainSet> seen(cls.begin(), cls.end());
    for (const auto& D : cls)
        for (const auto& sigma : all_permutations(D.m()))
            if (!seen.count(D.acted(sigma))) return false;
    return true;
}

// The invariant family of a rule over all 2^|C| subsets, m = 3 only.
inline std::vector<bool> invariant_family_m3(const Rule& f) {
    if (f.m() != 3) throw std::invalid_argument("exhaustive families are limited to m = 3");
    std::vector<bool> out(256);
    for (std::uint32_t set_bits = 1; set_bits < 256; ++set_bits) {
        std::vector<std::uint32_t> members;
        for (std::uint32_t c = 0; c < 8; ++c)
            if ((set_bits >> c) & 1u) members.push_back(c);
        out[set_bits] = is_invariant(DomainSet(3, std::move(members)), f);
    }
    out[0] = true;  // the empty set is vacuously invariant
    return out;
}

inline bool invariantly_equivalent_exhaustive(const Rule& f, const Rule& g) {
    if (f.m() != 3 || g.m() != 3)
        throw std::invalid_argument("exhaustive invariant comparison is limited to m = 3");
    return invariant_family_m3(f) == invariant_family_m3(g);
}

struct InvariantSearchResult {
    std::vector<DomainSet> found;
    bool complete;  // false when the candidate budget ran out
};

struct InvariantSearchOptions {
    bool require_symmetric = false;
    bool require_nontrivial = false;
    std::uint64_t candidate_budget = 5'000'000;
};

// All D with |D| <= max_size passing the predicates, in canonical order.
inline InvariantSearchResult bounded_invariant_search(const Rule& f, int max_size,
                                                      InvariantSearchOptions opts = {}) {
    if (f.m() > 5) throw std::invalid_argument("bounded search is limited to m <= 5");
    std::uint32_t universe = static_cast<std::uint32_t>(choice_count(f.m()));
    InvariantSearchResult result{{}, true};
    std::uint64_t examined = 0;
    std::vector<std::uint32_t> combo;
    auto rec = [&](auto&& self, std::uint32_t next, int remaining) -> bool {
        if (!combo.empty()) {
            if (++examined > opts.candidate_budget) {
                result.complete = false;
                return false;
            }
            DomainSet D(f.m(), combo);
            bool ok = is_invariant(D, f);
            ok = ok && (!opts.require_nontrivial || !is_trivial(D));
            ok = ok && (!opts.require_symmetric || is_symmetric(D));
            if (ok) result.found.push_back(std::move(D));
        }
        if (remaining == 0) return true;
        for (std::uint32_t c = next; c < universe; ++c) {
            combo.push_back(c);
            bool keep_going = self(self, c + 1, remaining - 1);
            combo.pop_back();
            if (!keep_going) return false;
        }
        return true;
    };
    rec(rec, 0, max_size);
    std::sort(result.found.begin(), result.found.end());
    return result;
}

}  // namespace agclone
