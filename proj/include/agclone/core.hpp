#pragma once

// Ground universe: alternatives 0..m-1, unordered pairs in lexicographic
// order, choice functions as one bit per pair, permutation actions and
// tournaments.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace agclone {

inline constexpr int kMinAlternatives = 2;
inline constexpr int kMaxAlternatives = 8;

inline void check_m(int m) {
    if (m < kMinAlternatives || m > kMaxAlternatives)
        throw std::invalid_argument("alternative count out of supported range 2..8: " +
                                    std::to_string(m));
}

inline int pair_count(int m) { return m * (m - 1) / 2; }

// Rank of {i,j}, i<j, in the lexicographic pair order
// (0,1),(0,2),...,(0,m-1),(1,2),...
inline int pair_index(int m, int i, int j) {
    if (i > j) std::swap(i, j);
    if (i == j || i < 0 || j >= m) throw std::invalid_argument("invalid pair");
    return i * m - i * (i + 1) / 2 + (j - i - 1);
}

struct Pair {
    int lo;
    int hi;
};

inline std::vector<Pair> all_pairs(int m) {
    std::vector<Pair> out;
    out.reserve(pair_count(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) out.push_back({i, j});
    return out;
}

class Permutation {
  public:
    explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
        std::vector<char> seen(image_.size(), 0);
        for (int v : image_) {
            if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v])
                throw std::invalid_argument("image is not a permutation");
            seen[v] = 1;
        }
    }

    static Permutation identity(int m) {
        std::vector<int> img(m);
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    static Permutation transposition(int m, int a, int b) {
        auto p = identity(m);
        std::swap(p.image_[a], p.image_[b]);
        return p;
    }

    // The m-cycle 0 -> 1 -> ... -> m-1 -> 0.
    static Permutation cycle(int m) {
        std::vector<int> img(m);
        for (int i = 0; i < m; ++i) img[i] = (i + 1) % m;
        return Permutation(std::move(img));
    }

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int x) const { return image_[x]; }

    Permutation inverse() const {
        std::vector<int> img(image_.size());
        for (int i = 0; i < size(); ++i) img[image_[i]] = i;
        return Permutation(std::move(img));
    }

    // (this * other)(x) = this(other(x))
    Permutation compose(const Permutation& other) const {
        if (size() != other.size()) throw std::invalid_argument("permutation size mismatch");
        std::vector<int> img(image_.size());
        for (int i = 0; i < size(); ++i) img[i] = image_[other.image_[i]];
        return Permutation(std::move(img));
    }

    const std::vector<int>& image() const { return image_; }

    bool operator==(const Permutation& o) const = default;

  private:
    std::vector<int> image_;
};

inline std::vector<Permutation> all_permutations(int m) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// A selection from every unordered pair.  Bit k = 1 means the larger element
// of the k-th canonical pair is chosen.
class ChoiceFunction {
  public:
    ChoiceFunction(int m, std::uint32_t bits) : m_(m), bits_(bits) {
        check_m(m);
        if (bits >> pair_count(m)) throw std::invalid_argument("stray bits beyond pair count");
    }

    int m() const { return m_; }
    std::uint32_t bits() const { return bits_; }

    int chosen(int i, int j) const {
        if (i > j) std::swap(i, j);
        return (bits_ >> pair_index(m_, i, j)) & 1u ? j : i;
    }

    // Bitstring over the canonical pair order, e.g. "011".
    std::string bitstring() const {
        std::string s(pair_count(m_), '0');
        for (int k = 0; k < pair_count(m_); ++k)
            if ((bits_ >> k) & 1u) s[k] = '1';
        return s;
    }

    static ChoiceFunction from_bitstring(int m, const std::string& s) {
        if (static_cast<int>(s.size()) != pair_count(m))
            throw std::invalid_argument("bitstring length mismatch");
        std::uint32_t bits = 0;
        for (int k = 0; k < pair_count(m); ++k) {
            if (s[k] == '1')
                bits |= 1u << k;
            else if (s[k] != '0')
                throw std::invalid_argument("bitstring must be over {0,1}");
        }
        return ChoiceFunction(m, bits);
    }

    // Induced by a linear order: the order-smaller element wins each pair.
    static ChoiceFunction from_order(const std::vector<int>& order) {
        int m = static_cast<int>(order.size());
        check_m(m);
        std::vector<int> rank(m);
        for (int r = 0; r < m; ++r) rank[order[r]] = r;
        std::uint32_t bits = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (rank[j] < rank[i]) bits |= 1u << pair_index(m, i, j);
        return ChoiceFunction(m, bits);
    }

    bool operator==(const ChoiceFunction& o) const = default;
    auto operator<=>(const ChoiceFunction& o) const = default;

  private:
    int m_;
    std::uint32_t bits_;
};

inline std::uint64_t choice_count(int m) { return std::uint64_t{1} << pair_count(m); }

inline std::vector<ChoiceFunction> all_choice_functions(int m) {
    std::vector<ChoiceFunction> out;
    out.reserve(choice_count(m));
    for (std::uint32_t b = 0; b < choice_count(m); ++b) out.emplace_back(m, b);
    return out;
}

// c_sigma(b) = sigma^{-1}(c(sigma*(b))).  Right action: (c_s)_t = c_{st}.
inline ChoiceFunction act(const ChoiceFunction& c, const Permutation& sigma) {
    if (c.m() != sigma.size()) throw std::invalid_argument("choice/permutation size mismatch");
    int m = c.m();
    Permutation inv = sigma.inverse();
    std::uint32_t bits = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int x = c.chosen(sigma(i), sigma(j));
            if (inv(x) == j) bits |= 1u << pair_index(m, i, j);
        }
    return ChoiceFunction(m, bits);
}

// Connected asymmetric relation: one winner per pair.
class Tournament {
  public:
    Tournament(int m, std::vector<int> winners) : m_(m), winners_(std::move(winners)) {
        check_m(m);
        if (static_cast<int>(winners_.size()) != pair_count(m))
            throw std::invalid_argument("winner list length mismatch");
        auto ps = all_pairs(m);
        for (int k = 0; k < pair_count(m); ++k)
            if (winners_[k] != ps[k].lo && winners_[k] != ps[k].hi)
                throw std::invalid_argument("winner outside its pair");
    }

    int m() const { return m_; }
    int winner(int i, int j) const {
        if (i > j) std::swap(i, j);
        return winners_[pair_index(m_, i, j)];
    }
    bool beats(int a, int b) const { return winner(a, b) == a; }

    bool operator==(const Tournament& o) const = default;

  private:
    int m_;
    std::vector<int> winners_;
};

inline Tournament tournament_from_choice(const ChoiceFunction& c) {
    std::vector<int> winners;
    winners.reserve(pair_count(c.m()));
    for (auto [i, j] : all_pairs(c.m())) winners.push_back(c.chosen(i, j));
    return Tournament(c.m(), std::move(winners));
}

inline ChoiceFunction choice_from_tournament(const Tournament& t) {
    int m = t.m();
    std::uint32_t bits = 0;
    for (auto [i, j] : all_pairs(m))
        if (t.winner(i, j) == j) bits |= 1u << pair_index(m, i, j);
    return ChoiceFunction(m, bits);
}

// c is rational iff its tournament is transitive, i.e. a linear order.
inline bool is_rational(const ChoiceFunction& c) {
    Tournament t = tournament_from_choice(c);
    int m = c.m();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int d = 0; d < m; ++d) {
                if (a == b || b == d || a == d) continue;
                if (t.beats(a, b) && t.beats(b, d) && !t.beats(a, d)) return false;
            }
    return true;
}

inline std::vector<ChoiceFunction> all_rational_choice_functions(int m) {
    std::vector<ChoiceFunction> out;
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    do {
        out.push_back(ChoiceFunction::from_order(order));
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

}  // namespace agclone
