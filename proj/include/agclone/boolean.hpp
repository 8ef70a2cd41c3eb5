#pragma once

// Boolean functions as little-endian truth tables: bit i of the table index
// is the value of argument i.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace agclone {

class BooleanFunction {
  public:
    BooleanFunction(int arity, std::uint64_t tt) : arity_(arity), tt_(tt) {
        if (arity < 1 || arity > 6) throw std::invalid_argument("boolean arity out of range 1..6");
        if (arity < 6 && (tt >> (std::uint64_t{1} << arity)))
            throw std::invalid_argument("stray truth-table bits");
    }

    int arity() const { return arity_; }
    std::uint64_t tt() const { return tt_; }
    int rows() const { return 1 << arity_; }

    int eval(int idx) const { return static_cast<int>((tt_ >> idx) & 1u); }

    int eval_args(const std::vector<int>& args) const {
        int idx = 0;
        for (int i = 0; i < arity_; ++i)
            if (args[i]) idx |= 1 << i;
        return eval(idx);
    }

    // dual(h)(x) = !h(!x); h is self-dual iff dual(h) == h.
    BooleanFunction dual() const {
        std::uint64_t d = 0;
        for (int idx = 0; idx < rows(); ++idx) {
            int flipped = ~idx & (rows() - 1);
            if (!eval(flipped)) d |= std::uint64_t{1} << idx;
        }
        return BooleanFunction(arity_, d);
    }

    bool is_self_dual() const { return dual().tt_ == tt_; }
    bool preserves_zero() const { return eval(0) == 0; }
    bool preserves_one() const { return eval(rows() - 1) == 1; }

    bool is_projection() const {
        for (int i = 0; i < arity_; ++i)
            if (*this == projection(arity_, i)) return true;
        return false;
    }

    bool is_monotone() const {
        for (int idx = 0; idx < rows(); ++idx)
            for (int i = 0; i < arity_; ++i)
                if (!(idx & (1 << i)) && eval(idx) > eval(idx | (1 << i))) return false;
        return true;
    }

    // Degree <= 1 in the algebraic normal form.
    bool is_linear() const {
        std::vector<int> anf(rows());
        for (int idx = 0; idx < rows(); ++idx) anf[idx] = eval(idx);
        for (int i = 0; i < arity_; ++i)
            for (int idx = 0; idx < rows(); ++idx)
                if (idx & (1 << i)) anf[idx] ^= anf[idx ^ (1 << i)];
        for (int idx = 0; idx < rows(); ++idx)
            if (anf[idx] && __builtin_popcount(idx) > 1) return false;
        return true;
    }

    static BooleanFunction projection(int arity, int i) {
        std::uint64_t tt = 0;
        for (int idx = 0; idx < (1 << arity); ++idx)
            if (idx & (1 << i)) tt |= std::uint64_t{1} << idx;
        return BooleanFunction(arity, tt);
    }

    static BooleanFunction from_lambda(int arity, auto&& fn) {
        std::uint64_t tt = 0;
        for (int idx = 0; idx < (1 << arity); ++idx) {
            std::vector<int> args(arity);
            for (int i = 0; i < arity; ++i) args[i] = (idx >> i) & 1;
            if (fn(args)) tt |= std::uint64_t{1} << idx;
        }
        return BooleanFunction(arity, tt);
    }

    bool operator==(const BooleanFunction& o) const = default;
    auto operator<=>(const BooleanFunction& o) const = default;

  private:
    int arity_;
    std::uint64_t tt_;
};

// Table-1 generators.
inline BooleanFunction bool_median3() {
    return BooleanFunction::from_lambda(
        3, [](const std::vector<int>& a) { return (a[0] & a[1]) | (a[1] & a[2]) | (a[0] & a[2]); });
}

inline BooleanFunction bool_xor3() {
    return BooleanFunction::from_lambda(3,
                                        [](const std::vector<int>& a) { return a[0] ^ a[1] ^ a[2]; });
}

inline BooleanFunction bool_and2() {
    return BooleanFunction::from_lambda(2, [](const std::vector<int>& a) { return a[0] & a[1]; });
}

inline BooleanFunction bool_or2() {
    return BooleanFunction::from_lambda(2, [](const std::vector<int>& a) { return a[0] | a[1]; });
}

// x | (y & !z)
inline BooleanFunction bool_c4_generator() {
    return BooleanFunction::from_lambda(
        3, [](const std::vector<int>& a) { return a[0] | (a[1] & ~a[2] & 1); });
}

// maj(!x, y, z)
inline BooleanFunction bool_d1_generator() {
    return BooleanFunction::from_lambda(3, [](const std::vector<int>& a) {
        int nx = ~a[0] & 1;
        return (nx & a[1]) | (nx & a[2]) | (a[1] & a[2]);
    });
}

}  // namespace agclone
