#pragma once

// Minimal exact rational arithmetic for tie-exact probability comparisons.

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace agclone {

class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long num, long long den = 1) : num_(num), den_(den) { normalize(); }

    // Parses "0.6", "1", ".25" exactly.
    static Rational from_decimal(const std::string& s) {
        std::size_t dot = s.find('.');
        bool negative = !s.empty() && s[0] == '-';
        std::string digits = s;
        if (negative) digits = digits.substr(1);
        dot = digits.find('.');
        std::string whole = dot == std::string::npos ? digits : digits.substr(0, dot);
        std::string frac = dot == std::string::npos ? "" : digits.substr(dot + 1);
        if (whole.empty() && frac.empty()) throw std::invalid_argument("empty decimal");
        long long num = 0;
        for (char ch : whole + frac) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("bad decimal: " + s);
            num = num * 10 + (ch - '0');
        }
        long long den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        return Rational(negative ? -num : num, den);
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "num/den" in lowest terms.
    std::string to_string() const {
        std::ostringstream os;
        os << num_;
        if (den_ != 1) os << "/" << den_;
        return os.str();
    }

    // Decimal rendering with the given number of significant digits.
    std::string to_decimal(int significant = 12) const {
        std::ostringstream os;
        os.precision(significant);
        os << to_double();
        return os.str();
    }

  private:
    void normalize() {
        if (den_ == 0) throw std::invalid_argument("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_;
    long long den_;
};

}  // namespace agclone
