#ifndef DGK_RATIONAL_HPP
#define DGK_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "dgk/errors.hpp"

namespace dgk {

// Exact rational bounds ("|K| <= n/2" and friends). Always normalized,
// denominator positive. Comparisons never touch floating point.
class Rational {
  public:
    Rational() = default;
    Rational(long long num, long long den = 1) : p_(num), q_(den) {
        if (q_ == 0) throw validation_error(validation_error::kind::syntax, "rational with zero denominator");
        if (q_ < 0) { p_ = -p_; q_ = -q_; }
        long long g = std::gcd(p_ < 0 ? -p_ : p_, q_);
        if (g > 1) { p_ /= g; q_ /= g; }
    }

    long long num() const { return p_; }
    long long den() const { return q_; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.p_ * b.q_ < b.p_ * a.q_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.p_ * b.q_ <= b.p_ * a.q_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    std::string str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

    // Parses "p/q" or a bare integer.
    static Rational parse(const std::string& text);

  private:
    long long p_ = 0;
    long long q_ = 1;
};

} // namespace dgk

#endif
