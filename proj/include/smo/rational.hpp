#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace smo {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational coordinate. Always kept in canonical reduced form
// (backed by boost cpp_rational, which normalizes on every operation).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(std::int64_t n) : v_(n) {}
    Rat(const BigInt& n) : v_(n) {}
    Rat(const BigInt& num, const BigInt& den) : v_(num, den) {}

    static Rat from_string(const std::string& s);   // "p/q" or integer

    const boost::multiprecision::cpp_rational& raw() const { return v_; }
    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return den() == 1; }
    int sign() const { return v_.sign(); }

    Rat operator-() const { return Rat(boost::multiprecision::cpp_rational(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { v_ /= o.v_; return *this; }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    std::string str() const;          // "p/q", or "p" when integral
    std::string decimal(int significant_digits) const;
    double approx() const { return static_cast<double>(v_); }

private:
    explicit Rat(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }
inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

// Sign of a + b*sqrt(d), d >= 0. Decides comparisons against square roots
// without ever constructing them.
int quad_sign(const Rat& a, const Rat& b, const Rat& d);

std::optional<Rat> parse_rat(const std::string& s);

}  // namespace smo
