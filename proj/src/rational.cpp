#include "smo/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace smo {

Rat Rat::from_string(const std::string& s) {
    auto r = parse_rat(s);
    if (!r) throw std::invalid_argument("bad rational: " + s);
    return *r;
}

std::optional<Rat> parse_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(BigInt(s));
        }
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return Rat(num, den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::string Rat::str() const {
    std::ostringstream os;
    os << num();
    if (!is_integer()) os << '/' << den();
    return os.str();
}

std::string Rat::decimal(int significant_digits) const {
    if (is_zero()) return "0";
    BigInt n = num(), d = den();
    bool neg = n < 0;
    if (neg) n = -n;
    // scale so the integer division keeps the requested precision
    BigInt scale = 1;
    for (int i = 0; i < significant_digits; ++i) scale *= 10;
    BigInt q = n * scale / d;
    std::ostringstream os;
    os << q;
    std::string digits = os.str();
    std::string out;
    if (digits.size() <= static_cast<size_t>(significant_digits)) {
        std::string frac(significant_digits - digits.size(), '0');
        frac += digits;
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        out = frac.empty() ? "0" : "0." + frac;
    } else {
        std::string ip = digits.substr(0, digits.size() - significant_digits);
        std::string fp = digits.substr(digits.size() - significant_digits);
        while (!fp.empty() && fp.back() == '0') fp.pop_back();
        out = fp.empty() ? ip : ip + "." + fp;
    }
    return neg ? "-" + out : out;
}

int quad_sign(const Rat& a, const Rat& b, const Rat& d) {
    if (d.sign() < 0) throw std::invalid_argument("quad_sign: negative radicand");
    int sb = b.sign();
    if (d.is_zero() || sb == 0) return a.sign();
    int sa = a.sign();
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against b^2*d
    Rat lhs = a * a, rhs = b * b * d;
    if (lhs == rhs) return 0;
    return (lhs > rhs) == (sa > 0) ? sa : sb;
}

}  // namespace smo
