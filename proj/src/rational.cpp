#include "mpinv/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mpinv {

Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    bool negative = !num.empty() && num.front() == '-';
    std::string_view mag = negative ? num.substr(1) : num;
    if (!all_digits(mag) || !all_digits(den))
        throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
    Integer p{std::string(mag)};
    Integer q{std::string(den)};
    if (negative) p = -p;
    return make_rational(p, q);
}

}  // namespace mpinv
