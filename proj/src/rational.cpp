#include "srrkit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace srrkit {

std::string rat_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string rat_pretty(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return rat_str(r);
}

namespace {

BigInt parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("sign without digits in rational literal");
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("malformed rational literal: '" + s + "'");
    return BigInt(s);
}

} // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_int(text));
    }
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(num, den);
}

std::vector<std::string> rat_strs(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(rat_str(r));
    return out;
}

} // namespace srrkit
