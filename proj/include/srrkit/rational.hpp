#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace srrkit {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar used for all demands, weights and bounds.
// cpp_rational keeps values in lowest terms with a positive denominator,
// which is the representation every serializer below relies on.
using Rational = boost::multiprecision::cpp_rational;

// Canonical file form is always "numerator/denominator", never a decimal.
std::string rat_str(const Rational& r);

// Human form: "3" instead of "3/1", otherwise same as rat_str.
std::string rat_pretty(const Rational& r);

// Accepts "p/q" or a plain integer "p" (optionally negative). Decimal
// strings are rejected.
Rational parse_rational(const std::string& text);

std::vector<std::string> rat_strs(const std::vector<Rational>& v);

} // namespace srrkit
