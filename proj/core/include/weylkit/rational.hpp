#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer comparisons recurse forever under the
// C++20 rewritten-candidate rules; these exact overloads take precedence.
namespace boost {

inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == static_cast<std::int64_t>(b); }
inline bool operator<(const rational<std::int64_t>& a, std::int64_t b) { return a < rational<std::int64_t>(b); }
inline bool operator<(const rational<std::int64_t>& a, int b) { return a < rational<std::int64_t>(b); }
inline bool operator>(const rational<std::int64_t>& a, std::int64_t b) { return a > rational<std::int64_t>(b); }
inline bool operator>(const rational<std::int64_t>& a, int b) { return a > rational<std::int64_t>(b); }

}  // namespace boost

namespace weylkit {

using Rational = boost::rational<std::int64_t>;

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

/// "3", "-1/2".
std::string to_string(const Rational& q);

}  // namespace weylkit
