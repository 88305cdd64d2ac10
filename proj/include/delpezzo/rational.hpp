#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <stdexcept>

namespace delpezzo {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::rational<BigInt>;

inline Rat rat(long long num, long long den = 1) {
  return Rat(BigInt(num), BigInt(den));
}

inline bool is_integer(const Rat& q) { return q.denominator() == 1; }

inline std::string to_string(const Rat& q) {
  std::string s = q.numerator().str();
  if (q.denominator() != 1) {
    s += "/";
    s += q.denominator().str();
  }
  return s;
}

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
inline Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s), BigInt(1));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

}  // namespace delpezzo
