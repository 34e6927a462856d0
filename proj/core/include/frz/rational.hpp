#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace frz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational ratio(const BigInt& num, const BigInt& den) { return Rational(num, den); }

inline BigInt ipow(std::uint64_t base, unsigned exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

// "7/4", or "2" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

}  // namespace frz
