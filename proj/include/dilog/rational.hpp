#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace dilog {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Int rat_num(const Rational& q) { return Int(boost::multiprecision::numerator(q)); }
inline Int rat_den(const Rational& q) { return Int(boost::multiprecision::denominator(q)); }

// Parses "p" or "p/q" with optional leading sign. Canonical form is kept by
// the mpq backend (lowest terms, positive denominator).
Rational rat_parse(const std::string& text);

// Emits "p" or "p/q"; inverse of rat_parse on canonical values.
std::string rat_str(const Rational& q);

inline bool rat_is_integer(const Rational& q) { return rat_den(q) == 1; }

}  // namespace dilog
