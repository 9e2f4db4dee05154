#pragma once

// Exact rational scalars. All arithmetic in the library is exact; no
// floating point appears anywhere.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mct {

using Scalar = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// n! as an exact integer scalar.
inline Scalar factorial(unsigned n) {
  Integer r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return Scalar(r);
}

inline Scalar binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= (n - i);
    den *= (i + 1);
  }
  return Scalar(num) / Scalar(den);
}

// (-1)^e for possibly negative exponents.
inline int sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

// Serialization: "p/q" in lowest terms, "p" when q == 1.
inline std::string scalar_to_string(const Scalar& s) {
  if (denominator(s) == 1) return numerator(s).str();
  return numerator(s).str() + "/" + denominator(s).str();
}

inline Scalar scalar_from_string(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Scalar(Integer(text));
  Integer p(text.substr(0, slash));
  Integer q(text.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("scalar with zero denominator: " + text);
  return Scalar(p) / Scalar(q);
}

}  // namespace mct
