#include "cicy/rational.hpp"

#include <limits>

namespace cicy {

std::string to_string(const Rational& x) {
  const auto num = boost::multiprecision::numerator(x);
  const auto den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_integer(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

Int to_int(const Rational& x) {
  if (!is_integer(x)) throw Error("not an integer: " + to_string(x));
  const auto num = boost::multiprecision::numerator(x);
  if (num > std::numeric_limits<Int>::max() || num < std::numeric_limits<Int>::min())
    throw Error("integer overflow: " + num.str());
  return num.convert_to<Int>();
}

Int binomial(Int n, Int k) {
  if (k < 0 || n < k) return 0;
  if (k > n - k) k = n - k;
  boost::multiprecision::cpp_int acc = 1;
  for (Int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc.convert_to<Int>();
}

}  // namespace cicy
