#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cicy {

using Rational = boost::multiprecision::cpp_rational;
using Int = std::int64_t;

/// Lowest-terms rendering, "p" or "p/q" with q > 0.
std::string to_string(const Rational& x);

bool is_integer(const Rational& x);

/// Throws if x is not an integer or does not fit in Int.
Int to_int(const Rational& x);

/// Binomial coefficient with C(n, k) = 0 for n < k or k < 0 (including n < 0).
Int binomial(Int n, Int k);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an input falls outside the range an operation is verified for.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace cicy
