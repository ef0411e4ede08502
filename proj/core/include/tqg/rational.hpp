#pragma once

#include <boost/rational.hpp>
#include <cstdint>

namespace tqg {

/// Exact arithmetic for question distributions, payoff tables and classical
/// benchmarks; the denominators in play are 3 and 4, so int64 never
/// overflows.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace tqg
