#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace indcover {

using Rational = boost::rational<std::int64_t>;

/// "7", "-10/3"
inline std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

}  // namespace indcover
