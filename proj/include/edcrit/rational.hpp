#pragma once

#include <gmpxx.h>

#include <cmath>

#include "edcrit/errors.hpp"

namespace edcrit {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact value of a finite double.
inline Rational to_rational(double x) {
  if (!std::isfinite(x)) {
    throw InputError("cannot convert a non-finite value to a rational");
  }
  return Rational(x);
}

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace edcrit
