#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edcrit/numlin.hpp"
#include "edcrit/rational.hpp"

namespace edcrit {

using Exponent = std::vector<int>;

/// Sparse polynomial in `nvars` variables with exact rational coefficients.
/// Zero coefficients are never stored.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(const Rational& c, std::size_t nvars);
  static MultiPoly variable(std::size_t index, std::size_t nvars);
  /// Builds a polynomial from (exponent, coefficient) pairs; like terms add up.
  static MultiPoly from_terms(std::size_t nvars,
                              const std::vector<std::pair<Exponent, Rational>>& terms);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;
  MultiPoly pow(unsigned e) const;

  /// Replaces variable i by images[i]; all images share one arity, which
  /// becomes the arity of the result.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;

  MultiPoly derivative(std::size_t var) const;

  double eval(const Vector& point) const;
  Rational eval_exact(const std::vector<Rational>& point) const;

  /// Sign of the value at a floating point. Falls back to exact rational
  /// evaluation when |value| < rel * (sum of |term| magnitudes).
  int sign_at(const Vector& point, double rel = 1e-6) const;

  /// Returns the first adjacent transposition (i, i+1) that changes the
  /// polynomial, or nothing if it is symmetric.
  std::optional<std::size_t> asymmetric_transposition() const;

  std::string to_string() const;

 private:
  void check_arity(std::size_t n, const char* what) const;

  std::size_t nvars_ = 0;
  std::map<Exponent, Rational> terms_;
};

/// The signed permutation pi acting on the variables: returns f(pi x).
MultiPoly apply_signed_permutation(const MultiPoly& f, const SignedPermutation& pi);

/// Power sums p_k = sum_i x_i^k, k = 1..n, as polynomials in n variables.
std::vector<MultiPoly> power_sums(std::size_t n);

/// For symmetric h(x_1..x_n) returns q(p_1..p_n) with q(p(x)) == h(x).
/// Throws InputError naming the first asymmetric transposition.
MultiPoly power_sum_rewrite(const MultiPoly& h);

/// For h symmetric with only even exponents, returns q with
/// q(P_1..P_n) == h(x) where P_k = sum_i x_i^(2k), i.e. power sums of squares.
MultiPoly power_sum_rewrite_squares(const MultiPoly& h);

}  // namespace edcrit
