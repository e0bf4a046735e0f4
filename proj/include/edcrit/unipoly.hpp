#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "edcrit/errors.hpp"
#include "edcrit/rational.hpp"

namespace edcrit {

/// Dense univariate polynomial, coefficients in ascending degree. Trailing
/// zero coefficients are trimmed, so the zero polynomial has no coefficients.
template <class T>
class BasicUniPoly {
 public:
  BasicUniPoly() = default;
  explicit BasicUniPoly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static BasicUniPoly monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = c;
    return BasicUniPoly(std::move(v));
  }

  const std::vector<T>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const T& leading() const { return coeffs_.back(); }
  T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  BasicUniPoly derivative() const {
    if (coeffs_.size() <= 1) {
      return {};
    }
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
      d[k - 1] = coeffs_[k] * T(static_cast<long>(k));
    }
    return BasicUniPoly(std::move(d));
  }

  friend BasicUniPoly operator+(const BasicUniPoly& a, const BasicUniPoly& b) {
    std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      c[k] = a.coeff(k) + b.coeff(k);
    }
    return BasicUniPoly(std::move(c));
  }

  friend BasicUniPoly operator-(const BasicUniPoly& a, const BasicUniPoly& b) {
    std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      c[k] = a.coeff(k) - b.coeff(k);
    }
    return BasicUniPoly(std::move(c));
  }

  friend BasicUniPoly operator*(const BasicUniPoly& a, const BasicUniPoly& b) {
    if (a.is_zero() || b.is_zero()) {
      return {};
    }
    std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return BasicUniPoly(std::move(c));
  }

  BasicUniPoly pow(unsigned e) const {
    BasicUniPoly out(std::vector<T>{T(1)});
    for (unsigned i = 0; i < e; ++i) {
      out = out * *this;
    }
    return out;
  }

  /// Euclidean division over a field: *this = q * d + r with deg r < deg d.
  std::pair<BasicUniPoly, BasicUniPoly> divmod(const BasicUniPoly& d) const {
    if (d.is_zero()) {
      throw InputError("polynomial division by zero");
    }
    std::vector<T> r = coeffs_;
    const int dd = d.degree();
    if (degree() < dd) {
      return {BasicUniPoly{}, *this};
    }
    std::vector<T> q(static_cast<std::size_t>(degree() - dd + 1), T(0));
    for (int k = degree() - dd; k >= 0; --k) {
      const T factor = r[static_cast<std::size_t>(k + dd)] / d.leading();
      q[static_cast<std::size_t>(k)] = factor;
      for (int j = 0; j <= dd; ++j) {
        r[static_cast<std::size_t>(k + j)] -= factor * d.coeffs_[static_cast<std::size_t>(j)];
      }
      r[static_cast<std::size_t>(k + dd)] = T(0);
    }
    r.resize(static_cast<std::size_t>(dd));
    return {BasicUniPoly(std::move(q)), BasicUniPoly(std::move(r))};
  }

  friend bool operator==(const BasicUniPoly& a, const BasicUniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) {
      coeffs_.pop_back();
    }
  }

  std::vector<T> coeffs_;
};

using UniPoly = BasicUniPoly<double>;
using RatUniPoly = BasicUniPoly<Rational>;

/// Exact conversion of a floating polynomial (every double is a dyadic rational).
RatUniPoly to_rational(const UniPoly& p);
UniPoly to_double(const RatUniPoly& p);

/// Sturm sequence of p stored as primitive integer polynomials, so sign
/// variations are evaluated exactly at any finite double or rational.
class SturmSequence {
 public:
  explicit SturmSequence(const RatUniPoly& p);
  explicit SturmSequence(const UniPoly& p) : SturmSequence(to_rational(p)) {}

  /// Number of sign variations at x; x may be +-infinity.
  int variations(double x) const;
  int variations(const Rational& x) const;

  /// Distinct real roots in the open interval (a, b). Endpoints that are
  /// roots are nudged inward by a machine-scaled step.
  int count(double a, double b) const;

  /// Exact sign of p at x (x finite).
  int sign_of_p(double x) const;

  /// gcd(p, p') up to a positive constant; constant when p is squarefree.
  const std::vector<Integer>& gcd_with_derivative() const { return chain_.back(); }

  std::size_t length() const { return chain_.size(); }

 private:
  std::vector<std::vector<Integer>> chain_;
};

/// Distinct real roots of p in (a, b); a and b may be infinite.
/// Throws InputError for the zero polynomial or a >= b.
int sturm_count(const UniPoly& p, double a, double b);
int sturm_count(const RatUniPoly& p, double a, double b);

struct RealRoot {
  double value = 0.0;
  bool multiple = false;  // root of gcd(p, p')
};

/// All distinct real roots, ascending. Roots are isolated by exact Sturm
/// bisection (relative width 1e-12, or down to adjacent doubles when the
/// endpoint signs differ) and then polished by at most five Newton steps. `tol` is the residual target relative to
/// `evaluation_scale(p, root)`; roots that miss it raise InternalError.
std::vector<RealRoot> real_roots_detailed(const UniPoly& p, double tol = 1e-9);
std::vector<RealRoot> real_roots_detailed(const RatUniPoly& p, double tol = 1e-9);
std::vector<double> real_roots(const UniPoly& p, double tol = 1e-9);

/// Cauchy bound: every root satisfies |x| < bound.
double cauchy_root_bound(const UniPoly& p);

/// sum_i |c_i| |x|^i, the natural magnitude of p(x) under rounding.
double evaluation_scale(const UniPoly& p, double x);

}  // namespace edcrit
