#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "edcrit/numlin.hpp"

namespace edcrit {

/// base + span(basis). The basis is orthonormal and the base is stored as the
/// point of the flat closest to the origin, so equal flats compare equal.
class AffineSubspace {
 public:
  AffineSubspace(Vector base, std::vector<Vector> basis);

  /// span of the given coordinate axes through the origin.
  static AffineSubspace coordinate(std::size_t n, const std::vector<std::size_t>& axes);

  const Vector& base() const { return base_; }
  const std::vector<Vector>& basis() const { return basis_; }
  std::size_t ambient_dim() const { return static_cast<std::size_t>(base_.size()); }
  std::size_t dim() const { return basis_.size(); }

  Vector project(const Vector& y) const;
  double distance(const Vector& y) const { return (y - project(y)).norm(); }
  bool contains(const Vector& x, double tol) const { return distance(x) <= tol; }
  bool contained_in(const AffineSubspace& other, double tol) const;
  bool same_as(const AffineSubspace& other, double tol) const {
    return contained_in(other, tol) && other.contained_in(*this, tol);
  }
  AffineSubspace transformed(const SignedPermutation& pi) const;

 private:
  Vector base_;
  std::vector<Vector> basis_;
};

namespace family {

/// Vectors with at most r nonzero coordinates.
struct RankAtMost {
  std::size_t n;
  std::size_t r;
};

/// k coordinates equal in absolute value, the remaining n - k zero.
struct EqualAbs {
  std::size_t n;
  std::size_t k;
};

/// x_1^d + x_2^d = 1 for even d.
struct FermatSphere {
  int d;
};

/// x_1 x_2 = +-1.
struct Hyperbola {};

/// The signed-permutation orbit of a (a nonnegative, nonincreasing).
struct FiniteOrbit {
  Vector a;
};

/// A user-supplied absolutely symmetric, minimally defined affine complex.
struct ExplicitComplex {
  std::vector<AffineSubspace> subspaces;
};

}  // namespace family

/// Tagged description of an absolutely symmetric set S in R^n. Construction
/// validates the family parameters.
class SymmetricSet {
 public:
  using Variant = std::variant<family::RankAtMost, family::EqualAbs, family::FermatSphere,
                               family::Hyperbola, family::FiniteOrbit, family::ExplicitComplex>;

  static SymmetricSet rank_at_most(std::size_t n, std::size_t r);
  static SymmetricSet equal_abs(std::size_t n, std::size_t k);
  static SymmetricSet fermat(int d);
  static SymmetricSet hyperbola();
  static SymmetricSet orbit(Vector a);
  /// Checks closure under every signed permutation and minimality.
  static SymmetricSet explicit_complex(std::vector<AffineSubspace> subspaces);

  const Variant& variant() const { return variant_; }
  std::size_t ambient_dim() const;
  std::string name() const;
  bool is_complex() const;

 private:
  explicit SymmetricSet(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

struct CriticalPoint {
  Vector x;
  double residual = 0.0;  // tangential part of y - x
  int stratum = -1;       // containing subspace for affine complexes
  bool multiple = false;  // data lies on a discriminant for this point
};

struct CriticalSet {
  std::vector<CriticalPoint> points;

  std::size_t size() const { return points.size(); }
  /// Sorts lexicographically and merges points closer than `tol`.
  void normalize(double tol);
};

bool membership(const SymmetricSet& s, const Vector& x, double tol = 1e-9);

/// Critical points of y on a minimally defined union of affine subspaces:
/// the projection onto each member, kept when no other member contains it.
/// Throws InputError if one member contains another.
CriticalSet complex_critical_points(const std::vector<AffineSubspace>& subspaces, const Vector& y,
                                    const Tolerances& tol = {});

/// Minimal defining collection for rank, equal-abs and explicit complexes.
std::vector<AffineSubspace> expand_complex(const SymmetricSet& s);

CriticalSet critical_points_diag(const SymmetricSet& s, const Vector& y, const Tolerances& tol = {});

/// The nearest points of S to y (all ties).
CriticalSet projection_diag(const SymmetricSet& s, const Vector& y, const Tolerances& tol = {});

double distance_diag(const SymmetricSet& s, const Vector& y, const Tolerances& tol = {});

/// Worst-case number of critical points C#(S).
std::uint64_t count_formula(const SymmetricSet& s);

/// Tangential residual of y - x at a point x of S; for complexes the
/// containing member must be unique.
double criticality_residual(const SymmetricSet& s, const Vector& x, const Vector& y,
                            const Tolerances& tol = {});

/// Critical points of y on x_1^d + x_2^d = 1 (d even, d >= 4) by eliminating
/// to a univariate polynomial in the slope s = x_2 / x_1.
CriticalSet fermat_critical_points(int d, const Vector& y, const Tolerances& tol = {});

/// Critical points on x_1 x_2 = 1 (sign = +1) or x_1 x_2 = -1 (sign = -1),
/// the real roots of x^4 - y_1 x^3 + sign * y_2 x - 1.
CriticalSet hyperbola_branch_critical_points(int sign, const Vector& y);

}  // namespace edcrit
