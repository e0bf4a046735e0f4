#include "edcrit/unipoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace edcrit {

namespace {

using IntPoly = std::vector<Integer>;

// Positive multiple of p with coprime integer coefficients.
IntPoly primitive_integer(const RatUniPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  IntPoly out;
  out.reserve(p.coeffs().size());
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (content > 1) {
    for (auto& v : out) {
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    }
  }
  return out;
}

RatUniPoly from_integer(const IntPoly& p) {
  std::vector<Rational> c(p.begin(), p.end());
  return RatUniPoly(std::move(c));
}

// Sign of p(x) for a finite double x, exactly. x = m * 2^e with integer m;
// for e < 0 the homogenised sum  sum_i c_i m^i 2^{-e(d-i)}  has the sign of p(x).
int sign_at(const IntPoly& p, double x) {
  if (p.empty()) {
    return 0;
  }
  int exp = 0;
  const double frac = std::frexp(x, &exp);
  Integer m(std::ldexp(frac, 53));
  int e = exp - 53;
  if (m != 0) {
    // Strip trailing zero bits so the shift amounts stay small.
    const auto tz = static_cast<int>(mpz_scan1(m.get_mpz_t(), 0));
    mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(tz));
    e += tz;
  }
  Integer acc = p.back();
  if (e >= 0) {
    Integer xv;
    mpz_mul_2exp(xv.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    for (std::size_t k = p.size() - 1; k-- > 0;) {
      acc = acc * xv + p[k];
    }
  } else {
    const auto s = static_cast<mp_bitcnt_t>(-e);
    Integer term;
    for (std::size_t k = p.size() - 1; k-- > 0;) {
      acc *= m;
      const auto shift = s * static_cast<mp_bitcnt_t>(p.size() - 1 - k);
      mpz_mul_2exp(term.get_mpz_t(), p[k].get_mpz_t(), shift);
      acc += term;
    }
  }
  return sgn(acc);
}

int sign_at(const IntPoly& p, const Rational& x) {
  Rational v(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    v = v * x + Rational(*it);
  }
  return sgn(v);
}

int sign_at_infinity(const IntPoly& p, bool positive) {
  if (p.empty()) {
    return 0;
  }
  const int lead = sgn(p.back());
  const bool odd = (p.size() - 1) % 2 == 1;
  return (!positive && odd) ? -lead : lead;
}

template <class Signs>
int count_variations(const std::vector<IntPoly>& chain, Signs&& sign_of) {
  int variations = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sign_of(q);
    if (s == 0) {
      continue;
    }
    if (last != 0 && s != last) {
      ++variations;
    }
    last = s;
  }
  return variations;
}

// lc(b)^(deg a - deg b + 1) * (a mod b), computed in integers.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  const int delta = static_cast<int>(a.size()) - static_cast<int>(b.size());
  int steps = 0;
  while (r.size() >= b.size()) {
    const Integer lr = r.back();
    const std::size_t shift = r.size() - b.size();
    for (auto& c : r) {
      c *= lb;
    }
    for (std::size_t j = 0; j <= db; ++j) {
      r[shift + j] -= lr * b[j];
    }
    r.pop_back();
    while (!r.empty() && r.back() == 0) {
      r.pop_back();
    }
    ++steps;
  }
  if (!r.empty() && steps < delta + 1) {
    Integer f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(delta + 1 - steps));
    for (auto& c : r) {
      c *= f;
    }
  }
  return r;
}

IntPoly scaled(IntPoly p, int sign) {
  if (sign < 0) {
    for (auto& c : p) {
      c = -c;
    }
  }
  return p;
}

double nudge(double x, double toward) {
  const double step = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x));
  return toward > x ? x + step : x - step;
}

}  // namespace

RatUniPoly to_rational(const UniPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (double v : p.coeffs()) {
    c.push_back(edcrit::to_rational(v));
  }
  return RatUniPoly(std::move(c));
}

UniPoly to_double(const RatUniPoly& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) {
    c.push_back(v.get_d());
  }
  return UniPoly(std::move(c));
}

// Each member is the primitive part of a positive multiple of -rem of the
// previous two, via integer pseudo-remainders.
SturmSequence::SturmSequence(const RatUniPoly& p) {
  if (p.is_zero()) {
    throw InputError("Sturm sequence of the zero polynomial");
  }
  chain_.push_back(primitive_integer(p));
  const RatUniPoly dp = p.derivative();
  if (dp.is_zero()) {
    return;
  }
  chain_.push_back(primitive_integer(dp));
  while (true) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.empty()) {
      break;
    }
    // prem = lc(b)^(delta+1) rem; we want -rem.
    const auto delta = a.size() - b.size();
    const int factor_sign = (sgn(b.back()) < 0 && delta % 2 == 0) ? -1 : 1;
    Integer content = 0;
    for (const auto& c : r) {
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    }
    for (auto& c : r) {
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    }
    chain_.push_back(scaled(std::move(r), -factor_sign));
  }
}

int SturmSequence::variations(double x) const {
  if (std::isinf(x)) {
    return count_variations(chain_, [&](const IntPoly& q) { return sign_at_infinity(q, x > 0); });
  }
  if (std::isnan(x)) {
    throw InputError("Sturm evaluation at NaN");
  }
  return count_variations(chain_, [&](const IntPoly& q) { return sign_at(q, x); });
}

int SturmSequence::variations(const Rational& x) const {
  return count_variations(chain_, [&](const IntPoly& q) { return sign_at(q, x); });
}

int SturmSequence::sign_of_p(double x) const { return sign_at(chain_.front(), x); }

int SturmSequence::count(double a, double b) const {
  if (!(a < b)) {
    throw InputError("sturm_count needs a < b");
  }
  if (std::isfinite(a) && sign_at(chain_.front(), a) == 0) {
    a = nudge(a, b);
  }
  if (std::isfinite(b) && sign_at(chain_.front(), b) == 0) {
    b = nudge(b, a);
  }
  return variations(a) - variations(b);
}

int sturm_count(const RatUniPoly& p, double a, double b) {
  if (p.is_zero()) {
    throw InputError("sturm_count of the zero polynomial");
  }
  return SturmSequence(p).count(a, b);
}

int sturm_count(const UniPoly& p, double a, double b) { return sturm_count(to_rational(p), a, b); }

double cauchy_root_bound(const UniPoly& p) {
  if (p.degree() < 1) {
    return 1.0;
  }
  double m = 0.0;
  for (int k = 0; k < p.degree(); ++k) {
    m = std::max(m, std::abs(p.coeffs()[static_cast<std::size_t>(k)] / p.leading()));
  }
  return 1.0 + m;
}

double evaluation_scale(const UniPoly& p, double x) {
  double s = 0.0;
  double xp = 1.0;
  for (double c : p.coeffs()) {
    s += std::abs(c) * xp;
    xp *= std::abs(x);
  }
  return s;
}

namespace {

// `exact` drives isolation; `p` (its rounded copy) drives Newton polishing.
std::vector<RealRoot> isolate_roots(const RatUniPoly& exact, const UniPoly& p, double tol) {
  if (exact.is_zero()) {
    throw InputError("real_roots of the zero polynomial");
  }
  std::vector<RealRoot> roots;
  if (exact.degree() < 1) {
    return roots;
  }
  const SturmSequence sturm(exact);
  const double bound = std::ldexp(1.0, std::ilogb(cauchy_root_bound(p)) + 1);
  // Widths are judged relative to the magnitude of the interval, so a large
  // root bound (tiny leading coefficient) does not blur small roots.
  auto unsplittable = [](double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    return !(mid > lo && mid < hi) ||
           hi - lo <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi));
  };

  // A split point that is not itself a root.
  auto split = [&](double lo, double hi) {
    for (double frac : {0.5, 0.4375, 0.5625, 0.375, 0.625}) {
      const double mid = lo + (hi - lo) * frac;
      if (sturm.sign_of_p(mid) != 0) {
        return mid;
      }
    }
    return std::nextafter(lo + (hi - lo) * 0.5, hi);
  };

  struct Interval {
    double lo;
    double hi;
    int count;
  };
  std::vector<Interval> isolated;
  std::vector<Interval> work{{-bound, bound, sturm.variations(-bound) - sturm.variations(bound)}};

  // Exact zeros at split points are collected directly.
  while (!work.empty()) {
    Interval iv = work.back();
    work.pop_back();
    if (iv.count == 0) {
      continue;
    }
    if (iv.count == 1 || unsplittable(iv.lo, iv.hi)) {
      isolated.push_back(iv);
      continue;
    }
    const double mid = split(iv.lo, iv.hi);
    if (sturm.sign_of_p(mid) == 0) {
      roots.push_back({mid, false});
      const double l = nudge(mid, iv.lo);
      const double r = nudge(mid, iv.hi);
      work.push_back({iv.lo, l, sturm.variations(iv.lo) - sturm.variations(l)});
      work.push_back({r, iv.hi, sturm.variations(r) - sturm.variations(iv.hi)});
      continue;
    }
    const int vm = sturm.variations(mid);
    work.push_back({iv.lo, mid, sturm.variations(iv.lo) - vm});
    work.push_back({mid, iv.hi, vm - sturm.variations(iv.hi)});
  }

  const RatUniPoly g = from_integer(sturm.gcd_with_derivative());
  const bool squarefree = g.degree() < 1;
  const UniPoly dp = p.derivative();

  for (Interval iv : isolated) {
    double lo = iv.lo;
    double hi = iv.hi;
    const int slo = sturm.sign_of_p(lo);
    const bool sign_change = slo != sturm.sign_of_p(hi);
    // Sign bisection runs down to adjacent doubles; the Sturm variant (even
    // multiplicity, no sign change) stops at relative width 1e-12.
    while (!unsplittable(lo, hi) &&
           (sign_change || hi - lo > 1e-12 * std::max(std::abs(lo), std::abs(hi)))) {
      const double mid = 0.5 * (lo + hi);
      const int smid = sturm.sign_of_p(mid);
      if (smid == 0) {
        lo = hi = mid;
        break;
      }
      if (sign_change) {
        (smid == slo ? lo : hi) = mid;
      } else if (sturm.variations(lo) - sturm.variations(mid) > 0) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    double x = 0.5 * (lo + hi);
    for (int step = 0; step < 5; ++step) {
      const double fx = p(x);
      const double dfx = dp(x);
      if (fx == 0.0 || dfx == 0.0) {
        break;
      }
      const double xn = x - fx / dfx;
      if (!(xn >= lo && xn <= hi) || std::abs(p(xn)) >= std::abs(fx)) {
        break;
      }
      x = xn;
    }
    bool multiple = iv.count > 1;
    if (!squarefree && !multiple) {
      multiple = sturm_count(g, std::nextafter(iv.lo, -INFINITY), std::nextafter(iv.hi, INFINITY)) > 0;
    }
    roots.push_back({x, multiple});
  }

  std::sort(roots.begin(), roots.end(),
            [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
  for (const auto& r : roots) {
    const double scale = std::max(evaluation_scale(p, r.value), std::numeric_limits<double>::min());
    // Multiple roots are only determined to about sqrt(eps) in x.
    const double allowed = r.multiple ? std::max(tol, 1e-6) : tol;
    if (std::abs(p(r.value)) > allowed * scale) {
      throw InternalError("real root residual above tolerance");
    }
  }
  return roots;
}

}  // namespace

std::vector<RealRoot> real_roots_detailed(const UniPoly& p, double tol) {
  return isolate_roots(to_rational(p), p, tol);
}

std::vector<RealRoot> real_roots_detailed(const RatUniPoly& p, double tol) {
  return isolate_roots(p, to_double(p), tol);
}

std::vector<double> real_roots(const UniPoly& p, double tol) {
  std::vector<double> out;
  for (const auto& r : real_roots_detailed(p, tol)) {
    out.push_back(r.value);
  }
  return out;
}

}  // namespace edcrit
