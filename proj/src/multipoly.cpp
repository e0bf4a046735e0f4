#include "edcrit/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "edcrit/errors.hpp"

namespace edcrit {

namespace {

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    e[i] = a[i] + b[i];
  }
  return e;
}

double monomial_value(const Exponent& e, const Vector& x) {
  double v = 1.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) {
      v *= std::pow(x[static_cast<Eigen::Index>(i)], e[i]);
    }
  }
  return v;
}

}  // namespace

MultiPoly MultiPoly::constant(const Rational& c, std::size_t nvars) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t index, std::size_t nvars) {
  if (index >= nvars) {
    throw InputError("variable index out of range");
  }
  MultiPoly p(nvars);
  Exponent e(nvars, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::from_terms(std::size_t nvars,
                                const std::vector<std::pair<Exponent, Rational>>& terms) {
  MultiPoly p(nvars);
  for (const auto& [e, c] : terms) {
    if (e.size() != nvars) {
      throw InputError("exponent vector length " + std::to_string(e.size()) +
                       " does not match nvars " + std::to_string(nvars));
    }
    if (std::any_of(e.begin(), e.end(), [](int k) { return k < 0; })) {
      throw InputError("negative exponent");
    }
    p.add_term(e, c);
  }
  return p;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) {
      s += k;
    }
    d = std::max(d, s);
  }
  return d;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

void MultiPoly::check_arity(std::size_t n, const char* what) const {
  if (n != nvars_) {
    throw InputError(std::string(what) + ": arity mismatch (" + std::to_string(nvars_) +
                     " vs " + std::to_string(n) + ")");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_arity(o.nvars_, "add");
  for (const auto& [e, c] : o.terms_) {
    add_term(e, c);
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_arity(o.nvars_, "subtract");
  for (const auto& [e, c] : o.terms_) {
    add_term(e, -c);
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b.nvars_, "multiply");
  MultiPoly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(add_exponents(ea, eb), ca * cb);
    }
  }
  return out;
}

MultiPoly operator*(const Rational& c, const MultiPoly& a) {
  MultiPoly out(a.nvars_);
  for (const auto& [e, v] : a.terms_) {
    out.add_term(e, c * v);
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly out = constant(1, nvars_);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) {
      out = out * base;
    }
    e >>= 1U;
    if (e > 0) {
      base = base * base;
    }
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != nvars_) {
    throw InputError("substitute: expected " + std::to_string(nvars_) + " images, got " +
                     std::to_string(images.size()));
  }
  const std::size_t m = images.empty() ? 0 : images.front().nvars();
  for (const auto& img : images) {
    if (img.nvars() != m) {
      throw InputError("substitute: images have different arities");
    }
  }
  // Cache powers of each image; exponents are small in practice.
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  auto power_of = [&](std::size_t var, int k) -> const MultiPoly& {
    auto& cache = powers[var];
    if (cache.empty()) {
      cache.push_back(constant(1, m));
    }
    while (static_cast<int>(cache.size()) <= k) {
      cache.push_back(cache.back() * images[var]);
    }
    return cache[static_cast<std::size_t>(k)];
  };

  MultiPoly out(m);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(c, m);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] > 0) {
        term = term * power_of(i, e[i]);
      }
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= nvars_) {
    throw InputError("derivative: variable index out of range");
  }
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) {
      continue;
    }
    Exponent d = e;
    d[var] -= 1;
    out.add_term(d, c * e[var]);
  }
  return out;
}

double MultiPoly::eval(const Vector& point) const {
  check_arity(static_cast<std::size_t>(point.size()), "eval");
  double v = 0.0;
  for (const auto& [e, c] : terms_) {
    v += c.get_d() * monomial_value(e, point);
  }
  return v;
}

Rational MultiPoly::eval_exact(const std::vector<Rational>& point) const {
  check_arity(point.size(), "eval_exact");
  Rational v = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (int k = 0; k < e[i]; ++k) {
        t *= point[i];
      }
    }
    v += t;
  }
  return v;
}

int MultiPoly::sign_at(const Vector& point, double rel) const {
  check_arity(static_cast<std::size_t>(point.size()), "sign_at");
  double v = 0.0;
  double scale = 0.0;
  for (const auto& [e, c] : terms_) {
    const double t = c.get_d() * monomial_value(e, point);
    v += t;
    scale += std::abs(t);
  }
  if (std::abs(v) >= rel * scale && std::isfinite(v)) {
    return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
  }
  std::vector<Rational> exact;
  exact.reserve(nvars_);
  for (Eigen::Index i = 0; i < point.size(); ++i) {
    exact.push_back(to_rational(point[i]));
  }
  return sgn(eval_exact(exact));
}

std::optional<std::size_t> MultiPoly::asymmetric_transposition() const {
  for (std::size_t i = 0; i + 1 < nvars_; ++i) {
    for (const auto& [e, c] : terms_) {
      Exponent swapped = e;
      std::swap(swapped[i], swapped[i + 1]);
      auto it = terms_.find(swapped);
      if (it == terms_.end() || it->second != c) {
        return i;
      }
    }
  }
  return std::nullopt;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    os << (first ? "" : " + ") << c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) {
        os << "*x" << (i + 1);
        if (e[i] > 1) {
          os << "^" << e[i];
        }
      }
    }
    first = false;
  }
  return os.str();
}

MultiPoly apply_signed_permutation(const MultiPoly& f, const SignedPermutation& pi) {
  if (pi.size() != f.nvars()) {
    throw InputError("signed permutation size does not match polynomial arity");
  }
  // (pi x)_{perm[i]} = signs[i] x_i, so variable perm[i] becomes signs[i] * x_i.
  std::vector<MultiPoly> images(f.nvars(), MultiPoly(f.nvars()));
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    images[static_cast<std::size_t>(pi.perm()[i])] =
        Rational(pi.signs()[i]) * MultiPoly::variable(i, f.nvars());
  }
  return f.substitute(images);
}

std::vector<MultiPoly> power_sums(std::size_t n) {
  std::vector<MultiPoly> p;
  for (std::size_t k = 1; k <= n; ++k) {
    MultiPoly s(n);
    for (std::size_t i = 0; i < n; ++i) {
      Exponent e(n, 0);
      e[i] = static_cast<int>(k);
      s.add_term(e, 1);
    }
    p.push_back(std::move(s));
  }
  return p;
}

namespace {

std::vector<MultiPoly> elementary_symmetric(std::size_t n) {
  // e_k from the generating product prod_i (1 + x_i T).
  std::vector<MultiPoly> e(n + 1, MultiPoly(n));
  e[0] = MultiPoly::constant(1, n);
  for (std::size_t i = 0; i < n; ++i) {
    const MultiPoly xi = MultiPoly::variable(i, n);
    for (std::size_t k = i + 1; k >= 1; --k) {
      e[k] += e[k - 1] * xi;
    }
  }
  return e;
}

// e_k written in the power sums p_1..p_n via Newton's identities
//   k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i.
std::vector<MultiPoly> elementary_in_power_sums(std::size_t n) {
  std::vector<MultiPoly> e(n + 1, MultiPoly(n));
  e[0] = MultiPoly::constant(1, n);
  for (std::size_t k = 1; k <= n; ++k) {
    MultiPoly acc(n);
    for (std::size_t i = 1; i <= k; ++i) {
      const MultiPoly term = e[k - i] * MultiPoly::variable(i - 1, n);
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    e[k] = Rational(1, static_cast<unsigned long>(k)) * acc;
  }
  return e;
}

}  // namespace

MultiPoly power_sum_rewrite(const MultiPoly& h) {
  const std::size_t n = h.nvars();
  if (auto bad = h.asymmetric_transposition()) {
    throw InputError("polynomial is not symmetric: swapping x" + std::to_string(*bad + 1) +
                     " and x" + std::to_string(*bad + 2) + " changes it");
  }
  if (n == 0) {
    return h;
  }
  // Fundamental theorem: peel off the lex-leading term with products of e_k.
  const auto e = elementary_symmetric(n);
  MultiPoly rest = h;
  MultiPoly in_e(n);
  while (!rest.is_zero()) {
    const auto& [lead, c] = *rest.terms().rbegin();
    Exponent beta(n, 0);
    MultiPoly product = MultiPoly::constant(c, n);
    for (std::size_t k = 0; k < n; ++k) {
      const int next = k + 1 < n ? lead[k + 1] : 0;
      beta[k] = lead[k] - next;
      if (beta[k] < 0) {
        throw InternalError("leading exponent of a symmetric polynomial is not a partition");
      }
      if (beta[k] > 0) {
        product = product * e[k + 1].pow(static_cast<unsigned>(beta[k]));
      }
    }
    in_e.add_term(beta, c);
    rest -= product;
  }
  const auto e_of_p = elementary_in_power_sums(n);
  return in_e.substitute(std::vector<MultiPoly>(e_of_p.begin() + 1, e_of_p.end()));
}

MultiPoly power_sum_rewrite_squares(const MultiPoly& h) {
  MultiPoly halved(h.nvars());
  for (const auto& [e, c] : h.terms()) {
    Exponent half(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] % 2 != 0) {
        throw InputError("power_sum_rewrite_squares: odd exponent in x" + std::to_string(i + 1));
      }
      half[i] = e[i] / 2;
    }
    halved.add_term(half, c);
  }
  return power_sum_rewrite(halved);
}

}  // namespace edcrit
