#pragma once

#include <map>
#include <string>
#include <vector>

#include "qgf/scalar.hpp"

namespace qgf {

/// Linear form in ring variables, e.g. 2w*A+ or -2*chi. Lives in the exponent
/// slot of an exponential symbol. Zero coefficients are never stored.
class LinForm {
public:
  LinForm() = default;
  LinForm(const std::string& var, const Scalar& c) { add(var, c); }

  bool is_zero() const { return c_.empty(); }
  const std::map<std::string, Scalar>& terms() const { return c_; }

  void add(const std::string& var, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = c_.find(var);
    if (it == c_.end()) {
      c_.emplace(var, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  Scalar coeff(const std::string& var) const {
    auto it = c_.find(var);
    return it == c_.end() ? Scalar() : it->second;
  }

  friend LinForm operator+(const LinForm& a, const LinForm& b) {
    LinForm r = a;
    for (auto& [v, c] : b.c_) r.add(v, c);
    return r;
  }
  LinForm operator-() const { return scaled(Scalar(-1)); }
  friend LinForm operator-(const LinForm& a, const LinForm& b) { return a + (-b); }

  LinForm scaled(const Scalar& s) const {
    LinForm r;
    for (auto& [v, c] : c_) r.add(v, c * s);
    return r;
  }

  friend bool operator==(const LinForm& a, const LinForm& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LinForm& a, const LinForm& b) { return !(a == b); }
  friend bool operator<(const LinForm& a, const LinForm& b) {
    auto ia = a.c_.begin(), ib = b.c_.begin();
    for (; ia != a.c_.end() && ib != b.c_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first < ib->first;
      if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.c_.end() && ib != b.c_.end();
  }

  std::string str(const RingSpec& ring) const;

private:
  std::map<std::string, Scalar> c_;
};

/// var -> degree, degrees strictly positive
using Monomial = std::map<std::string, int>;

int total_degree(const Monomial& m);

/// Canonical element of the commutative exponential-polynomial ring:
/// a sum of terms coeff * x1^d1...xk^dk * e^{linear form}, with Scalar
/// coefficients. Two terms never share the same (monomial, exponent) key.
class ExpPoly {
public:
  using Key = std::pair<Monomial, LinForm>;

  ExpPoly() = default;
  explicit ExpPoly(RingSpec ring) : ring_(std::move(ring)) {}

  static ExpPoly constant(const Scalar& c, RingSpec ring) {
    ExpPoly p(std::move(ring));
    p.add_term(c, {}, {});
    return p;
  }
  static ExpPoly variable(const std::string& name, RingSpec ring) {
    ExpPoly p(std::move(ring));
    p.add_term(Scalar(1), Monomial{{name, 1}}, {});
    return p;
  }
  /// e^{L}
  static ExpPoly exponential(const LinForm& L, RingSpec ring) {
    ExpPoly p(std::move(ring));
    p.add_term(Scalar(1), {}, L);
    return p;
  }

  const RingSpec& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Key, Scalar>& terms() const { return terms_; }

  /// Canonicalizing insert; in a dual-unit ring (j^2 = 0) an exponent with a
  /// j-proportional part is rewritten to its exact polynomial form
  /// e^{A + jB} = (1 + jB) e^{A}.
  void add_term(Scalar c, Monomial m, LinForm L);

  ExpPoly operator-() const;
  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(const Scalar& s, const ExpPoly& a);
  friend ExpPoly operator*(const ExpPoly& a, const Scalar& s) { return s * a; }
  friend ExpPoly operator/(const ExpPoly& a, const Scalar& s) { return s.inverse() * a; }
  ExpPoly& operator+=(const ExpPoly& b) { return *this = *this + b; }
  ExpPoly& operator-=(const ExpPoly& b) { return *this = *this - b; }
  ExpPoly& operator*=(const ExpPoly& b) { return *this = *this * b; }
  ExpPoly pow(int n) const;

  friend bool operator==(const ExpPoly& a, const ExpPoly& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const ExpPoly& a, const ExpPoly& b) { return !(a == b); }

  /// Leibniz derivative; d/dx e^{L} = L[x] e^{L}.
  ExpPoly derivative(const std::string& var) const;

  /// Replace every exponential by its Taylor polynomial and drop all terms of
  /// variable total degree > max_degree. Result has empty exponents.
  ExpPoly expand_series(int max_degree) const;

  /// Linear change of variables: each mapped variable is replaced by the given
  /// linear form, in monomials (multinomially) and in exponents.
  ExpPoly substitute_linear(const std::map<std::string, LinForm>& map) const;

  /// General substitution. Variables occurring inside an exponent must have
  /// images expressible as a linear form; polynomial occurrences may map to
  /// arbitrary elements.
  ExpPoly substitute(const std::map<std::string, ExpPoly>& map) const;

  /// Limit as the deformation parameter (aux = false) or the contraction
  /// parameter (aux = true) tends to zero: expands parameter-carrying
  /// exponentials far enough, returns the parameter^0 slice. Throws
  /// divergent_limit_error when a negative power survives. `order` may raise
  /// the automatically chosen expansion depth.
  ExpPoly limit_param(bool aux, int order = 0) const;

  /// Contraction plumbing: every variable v with an entry p in `pows` is
  /// rescaled v -> aux^p * v (the variable keeps its name).
  ExpPoly rescale_vars_by_aux(const std::map<std::string, int>& pows) const;
  /// Deformation parameter rescale param -> aux^k * param.
  ExpPoly rescale_param_by_aux(int k) const;

  ExpPoly rename_vars(const std::map<std::string, std::string>& names) const;
  /// j -> 1 specialization (meaningful for unit_square = +1); the result lives
  /// in `target` which must be unit-free.
  ExpPoly collapse_unit_to_one(RingSpec target) const;

  bool depends_on(const std::string& var) const;
  std::vector<std::string> support() const;
  int max_total_degree() const;

  std::string str() const;

private:
  void check_ring(const ExpPoly& other) const;

  RingSpec ring_;
  std::map<Key, Scalar> terms_;
};

/// The linear form as a polynomial (used to expand exponentials).
ExpPoly linform_to_poly(const LinForm& L, const RingSpec& ring);

/// Cayley-Klein trigonometry over a ring with unit j (j^2 = s), applied to a
/// single variable: cosh(j y), sinh(j y)/j and (cosh(j y) - 1)/j^2 are real
/// series in y for every s and exact elements of the ring.
ExpPoly ck_cosh(const std::string& var, const RingSpec& ring);
ExpPoly ck_sinh_over_j(const std::string& var, const RingSpec& ring);
ExpPoly ck_coshm1_over_j2(const std::string& var, const RingSpec& ring);

}  // namespace qgf
