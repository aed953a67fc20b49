#pragma once

#include <map>
#include <string>
#include <utility>

#include "qgf/errors.hpp"
#include "qgf/rational.hpp"

namespace qgf {

/// Names and unit choice of one coefficient-ring instance. `param` is the
/// distinguished deformation parameter (w, w', v, ...); `aux` is the
/// contraction parameter that only shows up transiently during limits.
/// `unit_square` is j^2 for the adjoined Cayley-Klein unit, or Scalar::kNoUnit.
struct RingSpec {
  std::string param = "w";
  std::string aux = "lam";
  int unit_square = 2;  // Scalar::kNoUnit
  bool operator==(const RingSpec&) const = default;
};

/// Exact scalar: a Laurent polynomial in the deformation parameter (and, when
/// a contraction is in flight, the auxiliary parameter), with an optional
/// Cayley-Klein part: value = sum over powers of (re + j*im) * param^m * aux^a,
/// j^2 = s in {-1, 0, +1}. Zero coefficients are never stored.
class Scalar {
public:
  static constexpr int kNoUnit = 2;

  /// (main power, aux power)
  using Pow = std::pair<int, int>;
  struct Coef {
    Rational re, im;
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
  };

  Scalar() = default;
  Scalar(long long n) { set(Pow{0, 0}, Coef{Rational(n), Rational(0)}); }
  Scalar(const Rational& r) { set(Pow{0, 0}, Coef{r, Rational(0)}); }

  static Scalar param(int pow = 1, const Rational& c = Rational(1)) {
    Scalar s;
    s.set(Pow{pow, 0}, Coef{c, Rational(0)});
    return s;
  }
  static Scalar aux(int pow = 1, const Rational& c = Rational(1)) {
    Scalar s;
    s.set(Pow{0, pow}, Coef{c, Rational(0)});
    return s;
  }
  /// c * j, with j^2 = unit_square
  static Scalar unit(int unit_square, const Rational& c = Rational(1)) {
    Scalar s;
    s.unit_sq_ = unit_square;
    s.set(Pow{0, 0}, Coef{Rational(0), c});
    return s;
  }

  bool is_zero() const { return c_.empty(); }
  bool has_unit_part() const {
    for (auto& [p, c] : c_)
      if (!c.im.is_zero()) return true;
    return false;
  }
  int unit_square() const { return unit_sq_; }

  /// exactly one stored power key
  bool is_monomial() const { return c_.size() == 1; }
  /// a pure rational constant (power (0,0), no j-part)
  bool is_rational() const {
    if (c_.empty()) return true;
    return c_.size() == 1 && c_.begin()->first == Pow{0, 0} &&
           c_.begin()->second.im.is_zero();
  }
  Rational rational_value() const {
    if (c_.empty()) return Rational(0);
    if (!is_rational()) throw config_error("scalar is not a rational constant");
    return c_.begin()->second.re;
  }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& [p, c] : r.c_) { c.re = -c.re; c.im = -c.im; }
    return r;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar r = a;
    r.merge_unit(b.unit_sq_);
    for (auto& [p, c] : b.c_) {
      auto it = r.c_.find(p);
      if (it == r.c_.end()) {
        r.c_.emplace(p, c);
      } else {
        it->second.re += c.re;
        it->second.im += c.im;
        if (it->second.is_zero()) r.c_.erase(it);
      }
    }
    return r;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    r.unit_sq_ = merged_unit(a.unit_sq_, b.unit_sq_);
    const Rational s = r.unit_sq_ == kNoUnit ? Rational(0) : Rational(r.unit_sq_);
    for (auto& [pa, ca] : a.c_)
      for (auto& [pb, cb] : b.c_) {
        Pow p{pa.first + pb.first, pa.second + pb.second};
        // (x + jy)(u + jv) = xu + s yv + j(xv + yu)
        Coef c{ca.re * cb.re + s * (ca.im * cb.im), ca.re * cb.im + ca.im * cb.re};
        if (c.is_zero()) continue;
        auto it = r.c_.find(p);
        if (it == r.c_.end()) {
          r.c_.emplace(p, c);
        } else {
          it->second.re += c.re;
          it->second.im += c.im;
          if (it->second.is_zero()) r.c_.erase(it);
        }
      }
    return r;
  }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  /// Inverse of a monomial scalar. (re + j im)^-1 = (re - j im)/(re^2 - s im^2);
  /// requires the norm to be nonzero, which fails exactly for non-invertible
  /// dual-unit combinations (s = 0 with re = 0).
  Scalar inverse() const {
    if (!is_monomial()) throw unsupported_error("inverse of non-monomial scalar");
    auto& [p, c] = *c_.begin();
    Rational s = unit_sq_ == kNoUnit ? Rational(0) : Rational(unit_sq_);
    Rational norm = c.re * c.re - s * (c.im * c.im);
    if (norm.is_zero())
      throw unsupported_error("scalar has no inverse (zero norm)");
    Scalar r;
    r.unit_sq_ = unit_sq_;
    r.set(Pow{-p.first, -p.second}, Coef{c.re / norm, -(c.im / norm)});
    return r;
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.c_.size() != b.c_.size()) return false;
    auto ia = a.c_.begin();
    for (auto ib = b.c_.begin(); ib != b.c_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return false;
      if (ia->second.re != ib->second.re || ia->second.im != ib->second.im) return false;
    }
    return true;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// total order usable as a map key tiebreaker
  friend bool operator<(const Scalar& a, const Scalar& b) {
    auto ia = a.c_.begin(), ib = b.c_.begin();
    for (; ia != a.c_.end() && ib != b.c_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first < ib->first;
      if (ia->second.re != ib->second.re) return ia->second.re < ib->second.re;
      if (ia->second.im != ib->second.im) return ia->second.im < ib->second.im;
    }
    return ia == a.c_.end() && ib != b.c_.end();
  }

  int min_pow_main() const {
    int m = 0;
    bool first = true;
    for (auto& [p, c] : c_) {
      if (first || p.first < m) m = p.first;
      first = false;
    }
    return m;
  }
  int min_pow_aux() const {
    int m = 0;
    bool first = true;
    for (auto& [p, c] : c_) {
      if (first || p.second < m) m = p.second;
      first = false;
    }
    return m;
  }

  /// slice: the coefficient of param^k (aux powers retained), as a Scalar
  Scalar slice_main(int k) const {
    Scalar r;
    r.unit_sq_ = unit_sq_;
    for (auto& [p, c] : c_)
      if (p.first == k) r.set(Pow{0, p.second}, c);
    return r;
  }
  /// slice: the coefficient of aux^k (main powers retained)
  Scalar slice_aux(int k) const {
    Scalar r;
    r.unit_sq_ = unit_sq_;
    for (auto& [p, c] : c_)
      if (p.second == k) r.set(Pow{p.first, 0}, c);
    return r;
  }
  bool has_negative_main() const {
    for (auto& [p, c] : c_)
      if (p.first < 0) return true;
    return false;
  }
  bool has_negative_aux() const {
    for (auto& [p, c] : c_)
      if (p.second < 0) return true;
    return false;
  }
  bool depends_on_main() const {
    for (auto& [p, c] : c_)
      if (p.first != 0) return true;
    return false;
  }
  bool depends_on_aux() const {
    for (auto& [p, c] : c_)
      if (p.second != 0) return true;
    return false;
  }

  /// param -> aux^k * param  (used when a contraction rescales the
  /// deformation parameter itself)
  Scalar rescale_param_by_aux(int k) const {
    Scalar r;
    r.unit_sq_ = unit_sq_;
    for (auto& [p, c] : c_) r.set(Pow{p.first, p.second + k * p.first}, c);
    return r;
  }
  /// aux -> 1 (after a limit has been verified to exist)
  Scalar drop_aux() const {
    Scalar r;
    r.unit_sq_ = unit_sq_;
    for (auto& [p, c] : c_) {
      Pow q{p.first, 0};
      auto it = r.c_.find(q);
      if (it == r.c_.end()) r.c_.emplace(q, c);
      else {
        it->second.re += c.re;
        it->second.im += c.im;
        if (it->second.is_zero()) r.c_.erase(it);
      }
    }
    return r;
  }
  /// substitute the deformation parameter by the monomial c (which carries
  /// its own powers): param^m -> c^m
  Scalar scale_param_coeff(const Scalar& c) const {
    Scalar r;
    for (auto& [p, co] : c_) {
      Scalar piece;
      piece.unit_sq_ = unit_sq_;
      piece.set(Pow{0, p.second}, co);
      r += piece * c.pow(p.first);
    }
    return r;
  }

  /// j -> 1 specialization, only meaningful for unit_square = +1
  Scalar collapse_unit_to_one() const {
    Scalar r;
    for (auto& [p, c] : c_) {
      Coef nc{c.re + c.im, Rational(0)};
      if (!nc.is_zero()) r.set(p, nc);
    }
    return r;
  }
  /// real part (drops j*im entirely)
  Scalar real_part() const {
    Scalar r;
    for (auto& [p, c] : c_)
      if (!c.re.is_zero()) r.set(p, Coef{c.re, Rational(0)});
    return r;
  }
  /// the coefficient of j, as a j-free scalar
  Scalar unit_part() const {
    Scalar r;
    for (auto& [p, c] : c_)
      if (!c.im.is_zero()) r.set(p, Coef{c.im, Rational(0)});
    return r;
  }

  Scalar pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    Scalar r(1);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
  }

  std::string str(const RingSpec& ring = RingSpec{}) const;

private:
  static int merged_unit(int a, int b) {
    if (a == kNoUnit) return b;
    if (b == kNoUnit) return a;
    if (a != b) throw config_error("mixing scalars with different unit squares");
    return a;
  }
  void merge_unit(int other) { unit_sq_ = merged_unit(unit_sq_, other); }
  void set(Pow p, Coef c) {
    if (!c.is_zero()) c_[p] = c;
  }

  std::map<Pow, Coef> c_;
  int unit_sq_ = kNoUnit;
};

}  // namespace qgf
