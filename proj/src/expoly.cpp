#include "qgf/expoly.hpp"

#include <algorithm>

#include "qgf/errors.hpp"

namespace qgf {

int total_degree(const Monomial& m) {
  int d = 0;
  for (auto& [v, e] : m) d += e;
  return d;
}

std::string LinForm::str(const RingSpec& ring) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [v, c] : c_) {
    std::string cs = c.str(ring);
    bool neg = cs[0] == '-' && cs.find(' ') == std::string::npos;
    std::string body = cs.find(' ') != std::string::npos ? "(" + cs + ")" : (neg ? cs.substr(1) : cs);
    std::string piece = body == "1" ? v : body + "*" + v;
    if (first)
      out = (neg ? "-" : "") + piece;
    else
      out += (neg ? " - " : " + ") + piece;
    first = false;
  }
  return out;
}

void ExpPoly::check_ring(const ExpPoly& other) const {
  if (!(ring_ == other.ring_))
    throw config_error("operands come from different ring instances");
}

void ExpPoly::add_term(Scalar c, Monomial m, LinForm L) {
  if (c.is_zero()) return;
  for (auto it = m.begin(); it != m.end();) {
    if (it->second == 0)
      it = m.erase(it);
    else if (it->second < 0)
      throw config_error("negative variable degree");
    else
      ++it;
  }
  if (ring_.unit_square == 0) {
    LinForm Lre;
    std::vector<std::pair<std::string, Scalar>> Lim;
    for (auto& [v, cf] : L.terms()) {
      Scalar re = cf.real_part(), im = cf.unit_part();
      if (!re.is_zero()) Lre.add(v, re);
      if (!im.is_zero()) Lim.emplace_back(v, im);
    }
    if (!Lim.empty()) {
      // j^2 = 0 forces e^{A + jB} = (1 + jB) e^{A} exactly
      add_term(c, m, Lre);
      Scalar j = Scalar::unit(0);
      for (auto& [v, im] : Lim) {
        Monomial m2 = m;
        m2[v] += 1;
        add_term(c * j * Scalar(im), std::move(m2), Lre);
      }
      return;
    }
  }
  Key k{std::move(m), std::move(L)};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly r(ring_);
  for (auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
  a.check_ring(b);
  ExpPoly r = a;
  for (auto& [k, c] : b.terms_) {
    auto it = r.terms_.find(k);
    if (it == r.terms_.end()) {
      r.terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  a.check_ring(b);
  ExpPoly r(a.ring_);
  for (auto& [ka, ca] : a.terms_)
    for (auto& [kb, cb] : b.terms_) {
      Monomial m = ka.first;
      for (auto& [v, d] : kb.first) m[v] += d;
      r.add_term(ca * cb, std::move(m), ka.second + kb.second);
    }
  return r;
}

ExpPoly operator*(const Scalar& s, const ExpPoly& a) {
  ExpPoly r(a.ring_);
  for (auto& [k, c] : a.terms_) r.add_term(s * c, k.first, k.second);
  return r;
}

ExpPoly ExpPoly::pow(int n) const {
  if (n < 0) throw unsupported_error("negative power of ring element");
  ExpPoly r = constant(Scalar(1), ring_);
  for (int i = 0; i < n; ++i) r *= *this;
  return r;
}

ExpPoly ExpPoly::derivative(const std::string& var) const {
  ExpPoly r(ring_);
  for (auto& [k, c] : terms_) {
    const auto& [m, L] = k;
    auto it = m.find(var);
    if (it != m.end()) {
      Monomial m2 = m;
      if (--m2[var] == 0) m2.erase(var);
      r.add_term(c * Scalar(it->second), std::move(m2), L);
    }
    Scalar lc = L.coeff(var);
    if (!lc.is_zero()) r.add_term(c * lc, m, L);
  }
  return r;
}

ExpPoly linform_to_poly(const LinForm& L, const RingSpec& ring) {
  ExpPoly p(ring);
  for (auto& [v, c] : L.terms()) p.add_term(c, Monomial{{v, 1}}, {});
  return p;
}

ExpPoly ExpPoly::expand_series(int max_degree) const {
  ExpPoly out(ring_);
  for (auto& [k, c] : terms_) {
    const auto& [m, L] = k;
    int d0 = total_degree(m);
    if (d0 > max_degree) continue;
    ExpPoly t(ring_);
    t.add_term(c, m, {});
    if (!L.is_zero()) {
      ExpPoly lp = linform_to_poly(L, ring_);
      ExpPoly ex = constant(Scalar(1), ring_);
      ExpPoly p = constant(Scalar(1), ring_);
      Rational fact(1);
      for (int n = 1; n <= max_degree - d0; ++n) {
        p *= lp;
        fact *= Rational(n);
        ex += Scalar(Rational(1) / fact) * p;
      }
      t *= ex;
    }
    for (auto& [kt, ct] : t.terms())
      if (total_degree(kt.first) <= max_degree) out.add_term(ct, kt.first, kt.second);
  }
  return out;
}

namespace {

// image usable inside an exponent: every term a single degree-1 variable
LinForm to_linform(const ExpPoly& p) {
  LinForm L;
  for (auto& [k, c] : p.terms()) {
    const auto& [m, e] = k;
    if (!e.is_zero() || m.size() != 1 || m.begin()->second != 1)
      throw unsupported_error("nonlinear image substituted into an exponent");
    L.add(m.begin()->first, c);
  }
  return L;
}

}  // namespace

ExpPoly ExpPoly::substitute(const std::map<std::string, ExpPoly>& map) const {
  ExpPoly out(ring_);
  for (auto& [k, c] : terms_) {
    const auto& [m, L] = k;
    LinForm L2;
    for (auto& [v, cf] : L.terms()) {
      auto it = map.find(v);
      if (it == map.end())
        L2.add(v, cf);
      else
        L2 = L2 + to_linform(it->second).scaled(cf);
    }
    ExpPoly t(ring_);
    t.add_term(c, {}, L2);
    for (auto& [v, d] : m) {
      auto it = map.find(v);
      ExpPoly base = it == map.end() ? variable(v, ring_) : it->second;
      t *= base.pow(d);
    }
    out += t;
  }
  return out;
}

ExpPoly ExpPoly::substitute_linear(const std::map<std::string, LinForm>& map) const {
  std::map<std::string, ExpPoly> m;
  for (auto& [v, L] : map) m.emplace(v, linform_to_poly(L, ring_));
  return substitute(m);
}

ExpPoly ExpPoly::limit_param(bool aux, int order) const {
  int need = order;
  for (auto& [k, c] : terms_) {
    int mp = aux ? c.min_pow_aux() : c.min_pow_main();
    need = std::max(need, -mp);
  }
  ExpPoly expanded(ring_);
  for (auto& [k, c] : terms_) {
    const auto& [m, L] = k;
    LinForm Lfree, Lpar;
    for (auto& [v, cf] : L.terms()) {
      // split the coefficient by powers of the limit parameter
      Scalar stay, go;
      bool bad = false;
      for (int p = -64; p <= 64; ++p) {
        Scalar s = aux ? cf.slice_aux(p) : cf.slice_main(p);
        if (s.is_zero()) continue;
        Scalar piece = s * (aux ? Scalar::aux(p) : Scalar::param(p));
        if (p == 0)
          stay += piece;
        else if (p > 0)
          go += piece;
        else
          bad = true;
      }
      if (bad) {
        ExpPoly t(ring_);
        t.add_term(c, m, L);
        throw divergent_limit_error(t.str());
      }
      if (!stay.is_zero()) Lfree.add(v, stay);
      if (!go.is_zero()) Lpar.add(v, go);
    }
    ExpPoly base(ring_);
    base.add_term(c, m, Lfree);
    if (!Lpar.is_zero()) {
      ExpPoly lp = linform_to_poly(Lpar, ring_);
      ExpPoly ex = constant(Scalar(1), ring_);
      ExpPoly p = constant(Scalar(1), ring_);
      Rational fact(1);
      for (int n = 1; n <= need; ++n) {
        p *= lp;
        fact *= Rational(n);
        ex += Scalar(Rational(1) / fact) * p;
      }
      base *= ex;
    }
    expanded += base;
  }
  ExpPoly out(ring_);
  for (auto& [k, c] : expanded.terms_) {
    bool neg = aux ? c.has_negative_aux() : c.has_negative_main();
    if (neg) {
      ExpPoly t(ring_);
      t.add_term(c, k.first, k.second);
      throw divergent_limit_error(t.str());
    }
    Scalar s = aux ? c.slice_aux(0) : c.slice_main(0);
    if (!s.is_zero()) out.add_term(s, k.first, k.second);
  }
  return out;
}

ExpPoly ExpPoly::rescale_vars_by_aux(const std::map<std::string, int>& pows) const {
  ExpPoly out(ring_);
  for (auto& [k, c] : terms_) {
    const auto& [m, L] = k;
    Scalar c2 = c;
    for (auto& [v, d] : m) {
      auto it = pows.find(v);
      if (it != pows.end() && it->second != 0) c2 *= Scalar::aux(it->second * d);
    }
    LinForm L2;
    for (auto& [v, cf] : L.terms()) {
      auto it = pows.find(v);
      L2.add(v, it == pows.end() ? cf : cf * Scalar::aux(it->second));
    }
    out.add_term(c2, m, L2);
  }
  return out;
}

ExpPoly ExpPoly::rescale_param_by_aux(int kk) const {
  ExpPoly out(ring_);
  for (auto& [k, c] : terms_) {
    LinForm L2;
    for (auto& [v, cf] : k.second.terms()) L2.add(v, cf.rescale_param_by_aux(kk));
    out.add_term(c.rescale_param_by_aux(kk), k.first, L2);
  }
  return out;
}

ExpPoly ExpPoly::rename_vars(const std::map<std::string, std::string>& names) const {
  auto nm = [&](const std::string& v) {
    auto it = names.find(v);
    return it == names.end() ? v : it->second;
  };
  ExpPoly out(ring_);
  for (auto& [k, c] : terms_) {
    Monomial m;
    for (auto& [v, d] : k.first) m[nm(v)] += d;
    LinForm L;
    for (auto& [v, cf] : k.second.terms()) L.add(nm(v), cf);
    out.add_term(c, std::move(m), L);
  }
  return out;
}

ExpPoly ExpPoly::collapse_unit_to_one(RingSpec target) const {
  ExpPoly out(std::move(target));
  for (auto& [k, c] : terms_) {
    LinForm L;
    for (auto& [v, cf] : k.second.terms()) L.add(v, cf.collapse_unit_to_one());
    out.add_term(c.collapse_unit_to_one(), k.first, L);
  }
  return out;
}

bool ExpPoly::depends_on(const std::string& var) const {
  for (auto& [k, c] : terms_) {
    if (k.first.count(var)) return true;
    if (!k.second.coeff(var).is_zero()) return true;
  }
  return false;
}

std::vector<std::string> ExpPoly::support() const {
  std::vector<std::string> v;
  for (auto& [k, c] : terms_) {
    for (auto& [x, d] : k.first)
      if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    for (auto& [x, cf] : k.second.terms())
      if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
  }
  std::sort(v.begin(), v.end());
  return v;
}

int ExpPoly::max_total_degree() const {
  int d = 0;
  for (auto& [k, c] : terms_) d = std::max(d, total_degree(k.first));
  return d;
}

std::string ExpPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Key, Scalar>*> order;
  for (auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    int da = total_degree(a->first.first), db = total_degree(b->first.first);
    if (da != db) return da < db;
    return a->first < b->first;
  });
  std::string out;
  for (auto* t : order) {
    const auto& [m, L] = t->first;
    std::string cs = t->second.str(ring_);
    bool composite = cs.find(' ') != std::string::npos;
    std::string piece = composite ? "(" + cs + ")" : cs;
    std::string body;
    for (auto& [v, d] : m) {
      body += body.empty() ? "" : "*";
      body += v;
      if (d > 1) body += "^" + std::to_string(d);
    }
    if (!L.is_zero()) {
      body += body.empty() ? "" : "*";
      body += "e^(" + L.str(ring_) + ")";
    }
    if (body.empty())
      body = piece;
    else if (piece == "1")
      ;  // keep bare body
    else if (piece == "-1")
      body = "-" + body;
    else
      body = piece + "*" + body;
    out += out.empty() ? body : (body[0] == '-' ? " - " + body.substr(1) : " + " + body);
  }
  return out;
}

ExpPoly ck_cosh(const std::string& var, const RingSpec& ring) {
  if (ring.unit_square == Scalar::kNoUnit)
    throw config_error("Cayley-Klein trig needs a ring with unit j");
  if (ring.unit_square == 0) return ExpPoly::constant(Scalar(1), ring);
  Scalar j = Scalar::unit(ring.unit_square);
  ExpPoly p(ring);
  p.add_term(Scalar(Rational(1, 2)), {}, LinForm(var, j));
  p.add_term(Scalar(Rational(1, 2)), {}, LinForm(var, -j));
  return p;
}

ExpPoly ck_sinh_over_j(const std::string& var, const RingSpec& ring) {
  if (ring.unit_square == Scalar::kNoUnit)
    throw config_error("Cayley-Klein trig needs a ring with unit j");
  if (ring.unit_square == 0) return ExpPoly::variable(var, ring);
  Scalar j = Scalar::unit(ring.unit_square);
  Scalar half_inv_j = (Scalar(2) * j).inverse();
  ExpPoly p(ring);
  p.add_term(half_inv_j, {}, LinForm(var, j));
  p.add_term(-half_inv_j, {}, LinForm(var, -j));
  return p;
}

ExpPoly ck_coshm1_over_j2(const std::string& var, const RingSpec& ring) {
  if (ring.unit_square == Scalar::kNoUnit)
    throw config_error("Cayley-Klein trig needs a ring with unit j");
  if (ring.unit_square == 0) {
    ExpPoly p(ring);
    p.add_term(Scalar(Rational(1, 2)), Monomial{{var, 2}}, {});
    return p;
  }
  Scalar inv_s(Rational(1, ring.unit_square));
  return (ck_cosh(var, ring) - ExpPoly::constant(Scalar(1), ring)) * inv_s;
}

}  // namespace qgf
