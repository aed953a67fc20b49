#include "qgf/liebialg.hpp"

#include <optional>

#include "qgf/errors.hpp"

namespace qgf {

LieAlgebraSC::LieAlgebraSC(std::string name, std::vector<std::string> basis)
    : name_(std::move(name)), basis_(std::move(basis)), c_(dim() * dim() * dim()) {}

int LieAlgebraSC::index_of(const std::string& b) const {
  for (int i = 0; i < dim(); ++i)
    if (basis_[i] == b) return i;
  throw config_error("unknown basis element '" + b + "' in " + name_);
}

void LieAlgebraSC::set_bracket(const std::string& x, const std::string& y,
                               const std::vector<std::pair<std::string, Scalar>>& value) {
  int i = index_of(x), j = index_of(y);
  for (auto& [t, s] : value) {
    int k = index_of(t);
    c_[(i * dim() + j) * dim() + k] = s;
    c_[(j * dim() + i) * dim() + k] = -s;
  }
}

CheckResult LieAlgebraSC::validate() const {
  const int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (c(i, j, k) != -c(j, i, k)) return {false, "structure constants not antisymmetric"};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int t = 0; t < n; ++t) {
          Scalar s;
          for (int m = 0; m < n; ++m)
            s += c(i, j, m) * c(m, k, t) + c(j, k, m) * c(m, i, t) + c(k, i, m) * c(m, j, t);
          if (!s.is_zero())
            return {false, "Jacobi fails on (" + basis_[i] + "," + basis_[j] + "," + basis_[k] + ")"};
        }
  return {};
}

std::string Tensor2::str(const LieAlgebraSC& g) const {
  std::string out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!at(i, j).is_zero()) {
        out += (out.empty() ? "" : " + ") + ("(" + at(i, j).str({}) + ")*") + g.basis(i) +
               "^" + g.basis(j);
      }
  return out.empty() ? "0" : out;
}

bool Tensor3::totally_antisymmetric() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c) {
        if (at(a, b, c) != -at(b, a, c)) return false;
        if (at(a, b, c) != -at(a, c, b)) return false;
      }
  return true;
}

Tensor3 schouten(const RMatrixElem& r, const LieAlgebraSC& g) {
  const int n = g.dim();
  Tensor3 t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Scalar rr = r.at(i, j) * r.at(k, l);
          if (rr.is_zero()) continue;
          for (int m = 0; m < n; ++m) {
            // [r12,r13] + [r12,r23] + [r13,r23]
            if (!g.c(i, k, m).is_zero()) t.at(m, j, l) += rr * g.c(i, k, m);
            if (!g.c(j, k, m).is_zero()) t.at(i, m, l) += rr * g.c(j, k, m);
            if (!g.c(j, l, m).is_zero()) t.at(i, k, m) += rr * g.c(j, l, m);
          }
        }
  return t;
}

bool ad_invariant(const Tensor3& t, const LieAlgebraSC& g) {
  const int n = g.dim();
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          Scalar s;
          for (int m = 0; m < n; ++m)
            s += g.c(x, m, a) * t.at(m, b, c) + g.c(x, m, b) * t.at(a, m, c) +
                 g.c(x, m, c) * t.at(a, b, m);
          if (!s.is_zero()) return false;
        }
  return true;
}

CheckResult check_cybe(const RMatrixElem& r, const LieAlgebraSC& g) {
  if (!schouten(r, g).is_zero()) return {false, "[[r,r]] != 0"};
  return {};
}

CheckResult check_mcybe(const RMatrixElem& r, const LieAlgebraSC& g) {
  Tensor3 t = schouten(r, g);
  if (!ad_invariant(t, g)) return {false, "[[r,r]] is not ad-invariant"};
  return {};
}

Cocommutator coboundary_cocommutator(const RMatrixElem& r, const LieAlgebraSC& g) {
  const int n = g.dim();
  Cocommutator d(n, Tensor2(n));
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (r.at(a, b).is_zero()) continue;
        for (int m = 0; m < n; ++m) {
          if (!g.c(x, a, m).is_zero()) d[x].at(m, b) += g.c(x, a, m) * r.at(a, b);
          if (!g.c(x, b, m).is_zero()) d[x].at(a, m) += g.c(x, b, m) * r.at(a, b);
        }
      }
  return d;
}

namespace {

Tensor2 ad_act(const LieAlgebraSC& g, int x, const Tensor2& t) {
  const int n = g.dim();
  Tensor2 r(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (t.at(a, b).is_zero()) continue;
      for (int m = 0; m < n; ++m) {
        if (!g.c(x, a, m).is_zero()) r.at(m, b) += g.c(x, a, m) * t.at(a, b);
        if (!g.c(x, b, m).is_zero()) r.at(a, m) += g.c(x, b, m) * t.at(a, b);
      }
    }
  return r;
}

}  // namespace

CheckResult check_cocycle(const Cocommutator& d, const LieAlgebraSC& g) {
  const int n = g.dim();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      // delta([x,y]) = x.delta(y) - y.delta(x)
      Tensor2 lhs(n);
      for (int m = 0; m < n; ++m)
        if (!g.c(x, y, m).is_zero())
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) lhs.at(a, b) += g.c(x, y, m) * d[m].at(a, b);
      Tensor2 rhs = ad_act(g, x, d[y]) - ad_act(g, y, d[x]);
      if (!(lhs == rhs))
        return {false, "cocycle fails on (" + g.basis(x) + "," + g.basis(y) +
                           "): " + (lhs - rhs).str(g)};
    }
  return {};
}

CheckResult check_cojacobi(const Cocommutator& d, const LieAlgebraSC& g) {
  const int n = g.dim();
  for (int x = 0; x < n; ++x) {
    Tensor3 t(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (d[x].at(a, b).is_zero()) continue;
        for (int c2 = 0; c2 < n; ++c2)
          for (int d2 = 0; d2 < n; ++d2)
            t.at(c2, d2, b) += d[x].at(a, b) * d[a].at(c2, d2);
      }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c2 = 0; c2 < n; ++c2) {
          Scalar s = t.at(a, b, c2) + t.at(b, c2, a) + t.at(c2, a, b);
          if (!s.is_zero())
            return {false, "co-Jacobi fails on " + g.basis(x)};
        }
  }
  return {};
}

CheckResult check_duality_with_pairing(const LieAlgebraSC& g1, const Cocommutator& d1,
                                       const LieAlgebraSC& g2, const Cocommutator& d2,
                                       const std::map<std::string, std::string>& partner,
                                       const std::vector<Rational>& pairing) {
  const int n = g1.dim();
  if (g2.dim() != n) return {false, "dimension mismatch"};
  std::vector<int> sig(n);  // g1 index -> g2 index
  for (int i = 0; i < n; ++i) sig[i] = g2.index_of(partner.at(g1.basis(i)));
  for (auto& pr : pairing)
    if (pr.is_zero()) return {false, "degenerate pairing"};
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[sig[i]] = i;

  // <delta1(x), f_{sig(i)} (x) f_{sig(j)}> = <x, [f_{sig(i)}, f_{sig(j)}]>
  for (int x = 0; x < n; ++x)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Scalar lhs = d1[x].at(i, j) * Scalar(pairing[i] * pairing[j]);
        Scalar rhs = g2.c(sig[i], sig[j], sig[x]) * Scalar(pairing[x]);
        if (lhs != rhs)
          return {false, "first duality identity fails on (" + g1.basis(x) + ";" +
                             g1.basis(i) + "," + g1.basis(j) + ")"};
      }
  // <delta2(xi), e_x (x) e_y> = <xi, [e_x, e_y]>
  for (int u = 0; u < n; ++u)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        Scalar lhs = d2[u].at(sig[x], sig[y]) * Scalar(pairing[x] * pairing[y]);
        Scalar rhs = g1.c(x, y, inv[u]) * Scalar(pairing[inv[u]]);
        if (lhs != rhs)
          return {false, "second duality identity fails on (" + g2.basis(u) + ";" +
                             g1.basis(x) + "," + g1.basis(y) + ")"};
      }
  return {};
}

DualityReport check_bialgebra_duality(const LieAlgebraSC& g1, const Cocommutator& d1,
                                      const LieAlgebraSC& g2, const Cocommutator& d2,
                                      const std::map<std::string, std::string>& partner) {
  const int n = g1.dim();
  DualityReport rep;
  std::vector<int> sig(n);
  for (int i = 0; i < n; ++i) sig[i] = g2.index_of(partner.at(g1.basis(i)));
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[sig[i]] = i;

  // multiplicative constraints p_i p_j = rho * p_x from both identities
  struct Constraint {
    int i, j, x;
    Rational rho;
  };
  std::vector<Constraint> cons;
  auto ratio = [](const Scalar& a, const Scalar& b) -> std::optional<Rational> {
    // b / a when both are nonzero monomials with a rational quotient
    if (a.is_zero() || b.is_zero() || !a.is_monomial() || !b.is_monomial()) return std::nullopt;
    Scalar q = b * a.inverse();
    if (!q.is_rational()) return std::nullopt;
    return q.rational_value();
  };
  for (int x = 0; x < n; ++x)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        {
          Scalar a = d1[x].at(i, j), b = g2.c(sig[i], sig[j], sig[x]);
          if (!a.is_zero() || !b.is_zero()) {
            auto r = ratio(a, b);
            if (r) cons.push_back({i, j, x, *r});
          }
        }
        {
          Scalar a = d2[sig[x]].at(sig[i], sig[j]), b = g1.c(i, j, x);
          if (!a.is_zero() || !b.is_zero()) {
            auto r = ratio(a, b);
            if (r) cons.push_back({i, j, x, *r});
          }
        }
      }
  std::vector<std::optional<Rational>> p(n);
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& c : cons) {
      int unknowns = !p[c.i].has_value() + !p[c.j].has_value() + !p[c.x].has_value();
      if (c.i == c.j && !p[c.i].has_value()) continue;  // squared unknown, skip
      if (unknowns != 1) continue;
      if (!p[c.i]) {
        p[c.i] = c.rho * *p[c.x] / *p[c.j];
      } else if (!p[c.j]) {
        p[c.j] = c.rho * *p[c.x] / *p[c.i];
      } else if (!p[c.x]) {
        p[c.x] = *p[c.i] * *p[c.j] / c.rho;
      }
      progress = true;
    }
    if (!progress) {
      // fix one remaining normalization freedom and keep solving
      for (int i = 0; i < n; ++i)
        if (!p[i]) {
          p[i] = Rational(1);
          progress = true;
          break;
        }
    }
    bool done = true;
    for (int i = 0; i < n; ++i)
      if (!p[i]) done = false;
    if (done) break;
  }
  rep.pairing.resize(n);
  for (int i = 0; i < n; ++i) rep.pairing[i] = p[i].value_or(Rational(1));
  auto res = check_duality_with_pairing(g1, d1, g2, d2, partner, rep.pairing);
  rep.pass = res.pass;
  rep.detail = res.pass ? "" : res.witness;
  if (rep.pass) {
    std::string s;
    for (int i = 0; i < n; ++i)
      s += (s.empty() ? "" : ", ") + ("<" + g1.basis(i) + "," + partner.at(g1.basis(i)) +
                                      "> = " + rep.pairing[i].str());
    rep.detail = s;
  }
  return rep;
}

// --- catalog ---------------------------------------------------------------

LieAlgebraSC iso11_pk() {
  LieAlgebraSC g("iso(1,1) {P-,P+,K}", {"P-", "P+", "K"});
  g.set_bracket("K", "P+", {{"P+", Scalar(2)}});
  g.set_bracket("K", "P-", {{"P-", Scalar(-2)}});
  return g;
}

LieAlgebraSC iso11_ah() {
  LieAlgebraSC g("iso(1,1) {A-,A+,H}", {"A-", "A+", "H"});
  g.set_bracket("H", "A+", {{"A+", Scalar(2)}});
  g.set_bracket("H", "A-", {{"A-", Scalar(-2)}});
  return g;
}

LieAlgebraSC sb2() {
  LieAlgebraSC g("sb(2)", {"a-", "a+", "chi"});
  g.set_bracket("chi", "a+", {{"chi", Scalar::param(1, Rational(2))}});
  g.set_bracket("a+", "a-", {{"a-", Scalar::param(1, Rational(-2))}});
  return g;
}

RMatrixElem r_nonstandard(const LieAlgebraSC& pk) {
  RMatrixElem r(pk.dim());
  r.add_wedge(pk.index_of("K"), pk.index_of("P+"), Scalar(1));
  return r;
}

RMatrixElem r_standard(const LieAlgebraSC& pk) {
  RMatrixElem r(pk.dim());
  r.add_wedge(pk.index_of("K"), pk.index_of("P-"), Scalar(1));
  r.add_wedge(pk.index_of("K"), pk.index_of("P+"), Scalar(1));
  return r;
}

RMatrixElem r_nonstandard_w(const LieAlgebraSC& ah) {
  RMatrixElem r(ah.dim());
  r.add_wedge(ah.index_of("H"), ah.index_of("A+"), Scalar::param(1));
  return r;
}

RMatrixElem r_sb2(const LieAlgebraSC& s) {
  RMatrixElem r(s.dim());
  r.add_wedge(s.index_of("a+"), s.index_of("chi"), Scalar::param(-1));
  return r;
}

Cocommutator delta_noncoboundary(const LieAlgebraSC& pk) {
  Cocommutator d(pk.dim(), Tensor2(pk.dim()));
  d[pk.index_of("P+")].add_wedge(pk.index_of("P+"), pk.index_of("K"), Scalar(1));
  d[pk.index_of("P-")].add_wedge(pk.index_of("P-"), pk.index_of("K"), Scalar(1));
  return d;
}

namespace {

// antisymmetrized coproduct, sliced: either the w^1 part (uw) or the plain
// degree-2 part (funw), read off as a Lambda^2 tensor over the named basis
Cocommutator antisym_slice(const HopfPresentation& H, const LieAlgebraSC& g, bool w_slice) {
  const PresPtr& p = H.algebra;
  Cocommutator out(g.dim(), Tensor2(g.dim()));
  for (int x = 0; x < p->size(); ++x) {
    TensorElement t = H.coproduct.apply(NCElement::generator(p, p->gen(x).name));
    // swap legs
    TensorElement sw(t.legs());
    for (auto& [k, c] : t.terms()) sw.add({k[1], k[0]}, c);
    TensorElement anti = expand_to_degree(t - sw, 2);
    Tensor2& slot = out[g.index_of(p->gen(x).name)];
    for (auto& [k, c] : anti.terms()) {
      int da = k[0].degree(), db = k[1].degree();
      if (da != 1 || db != 1) continue;
      int a = -1, b = -1;
      for (int i = 0; i < p->size(); ++i) {
        if (k[0].word[i] == 1) a = i;
        if (k[1].word[i] == 1) b = i;
      }
      Scalar coef = w_slice ? c.slice_main(1) * Scalar::param(1) : c.slice_main(0);
      if (!coef.is_zero())
        slot.at(g.index_of(p->gen(a).name), g.index_of(p->gen(b).name)) += coef;
    }
  }
  return out;
}

}  // namespace

Cocommutator first_order_cocommutator_uw(const LieAlgebraSC& ah) {
  return antisym_slice(catalog("uw-iso11-ah"), ah, true);
}

Cocommutator first_order_cocommutator_funw(const LieAlgebraSC& s) {
  return antisym_slice(catalog("funw-iso11"), s, false);
}

}  // namespace qgf
