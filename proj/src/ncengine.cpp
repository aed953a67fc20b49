#include "qgf/ncengine.hpp"

#include <algorithm>

#include "qgf/errors.hpp"

namespace qgf {

// ---------------------------------------------------------------------------
// TowerPresentation

TowerPresentation::TowerPresentation(std::string name, RingSpec ring,
                                     std::vector<Generator> gens)
    : name_(std::move(name)), ring_(std::move(ring)), gens_(std::move(gens)) {
  int n = size();
  rules_.assign(n * (n - 1) / 2, ExpPoly(ring_));
  decl_support_.assign(rules_.size(), {});
  kinds_.assign(rules_.size(), PairKind::zero);
}

int TowerPresentation::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (gens_[i].name == name) return i;
  throw config_error("unknown generator '" + name + "' in " + name_);
}

bool TowerPresentation::has_gen(const std::string& name) const {
  for (auto& g : gens_)
    if (g.name == name) return true;
  return false;
}

void TowerPresentation::set_rule(const std::string& hi, const std::string& lo, ExpPoly c,
                                 std::vector<std::string> declared_support) {
  if (finalized_) throw config_error("presentation already finalized");
  int h = index_of(hi), l = index_of(lo);
  if (h <= l) throw config_error("rule must be [higher, lower]");
  rules_[slot(h, l)] = std::move(c);
  decl_support_[slot(h, l)] = std::move(declared_support);
}

const ExpPoly& TowerPresentation::rule(int hi, int lo) const { return rules_[slot(hi, lo)]; }

const std::vector<std::string>& TowerPresentation::declared_support(int hi, int lo) const {
  return decl_support_[slot(hi, lo)];
}

TowerPresentation::PairKind TowerPresentation::kind(int hi, int lo) const {
  return kinds_[slot(hi, lo)];
}

bool TowerPresentation::commute(int i, int j) const {
  if (i == j) return true;
  int h = std::max(i, j), l = std::min(i, j);
  return rules_[slot(h, l)].is_zero();
}

namespace {

bool is_linear_shaped(const ExpPoly& c) {
  for (auto& [k, s] : c.terms()) {
    const auto& [m, L] = k;
    if (!L.is_zero()) return false;
    if (m.size() != 1 || m.begin()->second != 1) return false;
  }
  return true;
}

}  // namespace

void TowerPresentation::finalize() {
  // first pass: local classification
  for (int h = 0; h < size(); ++h)
    for (int l = 0; l < h; ++l) {
      const ExpPoly& c = rules_[slot(h, l)];
      PairKind k;
      if (c.is_zero()) {
        k = PairKind::zero;
      } else {
        auto supp = c.support();
        bool upper = supp.size() == 1 && supp[0] == gens_[h].name;
        bool lower = true;
        for (auto& v : supp) {
          if (!has_gen(v)) { lower = false; upper = false; break; }
          int vi = index_of(v);
          if (vi >= h || !commute(vi, l)) lower = false;
        }
        if (upper)
          k = PairKind::upper_fn;
        else if (lower)
          k = PairKind::lower_fn;
        else if (is_linear_shaped(c))
          k = PairKind::linear;
        else
          k = PairKind::unsupported;
      }
      kinds_[slot(h, l)] = k;
    }
  // second pass: the lower-rule cluster of each generator must commute
  // pairwise, otherwise the derivation formula is not available
  for (int h = 0; h < size(); ++h) {
    std::vector<int> cluster;
    for (int l = 0; l < h; ++l) {
      if (kinds_[slot(h, l)] != PairKind::lower_fn) continue;
      cluster.push_back(l);
      for (auto& v : rules_[slot(h, l)].support()) cluster.push_back(index_of(v));
    }
    bool ok = true;
    for (int a : cluster)
      for (int b : cluster)
        if (!commute(a, b)) ok = false;
    if (!ok)
      for (int l = 0; l < h; ++l)
        if (kinds_[slot(h, l)] == PairKind::lower_fn)
          kinds_[slot(h, l)] = is_linear_shaped(rules_[slot(h, l)]) ? PairKind::linear
                                                                    : PairKind::unsupported;
  }
  finalized_ = true;
}

PresPtr make_presentation(std::string name, RingSpec ring, std::vector<Generator> gens,
                          const std::vector<std::tuple<std::string, std::string, ExpPoly>>& rules) {
  auto p = std::make_shared<TowerPresentation>(std::move(name), std::move(ring), std::move(gens));
  for (auto& [hi, lo, c] : rules) p->set_rule(hi, lo, c);
  p->finalize();
  return p;
}

// ---------------------------------------------------------------------------
// NCElement basics

NCElement NCElement::one(PresPtr p) {
  NCElement x(std::move(p));
  x.add(NCKey{{}, std::vector<int>(x.pres_->size(), 0)}, Scalar(1));
  return x;
}

NCElement NCElement::generator(PresPtr p, const std::string& name) {
  NCElement x(std::move(p));
  std::vector<int> w(x.pres_->size(), 0);
  w[x.pres_->index_of(name)] = 1;
  x.add(NCKey{{}, std::move(w)}, Scalar(1));
  return x;
}

NCElement NCElement::word(PresPtr p, const std::vector<int>& exps) {
  NCElement x(std::move(p));
  std::vector<int> w = exps;
  w.resize(x.pres_->size(), 0);
  x.add(NCKey{{}, std::move(w)}, Scalar(1));
  return x;
}

NCElement NCElement::exp_of(PresPtr p, const LinForm& L) {
  NCElement x(std::move(p));
  x.add(NCKey{L, std::vector<int>(x.pres_->size(), 0)}, Scalar(1));
  return x;
}

NCElement NCElement::monomial(PresPtr p, const Scalar& c, const LinForm& L,
                              const std::vector<int>& word) {
  NCElement x(std::move(p));
  std::vector<int> w = word;
  w.resize(x.pres_->size(), 0);
  x.add(NCKey{L, std::move(w)}, c);
  return x;
}

NCElement NCElement::from_expoly(PresPtr p, const ExpPoly& e) {
  NCElement x(std::move(p));
  const auto& P = *x.pres_;
  for (auto& [k, c] : e.terms()) {
    const auto& [m, L] = k;
    std::vector<int> idx;
    for (auto& [v, d] : m) idx.push_back(P.index_of(v));
    for (auto& [v, cf] : L.terms()) idx.push_back(P.index_of(v));
    for (int a : idx)
      for (int b : idx)
        if (!P.commute(a, b))
          throw config_error("from_expoly term support is not a commuting cluster");
    std::vector<int> w(P.size(), 0);
    for (auto& [v, d] : m) w[P.index_of(v)] = d;
    x.add(NCKey{L, std::move(w)}, c);
  }
  return x;
}

void NCElement::add(const NCKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  for (int e : k.word)
    if (e > pres_->exponent_cap())
      throw unsupported_error("word exponent exceeds cap in " + pres_->name());
  // dual-unit ring: j-proportional exponent parts reduce to polynomials,
  // which must be re-ordered through the engine
  if (pres_->ring().unit_square == 0) {
    LinForm Lre;
    std::vector<std::pair<std::string, Scalar>> Lim;
    for (auto& [v, cf] : k.exp.terms()) {
      Scalar re = cf.real_part(), im = cf.unit_part();
      if (!re.is_zero()) Lre.add(v, re);
      if (!im.is_zero()) Lim.emplace_back(v, im);
    }
    if (!Lim.empty()) {
      NCElement head(pres_);
      head.add(NCKey{{}, std::vector<int>(pres_->size(), 0)}, Scalar(1));
      Scalar j = Scalar::unit(0);
      for (auto& [v, im] : Lim) {
        NCElement g = NCElement::generator(pres_, v);
        head += (j * Scalar(im)) * g;
      }
      NCElement tail = NCElement::monomial(pres_, c, Lre, k.word);
      *this += head * tail;
      return;
    }
  }
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCElement NCElement::operator-() const {
  NCElement r(pres_);
  for (auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

NCElement operator+(const NCElement& a, const NCElement& b) {
  if (!a.pres_) return b;
  if (!b.pres_) return a;
  if (a.pres_ != b.pres_) throw config_error("elements of different presentations");
  NCElement r = a;
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

NCElement operator-(const NCElement& a, const NCElement& b) { return a + (-b); }

NCElement operator*(const Scalar& s, const NCElement& a) {
  NCElement r(a.pres_);
  if (s.is_zero()) return r;
  for (auto& [k, c] : a.terms_) {
    Scalar v = s * c;
    if (!v.is_zero()) r.terms_.emplace(k, v);
  }
  return r;
}

int NCElement::max_word_degree() const {
  int d = 0;
  for (auto& [k, c] : terms_) d = std::max(d, k.degree());
  return d;
}

// ---------------------------------------------------------------------------
// product machinery

namespace {

using Kind = TowerPresentation::PairKind;

struct Mono {
  NCKey key;
  Scalar c;
};

NCElement single(const PresPtr& p, NCKey k, Scalar c) {
  NCElement x(p);
  x.add(k, c);
  return x;
}

// derivation ad_{g_h} on the commutative cluster below h
ExpPoly delta_lower(const TowerPresentation& P, int h, const ExpPoly& f) {
  ExpPoly out(P.ring());
  for (int l = 0; l < h; ++l) {
    if (P.kind(h, l) != Kind::lower_fn) continue;
    ExpPoly df = f.derivative(P.gen(l).name);
    if (!df.is_zero()) out += P.rule(h, l) * df;
  }
  return out;
}

// derivation f(g_t) -> [f, g_k] = rule(t,k) * df/dg_t  (upper pair t > k)
ExpPoly delta_upper(const TowerPresentation& P, int t, int k, const ExpPoly& f) {
  ExpPoly df = f.derivative(P.gen(t).name);
  if (df.is_zero()) return ExpPoly(P.ring());
  return P.rule(t, k) * df;
}

NCElement swap_pow_pow(const PresPtr& pp, int k, int e, int l, int c);
NCElement swap_pow_exp(const PresPtr& pp, int k, int e, const LinForm& L);
NCElement append_exp_elem(const NCElement& X, const LinForm& L);
NCElement append_genpow_elem(const NCElement& X, int lvl, int c);

NCElement append_word_elem(const NCElement& X, const std::vector<int>& W) {
  NCElement r = X;
  for (int lvl = 0; lvl < static_cast<int>(W.size()); ++lvl)
    if (W[lvl] > 0) r = append_genpow_elem(r, lvl, W[lvl]);
  return r;
}

int top_level(const std::vector<int>& w, int above = -1) {
  for (int i = static_cast<int>(w.size()) - 1; i > above; --i)
    if (w[i] > 0) return i;
  return -1;
}

// (e^{L0} W) * e^{L}
NCElement append_exp_mono(const PresPtr& pp, const NCKey& M, const LinForm& L) {
  const TowerPresentation& P = *pp;
  if (L.is_zero()) return single(pp, M, Scalar(1));
  bool clean = true;
  for (int i = 0; i < P.size() && clean; ++i) {
    if (M.word[i] == 0) continue;
    for (auto& [v, cf] : L.terms())
      if (!P.commute(P.index_of(v), i)) { clean = false; break; }
  }
  if (clean) {
    NCKey k = M;
    k.exp = k.exp + L;
    return single(pp, k, Scalar(1));
  }
  int k = top_level(M.word);
  NCKey rest = M;
  rest.word[k] = 0;
  NCElement out(pp);
  NCElement S = swap_pow_exp(pp, k, M.word[k], L);
  for (auto& [ks, cs] : S.terms()) {
    NCElement T = append_exp_mono(pp, rest, ks.exp);
    for (auto& [kt, ct] : T.terms()) {
      NCElement U = append_word_elem(single(pp, kt, Scalar(1)), ks.word);
      out += (cs * ct) * U;
    }
  }
  return out;
}

// (e^{L0} W) * g_lvl^c
NCElement append_genpow_mono(const PresPtr& pp, const NCKey& M, int lvl, int c) {
  if (c == 0) return single(pp, M, Scalar(1));
  int k = top_level(M.word, lvl);
  if (k == -1) {
    NCKey r = M;
    r.word[lvl] += c;
    return single(pp, r, Scalar(1));
  }
  NCKey rest = M;
  rest.word[k] = 0;
  NCElement out(pp);
  NCElement S = swap_pow_pow(pp, k, M.word[k], lvl, c);
  for (auto& [ks, cs] : S.terms()) {
    NCElement T = append_exp_mono(pp, rest, ks.exp);
    for (auto& [kt, ct] : T.terms()) {
      NCElement U = append_word_elem(single(pp, kt, Scalar(1)), ks.word);
      out += (cs * ct) * U;
    }
  }
  return out;
}

NCElement append_exp_elem(const NCElement& X, const LinForm& L) {
  NCElement out(X.pres());
  for (auto& [k, c] : X.terms()) out += c * append_exp_mono(X.pres(), k, L);
  return out;
}

NCElement append_genpow_elem(const NCElement& X, int lvl, int c) {
  NCElement out(X.pres());
  for (auto& [k, kc] : X.terms()) out += kc * append_genpow_mono(X.pres(), k, lvl, c);
  return out;
}

// g_k^e * g_l^c with k > l
NCElement swap_pow_pow(const PresPtr& pp, int k, int e, int l, int c) {
  const TowerPresentation& P = *pp;
  NCElement out(pp);
  const int n = P.size();
  switch (P.kind(k, l)) {
    case Kind::zero: {
      std::vector<int> w(n, 0);
      w[l] = c;
      w[k] = e;
      out.add(NCKey{{}, std::move(w)}, Scalar(1));
      return out;
    }
    case Kind::lower_fn: {
      // g_k^e f = sum_m C(e,m) delta^m(f) g_k^{e-m}
      ExpPoly f = ExpPoly::variable(P.gen(l).name, P.ring()).pow(c);
      for (int m = 0; m <= e; ++m) {
        if (m > 0) f = delta_lower(P, k, f);
        if (f.is_zero()) break;
        Rational bin = Rational::binom(e, m);
        for (auto& [kf, cf] : f.terms()) {
          std::vector<int> w(n, 0);
          for (auto& [v, d] : kf.first) w[P.index_of(v)] = d;
          w[k] += e - m;
          out.add(NCKey{kf.second, std::move(w)}, Scalar(bin) * cf);
        }
      }
      return out;
    }
    case Kind::upper_fn: {
      // f(g_k) g_l^c = sum_m C(c,m) g_l^{c-m} T^m(f)
      ExpPoly f = ExpPoly::variable(P.gen(k).name, P.ring()).pow(e);
      for (int m = 0; m <= c; ++m) {
        if (m > 0) f = delta_upper(P, k, l, f);
        if (f.is_zero()) break;
        Rational bin = Rational::binom(c, m);
        for (auto& [kf, cf] : f.terms()) {
          int d = 0;
          for (auto& [v, dd] : kf.first) {
            if (v != P.gen(k).name)
              throw unsupported_error("upper rule leaking outside its generator");
            d = dd;
          }
          const LinForm& Lf = kf.second;
          Scalar coef = Scalar(bin) * cf;
          if (Lf.is_zero() || c - m == 0) {
            std::vector<int> w(n, 0);
            w[l] = c - m;
            w[k] = d;
            out.add(NCKey{Lf, std::move(w)}, coef);
          } else {
            NCElement S = swap_pow_exp(pp, l, c - m, Lf);
            for (auto& [ks, cs] : S.terms()) {
              NCKey key = ks;
              key.word[k] += d;
              out.add(key, coef * cs);
            }
          }
        }
      }
      return out;
    }
    case Kind::linear: {
      // peel one power: g_k^e g_l^c = g_k^{e-1}(g_l g_k + rule) g_l^{c-1}
      std::vector<int> wk(n, 0);
      wk[k] = e - 1;
      NCElement head = NCElement::word(pp, wk);
      NCElement gl = NCElement::generator(pp, P.gen(l).name);
      NCElement gk = NCElement::generator(pp, P.gen(k).name);
      NCElement x = head * gl;
      x = x * gk;
      NCElement y = head * NCElement::from_expoly(pp, P.rule(k, l));
      NCElement sum = x + y;
      if (c > 1) {
        std::vector<int> wl(n, 0);
        wl[l] = c - 1;
        sum = sum * NCElement::word(pp, wl);
      }
      return sum;
    }
    default:
      throw unsupported_error("unsupported generator pair in " + P.name() + ": [" +
                              P.gen(k).name + "," + P.gen(l).name + "]");
  }
}

// g_k^e * e^{L}
NCElement swap_pow_exp(const PresPtr& pp, int k, int e, const LinForm& L) {
  const TowerPresentation& P = *pp;
  const int n = P.size();
  if (e == 0) return single(pp, NCKey{L, std::vector<int>(n, 0)}, Scalar(1));
  // first interacting exponent variable
  std::string var;
  Scalar mu;
  for (auto& [v, cf] : L.terms())
    if (!P.commute(P.index_of(v), k)) {
      var = v;
      mu = cf;
      break;
    }
  if (var.empty()) {
    std::vector<int> w(n, 0);
    w[k] = e;
    return single(pp, NCKey{L, std::move(w)}, Scalar(1));
  }
  LinForm rest = L;
  rest.add(var, -mu);
  int t = P.index_of(var);
  NCElement out(pp);
  if (t < k && P.kind(k, t) == Kind::lower_fn) {
    ExpPoly f = ExpPoly::exponential(LinForm(var, mu), P.ring());
    for (int m = 0; m <= e; ++m) {
      if (m > 0) f = delta_lower(P, k, f);
      if (f.is_zero()) break;
      Rational bin = Rational::binom(e, m);
      for (auto& [kf, cf] : f.terms()) {
        std::vector<int> w(n, 0);
        for (auto& [v, d] : kf.first) w[P.index_of(v)] = d;
        Scalar coef = Scalar(bin) * cf;
        if (rest.is_zero()) {
          w[k] += e - m;
          out.add(NCKey{kf.second, std::move(w)}, coef);
        } else {
          NCElement S = swap_pow_exp(pp, k, e - m, rest);
          for (auto& [ks, cs] : S.terms()) {
            NCKey key = ks;
            for (int i = 0; i < n; ++i) key.word[i] += w[i];
            key.exp = key.exp + kf.second;
            out.add(key, coef * cs);
          }
        }
      }
    }
    return out;
  }
  if (t > k && P.kind(t, k) == Kind::upper_fn) {
    // g_k^e e^{mu t} = sum_m C(e,m) (-1)^m T^m(e^{mu t}) g_k^{e-m}
    ExpPoly f = ExpPoly::exponential(LinForm(var, mu), P.ring());
    int sign = 1;
    for (int m = 0; m <= e; ++m) {
      if (m > 0) {
        f = delta_upper(P, t, k, f);
        sign = -sign;
      }
      if (f.is_zero()) break;
      Rational bin = Rational::binom(e, m);
      for (auto& [kf, cf] : f.terms()) {
        int d = 0;
        for (auto& [v, dd] : kf.first) {
          if (v != P.gen(t).name)
            throw unsupported_error("upper rule leaking outside its generator");
          d = dd;
        }
        Scalar coef = Scalar(bin * Rational(sign)) * cf;
        NCElement Z(pp);
        if (d == 0 || e - m == 0) {
          std::vector<int> w(n, 0);
          w[t] = d;
          w[k] = e - m;
          Z.add(NCKey{{}, std::move(w)}, Scalar(1));
        } else {
          Z = swap_pow_pow(pp, t, d, k, e - m);
        }
        if (!rest.is_zero()) Z = append_exp_elem(Z, rest);
        for (auto& [kz, cz] : Z.terms()) {
          NCKey key = kz;
          key.exp = key.exp + kf.second;
          out.add(key, coef * cz);
        }
      }
    }
    return out;
  }
  throw unsupported_error("cannot move " + P.gen(k).name + " past exp(" + var + ") in " +
                          P.name());
}

}  // namespace

NCElement operator*(const NCElement& a, const NCElement& b) {
  if (a.pres() != b.pres()) throw config_error("product across presentations");
  NCElement out(a.pres());
  for (auto& [kb, cb] : b.terms()) {
    for (auto& [ka, ca] : a.terms()) {
      NCElement r = append_exp_mono(a.pres(), ka, kb.exp);
      r = append_word_elem(r, kb.word);
      out += (ca * cb) * r;
    }
  }
  return out;
}

NCElement NCElement::pow(int n) const {
  NCElement r = one(pres_);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

NCElement commutator(const NCElement& a, const NCElement& b) { return a * b - b * a; }

std::string NCElement::str() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const NCKey, Scalar>*> order;
  for (auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* x, auto* y) {
    int dx = x->first.degree(), dy = y->first.degree();
    if (dx != dy) return dx < dy;
    return x->first < y->first;
  });
  const RingSpec& ring = pres_->ring();
  std::string out;
  for (auto* t : order) {
    std::string cs = t->second.str(ring);
    std::string piece = cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs;
    std::string body;
    if (!t->first.exp.is_zero()) body = "e^(" + t->first.exp.str(ring) + ")";
    for (int i = 0; i < pres_->size(); ++i) {
      int e = t->first.word[i];
      if (e == 0) continue;
      body += body.empty() ? "" : "*";
      body += pres_->gen(i).name;
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty())
      body = piece;
    else if (piece == "1")
      ;
    else if (piece == "-1")
      body = "-" + body;
    else
      body = piece + "*" + body;
    out += out.empty() ? body : (body[0] == '-' ? " - " + body.substr(1) : " + " + body);
  }
  return out;
}

// ---------------------------------------------------------------------------
// expansion and limits

NCElement expand_to_degree(const NCElement& x, int D) {
  const PresPtr& pp = x.pres();
  NCElement out(pp);
  // re-ordering the Taylor words can fire rules that bring exponentials
  // back, so iterate until everything is polynomial
  std::vector<std::pair<NCKey, Scalar>> work(x.terms().begin(), x.terms().end());
  long guard = 0;
  while (!work.empty()) {
    if (++guard > 200000) throw unsupported_error("degree expansion did not terminate");
    auto [k, c] = work.back();
    work.pop_back();
    if (k.degree() > D) continue;
    if (k.exp.is_zero()) {
      out.add(k, c);
      continue;
    }
    // Taylor factors may lose word degree while re-ordering, but never drop
    // below the expansion order, so truncating at order D is exact.
    ExpPoly lp = linform_to_poly(k.exp, pp->ring());
    ExpPoly ex = ExpPoly::constant(Scalar(1), pp->ring());
    ExpPoly p = ExpPoly::constant(Scalar(1), pp->ring());
    Rational fact(1);
    for (int nn = 1; nn <= D; ++nn) {
      p *= lp;
      fact *= Rational(nn);
      ex += Scalar(Rational(1) / fact) * p;
    }
    for (auto& [ke, ce] : ex.terms()) {
      std::vector<int> w(pp->size(), 0);
      for (auto& [v, d] : ke.first) w[pp->index_of(v)] = d;
      NCElement piece = NCElement::word(pp, w) * NCElement::monomial(pp, Scalar(1), {}, k.word);
      for (auto& [kp, cp] : piece.terms()) {
        if (kp.degree() > D) continue;
        Scalar cc = c * ce * cp;
        if (kp.exp.is_zero())
          out.add(kp, cc);
        else
          work.emplace_back(kp, cc);
      }
    }
  }
  return out;
}

namespace {

// Expands parameter-carrying exponentials of one monomial far enough for a
// param -> 0 limit; returns unsliced terms. `extra` widens the expansion
// depth beyond what the local coefficient requires (tensor legs share one
// deficit); orders past the reachable slice only produce positive powers.
void limit_collect(const PresPtr& pp, const Scalar& c, const NCKey& key, bool aux, int extra,
                   int depth, std::map<NCKey, Scalar>& out) {
  LinForm L0, Lplus;
  for (auto& [v, cf] : key.exp.terms()) {
    Scalar stay, go;
    for (int p = -64; p <= 64; ++p) {
      Scalar s = aux ? cf.slice_aux(p) : cf.slice_main(p);
      if (s.is_zero()) continue;
      Scalar piece = s * (aux ? Scalar::aux(p) : Scalar::param(p));
      if (p == 0)
        stay += piece;
      else if (p > 0)
        go += piece;
      else
        throw divergent_limit_error(NCElement::monomial(pp, c, key.exp, key.word).str());
    }
    if (!stay.is_zero()) L0.add(v, stay);
    if (!go.is_zero()) Lplus.add(v, go);
  }
  if (Lplus.is_zero()) {
    NCKey k2{L0, key.word};
    auto it = out.find(k2);
    if (it == out.end())
      out.emplace(std::move(k2), c);
    else
      it->second += c;
    return;
  }
  if (depth <= 0) throw unsupported_error("parameter limit did not stabilize");
  int kmax = std::max(0, -(aux ? c.min_pow_aux() : c.min_pow_main()) + extra);
  ExpPoly lp = linform_to_poly(Lplus, pp->ring());
  ExpPoly p = ExpPoly::constant(Scalar(1), pp->ring());
  Rational fact(1);
  for (int nn = 0; nn <= kmax; ++nn) {
    if (nn > 0) {
      p *= lp;
      fact *= Rational(nn);
    }
    for (auto& [ke, ce] : p.terms()) {
      std::vector<int> w(pp->size(), 0);
      for (auto& [v, d] : ke.first) w[pp->index_of(v)] = d;
      NCElement piece =
          NCElement::word(pp, w) * NCElement::monomial(pp, Scalar(1), L0, key.word);
      Scalar scale = c * ce * Scalar(Rational(1) / fact);
      for (auto& [kp, cp] : piece.terms())
        limit_collect(pp, scale * cp, kp, aux, extra, depth - 1, out);
    }
  }
}

}  // namespace

NCElement nc_limit_param(const NCElement& x, bool aux, int order) {
  const PresPtr& pp = x.pres();
  std::map<NCKey, Scalar> raw;
  for (auto& [k, c] : x.terms()) limit_collect(pp, c, k, aux, order, 64, raw);
  NCElement out(pp);
  for (auto& [k, c] : raw) {
    if (aux ? c.has_negative_aux() : c.has_negative_main())
      throw divergent_limit_error(NCElement::monomial(pp, c, k.exp, k.word).str());
    Scalar s = aux ? c.slice_aux(0) : c.slice_main(0);
    if (!s.is_zero()) out.add(k, s);
  }
  return out;
}

NCElement nc_rescale_vars_by_aux(const NCElement& x, const std::map<std::string, int>& pows) {
  const PresPtr& pp = x.pres();
  NCElement out(pp);
  for (auto& [k, c] : x.terms()) {
    Scalar c2 = c;
    for (int i = 0; i < pp->size(); ++i) {
      auto it = pows.find(pp->gen(i).name);
      if (it != pows.end() && k.word[i] > 0 && it->second != 0)
        c2 *= Scalar::aux(it->second * k.word[i]);
    }
    LinForm L2;
    for (auto& [v, cf] : k.exp.terms()) {
      auto it = pows.find(v);
      L2.add(v, it == pows.end() ? cf : cf * Scalar::aux(it->second));
    }
    out.add(NCKey{L2, k.word}, c2);
  }
  return out;
}

NCElement nc_rescale_param_by_aux(const NCElement& x, int kk) {
  NCElement out(x.pres());
  for (auto& [k, c] : x.terms()) {
    LinForm L2;
    for (auto& [v, cf] : k.exp.terms()) L2.add(v, cf.rescale_param_by_aux(kk));
    out.add(NCKey{L2, k.word}, c.rescale_param_by_aux(kk));
  }
  return out;
}

NCElement nc_retarget(const NCElement& x, const PresPtr& target) {
  NCElement out(target);
  const PresPtr& src = x.pres();
  for (auto& [k, c] : x.terms()) {
    std::vector<int> w(target->size(), 0);
    for (int i = 0; i < src->size(); ++i)
      if (k.word[i] > 0) w[target->index_of(src->gen(i).name)] = k.word[i];
    out.add(NCKey{k.exp, std::move(w)}, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// validation

std::string ValidationReport::str() const {
  if (issues.empty()) return "ok";
  std::string s;
  for (auto& i : issues) s += (s.empty() ? "" : "; ") + i;
  return s;
}

ValidationReport validate_presentation(const PresPtr& p) {
  ValidationReport rep;
  const TowerPresentation& P = *p;
  // exponentials only of mutually commuting func generators
  for (int h = 0; h < P.size(); ++h)
    for (int l = 0; l < h; ++l) {
      const ExpPoly& c = P.rule(h, l);
      if (c.is_zero()) continue;
      for (auto& [k, s] : c.terms())
        for (auto& [v, cf] : k.second.terms()) {
          if (!P.has_gen(v) || !P.gen(P.index_of(v)).is_func)
            rep.issues.push_back("rule [" + P.gen(h).name + "," + P.gen(l).name +
                                 "] has an exponential of non-func '" + v + "'");
        }
      for (auto& v : c.support())
        if (!P.has_gen(v))
          rep.issues.push_back("rule [" + P.gen(h).name + "," + P.gen(l).name +
                               "] references unknown '" + v + "'");
    }
  for (int i = 0; i < P.size(); ++i)
    for (int j = 0; j < i; ++j)
      if (P.gen(i).is_func && P.gen(j).is_func && !P.commute(i, j))
        rep.issues.push_back("func generators " + P.gen(i).name + "," + P.gen(j).name +
                             " do not commute");
  bool usable = rep.ok();
  for (int h = 0; h < P.size(); ++h)
    for (int l = 0; l < h; ++l) {
      const ExpPoly& c = P.rule(h, l);
      if (c.is_zero()) continue;
      auto kind = P.kind(h, l);
      if (kind == TowerPresentation::PairKind::unsupported) {
        rep.issues.push_back("pair [" + P.gen(h).name + "," + P.gen(l).name +
                             "] fits no supported rule class");
        usable = false;
      }
      const auto& decl = P.declared_support(h, l);
      if (!decl.empty()) {
        auto actual = c.support();
        std::vector<std::string> want = decl;
        std::sort(want.begin(), want.end());
        if (actual != want)
          rep.issues.push_back("rule [" + P.gen(h).name + "," + P.gen(l).name +
                               "] support mismatch, declared vs actual: " + c.str());
      }
    }
  if (!usable) return rep;
  // commutant condition per rule class, and Jacobi on all triples, by
  // engine computation
  for (int h = 0; h < P.size(); ++h)
    for (int l = 0; l < h; ++l) {
      const ExpPoly& c = P.rule(h, l);
      if (c.is_zero()) continue;
      auto kind = P.kind(h, l);
      NCElement ce = NCElement::from_expoly(p, c);
      if (kind == TowerPresentation::PairKind::lower_fn) {
        NCElement res = commutator(ce, NCElement::generator(p, P.gen(l).name));
        if (!res.is_zero())
          rep.issues.push_back("[rule,g] != 0 for [" + P.gen(h).name + "," + P.gen(l).name +
                               "]: " + res.str());
      } else if (kind == TowerPresentation::PairKind::upper_fn) {
        NCElement res = commutator(ce, NCElement::generator(p, P.gen(h).name));
        if (!res.is_zero())
          rep.issues.push_back("[rule,g] != 0 for [" + P.gen(h).name + "," + P.gen(l).name +
                               "]: " + res.str());
      }
    }
  for (int i = 0; i < P.size(); ++i)
    for (int j = i + 1; j < P.size(); ++j)
      for (int k = j + 1; k < P.size(); ++k) {
        NCElement gi = NCElement::generator(p, P.gen(i).name);
        NCElement gj = NCElement::generator(p, P.gen(j).name);
        NCElement gk = NCElement::generator(p, P.gen(k).name);
        NCElement jac = commutator(gk, commutator(gj, gi)) +
                        commutator(gj, commutator(gi, gk)) +
                        commutator(gi, commutator(gk, gj));
        if (!jac.is_zero())
          rep.issues.push_back("Jacobi fails on (" + P.gen(i).name + "," + P.gen(j).name + "," +
                               P.gen(k).name + "): " + jac.str());
      }
  return rep;
}

// ---------------------------------------------------------------------------
// TensorElement

TensorElement TensorElement::one(std::vector<PresPtr> legs) {
  TensorElement t(std::move(legs));
  std::vector<NCKey> k;
  for (auto& p : t.legs_) k.push_back(NCKey{{}, std::vector<int>(p->size(), 0)});
  t.add(k, Scalar(1));
  return t;
}

TensorElement TensorElement::outer(const std::vector<NCElement>& factors) {
  std::vector<PresPtr> legs;
  for (auto& f : factors) legs.push_back(f.pres());
  TensorElement t(std::move(legs));
  std::vector<std::vector<NCKey>> keys{{}};
  std::vector<Scalar> scals{Scalar(1)};
  for (auto& f : factors) {
    std::vector<std::vector<NCKey>> nk;
    std::vector<Scalar> ns;
    for (size_t i = 0; i < keys.size(); ++i)
      for (auto& [k, c] : f.terms()) {
        auto kk = keys[i];
        kk.push_back(k);
        nk.push_back(std::move(kk));
        ns.push_back(scals[i] * c);
      }
    keys = std::move(nk);
    scals = std::move(ns);
  }
  for (size_t i = 0; i < keys.size(); ++i) t.add(keys[i], scals[i]);
  return t;
}

void TensorElement::add(const std::vector<NCKey>& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement TensorElement::operator-() const {
  TensorElement r(legs_);
  for (auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
  if (!a.legs_.empty() && !b.legs_.empty() && a.legs_ != b.legs_)
    throw config_error("tensor legs mismatch");
  TensorElement r = a.legs_.empty() ? b : a;
  const TensorElement& other = a.legs_.empty() ? a : b;
  for (auto& [k, c] : other.terms_) r.add(k, c);
  return r;
}

TensorElement operator-(const TensorElement& a, const TensorElement& b) { return a + (-b); }

TensorElement operator*(const Scalar& s, const TensorElement& a) {
  TensorElement r(a.legs_);
  if (s.is_zero()) return r;
  for (auto& [k, c] : a.terms_) {
    Scalar v = s * c;
    if (!v.is_zero()) r.terms_.emplace(k, v);
  }
  return r;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  if (a.legs_ != b.legs_) throw config_error("tensor legs mismatch");
  TensorElement out(a.legs_);
  const int nl = a.leg_count();
  for (auto& [ka, ca] : a.terms_)
    for (auto& [kb, cb] : b.terms_) {
      // legwise products, then distribute
      std::vector<NCElement> legprod;
      legprod.reserve(nl);
      bool zero = false;
      for (int i = 0; i < nl && !zero; ++i) {
        NCElement x = single(a.legs_[i], ka[i], Scalar(1));
        NCElement y = single(a.legs_[i], kb[i], Scalar(1));
        legprod.push_back(x * y);
        zero = legprod.back().is_zero();
      }
      if (zero) continue;
      std::vector<std::vector<NCKey>> keys{{}};
      std::vector<Scalar> scals{ca * cb};
      for (int i = 0; i < nl; ++i) {
        std::vector<std::vector<NCKey>> nk;
        std::vector<Scalar> ns;
        for (size_t q = 0; q < keys.size(); ++q)
          for (auto& [k, c] : legprod[i].terms()) {
            auto kk = keys[q];
            kk.push_back(k);
            nk.push_back(std::move(kk));
            ns.push_back(scals[q] * c);
          }
        keys = std::move(nk);
        scals = std::move(ns);
      }
      for (size_t q = 0; q < keys.size(); ++q) out.add(keys[q], scals[q]);
    }
  return out;
}

TensorElement TensorElement::pow(int n) const {
  TensorElement r = one(legs_);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

NCElement TensorElement::fold_multiply() const {
  if (legs_.size() != 2 || legs_[0] != legs_[1])
    throw config_error("fold needs two legs over one algebra");
  NCElement out(legs_[0]);
  for (auto& [k, c] : terms_) {
    NCElement x = single(legs_[0], k[0], Scalar(1));
    NCElement y = single(legs_[0], k[1], Scalar(1));
    out += c * (x * y);
  }
  return out;
}

std::string TensorElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& [k, c] : terms_) {
    std::string piece;
    for (size_t i = 0; i < k.size(); ++i) {
      NCElement m = single(legs_[i], k[i], Scalar(1));
      piece += (i ? " (x) " : "") + m.str();
    }
    std::string cs = c.str(legs_.empty() ? RingSpec{} : legs_[0]->ring());
    out += (out.empty() ? "" : " + ") + ("[" + cs + "] " + piece);
  }
  return out;
}

TensorElement expand_to_degree(const TensorElement& t, int D) {
  TensorElement out(t.legs());
  for (auto& [k, c] : t.terms()) {
    std::vector<NCElement> exp;
    bool zero = false;
    for (int i = 0; i < t.leg_count() && !zero; ++i) {
      exp.push_back(expand_to_degree(single(t.leg(i), k[i], Scalar(1)), D));
      zero = exp.back().is_zero();
    }
    if (zero) continue;
    TensorElement piece = TensorElement::outer(exp);
    out += c * piece;
  }
  return out;
}

TensorElement tensor_limit_param(const TensorElement& t, bool aux, int order) {
  // expand all legs of all terms without slicing, accumulate raw so that
  // cancellations across terms happen first, then slice the total once
  std::map<std::vector<NCKey>, Scalar> raw;
  for (auto& [k, c] : t.terms()) {
    // the whole term's deficit bounds every leg's useful expansion depth
    int extra = std::max(order, -(aux ? c.min_pow_aux() : c.min_pow_main()));
    std::vector<std::map<NCKey, Scalar>> legged(t.leg_count());
    for (int i = 0; i < t.leg_count(); ++i)
      limit_collect(t.leg(i), Scalar(1), k[i], aux, extra, 64, legged[i]);
    std::vector<std::vector<NCKey>> keys{{}};
    std::vector<Scalar> scals{c};
    for (int i = 0; i < t.leg_count(); ++i) {
      std::vector<std::vector<NCKey>> nk;
      std::vector<Scalar> ns;
      for (size_t q = 0; q < keys.size(); ++q)
        for (auto& [kk, cc] : legged[i]) {
          auto key = keys[q];
          key.push_back(kk);
          nk.push_back(std::move(key));
          ns.push_back(scals[q] * cc);
        }
      keys = std::move(nk);
      scals = std::move(ns);
    }
    for (size_t q = 0; q < keys.size(); ++q) {
      auto it = raw.find(keys[q]);
      if (it == raw.end())
        raw.emplace(keys[q], scals[q]);
      else
        it->second += scals[q];
    }
  }
  TensorElement out(t.legs());
  for (auto& [k, s] : raw) {
    if (aux ? s.has_negative_aux() : s.has_negative_main())
      throw divergent_limit_error("tensor term with surviving negative power");
    Scalar sl = aux ? s.slice_aux(0) : s.slice_main(0);
    if (!sl.is_zero()) out.add(k, sl);
  }
  return out;
}

TensorElement tensor_rescale_vars_by_aux(const TensorElement& t,
                                         const std::map<std::string, int>& pows) {
  TensorElement out(t.legs());
  for (auto& [k, c] : t.terms()) {
    Scalar c2 = c;
    std::vector<NCKey> k2 = k;
    for (int i = 0; i < t.leg_count(); ++i) {
      const auto& P = *t.leg(i);
      for (int g = 0; g < P.size(); ++g) {
        auto it = pows.find(P.gen(g).name);
        if (it != pows.end() && k[i].word[g] > 0 && it->second != 0)
          c2 *= Scalar::aux(it->second * k[i].word[g]);
      }
      LinForm L2;
      for (auto& [v, cf] : k[i].exp.terms()) {
        auto it = pows.find(v);
        L2.add(v, it == pows.end() ? cf : cf * Scalar::aux(it->second));
      }
      k2[i].exp = L2;
    }
    out.add(k2, c2);
  }
  return out;
}

TensorElement tensor_rescale_param_by_aux(const TensorElement& t, int kk) {
  TensorElement out(t.legs());
  for (auto& [k, c] : t.terms()) {
    std::vector<NCKey> k2 = k;
    for (auto& leg : k2) {
      LinForm L2;
      for (auto& [v, cf] : leg.exp.terms()) L2.add(v, cf.rescale_param_by_aux(kk));
      leg.exp = L2;
    }
    out.add(k2, c.rescale_param_by_aux(kk));
  }
  return out;
}

TensorElement tensor_retarget(const TensorElement& t, const std::vector<PresPtr>& legs) {
  TensorElement out(legs);
  for (auto& [k, c] : t.terms()) {
    std::vector<NCKey> k2;
    for (int i = 0; i < t.leg_count(); ++i) {
      std::vector<int> w(legs[i]->size(), 0);
      for (int g = 0; g < t.leg(i)->size(); ++g)
        if (k[i].word[g] > 0) w[legs[i]->index_of(t.leg(i)->gen(g).name)] = k[i].word[g];
      k2.push_back(NCKey{k[i].exp, std::move(w)});
    }
    out.add(k2, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Morphism

Morphism::Morphism(PresPtr source, std::vector<PresPtr> target_legs, bool anti)
    : source_(std::move(source)), target_(std::move(target_legs)), anti_(anti) {
  images_.resize(source_->size(), TensorElement(target_));
  have_.assign(source_->size(), false);
}

Morphism Morphism::identity(const PresPtr& p) {
  Morphism m(p, {p});
  for (int i = 0; i < p->size(); ++i)
    m.set_image(p->gen(i).name, NCElement::generator(p, p->gen(i).name));
  return m;
}

void Morphism::set_image(const std::string& gen, TensorElement img) {
  if (img.legs() != target_) throw config_error("image legs mismatch");
  int i = source_->index_of(gen);
  images_[i] = std::move(img);
  have_[i] = true;
}

void Morphism::set_image(const std::string& gen, NCElement img) {
  set_image(gen, TensorElement::outer({std::move(img)}));
}

const TensorElement& Morphism::image(int gen_index) const {
  if (!have_[gen_index])
    throw config_error("morphism image missing for " + source_->gen(gen_index).name);
  return images_[gen_index];
}

TensorElement Morphism::exp_factor(int gen_index, const Scalar& coeff) const {
  const TensorElement& img = image(gen_index);
  TensorElement out = TensorElement::one(target_);
  if (img.is_zero()) return out;  // e^{0} = 1
  // each monomial must be scalar x single func generator on a single leg;
  // monomials must commute pairwise
  struct Piece {
    int leg;
    int gen;
    Scalar s;
  };
  std::vector<Piece> pieces;
  for (auto& [k, c] : img.terms()) {
    int leg = -1, gen = -1;
    for (size_t i = 0; i < k.size(); ++i) {
      if (!k[i].exp.is_zero())
        throw unsupported_error("exponential of a non-linear image");
      for (int g = 0; g < target_[i]->size(); ++g) {
        if (k[i].word[g] == 0) continue;
        if (leg != -1 || k[i].word[g] != 1)
          throw unsupported_error("exponential of a non-linear image");
        leg = static_cast<int>(i);
        gen = g;
      }
    }
    if (leg == -1) throw unsupported_error("exponential of an image with a unit term");
    pieces.push_back({leg, gen, c});
  }
  for (size_t a = 0; a < pieces.size(); ++a)
    for (size_t b = a + 1; b < pieces.size(); ++b)
      if (pieces[a].leg == pieces[b].leg &&
          !target_[pieces[a].leg]->commute(pieces[a].gen, pieces[b].gen))
        throw unsupported_error("exponential image monomials do not commute");
  for (auto& pc : pieces) {
    std::vector<NCElement> factors;
    for (size_t i = 0; i < target_.size(); ++i) {
      if (static_cast<int>(i) == pc.leg)
        factors.push_back(NCElement::exp_of(
            target_[i], LinForm(target_[i]->gen(pc.gen).name, coeff * pc.s)));
      else
        factors.push_back(NCElement::one(target_[i]));
    }
    out = out * TensorElement::outer(factors);
  }
  return out;
}

TensorElement Morphism::apply(const NCElement& x) const {
  TensorElement out(target_);
  for (auto& [k, c] : x.terms()) {
    TensorElement r = TensorElement::one(target_);
    if (!anti_) {
      for (auto& [v, cf] : k.exp.terms()) r = r * exp_factor(source_->index_of(v), cf);
      for (int g = 0; g < source_->size(); ++g)
        if (k.word[g] > 0) r = r * image(g).pow(k.word[g]);
    } else {
      for (int g = source_->size() - 1; g >= 0; --g)
        if (k.word[g] > 0) r = r * image(g).pow(k.word[g]);
      for (auto& [v, cf] : k.exp.terms()) r = r * exp_factor(source_->index_of(v), cf);
    }
    out += c * r;
  }
  return out;
}

TensorElement apply_on_leg(const TensorElement& t, int which, const Morphism& phi) {
  std::vector<PresPtr> legs;
  for (int i = 0; i < t.leg_count(); ++i) {
    if (i == which)
      for (auto& p : phi.target_legs()) legs.push_back(p);
    else
      legs.push_back(t.leg(i));
  }
  TensorElement out(legs);
  for (auto& [k, c] : t.terms()) {
    NCElement m = single(t.leg(which), k[which], Scalar(1));
    TensorElement img = phi.apply(m);
    for (auto& [ki, ci] : img.terms()) {
      std::vector<NCKey> key;
      for (int i = 0; i < t.leg_count(); ++i) {
        if (i == which)
          for (auto& kk : ki) key.push_back(kk);
        else
          key.push_back(k[i]);
      }
      out.add(key, c * ci);
    }
  }
  return out;
}

TensorElement contract_leg_counit(const TensorElement& t, int which) {
  std::vector<PresPtr> legs;
  for (int i = 0; i < t.leg_count(); ++i)
    if (i != which) legs.push_back(t.leg(i));
  TensorElement out(legs);
  for (auto& [k, c] : t.terms()) {
    bool unit_word = true;
    for (int e : k[which].word)
      if (e > 0) unit_word = false;
    if (!unit_word) continue;  // counit kills every generator
    std::vector<NCKey> key;
    for (int i = 0; i < t.leg_count(); ++i)
      if (i != which) key.push_back(k[i]);
    out.add(key, c);
  }
  return out;
}

NCElement to_nc(const TensorElement& t) {
  if (t.leg_count() != 1) throw config_error("to_nc needs exactly one leg");
  NCElement out(t.leg(0));
  for (auto& [k, c] : t.terms()) out.add(k[0], c);
  return out;
}

}  // namespace qgf
