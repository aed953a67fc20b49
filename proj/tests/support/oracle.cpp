#include "support/oracle.hpp"


#include "qgf/errors.hpp"

namespace qgf::testsupport {
namespace {

// a letter is either one generator or exp(mu * one func generator)
struct Letter {
  int gen = -1;
  int expvar = -1;
  Scalar mu;
  bool is_exp() const { return expvar >= 0; }
  friend bool operator<(const Letter& a, const Letter& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    if (a.expvar != b.expvar) return a.expvar < b.expvar;
    return a.mu < b.mu;
  }
  friend bool operator==(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.expvar == b.expvar && a.mu == b.mu;
  }
};

using Seq = std::vector<Letter>;

void push_expoly_letters(const TowerPresentation& P, const ExpPoly& e,
                         std::vector<std::pair<Scalar, Seq>>& out) {
  for (auto& [k, c] : e.terms()) {
    Seq s;
    for (auto& [v, cf] : k.second.terms()) s.push_back(Letter{-1, P.index_of(v), cf});
    for (auto& [v, d] : k.first)
      for (int i = 0; i < d; ++i) s.push_back(Letter{P.index_of(v), -1, {}});
    out.emplace_back(c, std::move(s));
  }
}

// [g, e^{mu t}] by one application of the derivation lemma
ExpPoly exp_commutator(const TowerPresentation& P, int g, int t, const Scalar& mu) {
  ExpPoly e = ExpPoly::exponential(LinForm(P.gen(t).name, mu), P.ring());
  if (t < g) return P.rule(g, t) * (mu * e);
  return -(P.rule(t, g) * (mu * e));
}

// index of the leftmost adjacent pair that is out of canonical order
int first_inversion(const TowerPresentation&, const Seq& s) {
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    const Letter& a = s[i];
    const Letter& b = s[i + 1];
    if (a.is_exp() && b.is_exp()) {
      if (a.expvar >= b.expvar) return static_cast<int>(i);  // merge or sort
    } else if (!a.is_exp() && b.is_exp()) {
      return static_cast<int>(i);  // exponentials belong in front
    } else if (!a.is_exp() && !b.is_exp()) {
      if (a.gen > b.gen) return static_cast<int>(i);
    }
  }
  return -1;
}

}  // namespace

NCElement oracle_mono_product(const PresPtr& pp, const NCKey& a, const NCKey& b) {
  const TowerPresentation& P = *pp;
  Seq init;
  for (auto& [v, cf] : a.exp.terms()) init.push_back(Letter{-1, P.index_of(v), cf});
  for (int g = 0; g < P.size(); ++g)
    for (int i = 0; i < a.word[g]; ++i) init.push_back(Letter{g, -1, {}});
  for (auto& [v, cf] : b.exp.terms()) init.push_back(Letter{-1, P.index_of(v), cf});
  for (int g = 0; g < P.size(); ++g)
    for (int i = 0; i < b.word[g]; ++i) init.push_back(Letter{g, -1, {}});

  NCElement out(pp);
  // identical sequences reached along different rewriting paths coalesce,
  // which keeps the worklist polynomial
  std::map<Seq, Scalar> work;
  work.emplace(std::move(init), Scalar(1));
  auto push = [&work](Scalar c, Seq s) {
    if (c.is_zero()) return;
    auto it = work.find(s);
    if (it == work.end()) {
      work.emplace(std::move(s), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) work.erase(it);
    }
  };
  long steps = 0;
  while (!work.empty()) {
    if (++steps > 2000000) throw unsupported_error("oracle rewriting did not terminate");
    auto node = work.extract(work.begin());
    Seq s = std::move(node.key());
    Scalar c = std::move(node.mapped());
    int i = first_inversion(P, s);
    if (i < 0) {
      LinForm L;
      std::vector<int> w(P.size(), 0);
      for (auto& l : s) {
        if (l.is_exp())
          L.add(P.gen(l.expvar).name, l.mu);
        else
          ++w[l.gen];
      }
      out += NCElement::monomial(pp, c, L, w);
      continue;
    }
    const Letter A = s[i], B = s[i + 1];
    if (A.is_exp() && B.is_exp()) {
      Seq t(s.begin(), s.begin() + i);
      if (A.expvar == B.expvar) {
        Scalar m = A.mu + B.mu;
        if (!m.is_zero()) t.push_back(Letter{-1, A.expvar, m});
      } else {
        t.push_back(B);
        t.push_back(A);
      }
      t.insert(t.end(), s.begin() + i + 2, s.end());
      push(c, std::move(t));
    } else if (!A.is_exp() && B.is_exp()) {
      // g * e^{mu t} = e^{mu t} * g + [g, e^{mu t}]
      Seq swapped = s;
      std::swap(swapped[i], swapped[i + 1]);
      push(c, std::move(swapped));
      if (!P.commute(A.gen, B.expvar)) {
        std::vector<std::pair<Scalar, Seq>> ins;
        push_expoly_letters(P, exp_commutator(P, A.gen, B.expvar, B.mu), ins);
        for (auto& [ci, si] : ins) {
          Seq t(s.begin(), s.begin() + i);
          t.insert(t.end(), si.begin(), si.end());
          t.insert(t.end(), s.begin() + i + 2, s.end());
          push(c * ci, std::move(t));
        }
      }
    } else {
      // g_hi * g_lo = g_lo * g_hi + rule
      Seq swapped = s;
      std::swap(swapped[i], swapped[i + 1]);
      push(c, std::move(swapped));
      const ExpPoly& rule = P.rule(A.gen, B.gen);
      if (!rule.is_zero()) {
        std::vector<std::pair<Scalar, Seq>> ins;
        push_expoly_letters(P, rule, ins);
        for (auto& [ci, si] : ins) {
          Seq t(s.begin(), s.begin() + i);
          t.insert(t.end(), si.begin(), si.end());
          t.insert(t.end(), s.begin() + i + 2, s.end());
          push(c * ci, std::move(t));
        }
      }
    }
  }
  return out;
}

NCElement oracle_product(const NCElement& x, const NCElement& y) {
  NCElement out(x.pres());
  for (auto& [ka, ca] : x.terms())
    for (auto& [kb, cb] : y.terms()) out += (ca * cb) * oracle_mono_product(x.pres(), ka, kb);
  return out;
}

}  // namespace qgf::testsupport
