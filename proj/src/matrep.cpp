#include "qgf/matrep.hpp"

#include <exception>
#include <functional>
#include <numeric>
#include <sstream>

#include "qgf/errors.hpp"

namespace qgf {

NumericMatrix operator+(const NumericMatrix& a, const NumericMatrix& b) {
  NumericMatrix r(a.n_);
  for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
  return r;
}

NumericMatrix operator-(const NumericMatrix& a, const NumericMatrix& b) {
  NumericMatrix r(a.n_);
  for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
  return r;
}

NumericMatrix operator*(const NumericMatrix& a, const NumericMatrix& b) {
  if (a.n_ != b.n_) throw config_error("matrix dimension mismatch");
  NumericMatrix r(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j) {
      Scalar s;
      for (int k = 0; k < a.n_; ++k) s += a.at(i, k) * b.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

NumericMatrix operator*(const Scalar& s, const NumericMatrix& a) {
  NumericMatrix r(a.n_);
  for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = s * a.e_[i];
  return r;
}

NumericMatrix NumericMatrix::kron(const NumericMatrix& a, const NumericMatrix& b) {
  NumericMatrix r(a.n_ * b.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j)
      for (int k = 0; k < b.n_; ++k)
        for (int l = 0; l < b.n_; ++l)
          r.at(i * b.n_ + k, j * b.n_ + l) = a.at(i, j) * b.at(k, l);
  return r;
}

NumericMatrix rep_D(const std::string& gen) {
  NumericMatrix m(3);
  if (gen == "K") {
    m.at(1, 2) = Scalar(-2);
    m.at(2, 1) = Scalar(-2);
  } else if (gen == "P+") {
    m.at(1, 0) = Scalar(1);
    m.at(2, 0) = Scalar(-1);
  } else if (gen == "P-") {
    m.at(1, 0) = Scalar(1);
    m.at(2, 0) = Scalar(1);
  } else {
    throw config_error("rep_D knows K, P+, P-");
  }
  return m;
}

NumericMatrix rep_Q(const std::string& gen) {
  NumericMatrix m(4);
  if (gen == "chi") {
    m.at(0, 2) = Scalar(1);
  } else if (gen == "a-") {
    m.at(1, 3) = Scalar(1);
  } else if (gen == "a+") {
    m.at(0, 3) = Scalar(1);
    m.at(1, 1) = Scalar::param(1, Rational(-2));
    m.at(2, 2) = Scalar::param(1, Rational(2));
  } else if (gen == "a1") {
    return rep_Q("a-") + rep_Q("a+");
  } else if (gen == "a2") {
    return rep_Q("a-") - rep_Q("a+");
  } else if (gen == "theta") {
    return Scalar(-2) * rep_Q("chi");
  } else {
    throw config_error("rep_Q knows chi, a-, a+, a1, a2, theta");
  }
  return m;
}

SymMatrix SymMatrix::identity(int n, PresPtr pres) {
  SymMatrix m(n, pres);
  for (int i = 0; i < n; ++i) m.at(i, i) = NCElement::one(pres);
  return m;
}

SymMatrix operator*(const SymMatrix& a, const SymMatrix& b) {
  if (a.n_ != b.n_ || a.pres_ != b.pres_) throw config_error("SymMatrix mismatch");
  SymMatrix r(a.n_, a.pres_);
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j) {
      NCElement s(a.pres_);
      for (int k = 0; k < a.n_; ++k) s += a.at(i, k) * b.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  SymMatrix r(a.n_, a.pres_);
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

std::string SymMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    os << "[ ";
    for (int j = 0; j < n_; ++j) os << at(i, j).str() << (j + 1 < n_ ? " | " : "");
    os << " ]\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// exact spectral machinery

namespace {

using Poly = std::vector<Scalar>;  // coefficients by power

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// det(xI - M) by minor expansion over polynomial entries
Poly char_poly(const NumericMatrix& M) {
  int n = M.dim();
  std::vector<Poly> rowmaj(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly p{-M.at(i, j)};
      if (i == j) p.push_back(Scalar(1));
      rowmaj[i * n + j] = p;
    }
  std::function<Poly(std::vector<int>, std::vector<int>)> det =
      [&](std::vector<int> rows, std::vector<int> cols) -> Poly {
    if (rows.size() == 1) return rowmaj[rows[0] * n + cols[0]];
    Poly acc{Scalar()};
    for (size_t k = 0; k < cols.size(); ++k) {
      std::vector<int> rrows(rows.begin() + 1, rows.end());
      std::vector<int> rcols;
      for (size_t j = 0; j < cols.size(); ++j)
        if (j != k) rcols.push_back(cols[j]);
      Poly minor = det(rrows, rcols);
      Poly term = poly_mul(rowmaj[rows[0] * n + cols[k]], minor);
      if (k % 2) {
        for (auto& s : term) s = -s;
      }
      if (term.size() > acc.size()) acc.resize(term.size());
      for (size_t j = 0; j < term.size(); ++j) acc[j] += term[j];
    }
    return acc;
  };
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  return det(idx, idx);
}

struct Root {
  Scalar lambda;  // monomial, possibly zero
  int mult;
};

// rational root search after pulling out the parameter weight
std::vector<Root> split_roots(Poly p) {
  std::vector<Root> roots;
  // strip zero roots
  size_t low = 0;
  while (low < p.size() && p[low].is_zero()) ++low;
  if (low == p.size()) throw unsupported_error("zero characteristic polynomial");
  if (low > 0) roots.push_back({Scalar(), static_cast<int>(low)});
  Poly q(p.begin() + low, p.end());
  while (q.size() > 1) {
    int m = static_cast<int>(q.size()) - 1;
    // every coefficient must be a rational multiple of a parameter monomial
    std::vector<Rational> num(q.size());
    std::vector<std::pair<int, int>> pw(q.size(), {0, 0});
    for (int d = 0; d <= m; ++d) {
      if (q[d].is_zero()) continue;
      if (!q[d].is_monomial() || q[d].has_unit_part())
        throw unsupported_error("non-splitting spectrum (non-monomial coefficient)");
      pw[d] = {q[d].min_pow_main(), q[d].min_pow_aux()};
      num[d] = q[d].slice_main(pw[d].first).slice_aux(pw[d].second).rational_value();
    }
    // weight so that lambda = rho * param^wm aux^wa
    if (q[0].is_zero()) throw unsupported_error("unexpected zero constant term");
    int wm_num = pw[0].first - pw[m].first;
    int wa_num = pw[0].second - pw[m].second;
    if (wm_num % m || wa_num % m)
      throw unsupported_error("non-splitting spectrum (fractional weight)");
    int wm = wm_num / m, wa = wa_num / m;
    // rational candidates for rho from the dehomogenized integer polynomial
    Rational a0 = num[0], am = num[m];
    std::vector<Rational> cand;
    auto divisors = [](long long v) {
      std::vector<long long> d;
      v = v < 0 ? -v : v;
      for (long long i = 1; i * i <= v; ++i)
        if (v % i == 0) {
          d.push_back(i);
          d.push_back(v / i);
        }
      return d;
    };
    long long scale = 1;
    for (int d = 0; d <= m; ++d) scale = std::lcm(scale, num[d].den());
    for (long long pnum : divisors(a0.num() * scale / a0.den()))
      for (long long pden : divisors(am.num() * scale / am.den())) {
        cand.push_back(Rational(pnum, pden));
        cand.push_back(Rational(-pnum, pden));
      }
    bool found = false;
    for (auto& rho : cand) {
      // evaluate q at rho * param^wm aux^wa
      Scalar lam;
      {
        Scalar s(rho);
        s *= Scalar::param(wm);
        s *= Scalar::aux(wa);
        lam = s;
      }
      Scalar val;
      Scalar powl(1);
      for (int d = 0; d <= m; ++d) {
        val += q[d] * powl;
        powl *= lam;
      }
      if (val.is_zero()) {
        // deflate synthetically
        Poly r(q.size() - 1);
        Scalar carry;
        for (int d = m; d >= 1; --d) {
          carry = q[d] + carry * lam;
          r[d - 1] = carry;
        }
        bool merged = false;
        for (auto& rt : roots)
          if (rt.lambda == lam) {
            ++rt.mult;
            merged = true;
          }
        if (!merged) roots.push_back({lam, 1});
        q = std::move(r);
        found = true;
        break;
      }
    }
    if (!found) throw unsupported_error("non-splitting spectrum (no monomial root)");
  }
  return roots;
}

NumericMatrix poly_at(const Poly& p, const NumericMatrix& M) {
  int n = M.dim();
  NumericMatrix acc(n);
  NumericMatrix pw = NumericMatrix::identity(n);
  for (size_t d = 0; d < p.size(); ++d) {
    if (!p[d].is_zero()) acc = acc + p[d] * pw;
    if (d + 1 < p.size()) pw = pw * M;
  }
  return acc;
}

// minimal multiplicities: greedily lower each root's power while the product
// of (M - lambda_i)^{m_i} stays zero
void minimize(std::vector<Root>& roots, const NumericMatrix& M) {
  auto zero_product = [&](const std::vector<Root>& rs) {
    NumericMatrix acc = NumericMatrix::identity(M.dim());
    for (auto& r : rs) {
      NumericMatrix f = M - r.lambda * NumericMatrix::identity(M.dim());
      for (int i = 0; i < r.mult; ++i) acc = acc * f;
    }
    return acc.is_zero();
  };
  for (auto& r : roots) {
    while (r.mult > 0) {
      --r.mult;
      if (!zero_product(roots)) {
        ++r.mult;
        break;
      }
    }
  }
  std::erase_if(roots, [](const Root& r) { return r.mult == 0; });
}

}  // namespace

SymMatrix matrix_exp_generator(const NumericMatrix& M, const std::string& gen,
                               const PresPtr& pres) {
  int n = M.dim();
  auto roots = split_roots(char_poly(M));
  minimize(roots, M);

  SymMatrix out(n, pres);
  std::vector<int> gw(pres->size(), 0);
  NumericMatrix sum_proj(n);
  for (size_t i = 0; i < roots.size(); ++i) {
    const Scalar& lam = roots[i].lambda;
    int m = roots[i].mult;
    // mu_i = prod_{j != i} (x - lambda_j)^{m_j}
    Poly mu{Scalar(1)};
    for (size_t j = 0; j < roots.size(); ++j) {
      if (j == i) continue;
      for (int t = 0; t < roots[j].mult; ++t) mu = poly_mul(mu, Poly{-roots[j].lambda, Scalar(1)});
    }
    // Taylor expand mu at lambda_i, invert the series mod h^m
    std::vector<Scalar> v(m);
    for (int k = 0; k < m; ++k) {
      Scalar c;
      for (size_t d = k; d < mu.size(); ++d)
        c += Scalar(Rational::binom(static_cast<int>(d), k)) * mu[d] *
             lam.pow(static_cast<int>(d) - k);
      v[k] = c;
    }
    std::vector<Scalar> u(m);
    u[0] = v[0].inverse();
    for (int k = 1; k < m; ++k) {
      Scalar acc;
      for (int j = 0; j < k; ++j) acc += u[j] * v[k - j];
      u[k] = -(acc * v[0].inverse());
    }
    NumericMatrix shifted = M - lam * NumericMatrix::identity(n);
    NumericMatrix upoly(n);
    NumericMatrix pw = NumericMatrix::identity(n);
    for (int k = 0; k < m; ++k) {
      upoly = upoly + u[k] * pw;
      pw = pw * shifted;
    }
    NumericMatrix proj = upoly * poly_at(mu, M);
    sum_proj = sum_proj + proj;

    // e^{lam t} sum_{r<m} t^r/r! (M - lam)^r proj
    NumericMatrix coef = proj;
    Rational fact(1);
    for (int r = 0; r < m; ++r) {
      if (r > 0) {
        coef = shifted * coef;
        fact *= Rational(r);
      }
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          Scalar s = coef.at(a, b) * Scalar(Rational(1) / fact);
          if (s.is_zero()) continue;
          LinForm L;
          if (!lam.is_zero()) L.add(gen, lam);
          std::vector<int> w(pres->size(), 0);
          w[pres->index_of(gen)] = r;
          out.at(a, b) += NCElement::monomial(pres, s, L, w);
        }
    }
  }
  if (!(sum_proj == NumericMatrix::identity(n)))
    throw unsupported_error("spectral projectors do not resolve the identity");
  return out;
}

SymMatrix specialize_T(const std::vector<std::pair<std::string, NumericMatrix>>& factors,
                       const PresPtr& pres) {
  if (factors.empty()) return SymMatrix::identity(1, pres);
  SymMatrix acc = SymMatrix::identity(factors.front().second.dim(), pres);
  for (auto& [gen, M] : factors) {
    if (M.dim() != acc.dim()) throw config_error("factor dimension mismatch");
    acc = acc * matrix_exp_generator(M, gen, pres);
  }
  return acc;
}

CheckResult check_coproduct_multiplicativity(const SymMatrix& G, const HopfPresentation& H) {
  int n = G.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      TensorElement lhs = H.coproduct.apply(G.at(i, j));
      TensorElement rhs(std::vector<PresPtr>{H.algebra, H.algebra});
      for (int k = 0; k < n; ++k) rhs += TensorElement::outer({G.at(i, k), G.at(k, j)});
      if (lhs != rhs)
        return {false, "Delta(G) != G (x). G at entry (" + std::to_string(i) + "," +
                           std::to_string(j) + "): " + (lhs - rhs).str()};
    }
  return {};
}

NumericMatrix frt_R_matrix() {
  NumericMatrix H = rep_D("K"), A = rep_D("P+");
  return NumericMatrix::identity(9) +
         Scalar::param(1) * (NumericMatrix::kron(H, A) - NumericMatrix::kron(A, H));
}

namespace {

NCElement nm_entry_times(const Scalar& s, const NCElement& x) { return s * x; }

}  // namespace

CheckResult check_frt(const NumericMatrix& R, const SymMatrix& T, bool parallel) {
  const int n = T.dim();
  const int N = n * n;
  if (R.dim() != N) throw config_error("R must act on the tensor square");
  const PresPtr& p = T.pres();
  // T1 = T (x) I, T2 = I (x) T with entries in the coordinate algebra
  auto t1 = [&](int I, int J) {
    int i = I / n, k = I % n, j = J / n, l = J % n;
    return k == l ? T.at(i, j) : NCElement(p);
  };
  auto t2 = [&](int I, int J) {
    int i = I / n, k = I % n, j = J / n, l = J % n;
    return i == j ? T.at(k, l) : NCElement(p);
  };
  std::vector<std::string> bad(N * N);
  std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int I = 0; I < N * N; ++I) {
    try {
      int a = I / N, b = I % N;
      NCElement lhs(p), rhs(p);
      for (int u = 0; u < N; ++u)
        for (int v = 0; v < N; ++v) {
          if (!R.at(a, u).is_zero()) lhs += nm_entry_times(R.at(a, u), t1(u, v) * t2(v, b));
          if (!R.at(v, b).is_zero()) rhs += nm_entry_times(R.at(v, b), t2(a, u) * t1(u, v));
        }
      if (lhs != rhs)
        bad[I] = "FRT entry (" + std::to_string(a) + "," + std::to_string(b) +
                 "): " + (lhs - rhs).str();
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  (void)parallel;
  for (auto& s : bad)
    if (!s.empty()) return {false, s};
  return {};
}

CheckResult check_frt_classical_collapse(const SymMatrix& T) {
  const int n = T.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          NCElement c = commutator(T.at(i, j), T.at(k, l));
          NCElement lim = nc_limit_param(c, false);
          if (!lim.is_zero())
            return {false, "entries fail to commute at w=0: " + lim.str()};
        }
  return {};
}

SymMatrix tq_matrix() {
  const auto& uw = catalog("uw-iso11-ah");
  return specialize_T({{"A-", rep_Q("a-")}, {"A+", rep_Q("a+")}, {"H", rep_Q("chi")}},
                      uw.algebra);
}

namespace {

// entries of a matrix over a commutative presentation, as ring elements
ExpPoly nc_to_expoly(const NCElement& x) {
  const PresPtr& p = x.pres();
  ExpPoly out(p->ring());
  for (auto& [k, c] : x.terms()) {
    Monomial m;
    for (int i = 0; i < p->size(); ++i)
      if (k.word[i] > 0) m[p->gen(i).name] = k.word[i];
    out.add_term(c, std::move(m), k.exp);
  }
  return out;
}

}  // namespace

BasisChangeResult verify_basis_change() {
  RingSpec W{"w", "lam", Scalar::kNoUnit};
  // commuting entry symbols: the displayed matrices commute entrywise
  auto mk = [&](const char* name, std::vector<Generator> g) {
    auto p = std::make_shared<TowerPresentation>(name, W, std::move(g));
    p->finalize();
    return PresPtr(p);
  };
  PresPtr ua = mk("uw-symbols-ah", {{"A-", false}, {"A+", true}, {"H", false}});
  PresPtr uc = mk("uw-symbols-12", {{"A1", true}, {"A2", true}, {"A12", false}});

  SymMatrix lhs = specialize_T({{"A-", rep_Q("a-")}, {"A+", rep_Q("a+")}, {"H", rep_Q("chi")}}, ua);
  SymMatrix rhs =
      specialize_T({{"A1", rep_Q("a1")}, {"A2", rep_Q("a2")}, {"A12", rep_Q("theta")}}, uc);

  BasisChangeResult res;
  res.a_plus = nc_to_expoly(rhs.at(0, 3));
  res.h = nc_to_expoly(rhs.at(0, 2));
  res.a_minus = nc_to_expoly(rhs.at(1, 3));

  // read the images off the entries that carry bare generators, then check
  // every entry under the substitution
  std::map<std::string, ExpPoly> sub{
      {"A+", res.a_plus}, {"H", res.h}, {"A-", res.a_minus}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      ExpPoly moved = nc_to_expoly(lhs.at(i, j)).substitute(sub);
      ExpPoly want = nc_to_expoly(rhs.at(i, j));
      if (moved != want) {
        res.pass = false;
        res.witness = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                      ") inconsistent under the extracted basis change";
        return res;
      }
    }
  // classical limit: A- -> A1 + A2
  ExpPoly lim = res.a_minus.limit_param(false);
  ExpPoly want = ExpPoly::variable("A1", W) + ExpPoly::variable("A2", W);
  if (lim != want) {
    res.pass = false;
    res.witness = "w->0 limit of the A- image is not A1 + A2: " + lim.str();
  }
  return res;
}

PresPtr plane_nonstandard() {
  RingSpec W{"w", "lam", Scalar::kNoUnit};
  auto p = std::make_shared<TowerPresentation>(
      "plane-nonstandard", W, std::vector<Generator>{{"x1", false}, {"x2", false}});
  // [x1, x2] = w'(x1 + x2), w' = -2w
  p->set_rule("x2", "x1", Scalar::param(1, Rational(2)) *
                              (ExpPoly::variable("x1", W) + ExpPoly::variable("x2", W)));
  p->finalize();
  return p;
}

PresPtr plane_ck(int s) {
  RingSpec R{"v", "lam", s};
  auto p = std::make_shared<TowerPresentation>(
      "plane-ck", R, std::vector<Generator>{{"x1", false}, {"x2", false}});
  p->set_rule("x2", "x1",
              -(Scalar::param(1) * (ExpPoly::variable("x1", R) +
                                    Scalar::unit(s) * ExpPoly::variable("x2", R))));
  p->finalize();
  return p;
}

PresPtr plane_standard() {
  RingSpec W{"w'", "lam", Scalar::kNoUnit};
  auto p = std::make_shared<TowerPresentation>(
      "plane-standard", W, std::vector<Generator>{{"x1", false}, {"x2", false}});
  p->set_rule("x2", "x1", -(Scalar::param(1) * ExpPoly::variable("x1", W)));
  p->finalize();
  return p;
}

CheckResult coaction_check(const SymMatrix& G, const PresPtr& plane) {
  if (G.dim() != 3) throw config_error("coaction expects a 3x3 group matrix");
  const PresPtr& fun = G.pres();
  std::vector<PresPtr> legs{fun, plane};
  auto lift_fun = [&](const NCElement& x) {
    return TensorElement::outer({x, NCElement::one(plane)});
  };
  auto x1 = TensorElement::outer({NCElement::one(fun), NCElement::generator(plane, "x1")});
  auto x2 = TensorElement::outer({NCElement::one(fun), NCElement::generator(plane, "x2")});

  TensorElement xp1 = lift_fun(G.at(1, 0)) + lift_fun(G.at(1, 1)) * x1 + lift_fun(G.at(1, 2)) * x2;
  TensorElement xp2 = lift_fun(G.at(2, 0)) + lift_fun(G.at(2, 1)) * x1 + lift_fun(G.at(2, 2)) * x2;

  // plane rule [x1, x2] = c1 x1 + c2 x2
  ExpPoly rule = -plane->rule(1, 0);
  Scalar c1, c2;
  for (auto& [k, c] : rule.terms()) {
    if (!k.second.is_zero() || k.first.size() != 1)
      throw config_error("plane relation must be linear");
    if (k.first.count("x1"))
      c1 = c;
    else if (k.first.count("x2"))
      c2 = c;
  }
  TensorElement lhs = xp1 * xp2 - xp2 * xp1;
  TensorElement rhs = c1 * xp1 + c2 * xp2;
  if (lhs != rhs)
    return {false, "coaction breaks the plane relation: " + (lhs - rhs).str()};
  return {};
}

SymMatrix group_matrix_funw() {
  const auto& fw = catalog("funw-iso11");
  return specialize_T({{"a-", rep_D("P-")}, {"a+", rep_D("P+")}, {"chi", rep_D("K")}},
                      fw.algebra);
}

SymMatrix group_matrix_cartesian(const HopfPresentation& H) {
  const PresPtr& p = H.algebra;
  const RingSpec& R = p->ring();
  auto ch = NCElement::from_expoly(
      p, (ExpPoly::exponential(LinForm("theta", Scalar(1)), R) +
          ExpPoly::exponential(LinForm("theta", Scalar(-1)), R)) /
             Scalar(2));
  auto sh = NCElement::from_expoly(
      p, (ExpPoly::exponential(LinForm("theta", Scalar(1)), R) -
          ExpPoly::exponential(LinForm("theta", Scalar(-1)), R)) /
             Scalar(2));
  SymMatrix G(3, p);
  G.at(0, 0) = NCElement::one(p);
  G.at(1, 0) = NCElement::generator(p, "a1");
  G.at(2, 0) = NCElement::generator(p, "a2");
  G.at(1, 1) = ch;
  G.at(1, 2) = sh;
  G.at(2, 1) = sh;
  G.at(2, 2) = ch;
  return G;
}

SymMatrix group_matrix_ck(int s) {
  const auto& H = catalog(s == -1  ? "funv-ck-elliptic"
                          : s == 0 ? "funv-ck-parabolic"
                                   : "funv-ck-hyperbolic");
  const PresPtr& p = H.algebra;
  const RingSpec& R = p->ring();
  auto C = NCElement::from_expoly(p, ck_cosh("theta", R));
  auto S = NCElement::from_expoly(p, ck_sinh_over_j("theta", R));
  SymMatrix G(3, p);
  G.at(0, 0) = NCElement::one(p);
  G.at(1, 0) = NCElement::generator(p, "a1");
  G.at(2, 0) = NCElement::generator(p, "a2");
  G.at(1, 1) = C;
  G.at(1, 2) = Scalar(s) * S;  // j sinh(j theta)
  G.at(2, 1) = S;              // sinh(j theta)/j
  G.at(2, 2) = C;
  return G;
}

CheckResult check_representation_pk() {
  NumericMatrix K = rep_D("K"), Pp = rep_D("P+"), Pm = rep_D("P-");
  if (!(Pp * Pp).is_zero()) return {false, "D(P+)^2 != 0"};
  // sinh(w D(P+))/w = D(P+) and cosh(w D(P+)) = I via the nilpotent series
  NumericMatrix sinh_over_w = Pp;  // + w^2 P^3/6 + ... all vanish
  NumericMatrix cosh = NumericMatrix::identity(3);
  auto comm = [](const NumericMatrix& a, const NumericMatrix& b) { return a * b - b * a; };
  if (!(comm(K, Pp) == Scalar(2) * sinh_over_w))
    return {false, "[D(K), D(P+)] != 2 sinh(w D(P+))/w"};
  if (!(comm(K, Pm) == Scalar(-2) * (Pm * cosh)))
    return {false, "[D(K), D(P-)] != -2 D(P-) cosh(w D(P+))"};
  if (!comm(Pp, Pm).is_zero()) return {false, "[D(P+), D(P-)] != 0"};
  return {};
}

CheckResult check_representation_sb2() {
  NumericMatrix chi = rep_Q("chi"), ap = rep_Q("a+"), am = rep_Q("a-");
  auto comm = [](const NumericMatrix& a, const NumericMatrix& b) { return a * b - b * a; };
  if (!(comm(chi, ap) == Scalar::param(1, Rational(2)) * chi))
    return {false, "[Q(chi), Q(a+)] != 2w Q(chi)"};
  if (!comm(chi, am).is_zero()) return {false, "[Q(chi), Q(a-)] != 0"};
  if (!(comm(ap, am) == Scalar::param(1, Rational(-2)) * am))
    return {false, "[Q(a+), Q(a-)] != -2w Q(a-)"};
  return {};
}

}  // namespace qgf
