#include "qgf/dualform.hpp"

#include <exception>
#include <sstream>

namespace qgf {

namespace {

// A-basis catalog handles shared by every computation here
struct AhContext {
  const HopfPresentation& H = catalog("uw-iso11-ah");
  const PresPtr& p = H.algebra;
};

std::vector<std::array<int, 3>> triples_up_to(int D) {
  std::vector<std::array<int, 3>> out;
  for (int t = 0; t <= D; ++t)
    for (int a = t; a >= 0; --a)
      for (int b = t - a; b >= 0; --b) out.push_back({a, b, t - a - b});
  return out;
}

}  // namespace

std::map<std::array<int, 6>, Scalar> structure_row(int a, int b, int c, int deg_cap) {
  AhContext ah;
  auto img = [&](const char* g) { return ah.H.coproduct.apply(NCElement::generator(ah.p, g)); };
  TensorElement t = TensorElement::one({ah.p, ah.p});
  if (a) t = t * img("A-").pow(a);
  if (b) t = t * img("A+").pow(b);
  if (c) t = t * img("H").pow(c);
  t = expand_to_degree(t, deg_cap);
  std::map<std::array<int, 6>, Scalar> row;
  for (auto& [k, coef] : t.terms()) {
    const auto& L = k[0].word;
    const auto& Q = k[1].word;
    row[{L[0], L[1], L[2], Q[0], Q[1], Q[2]}] = coef;
  }
  return row;
}

StructureTensor compute_structure_tensor(int cutoff, bool parallel) {
  StructureTensor F;
  F.cutoff_ = cutoff;
  auto triples = triples_up_to(cutoff);
  std::vector<std::map<std::array<int, 6>, Scalar>> rows(triples.size());
  std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (size_t i = 0; i < triples.size(); ++i) {
    try {
      auto [a, b, c] = triples[i];
      rows[i] = structure_row(a, b, c, cutoff);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  (void)parallel;
  for (size_t i = 0; i < triples.size(); ++i) {
    auto [a, b, c] = triples[i];
    for (auto& [k, coef] : rows[i]) {
      if (k[0] + k[1] + k[2] > cutoff || k[3] + k[4] + k[5] > cutoff) continue;
      F.f_[{a, b, c, k[0], k[1], k[2], k[3], k[4], k[5]}] = coef;
    }
  }
  return F;
}

std::string StructureTensor::dump() const {
  RingSpec W{"w", "lam", Scalar::kNoUnit};
  std::ostringstream os;
  for (auto& [i, s] : f_) {
    os << i[0] << " " << i[1] << " " << i[2] << " | " << i[3] << " " << i[4] << " " << i[5]
       << " | " << i[6] << " " << i[7] << " " << i[8] << " | " << s.str(W) << "\n";
  }
  return os.str();
}

namespace {

std::string idx_str(const StructureTensor::Index& i) {
  std::ostringstream os;
  os << "F[" << i[0] << i[1] << i[2] << ";" << i[3] << i[4] << i[5] << ";" << i[6] << i[7]
     << i[8] << "]";
  return os.str();
}

void expect(WitnessList& w, const StructureTensor& F, const StructureTensor::Index& i,
            const Scalar& want, const char* what) {
  Scalar got = F.at(i);
  if (got != want)
    w.witnesses.push_back(std::string(what) + " fails at " + idx_str(i) + ": got " +
                          got.str({}) + ", want " + want.str({}));
}

}  // namespace

WitnessList verify_recurrences(const StructureTensor& F) {
  WitnessList w;
  const int D = F.cutoff();
  auto triples = triples_up_to(D);

  for (auto& A : triples)
    for (auto& Q : triples) {
      // the unit-word slots of the coproduct are delta patterns
      Scalar d = (A == Q) ? Scalar(1) : Scalar();
      expect(w, F, {A[0], A[1], A[2], 0, 0, 0, Q[0], Q[1], Q[2]}, d, "[unit-slot] F[abc;000;qrs] delta pattern");
      expect(w, F, {A[0], A[1], A[2], Q[0], Q[1], Q[2], 0, 0, 0}, d, "[unit-slot] F[abc;lmn;000] delta pattern");
      // F^{000} only pairs the unit with the unit
      if (A[0] + A[1] + A[2] == 0) {
        for (auto& L : triples) {
          if (L[0] + L[1] + L[2] + Q[0] + Q[1] + Q[2] == 0) continue;
          expect(w, F, {0, 0, 0, L[0], L[1], L[2], Q[0], Q[1], Q[2]}, Scalar(),
                 "[unit-slot] F[000;...] counit row");
        }
      }
      // the three closed slices
      int a = A[0], b = A[1], c = A[2];
      if (a >= 1) {
        Scalar want = (a == Q[0] + 1 && b == Q[1] && c == Q[2]) ? Scalar(a) : Scalar();
        expect(w, F, {a, b, c, 1, 0, 0, Q[0], Q[1], Q[2]}, want, "[F100 slice] a*delta");
      }
      if (b >= 1 && a == 0) {
        // the closed b*delta form of the F_{010} slice holds exactly on the
        // domain the dual basis extraction uses (a = 0); for a >= 1 the
        // left-leg exponential of Delta(A-) adds w-corrections, e.g.
        // F[110;010;110] = -2w, which the A+ recurrence pins down instead
        Scalar want = (0 == Q[0] && b == Q[1] + 1 && c == Q[2]) ? Scalar(b) : Scalar();
        expect(w, F, {a, b, c, 0, 1, 0, Q[0], Q[1], Q[2]}, want, "[F010 slice] b*delta");
      }
      if (c >= 1) {
        Scalar want = (a == Q[0] && b == Q[1] && c == Q[2] + 1) ? Scalar(c) : Scalar();
        expect(w, F, {a, b, c, Q[0], Q[1], Q[2], 0, 0, 1}, want, "[F001 slice] c*delta");
      }
    }

  // the two index recurrences that the factorized dual form rests on
  for (auto& A : triples)
    for (auto& L : triples)
      for (auto& Q : triples) {
        int a = A[0], b = A[1], c = A[2], l = L[0], m = L[1], n = L[2], q = Q[0], r = Q[1],
            s = Q[2];
        if (a >= 1 && l >= 1 && q >= 1) {
          Scalar sum;
          for (int k = m; k >= 0; --k) {
            int e = m - k;  // (-2w)^e / e!
            long long p2 = 1;
            for (int t = 0; t < e; ++t) p2 *= -2;
            sum += Scalar::param(e, Rational(p2) / Rational::factorial(e)) *
                   F.at({a - 1, b, c, l, k, n, q - 1, r, s});
          }
          sum += F.at({a - 1, b, c, l - 1, m, n, q, r, s});
          expect(w, F, {a, b, c, l, m, n, q, r, s}, sum, "[A- recurrence]");
        }
        if (b >= 1 && m >= 1 && r >= 1) {
          Scalar sum = F.at({a, b - 1, c, l, m - 1, n, q, r, s}) +
                       F.at({a, b - 1, c, l, m, n, q, r - 1, s});
          expect(w, F, {a, b, c, l, m, n, q, r, s}, sum, "[A+ recurrence]");
        }
      }
  return w;
}

WitnessList verify_dual_product(const StructureTensor& F, bool parallel) {
  WitnessList w;
  const int D = F.cutoff();
  const auto& fw = catalog("funw-iso11");
  const PresPtr& p = fw.algebra;

  auto pmono = [&](int q, int r, int s) {
    Scalar c(Rational(1) / (Rational::factorial(q) * Rational::factorial(r) *
                            Rational::factorial(s)));
    return NCElement::monomial(p, c, {}, {q, r, s});
  };

  std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>> pairs;
  for (auto& L : triples_up_to(D))
    for (auto& Q : triples_up_to(D))
      if (L[0] + L[1] + L[2] + Q[0] + Q[1] + Q[2] <= D) pairs.emplace_back(L, Q);

  std::vector<std::string> results(pairs.size());
  std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (size_t i = 0; i < pairs.size(); ++i) {
    try {
      auto [L, Q] = pairs[i];
      NCElement lhs =
          expand_to_degree(pmono(L[0], L[1], L[2]) * pmono(Q[0], Q[1], Q[2]), D);
      NCElement rhs(p);
      for (auto& A : triples_up_to(D)) {
        Scalar f = F.at({A[0], A[1], A[2], L[0], L[1], L[2], Q[0], Q[1], Q[2]});
        if (!f.is_zero()) rhs += f * pmono(A[0], A[1], A[2]);
      }
      if (lhs != rhs) {
        std::ostringstream os;
        os << "p_" << L[0] << L[1] << L[2] << " p_" << Q[0] << Q[1] << Q[2]
           << " != F-sum, residual " << (lhs - rhs).str();
        results[i] = os.str();
      }
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  (void)parallel;
  for (auto& r : results)
    if (!r.empty()) w.witnesses.push_back(r);
  return w;
}

WitnessList extract_dual_commutators(const StructureTensor& F) {
  WitnessList w;
  const int D = F.cutoff();
  const auto& fw = catalog("funw-iso11");
  const PresPtr& p = fw.algebra;

  auto pmono = [&](std::array<int, 3> v) {
    Scalar c(Rational(1) / (Rational::factorial(v[0]) * Rational::factorial(v[1]) *
                            Rational::factorial(v[2])));
    return NCElement::monomial(p, c, {}, {v[0], v[1], v[2]});
  };
  auto bracket_from_tensor = [&](std::array<int, 3> u, std::array<int, 3> v) {
    NCElement out(p);
    for (auto& A : triples_up_to(D)) {
      Scalar f = F.at({A[0], A[1], A[2], u[0], u[1], u[2], v[0], v[1], v[2]}) -
                 F.at({A[0], A[1], A[2], v[0], v[1], v[2], u[0], u[1], u[2]});
      if (!f.is_zero()) out += f * pmono({A[0], A[1], A[2]});
    }
    return out;
  };
  auto check = [&](std::array<int, 3> u, std::array<int, 3> v, const NCElement& closed,
                   const char* name) {
    NCElement got = bracket_from_tensor(u, v);
    NCElement want = expand_to_degree(closed, D);
    if (got != want)
      w.witnesses.push_back(std::string(name) + " mismatch: " + (got - want).str());
  };

  // [chi, a+] = w(e^{2chi} - 1)
  NCElement closed1 = NCElement::monomial(p, Scalar::param(1), LinForm("chi", Scalar(2)),
                                          {0, 0, 0}) -
                      NCElement::monomial(p, Scalar::param(1), {}, {0, 0, 0});
  check({0, 0, 1}, {0, 1, 0}, closed1, "[chi,a+]");
  check({0, 0, 1}, {1, 0, 0}, NCElement::zero(p), "[chi,a-]");
  // [a+, a-] = -2w a-
  check({0, 1, 0}, {1, 0, 0},
        NCElement::monomial(p, Scalar::param(1, Rational(-2)), {}, {1, 0, 0}), "[a+,a-]");
  return w;
}

WitnessList coordinate_lie_algebra(int m_lo, int m_hi) {
  WitnessList w;
  const auto& fw = catalog("funw-iso11");
  const PresPtr& p = fw.algebra;

  auto fm = [&](int m) {
    return NCElement::exp_of(p, LinForm("chi", Scalar(Rational(2 * m))));
  };
  auto ap = NCElement::generator(p, "a+");
  auto am = NCElement::generator(p, "a-");

  for (int m = m_lo; m <= m_hi; ++m) {
    // [f_m, a+] = 2wm (f_{m+1} - f_m)
    NCElement want = Scalar::param(1, Rational(2 * m)) * (fm(m + 1) - fm(m));
    NCElement got = commutator(fm(m), ap);
    if (got != want)
      w.witnesses.push_back("[f_" + std::to_string(m) + ",a+] mismatch: " + (got - want).str());
    if (!commutator(fm(m), am).is_zero())
      w.witnesses.push_back("[f_" + std::to_string(m) + ",a-] nonzero");
    for (int n = m; n <= m_hi; ++n)
      if (!commutator(fm(m), fm(n)).is_zero())
        w.witnesses.push_back("[f_m,f_n] nonzero at m=" + std::to_string(m));
    // group-like coproduct
    auto d = fw.coproduct.apply(fm(m));
    if (d != TensorElement::outer({fm(m), fm(m)}))
      w.witnesses.push_back("Delta(f_" + std::to_string(m) + ") not group-like");
  }

  // linear (Lie) closure of span{f_m, a+, a-}: every bracket is a linear
  // combination of basis elements (allowing f-indices one step out of range)
  auto in_span = [&](const NCElement& x) {
    for (auto& [k, c] : x.terms()) {
      int wdeg = k.degree();
      bool exppart = !k.exp.is_zero();
      if (exppart && wdeg > 0) return false;  // mixed f_m * word
      if (wdeg > 1) return false;
      if (exppart) {
        // must be e^{2k chi}
        Scalar cf = k.exp.coeff("chi");
        if (k.exp.terms().size() != 1 || !cf.is_rational()) return false;
        Rational r = cf.rational_value();
        if (r.den() != 1 || r.num() % 2 != 0) return false;
      }
    }
    return true;
  };
  std::vector<NCElement> basis;
  for (int m = m_lo; m <= m_hi; ++m) basis.push_back(fm(m));
  basis.push_back(ap);
  basis.push_back(am);
  for (auto& x : basis)
    for (auto& y : basis) {
      auto br = commutator(x, y);
      if (!in_span(br))
        w.witnesses.push_back("bracket leaves the coordinate span: " + br.str());
      if (!(br + commutator(y, x)).is_zero())
        w.witnesses.push_back("antisymmetry fails");
    }
  for (auto& x : basis)
    for (auto& y : basis)
      for (auto& z : basis) {
        auto jac = commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) +
                   commutator(z, commutator(x, y));
        if (!jac.is_zero()) w.witnesses.push_back("Jacobi fails on coordinate triple");
      }

  // Hopf closure of span{f_m, a+}: coproduct and antipode stay inside
  auto dap = fw.coproduct.apply(ap);
  if (dap != TensorElement::outer({ap, NCElement::one(p)}) +
                 TensorElement::outer({fm(1), ap}))
    w.witnesses.push_back("Delta(a+) leaves the f_m/a+ subalgebra");
  for (int m = m_lo; m <= m_hi; ++m) {
    if (to_nc(fw.antipode.apply(fm(m))) != fm(-m))
      w.witnesses.push_back("gamma(f_m) != f_{-m}");
  }
  if (to_nc(fw.antipode.apply(ap)) != -(fm(-1) * ap))
    w.witnesses.push_back("gamma(a+) leaves the f_m/a+ subalgebra");

  // the standard algebra in terms of g_n = e^{n theta}: closure is reported
  // without a golden comparison (no closed target values exist; reported only)
  {
    const auto& st = catalog("funs-iso11-standard");
    const PresPtr& q = st.algebra;
    auto gn = [&](int n) {
      return NCElement::exp_of(q, LinForm("theta", Scalar(Rational(n))));
    };
    auto in_gspan = [&](const NCElement& x) {
      for (auto& [k, c] : x.terms()) {
        if (k.degree() > 1) return false;
        if (!k.exp.is_zero() && k.degree() > 0) return false;
      }
      return true;
    };
    for (int n = m_lo; n <= m_hi; ++n) {
      auto b1 = commutator(gn(n), NCElement::generator(q, "a1"));
      auto b2 = commutator(gn(n), NCElement::generator(q, "a2"));
      if (!in_gspan(b1) || !in_gspan(b2))
        w.witnesses.push_back("standard g_n bracket leaves the linear span at n=" +
                              std::to_string(n));
      if (st.coproduct.apply(gn(n)) != TensorElement::outer({gn(n), gn(n)}))
        w.witnesses.push_back("Delta(g_n) not group-like at n=" + std::to_string(n));
    }
  }
  return w;
}

}  // namespace qgf
