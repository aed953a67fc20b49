#pragma once

#include "qgf/hopf.hpp"

namespace qgf {

/// Finite-dimensional Lie algebra given by structure constants over Scalars.
class LieAlgebraSC {
public:
  LieAlgebraSC(std::string name, std::vector<std::string> basis);

  /// [x, y] = sum over (target, coefficient); antisymmetric partner filled in
  void set_bracket(const std::string& x, const std::string& y,
                   const std::vector<std::pair<std::string, Scalar>>& value);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::string& basis(int i) const { return basis_[i]; }
  int index_of(const std::string& b) const;
  /// c^k_{ij}
  const Scalar& c(int i, int j, int k) const { return c_[(i * dim() + j) * dim() + k]; }

  CheckResult validate() const;  // antisymmetry and Jacobi

private:
  std::string name_;
  std::vector<std::string> basis_;
  std::vector<Scalar> c_;
};

/// dense antisymmetric 2-tensor over the basis
class Tensor2 {
public:
  explicit Tensor2(int n) : n_(n), e_(n * n) {}
  int dim() const { return n_; }
  Scalar& at(int i, int j) { return e_[i * n_ + j]; }
  const Scalar& at(int i, int j) const { return e_[i * n_ + j]; }
  /// r += c * (x ^ y)
  void add_wedge(int x, int y, const Scalar& c) {
    at(x, y) += c;
    at(y, x) -= c;
  }
  bool is_zero() const {
    for (auto& s : e_)
      if (!s.is_zero()) return false;
    return true;
  }
  bool antisymmetric() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (at(i, j) != -at(j, i)) return false;
    return true;
  }
  friend bool operator==(const Tensor2& a, const Tensor2& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  friend Tensor2 operator-(const Tensor2& a, const Tensor2& b) {
    Tensor2 r(a.n_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
  }
  std::string str(const LieAlgebraSC& g) const;

private:
  int n_;
  std::vector<Scalar> e_;
};

class Tensor3 {
public:
  explicit Tensor3(int n) : n_(n), e_(n * n * n) {}
  int dim() const { return n_; }
  Scalar& at(int a, int b, int c) { return e_[(a * n_ + b) * n_ + c]; }
  const Scalar& at(int a, int b, int c) const { return e_[(a * n_ + b) * n_ + c]; }
  bool is_zero() const {
    for (auto& s : e_)
      if (!s.is_zero()) return false;
    return true;
  }
  bool totally_antisymmetric() const;

private:
  int n_;
  std::vector<Scalar> e_;
};

using RMatrixElem = Tensor2;
/// generator index -> antisymmetric image
using Cocommutator = std::vector<Tensor2>;

/// [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23]
Tensor3 schouten(const RMatrixElem& r, const LieAlgebraSC& g);
bool ad_invariant(const Tensor3& t, const LieAlgebraSC& g);
CheckResult check_cybe(const RMatrixElem& r, const LieAlgebraSC& g);
CheckResult check_mcybe(const RMatrixElem& r, const LieAlgebraSC& g);

/// delta(x) = [x (x) 1 + 1 (x) x, r]
Cocommutator coboundary_cocommutator(const RMatrixElem& r, const LieAlgebraSC& g);
CheckResult check_cocycle(const Cocommutator& d, const LieAlgebraSC& g);
CheckResult check_cojacobi(const Cocommutator& d, const LieAlgebraSC& g);

/// <delta1(x), xi (x) eta> = <x, [xi,eta]_2> and the mirror identity, under a
/// diagonal pairing e_i <-> f_{partner(i)}. The per-pair normalizations are
/// solved for rather than assumed; the report carries the values found.
struct DualityReport {
  bool pass = true;
  std::string detail;
  std::vector<Rational> pairing;  // per g1 basis element
};
DualityReport check_bialgebra_duality(const LieAlgebraSC& g1, const Cocommutator& d1,
                                      const LieAlgebraSC& g2, const Cocommutator& d2,
                                      const std::map<std::string, std::string>& partner);
/// same identities with the pairing fixed
CheckResult check_duality_with_pairing(const LieAlgebraSC& g1, const Cocommutator& d1,
                                       const LieAlgebraSC& g2, const Cocommutator& d2,
                                       const std::map<std::string, std::string>& partner,
                                       const std::vector<Rational>& pairing);

// --- catalog data ---------------------------------------------------------

/// iso(1,1) in the light-cone basis {P-, P+, K}
LieAlgebraSC iso11_pk();
/// iso(1,1) in the null-plane basis {A-, A+, H} (classical limit of the rules)
LieAlgebraSC iso11_ah();
/// sb(2) closed by the Q-matrices {a-, a+, chi}
LieAlgebraSC sb2();

/// r = K ^ P+ (CYBE) and r = K ^ (P- + P+) (mCYBE) on iso(1,1)
RMatrixElem r_nonstandard(const LieAlgebraSC& pk);
RMatrixElem r_standard(const LieAlgebraSC& pk);
/// w H ^ A+ on the {A,H} basis: generates the cocommutator of the deformation
RMatrixElem r_nonstandard_w(const LieAlgebraSC& ah);
/// (1/w) Q(a+) ^ Q(chi) on sb(2)
RMatrixElem r_sb2(const LieAlgebraSC& s);
/// the non-coboundary cocommutator: delta(K) = 0, delta(P+-) = P+- ^ K
Cocommutator delta_noncoboundary(const LieAlgebraSC& pk);

/// w-linear part of the antisymmetrized coproduct of each generator
/// (uw-iso11-ah), as a cocommutator over the {A-, A+, H} basis
Cocommutator first_order_cocommutator_uw(const LieAlgebraSC& ah);
/// lowest-degree antisymmetrized coproduct of funw-iso11 under the
/// Q-linearization, over the sb(2) basis
Cocommutator first_order_cocommutator_funw(const LieAlgebraSC& s);

}  // namespace qgf
