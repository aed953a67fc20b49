#pragma once

#include "qgf/hopf.hpp"

namespace qgf {

/// Square matrix with exact Scalar entries (0, +-1, +-2, +-2w, ...).
class NumericMatrix {
public:
  explicit NumericMatrix(int n) : n_(n), e_(n * n) {}
  static NumericMatrix identity(int n) {
    NumericMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
  }

  int dim() const { return n_; }
  Scalar& at(int i, int j) { return e_[i * n_ + j]; }
  const Scalar& at(int i, int j) const { return e_[i * n_ + j]; }
  bool is_zero() const {
    for (auto& s : e_)
      if (!s.is_zero()) return false;
    return true;
  }

  friend NumericMatrix operator+(const NumericMatrix& a, const NumericMatrix& b);
  friend NumericMatrix operator-(const NumericMatrix& a, const NumericMatrix& b);
  friend NumericMatrix operator*(const NumericMatrix& a, const NumericMatrix& b);
  friend NumericMatrix operator*(const Scalar& s, const NumericMatrix& a);
  friend bool operator==(const NumericMatrix& a, const NumericMatrix& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

  /// Kronecker product
  static NumericMatrix kron(const NumericMatrix& a, const NumericMatrix& b);

private:
  int n_;
  std::vector<Scalar> e_;
};

/// classical 3x3 representation of iso(1,1): gen in {K, P+, P-}
NumericMatrix rep_D(const std::string& gen);
/// 4x4 representation of the quantum coordinates: gen in
/// {chi, a-, a+, a1, a2, theta}; the last three follow the coordinate change
NumericMatrix rep_Q(const std::string& gen);

/// Matrix with normal-ordered entries over one algebra.
class SymMatrix {
public:
  SymMatrix(int n, PresPtr pres)
      : n_(n), pres_(std::move(pres)), e_(n * n, NCElement(pres_)) {}
  static SymMatrix identity(int n, PresPtr pres);

  int dim() const { return n_; }
  const PresPtr& pres() const { return pres_; }
  NCElement& at(int i, int j) { return e_[i * n_ + j]; }
  const NCElement& at(int i, int j) const { return e_[i * n_ + j]; }

  friend SymMatrix operator*(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  std::string str() const;

private:
  int n_;
  PresPtr pres_;
  std::vector<NCElement> e_;
};

/// exp(M t) for a generator t, through Lagrange-Sylvester interpolation on
/// the exact minimal polynomial. Requires every eigenvalue to be a rational
/// multiple of one parameter monomial (0 and nilpotent blocks included);
/// anything else raises unsupported_error. exp(Mt) exp(-Mt) = 1 exactly.
SymMatrix matrix_exp_generator(const NumericMatrix& M, const std::string& gen,
                               const PresPtr& pres);

/// ordered product of exponential factors (coordinate, matrix)
SymMatrix specialize_T(const std::vector<std::pair<std::string, NumericMatrix>>& factors,
                       const PresPtr& pres);

/// Delta applied entrywise equals the matrix product G (x). G.
CheckResult check_coproduct_multiplicativity(const SymMatrix& G, const HopfPresentation& H);

/// R T1 T2 = T2 T1 R entrywise over the entry algebra (dim^2 identities).
CheckResult check_frt(const NumericMatrix& R, const SymMatrix& T, bool parallel = true);
/// w -> 0: relations collapse, entries commute
CheckResult check_frt_classical_collapse(const SymMatrix& T);

/// the quantum R-matrix of the non-standard deformation:
/// R = 1 (x) 1 + w (D(H) (x) D(A+) - D(A+) (x) D(H))
NumericMatrix frt_R_matrix();

struct BasisChangeResult {
  bool pass = true;
  std::string witness;
  ExpPoly a_plus, a_minus, h;  // generator images over {A1, A2, A12}
};

/// Solves T^Q(A-,A+,H) = T^Q(A1,A2,A12) entrywise over commuting symbols,
/// extracting the change of basis and checking every entry; also verifies
/// the w -> 0 limit of the A- image is A1 + A2.
BasisChangeResult verify_basis_change();

/// quantum planes: [x1, x2] = (linear form in x1, x2)
PresPtr plane_nonstandard();          // w'(x1 + x2) with w' = -2w
PresPtr plane_ck(int s);              // v(x1 + j x2)
PresPtr plane_standard();             // w' x1

/// x' = a + (rotation block) x computed in Fun (x) Plane; the primed
/// coordinates must satisfy the plane relation again.
CheckResult coaction_check(const SymMatrix& G, const PresPtr& plane);

/// group matrices: the light-cone form over funw, the rotation form over
/// the cartesian algebras, the Cayley-Klein form, and T^Q over U_w
SymMatrix group_matrix_funw();
SymMatrix group_matrix_cartesian(const HopfPresentation& H);  // standard or nonstandard
SymMatrix group_matrix_ck(int s);
SymMatrix tq_matrix();  // 4x4, entries in U_w iso(1,1) {A-, A+, H}

/// the D-matrices satisfy the deformed relations (they collapse to the
/// classical ones since D(P+)^2 = 0)
CheckResult check_representation_pk();
/// the Q-matrices close the sb(2) relations
CheckResult check_representation_sb2();

}  // namespace qgf
