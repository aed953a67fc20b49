#pragma once

#include <array>

#include "qgf/hopf.hpp"

namespace qgf {

/// Sparse graded table of coproduct coefficients of U_w iso(1,1):
/// Delta(X^{abc}) = F^{abc}_{lmn;qrs} X^{lmn} (x) X^{qrs}, stored for all
/// index triples of total degree <= cutoff. Entries out of range read as 0.
class StructureTensor {
public:
  using Index = std::array<int, 9>;  // a b c l m n q r s

  int cutoff() const { return cutoff_; }
  const std::map<Index, Scalar>& entries() const { return f_; }
  Scalar at(const Index& i) const {
    auto it = f_.find(i);
    return it == f_.end() ? Scalar() : it->second;
  }

  /// deterministic line format: "a b c | l m n | q r s | scalar"
  std::string dump() const;

  friend StructureTensor compute_structure_tensor(int cutoff, bool parallel);
  void set(const Index& i, const Scalar& s) { f_[i] = s; }  // test corruption hook

private:
  int cutoff_ = 0;
  std::map<Index, Scalar> f_;
};

StructureTensor compute_structure_tensor(int cutoff, bool parallel = true);

/// Coefficients of X^{lmn} (x) X^{qrs} in Delta(A-^a A+^b H^c), exact for all
/// word degrees <= deg_cap.
std::map<std::array<int, 6>, Scalar> structure_row(int a, int b, int c, int deg_cap);

struct WitnessList {
  std::vector<std::string> witnesses;
  bool ok() const { return witnesses.empty(); }
};

/// The special values and recurrences behind the factorized dual form: the
/// delta patterns at the unit slots, the two index recurrences, and the three
/// closed slices F_{100}, F_{010}, F_{;001}.
WitnessList verify_recurrences(const StructureTensor& F);

/// p_{lmn} p_{qrs} = F^{abc}_{lmn;qrs} p_{abc} for all pairs with combined
/// degree <= F.cutoff(), compared after expansion to that degree. Validates
/// the dual monomial basis and the factorized T-matrix in one pass.
WitnessList verify_dual_product(const StructureTensor& F, bool parallel = true);

/// [p_u, p_v] = (F_{u;v} - F_{v;u}) p from the tensor, matched against the
/// closed-form coordinate commutators, degreewise to the tensor cutoff.
WitnessList extract_dual_commutators(const StructureTensor& F);

/// The quantum coordinates as an infinite-dimensional Lie algebra:
/// f_m = e^{2m chi} with [f_m, a+] = 2wm(f_{m+1} - f_m), plus the Hopf
/// closure of span{f_m, a+}. For the standard algebra the analogous g_n
/// closure is reported without a golden comparison.
WitnessList coordinate_lie_algebra(int m_lo, int m_hi);

}  // namespace qgf
