#pragma once

#include "qgf/liebialg.hpp"

namespace qgf {

/// Derivation on a commutative coordinate ring, coordinate -> coefficient.
struct VectorField {
  std::map<std::string, ExpPoly> comp;
};

ExpPoly apply_field(const VectorField& X, const ExpPoly& f);
VectorField field_commutator(const VectorField& X, const VectorField& Y,
                             const std::vector<std::string>& coords, const RingSpec& ring);

/// r-matrix plus left/right invariant field sets over a coordinate ring.
struct SklyaninRecipe {
  LieAlgebraSC algebra;  // indexes the r-matrix
  RMatrixElem r;
  std::map<std::string, VectorField> left, right;
  std::vector<std::string> coords;
  RingSpec ring;
};

/// {f,g} = r^{ab} (X^L_a f X^L_b g - X^R_a f X^R_b g)
ExpPoly sklyanin_bracket(const SklyaninRecipe& R, const ExpPoly& f, const ExpPoly& g);

struct PoissonStructure {
  RingSpec ring;
  std::vector<std::string> coords;
  std::map<std::pair<int, int>, ExpPoly> table;  // i < j

  int index_of(const std::string& c) const;
  /// {x_i, x_j} with orientation handled
  ExpPoly entry(int i, int j) const;
};

PoissonStructure bracket_table(const SklyaninRecipe& R);
/// derivation expansion: {f,g} = sum T_ij (d_i f d_j g - d_j f d_i g)
ExpPoly poisson_bracket(const PoissonStructure& P, const ExpPoly& f, const ExpPoly& g);
CheckResult check_jacobi(const PoissonStructure& P);

/// invariant fields on ISO(1,1) coordinates with r = w K ^ P+
SklyaninRecipe iso11_recipe();
/// fields from T^Q on SB(2) coordinates with r = (1/w) Q(a+) ^ Q(chi).
/// The right chi-field carries e^{+2wA+}, the sign deriving right fields
/// from T^Q produces and the bracket table requires.
SklyaninRecipe sb2_recipe();

struct ClosureReport {
  bool pass = true;
  int left_sign = 0;  // fields close on the structure constants up to one
  int right_sign = 0;  // global sign per chirality; the measured signs
  std::string detail;
};
ClosureReport check_field_closure(const SklyaninRecipe& R);

/// both presentations of the bracket agree: the Sklyanin evaluation equals
/// the displayed bivector table
PoissonStructure expected_table_iso();
PoissonStructure expected_table_sb2();

/// quantum commutator tables match the Poisson tables literally, and the
/// quantum coproducts equal the classical group law
CheckResult check_weyl_correspondence_iso();
CheckResult check_weyl_correspondence_sb2();

/// classical coproducts read off the matrix group law, over doubled
/// coordinates x -> x@1, x@2
std::map<std::string, ExpPoly> classical_coproduct_iso();
std::map<std::string, ExpPoly> classical_coproduct_sb2();

/// {Delta f, Delta g}_(x) = Delta {f, g} on coordinate pairs
CheckResult check_poisson_hopf(const PoissonStructure& P,
                               const std::map<std::string, ExpPoly>& coproduct);

}  // namespace qgf
