#pragma once

#include <optional>

#include "qgf/ncengine.hpp"

namespace qgf {

/// Algebra presentation plus coproduct/counit/antipode data on generators.
/// Every generator counit in this catalog is zero, so the counit is kept
/// implicit (contract_leg_counit implements it).
struct HopfPresentation {
  std::string key;
  PresPtr algebra;
  Morphism coproduct;  // algebra -> algebra (x) algebra
  Morphism antipode;   // anti-homomorphism, algebra -> algebra

  HopfPresentation(std::string k, PresPtr a, Morphism cop, Morphism anti)
      : key(std::move(k)),
        algebra(std::move(a)),
        coproduct(std::move(cop)),
        antipode(std::move(anti)) {}
};

/// Catalog keys: uw-iso11-pk, uw-iso11-ah, funw-iso11, funs-iso11-standard,
/// funv-ck-elliptic, funv-ck-parabolic, funv-ck-hyperbolic.
const HopfPresentation& catalog(const std::string& key);
std::vector<std::string> catalog_keys();

/// The cartesian-coordinate form of the non-standard quantum group, i.e. the
/// relations obtained from funw-iso11 through theta = -2 chi, a1 = a- + a+,
/// a2 = a- - a+ (with w' = -2w written out). Used by the coaction checks and
/// as the j -> 1 comparison point.
const HopfPresentation& nonstandard_cartesian();

/// All words of total degree 1..D, lowest degrees first.
std::vector<std::vector<int>> words_up_to(const PresPtr& p, int D);

/// counit of an element (all generator counits zero)
Scalar counit_value(const NCElement& x);

struct CheckResult {
  bool pass = true;
  std::string witness;  // first failing monomial and residual
};

CheckResult check_coassociativity(const HopfPresentation& H, int degree);
CheckResult check_counit(const HopfPresentation& H, int degree);
CheckResult check_antipode(const HopfPresentation& H, int degree);
CheckResult check_bialgebra_compat(const HopfPresentation& H, int degree);
CheckResult check_centrality(const HopfPresentation& H, const NCElement& c);

/// The Casimir 2 P- sinh(wP+)/w of uw-iso11-pk.
NCElement casimir_pk();

enum class SubstStatus { pass, fail, not_applicable };
struct UnitSubstReport {
  SubstStatus status;
  std::string detail;
};

/// Substitutes a1 = a- + a+, a2 = (a- - a+)/j, theta = -2 chi / j, v = -2w/j
/// into the Cayley-Klein relations for j^2 = s and verifies they become
/// identities of funw-iso11 (with j adjoined). s = 0 reports not_applicable
/// (the dual unit has no inverse). For s = +1 additionally compares the
/// j -> 1 collapse with the cartesian relations at w' = -2w.
UnitSubstReport verify_unit_substitution(int s);

/// Contraction a1' = a1, a2' = a2/lam, theta' = theta/lam, v' = v/lam,
/// lam -> 0, applied to every structure map.
HopfPresentation contract_presentation(const HopfPresentation& H,
                                       const std::map<std::string, int>& gen_pows,
                                       int param_pow, int order);

}  // namespace qgf
