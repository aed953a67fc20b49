#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qgf/expoly.hpp"

namespace qgf {

struct Generator {
  std::string name;
  bool is_func = false;  // exponentials of this generator may appear
};

class TowerPresentation;
using PresPtr = std::shared_ptr<const TowerPresentation>;

/// Ordered tower of generators g_0 < g_1 < ... with commutator rules
/// [g_hi, g_lo] given as elements of the commutative coefficient ring over
/// generator names. The normal-ordering engine classifies each pair:
///   zero      commuting pair
///   lower_fn  rule is a function of generators below hi, commuting with lo
///   upper_fn  rule is a function of g_hi itself
///   linear    rule is a linear combination of generators (mixed levels)
/// Anything else is rejected rather than completed.
class TowerPresentation {
public:
  enum class PairKind { zero, lower_fn, upper_fn, linear, unsupported };

  TowerPresentation(std::string name, RingSpec ring, std::vector<Generator> gens);

  /// declare [hi, lo] = c; `declared_support` optionally pins the function-of
  /// set for validation
  void set_rule(const std::string& hi, const std::string& lo, ExpPoly c,
                std::vector<std::string> declared_support = {});
  void finalize();

  const std::string& name() const { return name_; }
  const RingSpec& ring() const { return ring_; }
  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(int i) const { return gens_[i]; }
  int index_of(const std::string& name) const;
  bool has_gen(const std::string& name) const;

  bool finalized() const { return finalized_; }
  const ExpPoly& rule(int hi, int lo) const;
  const std::vector<std::string>& declared_support(int hi, int lo) const;
  PairKind kind(int hi, int lo) const;
  bool commute(int i, int j) const;

  int exponent_cap() const { return cap_; }
  void set_exponent_cap(int c) { cap_ = c; }

private:
  int slot(int hi, int lo) const { return hi * (hi - 1) / 2 + lo; }

  std::string name_;
  RingSpec ring_;
  std::vector<Generator> gens_;
  std::vector<ExpPoly> rules_;                          // lower-triangular
  std::vector<std::vector<std::string>> decl_support_;  // parallel to rules_
  std::vector<PairKind> kinds_;
  bool finalized_ = false;
  int cap_ = 16;
};

PresPtr make_presentation(std::string name, RingSpec ring, std::vector<Generator> gens,
                          const std::vector<std::tuple<std::string, std::string, ExpPoly>>& rules);

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
  std::string str() const;
};

/// Tower hypotheses: function-of declarations match actual rule support,
/// commutant conditions per rule class, exponentials only of mutually
/// commuting func generators, and the Jacobi identity on all generator
/// triples computed with the engine itself.
ValidationReport validate_presentation(const PresPtr& p);

/// Key of one normal monomial: exponential prefix (over func generators,
/// written leftmost) times the ordered word g_0^{w0} g_1^{w1} ...
struct NCKey {
  LinForm exp;
  std::vector<int> word;

  friend bool operator==(const NCKey& a, const NCKey& b) {
    return a.word == b.word && a.exp == b.exp;
  }
  friend bool operator<(const NCKey& a, const NCKey& b) {
    if (a.word != b.word) return a.word < b.word;
    return a.exp < b.exp;
  }
  int degree() const {
    int d = 0;
    for (int e : word) d += e;
    return d;
  }
};

/// Normal-ordered element of a tower algebra.
class NCElement {
public:
  NCElement() = default;
  explicit NCElement(PresPtr pres) : pres_(std::move(pres)) {}

  static NCElement zero(PresPtr p) { return NCElement(std::move(p)); }
  static NCElement one(PresPtr p);
  static NCElement generator(PresPtr p, const std::string& name);
  static NCElement word(PresPtr p, const std::vector<int>& exps);
  static NCElement exp_of(PresPtr p, const LinForm& L);
  static NCElement monomial(PresPtr p, const Scalar& c, const LinForm& L,
                            const std::vector<int>& word);
  /// commutative payload: every term's support must be a commuting cluster
  static NCElement from_expoly(PresPtr p, const ExpPoly& e);

  const PresPtr& pres() const { return pres_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<NCKey, Scalar>& terms() const { return terms_; }
  int max_word_degree() const;

  void add(const NCKey& k, const Scalar& c);

  NCElement operator-() const;
  friend NCElement operator+(const NCElement& a, const NCElement& b);
  friend NCElement operator-(const NCElement& a, const NCElement& b);
  friend NCElement operator*(const NCElement& a, const NCElement& b);  // normal-ordered
  friend NCElement operator*(const Scalar& s, const NCElement& a);
  friend NCElement operator*(const NCElement& a, const Scalar& s) { return s * a; }
  NCElement& operator+=(const NCElement& b) { return *this = *this + b; }
  NCElement& operator-=(const NCElement& b) { return *this = *this - b; }
  NCElement& operator*=(const NCElement& b) { return *this = *this * b; }
  NCElement pow(int n) const;

  friend bool operator==(const NCElement& a, const NCElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const NCElement& a, const NCElement& b) { return !(a == b); }

  std::string str() const;

private:
  PresPtr pres_;
  std::map<NCKey, Scalar> terms_;
};

NCElement commutator(const NCElement& a, const NCElement& b);

/// Taylor-expand every exponential, re-normal-order the produced polynomial
/// words, truncate at total word degree D. Result carries empty exponents.
NCElement expand_to_degree(const NCElement& x, int D);

/// Limit as the deformation (aux=false) or contraction (aux=true) parameter
/// goes to zero; exponentials carrying the parameter are expanded far enough
/// first. Throws divergent_limit_error if negative powers survive.
NCElement nc_limit_param(const NCElement& x, bool aux, int order = 0);

/// generator -> aux^{pow} * generator, applied inside words and exponents
NCElement nc_rescale_vars_by_aux(const NCElement& x, const std::map<std::string, int>& pows);
NCElement nc_rescale_param_by_aux(const NCElement& x, int k);
/// transplant onto another presentation with the same generator layout
NCElement nc_retarget(const NCElement& x, const PresPtr& target);

/// Element of a tensor product of tower algebras (legs may differ; legs
/// multiply independently).
class TensorElement {
public:
  TensorElement() = default;
  explicit TensorElement(std::vector<PresPtr> legs) : legs_(std::move(legs)) {}

  static TensorElement outer(const std::vector<NCElement>& factors);
  static TensorElement one(std::vector<PresPtr> legs);

  int leg_count() const { return static_cast<int>(legs_.size()); }
  const PresPtr& leg(int i) const { return legs_[i]; }
  const std::vector<PresPtr>& legs() const { return legs_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<NCKey>, Scalar>& terms() const { return terms_; }

  void add(const std::vector<NCKey>& k, const Scalar& c);

  TensorElement operator-() const;
  friend TensorElement operator+(const TensorElement& a, const TensorElement& b);
  friend TensorElement operator-(const TensorElement& a, const TensorElement& b);
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend TensorElement operator*(const Scalar& s, const TensorElement& a);
  TensorElement& operator+=(const TensorElement& b) { return *this = *this + b; }
  TensorElement& operator-=(const TensorElement& b) { return *this = *this - b; }
  TensorElement& operator*=(const TensorElement& b) { return *this = *this * b; }
  TensorElement pow(int n) const;

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

  /// fold a two-leg tensor over one algebra back into the algebra (m: x*y)
  NCElement fold_multiply() const;

  std::string str() const;

private:
  std::vector<PresPtr> legs_;
  std::map<std::vector<NCKey>, Scalar> terms_;
};

TensorElement expand_to_degree(const TensorElement& t, int D);  // per leg
TensorElement tensor_limit_param(const TensorElement& t, bool aux, int order = 0);
TensorElement tensor_rescale_vars_by_aux(const TensorElement& t,
                                         const std::map<std::string, int>& pows);
TensorElement tensor_rescale_param_by_aux(const TensorElement& t, int k);
TensorElement tensor_retarget(const TensorElement& t, const std::vector<PresPtr>& legs);

/// Algebra map (or anti-map) defined on generators, extended multiplicatively.
/// e^{c g} maps to the product of exponentials of the image monomials, which
/// must each be scalar x (single func generator on a single leg) and commute
/// pairwise; anything else is rejected.
class Morphism {
public:
  Morphism(PresPtr source, std::vector<PresPtr> target_legs, bool anti = false);

  static Morphism identity(const PresPtr& p);

  void set_image(const std::string& gen, TensorElement img);
  void set_image(const std::string& gen, NCElement img);

  const PresPtr& source() const { return source_; }
  const std::vector<PresPtr>& target_legs() const { return target_; }
  bool anti() const { return anti_; }
  const TensorElement& image(int gen_index) const;

  TensorElement apply(const NCElement& x) const;

private:
  TensorElement exp_factor(int gen_index, const Scalar& coeff) const;

  PresPtr source_;
  std::vector<PresPtr> target_;
  bool anti_;
  std::vector<TensorElement> images_;
  std::vector<bool> have_;
};

/// morphism on one leg of a tensor, identity elsewhere
TensorElement apply_on_leg(const TensorElement& t, int which, const Morphism& phi);
/// counit contraction of a leg (all generator counits zero)
TensorElement contract_leg_counit(const TensorElement& t, int which);
NCElement to_nc(const TensorElement& t);  // 1 leg

}  // namespace qgf
