#include "qgf/hopf.hpp"

#include <functional>
#include <map>

#include "qgf/errors.hpp"

namespace qgf {

namespace {

ExpPoly ring_one(const RingSpec& r) { return ExpPoly::constant(Scalar(1), r); }

ExpPoly eexp(const RingSpec& r, const std::string& v, const Scalar& c) {
  return ExpPoly::exponential(LinForm(v, c), r);
}

ExpPoly rebuild_in_ring(const ExpPoly& e, const RingSpec& target) {
  ExpPoly out(target);
  for (auto& [k, c] : e.terms()) out.add_term(c, k.first, k.second);
  return out;
}

ExpPoly scale_param(const ExpPoly& e, const Scalar& c) {
  ExpPoly out(e.ring());
  for (auto& [k, co] : e.terms()) {
    LinForm L;
    for (auto& [v, cf] : k.second.terms()) L.add(v, cf.scale_param_coeff(c));
    out.add_term(co.scale_param_coeff(c), k.first, L);
  }
  return out;
}

struct HopfBuilder {
  PresPtr p;
  Morphism cop;
  Morphism anti;
  HopfBuilder(PresPtr pres) : p(pres), cop(pres, {pres, pres}), anti(pres, {pres}, true) {}

  void primitive(const std::string& g) {
    auto one = NCElement::one(p);
    auto x = NCElement::generator(p, g);
    cop.set_image(g, TensorElement::outer({x, one}) + TensorElement::outer({one, x}));
  }
  // Delta(g) = g (x) 1 + sum_i c_i (x) t_i with coefficient functions c_i
  void grouplike_row(const std::string& g,
                     const std::vector<std::pair<ExpPoly, std::string>>& cols) {
    auto one = NCElement::one(p);
    TensorElement t = TensorElement::outer({NCElement::generator(p, g), one});
    for (auto& [cf, tgt] : cols)
      t += TensorElement::outer({NCElement::from_expoly(p, cf), NCElement::generator(p, tgt)});
    cop.set_image(g, t);
  }
  HopfPresentation done(const std::string& key) { return HopfPresentation(key, p, cop, anti); }
};

HopfPresentation build_uw_pk() {
  RingSpec W{"w", "lam", Scalar::kNoUnit};
  auto p = std::make_shared<TowerPresentation>(
      "uw-iso11-pk", W, std::vector<Generator>{{"P-", false}, {"P+", true}, {"K", false}});
  ExpPoly ep = eexp(W, "P+", Scalar::param(1)), em = eexp(W, "P+", Scalar::param(1, Rational(-1)));
  p->set_rule("K", "P+", Scalar::param(-1) * (ep - em), {"P+"});
  p->set_rule("K", "P-", Scalar(-1) * ExpPoly::variable("P-", W) * (ep + em), {"P+", "P-"});
  p->finalize();
  PresPtr pp = p;

  HopfBuilder b(pp);
  b.primitive("P+");
  auto lexp = [&](int m) { return NCElement::exp_of(pp, LinForm("P+", Scalar::param(1, Rational(m)))); };
  for (const char* g : {"P-", "K"})
    b.cop.set_image(g, TensorElement::outer({lexp(-1), NCElement::generator(pp, g)}) +
                           TensorElement::outer({NCElement::generator(pp, g), lexp(1)}));
  b.anti.set_image("P+", -NCElement::generator(pp, "P+"));
  b.anti.set_image("P-", -NCElement::generator(pp, "P-"));
  b.anti.set_image("K", -NCElement::generator(pp, "K") +
                            NCElement::exp_of(pp, LinForm("P+", Scalar::param(1))) -
                            NCElement::exp_of(pp, LinForm("P+", Scalar::param(1, Rational(-1)))));
  return b.done("uw-iso11-pk");
}

HopfPresentation build_uw_ah() {
  RingSpec W{"w", "lam", Scalar::kNoUnit};
  auto p = std::make_shared<TowerPresentation>(
      "uw-iso11-ah", W, std::vector<Generator>{{"A-", false}, {"A+", true}, {"H", false}});
  ExpPoly e2 = eexp(W, "A+", Scalar::param(1, Rational(2)));
  p->set_rule("H", "A+", Scalar::param(-1) * (e2 - ring_one(W)), {"A+"});
  p->set_rule("H", "A-", Scalar(-2) * ExpPoly::variable("A-", W) * e2, {"A+", "A-"});
  p->finalize();
  PresPtr pp = p;

  HopfBuilder b(pp);
  auto one = NCElement::one(pp);
  auto lexp = [&](int m) { return NCElement::exp_of(pp, LinForm("A+", Scalar::param(1, Rational(m)))); };
  b.primitive("A+");
  b.cop.set_image("A-", TensorElement::outer({lexp(-2), NCElement::generator(pp, "A-")}) +
                            TensorElement::outer({NCElement::generator(pp, "A-"), one}));
  b.cop.set_image("H", TensorElement::outer({one, NCElement::generator(pp, "H")}) +
                           TensorElement::outer({NCElement::generator(pp, "H"), lexp(2)}));
  // antipode derived from the {P,K} data through A+ = P+, A- = e^{-wP+}P-,
  // H = e^{wP+}K (uniqueness of the antipode fixes it)
  b.anti.set_image("A+", -NCElement::generator(pp, "A+"));
  b.anti.set_image("A-", -(lexp(2) * NCElement::generator(pp, "A-")));
  b.anti.set_image("H", -(lexp(-2) * NCElement::generator(pp, "H")) +
                            Scalar(2) * NCElement::one(pp) - Scalar(2) * lexp(-2));
  return b.done("uw-iso11-ah");
}

HopfPresentation build_funw() {
  RingSpec W{"w", "lam", Scalar::kNoUnit};
  auto p = std::make_shared<TowerPresentation>(
      "funw-iso11", W, std::vector<Generator>{{"a-", false}, {"a+", false}, {"chi", true}});
  ExpPoly e2 = eexp(W, "chi", Scalar(2));
  p->set_rule("chi", "a+", Scalar::param(1) * (e2 - ring_one(W)), {"chi"});
  p->set_rule("a+", "a-", Scalar::param(1, Rational(-2)) * ExpPoly::variable("a-", W), {"a-"});
  p->finalize();
  PresPtr pp = p;

  HopfBuilder b(pp);
  b.primitive("chi");
  ExpPoly cosh2 = (eexp(W, "chi", Scalar(2)) + eexp(W, "chi", Scalar(-2))) / Scalar(2);
  ExpPoly sinh2 = (eexp(W, "chi", Scalar(2)) - eexp(W, "chi", Scalar(-2))) / Scalar(2);
  b.grouplike_row("a+", {{cosh2 + sinh2, "a+"}});
  b.grouplike_row("a-", {{cosh2 - sinh2, "a-"}});
  b.anti.set_image("chi", -NCElement::generator(pp, "chi"));
  b.anti.set_image("a+", -(NCElement::exp_of(pp, LinForm("chi", Scalar(-2))) *
                           NCElement::generator(pp, "a+")));
  b.anti.set_image("a-", -(NCElement::exp_of(pp, LinForm("chi", Scalar(2))) *
                           NCElement::generator(pp, "a-")));
  return b.done("funw-iso11");
}

// shared shape of the three cartesian-coordinate quantum groups
HopfPresentation build_cartesian(const std::string& key, const RingSpec& R,
                                 const ExpPoly& rule_th_a1, const ExpPoly& rule_th_a2,
                                 const ExpPoly& rule_a2_a1, const ExpPoly& C, const ExpPoly& S,
                                 const ExpPoly& sS) {
  auto p = std::make_shared<TowerPresentation>(
      key, R, std::vector<Generator>{{"a1", false}, {"a2", false}, {"theta", true}});
  p->set_rule("theta", "a1", rule_th_a1, {"theta"});
  p->set_rule("theta", "a2", rule_th_a2, {"theta"});
  p->set_rule("a2", "a1", rule_a2_a1);
  p->finalize();
  PresPtr pp = p;

  HopfBuilder b(pp);
  b.primitive("theta");
  b.grouplike_row("a1", {{C, "a1"}, {sS, "a2"}});
  b.grouplike_row("a2", {{S, "a1"}, {C, "a2"}});
  b.anti.set_image("theta", -NCElement::generator(pp, "theta"));
  b.anti.set_image("a1", -(NCElement::from_expoly(pp, C) * NCElement::generator(pp, "a1")) +
                             NCElement::from_expoly(pp, sS) * NCElement::generator(pp, "a2"));
  b.anti.set_image("a2", NCElement::from_expoly(pp, S) * NCElement::generator(pp, "a1") -
                             NCElement::from_expoly(pp, C) * NCElement::generator(pp, "a2"));
  return b.done(key);
}

HopfPresentation build_standard() {
  RingSpec R{"w'", "lam", Scalar::kNoUnit};
  ExpPoly ch = (eexp(R, "theta", Scalar(1)) + eexp(R, "theta", Scalar(-1))) / Scalar(2);
  ExpPoly sh = (eexp(R, "theta", Scalar(1)) - eexp(R, "theta", Scalar(-1))) / Scalar(2);
  Scalar wp = Scalar::param(1);
  return build_cartesian("funs-iso11-standard", R, wp * (ch - ring_one(R)), wp * sh,
                         -(wp * ExpPoly::variable("a1", R)), ch, sh, sh);
}

HopfPresentation build_ck(int s) {
  std::string key = s == -1   ? "funv-ck-elliptic"
                    : s == 0  ? "funv-ck-parabolic"
                              : "funv-ck-hyperbolic";
  RingSpec R{"v", "lam", s};
  ExpPoly C = ck_cosh("theta", R);
  ExpPoly S = ck_sinh_over_j("theta", R);
  ExpPoly C2 = ck_coshm1_over_j2("theta", R);
  Scalar v = Scalar::param(1);
  Scalar j = Scalar::unit(s);
  ExpPoly r1 = v * (C - ring_one(R)) - (v * j) * S;
  ExpPoly r2 = v * S - (v * j) * C2;
  ExpPoly r21 = -(v * (ExpPoly::variable("a1", R) + j * ExpPoly::variable("a2", R)));
  return build_cartesian(key, R, r1, r2, r21, C, S, Scalar(s) * S);
}

HopfPresentation build_cartesian_nonstandard() {
  RingSpec R{"w", "lam", Scalar::kNoUnit};
  ExpPoly ch = (eexp(R, "theta", Scalar(1)) + eexp(R, "theta", Scalar(-1))) / Scalar(2);
  ExpPoly sh = (eexp(R, "theta", Scalar(1)) - eexp(R, "theta", Scalar(-1))) / Scalar(2);
  Scalar wp = Scalar::param(1, Rational(-2));  // w' = -2w
  return build_cartesian("nonstandard-cartesian", R, wp * (ch - ring_one(R) - sh),
                         wp * (sh - ch + ring_one(R)),
                         -(wp * (ExpPoly::variable("a1", R) + ExpPoly::variable("a2", R))), ch,
                         sh, sh);
}

const std::map<std::string, HopfPresentation>& registry() {
  static const std::map<std::string, HopfPresentation> reg = [] {
    std::map<std::string, HopfPresentation> m;
    auto put = [&](HopfPresentation h) { m.emplace(h.key, std::move(h)); };
    put(build_uw_pk());
    put(build_uw_ah());
    put(build_funw());
    put(build_standard());
    put(build_ck(-1));
    put(build_ck(0));
    put(build_ck(1));
    return m;
  }();
  return reg;
}

}  // namespace

const HopfPresentation& catalog(const std::string& key) {
  auto it = registry().find(key);
  if (it == registry().end()) throw config_error("unknown catalog key: " + key);
  return it->second;
}

std::vector<std::string> catalog_keys() {
  std::vector<std::string> k;
  for (auto& [key, h] : registry()) k.push_back(key);
  return k;
}

const HopfPresentation& nonstandard_cartesian() {
  static const HopfPresentation h = build_cartesian_nonstandard();
  return h;
}

std::vector<std::vector<int>> words_up_to(const PresPtr& p, int D) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(p->size(), 0);
  for (int d = 1; d <= D; ++d) {
    // all exponent vectors of total degree d, lexicographic
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == p->size() - 1) {
        w[pos] = left;
        out.push_back(w);
        return;
      }
      for (int e = left; e >= 0; --e) {
        w[pos] = e;
        rec(pos + 1, left - e);
      }
      w[pos] = 0;
    };
    rec(0, d);
  }
  return out;
}

Scalar counit_value(const NCElement& x) {
  Scalar s;
  for (auto& [k, c] : x.terms()) {
    bool empty = true;
    for (int e : k.word)
      if (e > 0) empty = false;
    if (empty) s += c;  // counit of every exponential is 1 here
  }
  return s;
}

CheckResult check_coassociativity(const HopfPresentation& H, int degree) {
  for (auto& wv : words_up_to(H.algebra, degree)) {
    auto m = NCElement::word(H.algebra, wv);
    auto t = H.coproduct.apply(m);
    auto a = apply_on_leg(t, 0, H.coproduct);
    auto b = apply_on_leg(t, 1, H.coproduct);
    if (a != b)
      return {false, "coassociativity fails on " + m.str() + ": " + (a - b).str()};
  }
  return {};
}

CheckResult check_counit(const HopfPresentation& H, int degree) {
  for (auto& wv : words_up_to(H.algebra, degree)) {
    auto m = NCElement::word(H.algebra, wv);
    auto t = H.coproduct.apply(m);
    auto l = to_nc(contract_leg_counit(t, 0));
    auto r = to_nc(contract_leg_counit(t, 1));
    if (l != m) return {false, "(eps x id) fails on " + m.str() + ": " + (l - m).str()};
    if (r != m) return {false, "(id x eps) fails on " + m.str() + ": " + (r - m).str()};
  }
  return {};
}

CheckResult check_antipode(const HopfPresentation& H, int degree) {
  for (auto& wv : words_up_to(H.algebra, degree)) {
    auto m = NCElement::word(H.algebra, wv);
    auto t = H.coproduct.apply(m);
    auto expect = counit_value(m) * NCElement::one(H.algebra);
    auto l = apply_on_leg(t, 0, H.antipode).fold_multiply();
    if (l != expect)
      return {false, "m(gamma x id)Delta fails on " + m.str() + ": " + (l - expect).str()};
    auto r = apply_on_leg(t, 1, H.antipode).fold_multiply();
    if (r != expect)
      return {false, "m(id x gamma)Delta fails on " + m.str() + ": " + (r - expect).str()};
  }
  return {};
}

CheckResult check_bialgebra_compat(const HopfPresentation& H, int degree) {
  for (int g = 0; g < H.algebra->size(); ++g) {
    auto x = NCElement::generator(H.algebra, H.algebra->gen(g).name);
    auto dx = H.coproduct.apply(x);
    for (auto& wv : words_up_to(H.algebra, degree)) {
      auto y = NCElement::word(H.algebra, wv);
      auto com = commutator(x, y);
      auto lhs = H.coproduct.apply(com);
      auto rhs = dx * H.coproduct.apply(y) - H.coproduct.apply(y) * dx;
      if (lhs != rhs)
        return {false, "Delta([x,y]) mismatch on x=" + x.str() + " y=" + y.str() + ": " +
                           (lhs - rhs).str()};
      if (!counit_value(com).is_zero())
        return {false, "eps([x,y]) nonzero on x=" + x.str() + " y=" + y.str()};
    }
  }
  return {};
}

CheckResult check_centrality(const HopfPresentation& H, const NCElement& c) {
  for (int g = 0; g < H.algebra->size(); ++g) {
    auto x = NCElement::generator(H.algebra, H.algebra->gen(g).name);
    auto r = commutator(c, x);
    if (!r.is_zero())
      return {false, "[c," + H.algebra->gen(g).name + "] = " + r.str()};
  }
  return {};
}

NCElement casimir_pk() {
  const auto& H = catalog("uw-iso11-pk");
  const RingSpec& W = H.algebra->ring();
  ExpPoly sinh_over_w =
      (eexp(W, "P+", Scalar::param(1)) - eexp(W, "P+", Scalar::param(1, Rational(-1)))) /
      Scalar::param(1);
  return NCElement::from_expoly(H.algebra, ExpPoly::variable("P-", W) * sinh_over_w);
}

UnitSubstReport verify_unit_substitution(int s) {
  if (s == 0)
    return {SubstStatus::not_applicable, "dual unit has no inverse"};
  const auto& ck = catalog(s == 1 ? "funv-ck-hyperbolic" : "funv-ck-elliptic");
  // funw with j adjoined
  RingSpec WJ{"w", "lam", s};
  auto p = std::make_shared<TowerPresentation>(
      "funw-j", WJ, std::vector<Generator>{{"a-", false}, {"a+", false}, {"chi", true}});
  p->set_rule("chi", "a+", Scalar::param(1) * (eexp(WJ, "chi", Scalar(2)) - ring_one(WJ)));
  p->set_rule("a+", "a-", Scalar::param(1, Rational(-2)) * ExpPoly::variable("a-", WJ));
  p->finalize();
  PresPtr fw = p;

  Scalar jinv = Scalar::unit(s, Rational(1, s));  // 1/j = j/s
  auto am = NCElement::generator(fw, "a-");
  auto ap = NCElement::generator(fw, "a+");
  auto chi = NCElement::generator(fw, "chi");
  std::map<std::string, NCElement> img{
      {"a1", am + ap}, {"a2", jinv * (am - ap)}, {"chi-free", chi}};
  NCElement th = (Scalar(-2) * jinv) * chi;
  Scalar vmap = Scalar::param(1, Rational(-2)) * jinv;  // v = -2w/j

  std::map<std::string, LinForm> lin{
      {"a1", LinForm("a-", Scalar(1)) + LinForm("a+", Scalar(1))},
      {"a2", LinForm("a-", jinv) + LinForm("a+", -jinv)},
      {"theta", LinForm("chi", Scalar(-2) * jinv)}};

  auto transport = [&](const ExpPoly& rule) {
    ExpPoly r = rebuild_in_ring(rule, WJ);
    r = scale_param(r, vmap);
    r = r.substitute_linear(lin);
    return NCElement::from_expoly(fw, r);
  };
  auto image_of = [&](const std::string& g) -> NCElement {
    if (g == "a1") return img.at("a1");
    if (g == "a2") return img.at("a2");
    return th;
  };

  const auto& A = *ck.algebra;
  for (int h = 0; h < A.size(); ++h)
    for (int l = 0; l < h; ++l) {
      if (A.rule(h, l).is_zero()) continue;
      auto lhs = commutator(image_of(A.gen(h).name), image_of(A.gen(l).name));
      auto rhs = transport(A.rule(h, l));
      if (lhs != rhs)
        return {SubstStatus::fail, "relation [" + A.gen(h).name + "," + A.gen(l).name +
                                       "] breaks: " + (lhs - rhs).str()};
    }

  if (s == 1) {
    // j -> 1 collapse must reproduce the cartesian non-standard relations
    const auto& eu = *nonstandard_cartesian().algebra;
    RingSpec W{"w", "lam", Scalar::kNoUnit};
    for (int h = 0; h < A.size(); ++h)
      for (int l = 0; l < h; ++l) {
        ExpPoly got = scale_param(rebuild_in_ring(A.rule(h, l), WJ),
                                  Scalar::param(1, Rational(-2)))
                          .collapse_unit_to_one(W);
        ExpPoly want = eu.rule(h, l);
        if (got != want)
          return {SubstStatus::fail,
                  "j->1 collapse differs from the w'=-2w relations on [" + A.gen(h).name + "," +
                      A.gen(l).name + "]"};
      }
  }
  return {SubstStatus::pass, ""};
}

namespace {

bool scalar_has_unit(const Scalar& s) { return s.has_unit_part(); }

bool expoly_has_unit(const ExpPoly& e) {
  for (auto& [k, c] : e.terms()) {
    if (scalar_has_unit(c)) return true;
    for (auto& [v, cf] : k.second.terms())
      if (scalar_has_unit(cf)) return true;
  }
  return false;
}

bool nckey_has_unit(const NCKey& k) {
  for (auto& [v, cf] : k.exp.terms())
    if (scalar_has_unit(cf)) return true;
  return false;
}

}  // namespace

HopfPresentation contract_presentation(const HopfPresentation& H,
                                       const std::map<std::string, int>& gen_pows,
                                       int param_pow, int order) {
  const PresPtr& A = H.algebra;
  const RingSpec& ring = A->ring();
  auto pow_of = [&](const std::string& g) {
    auto it = gen_pows.find(g);
    return it == gen_pows.end() ? 0 : it->second;
  };
  std::vector<Generator> gens;
  for (int i = 0; i < A->size(); ++i) gens.push_back(A->gen(i));

  auto rescale_rule = [&](int h, int l) {
    ExpPoly c = A->rule(h, l);
    c = c.rescale_vars_by_aux(gen_pows).rescale_param_by_aux(param_pow);
    return Scalar::aux(-pow_of(A->gen(h).name) - pow_of(A->gen(l).name)) * c;
  };

  auto res = std::make_shared<TowerPresentation>(A->name() + "-rescaled", ring, gens);
  for (int h = 0; h < A->size(); ++h)
    for (int l = 0; l < h; ++l)
      if (!A->rule(h, l).is_zero()) res->set_rule(A->gen(h).name, A->gen(l).name, rescale_rule(h, l));
  res->finalize();
  PresPtr pres = res;

  std::map<std::pair<int, int>, ExpPoly> rules0;
  for (int h = 0; h < A->size(); ++h)
    for (int l = 0; l < h; ++l)
      if (!A->rule(h, l).is_zero()) {
        ExpPoly c0 = rescale_rule(h, l).limit_param(true, order);
        if (!c0.is_zero()) rules0.emplace(std::pair{h, l}, std::move(c0));
      }
  std::vector<TensorElement> cops;
  std::vector<NCElement> antis;
  for (int g = 0; g < A->size(); ++g) {
    Scalar pre = Scalar::aux(-pow_of(A->gen(g).name));
    TensorElement d = tensor_retarget(H.coproduct.image(g), {pres, pres});
    d = tensor_rescale_vars_by_aux(d, gen_pows);
    d = tensor_rescale_param_by_aux(d, param_pow);
    cops.push_back(tensor_limit_param(pre * d, true, order));

    NCElement a = nc_retarget(to_nc(H.antipode.image(g)), pres);
    a = nc_rescale_vars_by_aux(a, gen_pows);
    a = nc_rescale_param_by_aux(a, param_pow);
    antis.push_back(nc_limit_param(pre * a, true, order));
  }

  // if the unit j dropped out of every surviving structure map, the
  // contracted family lands in one shared unit-free ring
  bool unit_free = true;
  for (auto& [hl, c] : rules0) unit_free = unit_free && !expoly_has_unit(c);
  for (auto& t : cops)
    for (auto& [k, c] : t.terms()) {
      unit_free = unit_free && !scalar_has_unit(c);
      for (auto& leg : k) unit_free = unit_free && !nckey_has_unit(leg);
    }
  for (auto& x : antis)
    for (auto& [k, c] : x.terms())
      unit_free = unit_free && !scalar_has_unit(c) && !nckey_has_unit(k);
  RingSpec out_ring = unit_free ? RingSpec{ring.param, ring.aux, Scalar::kNoUnit} : ring;

  auto out = std::make_shared<TowerPresentation>(A->name() + "-contracted", out_ring, gens);
  for (auto& [hl, c] : rules0)
    out->set_rule(A->gen(hl.first).name, A->gen(hl.second).name, rebuild_in_ring(c, out_ring));
  out->finalize();
  PresPtr pout = out;

  Morphism cop(pout, {pout, pout});
  Morphism anti(pout, {pout}, true);
  for (int g = 0; g < A->size(); ++g) {
    cop.set_image(A->gen(g).name, tensor_retarget(cops[g], {pout, pout}));
    anti.set_image(A->gen(g).name, nc_retarget(antis[g], pout));
  }
  return HopfPresentation(H.key + "-contracted", pout, cop, anti);
}

}  // namespace qgf
