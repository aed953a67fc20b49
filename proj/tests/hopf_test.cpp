#include "doctest.h"
#include "qgf/errors.hpp"
#include "qgf/hopf.hpp"

using namespace qgf;

namespace {

NCElement gen(const HopfPresentation& h, const std::string& g) {
  return NCElement::generator(h.algebra, g);
}

}  // namespace

TEST_CASE("unknown catalog keys are rejected") {
  CHECK_THROWS_AS(catalog("no-such-entry"), config_error);
}

TEST_CASE("catalog entries validate as solvable towers") {
  for (auto& key : catalog_keys()) {
    auto rep = validate_presentation(catalog(key).algebra);
    INFO(key, ": ", rep.str());
    CHECK(rep.ok());
  }
  CHECK(validate_presentation(nonstandard_cartesian().algebra).ok());
}

TEST_CASE("catalog spot checks against the closed forms") {
  const auto& pk = catalog("uw-iso11-pk");
  auto one = NCElement::one(pk.algebra);
  auto expw = [&](int m) {
    return NCElement::exp_of(pk.algebra, LinForm("P+", Scalar::param(1, Rational(m))));
  };
  // Delta P- = e^{-wP+} (x) P- + P- (x) e^{wP+}
  CHECK(pk.coproduct.image(pk.algebra->index_of("P-")) ==
        TensorElement::outer({expw(-1), gen(pk, "P-")}) +
            TensorElement::outer({gen(pk, "P-"), expw(1)}));

  const auto& fw = catalog("funw-iso11");
  // gamma(a+) = -e^{-2chi} a+
  CHECK(to_nc(fw.antipode.image(fw.algebra->index_of("a+"))) ==
        -(NCElement::exp_of(fw.algebra, LinForm("chi", Scalar(-2))) * gen(fw, "a+")));
  // Delta(a+) collapses to a+ (x) 1 + e^{2chi} (x) a+
  CHECK(fw.coproduct.image(fw.algebra->index_of("a+")) ==
        TensorElement::outer({gen(fw, "a+"), NCElement::one(fw.algebra)}) +
            TensorElement::outer(
                {NCElement::exp_of(fw.algebra, LinForm("chi", Scalar(2))), gen(fw, "a+")}));

  // parabolic bracket [a1, a2] = v(a1 + eps a2)
  const auto& pb = catalog("funv-ck-parabolic");
  auto a1 = gen(pb, "a1"), a2 = gen(pb, "a2"), th = gen(pb, "theta");
  CHECK(commutator(a1, a2) ==
        Scalar::param(1) * a1 + (Scalar::param(1) * Scalar::unit(0)) * a2);
  // [theta, a1] = -v eps theta, [theta, a2] = v(theta - eps theta^2/2)
  CHECK(commutator(th, a1) == (-(Scalar::param(1) * Scalar::unit(0))) * th);
  CHECK(commutator(th, a2) ==
        Scalar::param(1) * th -
            (Scalar::param(1) * Scalar::unit(0, Rational(1, 2))) * (th * th));
}

TEST_CASE("Hopf axioms pass for every catalog entry") {
  for (auto& key : catalog_keys()) {
    const auto& h = catalog(key);
    INFO(key);
    CHECK(check_coassociativity(h, 2).pass);
    CHECK(check_counit(h, 2).pass);
    CHECK(check_antipode(h, 2).pass);
    CHECK(check_bialgebra_compat(h, 2).pass);
  }
  const auto& eu = nonstandard_cartesian();
  CHECK(check_coassociativity(eu, 2).pass);
  CHECK(check_antipode(eu, 2).pass);
}

TEST_CASE("corrupting the coproduct produces a witness") {
  const auto& fw = catalog("funw-iso11");
  auto p = fw.algebra;
  Morphism bad(p, {p, p});
  bad.set_image("chi", fw.coproduct.image(p->index_of("chi")));
  bad.set_image("a-", fw.coproduct.image(p->index_of("a-")));
  // drop the sinh part: cosh 2chi (x) a+ instead of e^{2chi} (x) a+
  auto cosh2 = Scalar(Rational(1, 2)) *
                   (NCElement::exp_of(p, LinForm("chi", Scalar(2))) +
                    NCElement::exp_of(p, LinForm("chi", Scalar(-2))));
  bad.set_image("a+", TensorElement::outer({gen(fw, "a+"), NCElement::one(p)}) +
                          TensorElement::outer({cosh2, gen(fw, "a+")}));
  HopfPresentation corrupted("bad", p, bad, fw.antipode);
  auto res = check_coassociativity(corrupted, 1);
  CHECK(!res.pass);
  CHECK(res.witness.find("a+") != std::string::npos);
}

TEST_CASE("the A-basis antipode is exactly the one derived from the P-basis") {
  const auto& pk = catalog("uw-iso11-pk");
  const auto& ah = catalog("uw-iso11-ah");
  // change of basis: A+ = P+, A- = e^{-wP+} P-, H = e^{wP+} K
  Morphism to_pk(ah.algebra, {pk.algebra});
  to_pk.set_image("A+", gen(pk, "P+"));
  to_pk.set_image("A-", NCElement::exp_of(pk.algebra, LinForm("P+", Scalar::param(1, Rational(-1)))) *
                            gen(pk, "P-"));
  to_pk.set_image("H", NCElement::exp_of(pk.algebra, LinForm("P+", Scalar::param(1))) *
                           gen(pk, "K"));
  Morphism to_ah(pk.algebra, {ah.algebra});
  to_ah.set_image("P+", gen(ah, "A+"));
  to_ah.set_image("P-", NCElement::exp_of(ah.algebra, LinForm("A+", Scalar::param(1))) *
                            gen(ah, "A-"));
  to_ah.set_image("K", NCElement::exp_of(ah.algebra, LinForm("A+", Scalar::param(1, Rational(-1)))) *
                           gen(ah, "H"));
  for (const char* g : {"A-", "A+", "H"}) {
    auto via_pk = to_nc(to_ah.apply(to_nc(pk.antipode.apply(to_nc(to_pk.apply(gen(ah, g)))))));
    CHECK(via_pk == to_nc(ah.antipode.image(ah.algebra->index_of(g))));
  }
}

TEST_CASE("Casimir centrality") {
  const auto& pk = catalog("uw-iso11-pk");
  auto cw = casimir_pk();
  CHECK(check_centrality(pk, cw).pass);
  CHECK(commutator(cw, gen(pk, "P+")).is_zero());

  // perturbing [K, P-] breaks centrality with a witness
  RingSpec W{"w", "lam", Scalar::kNoUnit};
  auto p = std::make_shared<TowerPresentation>(
      "pk-perturbed", W, std::vector<Generator>{{"P-", false}, {"P+", true}, {"K", false}});
  auto e = [&](int m) {
    return ExpPoly::exponential(LinForm("P+", Scalar::param(1, Rational(m))), W);
  };
  p->set_rule("K", "P+", Scalar::param(-1) * (e(1) - e(-1)));
  p->set_rule("K", "P-", Scalar(-2) * ExpPoly::variable("P-", W) * e(1));
  p->finalize();
  PresPtr pp = p;
  HopfPresentation hp("pk-perturbed", pp, pk.coproduct, pk.antipode);
  auto res = check_centrality(hp, nc_retarget(cw, pp));
  CHECK(!res.pass);
  CHECK(!res.witness.empty());
}

TEST_CASE("each Cayley-Klein commutator splits as real + j * real") {
  // expand the (theta, a_i) rules: the j-free and the j-proportional parts
  // must be exactly the real series v(C-1), -vS and vS, -vC2
  for (int s : {-1, 0, 1}) {
    const auto& h = catalog(s == -1  ? "funv-ck-elliptic"
                            : s == 0 ? "funv-ck-parabolic"
                                     : "funv-ck-hyperbolic");
    const auto& A = *h.algebra;
    const RingSpec& R = A.ring();
    ExpPoly C = ck_cosh("theta", R), S = ck_sinh_over_j("theta", R),
            C2 = ck_coshm1_over_j2("theta", R);
    ExpPoly one = ExpPoly::constant(Scalar(1), R);
    Scalar v = Scalar::param(1);
    auto parts = [&](const ExpPoly& e, int D) {
      ExpPoly x = e.expand_series(D);
      ExpPoly re(R), im(R);
      for (auto& [k, c] : x.terms()) {
        re.add_term(c.real_part(), k.first, k.second);
        im.add_term(c.unit_part(), k.first, k.second);
      }
      return std::pair{re, im};
    };
    int D = 6;
    auto [re1, im1] = parts(A.rule(A.index_of("theta"), A.index_of("a1")), D);
    CHECK(re1 == (v * (C - one)).expand_series(D));
    CHECK(im1 == (-(v * S)).expand_series(D));
    CHECK(!re1.depends_on("j"));  // series coefficients are plain rationals
    auto [re2, im2] = parts(A.rule(A.index_of("theta"), A.index_of("a2")), D);
    CHECK(re2 == (v * S).expand_series(D));
    CHECK(im2 == (-(v * C2)).expand_series(D));
  }
}

TEST_CASE("unit substitution reproduces the funw relations for invertible j") {
  CHECK(verify_unit_substitution(1).status == SubstStatus::pass);
  CHECK(verify_unit_substitution(-1).status == SubstStatus::pass);
  CHECK(verify_unit_substitution(0).status == SubstStatus::not_applicable);
}

TEST_CASE("cartesian relations follow from the light-cone ones under theta=-2chi") {
  const auto& fw = catalog("funw-iso11");
  const auto& eu = *nonstandard_cartesian().algebra;
  auto am = gen(fw, "a-"), ap = gen(fw, "a+"), chi = gen(fw, "chi");
  std::map<std::string, NCElement> img{
      {"a1", am + ap}, {"a2", am - ap}, {"theta", Scalar(-2) * chi}};
  std::map<std::string, LinForm> lin{{"theta", LinForm("chi", Scalar(-2))},
                                     {"a1", LinForm("a-", Scalar(1)) + LinForm("a+", Scalar(1))},
                                     {"a2", LinForm("a-", Scalar(1)) + LinForm("a+", Scalar(-1))}};
  for (int h = 0; h < eu.size(); ++h)
    for (int l = 0; l < h; ++l) {
      if (eu.rule(h, l).is_zero()) continue;
      auto lhs = commutator(img.at(eu.gen(h).name), img.at(eu.gen(l).name));
      ExpPoly moved = eu.rule(h, l).substitute_linear(lin);
      CHECK(lhs == NCElement::from_expoly(fw.algebra, moved));
    }
}

TEST_CASE("contraction of both CK families gives one quantum Heisenberg group") {
  std::map<std::string, int> pows{{"a2", 1}, {"theta", 1}};
  auto hyp = contract_presentation(catalog("funv-ck-hyperbolic"), pows, 1, 0);
  auto ell = contract_presentation(catalog("funv-ck-elliptic"), pows, 1, 0);

  const auto& A = *hyp.algebra;
  // [theta', a1'] = 0, [theta', a2'] = v' theta', [a1', a2'] = v' a1'
  CHECK(A.rule(A.index_of("theta"), A.index_of("a1")).is_zero());
  CHECK(A.rule(A.index_of("theta"), A.index_of("a2")) ==
        Scalar::param(1) * ExpPoly::variable("theta", A.ring()));
  CHECK(A.rule(A.index_of("a2"), A.index_of("a1")) ==
        -(Scalar::param(1) * ExpPoly::variable("a1", A.ring())));

  // identical presentations from both families
  const auto& B = *ell.algebra;
  for (int h = 0; h < A.size(); ++h)
    for (int l = 0; l < h; ++l) CHECK(A.rule(h, l) == B.rule(h, l));
  for (int g = 0; g < A.size(); ++g) {
    CHECK(tensor_retarget(hyp.coproduct.image(g), ell.coproduct.target_legs()) ==
          ell.coproduct.image(g));
    CHECK(nc_retarget(to_nc(hyp.antipode.image(g)), ell.algebra) ==
          to_nc(ell.antipode.image(g)));
  }
  // the contracted structure is again a Hopf algebra
  CHECK(check_coassociativity(hyp, 2).pass);
  CHECK(check_counit(hyp, 2).pass);
  CHECK(check_antipode(hyp, 2).pass);
  CHECK(validate_presentation(hyp.algebra).ok());

  // trivial rescaling leaves everything in place
  auto same = contract_presentation(catalog("funv-ck-hyperbolic"), {}, 0, 0);
  const auto& C = *same.algebra;
  const auto& orig = *catalog("funv-ck-hyperbolic").algebra;
  for (int h = 0; h < C.size(); ++h)
    for (int l = 0; l < h; ++l) CHECK(C.rule(h, l) == orig.rule(h, l));

  // rescaling a1 alone diverges
  CHECK_THROWS_AS(
      contract_presentation(catalog("funv-ck-hyperbolic"), {{"a1", 1}}, 0, 0),
      divergent_limit_error);
}
