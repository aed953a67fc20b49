#include <random>

#include "doctest.h"
#include "qgf/poissonlie.hpp"

using namespace qgf;

namespace {
const RingSpec W{"w", "lam", Scalar::kNoUnit};
}

TEST_CASE("invariant fields close on the structure constants") {
  auto iso = check_field_closure(iso11_recipe());
  CHECK(iso.pass);
  CHECK(iso.left_sign == 1);
  CHECK(iso.right_sign == -1);
  auto sb = check_field_closure(sb2_recipe());
  CHECK(sb.pass);
  CHECK(sb.left_sign == 1);
  CHECK(sb.right_sign == -1);
}

TEST_CASE("Sklyanin bracket on the coordinates") {
  auto R = iso11_recipe();
  auto var = [&](const char* v) { return ExpPoly::variable(v, W); };
  // {chi, a+} = w(e^{2chi} - 1)
  CHECK(sklyanin_bracket(R, var("chi"), var("a+")) ==
        Scalar::param(1) * (ExpPoly::exponential(LinForm("chi", Scalar(2)), W) -
                            ExpPoly::constant(Scalar(1), W)));
  // {a+, a-} = -2w a-
  CHECK(sklyanin_bracket(R, var("a+"), var("a-")) ==
        Scalar::param(1, Rational(-2)) * var("a-"));
  // {f, f} = 0
  ExpPoly f = var("a+") * var("chi") + Scalar(3) * var("a-");
  CHECK(sklyanin_bracket(R, f, f).is_zero());
}

TEST_CASE("bracket tables reproduce the displayed Poisson structures") {
  auto iso = bracket_table(iso11_recipe());
  auto want_iso = expected_table_iso();
  CHECK(iso.coords == want_iso.coords);
  CHECK(iso.table == want_iso.table);

  auto sb = bracket_table(sb2_recipe());
  auto want_sb = expected_table_sb2();
  CHECK(sb.coords == want_sb.coords);
  CHECK(sb.table == want_sb.table);

  // zero r-matrix gives the zero table
  auto R = iso11_recipe();
  R.r = RMatrixElem(R.algebra.dim());
  CHECK(bracket_table(R).table.empty());
}

TEST_CASE("adding a Casimir-type symmetric part to r changes nothing") {
  auto R = iso11_recipe();
  auto with_sym = R;
  int pp = R.algebra.index_of("P+"), pm = R.algebra.index_of("P-");
  with_sym.r.at(pp, pm) += Scalar(5);
  with_sym.r.at(pm, pp) += Scalar(5);
  CHECK(bracket_table(with_sym).table == bracket_table(R).table);
}

TEST_CASE("Jacobi identity for both tables, and a corrupted table fails") {
  CHECK(check_jacobi(expected_table_iso()).pass);
  CHECK(check_jacobi(expected_table_sb2()).pass);

  auto bad = expected_table_iso();
  bad.table[{0, 2}] = ExpPoly::variable("a-", W);  // {a-, chi} := a-
  auto res = check_jacobi(bad);
  CHECK(!res.pass);
  CHECK(!res.witness.empty());
}

TEST_CASE("Poisson brackets are antisymmetric and Leibniz on random pairs") {
  auto P = expected_table_iso();
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(0, 2), deg(0, 2), coef(-2, 2);
  auto rnd = [&]() {
    ExpPoly f(W);
    for (int t = 0; t < 2; ++t) {
      Monomial m;
      if (int d1 = deg(rng)) m["a-"] = d1;
      if (int d2 = deg(rng) - 1; d2 > 0) m["a+"] = d2;
      LinForm L;
      if (pick(rng) == 0) L.add("chi", Scalar(2));
      int c = coef(rng);
      f.add_term(Scalar(c ? c : 1), m, L);
    }
    return f;
  };
  for (int i = 0; i < 50; ++i) {
    ExpPoly f = rnd(), g = rnd(), h = rnd();
    CHECK(poisson_bracket(P, f, g) == -poisson_bracket(P, g, f));
    CHECK(poisson_bracket(P, f, g * h) ==
          poisson_bracket(P, f, g) * h + g * poisson_bracket(P, f, h));
  }
}

TEST_CASE("Weyl correspondence: tables and coproducts match literally") {
  auto iso = check_weyl_correspondence_iso();
  INFO(iso.witness);
  CHECK(iso.pass);
  auto sb = check_weyl_correspondence_sb2();
  INFO(sb.witness);
  CHECK(sb.pass);

  // a perturbed quantum relation no longer matches
  auto table = expected_table_iso();
  ExpPoly doubled = Scalar(2) * table.entry(1, 2);
  CHECK(doubled != table.entry(1, 2));
}

TEST_CASE("the group-law coproduct is a Poisson map") {
  CHECK(check_poisson_hopf(expected_table_iso(), classical_coproduct_iso()).pass);
  CHECK(check_poisson_hopf(expected_table_sb2(), classical_coproduct_sb2()).pass);

  // zero bracket with any group law passes
  PoissonStructure zero{W, {"a-", "a+", "chi"}, {}};
  CHECK(check_poisson_hopf(zero, classical_coproduct_iso()).pass);
}
