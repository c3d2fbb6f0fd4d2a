#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "myc/errors.hpp"
#include "myc/formulas.hpp"
#include "myc/homotopy.hpp"
#include "myc/sphere_wedge.hpp"

#include "oracles.hpp"

namespace fm = myc::formulas;
using myc::evaluate;
using myc::ExprPtr;
using myc::expr_to_string;
using myc::SphereWedge;

namespace {

SphereWedge sw(int dim, long long mult = 1) {
  return SphereWedge::sphere(dim, mult);
}

SphereWedge vee(const SphereWedge& a, const SphereWedge& b) {
  return SphereWedge::wedge(a, b);
}

std::map<std::string, SphereWedge> k2_atoms() {
  // I(K_2) = S^0 and I(K_2 x K_2) = I(two disjoint edges) = S^1
  return {{fm::kAtomBase, sw(0)}, {fm::kAtomCover, sw(1)}};
}

// A single random sphere with bounded multiplicity. The deep iterated forms
// raise their atoms to join powers in the dozens, where multi-summand
// bindings make the expanded multiplicities multinomial (and overflow 64
// bits); a single summand keeps them at mult^power.
SphereWedge single_sphere(testutil::Rng& rng, long long max_mult) {
  const int dim = static_cast<int>(rng.range(-1, 3));
  return SphereWedge::sphere(dim, dim == -1 ? 1 : rng.range(1, max_mult));
}

}  // namespace

TEST_CASE("counting helpers: sums equal closed forms") {
  CHECK(fm::f_sum(1, 3) == 13);  // 1 + 3 + 9
  CHECK(fm::g_sum(1, 2) == 5);   // 1 + 4
  CHECK(fm::f_sum(0, 4) == 4);
  CHECK(fm::g_sum(0, 3) == 7);   // 1 + 2 + 4
  CHECK(fm::f_sum(2, 0) == 0);
  CHECK(fm::g_sum(2, 0) == 0);
  for (long long k = 0; k <= 5; ++k)
    for (long long r = 0; r <= 6; ++r) {
      CHECK(fm::f_sum(k, r) == fm::f_closed(k, r));
      CHECK(fm::g_sum(k, r) == fm::g_closed(k, r));
    }
  CHECK_THROWS_AS(fm::f_sum(-1, 2), myc::error);
}

TEST_CASE("the four counting identities hold exactly") {
  for (long long k = 0; k <= 5; ++k)
    for (long long r = 0; r <= 6; ++r) {
      CAPTURE(k);
      CAPTURE(r);
      CHECK(fm::identity_f_closed(k, r));
      CHECK(fm::identity_g_closed(k, r));
      CHECK(fm::identity_f_partial_sum(k, r));
      CHECK(fm::identity_g_shift(k, r));
    }
}

TEST_CASE("main structure expression, level by level") {
  CHECK(expr_to_string(fm::mycielskian_expr(0)) ==
        "wedge(join(A, empty), susp(empty, 1))");
  CHECK(expr_to_string(fm::mycielskian_expr(1)) == "susp(join(A, empty), 1)");
  CHECK(expr_to_string(fm::mycielskian_expr(2)) == "B");
  CHECK(expr_to_string(fm::mycielskian_expr(3)) ==
        "wedge(join(A, B), susp(B, 1))");
  CHECK(expr_to_string(fm::mycielskian_expr(5)) == "join(B, B)");
  CHECK(expr_to_string(fm::mycielskian_expr(7)) ==
        "susp(join(A, join(B, B)), 1)");
  CHECK_THROWS_AS(fm::mycielskian_expr(-1), myc::error);
}

TEST_CASE("main theorem on complete-graph atoms reproduces the kn family") {
  // I(K_n) = n points = (n-1) S^0; I(K_n x K_2) is two (n-1)-simplices
  // bridged by n edges, a wedge of (n-1) circles.
  for (long long n = 2; n <= 5; ++n) {
    std::map<std::string, SphereWedge> atoms{
        {fm::kAtomBase, sw(0, n - 1)}, {fm::kAtomCover, sw(1, n - 1)}};
    for (long long l = 0; l <= 7; ++l) {
      CAPTURE(n);
      CAPTURE(l);
      CHECK(evaluate(fm::mycielskian_expr(l), atoms) == fm::kn_formula(n, l));
    }
  }
}

TEST_CASE("main theorem on product atoms reproduces the knkm family") {
  // I(K_n x K_m) = (n-1)(m-1) circles; the double cover contributes
  // W = (n-1)(m-1)(nm-2)/2 three-spheres.
  for (long long n = 2; n <= 4; ++n)
    for (long long m = 2; m <= 4; ++m) {
      const long long w = (n - 1) * (m - 1) * (n * m - 2) / 2;
      std::map<std::string, SphereWedge> atoms{
          {fm::kAtomBase, sw(1, (n - 1) * (m - 1))}, {fm::kAtomCover, sw(3, w)}};
      for (long long l = 0; l <= 7; ++l) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(l);
        CHECK(evaluate(fm::mycielskian_expr(l), atoms) ==
              fm::knkm_formula(n, m, l));
      }
    }
}

TEST_CASE("kn family: spot values and validation") {
  CHECK(fm::kn_formula(3, 2) == sw(1, 2));
  CHECK(fm::kn_formula(2, 0) == sw(0, 2));
  CHECK(fm::kn_formula(4, 3) == sw(2, 12));
  CHECK(fm::kn_formula(2, 1) == sw(1));
  CHECK_THROWS_AS(fm::kn_formula(1, 0), myc::error);
  CHECK_THROWS_AS(fm::kn_formula(3, -1), myc::error);
}

TEST_CASE("knkm family: spot values and validation") {
  CHECK(fm::knkm_formula(2, 2, 0) == vee(sw(0), sw(1)));
  CHECK(fm::knkm_formula(2, 3, 0) == vee(sw(0), sw(1, 2)));
  CHECK(fm::knkm_formula(2, 3, 1) == sw(2, 2));
  CHECK(fm::knkm_formula(2, 3, 2) == sw(3, 4));
  CHECK_THROWS_AS(fm::knkm_formula(1, 3, 0), myc::error);
}

TEST_CASE("cn family: table cells, both variants") {
  using V = fm::CnVariant;
  // cells where the variants coincide
  CHECK(fm::cn_formula(7, 1) == sw(2));
  CHECK(fm::cn_formula(7, 1, V::Derived) == sw(2));
  CHECK(fm::cn_formula(6, 3) == vee(sw(4, 4), sw(5, 8)));
  CHECK(fm::cn_formula(6, 3, V::Derived) == vee(sw(4, 4), sw(5, 8)));
  CHECK(fm::cn_formula(9, 2) == sw(5, 2));
  CHECK(fm::cn_formula(8, 1) == sw(3));
  CHECK(fm::cn_formula(12, 3) == vee(sw(8, 4), sw(11, 8)));
  CHECK(fm::cn_formula(11, 5) == sw(13));
  // the refuted cell: row n = 6r+1, column l = 3k+2
  CHECK(fm::cn_formula(7, 2, V::Printed) == sw(5));
  CHECK(fm::cn_formula(7, 2, V::Derived) == sw(4));
  CHECK(fm::cn_formula(13, 5, V::Printed) == sw(19));
  CHECK(fm::cn_formula(13, 5, V::Derived) == sw(17));
  // C_3 = K_3, so the cycle table must agree with the complete-graph family
  for (long long l = 1; l <= 9; ++l) {
    CHECK(fm::cn_formula(3, l, V::Printed) == fm::kn_formula(3, l));
    CHECK(fm::cn_formula(3, l, V::Derived) == fm::kn_formula(3, l));
  }
  CHECK_THROWS_AS(fm::cn_formula(7, 0), myc::error);
  CHECK_THROWS_AS(fm::cn_formula(2, 1), myc::error);
}

TEST_CASE("cn family: variants diverge exactly in one cell class") {
  for (long long n = 3; n <= 20; ++n)
    for (long long l = 1; l <= 9; ++l) {
      CAPTURE(n);
      CAPTURE(l);
      const bool divergent = fm::cn_formula(n, l, fm::CnVariant::Printed) !=
                             fm::cn_formula(n, l, fm::CnVariant::Derived);
      CHECK(divergent == (n % 6 == 1 && l % 3 == 2));
    }
}

TEST_CASE("pn family: spot values, both variants") {
  using V = fm::PnVariant;
  CHECK(fm::pn_formula(5, 3) == vee(sw(4), sw(5)));
  CHECK(fm::pn_formula(5, 3, V::Printed) == vee(sw(3), sw(5)));
  CHECK(fm::pn_formula(4, 0) == sw(0));
  CHECK(fm::pn_formula(4, 0, V::Printed).is_contractible);
  CHECK(fm::pn_formula(2, 0) == sw(0, 2));
  CHECK(fm::pn_formula(2, 0, V::Printed) == vee(sw(0), sw(1)));
  // n = 3r+1 rows are contractible for every l >= 1 in both variants
  for (long long l = 1; l <= 6; ++l) {
    CHECK(fm::pn_formula(7, l, V::Printed).is_contractible);
    CHECK(fm::pn_formula(7, l, V::Derived).is_contractible);
  }
  CHECK(fm::pn_formula(7, 0, V::Derived) == sw(0));
  // P_2 = K_2: the derived path family must agree with the complete family
  for (long long l = 0; l <= 8; ++l)
    CHECK(fm::pn_formula(2, l, V::Derived) == fm::kn_formula(2, l));
  // ...while the printed form contradicts it at l = 0
  CHECK(fm::pn_formula(2, 0, V::Printed) != fm::kn_formula(2, 0));
  CHECK_THROWS_AS(fm::pn_formula(0, 1), myc::error);
}

TEST_CASE("pn family: exact divergence cells in a window") {
  std::set<std::pair<long long, long long>> divergent;
  for (long long n = 1; n <= 8; ++n)
    for (long long l = 0; l <= 6; ++l)
      if (fm::pn_formula(n, l, fm::PnVariant::Printed) !=
          fm::pn_formula(n, l, fm::PnVariant::Derived))
        divergent.insert({n, l});
  const std::set<std::pair<long long, long long>> expected{
      {1, 0}, {2, 0}, {2, 6}, {3, 0}, {3, 6}, {4, 0},
      {5, 0}, {5, 3}, {5, 6}, {6, 0}, {6, 3}, {6, 6},
      {7, 0}, {8, 0}, {8, 3}, {8, 6}};
  CHECK(divergent == expected);
  // note n in {2,3} at l = 3: there the two second-sphere dimensions
  // coincide (k = r = 1), so those cells are *not* divergent
  CHECK(fm::pn_formula(2, 3, fm::PnVariant::Printed) ==
        fm::pn_formula(2, 3, fm::PnVariant::Derived));
}

TEST_CASE("cover structure expression, level by level") {
  using V = fm::CoverVariant;
  CHECK(expr_to_string(fm::cover_mycielskian_expr(0)) ==
        "wedge(B, susp(empty, 2))");
  CHECK(expr_to_string(fm::cover_mycielskian_expr(1)) == "susp(B, 1)");
  CHECK(expr_to_string(fm::cover_mycielskian_expr(2, V::Derived)) ==
        "susp(join(B, B), 1)");
  CHECK(expr_to_string(fm::cover_mycielskian_expr(2, V::Printed)) ==
        "susp(join(B, B), 2)");
  CHECK(expr_to_string(fm::cover_mycielskian_expr(3)) ==
        "wedge(join(B, B, B), susp(join(B, B), 2))");

  std::map<std::string, SphereWedge> b1{{fm::kAtomCover, sw(1)}};
  CHECK(evaluate(fm::cover_mycielskian_expr(0), b1) == sw(1, 2));
  CHECK(evaluate(fm::cover_mycielskian_expr(1), b1) == sw(2));
  CHECK(evaluate(fm::cover_mycielskian_expr(2, V::Derived), b1) == sw(4));
  CHECK(evaluate(fm::cover_mycielskian_expr(2, V::Printed), b1) == sw(5));
  CHECK(evaluate(fm::cover_mycielskian_expr(3), b1) == sw(5, 2));
}

TEST_CASE("iterated recursion: base cases and two-edge evaluations") {
  CHECK(expr_to_string(fm::iterated_expr(3, 0)) == "A");
  CHECK(expr_to_string(fm::iterated_cover_expr(3, 0)) == "B");
  const auto atoms = k2_atoms();
  CHECK(evaluate(fm::iterated_expr(3, 2), atoms) == vee(sw(8, 4), sw(6, 2)));
  CHECK(evaluate(fm::iterated_expr(1, 3), atoms) == sw(3));
  CHECK(evaluate(fm::iterated_expr(2, 2), atoms) == sw(4));
  CHECK(evaluate(fm::iterated_expr(0, 2), atoms) == sw(0, 3));
  CHECK(evaluate(fm::iterated_cover_expr(2, 1, fm::CoverVariant::Derived),
                 atoms) == sw(4));
  CHECK(evaluate(fm::iterated_cover_expr(2, 1, fm::CoverVariant::Printed),
                 atoms) == sw(5));
  CHECK_THROWS_AS(fm::iterated_expr(3, -1), myc::error);
}

TEST_CASE("closed iterated form: derived reading matches the recursion") {
  testutil::Rng rng(172);
  for (long long l : {1LL, 2LL, 4LL, 5LL, 7LL, 8LL}) {
    // r = 1 must reduce to the single-step structure theorem
    for (int trial = 0; trial < 10; ++trial) {
      std::map<std::string, SphereWedge> b{
          {fm::kAtomBase, testutil::random_wedge(rng)},
          {fm::kAtomCover, testutil::random_wedge(rng)}};
      CAPTURE(l);
      CHECK(testutil::eval_outcome(fm::iterated_closed_expr(l, 1), b) ==
            testutil::eval_outcome(fm::mycielskian_expr(l), b));
    }
  }
  for (long long l : {1LL, 2LL, 4LL, 5LL}) {
    for (long long r = 1; r <= 3; ++r) {
      CAPTURE(l);
      CAPTURE(r);
      CHECK(evaluate(fm::iterated_closed_expr(l, r), k2_atoms()) ==
            evaluate(fm::iterated_expr(l, r), k2_atoms()));
      for (int trial = 0; trial < 5; ++trial) {
        // r = 3 reaches join powers above 30; see single_sphere.
        std::map<std::string, SphereWedge> b{
            {fm::kAtomBase, testutil::random_wedge(rng)},
            {fm::kAtomCover, r < 3 ? testutil::random_wedge(rng)
                                   : single_sphere(rng, 2)}};
        CHECK(testutil::eval_outcome(fm::iterated_closed_expr(l, r), b) ==
              testutil::eval_outcome(fm::iterated_expr(l, r), b));
      }
    }
  }
  CHECK_THROWS_AS(fm::iterated_closed_expr(3, 1), myc::error);
  CHECK_THROWS_AS(fm::iterated_closed_expr(0, 1), myc::error);
  CHECK_THROWS_AS(fm::iterated_closed_expr(1, 0), myc::error);
}

TEST_CASE("closed iterated form: the printed readings split at the witness") {
  using R = fm::ClosedReading;
  const auto atoms = k2_atoms();
  // l = 1, r = 3: the two printed operator-precedence readings give S^6 and
  // S^4; the derived form gives S^3, which is what brute force computes.
  CHECK(evaluate(fm::iterated_closed_expr(1, 3, R::PrintedTimesFPlusOne),
                 atoms) == sw(6));
  CHECK(evaluate(fm::iterated_closed_expr(1, 3, R::PrintedTimesFPlusOneInside),
                 atoms) == sw(4));
  CHECK(evaluate(fm::iterated_closed_expr(1, 3, R::Derived), atoms) == sw(3));
  // l = 2, r = 2: printed suspension count g(k,r+1) gives S^6; derived
  // g(k,r) gives S^4 (confirmed by brute force).
  CHECK(evaluate(fm::iterated_closed_expr(2, 2, R::PrintedTimesFPlusOne),
                 atoms) == sw(6));
  CHECK(evaluate(fm::iterated_closed_expr(2, 2, R::Derived), atoms) == sw(4));
}

TEST_CASE("closed cover form is self-consistent per variant") {
  testutil::Rng rng(555);
  for (auto v : {fm::CoverVariant::Printed, fm::CoverVariant::Derived})
    for (long long l : {1LL, 2LL, 4LL, 5LL})
      for (long long r = 1; r <= 3; ++r)
        for (int trial = 0; trial < 5; ++trial) {
          // r = 3 reaches join power (2k+2)^3 = 64; multiplicity must stay
          // at 1 for 64-bit counts (see single_sphere).
          std::map<std::string, SphereWedge> b{
              {fm::kAtomCover, r < 3 ? testutil::random_wedge(rng)
                                     : single_sphere(rng, 1)}};
          CAPTURE(l);
          CAPTURE(r);
          CHECK(testutil::eval_outcome(fm::iterated_cover_closed_expr(l, r, v),
                                       b) ==
                testutil::eval_outcome(fm::iterated_cover_expr(l, r, v), b));
        }
  // the variants themselves disagree at l = 3k+2
  std::map<std::string, SphereWedge> b1{{fm::kAtomCover, sw(1)}};
  CHECK(evaluate(fm::iterated_cover_closed_expr(2, 1, fm::CoverVariant::Printed),
                 b1) == sw(5));
  CHECK(evaluate(fm::iterated_cover_closed_expr(2, 1, fm::CoverVariant::Derived),
                 b1) == sw(4));
  CHECK_THROWS_AS(fm::iterated_cover_closed_expr(3, 1), myc::error);
}

TEST_CASE("level-0 and level-1 specializations match the recursion") {
  CHECK(expr_to_string(fm::mu0_iterated_expr(2)) == "wedge(A, S(0), S(0))");
  CHECK(expr_to_string(fm::mu1_iterated_expr(3)) == "susp(A, 3)");
  testutil::Rng rng(808);
  for (long long r = 0; r <= 4; ++r)
    for (int trial = 0; trial < 8; ++trial) {
      std::map<std::string, SphereWedge> b{
          {fm::kAtomBase, testutil::random_wedge(rng)},
          {fm::kAtomCover, testutil::random_wedge(rng)}};
      CAPTURE(r);
      CHECK(testutil::eval_outcome(fm::mu0_iterated_expr(r), b) ==
            testutil::eval_outcome(fm::iterated_expr(0, r), b));
      CHECK(testutil::eval_outcome(fm::mu1_iterated_expr(r), b) ==
            testutil::eval_outcome(fm::iterated_expr(1, r), b));
    }
}

TEST_CASE("bipartite proposition substitutes the self-join for the cover") {
  for (long long l = 0; l <= 8; ++l) {
    ExprPtr direct = fm::bipartite_expr(l);
    ExprPtr manual = myc::substitute(
        fm::mycielskian_expr(l),
        {{fm::kAtomCover,
          myc::make_join({myc::make_atom(fm::kAtomBase),
                          myc::make_atom(fm::kAtomBase)})}});
    CHECK(expr_to_string(direct) == expr_to_string(manual));
    CHECK(myc::atoms_of(direct) == std::vector<std::string>{fm::kAtomBase});
  }
  std::map<std::string, SphereWedge> a0{{fm::kAtomBase, sw(0)}};
  CHECK(evaluate(fm::bipartite_expr(0), a0) == sw(0, 2));
  CHECK(evaluate(fm::bipartite_expr(1), a0) == sw(1));
}

TEST_CASE("two-step display: derived batch is the suspended cover power") {
  // The displayed expansion is four explicit leading summands plus the
  // binomial batch; the batch (in its derived form) must be exactly what
  // Susp(coverExpr(3k)^{*k}) multiplies out to, for every k.
  testutil::Rng rng(31337);
  for (long long k = 1; k <= 3; ++k) {
    ExprPtr a = myc::make_atom(fm::kAtomBase);
    ExprPtr b = myc::make_atom(fm::kAtomCover);
    ExprPtr expected = myc::make_wedge(
        {myc::make_join({a, myc::join_power(b, 3 * k + 1)}),
         myc::make_susp(myc::make_join({a, myc::join_power(b, 3 * k)}), 2),
         myc::make_susp(myc::join_power(b, 3 * k + 1), 1),
         myc::make_susp(myc::join_power(b, 3 * k), 3),
         myc::make_susp(
             myc::join_power(
                 fm::cover_mycielskian_expr(3 * k, fm::CoverVariant::Derived),
                 k),
             1)});
    for (int trial = 0; trial < 8; ++trial) {
      // The compact form wedges B^{*(2k+1)} against a suspension inside the
      // cover expression, so binding B to the lone (-1)-sphere makes that
      // intermediate wedge invalid even though the distributed display is
      // perfectly evaluable (checked separately below). Keep B off S^(-1)
      // here so both sides are defined.
      SphereWedge cover = testutil::random_wedge(rng);
      while (cover == SphereWedge::sphere(-1))
        cover = testutil::random_wedge(rng);
      std::map<std::string, SphereWedge> bind{
          {fm::kAtomBase, testutil::random_wedge(rng)},
          {fm::kAtomCover, cover}};
      CAPTURE(k);
      CHECK(testutil::eval_outcome(fm::two_step_display_expr(k, true), bind) ==
            testutil::eval_outcome(expected, bind));
    }
    // The asymmetry itself, pinned: B = S^(-1) kills the compact form but
    // the display distributes the suspensions first and stays defined.
    std::map<std::string, SphereWedge> edge{
        {fm::kAtomBase, sw(0)}, {fm::kAtomCover, SphereWedge::sphere(-1)}};
    CHECK(testutil::eval_outcome(expected, edge).invalid);
    CHECK_FALSE(
        testutil::eval_outcome(fm::two_step_display_expr(k, true), edge)
            .invalid);
  }
  // at k = 1 the whole display equals the two-step recursion, and the
  // printed batch exponent produces a different wedge
  const auto atoms = k2_atoms();
  CHECK(evaluate(fm::two_step_display_expr(1, true), atoms) ==
        vee(sw(8, 4), sw(6, 2)));
  CHECK(evaluate(fm::two_step_display_expr(1, true), atoms) ==
        evaluate(fm::iterated_expr(3, 2), atoms));
  CHECK(evaluate(fm::two_step_display_expr(1, false), atoms) ==
        vee(sw(8, 4), sw(4, 2)));
}

TEST_CASE("formula identifiers round trip") {
  using fm::FormulaId;
  const std::vector<std::pair<FormulaId, std::string>> all{
      {FormulaId::MainMu, "main-mu"},       {FormulaId::CoverMu, "cover-mu"},
      {FormulaId::Iter, "iter"},            {FormulaId::IterClosed, "iter-closed"},
      {FormulaId::IterCover, "iter-cover"}, {FormulaId::Mu01, "mu01"},
      {FormulaId::Bipartite, "bipartite"},  {FormulaId::Kn, "kn"},
      {FormulaId::Knkm, "knkm"},            {FormulaId::Cn, "cn"},
      {FormulaId::Pn, "pn"}};
  for (const auto& [id, name] : all) {
    CHECK(fm::formula_name(id) == name);
    REQUIRE(fm::formula_from_name(name).has_value());
    CHECK(*fm::formula_from_name(name) == id);
  }
  CHECK_FALSE(fm::formula_from_name("nope").has_value());
  CHECK_FALSE(fm::formula_from_name("KN").has_value());
}
