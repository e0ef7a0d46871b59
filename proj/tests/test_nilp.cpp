#include <set>

#include "doctest.h"
#include "wred/nilp.hpp"
#include "wred/rep.hpp"
#include "wred/uenv.hpp"

using namespace wred;

TEST_CASE("principal triples and gradings") {
  {
    auto rs = build_root_system("A1");
    auto cb = build_chevalley(rs);
    auto nd = principal_triple(cb);
    auto dg = dynkin_grading(cb, nd);
    CHECK(dg.centralizer_e.size() == 1);
    CHECK(dg.kazhdan_deg2 == std::vector<int>{4});  // degree 2
    CHECK(dg.g_half.empty());
  }
  {
    auto rs = build_root_system("A2");
    auto cb = build_chevalley(rs);
    auto nd = principal_triple(cb);
    // f coefficients are (2, 2)
    for (const auto& [b, c] : nd.f) CHECK(c == Rat(2));
    auto dg = dynkin_grading(cb, nd);
    CHECK(dg.pieces.at(2).size() == 2);   // dim g_1 = 2
    CHECK(dg.pieces.at(4).size() == 1);   // dim g_2 = 1
    CHECK(dg.centralizer_e.size() == 2);
    CHECK(dg.kazhdan_deg2 == std::vector<int>{4, 6});  // degrees {2, 3}
  }
  {
    auto rs = build_root_system("B2");
    auto cb = build_chevalley(rs);
    auto dg = dynkin_grading(cb, principal_triple(cb));
    CHECK(dg.g_half.empty());  // even grading
    CHECK(dg.centralizer_e.size() == 2);
    CHECK(dg.kazhdan_deg2 == std::vector<int>{4, 8});  // degrees {2, 4}
  }
}

TEST_CASE("grading compatibility [g_i, g_j] in g_{i+j}") {
  for (const auto& label : {std::string("A2"), std::string("B2"), std::string("G2")}) {
    auto rs = build_root_system(label);
    auto cb = build_chevalley(rs);
    for (bool minimal : {false, true}) {
      auto nd = minimal ? minimal_triple(cb) : principal_triple(cb);
      auto dg = dynkin_grading(cb, nd);
      CAPTURE(label);
      for (int a = 0; a < cb.dim; ++a)
        for (int b = 0; b < cb.dim; ++b)
          for (const auto& [k, c] : cb.bracket(a, b))
            CHECK(dg.twoj[k] == dg.twoj[a] + dg.twoj[b]);
    }
  }
}

TEST_CASE("type A partition triples") {
  {
    auto rs = build_root_system("A1");
    auto cb = build_chevalley(rs);
    auto nd = sl2_triple_typeA(cb, {2});
    auto pr = principal_triple(cb);
    CHECK(nd.e == pr.e);
    CHECK(nd.h == pr.h);
    CHECK(nd.f == pr.f);
  }
  {
    auto rs = build_root_system("A2");
    auto cb = build_chevalley(rs);
    auto nd = sl2_triple_typeA(cb, {2, 1});
    auto dg = dynkin_grading(cb, nd);
    CHECK(dg.g_half.size() == 2);
    CHECK(dg.g_ge1.size() == 1);
    CHECK(dg.centralizer_e.size() == 4);
    // [3] matches the principal grading dimensions
    auto nd3 = sl2_triple_typeA(cb, {3});
    auto dg3 = dynkin_grading(cb, nd3);
    auto dgp = dynkin_grading(cb, principal_triple(cb));
    for (const auto& [twoj, piece] : dgp.pieces)
      CHECK(dg3.pieces.at(twoj).size() == piece.size());
    // minimal_triple is conjugate to [2,1]: same grading dimensions
    auto ndm = minimal_triple(cb);
    auto dgm = dynkin_grading(cb, ndm);
    for (const auto& [twoj, piece] : dgm.pieces)
      CHECK(dg.pieces.at(twoj).size() == piece.size());
  }
  {
    auto rs = build_root_system("A3");
    auto cb = build_chevalley(rs);
    auto nd = sl2_triple_typeA(cb, {2, 2});
    auto dg = dynkin_grading(cb, nd);
    CHECK(dg.centralizer_e.size() == 4 + 3);  // dim g^e = n^2/2 + ... = 7 for [2,2]
    CHECK_THROWS_AS(sl2_triple_typeA(cb, {3, 2}), math_error);
  }
}

TEST_CASE("half form and lagrangians on A2 minimal") {
  auto rs = build_root_system("A2");
  auto cb = build_chevalley(rs);
  auto nd = minimal_triple(cb);
  auto dg = dynkin_grading(cb, nd);
  REQUIRE(dg.g_half.size() == 2);
  SRow x{{dg.g_half[0], Rat(1)}}, y{{dg.g_half[1], Rat(1)}};
  Rat v = half_form(cb, dg, nd, x, y);
  CHECK(v != 0);                                   // nondegenerate (Pfaffian)
  CHECK(half_form(cb, dg, nd, y, x) == -v);        // antisymmetry
  CHECK(half_form(cb, dg, nd, x, x) == 0);
  CHECK_THROWS_AS(half_form(cb, dg, nd, nd.e, y), math_error);

  auto l = lagrangian(cb, dg, nd, false);
  auto l2 = lagrangian(cb, dg, nd, true);
  REQUIRE(l.size() == 1);
  REQUIRE(l2.size() == 1);
  CHECK(half_form(cb, dg, nd, l[0], l[0]) == 0);
  CHECK(half_form(cb, dg, nd, l[0], l2[0]) != 0);  // genuinely distinct

  // chi restricted to m = l + g_{>=1} is a character
  std::vector<SRow> mbasis = l;
  for (int b : dg.g_ge1) mbasis.push_back(SRow{{b, Rat(1)}});
  for (const auto& a : mbasis)
    for (const auto& b : mbasis) {
      Rat val(0);
      for (const auto& [k, c] : cb.bracket_vec(a, b)) val += c * nd.chi[k];
      CHECK(val == 0);
    }

  // principal case: zero-dimensional g_{1/2}
  auto dgp = dynkin_grading(cb, principal_triple(cb));
  CHECK(lagrangian(cb, dgp, principal_triple(cb)).empty());
}

TEST_CASE("kk bracket: Leibniz, Jacobi, Casimir") {
  auto rs = build_root_system("A1");
  auto cb = build_chevalley(rs);
  int f = cb.idx_neg(0), h = cb.idx_cartan(0), e = cb.idx_pos(0);
  auto X = [&](int i) { return Poly::variable(cb.dim, i); };

  // linear brackets reproduce the Lie bracket
  Poly he = kk_bracket(cb, X(h), X(e));
  CHECK(he == X(e) * Rat(2));

  // {ef, h} = 0
  Poly ef = X(e) * X(f);
  CHECK(kk_bracket(cb, ef, X(h)).is_zero());

  // Casimir polynomial Poisson-commutes with all linear functions
  Poly cas = X(e) * X(f) + X(h) * X(h) * Rat(1, 2);
  for (int g : {e, f, h}) CHECK(kk_bracket(cb, cas, X(g)).is_zero());

  // Leibniz: {p, qr} = {p,q}r + q{p,r} on a random-ish triple
  Poly p = X(e) * X(h), q = X(f), r = X(h) + X(e);
  Poly lhs = kk_bracket(cb, p, q * r);
  Poly rhs = kk_bracket(cb, p, q) * r + q * kk_bracket(cb, p, r);
  CHECK(lhs == rhs);

  // Jacobi
  Poly a = X(e) * X(f), b = X(h) * X(h), c = X(f);
  Poly jac = kk_bracket(cb, a, kk_bracket(cb, b, c));
  jac += kk_bracket(cb, b, kk_bracket(cb, c, a));
  jac += kk_bracket(cb, c, kk_bracket(cb, a, b));
  CHECK(jac.is_zero());
}

TEST_CASE("variety membership") {
  {
    auto rs = build_root_system("A1");
    auto cb = build_chevalley(rs);
    auto nd = principal_triple(cb);
    CHECK(variety_membership(rs, cb, nd.e, 2));
    CHECK(variety_membership(rs, cb, SRow{}, 2));      // x = 0
    CHECK(!variety_membership(rs, cb, nd.h, 2));       // semisimple
  }
  {
    auto rs = build_root_system("A2");
    auto cb = build_chevalley(rs);
    auto prin = principal_triple(cb);
    auto mini = minimal_triple(cb);
    CHECK(!variety_membership(rs, cb, prin.e, 2));  // (ad e)^5 != 0 > 4
    CHECK(variety_membership(rs, cb, prin.e, 3));
    CHECK(variety_membership(rs, cb, mini.e, 2));
    // Jordan-type oracle: ad-nilpotency order of partition [p1,...] is
    // 2 p1 - 1, so (ad x)^{2q} = 0 iff q >= p1
    for (const auto& parts : {std::vector<int>{3}, std::vector<int>{2, 1}}) {
      auto nd = sl2_triple_typeA(cb, parts);
      for (int q = 1; q <= 4; ++q) {
        CAPTURE(parts[0]);
        CAPTURE(q);
        CHECK(variety_membership(rs, cb, nd.e, q) == (q >= parts[0]));
      }
    }
  }
  {
    // short-root branch exercises pi_{theta_s}: B2 with q even
    auto rs = build_root_system("B2");
    auto cb = build_chevalley(rs);
    auto mini = minimal_triple(cb);
    auto prin = principal_triple(cb);
    // pi_{theta_s} is the 5-dim natural rep; x_theta has matrix square zero
    CHECK(variety_membership(rs, cb, mini.e, 2));
    // principal e acts as a regular nilpotent 5x5 Jordan block: power 5 kills
    CHECK(!variety_membership(rs, cb, prin.e, 2));   // (pi e)^2 != 0
    CHECK(variety_membership(rs, cb, prin.e, 6));    // (pi e)^4 = 0? power 2q/2=6
    CHECK(!variety_membership(rs, cb, prin.h, 2));
  }
}
