#include <set>

#include "doctest.h"
#include "wred/rootsys.hpp"

using namespace wred;

namespace {

const std::vector<std::string> kDeskTypes = {"A1", "A2", "A3", "B2",
                                             "B3", "C3", "D4", "G2"};

void check_jacobi(const ChevalleyBasis& cb) {
  for (int a = 0; a < cb.dim; ++a)
    for (int b = a + 1; b < cb.dim; ++b)
      for (int c = b + 1; c < cb.dim; ++c) {
        SRow s = cb.bracket_vec(cb.bracket(a, b), SRow{{c, Rat(1)}});
        s = srow_add(s, cb.bracket_vec(cb.bracket(b, c), SRow{{a, Rat(1)}}));
        s = srow_add(s, cb.bracket_vec(cb.bracket(c, a), SRow{{b, Rat(1)}}));
        CHECK(s.empty());
      }
}

}  // namespace

TEST_CASE("basic root system data") {
  auto a1 = build_root_system("A1");
  CHECK(a1.num_positive() == 1);
  CHECK(a1.coxeter_h == 2);
  CHECK(a1.dual_coxeter_hv == 2);
  CHECK(a1.lacing_rv == 1);

  auto a2 = build_root_system("A2");
  CHECK(a2.num_positive() == 3);
  CHECK(a2.coxeter_h == 3);
  CHECK(a2.dual_coxeter_hv == 3);

  auto g2 = build_root_system("G2");
  CHECK(g2.num_positive() == 6);
  CHECK(g2.coxeter_h == 6);
  CHECK(g2.dual_coxeter_hv == 4);
  CHECK(g2.lacing_rv == 3);

  auto b3 = build_root_system("B3");
  CHECK(b3.coxeter_h == 6);
  CHECK(b3.dual_coxeter_hv == 5);
  CHECK(b3.lacing_rv == 2);

  CHECK_THROWS_AS(build_root_system("E8"), math_error);
  CHECK_THROWS_AS(build_root_system("A0"), math_error);
  CHECK_THROWS_AS(build_root_system("X"), parse_error);
}

TEST_CASE("normalized form and Coxeter identities") {
  for (const auto& label : kDeskTypes) {
    auto rs = build_root_system(label);
    CAPTURE(label);
    CHECK(rs.norm2(rs.theta) == Rat(2));
    // number of positive roots = h * rank / 2
    CHECK(rs.num_positive() * 2 == rs.coxeter_h * rs.rank);
    // (theta | rho^vee) = h - 1, (theta_s | rho^vee) = h^vee(dual) - 1
    QVec tw = rs.root_to_weight_coords(rs.theta);
    CHECK(rs.pair_rho_check(tw) == Rat(rs.coxeter_h - 1));
    QVec tsw = rs.root_to_weight_coords(rs.theta_s);
    auto dual = langlands_dual(rs);
    CHECK(rs.pair_rho_check(tsw) == Rat(dual.dual_coxeter_hv - 1));
    CHECK(rs.dual_hv_langlands == dual.dual_coxeter_hv);
    // h^vee = <rho, theta^vee> + 1 holds by construction; check integrality
    CHECK(rs.pair_coroot(rs.rho, rs.theta) == Rat(rs.dual_coxeter_hv - 1));
  }
}

TEST_CASE("langlands duality") {
  CHECK(langlands_dual(build_root_system("A2")).label() == "A2");
  CHECK(langlands_dual(build_root_system("B3")).label() == "C3");
  CHECK(langlands_dual(build_root_system("C3")).label() == "B3");
  CHECK(langlands_dual(build_root_system("G2")).label() == "G2");
  // involutive
  auto rs = build_root_system("B3");
  CHECK(langlands_dual(langlands_dual(rs)).label() == "B3");
}

TEST_CASE("chevalley tables: sl2 relations and Jacobi") {
  for (const auto& label : {std::string("A1"), std::string("A2"),
                            std::string("B2"), std::string("G2")}) {
    auto rs = build_root_system(label);
    auto cb = build_chevalley(rs);
    CAPTURE(label);
    CHECK(cb.dim == 2 * rs.num_positive() + rs.rank);

    // [e_i, f_j] = delta_ij h_i for simple roots
    for (int i = 0; i < rs.rank; ++i) {
      RootCoord ai(rs.rank, 0);
      ai[i] = 1;
      int ei = cb.idx_pos(rs.root_id(ai));
      for (int j = 0; j < rs.rank; ++j) {
        RootCoord aj(rs.rank, 0);
        aj[j] = 1;
        int fj = cb.idx_neg(rs.root_id(aj));
        SRow br = cb.bracket(ei, fj);
        if (i == j) {
          REQUIRE(br.size() == 1);
          CHECK(br[0].first == cb.idx_cartan(i));
          CHECK(br[0].second == Rat(1));
        } else {
          CHECK(br.empty());
        }
      }
    }
    // [h_i, e_i] = 2 e_i
    for (int i = 0; i < rs.rank; ++i) {
      RootCoord ai(rs.rank, 0);
      ai[i] = 1;
      int ei = cb.idx_pos(rs.root_id(ai));
      SRow br = cb.bracket(cb.idx_cartan(i), ei);
      REQUIRE(br.size() == 1);
      CHECK(br[0].second == Rat(2));
    }
    // antisymmetry
    for (int a = 0; a < cb.dim; ++a)
      for (int b = 0; b < cb.dim; ++b) {
        SRow ab = cb.bracket(a, b);
        SRow ba = srow_scale(cb.bracket(b, a), Rat(-1));
        CHECK(ab == ba);
      }
    check_jacobi(cb);
  }
}

TEST_CASE("invariance of the form on g") {
  for (const auto& label : {std::string("A2"), std::string("B2")}) {
    auto rs = build_root_system(label);
    auto cb = build_chevalley(rs);
    CAPTURE(label);
    for (int x = 0; x < cb.dim; ++x)
      for (int a = 0; a < cb.dim; ++a)
        for (int b = 0; b < cb.dim; ++b) {
          Rat lhs(0), rhs(0);
          for (const auto& [k, c] : cb.bracket(x, a)) lhs += c * cb.form(k, b);
          for (const auto& [k, c] : cb.bracket(x, b)) rhs -= c * cb.form(a, k);
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("weyl dominant representative") {
  auto a1 = build_root_system("A1");
  CHECK(weyl_dominant_representative(a1, QVec{Rat(-3)}) == QVec{Rat(3)});
  CHECK(weyl_dominant_representative(a1, QVec{Rat(3)}) == QVec{Rat(3)});

  auto a2 = build_root_system("A2");
  CHECK(weyl_dominant_representative(a2, QVec{Rat(-1), Rat(2)}) ==
        QVec{Rat(1), Rat(1)});

  // constant on orbits, brute force over full orbits (rank <= 3)
  for (const auto& label : {std::string("A2"), std::string("B2"),
                            std::string("G2"), std::string("A3")}) {
    auto rs = build_root_system(label);
    QVec v(rs.rank);
    for (int i = 0; i < rs.rank; ++i) v[i] = Rat(2 * i - 1, 3);
    auto dom = weyl_dominant_representative(rs, v);
    for (const auto& w : weyl_orbit(rs, v))
      CHECK(weyl_dominant_representative(rs, w) == dom);
    // idempotent
    CHECK(weyl_dominant_representative(rs, dom) == dom);
  }
  // orbit size of a regular weight = |W|
  auto g2 = build_root_system("G2");
  CHECK(weyl_orbit(g2, QVec{Rat(1), Rat(2)}).size() == 12);
}
