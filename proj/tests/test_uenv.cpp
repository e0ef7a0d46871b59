#include "doctest.h"
#include "wred/rep.hpp"
#include "wred/uenv.hpp"

using namespace wred;

namespace {

UPoly gen_poly(int i) { return {{UEnv::gen(i), Rat(1)}}; }

}  // namespace

TEST_CASE("sl2 enveloping arithmetic") {
  auto rs = build_root_system("A1");
  auto cb = build_chevalley(rs);
  UEnv env(cb);
  int f = cb.idx_neg(0), h = cb.idx_cartan(0), e = cb.idx_pos(0);

  // e f = f e + h
  UPoly ef = env.mul(gen_poly(e), gen_poly(f));
  UPoly expect = {{UMono{{f, 1}, {e, 1}}, Rat(1)}, {UMono{{h, 1}}, Rat(1)}};
  CHECK(ef == expect);

  // Casimir Omega = ef + fe + h^2/2 is central
  UPoly omega = env.mul(gen_poly(e), gen_poly(f));
  UEnv::add_to(omega, env.mul(gen_poly(f), gen_poly(e)));
  UEnv::add_to(omega, env.mul(gen_poly(h), gen_poly(h)), Rat(1, 2));
  for (int g : {e, f, h}) CHECK(env.commutator(omega, gen_poly(g)).empty());

  // associativity spot check on mixed products
  UPoly a = env.mul(gen_poly(e), env.mul(gen_poly(f), gen_poly(f)));
  UPoly b = env.mul(env.mul(gen_poly(e), gen_poly(f)), gen_poly(f));
  CHECK(a == b);

  // transpose is an antiautomorphism: tau(xy) = tau(y) tau(x)
  UPoly xy = env.mul(gen_poly(e), gen_poly(h));
  UPoly lhs = env.transpose(xy);
  UPoly rhs = env.mul(env.transpose(gen_poly(h)), env.transpose(gen_poly(e)));
  CHECK(lhs == rhs);
}

TEST_CASE("A2 associativity and symmetrized invariants are central") {
  auto rs = build_root_system("A2");
  auto cb = build_chevalley(rs);
  UEnv env(cb);

  // associativity on a few generator triples spanning all kinds
  std::vector<int> gens = {0, 2, cb.idx_cartan(0), cb.idx_pos(0), cb.idx_pos(2)};
  for (int a : gens)
    for (int b : gens)
      for (int c : gens) {
        UPoly lhs = env.mul(gen_poly(a), env.mul(gen_poly(b), gen_poly(c)));
        UPoly rhs = env.mul(env.mul(gen_poly(a), gen_poly(b)), gen_poly(c));
        CHECK(lhs == rhs);
      }

  auto inv2 = invariant_polynomials(cb, 2);
  REQUIRE(inv2.size() == 1);
  auto inv3 = invariant_polynomials(cb, 3);
  REQUIRE(inv3.size() == 1);
  for (const auto& p : {inv2[0], inv3[0]}) {
    UPoly z = symmetrize(env, p);
    for (int g = 0; g < cb.dim; ++g)
      CHECK(env.commutator(z, gen_poly(g)).empty());
  }
}

TEST_CASE("irreps via Shapovalov quotients") {
  // sl2: dim L(n omega) = n + 1
  {
    auto rs = build_root_system("A1");
    auto cb = build_chevalley(rs);
    UEnv env(cb);
    CHECK(build_irrep(env, QVec{Rat(1)}).dim == 2);
    CHECK(build_irrep(env, QVec{Rat(2)}).dim == 3);
    CHECK(build_irrep(env, QVec{Rat(5)}).dim == 6);
  }
  // A2 natural and adjoint
  {
    auto rs = build_root_system("A2");
    auto cb = build_chevalley(rs);
    UEnv env(cb);
    CHECK(build_irrep(env, QVec{Rat(1), Rat(0)}).dim == 3);
    auto adj = build_irrep(env, rs.root_to_weight_coords(rs.theta));
    CHECK(adj.dim == 8);
    // homomorphism: pi([x,y]) = [pi(x), pi(y)] on all basis pairs
    for (int a = 0; a < cb.dim; ++a)
      for (int b = 0; b < cb.dim; ++b) {
        auto pa = adj.act(SRow{{a, Rat(1)}});
        auto pb = adj.act(SRow{{b, Rat(1)}});
        auto pab = adj.act(cb.bracket(a, b));
        for (int i = 0; i < adj.dim; ++i)
          for (int j = 0; j < adj.dim; ++j) {
            Rat comm(0);
            for (int k = 0; k < adj.dim; ++k)
              comm += pa[i][k] * pb[k][j] - pb[i][k] * pa[k][j];
            CHECK(comm == pab[i][j]);
          }
      }
  }
  // B2 short-root rep is the natural 5-dim one, G2's is 7-dim
  {
    auto rs = build_root_system("B2");
    auto cb = build_chevalley(rs);
    UEnv env(cb);
    CHECK(build_irrep(env, rs.root_to_weight_coords(rs.theta_s)).dim == 5);
  }
  {
    auto rs = build_root_system("G2");
    auto cb = build_chevalley(rs);
    UEnv env(cb);
    auto rep = build_irrep(env, rs.root_to_weight_coords(rs.theta_s));
    CHECK(rep.dim == 7);
    // spot homomorphism check on simple generators
    RootCoord a1(2, 0), a2(2, 0);
    a1[0] = 1;
    a2[1] = 1;
    int e1 = cb.idx_pos(rs.root_id(a1)), f2 = cb.idx_neg(rs.root_id(a2));
    auto pe = rep.act(SRow{{e1, Rat(1)}});
    auto pf = rep.act(SRow{{f2, Rat(1)}});
    auto pb = rep.act(cb.bracket(e1, f2));
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        Rat comm(0);
        for (int k = 0; k < 7; ++k) comm += pe[i][k] * pf[k][j] - pf[i][k] * pe[k][j];
        CHECK(comm == pb[i][j]);
      }
  }
}
