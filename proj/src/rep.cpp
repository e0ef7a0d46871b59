#include "wred/rep.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "wred/smat.hpp"

namespace wred {

std::vector<QVec> Irrep::act(const SRow& x) const {
  std::vector<QVec> out(dim, QVec(dim, Rat(0)));
  for (const auto& [b, c] : x)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) out[i][j] += c * matrices[b][i][j];
  return out;
}

namespace {

/// f-monomial over the negative root vectors, recorded by positive-root id.
using FExp = std::vector<int>;  // exponent per positive root, index = pos id

UMono fexp_to_mono(const ChevalleyBasis& cb, const FExp& e) {
  // negative root vectors sit at basis indices m-1-pos; order ascending
  UMono mono;
  int m = cb.rs->num_positive();
  for (int pos = m - 1; pos >= 0; --pos)
    if (e[pos] > 0) mono.emplace_back(cb.idx_neg(pos), e[pos]);
  std::sort(mono.begin(), mono.end());
  return mono;
}

}  // namespace

Irrep build_irrep(UEnv& env, const QVec& lambda) {
  const ChevalleyBasis& cb = env.cb();
  const RootSystem& rs = *cb.rs;
  for (const auto& c : lambda)
    if (!is_integer(c) || c < 0)
      throw math_error("irrep construction needs dominant integral weight");

  // depth bound: height from lambda down to the lowest weight -dom(-lambda)
  QVec neg(rs.rank);
  for (int i = 0; i < rs.rank; ++i) neg[i] = -lambda[i];
  QVec lowest_dom = weyl_dominant_representative(rs, neg);
  QVec span(rs.rank);
  for (int i = 0; i < rs.rank; ++i) span[i] = lambda[i] + lowest_dom[i];
  Rat depth_r = rs.pair_rho_check(span);
  int depth = static_cast<int>(rat_num(depth_r));

  // enumerate f-monomials by total height of the lowered weight
  int m = rs.num_positive();
  std::vector<int> root_ht(m);
  for (int p = 0; p < m; ++p) root_ht[p] = RootSystem::height(rs.positive_roots[p]);

  std::map<QVec, std::vector<FExp>> cand;  // weight -> candidate monomials
  FExp cur(m, 0);
  std::function<void(int, int)> rec2 = [&](int pos, int budget) {
    if (pos == m) {
      QVec w = lambda;
      for (int p = 0; p < m; ++p) {
        if (cur[p] == 0) continue;
        QVec rootw = rs.root_to_weight_coords(rs.positive_roots[p]);
        for (int i = 0; i < rs.rank; ++i) w[i] -= rootw[i] * cur[p];
      }
      cand[w].push_back(cur);
      return;
    }
    for (int k = 0; k * root_ht[pos] <= budget; ++k) {
      cur[pos] = k;
      rec2(pos + 1, budget - k * root_ht[pos]);
    }
    cur[pos] = 0;
  };
  rec2(0, depth);

  // Shapovalov Gram per weight space; pivots form the L(lambda) basis
  struct WSpace {
    QVec weight;
    std::vector<UMono> pivots;
    std::vector<QVec> gram;      // Gram matrix on pivots
    std::vector<int> basis_ids;  // global ids
  };
  std::vector<WSpace> spaces;
  std::map<QVec, int> space_of_weight;
  std::vector<std::pair<int, UMono>> global;  // (space, monomial)

  auto shapo = [&](const UMono& a, const UMono& b) {
    UPoly ta = env.transpose({{a, Rat(1)}});
    UPoly prod = env.mul(ta, {{b, Rat(1)}});
    return env.highest_weight_eval(prod, lambda);
  };

  for (const auto& [w, fexps] : cand) {
    std::vector<UMono> monos;
    for (const auto& e : fexps) monos.push_back(fexp_to_mono(cb, e));
    std::sort(monos.begin(), monos.end());
    // Gram on all candidates
    int n = static_cast<int>(monos.size());
    std::vector<QVec> g(n, QVec(n, Rat(0)));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) g[i][j] = g[j][i] = shapo(monos[i], monos[j]);
    // column pivot profile
    SMat gm(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) gm.add(i, j, g[i][j]);
    gm.compress();
    auto prof = gm.rank_profile_by_columns();
    std::vector<int> pivots;
    int last = 0;
    for (int j = 0; j < n; ++j) {
      if (prof[j] > last) pivots.push_back(j);
      last = prof[j];
    }
    if (pivots.empty()) continue;
    WSpace ws;
    ws.weight = w;
    for (int j : pivots) ws.pivots.push_back(monos[j]);
    int np = static_cast<int>(pivots.size());
    ws.gram.assign(np, QVec(np, Rat(0)));
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < np; ++j) ws.gram[i][j] = g[pivots[i]][pivots[j]];
    space_of_weight[w] = static_cast<int>(spaces.size());
    spaces.push_back(std::move(ws));
  }

  int dim = 0;
  for (auto& ws : spaces) {
    for (size_t i = 0; i < ws.pivots.size(); ++i) {
      ws.basis_ids.push_back(dim);
      global.emplace_back(space_of_weight[ws.weight], ws.pivots[i]);
      ++dim;
    }
  }

  // express u * v_lambda in the pivot basis
  auto express = [&](const UPoly& u, QVec& out) {
    out.assign(dim, Rat(0));
    // group by weight space: a PBW monomial contributes via its f-part after
    // killing e's and evaluating h's at the shifted weight
    std::map<int, UPoly> by_space;  // reduced f-only polynomials
    for (const auto& [mono, c] : u) {
      // split mono: f-part (idx < m), h-part, e-part
      int mneg = rs.num_positive();
      UMono fpart;
      Expo hexp(rs.rank, 0);
      bool kills = false;
      for (const auto& [i, e] : mono) {
        if (i < mneg)
          fpart.emplace_back(i, e);
        else if (cb.is_cartan(i))
          hexp[i - mneg] = e;
        else
          kills = true;
      }
      if (kills) continue;
      Rat coeff = c;
      for (int i = 0; i < rs.rank; ++i)
        for (int k = 0; k < hexp[i]; ++k) coeff *= lambda[i];
      if (coeff == 0) continue;
      // weight of f-part
      QVec w = lambda;
      for (const auto& [i, e] : fpart) {
        RootCoord beta = *cb.root_of(i);  // negative root
        QVec rw = rs.root_to_weight_coords(beta);
        for (int r = 0; r < rs.rank; ++r) w[r] += rw[r] * e;
      }
      auto it = space_of_weight.find(w);
      if (it == space_of_weight.end()) continue;  // maps into the radical
      UEnv::add_to(by_space[it->second], {{fpart, coeff}});
    }
    for (const auto& [si, fp] : by_space) {
      const WSpace& ws = spaces[si];
      int np = static_cast<int>(ws.pivots.size());
      QVec rhs(np, Rat(0));
      for (const auto& [mono, c] : fp)
        for (int i = 0; i < np; ++i) {
          // shapo(pivot_i, mono)
          UPoly ta = env.transpose({{ws.pivots[i], Rat(1)}});
          UPoly prod = env.mul(ta, {{mono, Rat(1)}});
          rhs[i] += c * env.highest_weight_eval(prod, lambda);
        }
      SMat gm(np, np);
      for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j) gm.add(i, j, ws.gram[i][j]);
      gm.compress();
      QVec sol;
      if (!gm.solve(rhs, sol)) throw math_error("irrep expression failed");
      for (int i = 0; i < np; ++i) out[ws.basis_ids[i]] += sol[i];
    }
  };

  Irrep rep;
  rep.dim = dim;
  rep.matrices.assign(cb.dim, std::vector<QVec>(dim, QVec(dim, Rat(0))));
  for (int b = 0; b < cb.dim; ++b) {
    for (int col = 0; col < dim; ++col) {
      const auto& [si, mono] = global[col];
      (void)si;
      UPoly u = env.mul_gen_poly(b, {{mono, Rat(1)}});
      QVec img;
      express(u, img);
      for (int row = 0; row < dim; ++row) rep.matrices[b][row][col] = img[row];
    }
  }
  return rep;
}

bool matrix_power_is_zero(const std::vector<QVec>& m, int power) {
  int n = static_cast<int>(m.size());
  std::vector<QVec> acc(n, QVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) acc[i][i] = 1;
  std::vector<QVec> base = m;
  int p = power;
  auto mul = [&](const std::vector<QVec>& a, const std::vector<QVec>& b) {
    std::vector<QVec> r(n, QVec(n, Rat(0)));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (a[i][k] == 0) continue;
        for (int j = 0; j < n; ++j)
          if (b[k][j] != 0) r[i][j] += a[i][k] * b[k][j];
      }
    return r;
  };
  while (p > 0) {
    if (p & 1) acc = mul(acc, base);
    p >>= 1;
    if (p) base = mul(base, base);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (acc[i][j] != 0) return false;
  return true;
}

}  // namespace wred
