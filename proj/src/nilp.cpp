#include "wred/nilp.hpp"

#include <algorithm>
#include <numeric>

#include "wred/rep.hpp"
#include "wred/smat.hpp"
#include "wred/uenv.hpp"

namespace wred {

namespace {

QVec chi_values(const ChevalleyBasis& cb, const SRow& f) {
  QVec chi(cb.dim, Rat(0));
  for (int b = 0; b < cb.dim; ++b)
    for (const auto& [a, c] : f) chi[b] += c * cb.form(a, b);
  return chi;
}

void check_triple(const ChevalleyBasis& cb, const NilpotentDatum& nd) {
  SRow he = cb.bracket_vec(nd.h, nd.e);
  SRow two_e = srow_scale(nd.e, Rat(2));
  if (he != two_e) throw math_error("triple relation [h,e]=2e fails");
  SRow ef = cb.bracket_vec(nd.e, nd.f);
  if (ef != nd.h) throw math_error("triple relation [e,f]=h fails");
  SRow hf = cb.bracket_vec(nd.h, nd.f);
  if (hf != srow_scale(nd.f, Rat(-2))) throw math_error("triple relation [h,f]=-2f fails");
}

}  // namespace

NilpotentDatum principal_triple(const ChevalleyBasis& cb) {
  const RootSystem& rs = *cb.rs;
  NilpotentDatum nd;
  nd.label = "principal";
  // e = sum of simple root vectors
  for (int i = 0; i < rs.rank; ++i) {
    RootCoord a(rs.rank, 0);
    a[i] = 1;
    nd.e.emplace_back(cb.idx_pos(rs.root_id(a)), Rat(1));
  }
  srow_normalize(nd.e);
  // h with alpha_i(h) = 2 for all i: solve A^T c = (2,...,2)
  SMat at(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) at.add(i, j, Rat(rs.cartan[j][i]));
  at.compress();
  QVec rhs(rs.rank, Rat(2)), c;
  if (!at.solve(rhs, c)) throw math_error("Cartan solve failed");
  for (int i = 0; i < rs.rank; ++i)
    if (c[i] != 0) nd.h.emplace_back(cb.idx_cartan(i), c[i]);
  srow_normalize(nd.h);
  // f = sum c_i f_i with the same coefficients, since [e_i, f_j] = delta h_i
  for (int i = 0; i < rs.rank; ++i) {
    RootCoord a(rs.rank, 0);
    a[i] = 1;
    if (c[i] != 0) nd.f.emplace_back(cb.idx_neg(rs.root_id(a)), c[i]);
  }
  srow_normalize(nd.f);
  check_triple(cb, nd);
  nd.chi = chi_values(cb, nd.f);
  return nd;
}

NilpotentDatum minimal_triple(const ChevalleyBasis& cb) {
  const RootSystem& rs = *cb.rs;
  NilpotentDatum nd;
  nd.label = "minimal";
  int theta = rs.root_id(rs.theta);
  nd.e = {{cb.idx_pos(theta), Rat(1)}};
  nd.f = {{cb.idx_neg(theta), Rat(1)}};
  nd.h = cb.bracket_vec(nd.e, nd.f);
  check_triple(cb, nd);
  nd.chi = chi_values(cb, nd.f);
  return nd;
}

NilpotentDatum sl2_triple_typeA(const ChevalleyBasis& cb,
                                const std::vector<int>& partition) {
  const RootSystem& rs = *cb.rs;
  if (rs.type != 'A') throw math_error("partition labels need type A");
  int n = rs.rank + 1;
  if (n > 6) throw math_error("type-A partitions supported up to n = 6");
  std::vector<int> parts = partition;
  std::sort(parts.rbegin(), parts.rend());
  int total = std::accumulate(parts.begin(), parts.end(), 0);
  if (total != n || parts.empty() || parts.back() < 1)
    throw math_error("not a partition of " + std::to_string(n));

  NilpotentDatum nd;
  nd.label = "p=";
  for (size_t i = 0; i < parts.size(); ++i)
    nd.label += (i ? "," : "") + std::to_string(parts[i]);

  // Jordan blocks on consecutive index ranges; all entries land on simple
  // root vectors E_{r,r+1} resp. E_{r+1,r}.
  std::vector<Rat> diag(n, Rat(0));
  int row = 0;
  for (int p : parts) {
    for (int r = 0; r < p - 1; ++r) {
      RootCoord a(rs.rank, 0);
      a[row + r] = 1;
      nd.e.emplace_back(cb.idx_pos(rs.root_id(a)), Rat(1));
      // standard sl2 lowering coefficients r'(p - r') with r' = r+1
      nd.f.emplace_back(cb.idx_neg(rs.root_id(a)), Rat((r + 1) * (p - r - 1)));
    }
    for (int r = 0; r < p; ++r) diag[row + r] = Rat(p - 1 - 2 * r);
    row += p;
  }
  srow_normalize(nd.e);
  srow_normalize(nd.f);
  // h = diag(d): coordinates over h_i are partial sums of d
  Rat acc(0);
  for (int i = 0; i < rs.rank; ++i) {
    acc += diag[i];
    if (acc != 0) nd.h.emplace_back(cb.idx_cartan(i), acc);
  }
  srow_normalize(nd.h);
  check_triple(cb, nd);
  nd.chi = chi_values(cb, nd.f);
  return nd;
}

NilpotentDatum triple_from_label(const ChevalleyBasis& cb,
                                 const std::string& label) {
  if (label == "principal") return principal_triple(cb);
  if (label == "minimal") return minimal_triple(cb);
  if (label.rfind("p=", 0) == 0) {
    std::vector<int> parts;
    std::string rest = label.substr(2);
    size_t pos = 0;
    while (pos < rest.size()) {
      size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      try {
        parts.push_back(std::stoi(rest.substr(pos, comma - pos)));
      } catch (const std::exception&) {
        throw parse_error("bad partition label '" + label + "'");
      }
      pos = comma + 1;
    }
    return sl2_triple_typeA(cb, parts);
  }
  throw parse_error("unknown nilpotent label '" + label + "'");
}

DynkinGrading dynkin_grading(const ChevalleyBasis& cb,
                             const NilpotentDatum& nd) {
  const RootSystem& rs = *cb.rs;
  check_triple(cb, nd);
  for (const auto& [b, c] : nd.h)
    if (!cb.is_cartan(b))
      throw math_error("inconsistent input: h is not in the Cartan subalgebra");

  DynkinGrading dg;
  dg.twoj.assign(cb.dim, 0);
  for (int b = 0; b < cb.dim; ++b) {
    auto root = cb.root_of(b);
    if (!root) {
      dg.twoj[b] = 0;
    } else {
      // <beta, h> with h = sum c_i alpha_i^vee
      Rat pair(0);
      for (const auto& [hb, c] : nd.h) {
        int i = hb - rs.num_positive();
        Rat bi(0);
        for (int j = 0; j < rs.rank; ++j) bi += Rat(rs.cartan[i][j]) * (*root)[j];
        pair += c * bi;
      }
      if (!is_integer(pair))
        throw math_error("inconsistent input: non-integral ad h eigenvalue");
      dg.twoj[b] = static_cast<int>(rat_num(pair));  // 2j = <beta, h>
    }
    dg.pieces[dg.twoj[b]].push_back(b);
  }
  for (int b = 0; b < cb.dim; ++b) {
    if (dg.twoj[b] == 1) dg.g_half.push_back(b);
    if (dg.twoj[b] >= 2) dg.g_ge1.push_back(b);
  }
  dg.g_pos = dg.g_half;
  dg.g_pos.insert(dg.g_pos.end(), dg.g_ge1.begin(), dg.g_ge1.end());
  if (dg.g_half.size() % 2 != 0)
    throw math_error("dim g_{1/2} must be even");

  // centralizer of e, piece by piece
  for (const auto& [twoj, piece] : dg.pieces) {
    const auto& target = dg.pieces.count(twoj + 2)
                             ? dg.pieces.at(twoj + 2)
                             : std::vector<int>{};
    std::map<int, int> trow;
    for (size_t i = 0; i < target.size(); ++i) trow[target[i]] = static_cast<int>(i);
    SMat ad(static_cast<int>(target.size()), static_cast<int>(piece.size()));
    for (size_t col = 0; col < piece.size(); ++col) {
      SRow img = cb.bracket_vec(nd.e, SRow{{piece[col], Rat(1)}});
      for (const auto& [k, c] : img) {
        auto it = trow.find(k);
        if (it == trow.end()) throw math_error("grading compatibility violated");
        ad.add(it->second, static_cast<int>(col), c);
      }
    }
    ad.compress();
    for (const auto& kv : ad.kernel_basis()) {
      SRow v;
      for (size_t i = 0; i < piece.size(); ++i)
        if (kv[i] != 0) v.emplace_back(piece[i], kv[i]);
      srow_normalize(v);
      dg.centralizer_e.push_back(std::move(v));
      dg.centralizer_twoj.push_back(twoj);
      dg.kazhdan_deg2.push_back(twoj + 2);
    }
  }
  return dg;
}

Rat half_form(const ChevalleyBasis& cb, const DynkinGrading& dg,
              const NilpotentDatum& nd, const SRow& x, const SRow& y) {
  for (const auto& [b, c] : x)
    if (dg.twoj[b] != 1) throw math_error("half_form argument outside g_{1/2}");
  for (const auto& [b, c] : y)
    if (dg.twoj[b] != 1) throw math_error("half_form argument outside g_{1/2}");
  Rat val(0);
  for (const auto& [k, c] : cb.bracket_vec(x, y)) val += c * nd.chi[k];
  return val;
}

std::vector<SRow> lagrangian(const ChevalleyBasis& cb, const DynkinGrading& dg,
                             const NilpotentDatum& nd, bool alternate) {
  // symplectic Gram-Schmidt over the Chevalley basis order of g_{1/2}
  std::vector<SRow> work;
  for (int b : dg.g_half) work.push_back(SRow{{b, Rat(1)}});
  std::vector<SRow> ps, qs;
  while (!work.empty()) {
    SRow p = work.front();
    work.erase(work.begin());
    int mate = -1;
    Rat pairing;
    for (size_t i = 0; i < work.size(); ++i) {
      pairing = half_form(cb, dg, nd, p, work[i]);
      if (pairing != 0) {
        mate = static_cast<int>(i);
        break;
      }
    }
    if (mate < 0) throw math_error("degenerate symplectic form on g_{1/2}");
    SRow q = srow_scale(work[mate], Rat(1) / half_form(cb, dg, nd, p, work[mate]));
    work.erase(work.begin() + mate);
    for (auto& v : work) {
      Rat a = half_form(cb, dg, nd, q, v);
      Rat b = half_form(cb, dg, nd, p, v);
      // v += a p - b q  makes v symplectically orthogonal to the pair
      v = srow_add(v, srow_add(srow_scale(p, a), srow_scale(q, -b)));
    }
    ps.push_back(std::move(p));
    qs.push_back(std::move(q));
  }
  return alternate ? qs : ps;
}

Poly kk_bracket(const ChevalleyBasis& cb, const Poly& p, const Poly& q) {
  if (p.nvars() != cb.dim || q.nvars() != cb.dim)
    throw math_error("kk_bracket polynomials must live over the Chevalley basis");
  Poly out(cb.dim);
  for (int a = 0; a < cb.dim; ++a) {
    Poly pa = p.derivative(a);
    if (pa.is_zero()) continue;
    for (int b = 0; b < cb.dim; ++b) {
      Poly qb = q.derivative(b);
      if (qb.is_zero()) continue;
      for (const auto& [k, c] : cb.bracket(a, b))
        out += pa * qb * Poly::variable(cb.dim, k, c);
    }
  }
  return out;
}

bool variety_membership(const RootSystem& rs, const ChevalleyBasis& cb,
                        const SRow& x, int q) {
  if (q < 1) throw math_error("denominator q must be positive");
  bool short_branch = rs.lacing_rv > 1 && q % rs.lacing_rv == 0;
  if (!short_branch) {
    SMat ad = cb.ad_matrix(x);
    std::vector<QVec> m(cb.dim, QVec(cb.dim, Rat(0)));
    for (int r = 0; r < cb.dim; ++r)
      for (const auto& [c, v] : ad.row(r)) m[r][c] += v;
    return matrix_power_is_zero(m, 2 * q);
  }
  if (rs.type != 'A' && rs.type != 'B' && rs.type != 'G')
    throw math_error("pi_{theta_s} realization unavailable for type " +
                     std::string(1, rs.type));
  UEnv env(cb);
  Irrep rep = build_irrep(env, rs.root_to_weight_coords(rs.theta_s));
  return matrix_power_is_zero(rep.act(x), 2 * q / rs.lacing_rv);
}

}  // namespace wred
