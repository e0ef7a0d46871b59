#include "wred/rootsys.hpp"

#include <algorithm>
#include <set>

namespace wred {

namespace {

std::vector<std::vector<int>> cartan_matrix(char type, int rank) {
  auto bad = [&](const std::string& why) {
    throw math_error("invalid Cartan type " + std::string(1, type) +
                     std::to_string(rank) + ": " + why);
  };
  int n = rank;
  std::vector<std::vector<int>> A(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) A[i][i] = 2;
  auto chain = [&]() {
    for (int i = 0; i + 1 < n; ++i) A[i][i + 1] = A[i + 1][i] = -1;
  };
  switch (type) {
    case 'A':
      if (n < 1) bad("rank >= 1 required");
      chain();
      break;
    case 'B':
      if (n < 2) bad("rank >= 2 required");
      chain();
      A[n - 1][n - 2] = -2;  // <alpha_{n-1}, alpha_n^vee>, alpha_n short
      break;
    case 'C':
      if (n < 2) bad("rank >= 2 required");
      chain();
      A[n - 2][n - 1] = -2;  // <alpha_n, alpha_{n-1}^vee>, alpha_n long
      break;
    case 'D':
      if (n < 3) bad("rank >= 3 required");
      for (int i = 0; i + 2 < n; ++i) A[i][i + 1] = A[i + 1][i] = -1;
      A[n - 3][n - 1] = A[n - 1][n - 3] = -1;
      break;
    case 'G':
      if (n != 2) bad("G needs rank 2");
      A[0][1] = -1;  // alpha_1 long, alpha_2 short
      A[1][0] = -3;
      break;
    default:
      bad("supported types are A,B,C,D,G");
  }
  return A;
}

}  // namespace

int RootSystem::root_id(const RootCoord& c) const {
  auto it = root_index.find(c);
  if (it == root_index.end()) throw math_error("not a root");
  return it->second;
}

Rat RootSystem::form_roots(const RootCoord& a, const RootCoord& b) const {
  // (alpha_i|alpha_j) = A[i][j] * (alpha_i|alpha_i) / 2
  Rat s(0);
  for (int i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank; ++j) {
      if (b[j] == 0) continue;
      s += Rat(a[i]) * Rat(b[j]) * Rat(cartan[i][j]) * simple_norm2[i] / 2;
    }
  }
  return s;
}

Rat RootSystem::pair_coroot(const QVec& w, const RootCoord& alpha) const {
  // <w, alpha^vee> = 2 (w|alpha) / (alpha|alpha)
  return form_weight_root(w, alpha) * 2 / norm2(alpha);
}

std::vector<Rat> RootSystem::coroot_coords(const RootCoord& alpha) const {
  // alpha^vee = sum_i a_i (alpha_i|alpha_i)/(alpha|alpha) alpha_i^vee
  Rat n2 = norm2(alpha);
  std::vector<Rat> c(rank);
  for (int i = 0; i < rank; ++i) c[i] = Rat(alpha[i]) * simple_norm2[i] / n2;
  return c;
}

QVec RootSystem::weight_to_root_coords(const QVec& w) const {
  // solve A^T-ish: w_i = sum_j A[i][j] x_j
  SMat A(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) A.add(i, j, Rat(cartan[i][j]));
  A.compress();
  QVec x;
  if (!A.solve(w, x)) throw math_error("singular Cartan matrix");
  return x;
}

QVec RootSystem::root_to_weight_coords(const RootCoord& a) const {
  QVec w(rank, Rat(0));
  for (int j = 0; j < rank; ++j) {
    if (a[j] == 0) continue;
    for (int i = 0; i < rank; ++i) w[i] += Rat(cartan[i][j]) * a[j];
  }
  return w;
}

Rat RootSystem::form_weight_root(const QVec& w, const RootCoord& alpha) const {
  // (w|alpha) with w = sum x_j alpha_j
  QVec x = weight_to_root_coords(w);
  Rat s(0);
  for (int i = 0; i < rank; ++i) {
    if (alpha[i] == 0) continue;
    for (int j = 0; j < rank; ++j)
      s += x[j] * Rat(alpha[i]) * Rat(cartan[i][j]) * simple_norm2[i] / 2;
  }
  return s;
}

Rat RootSystem::form_weights(const QVec& a, const QVec& b) const {
  QVec xa = weight_to_root_coords(a), xb = weight_to_root_coords(b);
  Rat s(0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      s += xa[i] * xb[j] * Rat(cartan[i][j]) * simple_norm2[i] / 2;
  return s;
}

Rat RootSystem::pair_rho_check(const QVec& w) const {
  QVec x = weight_to_root_coords(w);
  Rat s(0);
  for (const auto& xi : x) s += xi;
  return s;
}

QVec RootSystem::nu_rho_check() const {
  // <nu(rho^vee), alpha_i^vee> = (rho^vee | alpha_i^vee) = <alpha_i... use
  // nu(rho^vee) = sum over positive coroots / 2 mapped by nu:
  // nu(beta^vee) = 2 beta / (beta|beta).
  QVec w(rank, Rat(0));
  for (const auto& beta : positive_roots) {
    QVec bw = root_to_weight_coords(beta);
    Rat f = norm2(beta);
    for (int i = 0; i < rank; ++i) w[i] += bw[i] / f;  // (2/(b|b)) * beta / 2
  }
  return w;
}

RootSystem build_root_system(char type, int rank) {
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.cartan = cartan_matrix(type, rank);

  // root lengths: solve d_i A_ij = d_j A_ji, normalize long roots to 2
  QVec d(rank, Rat(0));
  d[0] = 1;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) {
        if (i == j || rs.cartan[i][j] == 0) continue;
        if (d[i] != 0 && d[j] == 0) {
          d[j] = d[i] * rs.cartan[i][j] / rs.cartan[j][i];
          progress = true;
        }
      }
  }
  Rat dmax(0);
  for (const auto& x : d) dmax = std::max(dmax, x);
  rs.simple_norm2.resize(rank);
  for (int i = 0; i < rank; ++i) rs.simple_norm2[i] = d[i] * 2 / dmax;

  // positive roots via reflection closure on simple-root coordinates
  std::set<RootCoord> roots;
  std::vector<RootCoord> frontier;
  for (int i = 0; i < rank; ++i) {
    RootCoord a(rank, 0);
    a[i] = 1;
    roots.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<RootCoord> next;
    for (const auto& b : frontier) {
      for (int i = 0; i < rank; ++i) {
        // s_i(b) = b - <b, alpha_i^vee> alpha_i ; pairing is integral here
        int pair = 0;
        for (int j = 0; j < rank; ++j) pair += rs.cartan[i][j] * b[j];
        RootCoord c = b;
        c[i] -= pair;
        bool pos = false, neg = false;
        for (int x : c) {
          if (x > 0) pos = true;
          if (x < 0) neg = true;
        }
        if (neg && !pos) continue;  // mirror image, handled via negatives
        if (roots.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  rs.positive_roots.assign(roots.begin(), roots.end());  // set order = lex

  rs.all_roots = rs.positive_roots;
  for (const auto& b : rs.positive_roots) {
    RootCoord n(rank);
    for (int i = 0; i < rank; ++i) n[i] = -b[i];
    rs.all_roots.push_back(n);
  }
  for (size_t i = 0; i < rs.all_roots.size(); ++i)
    rs.root_index[rs.all_roots[i]] = static_cast<int>(i);

  // highest root / highest short root
  int best_ht = -1, best_ht_s = -1;
  Rat long2(2);
  for (const auto& b : rs.positive_roots) {
    int h = RootSystem::height(b);
    if (h > best_ht) {
      best_ht = h;
      rs.theta = b;
    }
    if (rs.norm2(b) < long2 && h > best_ht_s) {
      best_ht_s = h;
      rs.theta_s = b;
    }
  }
  if (best_ht_s < 0) rs.theta_s = rs.theta;  // simply laced

  rs.rho.assign(rank, Rat(1));
  rs.coxeter_h = best_ht + 1;
  Rat hv = rs.pair_coroot(rs.rho, rs.theta) + 1;
  if (!is_integer(hv)) throw math_error("non-integral dual Coxeter number");
  rs.dual_coxeter_hv = static_cast<int>(rat_num(hv));

  Rat short2(2);
  for (const auto& b : rs.positive_roots) short2 = std::min(short2, rs.norm2(b));
  Rat rv = Rat(2) / short2;
  if (!is_integer(rv)) throw math_error("non-integral lacing number");
  rs.lacing_rv = static_cast<int>(rat_num(rv));

  // h^vee of the Langlands dual: ht(theta_s) + 1 by eq (theta_s|rho^vee)
  rs.dual_hv_langlands = RootSystem::height(rs.theta_s) + 1;
  return rs;
}

RootSystem build_root_system(const std::string& label) {
  if (label.size() < 2) throw parse_error("Cartan type must look like 'A1', 'G2'");
  char t = label[0];
  int r;
  try {
    size_t used = 0;
    r = std::stoi(label.substr(1), &used);
    if (used + 1 != label.size()) throw parse_error("");
  } catch (const std::exception&) {
    throw parse_error("bad Cartan type '" + label + "'");
  }
  return build_root_system(t, r);
}

RootSystem langlands_dual(const RootSystem& rs) {
  char t = rs.type;
  if (t == 'B') t = 'C';
  else if (t == 'C') t = 'B';
  return build_root_system(t, rs.rank);
}

QVec weyl_dominant_representative(const RootSystem& rs, QVec v) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.rank; ++i) {
      if (v[i] < 0) {
        Rat c = v[i];
        for (int j = 0; j < rs.rank; ++j) v[j] -= c * rs.cartan[j][i];
        moved = true;
        break;
      }
    }
  }
  return v;
}

std::vector<QVec> weyl_orbit(const RootSystem& rs, const QVec& v) {
  std::set<QVec> seen{v};
  std::vector<QVec> frontier{v};
  while (!frontier.empty()) {
    std::vector<QVec> next;
    for (const auto& w : frontier)
      for (int i = 0; i < rs.rank; ++i) {
        QVec u = w;
        Rat c = w[i];
        for (int j = 0; j < rs.rank; ++j) u[j] -= c * rs.cartan[j][i];
        if (seen.insert(u).second) next.push_back(u);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Chevalley basis via extraspecial pairs
// ---------------------------------------------------------------------------

namespace {

/// Builds the integral structure-constant table N_{a,b} for all root pairs.
struct NBuilder {
  const RootSystem& rs;
  std::map<std::pair<RootCoord, RootCoord>, Rat> pos;  // positive pairs

  explicit NBuilder(const RootSystem& r) : rs(r) { build(); }

  bool is_pos(const RootCoord& c) const {
    for (int x : c)
      if (x > 0) return true;
    return false;
  }
  RootCoord neg(const RootCoord& c) const {
    RootCoord n(c.size());
    for (size_t i = 0; i < c.size(); ++i) n[i] = -c[i];
    return n;
  }
  RootCoord sum(const RootCoord& a, const RootCoord& b) const {
    RootCoord s(a.size());
    for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    return s;
  }

  int p_string(const RootCoord& a, const RootCoord& b) const {
    // max k >= 0 with b - k a a root
    int k = 0;
    RootCoord c = b;
    while (true) {
      RootCoord d(c.size());
      for (size_t i = 0; i < c.size(); ++i) d[i] = c[i] - a[i];
      if (!rs.is_root(d)) break;
      c = d;
      ++k;
    }
    return k;
  }

  // extraspecial pair of a non-simple positive root
  std::pair<RootCoord, RootCoord> esp(const RootCoord& g) const {
    for (const auto& xi : rs.positive_roots) {
      RootCoord eta(g.size());
      bool ok = true;
      for (size_t i = 0; i < g.size(); ++i) {
        eta[i] = g[i] - xi[i];
      }
      bool nonzero = false;
      for (int x : eta) {
        if (x < 0) ok = false;
        if (x != 0) nonzero = true;
      }
      if (ok && nonzero && rs.is_root(eta)) return {xi, eta};
    }
    throw math_error("no extraspecial decomposition");
  }

  Rat n_pos(const RootCoord& a, const RootCoord& b) const {
    if (a == b) return Rat(0);
    auto it = pos.find({a, b});
    if (it != pos.end()) return it->second;
    auto it2 = pos.find({b, a});
    if (it2 != pos.end()) return -it2->second;
    return Rat(0);
  }

  /// N for arbitrary sign pattern, reduced to the positive-pair table via
  /// N_{-a,-b} = -N_{a,b} and the weighted rotation identity
  /// N_{a,b}/(c|c) = N_{b,c}/(a|a) = N_{c,a}/(b|b)  for a+b+c = 0.
  Rat n_any(const RootCoord& a, const RootCoord& b) const {
    RootCoord s = sum(a, b);
    if (!rs.is_root(s)) return Rat(0);
    bool pa = is_pos(a), pb = is_pos(b);
    if (pa && pb) return n_pos(a, b);
    if (!pa && !pb) return -n_pos(neg(a), neg(b));
    if (!pa) return -n_any(b, a);  // put the positive root first
    // a > 0, b < 0, c = -a-b
    RootCoord c = neg(s);
    if (is_pos(c)) {
      // N_{a,b} = N_{c,a} (c|c)/(b|b), pair (c, a) positive with sum -b > 0
      return n_pos(c, a) * rs.norm2(c) / rs.norm2(b);
    }
    // N_{a,b} = N_{b,c} (c|c)/(a|a) and (b, c) both negative
    return -n_pos(neg(b), neg(c)) * rs.norm2(c) / rs.norm2(a);
  }

  void build() {
    // group positive pairs with root sum by height of the sum
    std::vector<std::vector<RootCoord>> by_ht;
    for (const auto& g : rs.positive_roots) {
      int h = RootSystem::height(g);
      if (static_cast<int>(by_ht.size()) < h) by_ht.resize(h);
      by_ht[h - 1].push_back(g);
    }
    for (const auto& level : by_ht) {
      for (const auto& g : level) {
        if (RootSystem::height(g) < 2) continue;
        auto [xi, eta] = esp(g);
        pos[{xi, eta}] = Rat(p_string(xi, eta) + 1);
      }
      // non-extraspecial special pairs at this level
      for (const auto& g : level) {
        if (RootSystem::height(g) < 2) continue;
        auto [xi, eta] = esp(g);
        for (const auto& a : rs.positive_roots) {
          RootCoord b(g.size());
          bool okb = true, nz = false;
          for (size_t i = 0; i < g.size(); ++i) {
            b[i] = g[i] - a[i];
            if (b[i] < 0) okb = false;
            if (b[i] != 0) nz = true;
          }
          if (!okb || !nz || !rs.is_root(b)) continue;
          if (a == xi || b == xi) continue;  // esp pair already set
          if (pos.count({a, b})) continue;
          if (pos.count({b, a})) continue;
          // Jacobi with x_{-xi}:
          // N_{a,b} N_{-xi,g} = N_{-xi,a} N_{a-xi,b} + N_{-xi,b} N_{a,b-xi}
          Rat lhs_factor = n_any(neg(xi), g);
          Rat t1(0), t2(0);
          RootCoord axi(g.size()), bxi(g.size());
          for (size_t i = 0; i < g.size(); ++i) {
            axi[i] = a[i] - xi[i];
            bxi[i] = b[i] - xi[i];
          }
          if (rs.is_root(axi)) t1 = n_any(neg(xi), a) * n_any(axi, b);
          if (rs.is_root(bxi)) t2 = n_any(neg(xi), b) * n_any(a, bxi);
          if (lhs_factor == 0) throw math_error("degenerate extraspecial pivot");
          pos[{a, b}] = (t1 + t2) / lhs_factor;
        }
      }
    }
  }
};

}  // namespace

int ChevalleyBasis::idx_neg(int pos_root) const {
  int m = rs->num_positive();
  return m - 1 - pos_root;
}
int ChevalleyBasis::idx_cartan(int i) const { return rs->num_positive() + i; }
int ChevalleyBasis::idx_pos(int pos_root) const {
  return rs->num_positive() + rs->rank + pos_root;
}
bool ChevalleyBasis::is_cartan(int idx) const {
  int m = rs->num_positive();
  return idx >= m && idx < m + rs->rank;
}
std::optional<RootCoord> ChevalleyBasis::root_of(int idx) const {
  int m = rs->num_positive();
  if (idx < m) {
    RootCoord c = rs->positive_roots[m - 1 - idx];
    for (auto& x : c) x = -x;
    return c;
  }
  if (idx < m + rs->rank) return std::nullopt;
  return rs->positive_roots[idx - m - rs->rank];
}

Rat ChevalleyBasis::form(int a, int b) const {
  auto ra = root_of(a), rb = root_of(b);
  if (ra && rb) {
    RootCoord s = *ra;
    for (int i = 0; i < rs->rank; ++i) s[i] += (*rb)[i];
    for (int x : s)
      if (x != 0) return Rat(0);
    return Rat(2) / rs->norm2(*ra);
  }
  if (!ra && !rb) {
    int i = a - rs->num_positive(), j = b - rs->num_positive();
    // (alpha_i^vee | alpha_j^vee) = 2 A[j][i] / (alpha_i|alpha_i)
    return Rat(2) * rs->cartan[j][i] / rs->simple_norm2[i];
  }
  return Rat(0);
}

SRow ChevalleyBasis::bracket_vec(const SRow& x, const SRow& y) const {
  SRow out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      for (const auto& [k, ck] : table[a][b]) out.emplace_back(k, ca * cb * ck);
  srow_normalize(out);
  return out;
}

SMat ChevalleyBasis::ad_matrix(const SRow& x) const {
  SMat m(dim, dim);
  for (int b = 0; b < dim; ++b) {
    SRow col = bracket_vec(x, SRow{{b, Rat(1)}});
    for (const auto& [k, c] : col) m.add(k, b, c);
  }
  m.compress();
  return m;
}

SRow srow_add(const SRow& a, const SRow& b) {
  SRow out = a;
  out.insert(out.end(), b.begin(), b.end());
  srow_normalize(out);
  return out;
}
SRow srow_scale(const SRow& a, const Rat& c) {
  SRow out;
  if (c == 0) return out;
  out.reserve(a.size());
  for (const auto& [k, v] : a) out.emplace_back(k, v * c);
  return out;
}
void srow_normalize(SRow& a) {
  std::sort(a.begin(), a.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  SRow out;
  for (const auto& [k, v] : a) {
    if (!out.empty() && out.back().first == k)
      out.back().second += v;
    else
      out.emplace_back(k, v);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& p) { return p.second == 0; }),
            out.end());
  a = std::move(out);
}

ChevalleyBasis build_chevalley(const RootSystem& rs) {
  ChevalleyBasis cb;
  cb.rs = &rs;
  int m = rs.num_positive();
  cb.dim = 2 * m + rs.rank;
  NBuilder nb(rs);

  cb.table.assign(cb.dim, std::vector<SRow>(cb.dim));
  auto root_at = [&](int idx) { return cb.root_of(idx); };

  for (int a = 0; a < cb.dim; ++a) {
    for (int b = 0; b < cb.dim; ++b) {
      auto ra = root_at(a), rb = root_at(b);
      SRow out;
      if (!ra && !rb) {
        // Cartan commutes
      } else if (!ra && rb) {
        int i = a - m;
        Rat pair(0);
        for (int j = 0; j < rs.rank; ++j) pair += Rat(rs.cartan[i][j]) * (*rb)[j];
        if (pair != 0) out.emplace_back(b, pair);
      } else if (ra && !rb) {
        int i = b - m;
        Rat pair(0);
        for (int j = 0; j < rs.rank; ++j) pair += Rat(rs.cartan[i][j]) * (*ra)[j];
        if (pair != 0) out.emplace_back(a, -pair);
      } else {
        RootCoord s(rs.rank);
        bool zero = true;
        for (int i = 0; i < rs.rank; ++i) {
          s[i] = (*ra)[i] + (*rb)[i];
          if (s[i] != 0) zero = false;
        }
        if (zero) {
          // [x_beta, x_{-beta}] = beta^vee, for beta the positive one
          RootCoord beta = *ra;
          Rat sign(1);
          bool pos = false;
          for (int x : beta) {
            if (x != 0) {
              pos = x > 0;
              break;
            }
          }
          if (!pos) {
            for (auto& x : beta) x = -x;
            sign = -1;
          }
          auto cc = rs.coroot_coords(beta);
          for (int i = 0; i < rs.rank; ++i) {
            if (cc[i] == 0) continue;
            if (!is_integer(cc[i]))
              throw math_error("non-integral coroot coordinates");
            out.emplace_back(cb.idx_cartan(i), sign * cc[i]);
          }
        } else if (rs.is_root(s)) {
          Rat n = nb.n_any(*ra, *rb);
          if (!is_integer(n)) throw math_error("non-integral structure constant");
          if (n != 0) out.emplace_back(rs.root_id(s) < m
                                           ? cb.idx_pos(rs.root_id(s))
                                           : cb.idx_neg(rs.root_id(s) - m),
                                       n);
        }
      }
      srow_normalize(out);
      cb.table[a][b] = std::move(out);
    }
  }
  return cb;
}

}  // namespace wred
