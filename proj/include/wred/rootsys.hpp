#ifndef WRED_ROOTSYS_HPP
#define WRED_ROOTSYS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wred/rational.hpp"
#include "wred/smat.hpp"

namespace wred {

/// Root coordinates are integer vectors in the simple-root basis.
using RootCoord = std::vector<int>;

/// Finite simple root system with the normalized invariant form (theta|theta)=2.
///
/// Weights are handled in fundamental-weight coordinates throughout; the
/// Cartan matrix convention is A[i][j] = <alpha_j, alpha_i^vee>.
struct RootSystem {
  char type = 0;
  int rank = 0;
  std::vector<std::vector<int>> cartan;  // A[i][j] = <alpha_j, alpha_i^vee>
  std::vector<RootCoord> positive_roots; // lex-sorted on simple-root coords
  std::vector<Rat> simple_norm2;         // (alpha_i | alpha_i)
  QVec rho;                              // fundamental-weight coords (all ones)
  int coxeter_h = 0;
  int dual_coxeter_hv = 0;
  int lacing_rv = 0;
  int dual_hv_langlands = 0;             // h^vee of the Langlands dual type
  RootCoord theta;                       // highest root
  RootCoord theta_s;                     // highest short root (= theta if simply laced)

  std::string label() const { return std::string(1, type) + std::to_string(rank); }
  int num_positive() const { return static_cast<int>(positive_roots.size()); }

  // --- root bookkeeping -----------------------------------------------------
  bool is_root(const RootCoord& c) const { return root_index.count(c) > 0; }
  int root_id(const RootCoord& c) const;            // id over all roots, see below
  const RootCoord& root_of_id(int id) const { return all_roots[id]; }
  int num_roots() const { return static_cast<int>(all_roots.size()); }
  std::vector<RootCoord> all_roots;                 // positives then negatives
  std::map<RootCoord, int> root_index;

  static int height(const RootCoord& c) {
    int h = 0;
    for (int x : c) h += x;
    return h;
  }

  // --- exact form and pairings ----------------------------------------------
  Rat form_roots(const RootCoord& a, const RootCoord& b) const;   // (a|b)
  Rat norm2(const RootCoord& a) const { return form_roots(a, a); }
  /// <w, alpha^vee> for w in fundamental-weight coords.
  Rat pair_coroot(const QVec& w, const RootCoord& alpha) const;
  /// <w, alpha_i^vee> is just the i-th fundamental-weight coordinate.
  /// Coroot alpha^vee expanded over simple coroots (integer coefficients).
  std::vector<Rat> coroot_coords(const RootCoord& alpha) const;
  /// Form between two weights given in fundamental-weight coordinates.
  Rat form_weights(const QVec& a, const QVec& b) const;
  /// Convert fundamental-weight coords -> simple-root coords.
  QVec weight_to_root_coords(const QVec& w) const;
  /// Root -> fundamental-weight coords (columns of the Cartan matrix).
  QVec root_to_weight_coords(const RootCoord& a) const;
  /// (w | alpha) for w in fundamental-weight coords, alpha a root.
  Rat form_weight_root(const QVec& w, const RootCoord& alpha) const;
  /// <w, rho^vee> = height functional on weights.
  Rat pair_rho_check(const QVec& w) const;
  /// rho^vee as an element of h^* via nu (fundamental-weight coords).
  QVec nu_rho_check() const;
};

RootSystem build_root_system(char type, int rank);
RootSystem build_root_system(const std::string& label);
RootSystem langlands_dual(const RootSystem& rs);

/// Unique dominant representative of the Weyl orbit of v (fundamental-weight
/// coordinates), by simple-reflection ascent.
QVec weyl_dominant_representative(const RootSystem& rs, QVec v);

/// All Weyl images of v; only sensible at small rank (used by test oracles).
std::vector<QVec> weyl_orbit(const RootSystem& rs, const QVec& v);

/// Chevalley basis of g: basis order is  x_{-beta_m} ... x_{-beta_1}, h_1..h_l,
/// x_{beta_1} ... x_{beta_m}  with beta_i the lex-sorted positive roots.
/// Structure constants follow the extraspecial-pair sign convention with
/// lexicographic root ordering.
struct ChevalleyBasis {
  const RootSystem* rs = nullptr;
  int dim = 0;

  // basis index helpers
  int idx_neg(int pos_root) const;    // x_{-beta}
  int idx_cartan(int i) const;        // h_i
  int idx_pos(int pos_root) const;    // x_{beta}
  bool is_cartan(int idx) const;
  /// root attached to a basis vector; nullopt for Cartan indices
  std::optional<RootCoord> root_of(int idx) const;

  /// bracket table: [x_a, x_b] as sparse vector over the basis
  const SRow& bracket(int a, int b) const { return table[a][b]; }
  std::vector<std::vector<SRow>> table;

  /// normalized invariant form on g: (x_a | x_b)
  Rat form(int a, int b) const;

  /// [x, y] for sparse coordinate vectors
  SRow bracket_vec(const SRow& x, const SRow& y) const;
  /// matrix of ad(x) acting on the full basis
  SMat ad_matrix(const SRow& x) const;
};

ChevalleyBasis build_chevalley(const RootSystem& rs);

/// sparse coordinate-vector helpers shared by nilp/brst
SRow srow_add(const SRow& a, const SRow& b);
SRow srow_scale(const SRow& a, const Rat& c);
void srow_normalize(SRow& a);

}  // namespace wred

#endif
