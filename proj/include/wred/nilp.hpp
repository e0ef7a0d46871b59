#ifndef WRED_NILP_HPP
#define WRED_NILP_HPP

#include <map>
#include <string>
#include <vector>

#include "wred/poly.hpp"
#include "wred/rootsys.hpp"

namespace wred {

/// sl2-triple {e, h, f} with [h,e]=2e, [e,f]=h, [h,f]=-2f, elements given as
/// sparse coordinate vectors over the Chevalley basis.  chi = nu(f).
struct NilpotentDatum {
  std::string label;  // "principal" | "minimal" | "p=..." partition
  SRow e, h, f;
  /// chi(x_b) = (f | x_b) per basis vector
  QVec chi;
};

/// Dynkin grading g = (+) g_j by ad h / 2.  Degrees are stored doubled
/// (twoj = 2j) so half-integers stay exact integers.
struct DynkinGrading {
  std::vector<int> twoj;                  // per basis index
  std::map<int, std::vector<int>> pieces; // 2j -> basis indices
  std::vector<int> g_half;                // basis of g_{1/2}
  std::vector<int> g_ge1;                 // basis of g_{>=1}
  std::vector<int> g_pos;                 // basis of g_{>0} (g_half first)
  std::vector<SRow> centralizer_e;        // basis of g^e, graded vectors
  std::vector<int> centralizer_twoj;      // grading degree per g^e vector
  std::vector<int> kazhdan_deg2;          // 2*(d_j + 1) per g^e vector
};

NilpotentDatum principal_triple(const ChevalleyBasis& cb);
NilpotentDatum minimal_triple(const ChevalleyBasis& cb);
/// Jordan-block triple for type A_{n-1} from a partition of n (n <= 6).
NilpotentDatum sl2_triple_typeA(const ChevalleyBasis& cb,
                                const std::vector<int>& partition);
/// Parses the CLI nilpotent label: "principal", "minimal", "p=2,1".
NilpotentDatum triple_from_label(const ChevalleyBasis& cb,
                                 const std::string& label);

DynkinGrading dynkin_grading(const ChevalleyBasis& cb, const NilpotentDatum& nd);

/// chi([x, y]) for x, y in g_{1/2}; rejects arguments outside g_{1/2}.
Rat half_form(const ChevalleyBasis& cb, const DynkinGrading& dg,
              const NilpotentDatum& nd, const SRow& x, const SRow& y);

/// Lagrangian of (g_{1/2}, chi([.,.])) by symplectic reduction of the
/// Chevalley basis; `alternate` picks the complementary Lagrangian.
std::vector<SRow> lagrangian(const ChevalleyBasis& cb, const DynkinGrading& dg,
                             const NilpotentDatum& nd, bool alternate = false);

/// Kirillov-Kostant bracket on C[g^*]; polynomials over the Chevalley basis
/// coordinates.
Poly kk_bracket(const ChevalleyBasis& cb, const Poly& p, const Poly& q);

/// Associated-variety membership test of level-denominator q:
/// (ad x)^{2q} = 0 when (q, r^vee) = 1, else pi_{theta_s}(x)^{2q/r^vee} = 0.
bool variety_membership(const RootSystem& rs, const ChevalleyBasis& cb,
                        const SRow& x, int q);

}  // namespace wred

#endif
