#ifndef WRED_UENV_HPP
#define WRED_UENV_HPP

#include <map>
#include <unordered_map>
#include <vector>

#include "wred/poly.hpp"
#include "wred/rational.hpp"
#include "wred/rootsys.hpp"

namespace wred {

/// PBW monomial over the Chevalley basis: sorted (basis index, exponent)
/// pairs.  The basis order puts negative root vectors first, then Cartan,
/// then positive root vectors, so highest-weight evaluations read off the
/// Cartan-only part directly.
using UMono = std::vector<std::pair<int, int>>;
using UPoly = std::map<UMono, Rat>;

struct UMonoHash {
  size_t operator()(const std::pair<int, UMono>& key) const {
    size_t h = std::hash<int>()(key.first);
    for (const auto& [i, e] : key.second)
      h = h * 1000003u + std::hash<int>()(i * 64 + e);
    return h;
  }
};

/// Exact arithmetic in U(g) by commutator straightening, with memoized
/// generator-by-monomial products.
class UEnv {
 public:
  explicit UEnv(const ChevalleyBasis& cb) : cb_(&cb) {}

  const ChevalleyBasis& cb() const { return *cb_; }

  static UMono one() { return {}; }
  static UMono gen(int i) { return {{i, 1}}; }
  static int degree(const UMono& m) {
    int d = 0;
    for (const auto& [i, e] : m) d += e;
    return d;
  }

  UPoly mul_gen_mono(int g, const UMono& m);  // x_g * m
  UPoly mul_mono_gen(const UMono& m, int g);  // m * x_g
  UPoly mul(const UPoly& a, const UPoly& b);
  UPoly mul_poly_gen(const UPoly& a, int g);
  UPoly mul_gen_poly(int g, const UPoly& a);

  /// commutator [a, b]
  UPoly commutator(const UPoly& a, const UPoly& b);

  /// transpose antiautomorphism: e_beta <-> f_beta, Cartan fixed
  UPoly transpose(const UPoly& a);

  /// Cartan-only component as a polynomial in the h_i (rank variables).
  Poly cartan_part(const UPoly& a) const;

  /// Evaluate the Cartan-only component at a weight (fundamental-weight
  /// coordinates): h_i |-> <w, alpha_i^vee> = w_i.
  Rat highest_weight_eval(const UPoly& a, const QVec& w) const;

  static void add_to(UPoly& target, const UPoly& src, const Rat& c = Rat(1)) {
    for (const auto& [m, v] : src) {
      auto it = target.find(m);
      Rat nv = v * c;
      if (nv == 0) continue;
      if (it == target.end()) {
        target[m] = nv;
      } else {
        it->second += nv;
        if (it->second == 0) target.erase(it);
      }
    }
  }

 private:
  const ChevalleyBasis* cb_;
  std::unordered_map<std::pair<int, UMono>, UPoly, UMonoHash> lcache_, rcache_;
};

/// Symmetrization S(g) -> U(g).  The polynomial lives over the full Chevalley
/// basis (one variable per basis element, same index order).
UPoly symmetrize(UEnv& env, const Poly& p);

/// Basis of ad-invariant polynomials of fixed total degree in S(g).
std::vector<Poly> invariant_polynomials(const ChevalleyBasis& cb, int degree);

}  // namespace wred

#endif
