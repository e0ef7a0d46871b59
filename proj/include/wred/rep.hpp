#ifndef WRED_REP_HPP
#define WRED_REP_HPP

#include <vector>

#include "wred/rootsys.hpp"
#include "wred/uenv.hpp"

namespace wred {

/// Finite-dimensional irreducible representation, basis-explicit.
struct Irrep {
  int dim = 0;
  /// matrices[b](i,j): action of Chevalley basis vector x_b, dense rational
  std::vector<std::vector<QVec>> matrices;

  /// image of a coordinate vector
  std::vector<QVec> act(const SRow& x) const;
};

/// Builds L(lambda) for small dominant integral lambda via the Shapovalov
/// form on the Verma module: weight-space Gram matrices are computed in
/// U(g), the radical is quotiented out exactly.
Irrep build_irrep(UEnv& env, const QVec& lambda);

bool matrix_power_is_zero(const std::vector<QVec>& m, int power);

}  // namespace wred

#endif
