#ifndef BELLCAT_CAT_STATE_HPP
#define BELLCAT_CAT_STATE_HPP

#include <utility>

#include "bellcat/linalg.hpp"
#include "bellcat/types.hpp"

namespace bellcat {

/// Two-spin entangled cat state c1|P1> + c2|P2> with c1 = e^{i eta} sin(xi),
/// c2 = e^{-i eta} cos(xi). The product components P1/P2 are
/// (+s,-s)/(-s,+s) for antiparallel polarization and (+s,+s)/(-s,-s) for
/// parallel. xi and eta are stored as given; reduction mod 2pi is applied
/// for reporting only.
struct CatState {
  Spin spin;
  Polarization polarization;
  double xi;
  double eta;

  Complex c1() const;
  Complex c2() const;

  /// Dicke indices (i1, i2) of the two product components; index 0 is m=+s.
  std::pair<int, int> component1() const;
  std::pair<int, int> component2() const;
  /// Flattened product-basis slots, slot = i1*d + i2.
  int component1_slot() const;
  int component2_slot() const;

  /// State vector in the product Dicke basis, dimension d^2.
  StateVector vector() const;

  double xi_reduced() const;
  double eta_reduced() const;
};

CatState make_cat_state(const Spin& spin, Polarization polarization, double xi,
                        double eta);

/// rho = rho_local + rho_nonlocal in the product Dicke basis, each d^2 x d^2.
/// rho_local holds the populations of the two components, rho_nonlocal the
/// interference coherences (zero diagonal, zero trace).
struct DensityDecomposition {
  ComplexMatrix rho_total;
  ComplexMatrix rho_local;
  ComplexMatrix rho_nonlocal;
};

DensityDecomposition density_decomposition(const CatState& state);

}  // namespace bellcat

#endif
