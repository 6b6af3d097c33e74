#include "bellcat/cat_state.hpp"

#include <cmath>
#include <numbers>

namespace bellcat {

Complex CatState::c1() const { return std::polar(std::sin(xi), eta); }
Complex CatState::c2() const { return std::polar(std::cos(xi), -eta); }

std::pair<int, int> CatState::component1() const {
  const int last = spin.dim() - 1;
  return polarization == Polarization::Antiparallel ? std::pair{0, last}
                                                    : std::pair{0, 0};
}

std::pair<int, int> CatState::component2() const {
  const int last = spin.dim() - 1;
  return polarization == Polarization::Antiparallel ? std::pair{last, 0}
                                                    : std::pair{last, last};
}

int CatState::component1_slot() const {
  const auto [i1, i2] = component1();
  return i1 * spin.dim() + i2;
}

int CatState::component2_slot() const {
  const auto [i1, i2] = component2();
  return i1 * spin.dim() + i2;
}

StateVector CatState::vector() const {
  const int d = spin.dim();
  StateVector v = StateVector::Zero(d * d);
  v[component1_slot()] = c1();
  v[component2_slot()] = c2();
  return v;
}

namespace {
double reduce_2pi(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(angle, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}
}  // namespace

double CatState::xi_reduced() const { return reduce_2pi(xi); }
double CatState::eta_reduced() const { return reduce_2pi(eta); }

CatState make_cat_state(const Spin& spin, Polarization polarization, double xi,
                        double eta) {
  if (!std::isfinite(xi) || !std::isfinite(eta))
    throw std::invalid_argument("make_cat_state: xi and eta must be finite");
  return CatState{spin, polarization, xi, eta};
}

DensityDecomposition density_decomposition(const CatState& state) {
  const int dd = state.spin.dim() * state.spin.dim();
  const int p1 = state.component1_slot();
  const int p2 = state.component2_slot();
  const double sx = std::sin(state.xi);
  const double cx = std::cos(state.xi);

  DensityDecomposition out;
  out.rho_local = ComplexMatrix::Zero(dd, dd);
  out.rho_local(p1, p1) = sx * sx;
  out.rho_local(p2, p2) = cx * cx;

  out.rho_nonlocal = ComplexMatrix::Zero(dd, dd);
  const Complex coherence = sx * cx * std::polar(1.0, 2.0 * state.eta);
  out.rho_nonlocal(p1, p2) = coherence;
  out.rho_nonlocal(p2, p1) = std::conj(coherence);

  out.rho_total = out.rho_local + out.rho_nonlocal;
  return out;
}

}  // namespace bellcat
