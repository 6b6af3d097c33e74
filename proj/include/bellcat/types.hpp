#ifndef BELLCAT_TYPES_HPP
#define BELLCAT_TYPES_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bellcat {

/// Thrown when a computation leaves its numerical contract (underflow,
/// residuals out of tolerance, degenerate spectra).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when two independent evaluation routes disagree beyond tolerance.
struct ConsistencyError : NumericalError {
  using NumericalError::NumericalError;
};

/// Spin quantum number stored as the integer 2s, so half-integer spins stay
/// exact and the parity factor (-1)^{2s} is just a parity test on 2s.
class Spin {
 public:
  static constexpr int kMaxTwiceS = 60;

  explicit Spin(int twice_s) : twice_s_(twice_s) {
    if (twice_s < 1)
      throw std::invalid_argument("Spin: twice_s must be >= 1 (got " +
                                  std::to_string(twice_s) + ")");
    if (twice_s > kMaxTwiceS)
      throw std::invalid_argument("Spin: twice_s must be <= " +
                                  std::to_string(kMaxTwiceS));
  }

  int twice_s() const { return twice_s_; }
  int dim() const { return twice_s_ + 1; }
  double value() const { return 0.5 * twice_s_; }
  // s^2 formed from the exact rational (2s)^2/4 before conversion.
  double value_squared() const {
    return 0.25 * static_cast<double>(twice_s_) * static_cast<double>(twice_s_);
  }
  bool half_integer() const { return twice_s_ % 2 != 0; }
  /// (-1)^{2s}: -1 for half-integer spin, +1 for integer spin.
  int parity() const { return half_integer() ? -1 : +1; }
  /// m value at Dicke index i, ordering m = s, s-1, ..., -s.
  double m_at(int index) const { return 0.5 * (twice_s_ - 2 * index); }

  /// Accepts "k/2" for half-integers or a plain integer literal, e.g. "3/2", "2".
  static Spin parse(std::string_view text);

  friend bool operator==(const Spin&, const Spin&) = default;

 private:
  int twice_s_;
};

/// Measurement direction on the unit sphere. phi is wrapped into [0, 2pi).
struct Direction {
  double theta;  // polar angle, [0, pi]
  double phi;    // azimuthal angle, [0, 2pi)

  Direction(double theta_in, double phi_in);
  std::array<double, 3> unit_vector() const;
};

enum class Polarization { Antiparallel, Parallel };

inline int polarization_sign(Polarization p) {
  // Sign convention of the local correlation: - for antiparallel, + for parallel.
  return p == Polarization::Antiparallel ? -1 : +1;
}

std::string to_string(Polarization p);
Polarization parse_polarization(std::string_view text);

}  // namespace bellcat

#endif
