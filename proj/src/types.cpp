#include "bellcat/types.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace bellcat {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("cannot parse " + std::string(what) + " from '" +
                                std::string(text) + "'");
  return value;
}

}  // namespace

Spin Spin::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Spin(2 * parse_int(text, "spin"));
  if (text.substr(slash + 1) != "2")
    throw std::invalid_argument("spin denominator must be 2 in '" +
                                std::string(text) + "'");
  return Spin(parse_int(text.substr(0, slash), "spin numerator"));
}

Direction::Direction(double theta_in, double phi_in) : theta(theta_in), phi(phi_in) {
  constexpr double pi = std::numbers::pi;
  if (!std::isfinite(theta) || !std::isfinite(phi))
    throw std::invalid_argument("Direction: angles must be finite");
  if (theta < 0.0 || theta > pi)
    throw std::invalid_argument("Direction: theta must lie in [0, pi], got " +
                                std::to_string(theta));
  phi = std::fmod(phi, 2.0 * pi);
  if (phi < 0.0) phi += 2.0 * pi;
}

std::array<double, 3> Direction::unit_vector() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

std::string to_string(Polarization p) {
  return p == Polarization::Antiparallel ? "anti" : "para";
}

Polarization parse_polarization(std::string_view text) {
  if (text == "anti" || text == "antiparallel") return Polarization::Antiparallel;
  if (text == "para" || text == "parallel") return Polarization::Parallel;
  throw std::invalid_argument("unknown polarization '" + std::string(text) +
                              "' (expected anti|para)");
}

}  // namespace bellcat
