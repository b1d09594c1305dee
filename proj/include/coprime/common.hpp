#pragma once

#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace coprime {

inline constexpr const char* kVersion = "1.0.0";

// Density constant p = 6/pi^2, the probability that two random integers
// are coprime.
inline constexpr double kCoprimeDensity =
    6.0 / (std::numbers::pi_v<double> * std::numbers::pi_v<double>);

// Thrown when a requested computation exceeds a configured resource cap
// (distinct from domain errors so the CLI can map it to exit code 3).
class resource_cap_error : public std::runtime_error {
 public:
  explicit resource_cap_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrown when an iterative solver fails to converge; carries diagnostics.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double last_value,
                    double last_residual, std::int64_t iterations)
      : std::runtime_error(what),
        last_value(last_value),
        last_residual(last_residual),
        iterations(iterations) {}
  double last_value;
  double last_residual;
  std::int64_t iterations;
};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("64-bit multiplication overflow");
  return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("64-bit addition overflow");
  return out;
}

}  // namespace coprime
