// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace starris {

using cx = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

/// Wrap an angle into [0, 2*pi).
inline double wrap_phase(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  // fmod can return exactly 2*pi after the correction when theta is a tiny
  // negative number; fold that back to 0.
  if (t >= kTwoPi) t = 0.0;
  return t;
}

/// Error carrying a list of individual validation issues.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> issues)
      : std::runtime_error(join(issues)), issues_(std::move(issues)) {}
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s = "validation failed:";
    for (const auto& e : v) {
      s += "\n  - ";
      s += e;
    }
    return s;
  }
  std::vector<std::string> issues_;
};

}  // namespace starris
