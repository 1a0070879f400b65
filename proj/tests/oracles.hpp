#pragma once

// Independent reference constructions used by the tests. Nothing here calls
// into the library's operator algebra; matrices are filled element by element
// from textbook matrix-element formulas.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace su11::oracle {

using Matrix = Eigen::MatrixXcd;

struct SpinMatrices {
  Matrix sz, splus, sminus;
};

// Basis order m = -S, ..., S (index j = m + S).
//   S-|m> = sqrt(S(S+1) - m(m-1)) |m-1>,  S+|m> = sqrt(S(S+1) - m(m+1)) |m+1>
inline SpinMatrices spin_ladder(double s) {
  const auto d = static_cast<Eigen::Index>(std::lround(2 * s)) + 1;
  SpinMatrices out{Matrix::Zero(d, d), Matrix::Zero(d, d), Matrix::Zero(d, d)};
  for (Eigen::Index j = 0; j < d; ++j) {
    const double m = -s + static_cast<double>(j);
    out.sz(j, j) = m;
    if (j > 0) out.sminus(j - 1, j) = std::sqrt(s * (s + 1) - m * (m - 1));
    if (j + 1 < d) out.splus(j + 1, j) = std::sqrt(s * (s + 1) - m * (m + 1));
  }
  return out;
}

// <n-1| K- |n> for the one-boson discrete-series realization.
inline double mp_lowering_element(double k, std::size_t n) {
  const double x = static_cast<double>(n);
  return std::sqrt(x * (2 * k + x - 1));
}

// Diagonal of the two-oscillator Hamiltonian at |n_a, n_b>.
inline double oscillator_energy(double eps, double phi1, double phi2, std::size_t na, std::size_t nb) {
  const double a = static_cast<double>(na);
  const double b = static_cast<double>(nb);
  return eps * (a + b) + phi2 * a * b + phi1 * (a * (a - 1) + b * (b - 1));
}

// Roots of the physicists' Hermite polynomial H_n by Newton iteration on the
// normalized three-term recurrence (asymptotic initial guesses), ascending.
inline std::vector<double> hermite_roots(int n) {
  constexpr double kPiM4 = 0.7511255444649425;  // pi^(-1/4)
  std::vector<double> x(static_cast<std::size_t>(n));
  double z = 0.0;
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1) - 1.85575 * std::pow(2.0 * n + 1, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * x[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * x[1];
    } else {
      z = 2.0 * z - x[static_cast<std::size_t>(i - 2)];
    }
    for (int it = 0; it < 100; ++it) {
      double p1 = kPiM4;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      const double pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-14) break;
    }
    x[static_cast<std::size_t>(i)] = z;
    x[static_cast<std::size_t>(n - 1 - i)] = -z;
  }
  std::vector<double> asc(x.rbegin(), x.rend());
  return asc;
}

inline double max_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Infinity if the lengths differ.
inline double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return HUGE_VAL;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace su11::oracle
