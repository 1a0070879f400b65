#pragma once

// Two nonlinear coupled oscillators
//   H = eps (a^dag a + b^dag b) + phi2 a^dag b^dag b a + phi1 (a^dag a^dag a a + b^dag b^dag b b)
// rewritten through SU(1,1) generators and, on the equal-occupation (pair)
// sector, reduced to a free particle H0 + P^2 / 2m.

#include "su11/linops.hpp"
#include "su11/reps.hpp"

#include <optional>
#include <vector>

namespace su11 {

inline constexpr double kSingularDenominator = 1e-8;

/// (epsilon, phi1, phi2). Any finite triple is a valid Hamiltonian; the
/// free-particle quantities additionally need |2 phi1 + phi2| >= 1e-8 and
/// throw DomainError otherwise (see require_nonsingular).
class ModelParams {
 public:
  ModelParams(double epsilon, double phi1, double phi2);

  double epsilon() const { return epsilon_; }
  double phi1() const { return phi1_; }
  double phi2() const { return phi2_; }
  /// 2 phi1 + phi2: the quadratic coefficient of the pair-sector energy.
  double stiffness() const { return 2.0 * phi1_ + phi2_; }
  bool singular() const;
  /// Throws DomainError when 2 phi1 + phi2 is (numerically) zero.
  void require_nonsingular() const;

 private:
  double epsilon_;
  double phi1_;
  double phi2_;
};

struct FreeParticle {
  double h0;
  double mass;
  bool condensate;  // 2 phi1 + phi2 > 0: H0 is a ground state
};

struct ReductionResult {
  double p0 = 0.0;
  double h0 = 0.0;
  double mass = 0.0;
  std::vector<double> direct_spectrum;
  std::vector<double> predicted_spectrum;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Isometry embedding the pair states |n, n> into the two-mode Fock basis.
class PairSubspace {
 public:
  PairSubspace(std::size_t dim_a, std::size_t dim_b);

  const BasisSpec& two_mode_basis() const { return two_mode_basis_; }
  const BasisSpec& pair_basis() const { return pair_basis_; }
  /// (dim_a * dim_b) x dim matrix with orthonormal columns |n, n>.
  const Matrix& isometry() const { return isometry_; }

  /// V^dagger O V, labelled on the single-mode pair basis.
  OperatorMatrix restrict(const OperatorMatrix& op) const;

 private:
  BasisSpec two_mode_basis_;
  BasisSpec pair_basis_;
  Matrix isometry_;
};

OperatorMatrix build_direct_hamiltonian(const ModelParams& params, std::size_t dim_a, std::size_t dim_b);

/// (2 phi1 - eps) + (2 eps - 6 phi1) K0 + 4 phi1 K0^2 + (phi2 - 2 phi1) K+ K-.
OperatorMatrix build_k_form(const ModelParams& params, const AlgebraTriple& triple);

PairSubspace pair_subspace(std::size_t dim_a, std::size_t dim_b);

/// (3 phi1 + phi2 - eps) / (2 phi1 + phi2).
double p0_of(const ModelParams& params);

/// H0 = -(phi1 - eps)^2 / (2 phi1 + phi2), m = 1 / (4 phi1 + 2 phi2).
FreeParticle free_params(const ModelParams& params);

/// (2 phi1 + phi2) n^2 + 2 (eps - phi1) n: the direct Hamiltonian at |n, n>.
double pair_energy_closed_form(const ModelParams& params, std::size_t n);

/// H0 + P^2 / 2m on a circle basis.
OperatorMatrix free_particle_hamiltonian(const ModelParams& params, const BasisSpec& basis);

/// Circle basis whose index n carries the momentum p_n = n + 1 - P0 of pair
/// level n.
BasisSpec pair_momentum_basis(const ModelParams& params, std::size_t count);

/// Diagonalizes the direct Hamiltonian on the first n_pairs pair states and
/// compares against H0 + p_n^2 / 2m with p_n = n + 1 - P0. Per-mode
/// truncation defaults to n_pairs + 2 and must be at least that.
ReductionResult verify_reduction(const ModelParams& params, std::size_t n_pairs, double tolerance,
                                 std::optional<std::size_t> dim = std::nullopt);

}  // namespace su11
