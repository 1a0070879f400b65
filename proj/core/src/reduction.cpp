#include "su11/reduction.hpp"

#include "su11/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace su11 {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

ModelParams::ModelParams(double epsilon, double phi1, double phi2)
    : epsilon_(epsilon), phi1_(phi1), phi2_(phi2) {
  if (!std::isfinite(epsilon) || !std::isfinite(phi1) || !std::isfinite(phi2)) {
    throw DomainError("ModelParams: parameters must be finite");
  }
}

bool ModelParams::singular() const { return std::abs(stiffness()) < kSingularDenominator; }

void ModelParams::require_nonsingular() const {
  if (singular()) {
    std::ostringstream msg;
    msg << "2*phi1 + phi2 = " << stiffness() << " is singular (mass and P0 are undefined)";
    throw DomainError(msg.str());
  }
}

PairSubspace::PairSubspace(std::size_t dim_a, std::size_t dim_b)
    : two_mode_basis_(BasisSpec::fock(dim_a, dim_b)), pair_basis_(BasisSpec::fock(dim_a)) {
  if (dim_a != dim_b) {
    std::ostringstream msg;
    msg << "pair_subspace: mode dimensions must be equal, got " << dim_a << " and " << dim_b;
    throw DomainError(msg.str());
  }
  isometry_ = Matrix::Zero(idx(dim_a * dim_b), idx(dim_a));
  for (std::size_t n = 0; n < dim_a; ++n) isometry_(idx(n * dim_b + n), idx(n)) = 1.0;
}

OperatorMatrix PairSubspace::restrict(const OperatorMatrix& op) const {
  if (!(op.basis() == two_mode_basis_)) {
    throw DimensionError("PairSubspace::restrict: operator lives on " + op.basis().describe() +
                         ", expected " + two_mode_basis_.describe());
  }
  return {pair_basis_, isometry_.adjoint() * op.entries() * isometry_};
}

PairSubspace pair_subspace(std::size_t dim_a, std::size_t dim_b) { return {dim_a, dim_b}; }

OperatorMatrix build_direct_hamiltonian(const ModelParams& params, std::size_t dim_a, std::size_t dim_b) {
  const auto [a1, a1dag] = bose_ladder(dim_a);
  const auto [b1, b1dag] = bose_ladder(dim_b);
  const auto ia = OperatorMatrix::identity(a1.basis());
  const auto ib = OperatorMatrix::identity(b1.basis());
  const auto a = tensor(a1, ib);
  const auto adag = tensor(a1dag, ib);
  const auto b = tensor(ia, b1);
  const auto bdag = tensor(ia, b1dag);

  return params.epsilon() * (adag * a + bdag * b) + params.phi2() * (adag * bdag * b * a) +
         params.phi1() * (adag * adag * a * a + bdag * bdag * b * b);
}

OperatorMatrix build_k_form(const ModelParams& params, const AlgebraTriple& triple) {
  if (triple.kind() != TripleKind::hyperbolic) {
    throw KindError("build_k_form: expected a hyperbolic triple, got " + rep_name(triple.params()));
  }
  const double eps = params.epsilon();
  const double phi1 = params.phi1();
  const double phi2 = params.phi2();
  const auto& k0 = triple.k0();
  const auto id = OperatorMatrix::identity(triple.basis());
  return (2.0 * phi1 - eps) * id + (2.0 * eps - 6.0 * phi1) * k0 + 4.0 * phi1 * (k0 * k0) +
         (phi2 - 2.0 * phi1) * (triple.kplus() * triple.kminus());
}

double p0_of(const ModelParams& params) {
  params.require_nonsingular();
  // (3 phi1 + phi2 - eps) / (2 phi1 + phi2), split as 1 + (phi1 - eps) / (2 phi1 + phi2)
  // so fewer roundings reach the result.
  return 1.0 + (params.phi1() - params.epsilon()) / params.stiffness();
}

FreeParticle free_params(const ModelParams& params) {
  params.require_nonsingular();
  const double d = params.phi1() - params.epsilon();
  return {-(d * d) / params.stiffness(), 1.0 / (4.0 * params.phi1() + 2.0 * params.phi2()),
          params.stiffness() > 0.0};
}

double pair_energy_closed_form(const ModelParams& params, std::size_t n) {
  const double x = static_cast<double>(n);
  return params.stiffness() * x * x + 2.0 * (params.epsilon() - params.phi1()) * x;
}

OperatorMatrix free_particle_hamiltonian(const ModelParams& params, const BasisSpec& basis) {
  const auto fp = free_params(params);
  const auto p = circle_momentum(basis).p;
  return fp.h0 * OperatorMatrix::identity(basis) + (1.0 / (2.0 * fp.mass)) * (p * p);
}

BasisSpec pair_momentum_basis(const ModelParams& params, std::size_t count) {
  return BasisSpec::circle(1.0 - p0_of(params), count);
}

ReductionResult verify_reduction(const ModelParams& params, std::size_t n_pairs, double tolerance,
                                 std::optional<std::size_t> dim) {
  params.require_nonsingular();
  if (n_pairs < 2) throw DomainError("verify_reduction: need at least 2 pair levels");
  const std::size_t d = dim.value_or(n_pairs + 2);
  if (d < n_pairs + 2) {
    std::ostringstream msg;
    msg << "verify_reduction: per-mode truncation " << d << " is too small for " << n_pairs
        << " pair levels (need >= " << n_pairs + 2 << ")";
    throw DomainError(msg.str());
  }

  ReductionResult result;
  result.p0 = p0_of(params);
  const auto fp = free_params(params);
  result.h0 = fp.h0;
  result.mass = fp.mass;
  result.tolerance = tolerance;

  // The pair block is invariant, so restrict first and diagonalize the
  // n_pairs-level block only.
  const auto h = build_direct_hamiltonian(params, d, d);
  const auto pairs = pair_subspace(d, d);
  const Matrix v = pairs.isometry().leftCols(idx(n_pairs));
  const OperatorMatrix block(BasisSpec::fock(n_pairs), v.adjoint() * h.entries() * v);
  result.direct_spectrum = hermitian_eigensystem(block).values;

  result.predicted_spectrum.reserve(n_pairs);
  for (std::size_t n = 0; n < n_pairs; ++n) {
    const double p = static_cast<double>(n) + 1.0 - result.p0;
    result.predicted_spectrum.push_back(result.h0 + p * p / (2.0 * result.mass));
  }
  std::sort(result.predicted_spectrum.begin(), result.predicted_spectrum.end());

  for (std::size_t i = 0; i < n_pairs; ++i) {
    result.max_deviation = std::max(result.max_deviation,
                                    std::abs(result.direct_spectrum[i] - result.predicted_spectrum[i]));
  }
  result.passed = result.max_deviation <= tolerance;
  return result;
}

}  // namespace su11
