// Randomized invariants with fixed seeds. Generators are hand-rolled on top of
// std::mt19937_64 so failures replay exactly.

#include <doctest.h>

#include "oracles.hpp"
#include "su11/algebra.hpp"
#include "su11/linops.hpp"
#include "su11/reduction.hpp"
#include "su11/reps.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace su11;

namespace {

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }

  Matrix complex_matrix(std::size_t n) {
    Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Complex(uniform(-1, 1), uniform(-1, 1));
    return m;
  }

  OperatorMatrix op(const BasisSpec& basis) { return OperatorMatrix(basis, complex_matrix(basis.dim())); }

  OperatorMatrix hermitian(const BasisSpec& basis) {
    const Matrix m = complex_matrix(basis.dim());
    return OperatorMatrix(basis, (m + m.adjoint()) * 0.5);
  }

  // Uniform in [-1, 1]^3, rejecting |2 phi1 + phi2| < 0.05.
  ModelParams model() {
    for (;;) {
      const double eps = uniform(-1, 1), phi1 = uniform(-1, 1), phi2 = uniform(-1, 1);
      if (std::abs(2 * phi1 + phi2) >= 0.05) return ModelParams(eps, phi1, phi2);
    }
  }
};

OperatorMatrix triple_k0_sq(const AlgebraTriple& t) { return t.k0() * t.k0(); }

}  // namespace

TEST_CASE("property: exp(iH) exp(-iH) = I for random Hermitian H") {
  Gen g(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto basis = BasisSpec::fock(g.index(4, 24));
    const auto h = g.hermitian(basis);
    const auto u = unitary_exp(h, +1);
    const auto v = unitary_exp(h, -1);
    CHECK(maxabs_norm(u * v - OperatorMatrix::identity(basis)) < 1e-12);
    CHECK(maxabs_norm(u.adjoint() - v) < 1e-12);
  }
}

TEST_CASE("property: commutator antisymmetry is exact") {
  Gen g(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto basis = BasisSpec::fock(g.index(2, 16));
    const auto a = g.op(basis);
    const auto b = g.op(basis);
    CHECK(maxabs_norm(commutator(a, b) + commutator(b, a)) == 0.0);
  }
}

TEST_CASE("property: spectrum is invariant under basis permutation") {
  Gen g(13);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = g.index(4, 20);
    const auto basis = BasisSpec::fock(n);
    const auto h = g.hermitian(basis);
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    std::shuffle(perm.begin(), perm.end(), g.rng);
    Eigen::PermutationMatrix<Eigen::Dynamic> p(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) p.indices()[static_cast<Eigen::Index>(i)] = perm[i];
    const Matrix permuted = p * h.entries() * p.transpose();
    const auto e1 = hermitian_eigensystem(h).values;
    const auto e2 = hermitian_eigensystem(OperatorMatrix(basis, permuted)).values;
    CHECK(oracle::max_diff(e1, e2) < 1e-9);
  }
}

TEST_CASE("property: tensor mixed product (A x B)(C x D) = AC x BD") {
  Gen g(14);
  for (int trial = 0; trial < 8; ++trial) {
    const auto ba = BasisSpec::fock(g.index(2, 6));
    const auto bb = BasisSpec::fock(g.index(2, 6));
    const auto a = g.op(ba), c = g.op(ba);
    const auto b = g.op(bb), d = g.op(bb);
    CHECK(maxabs_norm(tensor(a, b) * tensor(c, d) - tensor(a * c, b * d)) < 1e-12);
  }
}

TEST_CASE("property: interior projector is an idempotent Hermitian diagonal") {
  Gen g(15);
  for (int trial = 0; trial < 10; ++trial) {
    const bool two = trial % 2 == 1;
    const auto basis = two ? BasisSpec::fock(g.index(5, 9), g.index(5, 9)) : BasisSpec::fock(g.index(5, 30));
    const std::size_t margin = g.index(0, 2);
    const auto p = interior_projector(basis, margin);
    CHECK(maxabs_norm(p * p - p) == 0.0);
    CHECK(hermiticity_residual(p) == 0.0);
  }
}

TEST_CASE("property: circle realization closes for a grid of complex P0") {
  const double grid[] = {-1.0, -0.3, 0.0, 0.7, 2.0};
  const auto basis = BasisSpec::circle(-32, 64);
  for (double re : grid) {
    for (double im : grid) {
      const Complex p0(re, im);
      CAPTURE(p0);
      const auto t = saf_realization(p0, basis);
      const auto rep = check_commutators(t, {2, 1e-12, {}});
      for (const auto& c : rep.checks()) CHECK(c.residual <= 1e-12);
      CHECK(check_casimir(t, {2, 1e-10, {}}).overall_passed());
    }
  }
}

TEST_CASE("property: the Casimir commutes with K0 on the interior") {
  Gen g(16);
  for (int trial = 0; trial < 6; ++trial) {
    const Complex p0(g.uniform(-2, 2), g.uniform(-2, 2));
    const auto t = saf_realization(p0, BasisSpec::circle(-20, 40));
    const auto c = casimir_su11(t);
    const auto proj = interior_projector(t.basis(), 2);
    CHECK(maxabs_norm(proj * commutator(c, t.k0()) * proj) < 1e-10);
    const auto mp = mp_realization(g.uniform(0.25, 3), 32);
    const auto cm = casimir_su11(mp);
    const auto pm = interior_projector(mp.basis(), 2);
    CHECK(maxabs_norm(pm * commutator(cm, mp.k0()) * pm) < 1e-10);
  }
}

TEST_CASE("property: K-form equals the direct Hamiltonian (20 draws)") {
  Gen g(17);
  const auto t = two_mode(8, 8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto params = g.model();
    CAPTURE(params.epsilon());
    CAPTURE(params.phi1());
    CAPTURE(params.phi2());
    CHECK(maxabs_norm(build_k_form(params, t) - build_direct_hamiltonian(params, 8, 8)) <= 1e-10);
  }
}

TEST_CASE("property: reduction spectra agree three ways (20 draws)") {
  Gen g(18);
  for (int trial = 0; trial < 20; ++trial) {
    const auto params = g.model();
    CAPTURE(params.epsilon());
    CAPTURE(params.phi1());
    CAPTURE(params.phi2());
    const auto r = verify_reduction(params, 16, 1e-9);
    CHECK(r.passed);
    CHECK(r.max_deviation <= 1e-9);

    std::vector<double> closed(16);
    for (std::size_t n = 0; n < 16; ++n) closed[n] = pair_energy_closed_form(params, n);
    std::sort(closed.begin(), closed.end());
    CHECK(oracle::max_diff(closed, r.direct_spectrum) <= 1e-9);
    CHECK(oracle::max_diff(closed, r.predicted_spectrum) <= 1e-9);

    std::vector<double> diag(16);
    for (std::size_t n = 0; n < 16; ++n)
      diag[n] = oracle::oscillator_energy(params.epsilon(), params.phi1(), params.phi2(), n, n);
    std::sort(diag.begin(), diag.end());
    CHECK(oracle::max_diff(diag, r.direct_spectrum) <= 1e-9);
  }
}

TEST_CASE("property: circle K-form is H0 + P^2/2m at the chosen P0") {
  Gen g(19);
  for (int trial = 0; trial < 10; ++trial) {
    const auto params = g.model();
    const auto basis = pair_momentum_basis(params, 24);
    const auto t = saf_realization(Complex(p0_of(params), 0.0), basis);
    const auto diff = build_k_form(params, t) - free_particle_hamiltonian(params, basis);
    const auto proj = interior_projector(basis, 1);
    // Tolerance scales with the largest matrix entry (|p| up to ~25, |phi| up to 1).
    CHECK(maxabs_norm(proj * diff * proj) <= 1e-10 * std::max(1.0, maxabs_norm(free_particle_hamiltonian(params, basis))));
  }
}

TEST_CASE("property: with a condensate, no predicted level lies below H0") {
  Gen g(20);
  int seen = 0;
  while (seen < 10) {
    const auto params = g.model();
    if (params.stiffness() <= 0) continue;
    ++seen;
    const auto r = verify_reduction(params, 12, 1e-9);
    CHECK(free_params(params).condensate);
    CHECK(*std::min_element(r.predicted_spectrum.begin(), r.predicted_spectrum.end()) >= r.h0 - 1e-12);
  }
}

TEST_CASE("property: corrected spin triples match the ladder oracle") {
  for (int twice = 1; twice <= 7; ++twice) {
    const auto s = Spin::from_twice(twice);
    const auto ref = oracle::spin_ladder(s.value());
    const auto hp = hp_spin(s, Fidelity::corrected);
    CHECK((hp.k0().entries() - ref.sz).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((hp.kplus().entries() - ref.splus).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((hp.kminus().entries() - ref.sminus).cwiseAbs().maxCoeff() <= 1e-12);
    const auto v = villain_spin(s, BasisSpec::circle(-s.value(), s.multiplicity()), Fidelity::corrected);
    CHECK((v.k0().entries() - ref.sz).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((v.kplus().entries() - ref.splus).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((v.kminus().entries() - ref.sminus).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("property: K0^2 is Hermitian positive on the mp realization") {
  Gen g(21);
  for (int trial = 0; trial < 5; ++trial) {
    const auto t = mp_realization(g.uniform(0.25, 3), 16);
    const auto ev = hermitian_eigensystem(triple_k0_sq(t)).values;
    CHECK(ev.front() > 0.0);
  }
}
