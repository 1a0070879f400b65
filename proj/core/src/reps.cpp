#include "su11/reps.hpp"

#include "su11/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace su11 {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

constexpr double kAdjointTolerance = 1e-10;

OperatorMatrix number_operator(const BasisSpec& basis) {
  std::vector<double> n(basis.dim());
  for (std::size_t i = 0; i < n.size(); ++i) n[i] = static_cast<double>(i);
  return OperatorMatrix::diagonal(basis, std::span<const double>(n));
}

// g(N) for a diagonal function of the number operator.
template <typename F>
OperatorMatrix number_function(const BasisSpec& basis, F&& f) {
  std::vector<Complex> v(basis.dim());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(static_cast<double>(i));
  return OperatorMatrix::diagonal(basis, std::span<const Complex>(v));
}

template <typename F>
OperatorMatrix momentum_function(const BasisSpec& basis, F&& f) {
  std::vector<Complex> v(basis.dim());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(basis.momentum(i));
  return OperatorMatrix::diagonal(basis, std::span<const Complex>(v));
}

bool adjointness_expected(const RepParams& params) {
  if (const auto* hp = std::get_if<HpParams>(&params)) return hp->fidelity == Fidelity::corrected;
  return true;
}

}  // namespace

std::string to_string(TripleKind kind) { return kind == TripleKind::hyperbolic ? "hyperbolic" : "spin"; }
std::string to_string(Fidelity fidelity) {
  return fidelity == Fidelity::as_printed ? "as_printed" : "corrected";
}
std::string to_string(BoseForm form) { return form == BoseForm::form1 ? "form1" : "form2"; }

Spin Spin::from_double(double value) {
  const double twice = 2.0 * value;
  if (!std::isfinite(value) || value <= 0.0 || std::abs(twice - std::round(twice)) > 1e-12) {
    std::ostringstream msg;
    msg << "spin must be a positive half-integer, got " << value;
    throw DomainError(msg.str());
  }
  return Spin(static_cast<int>(std::lround(twice)));
}

Spin Spin::from_twice(int twice) {
  if (twice <= 0) throw DomainError("spin must be a positive half-integer");
  return Spin(twice);
}

std::string rep_name(const RepParams& params) {
  struct {
    std::string operator()(const MpParams&) const { return "mp"; }
    std::string operator()(const HpParams&) const { return "hp"; }
    std::string operator()(const VillainParams&) const { return "villain"; }
    std::string operator()(const SafParams&) const { return "saf"; }
    std::string operator()(const PerelomovParams&) const { return "perelomov"; }
    std::string operator()(const BoseFormParams& p) const {
      return p.form == BoseForm::form1 ? "bose1" : "bose2";
    }
    std::string operator()(const TwoModeParams&) const { return "two_mode"; }
  } visitor;
  return std::visit(visitor, params);
}

AlgebraTriple::AlgebraTriple(TripleKind kind, OperatorMatrix k0, OperatorMatrix kplus,
                             OperatorMatrix kminus, RepParams params)
    : kind_(kind),
      k0_(std::move(k0)),
      kplus_(std::move(kplus)),
      kminus_(std::move(kminus)),
      params_(std::move(params)) {
  if (!(k0_.basis() == kplus_.basis()) || !(k0_.basis() == kminus_.basis())) {
    throw DimensionError("AlgebraTriple: generators live on different bases");
  }
  if (hermiticity_residual(k0_) > kHermiticityTolerance) {
    throw DomainError("AlgebraTriple: diagonal generator is not Hermitian");
  }
  if (adjointness_expected(params_) &&
      maxabs_norm(kplus_ - kminus_.adjoint()) > kAdjointTolerance) {
    throw DomainError("AlgebraTriple: raising generator is not the adjoint of the lowering one");
  }
}

AlgebraTriple AlgebraTriple::with_basis(const BasisSpec& basis) const {
  return {kind_, k0_.with_basis(basis), kplus_.with_basis(basis), kminus_.with_basis(basis), params_};
}

BoseLadder fock_ladder(std::size_t dim) {
  const auto basis = BasisSpec::fock(dim);
  Matrix a = Matrix::Zero(idx(dim), idx(dim));
  for (std::size_t n = 1; n < dim; ++n) a(idx(n - 1), idx(n)) = std::sqrt(static_cast<double>(n));
  OperatorMatrix op(basis, std::move(a));
  auto adag = op.adjoint();
  return {std::move(op), std::move(adag)};
}

BoseLadder bose_ladder(std::size_t dim) {
  if (dim < kMinFockDim) {
    std::ostringstream msg;
    msg << "bose_ladder: dimension " << dim << " is below the minimum of " << kMinFockDim;
    throw DomainError(msg.str());
  }
  return fock_ladder(dim);
}

AlgebraTriple mp_realization(double k, std::size_t dim) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    std::ostringstream msg;
    msg << "mp_realization: Bargmann index k must be positive, got " << k;
    throw DomainError(msg.str());
  }
  const auto [a, adag] = bose_ladder(dim);
  const auto& basis = a.basis();
  const auto root = number_function(basis, [k](double n) { return Complex(std::sqrt(2.0 * k + n)); });
  auto kminus = root * a;
  auto kplus = adag * root;
  auto k0 = k * OperatorMatrix::identity(basis) + number_operator(basis);
  return {TripleKind::hyperbolic, std::move(k0), std::move(kplus), std::move(kminus), MpParams{k}};
}

AlgebraTriple hp_spin(Spin spin, Fidelity fidelity) {
  const double s = spin.value();
  const auto [a, adag] = fock_ladder(spin.multiplicity());
  const auto& basis = a.basis();
  // 2S - n >= 0 on the whole (2S+1)-dimensional space.
  const auto lower_root = number_function(basis, [s](double n) { return Complex(std::sqrt(2.0 * s - n)); });
  auto sminus = lower_root * a;
  auto splus = fidelity == Fidelity::corrected
                   ? adag * lower_root
                   : adag * number_function(basis, [s](double n) { return Complex(std::sqrt(2.0 * s + n)); });
  auto sz = number_operator(basis) - s * OperatorMatrix::identity(basis);
  return {TripleKind::spin, std::move(sz), std::move(splus), std::move(sminus), HpParams{spin, fidelity}};
}

CircleOperators circle_momentum(const BasisSpec& basis) {
  const auto& circle = basis.circle_basis();
  auto p = momentum_function(basis, [](double p) { return Complex(p); });
  Matrix shift = Matrix::Zero(idx(circle.count), idx(circle.count));
  for (std::size_t j = 0; j + 1 < circle.count; ++j) shift(idx(j + 1), idx(j)) = 1.0;
  OperatorMatrix eplus(basis, std::move(shift));
  auto eminus = eplus.adjoint();
  return {std::move(p), std::move(eplus), std::move(eminus)};
}

AlgebraTriple villain_spin(Spin spin, const BasisSpec& basis, Fidelity fidelity) {
  const auto& circle = basis.circle_basis();
  const double s = spin.value();
  const double offset = circle.p_min - s;
  if (std::abs(offset - std::round(offset)) > 1e-12) {
    std::ostringstream msg;
    msg << "villain_spin: p_min = " << circle.p_min << " is not congruent to S = " << s
        << " modulo 1";
    throw DomainError(msg.str());
  }
  const double p_max = circle.p_min + static_cast<double>(circle.count) - 1.0;
  if (circle.p_min > -s + 1e-12 || p_max < s - 1e-12) {
    std::ostringstream msg;
    msg << "villain_spin: basis " << basis.describe() << " does not cover the spin range [" << -s
        << ", " << s << "]";
    throw DomainError(msg.str());
  }

  const double shift = fidelity == Fidelity::corrected ? 0.5 : -0.5;
  auto radicand = [&](double p) { return (s + 0.5) * (s + 0.5) - (p + shift) * (p + shift); };
  // Radicands are exact small rationals on the half-integer grid, so a
  // negative value is a genuine out-of-range state, never rounding noise.
  auto amplitude = [&](double p) { return std::sqrt(std::max(radicand(p), 0.0)); };

  std::vector<bool> clamped(circle.count);
  for (std::size_t j = 0; j < circle.count; ++j) {
    const double p = basis.momentum(j);
    clamped[j] = radicand(p) < 0.0 || radicand(p - 1.0) < 0.0;
  }

  const auto [p, eplus, eminus] = circle_momentum(basis);
  const auto f = momentum_function(basis, [&](double q) { return Complex(amplitude(q)); });
  auto sminus = f * eminus;
  auto splus = eplus * f;
  return {TripleKind::spin, p, std::move(splus), std::move(sminus),
          VillainParams{spin, fidelity, std::move(clamped)}};
}

AlgebraTriple saf_realization(Complex p0, const BasisSpec& basis) {
  const auto [p, eplus, eminus] = circle_momentum(basis);
  const auto id = OperatorMatrix::identity(basis);
  auto kminus = (p + p0 * id) * eminus;
  auto kplus = eplus * (p + std::conj(p0) * id);
  auto k0 = p + (p0.real() - 0.5) * id;
  return {TripleKind::hyperbolic, std::move(k0), std::move(kplus), std::move(kminus), SafParams{p0}};
}

AlgebraTriple perelomov_realization(double lambda, const BasisSpec& basis) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    std::ostringstream msg;
    msg << "perelomov_realization: lambda must be positive, got " << lambda;
    throw DomainError(msg.str());
  }
  const auto [p, eplus, eminus] = circle_momentum(basis);
  const auto id = OperatorMatrix::identity(basis);
  const Complex shift(-0.5, lambda);
  // K+- = -i e^{+-i theta} d/dtheta -+ (-1/2 + i lambda) e^{+-i theta}, with P = -i d/dtheta.
  auto kminus = eminus * (p + shift * id);
  auto kplus = eplus * (p - shift * id);
  return {TripleKind::hyperbolic, p, std::move(kplus), std::move(kminus), PerelomovParams{lambda}};
}

Quadratures quadratures(std::size_t dim) {
  const auto [a, adag] = bose_ladder(dim);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  auto q = inv_sqrt2 * (a + adag);
  auto p = Complex(0.0, -inv_sqrt2) * (a - adag);  // (a - a^dag) / (i sqrt2)
  return {std::move(q), std::move(p)};
}

AlgebraTriple saf_bose_form(Complex p0, std::size_t dim, BoseForm form) {
  if (dim < kMinBoseFormDim) {
    std::ostringstream msg;
    msg << "saf_bose_form: dimension " << dim << " is below the minimum of " << kMinBoseFormDim;
    throw DomainError(msg.str());
  }
  const auto [q, p] = quadratures(dim);
  const auto id = OperatorMatrix::identity(q.basis());
  // form1: coordinate Q, momentum P. form2: coordinate -P, momentum Q.
  const auto& momentum = form == BoseForm::form1 ? p : q;
  const auto& generator = form == BoseForm::form1 ? q : p;
  const int sign = form == BoseForm::form1 ? 1 : -1;
  auto raise = unitary_exp(generator, sign);
  auto lower = unitary_exp(generator, -sign);

  auto kminus = (momentum + p0 * id) * lower;
  auto kplus = raise * (momentum + std::conj(p0) * id);
  auto k0 = momentum + (p0.real() - 0.5) * id;
  return {TripleKind::hyperbolic, std::move(k0), std::move(kplus), std::move(kminus),
          BoseFormParams{p0, form}};
}

AlgebraTriple two_mode(std::size_t dim_a, std::size_t dim_b) {
  const auto [a, adag] = bose_ladder(dim_a);
  const auto [b, bdag] = bose_ladder(dim_b);
  const auto ia = OperatorMatrix::identity(a.basis());
  const auto ib = OperatorMatrix::identity(b.basis());
  auto kminus = tensor(a, b);
  auto kplus = tensor(adag, bdag);
  auto k0 = 0.5 * (tensor(adag * a, ib) + tensor(ia, bdag * b) + tensor(ia, ib));
  return {TripleKind::hyperbolic, std::move(k0), std::move(kplus), std::move(kminus), TwoModeParams{}};
}

}  // namespace su11
