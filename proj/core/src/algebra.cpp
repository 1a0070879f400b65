#include "su11/algebra.hpp"

#include "su11/errors.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace su11 {

namespace {

std::string fmt(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

std::string prefixed(const CheckSpec& spec, const std::string& name) {
  return spec.label.empty() ? name : spec.label + ": " + name;
}

double projected_residual(const OperatorMatrix& proj, const OperatorMatrix& m) {
  return maxabs_norm(proj * m * proj);
}

void require_kind(const AlgebraTriple& triple, TripleKind kind, const char* op) {
  if (triple.kind() != kind) {
    throw KindError(std::string(op) + ": expected a " + to_string(kind) + " triple, got " +
                    to_string(triple.kind()) + " (" + rep_name(triple.params()) + ")");
  }
}

// Diagonal-or-scalar closed form of the Casimir for a given realization.
struct ExpectedCasimir {
  OperatorMatrix value;
  std::string formula;
  std::map<std::string, std::string> metadata;
};

ExpectedCasimir expected_casimir(const AlgebraTriple& triple) {
  const auto& basis = triple.basis();
  const auto& params = triple.params();
  auto scalar = [&](double c, std::string formula) {
    return ExpectedCasimir{c * OperatorMatrix::identity(basis), std::move(formula), {{"expected", fmt(c)}}};
  };
  auto saf_value = [](Complex p0) {
    const Complex d = p0 - std::conj(p0);
    return (-0.25 + d * d / 4.0).real();
  };
  auto spin_value = [](Spin s) { return s.value() * (s.value() + 1.0); };

  if (const auto* p = std::get_if<MpParams>(&params)) return scalar(p->k * (p->k - 1.0), "k(k-1)");
  if (const auto* p = std::get_if<HpParams>(&params)) return scalar(spin_value(p->spin), "S(S+1)");
  if (const auto* p = std::get_if<VillainParams>(&params)) return scalar(spin_value(p->spin), "S(S+1)");
  if (const auto* p = std::get_if<SafParams>(&params)) {
    return scalar(saf_value(p->p0), "-1/4 + (P0 - P0*)^2/4");
  }
  if (const auto* p = std::get_if<BoseFormParams>(&params)) {
    return scalar(saf_value(p->p0), "-1/4 + (P0 - P0*)^2/4");
  }
  if (const auto* p = std::get_if<PerelomovParams>(&params)) {
    const double l = p->lambda;
    auto e = scalar(-0.25 - l * l, "-1/4 - lambda^2");
    e.metadata["alternative_formula"] = "-1/4 - lambda^2/4";
    e.metadata["alternative_expected"] = fmt(-0.25 - l * l / 4.0);
    return e;
  }
  if (std::holds_alternative<TwoModeParams>(params)) {
    const auto& dims = basis.fock_basis().mode_dims;
    std::vector<double> diag(basis.dim());
    for (std::size_t na = 0; na < dims[0]; ++na) {
      for (std::size_t nb = 0; nb < dims[1]; ++nb) {
        const double d = static_cast<double>(na) - static_cast<double>(nb);
        diag[na * dims[1] + nb] = -0.25 + d * d / 4.0;
      }
    }
    return {OperatorMatrix::diagonal(basis, std::span<const double>(diag)), "-1/4 + (n_a - n_b)^2/4", {}};
  }
  throw DomainError("check_casimir: no closed form for " + rep_name(params));
}

// Range of the projected diagonal, to report what the Casimir actually is.
std::pair<double, double> projected_diagonal_range(const OperatorMatrix& proj, const OperatorMatrix& c) {
  double lo = INFINITY;
  double hi = -INFINITY;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (proj(i, i).real() == 0.0) continue;
    lo = std::min(lo, c(i, i).real());
    hi = std::max(hi, c(i, i).real());
  }
  return {lo, hi};
}

}  // namespace

OperatorMatrix casimir_su11(const AlgebraTriple& triple) {
  require_kind(triple, TripleKind::hyperbolic, "casimir_su11");
  const auto& k0 = triple.k0();
  const auto& kp = triple.kplus();
  const auto& km = triple.kminus();
  return k0 * k0 - 0.5 * (kp * km + km * kp);
}

OperatorMatrix casimir_spin(const AlgebraTriple& triple) {
  require_kind(triple, TripleKind::spin, "casimir_spin");
  const auto& sz = triple.k0();
  const auto& sp = triple.kplus();
  const auto& sm = triple.kminus();
  return sz * sz + 0.5 * (sp * sm + sm * sp);
}

OperatorMatrix check_projector(const AlgebraTriple& triple, std::size_t margin) {
  auto proj = interior_projector(triple.basis(), margin);
  if (const auto* v = std::get_if<VillainParams>(&triple.params())) {
    std::vector<double> keep(v->clamped.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = v->clamped[i] ? 0.0 : 1.0;
    proj = proj * OperatorMatrix::diagonal(triple.basis(), std::span<const double>(keep));
  }
  return proj;
}

CheckReport check_commutators(const AlgebraTriple& triple, const CheckSpec& spec) {
  const auto proj = check_projector(triple, spec.margin);
  const auto& k0 = triple.k0();
  const auto& kp = triple.kplus();
  const auto& km = triple.kminus();
  const bool spin = triple.kind() == TripleKind::spin;
  const std::string z = spin ? "Sz" : "K0";
  const std::string plus = spin ? "S+" : "K+";
  const std::string minus = spin ? "S-" : "K-";
  // [K+,K-] = -2K0 for SU(1,1); [S+,S-] = +2Sz for spin.
  const double ladder_sign = spin ? -2.0 : 2.0;
  const std::string ladder_rhs = spin ? "-2" + z : "+2" + z;

  std::map<std::string, std::string> meta{{"rep", rep_name(triple.params())},
                                          {"margin", std::to_string(spec.margin)}};
  CheckReport report;
  report.add(prefixed(spec, "[" + z + "," + plus + "]-" + plus),
             projected_residual(proj, commutator(k0, kp) - kp), spec.tolerance, meta);
  report.add(prefixed(spec, "[" + z + "," + minus + "]+" + minus),
             projected_residual(proj, commutator(k0, km) + km), spec.tolerance, meta);
  report.add(prefixed(spec, "[" + plus + "," + minus + "]" + ladder_rhs),
             projected_residual(proj, commutator(kp, km) + ladder_sign * k0), spec.tolerance, meta);
  return report;
}

CheckReport check_casimir(const AlgebraTriple& triple, const CheckSpec& spec) {
  const auto proj = check_projector(triple, spec.margin);
  const auto computed = triple.kind() == TripleKind::spin ? casimir_spin(triple) : casimir_su11(triple);
  auto expected = expected_casimir(triple);

  const double residual = projected_residual(proj, computed - expected.value);
  auto meta = std::move(expected.metadata);
  meta["rep"] = rep_name(triple.params());
  meta["formula"] = expected.formula;
  meta["margin"] = std::to_string(spec.margin);
  const auto [lo, hi] = projected_diagonal_range(proj, computed);
  meta["computed_min"] = fmt(lo);
  meta["computed_max"] = fmt(hi);

  if (const auto* pp = std::get_if<PerelomovParams>(&triple.params())) {
    const double l = pp->lambda;
    const auto alternative = (-0.25 - l * l / 4.0) * OperatorMatrix::identity(triple.basis());
    const double alt_residual = projected_residual(proj, computed - alternative);
    meta["alternative_residual"] = fmt(alt_residual);
    const bool primary_ok = residual <= spec.tolerance;
    const bool alt_ok = alt_residual <= spec.tolerance;
    meta["matches"] = primary_ok && alt_ok ? "both"
                      : primary_ok         ? "-1/4 - lambda^2"
                      : alt_ok             ? "-1/4 - lambda^2/4"
                                           : "neither";
    meta["alternative_consistent"] = alt_ok ? "true" : "false";
  }

  CheckReport report;
  report.add(prefixed(spec, "casimir=" + expected.formula), residual, spec.tolerance, std::move(meta));
  return report;
}

CheckReport check_transfo(const BasisSpec& basis, int beta, int n, const CheckSpec& spec) {
  if (beta < 1) throw DomainError("check_transfo: beta must be a positive integer");
  if (n < 1 || n > 3) throw DomainError("check_transfo: power n must be 1, 2 or 3");
  const auto [p, eplus, eminus] = circle_momentum(basis);
  const auto id = OperatorMatrix::identity(basis);

  auto power = [](const OperatorMatrix& m, int e) {
    auto r = OperatorMatrix::identity(m.basis());
    for (int i = 0; i < e; ++i) r = r * m;
    return r;
  };
  const auto lhs = power(eplus, beta) * power(p, n) * power(eminus, beta);
  const auto rhs = power(p - static_cast<double>(beta) * id, n);
  const auto proj = interior_projector(basis, spec.margin);

  std::map<std::string, std::string> meta{{"beta", std::to_string(beta)},
                                          {"n", std::to_string(n)},
                                          {"margin", std::to_string(spec.margin)}};
  if (spec.margin < static_cast<std::size_t>(beta)) meta["note"] = "margin < beta: bottom edge not projected out";
  CheckReport report;
  report.add(prefixed(spec, "shift(beta=" + std::to_string(beta) + ",n=" + std::to_string(n) + ")"),
             projected_residual(proj, lhs - rhs), spec.tolerance, std::move(meta));
  return report;
}

CheckReport compare_triples(const AlgebraTriple& a, const AlgebraTriple& b, const CheckSpec& spec) {
  if (!(a.basis() == b.basis())) {
    throw DimensionError("compare_triples: basis mismatch (" + a.basis().describe() + " vs " +
                         b.basis().describe() + ")");
  }
  const std::map<std::string, std::string> meta{{"a", rep_name(a.params())}, {"b", rep_name(b.params())}};
  CheckReport report;
  report.add(prefixed(spec, "k0"), maxabs_norm(a.k0() - b.k0()), spec.tolerance, meta);
  report.add(prefixed(spec, "k+"), maxabs_norm(a.kplus() - b.kplus()), spec.tolerance, meta);
  report.add(prefixed(spec, "k-"), maxabs_norm(a.kminus() - b.kminus()), spec.tolerance, meta);
  return report;
}

}  // namespace su11
