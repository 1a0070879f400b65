#include "su11/linops.hpp"

#include "su11/errors.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace su11 {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void require_same_basis(const OperatorMatrix& a, const OperatorMatrix& b, const char* op) {
  if (!(a.basis() == b.basis())) {
    throw DimensionError(std::string(op) + ": basis mismatch (" + a.basis().describe() +
                         " vs " + b.basis().describe() + ")");
  }
}

void require_hermitian(const OperatorMatrix& a, const char* op) {
  const double r = hermiticity_residual(a);
  if (r > kHermiticityTolerance) {
    std::ostringstream msg;
    msg << op << ": operator is not Hermitian (maxabs(A - A^dagger) = " << r << ")";
    throw DomainError(msg.str());
  }
}

}  // namespace

BasisSpec BasisSpec::fock(std::size_t dim) {
  if (dim == 0) throw DomainError("BasisSpec::fock: dimension must be positive");
  return BasisSpec(FockBasis{{dim}});
}

BasisSpec BasisSpec::fock(std::size_t dim_a, std::size_t dim_b) {
  if (dim_a == 0 || dim_b == 0) throw DomainError("BasisSpec::fock: mode dimensions must be positive");
  return BasisSpec(FockBasis{{dim_a, dim_b}});
}

BasisSpec BasisSpec::circle(double p_min, std::size_t count) {
  if (count == 0) throw DomainError("BasisSpec::circle: count must be positive");
  if (!std::isfinite(p_min)) throw DomainError("BasisSpec::circle: p_min must be finite");
  return BasisSpec(CircleBasis{p_min, count});
}

std::size_t BasisSpec::dim() const {
  if (const auto* f = std::get_if<FockBasis>(&variant_)) {
    return std::accumulate(f->mode_dims.begin(), f->mode_dims.end(), std::size_t{1},
                           std::multiplies<>());
  }
  return std::get<CircleBasis>(variant_).count;
}

const FockBasis& BasisSpec::fock_basis() const {
  if (const auto* f = std::get_if<FockBasis>(&variant_)) return *f;
  throw DomainError("expected a Fock basis, got " + describe());
}

const CircleBasis& BasisSpec::circle_basis() const {
  if (const auto* c = std::get_if<CircleBasis>(&variant_)) return *c;
  throw DomainError("expected a circle-momentum basis, got " + describe());
}

std::size_t BasisSpec::modes() const {
  if (const auto* f = std::get_if<FockBasis>(&variant_)) return f->mode_dims.size();
  return 1;
}

double BasisSpec::momentum(std::size_t index) const {
  const auto& c = circle_basis();
  if (index >= c.count) throw DomainError("BasisSpec::momentum: index out of range");
  return c.p_min + static_cast<double>(index);
}

std::string BasisSpec::describe() const {
  std::ostringstream out;
  if (const auto* f = std::get_if<FockBasis>(&variant_)) {
    out << "Fock(";
    for (std::size_t i = 0; i < f->mode_dims.size(); ++i) out << (i ? "x" : "") << f->mode_dims[i];
    out << ")";
  } else {
    const auto& c = std::get<CircleBasis>(variant_);
    out << "Circle(p_min=" << c.p_min << ", count=" << c.count << ")";
  }
  return out.str();
}

OperatorMatrix::OperatorMatrix(BasisSpec basis, Matrix entries)
    : basis_(std::move(basis)), entries_(std::move(entries)) {
  const auto d = idx(basis_.dim());
  if (entries_.rows() != d || entries_.cols() != d) {
    std::ostringstream msg;
    msg << "OperatorMatrix: entries are " << entries_.rows() << "x" << entries_.cols()
        << " but basis " << basis_.describe() << " has dimension " << d;
    throw DimensionError(msg.str());
  }
  if (!entries_.allFinite()) throw DomainError("OperatorMatrix: entries must be finite");
}

OperatorMatrix OperatorMatrix::zero(const BasisSpec& basis) {
  const auto d = idx(basis.dim());
  return {basis, Matrix::Zero(d, d)};
}

OperatorMatrix OperatorMatrix::identity(const BasisSpec& basis) {
  const auto d = idx(basis.dim());
  return {basis, Matrix::Identity(d, d)};
}

OperatorMatrix OperatorMatrix::diagonal(const BasisSpec& basis, std::span<const Complex> values) {
  if (values.size() != basis.dim()) {
    throw DimensionError("OperatorMatrix::diagonal: value count does not match basis dimension");
  }
  Matrix m = Matrix::Zero(idx(values.size()), idx(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) m(idx(i), idx(i)) = values[i];
  return {basis, std::move(m)};
}

OperatorMatrix OperatorMatrix::diagonal(const BasisSpec& basis, std::span<const double> values) {
  std::vector<Complex> c(values.begin(), values.end());
  return diagonal(basis, std::span<const Complex>(c));
}

Complex OperatorMatrix::operator()(std::size_t row, std::size_t col) const {
  if (row >= dim() || col >= dim()) throw DomainError("OperatorMatrix: index out of range");
  return entries_(idx(row), idx(col));
}

OperatorMatrix OperatorMatrix::adjoint() const { return {basis_, entries_.adjoint()}; }

OperatorMatrix OperatorMatrix::with_basis(BasisSpec basis) const {
  if (basis.dim() != dim()) {
    throw DimensionError("OperatorMatrix::with_basis: " + basis.describe() +
                         " has a different dimension than " + basis_.describe());
  }
  return {std::move(basis), entries_};
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& rhs) {
  require_same_basis(*this, rhs, "operator+");
  entries_ += rhs.entries_;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& rhs) {
  require_same_basis(*this, rhs, "operator-");
  entries_ -= rhs.entries_;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(Complex scalar) {
  entries_ *= scalar;
  return *this;
}

OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  require_same_basis(lhs, rhs, "operator*");
  return {lhs.basis_, lhs.entries_ * rhs.entries_};
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_basis(a, b, "commutator");
  Matrix ab = a.entries() * b.entries();
  ab.noalias() -= b.entries() * a.entries();
  return {a.basis(), std::move(ab)};
}

double maxabs_norm(const OperatorMatrix& a) {
  if (a.dim() == 0) return 0.0;
  return a.entries().cwiseAbs().maxCoeff();
}

double hermiticity_residual(const OperatorMatrix& a) {
  if (a.dim() == 0) return 0.0;
  return (a.entries() - a.entries().adjoint()).cwiseAbs().maxCoeff();
}

Eigensystem hermitian_eigensystem(const OperatorMatrix& a) {
  require_hermitian(a, "hermitian_eigensystem");
  // Symmetrize so rounding-level anti-Hermitian parts never reach the solver.
  const Matrix h = 0.5 * (a.entries() + a.entries().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw DomainError("hermitian_eigensystem: eigensolver did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return {std::vector<double>(ev.data(), ev.data() + ev.size()), solver.eigenvectors()};
}

OperatorMatrix unitary_exp(const OperatorMatrix& h, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("unitary_exp: sign must be +1 or -1");
  require_hermitian(h, "unitary_exp");
  const auto sys = hermitian_eigensystem(h);
  Eigen::VectorXcd phases(idx(sys.values.size()));
  for (std::size_t i = 0; i < sys.values.size(); ++i) {
    phases(idx(i)) = std::polar(1.0, static_cast<double>(sign) * sys.values[i]);
  }
  Matrix u = sys.vectors * phases.asDiagonal() * sys.vectors.adjoint();
  return {h.basis(), std::move(u)};
}

OperatorMatrix tensor(const OperatorMatrix& a, const OperatorMatrix& b) {
  for (const auto* op : {&a, &b}) {
    if (!op->basis().is_fock() || op->basis().modes() != 1) {
      throw DomainError("tensor: factors must be single-mode Fock operators, got " +
                        op->basis().describe());
    }
  }
  Matrix k = Eigen::kroneckerProduct(a.entries(), b.entries());
  return {BasisSpec::fock(a.dim(), b.dim()), std::move(k)};
}

OperatorMatrix interior_projector(const BasisSpec& basis, std::size_t margin) {
  auto check = [&](std::size_t d) {
    if (2 * margin >= d) {
      std::ostringstream msg;
      msg << "interior_projector: margin " << margin << " leaves no interior in " << basis.describe();
      throw DomainError(msg.str());
    }
  };
  auto inside = [&](std::size_t i, std::size_t d) { return i >= margin && i + margin < d; };

  std::vector<double> diag(basis.dim(), 0.0);
  if (basis.is_fock() && basis.modes() == 2) {
    const auto da = basis.fock_basis().mode_dims[0];
    const auto db = basis.fock_basis().mode_dims[1];
    check(da);
    check(db);
    for (std::size_t na = 0; na < da; ++na)
      for (std::size_t nb = 0; nb < db; ++nb)
        diag[na * db + nb] = inside(na, da) && inside(nb, db) ? 1.0 : 0.0;
  } else {
    const auto d = basis.dim();
    check(d);
    for (std::size_t i = 0; i < d; ++i) diag[i] = inside(i, d) ? 1.0 : 0.0;
  }
  return OperatorMatrix::diagonal(basis, std::span<const double>(diag));
}

Check& CheckReport::add(std::string name, double residual, double tolerance,
                        std::map<std::string, std::string> metadata) {
  Check c;
  c.name = std::move(name);
  c.residual = residual;
  c.tolerance = tolerance;
  c.passed = !std::isnan(residual) && residual <= tolerance;
  c.metadata = std::move(metadata);
  checks_.push_back(std::move(c));
  return checks_.back();
}

void CheckReport::append(const CheckReport& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    if (!prefix.empty()) c.name = prefix + "/" + c.name;
    checks_.push_back(std::move(c));
  }
}

const Check& CheckReport::at(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.name == name; });
  if (it == checks_.end()) throw DomainError("CheckReport: no check named '" + name + "'");
  return *it;
}

bool CheckReport::overall_passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

}  // namespace su11
