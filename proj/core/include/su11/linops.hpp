#pragma once

// Dense complex operators on truncated bases: the substrate every
// representation and check in this library is built on.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace su11 {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Occupation-number basis of one or two bosonic modes. Two-mode states are
/// indexed row-major: index = n_a * dim_b + n_b.
struct FockBasis {
  std::vector<std::size_t> mode_dims;
  friend bool operator==(const FockBasis&, const FockBasis&) = default;
};

/// Eigenbasis of P = -i d/dX on a periodic coordinate. State j carries
/// momentum p_min + j.
struct CircleBasis {
  double p_min = 0.0;
  std::size_t count = 0;
  friend bool operator==(const CircleBasis&, const CircleBasis&) = default;
};

class BasisSpec {
 public:
  static BasisSpec fock(std::size_t dim);
  static BasisSpec fock(std::size_t dim_a, std::size_t dim_b);
  static BasisSpec circle(double p_min, std::size_t count);

  std::size_t dim() const;

  bool is_fock() const { return std::holds_alternative<FockBasis>(variant_); }
  bool is_circle() const { return std::holds_alternative<CircleBasis>(variant_); }

  // Throw DomainError when the basis has the other kind.
  const FockBasis& fock_basis() const;
  const CircleBasis& circle_basis() const;

  std::size_t modes() const;
  double momentum(std::size_t index) const;

  std::string describe() const;

  friend bool operator==(const BasisSpec&, const BasisSpec&) = default;

 private:
  explicit BasisSpec(std::variant<FockBasis, CircleBasis> v) : variant_(std::move(v)) {}
  std::variant<FockBasis, CircleBasis> variant_;
};

/// Square complex matrix tagged with the basis it acts on. Entries are
/// always finite; arithmetic between operators on different bases throws
/// DimensionError.
class OperatorMatrix {
 public:
  OperatorMatrix(BasisSpec basis, Matrix entries);

  static OperatorMatrix zero(const BasisSpec& basis);
  static OperatorMatrix identity(const BasisSpec& basis);
  static OperatorMatrix diagonal(const BasisSpec& basis, std::span<const Complex> values);
  static OperatorMatrix diagonal(const BasisSpec& basis, std::span<const double> values);

  const BasisSpec& basis() const { return basis_; }
  const Matrix& entries() const { return entries_; }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  Complex operator()(std::size_t row, std::size_t col) const;

  OperatorMatrix adjoint() const;
  OperatorMatrix with_basis(BasisSpec basis) const;

  OperatorMatrix& operator+=(const OperatorMatrix& rhs);
  OperatorMatrix& operator-=(const OperatorMatrix& rhs);
  OperatorMatrix& operator*=(Complex scalar);

  friend OperatorMatrix operator+(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs += rhs; }
  friend OperatorMatrix operator-(OperatorMatrix lhs, const OperatorMatrix& rhs) { return lhs -= rhs; }
  friend OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs);
  friend OperatorMatrix operator*(Complex s, OperatorMatrix op) { return op *= s; }
  friend OperatorMatrix operator*(OperatorMatrix op, Complex s) { return op *= s; }
  friend OperatorMatrix operator*(double s, OperatorMatrix op) { return op *= Complex(s); }
  friend OperatorMatrix operator-(OperatorMatrix op) { return op *= Complex(-1.0); }

 private:
  BasisSpec basis_;
  Matrix entries_;
};

struct Eigensystem {
  std::vector<double> values;  // ascending
  Matrix vectors;              // orthonormal columns, matching `values`
};

inline constexpr double kHermiticityTolerance = 1e-10;

/// AB - BA.
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// Largest |entry|.
double maxabs_norm(const OperatorMatrix& a);

/// maxabs(A - A^dagger).
double hermiticity_residual(const OperatorMatrix& a);

/// Ascending eigenvalues and orthonormal eigenvectors of a Hermitian matrix.
/// Throws DomainError when the input is not Hermitian to 1e-10.
Eigensystem hermitian_eigensystem(const OperatorMatrix& a);

/// exp(sign * i * H) for Hermitian H, computed as V exp(sign i Lambda) V^dagger.
/// `sign` must be +1 or -1.
OperatorMatrix unitary_exp(const OperatorMatrix& h, int sign);

/// Kronecker product of two single-mode Fock operators onto the two-mode
/// basis (row-major, first factor major).
OperatorMatrix tensor(const OperatorMatrix& a, const OperatorMatrix& b);

/// Diagonal 0/1 matrix keeping states whose index (per mode, for two-mode
/// bases) lies in [margin, dim - 1 - margin].
OperatorMatrix interior_projector(const BasisSpec& basis, std::size_t margin);

/// Residual record for a batch of numerical checks.
struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::map<std::string, std::string> metadata;
};

class CheckReport {
 public:
  // passed is derived: residual <= tolerance (NaN never passes).
  Check& add(std::string name, double residual, double tolerance,
             std::map<std::string, std::string> metadata = {});
  void append(const CheckReport& other, const std::string& prefix = {});

  const std::vector<Check>& checks() const { return checks_; }
  const Check& at(const std::string& name) const;
  bool overall_passed() const;
  bool empty() const { return checks_.empty(); }

 private:
  std::vector<Check> checks_;
};

}  // namespace su11
