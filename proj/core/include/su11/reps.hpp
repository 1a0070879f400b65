#pragma once

// Matrix realizations of the SU(1,1) and spin algebras on truncated bases.
//
// Fock-space realizations use the ladder matrix a[n-1, n] = sqrt(n).
// Circle-basis realizations treat X as a periodic coordinate, so P is the
// diagonal momentum ladder and exp(+iX), exp(-iX) are the raising and
// lowering shifts |p> -> |p+1>, |p> -> |p-1> (truncated at the edges).

#include "su11/linops.hpp"

#include <string>
#include <variant>
#include <vector>

namespace su11 {

enum class TripleKind { hyperbolic, spin };

/// Whether a realization is transcribed exactly as typeset or with the sign
/// fix that makes the algebra close.
enum class Fidelity { as_printed, corrected };

enum class BoseForm { form1, form2 };

std::string to_string(TripleKind kind);
std::string to_string(Fidelity fidelity);
std::string to_string(BoseForm form);

/// Positive half-integer spin S, stored as 2S.
class Spin {
 public:
  /// Throws DomainError unless value is one of 1/2, 1, 3/2, ...
  static Spin from_double(double value);
  static Spin from_twice(int twice);

  int twice() const { return twice_; }
  double value() const { return 0.5 * twice_; }
  std::size_t multiplicity() const { return static_cast<std::size_t>(twice_) + 1; }

  friend bool operator==(Spin, Spin) = default;

 private:
  explicit Spin(int twice) : twice_(twice) {}
  int twice_;
};

struct MpParams {
  double k;
};

struct HpParams {
  Spin spin;
  Fidelity fidelity;
};

struct VillainParams {
  Spin spin;
  Fidelity fidelity;
  // Per basis index: true when a negative radicand was clamped to zero in
  // the amplitude acting on or into that state. Those states fall outside
  // the spin range and are excluded from interior checks.
  std::vector<bool> clamped;
};

struct SafParams {
  Complex p0;
};

struct PerelomovParams {
  double lambda;
};

struct BoseFormParams {
  Complex p0;
  BoseForm form;
};

struct TwoModeParams {};

using RepParams = std::variant<MpParams, HpParams, VillainParams, SafParams, PerelomovParams,
                               BoseFormParams, TwoModeParams>;

std::string rep_name(const RepParams& params);

/// (K0, K+, K-) or (Sz, S+, S-) sharing one basis.
class AlgebraTriple {
 public:
  AlgebraTriple(TripleKind kind, OperatorMatrix k0, OperatorMatrix kplus, OperatorMatrix kminus,
                RepParams params);

  TripleKind kind() const { return kind_; }
  const OperatorMatrix& k0() const { return k0_; }
  const OperatorMatrix& kplus() const { return kplus_; }
  const OperatorMatrix& kminus() const { return kminus_; }
  const RepParams& params() const { return params_; }
  const BasisSpec& basis() const { return k0_.basis(); }

  /// Same matrices relabelled onto another basis of equal dimension.
  AlgebraTriple with_basis(const BasisSpec& basis) const;

 private:
  TripleKind kind_;
  OperatorMatrix k0_;
  OperatorMatrix kplus_;
  OperatorMatrix kminus_;
  RepParams params_;
};

struct BoseLadder {
  OperatorMatrix a;
  OperatorMatrix adag;
};

struct CircleOperators {
  OperatorMatrix p;
  OperatorMatrix eplus;   // exp(+iX)
  OperatorMatrix eminus;  // exp(-iX)
};

struct Quadratures {
  OperatorMatrix q;
  OperatorMatrix p;
};

inline constexpr std::size_t kMinFockDim = 4;
inline constexpr std::size_t kMinBoseFormDim = 16;

/// Annihilation/creation pair on Fock(dim). dim >= 4.
BoseLadder bose_ladder(std::size_t dim);

/// Ladder pair without the minimum-size check; the Holstein-Primakoff
/// construction needs dimension 2S+1, which is 2 for S = 1/2.
BoseLadder fock_ladder(std::size_t dim);

/// K- = (2k + a^dag a)^(1/2) a, K+ = a^dag (2k + a^dag a)^(1/2), K0 = k + a^dag a.
AlgebraTriple mp_realization(double k, std::size_t dim);

/// Holstein-Primakoff spin triple on Fock(2S+1).
AlgebraTriple hp_spin(Spin spin, Fidelity fidelity);

CircleOperators circle_momentum(const BasisSpec& basis);

/// Villain spin triple: Sz = P, S- = f(P) exp(-iX), S+ = exp(iX) f(P) with
/// f(P)^2 = (S+1/2)^2 - (P -/+ 1/2)^2 (as printed / corrected).
AlgebraTriple villain_spin(Spin spin, const BasisSpec& basis, Fidelity fidelity);

/// K- = (P + P0) exp(-iX), K+ = exp(iX) (P + P0*), K0 = P + Re(P0) - 1/2.
AlgebraTriple saf_realization(Complex p0, const BasisSpec& basis);

/// K0 = P, K-+ = exp(-+iX)(P -+ 1/2 +- i lambda). lambda > 0.
AlgebraTriple perelomov_realization(double lambda, const BasisSpec& basis);

/// Q = (a + a^dag)/sqrt2, P = (a - a^dag)/(i sqrt2). dim >= 4.
Quadratures quadratures(std::size_t dim);

/// The circle realization rewritten with bosonic quadratures: form1 takes
/// X -> Q, P -> P; form2 takes X -> -P, P -> Q. Exponentials are spectral.
AlgebraTriple saf_bose_form(Complex p0, std::size_t dim, BoseForm form);

/// K- = a b, K+ = a^dag b^dag, K0 = (a^dag a + b^dag b + 1)/2.
AlgebraTriple two_mode(std::size_t dim_a, std::size_t dim_b);

}  // namespace su11
