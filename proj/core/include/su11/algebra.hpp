#pragma once

#include "su11/linops.hpp"
#include "su11/reps.hpp"

#include <string>

namespace su11 {

struct CheckSpec {
  std::size_t margin = 2;
  double tolerance = 1e-10;
  std::string label;
};

/// K0^2 - (K+K- + K-K+)/2. Throws KindError for spin triples.
OperatorMatrix casimir_su11(const AlgebraTriple& triple);

/// Sz^2 + (S+S- + S-S+)/2. Throws KindError for hyperbolic triples.
OperatorMatrix casimir_spin(const AlgebraTriple& triple);

/// Projector onto the states a check may look at: the margin interior,
/// minus any states a Villain triple had to clamp.
OperatorMatrix check_projector(const AlgebraTriple& triple, std::size_t margin);

/// Interior-projected residuals of the three defining brackets:
///   hyperbolic: [K0,K+] - K+, [K0,K-] + K-, [K+,K-] + 2K0
///   spin:       [Sz,S+] - S+, [Sz,S-] + S-, [S+,S-] - 2Sz
CheckReport check_commutators(const AlgebraTriple& triple, const CheckSpec& spec);

/// Compares the interior-projected Casimir against the closed form for the
/// triple's realization. For the Perelomov realization the check is against
/// -1/4 - lambda^2 (what the matrices produce) and the metadata also records
/// the alternative closed form -1/4 - lambda^2/4 with its residual.
CheckReport check_casimir(const AlgebraTriple& triple, const CheckSpec& spec);

/// Residual of exp(i beta X) P^n exp(-i beta X) - (P - beta)^n on a circle
/// basis, projected to the margin interior. beta >= 1, n in {1, 2, 3}.
/// With margin < beta the bottom edge is not projected out and the check is
/// expected to fail.
CheckReport check_transfo(const BasisSpec& basis, int beta, int n, const CheckSpec& spec);

/// Entrywise maxabs differences of the three generators. Unprojected.
CheckReport compare_triples(const AlgebraTriple& a, const AlgebraTriple& b, const CheckSpec& spec);

}  // namespace su11
