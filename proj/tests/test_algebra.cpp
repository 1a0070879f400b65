#include <doctest.h>

#include "su11/algebra.hpp"
#include "su11/errors.hpp"

using namespace su11;

namespace {

const BasisSpec kCircle = BasisSpec::circle(-32.0, 64);

double diag_at(const OperatorMatrix& m, std::size_t i) { return m(i, i).real(); }

}  // namespace

TEST_CASE("casimir_su11") {
  SUBCASE("mp with k = 1 vanishes on the interior") {
    const auto c = casimir_su11(mp_realization(1.0, 64));
    for (std::size_t n = 0; n < 62; ++n) CHECK(std::abs(diag_at(c, n)) < 1e-10);
  }
  SUBCASE("saf with real P0 gives -1/4") {
    const auto c = casimir_su11(saf_realization({0.3, 0.0}, kCircle));
    for (std::size_t n = 1; n < 63; ++n) CHECK(diag_at(c, n) == doctest::Approx(-0.25));
  }
  SUBCASE("two-mode diagonal -1/4 + (n_a - n_b)^2/4") {
    const auto c = casimir_su11(two_mode(8, 8));
    for (std::size_t na = 0; na < 7; ++na)
      for (std::size_t nb = 0; nb < 7; ++nb) {
        const double d = static_cast<double>(na) - static_cast<double>(nb);
        CHECK(diag_at(c, na * 8 + nb) == doctest::Approx(-0.25 + d * d / 4));
      }
  }
  CHECK_THROWS_AS(casimir_su11(hp_spin(Spin::from_double(1.0), Fidelity::corrected)), KindError);
}

TEST_CASE("casimir_spin") {
  const auto half = casimir_spin(hp_spin(Spin::from_double(0.5), Fidelity::corrected));
  CHECK(maxabs_norm(half - 0.75 * OperatorMatrix::identity(half.basis())) == 0.0);

  const auto basis = BasisSpec::circle(-1.0, 3);
  const auto one = casimir_spin(villain_spin(Spin::from_double(1.0), basis, Fidelity::corrected));
  CHECK(maxabs_norm(one - 2.0 * OperatorMatrix::identity(basis)) < 1e-12);

  CHECK_THROWS_AS(casimir_spin(mp_realization(1.0, 8)), KindError);
}

TEST_CASE("check_commutators") {
  SUBCASE("saf closes exactly away from the edges") {
    const auto r = check_commutators(saf_realization({0.7, 0.4}, kCircle), {2, 1e-12, ""});
    CHECK(r.overall_passed());
    CHECK(r.checks().size() == 3);
  }
  SUBCASE("villain as printed misses 2Sz by a constant 2") {
    const auto t = villain_spin(Spin::from_double(1.0), kCircle, Fidelity::as_printed);
    const auto r = check_commutators(t, {2, 1e-10, ""});
    CHECK(r.at("[Sz,S+]-S+").passed);
    CHECK(r.at("[Sz,S-]+S-").passed);
    CHECK_FALSE(r.at("[S+,S-]-2Sz").passed);
    CHECK(r.at("[S+,S-]-2Sz").residual == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("margin 0 exposes the truncation edge") {
    const auto r = check_commutators(saf_realization({0.7, 0.4}, kCircle), {0, 1e-10, ""});
    CHECK_FALSE(r.overall_passed());
    // Top state: K-K+ is zero there, so [K+,K-] + 2K0 = |p_max - 1 + P0|^2 ~ dim^2 / 4.
    CHECK(r.at("[K+,K-]+2K0").residual > 100.0);
  }
  SUBCASE("label prefixes names") {
    const auto r = check_commutators(mp_realization(1.0, 16), {2, 1e-10, "mp"});
    CHECK(r.at("mp: [K+,K-]+2K0").passed);
  }
  CHECK_THROWS_AS(check_commutators(hp_spin(Spin::from_double(0.5), Fidelity::corrected), {1, 1e-10, ""}),
                  DomainError);
}

TEST_CASE("check_casimir") {
  SUBCASE("mp k = 1.75 -> 1.3125") {
    const auto r = check_casimir(mp_realization(1.75, 64), {});
    CHECK(r.overall_passed());
    CHECK(r.checks().front().metadata.at("expected") == "1.3125");
  }
  SUBCASE("saf P0 = 1/2 + i -> -5/4") {
    const auto r = check_casimir(saf_realization({0.5, 1.0}, kCircle), {});
    CHECK(r.overall_passed());
    CHECK(r.checks().front().metadata.at("expected") == "-1.25");
  }
  SUBCASE("perelomov matches -1/4 - lambda^2, not -1/4 - lambda^2/4") {
    const auto r = check_casimir(perelomov_realization(1.0, kCircle), {});
    const auto& c = r.checks().front();
    CHECK(c.passed);
    CHECK(c.metadata.at("expected") == "-1.25");
    CHECK(c.metadata.at("alternative_expected") == "-0.5");
    CHECK(c.metadata.at("alternative_consistent") == "false");
    CHECK(c.metadata.at("matches") == "-1/4 - lambda^2");
    CHECK(std::stod(c.metadata.at("alternative_residual")) == doctest::Approx(0.75));
  }
  SUBCASE("villain as printed records a non-constant Casimir") {
    // Sz^2 + (f(P-1)^2 + f(P)^2)/2 = S(S+1) + 2P - 1; unclamped P = 0, 1, 2 -> 1, 3, 5.
    const auto t = villain_spin(Spin::from_double(1.0), kCircle, Fidelity::as_printed);
    const auto c = check_casimir(t, {}).checks().front();
    CHECK_FALSE(c.passed);
    CHECK(std::stod(c.metadata.at("computed_min")) == doctest::Approx(1.0));
    CHECK(std::stod(c.metadata.at("computed_max")) == doctest::Approx(5.0));
    CHECK(c.residual == doctest::Approx(3.0));
  }
  SUBCASE("two-mode diagonal closed form") {
    CHECK(check_casimir(two_mode(24, 24), {}).overall_passed());
  }
  SUBCASE("corrected spin reps") {
    CHECK(check_casimir(hp_spin(Spin::from_double(2.5), Fidelity::corrected), {0, 1e-10, ""}).overall_passed());
    CHECK(check_casimir(villain_spin(Spin::from_double(2.5), BasisSpec::circle(-9.5, 20), Fidelity::corrected), {})
              .overall_passed());
  }
}

TEST_CASE("Casimir residual ignores Re(P0)") {
  for (double im : {-1.0, 0.0, 0.7, 2.0}) {
    const auto a = check_casimir(saf_realization({-0.3, im}, kCircle), {}).checks().front();
    const auto b = check_casimir(saf_realization({2.0, im}, kCircle), {}).checks().front();
    CHECK(std::abs(a.residual - b.residual) <= 1e-12);
  }
}

TEST_CASE("check_transfo") {
  CHECK(check_transfo(kCircle, 1, 1, {2, 1e-12, ""}).overall_passed());
  CHECK(check_transfo(kCircle, 2, 3, {2, 1e-12, ""}).overall_passed());

  const auto edge = check_transfo(kCircle, 1, 1, {0, 1e-12, ""});
  CHECK_FALSE(edge.overall_passed());
  CHECK(edge.checks().front().metadata.count("note") == 1);

  CHECK_THROWS_AS(check_transfo(kCircle, 0, 1, {}), DomainError);
  CHECK_THROWS_AS(check_transfo(kCircle, 1, 4, {}), DomainError);
  CHECK_THROWS_AS(check_transfo(BasisSpec::fock(16), 1, 1, {}), DomainError);
}

TEST_CASE("compare_triples") {
  const auto basis = BasisSpec::circle(-8.0, 20);
  CHECK(compare_triples(perelomov_realization(0.6, basis), saf_realization({0.5, 0.6}, basis), {0, 1e-12, ""})
            .overall_passed());

  const auto s = saf_realization({0.2, -0.7}, basis);
  for (const auto& c : compare_triples(s, s, {}).checks()) CHECK(c.residual == 0.0);

  const auto r = compare_triples(saf_realization({0, 0}, basis), saf_realization({1, 0}, basis), {0, 1e-12, ""});
  CHECK(r.at("k0").residual == doctest::Approx(1.0));

  CHECK_THROWS_AS(compare_triples(s, saf_realization({0, 0}, kCircle), {}), DimensionError);
}
