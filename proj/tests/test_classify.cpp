#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "curve_check.hpp"
#include "entbound/classify.hpp"
#include "test_support.hpp"

using namespace entbound;
using test::seeded_rng;

namespace {

const LineParams kReference{-0.092, 0.04, 0.2148};

BipartiteDensity werner(double p) {
  const CVector singlet = bell_state(2, 1, 1).amplitudes();
  CMatrix rho = p * (singlet * singlet.adjoint()) + (1.0 - p) * CMatrix::Identity(4, 4) / 4.0;
  return density_from_matrix(rho, 2, 2);
}

}  // namespace

TEST_CASE("negativity on reference states") {
  CHECK(negativity(density_from_matrix(CMatrix::Identity(9, 9) / 9.0, 3, 3)) < 1e-10);
  CHECK(negativity(pure_density(bell_state(3, 0, 0))) == doctest::Approx(1.0).epsilon(1e-10));
  // Werner boundary at p = 1/3 by brute-force eigensolve of the family.
  CHECK(negativity(werner(1.0 / 3)) < 1e-10);
  CHECK(negativity(werner(0.5)) > 1e-3);
}

TEST_CASE("is_ppt on reference states") {
  CHECK(is_ppt(density_from_matrix(CMatrix::Identity(9, 9) / 9.0, 3, 3)));
  CHECK_FALSE(is_ppt(pure_density(bell_state(3, 0, 0))));
  CHECK(is_ppt(bell_diagonal(line_spectrum(kReference))));
}

TEST_CASE("negativity vanishes exactly when the state is PPT") {
  auto rng = seeded_rng(211);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  int npt_seen = 0;
  for (int trial = 0; trial < 50; ++trial) {
    BellSpectrum spec{3, RMatrix::NullaryExpr(3, 3, [&](int, int) { return uniform(rng); })};
    spec.lambda /= spec.lambda.sum();
    const BipartiteDensity rho = bell_diagonal(spec);
    const bool ppt = is_ppt(rho);
    CHECK((negativity(rho) <= 1e-10) == ppt);
    npt_seen += ppt ? 0 : 1;
  }
  CHECK(npt_seen > 0);  // the sample must actually exercise both sides
}

TEST_CASE("beta_ent on hand-evaluated points") {
  const auto at_origin = beta_ent(0, 0);
  REQUIRE(at_origin.has_value());
  CHECK(at_origin->first == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(at_origin->second == doctest::Approx(1.0).epsilon(1e-12));

  // (0.1, 0): radicand 1.21, roots (3.3 -+ 3.3)/8.
  const auto a01 = beta_ent(0.1, 0);
  REQUIRE(a01.has_value());
  CHECK(a01->first == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(a01->second == doctest::Approx(0.825).epsilon(1e-12));

  CHECK_FALSE(beta_ent(0.5, 0).has_value());  // radicand negative
  try {
    beta_ent(-0.1, 0);
    FAIL("expected NegativeAlpha");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NegativeAlpha);
  }
}

TEST_CASE("beta_ppt on hand-evaluated points") {
  const auto at_origin = beta_ppt(0, 0);
  REQUIRE(at_origin.has_value());
  CHECK(at_origin->first == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(at_origin->second == doctest::Approx(0.25).epsilon(1e-12));

  // The curves touch at the origin: upper PPT root = lower detection root.
  CHECK(at_origin->second == doctest::Approx(beta_ent(0, 0)->first).epsilon(1e-12));

  // (0.2, 0): radicand 1, roots (0.2 -+ 3)/16.
  const auto a02 = beta_ppt(0.2, 0);
  REQUIRE(a02.has_value());
  CHECK(a02->first == doctest::Approx(-0.175).epsilon(1e-12));
  CHECK(a02->second == doctest::Approx(0.2).epsilon(1e-12));

  try {
    beta_ppt(-1e-9, 0);
    FAIL("expected NegativeAlpha");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NegativeAlpha);
  }
}

TEST_CASE("classify labels the canonical states") {
  CHECK(classify(CMatrix::Identity(9, 9) / 9.0, 3, 3).tag == StateClass::Undetected);
  CHECK(classify(pure_density(bell_state(3, 0, 0))).tag == StateClass::NptEntangled);
  CHECK(classify(bell_diagonal(line_spectrum(kReference))).tag == StateClass::BoundEntangled);

  // Unvalidated rubbish maps to a label, not an exception.
  CHECK(classify(CMatrix::Identity(9, 9), 3, 3).tag == StateClass::Unphysical);
  CHECK(classify(CMatrix::Identity(9, 9) / 9.0, 2, 4).tag == StateClass::Unphysical);
  CHECK(std::isnan(classify(CMatrix::Identity(9, 9), 3, 3).cqp_value));
}

TEST_CASE("classify_line on the canonical parameter points") {
  CHECK(classify_line(LineParams{0, 0, 0}).tag == StateClass::Undetected);
  CHECK(classify_line(LineParams{0, 0, 1}).tag == StateClass::NptEntangled);
  CHECK(classify_line(kReference).tag == StateClass::BoundEntangled);
  CHECK(classify_line(LineParams{2, 0, 0}).tag == StateClass::Unphysical);

  // Both cqp routes agree on the reference label.
  CHECK(classify_line(kReference, QpConfig{}, CqpPath::Generic).tag ==
        StateClass::BoundEntangled);
}

TEST_CASE("bound entangled labels imply a positive partial transpose") {
  const QpConfig cfg;
  for (double alpha = -0.1; alpha <= 0.3; alpha += 0.05)
    for (double beta = -0.1; beta <= 0.3; beta += 0.05) {
      const ClassLabel label = classify_line(LineParams{alpha, beta, 0});
      if (label.tag == StateClass::BoundEntangled) {
        CHECK(label.negativity <= default_tolerances().ppt);
        CHECK(is_ppt(bell_diagonal(line_spectrum(LineParams{alpha, beta, 0}))));
      }
    }
}

TEST_CASE("the parameter plane is symmetric under the alpha-beta exchange") {
  for (double gamma : {0.0, -1.0 / 12}) {
    for (double alpha = -0.3; alpha <= 0.35; alpha += 0.05)
      for (double beta = -0.3; beta <= 0.35; beta += 0.05) {
        const StateClass direct = classify_line(LineParams{alpha, beta, gamma}).tag;
        const StateClass mirrored = classify_line(LineParams{beta, alpha, gamma}).tag;
        CHECK(direct == mirrored);
      }
  }
}

TEST_CASE("bound entangled cells respect the borderline overlay arcs") {
  // Fine grid on the gamma = 0 plane; the lens must sit inside the PPT band,
  // outside the detection ellipse and its mirror, with its boundary tracking
  // the overlay arcs (including the positivity-triangle edge) to one step.
  ScanConfig cfg;
  cfg.family = Family::Line;
  cfg.gamma = 0.0;
  cfg.alpha_range = Range{0.0, 0.25, 1e-3};
  cfg.beta_range = Range{-0.15, 0.3, 1e-3};
  const ScanResult scan = run_scan(cfg, QpConfig{}, 2);

  int bound_cells = 0;
  const auto violations = test::check_scan_against_curves(scan, bound_cells);
  for (const std::string& violation : violations) FAIL_CHECK(violation);
  CHECK(violations.empty());
  CHECK(bound_cells > 0);
}
