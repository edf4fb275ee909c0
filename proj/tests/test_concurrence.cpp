#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entbound/classify.hpp"
#include "entbound/concurrence.hpp"
#include "test_support.hpp"

using namespace entbound;
using test::seeded_rng;

namespace {

const LineParams kReference{-0.092, 0.04, 0.2148};

PureState basis_product_state(int dim_a, int dim_b) {
  CVector v = CVector::Zero(dim_a * dim_b);
  v(0) = 1.0;
  return PureState(dim_a, dim_b, v);
}

BipartiteDensity werner(double p) {
  const CVector singlet = bell_state(2, 1, 1).amplitudes();
  CMatrix rho = p * (singlet * singlet.adjoint()) + (1.0 - p) * CMatrix::Identity(4, 4) / 4.0;
  return density_from_matrix(rho, 2, 2);
}

BellSpectrum random_spectrum(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(0.05, 1.0);
  BellSpectrum spec{3, RMatrix::NullaryExpr(3, 3, [&](int, int) { return uniform(rng); })};
  spec.lambda /= spec.lambda.sum();
  return spec;
}

// Fits the single proportionality constant between two descending singular
// lists and returns the largest residual after rescaling.
std::pair<double, double> proportionality(const RVector& a, const RVector& b) {
  const double c = a(0) / b(0);
  double worst = 0.0;
  for (int i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a(i) - c * b(i)));
  return {c, worst};
}

}  // namespace

TEST_CASE("pure concurrence on separable and maximally entangled states") {
  CHECK(pure_concurrence_squared(basis_product_state(2, 2)) == 0.0);
  CHECK(pure_concurrence(basis_product_state(2, 2)) == 0.0);

  // d = 3 Bell state: reduced state I/3, so 2(1 - 1/3) = 4/3.
  const PureState omega = bell_state(3, 0, 0);
  CHECK(pure_concurrence_squared(omega) == doctest::Approx(4.0 / 3).epsilon(1e-12));
  CHECK(pure_concurrence(omega) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(pure_concurrence_squared(omega) ==
        doctest::Approx(2.0 * (1.0 - test::reduced_purity_oracle(omega))).epsilon(1e-12));

  CVector v = CVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  CHECK(pure_concurrence_squared(PureState(2, 2, v)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two-qubit Schmidt sweep gives |sin 2 theta|") {
  for (double theta = 0.0; theta <= 1.55; theta += 0.1) {
    CVector v = CVector::Zero(4);
    v(0) = std::cos(theta);
    v(3) = std::sin(theta);
    const PureState psi(2, 2, v);
    CHECK(pure_concurrence(psi) == doctest::Approx(std::abs(std::sin(2 * theta))).epsilon(1e-12));
    CHECK(pure_concurrence_squared(psi) ==
          doctest::Approx(2.0 * (1.0 - test::reduced_purity_oracle(psi))).epsilon(1e-12));
  }
}

TEST_CASE("reduced-purity identity on random pure states") {
  auto rng = seeded_rng(101);
  for (auto [da, db] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    for (int trial = 0; trial < 100; ++trial) {
      const PureState psi = test::random_pure_state(rng, da, db);
      const double expected = 2.0 * (1.0 - test::reduced_purity_oracle(psi));
      CHECK(std::abs(pure_concurrence_squared(psi) - expected) < 1e-10);
    }
  }
}

TEST_CASE("the antisymmetrizer squares to four times itself") {
  auto rng = seeded_rng(103);
  for (auto [da, db] : {std::pair{2, 2}, std::pair{3, 3}}) {
    const int n = da * db;
    for (int trial = 0; trial < 10; ++trial) {
      const CVector x = test::random_unit_vector(rng, n * n);
      const CVector ax = apply_antisym_pair(x, da, db);
      const CVector aax = apply_antisym_pair(ax, da, db);
      CHECK((aax - 4.0 * ax).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("antisymmetrized doubled state has norm 2 C(psi)") {
  auto rng = seeded_rng(107);
  for (int trial = 0; trial < 10; ++trial) {
    const PureState psi = test::random_pure_state(rng, 3, 3);
    CVector x(81);
    for (int p = 0; p < 9; ++p)
      for (int q = 0; q < 9; ++q) x(p * 9 + q) = psi.amplitudes()(p) * psi.amplitudes()(q);
    const double raw_norm = apply_antisym_pair(x, 3, 3).norm();
    CHECK(raw_norm == doctest::Approx(2.0 * pure_concurrence(psi)).epsilon(1e-10));
  }
}

TEST_CASE("chi_vector flags product anchors and normalizes entangled ones") {
  const ChiVector degenerate = chi_vector(basis_product_state(3, 3), QpConfig{});
  CHECK(degenerate.degenerate);
  CHECK(degenerate.vec.cwiseAbs().maxCoeff() == 0.0);

  auto rng = seeded_rng(109);
  for (int trial = 0; trial < 5; ++trial) {
    const PureState psi = test::random_pure_state(rng, 3, 3);
    // Norm 2 under the concurrence normalization (raw norm is 2 C).
    const ChiVector cn = chi_vector(psi, QpConfig{});
    CHECK(cn.vec.norm() == doctest::Approx(2.0).epsilon(1e-10));
    const ChiVector unit = chi_vector(psi, QpConfig{1e-12, ChiNorm::UnitChi});
    CHECK(unit.vec.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("qp_matrix is one-dimensional and exact on a pure Bell state") {
  const BipartiteDensity rho = pure_density(bell_state(2, 0, 0));
  const CMatrix t = qp_matrix(rho, QpConfig{});
  CHECK(t.rows() == 1);
  CHECK(std::abs(t(0, 0)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(cqp(rho).value == doctest::Approx(1.0).epsilon(1e-10));

  const BipartiteDensity rho3 = pure_density(bell_state(3, 0, 0));
  CHECK(cqp(rho3).value == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-10));
}

TEST_CASE("qp_matrix raises DegenerateChi on a product anchor") {
  CVector diag = CVector::Zero(4);
  diag(0) = 0.7;
  diag(1) = 0.3;
  const BipartiteDensity rho = density_from_matrix(CMatrix(diag.asDiagonal()), 2, 2);
  try {
    qp_matrix(rho, QpConfig{});
    FAIL("expected DegenerateChi");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateChi);
  }
  const QpReport report = cqp(rho);
  CHECK(report.degenerate_chi);
  CHECK(report.value == 0.0);
}

TEST_CASE("qp_matrix output is complex symmetric") {
  auto rng = seeded_rng(113);
  for (int trial = 0; trial < 10; ++trial) {
    const BipartiteDensity rho =
        trial % 2 == 0 ? test::random_density(rng, 3, 3) : test::random_density(rng, 2, 3);
    try {
      const CMatrix t = qp_matrix(rho, QpConfig{});
      CHECK((t - t.transpose()).cwiseAbs().maxCoeff() < 1e-10);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DegenerateChi);  // allowed outcome for random anchors
    }
  }
}

TEST_CASE("cqp vanishes on maximally mixed states and detects the reference state") {
  const BipartiteDensity mixed = density_from_matrix(CMatrix::Identity(9, 9) / 9.0, 3, 3);
  CHECK(cqp(mixed).value == 0.0);

  const BipartiteDensity two_qubit_mixed =
      density_from_matrix(CMatrix::Identity(4, 4) / 4.0, 2, 2);
  const QpReport mixed_report = cqp(two_qubit_mixed);
  CHECK(mixed_report.value <= wootters_concurrence(two_qubit_mixed) + 1e-9);
  CHECK(mixed_report.value == 0.0);

  const QpReport ref = cqp(bell_diagonal(line_spectrum(kReference)));
  CHECK(ref.value > 0.0);
  // Quoted bound is 0.018; this normalization admits a factor-2 window.
  CHECK(ref.value > 0.009);
  CHECK(ref.value < 0.036);
  CHECK(ref.dominant.eigenvalue == doctest::Approx(0.30782).epsilon(1e-4));
  CHECK(ref.rank == 9);
}

TEST_CASE("bell_singular closed form on hand-evaluated points") {
  BellSpectrum pure{3, RMatrix::Zero(3, 3)};
  pure.lambda(0, 0) = 1.0;
  CHECK(bell_singular(pure, {0, 0}, {0, 0}) ==
        doctest::Approx(std::sqrt(1.0 / 3)).epsilon(1e-12));

  const BellSpectrum uniform = BellSpectrum::uniform(3);
  // (3/4) * (1/9)^3 under the square root.
  CHECK(bell_singular(uniform, {0, 0}, {1, 1}) ==
        doctest::Approx(std::sqrt(0.75 / 729.0)).epsilon(1e-12));

  const BellSpectrum ref = line_spectrum(kReference);
  // Mirror of (1,0) about (0,0) is (2,0); the delta term vanishes.
  const double expected = std::sqrt(ref.lambda(1, 0) * ref.lambda(2, 0) / 12.0);
  CHECK(bell_singular(ref, {0, 0}, {1, 0}) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(0.00337).epsilon(1e-2));

  CHECK_THROWS_AS((void)bell_singular(ref, {0, 0}, {3, 0}), Error);
  try {
    bell_singular(line_spectrum(LineParams{2, 0, 0}), {0, 0}, {0, 0});
    FAIL("expected NotPhysical");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPhysical);
  }
}

TEST_CASE("cqp_bell on degenerate and pure spectra") {
  // Uniform grid: the anchor term cannot dominate the eight mirror terms.
  CHECK(cqp_bell(BellSpectrum::uniform(3)).value == 0.0);

  BellSpectrum pure{3, RMatrix::Zero(3, 3)};
  pure.lambda(0, 0) = 1.0;
  const QpReport report = cqp_bell(pure);
  CHECK(report.value == doctest::Approx(std::sqrt(1.0 / 3)).epsilon(1e-12));
  CHECK(report.rank == 1);
}

TEST_CASE("cqp_bell agrees in sign with the generic path and admits an anchor override") {
  const BellSpectrum ref = line_spectrum(kReference);
  const QpReport analytic = cqp_bell(ref);
  const QpReport generic = cqp(bell_diagonal(ref));
  CHECK(analytic.value > 0.0);
  CHECK(generic.value > 0.0);

  // Anchoring off the dominant weight changes (here: kills) the bound.
  const QpReport off_anchor = cqp_bell(ref, BellIndex{1, 0});
  CHECK(off_anchor.value < analytic.value);
}

TEST_CASE("analytic and generic singular values are proportional with one constant") {
  auto rng = seeded_rng(127);
  double global = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const BellSpectrum spec = random_spectrum(rng);
    const QpReport analytic = cqp_bell(spec);
    const QpReport generic = cqp(bell_diagonal(spec));
    REQUIRE(generic.singulars.size() == analytic.singulars.size());
    const auto [c, worst] = proportionality(generic.singulars, analytic.singulars);
    CHECK(worst < 1e-8);
    if (trial == 0) global = c;
    CHECK(c == doctest::Approx(global).epsilon(1e-8));
    CHECK((analytic.value > 0.0) == (generic.value > 0.0));

    // Under a unit-normalized chi the generic path lands on the closed form.
    const QpReport unit = cqp(bell_diagonal(spec), QpConfig{1e-12, ChiNorm::UnitChi});
    const auto [c_unit, worst_unit] = proportionality(unit.singulars, analytic.singulars);
    CHECK(c_unit == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(worst_unit < 1e-8);
  }
  CHECK(global == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("detection is invariant under the chi normalization") {
  auto rng = seeded_rng(131);
  for (int trial = 0; trial < 20; ++trial) {
    const BipartiteDensity rho = test::random_density(rng, 2, 2);
    const QpReport cn = cqp(rho, QpConfig{1e-12, ChiNorm::ConcurrenceNormalized});
    const QpReport unit = cqp(rho, QpConfig{1e-12, ChiNorm::UnitChi});
    CHECK((cn.value > 0.0) == (unit.value > 0.0));
    if (!cn.degenerate_chi && cn.singulars.size() > 0) {
      const auto [c, worst] = proportionality(cn.singulars, unit.singulars);
      CHECK(c == doctest::Approx(2.0).epsilon(1e-9));
      CHECK(worst < 1e-10);
    }
  }
}

TEST_CASE("wootters_concurrence on the Werner family") {
  CHECK(wootters_concurrence(werner(1.0)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(wootters_concurrence(werner(1.0 / 3)) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(wootters_concurrence(werner(0.8)) == doctest::Approx(0.7).epsilon(1e-10));
  for (double p = 0.0; p <= 1.0; p += 0.125) {
    const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
    CHECK(wootters_concurrence(werner(p)) == doctest::Approx(expected).epsilon(1e-10));
  }

  try {
    wootters_concurrence(bell_diagonal(BellSpectrum::uniform(3)));
    FAIL("expected BadDims");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadDims);
  }
}

TEST_CASE("the quasi-pure bound never exceeds the exact two-qubit concurrence") {
  auto rng = seeded_rng(137);
  for (int trial = 0; trial < 100; ++trial) {
    const BipartiteDensity rho = test::random_density(rng, 2, 2);
    CHECK(cqp(rho).value <= wootters_concurrence(rho) + 1e-9);
  }
}

TEST_CASE("the bound is exact on pure states") {
  auto rng = seeded_rng(139);
  for (auto [da, db] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    for (int trial = 0; trial < 20; ++trial) {
      const PureState psi = test::random_pure_state(rng, da, db);
      CHECK(std::abs(cqp(pure_density(psi)).value - pure_concurrence(psi)) < 1e-8);
    }
  }
}
