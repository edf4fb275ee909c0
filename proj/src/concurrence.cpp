#include "entbound/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace entbound {

namespace {

constexpr double kDegenerateChi = 1e-12;

// |psi> (x) |psi> on the doubled space.
CVector doubled(const CVector& psi) {
  const int n = static_cast<int>(psi.size());
  CVector x(static_cast<long>(n) * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) x(static_cast<long>(p) * n + q) = psi(p) * psi(q);
  return x;
}

struct QpCore {
  CMatrix t;          // empty when degenerate
  bool degenerate = false;
  int rank = 0;
  DominantInfo dominant;
};

QpCore qp_core(const BipartiteDensity& rho, const QpConfig& cfg, const Tolerances& tol) {
  const Spectrum spec = hermitian_spectrum(rho, tol);
  QpCore core;
  core.dominant = DominantInfo{spec.eigenvalues(0), 0};
  const int n = rho.dim();
  while (core.rank < n && spec.eigenvalues(core.rank) >= cfg.rank_tol) ++core.rank;
  if (core.rank == 0) fail(Errc::NotPositive, "qp_matrix: rho has empty numerical support");

  const PureState psi0(rho.dim_a(), rho.dim_b(), spec.eigenvectors.col(0), tol);
  const ChiVector chi = chi_vector(psi0, cfg, tol);
  if (chi.degenerate) {
    core.degenerate = true;
    return core;
  }

  // chi reshaped so that <Psi_i (x) Psi_j | chi> = Psi_i^dag X conj(Psi_j).
  const CMatrix x_mat =
      Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
          chi.vec.data(), n, n);
  const auto vecs = spec.eigenvectors.leftCols(core.rank);
  const CMatrix overlaps = vecs.adjoint() * x_mat * vecs.conjugate();
  const RVector weights = spec.eigenvalues.head(core.rank).cwiseSqrt();
  core.t = weights.asDiagonal() * overlaps * weights.asDiagonal();
  return core;
}

}  // namespace

CVector apply_antisym_pair(const CVector& x, int dim_a, int dim_b) {
  const int n = dim_a * dim_b;
  if (x.size() != static_cast<long>(n) * n)
    fail(Errc::BadDims, "apply_antisym_pair: vector is not on the doubled space");
  CVector y = CVector::Zero(x.size());
  auto at = [n, dim_b](int a1, int b1, int a2, int b2) {
    return static_cast<long>(product_index(a1, b1, dim_b)) * n + product_index(a2, b2, dim_b);
  };
  // The operator is a sum of rank-one terms over antisymmetric index pairs
  // (i<j on the first subsystem, k<l on the second).
  for (int i = 0; i < dim_a; ++i)
    for (int j = i + 1; j < dim_a; ++j)
      for (int k = 0; k < dim_b; ++k)
        for (int l = k + 1; l < dim_b; ++l) {
          const long p1 = at(i, k, j, l), p2 = at(j, k, i, l), p3 = at(i, l, j, k),
                     p4 = at(j, l, i, k);
          const Complex c = x(p1) - x(p2) - x(p3) + x(p4);
          y(p1) += c;
          y(p2) -= c;
          y(p3) -= c;
          y(p4) += c;
        }
  return y;
}

double pure_concurrence_squared(const PureState& psi) {
  // <psi (x) psi| A |psi (x) psi> = 4 sum_{i<j,k<l} |psi_ik psi_jl - psi_il psi_jk|^2
  double sum = 0.0;
  for (int i = 0; i < psi.dim_a(); ++i)
    for (int j = i + 1; j < psi.dim_a(); ++j)
      for (int k = 0; k < psi.dim_b(); ++k)
        for (int l = k + 1; l < psi.dim_b(); ++l)
          sum += std::norm(psi.amp(i, k) * psi.amp(j, l) - psi.amp(i, l) * psi.amp(j, k));
  return 4.0 * sum;
}

double pure_concurrence(const PureState& psi) {
  return std::sqrt(pure_concurrence_squared(psi));
}

ChiVector chi_vector(const PureState& psi0, const QpConfig& cfg, const Tolerances& tol) {
  (void)tol;  // normalization is enforced when psi0 is constructed
  CVector raw = apply_antisym_pair(doubled(psi0.amplitudes()), psi0.dim_a(), psi0.dim_b());
  const double c = pure_concurrence(psi0);
  if (c < kDegenerateChi) return ChiVector{CVector::Zero(raw.size()), true};
  if (cfg.chi_norm == ChiNorm::ConcurrenceNormalized) return ChiVector{raw / c, false};
  return ChiVector{raw / raw.norm(), false};
}

CMatrix qp_matrix(const BipartiteDensity& rho, const QpConfig& cfg, const Tolerances& tol) {
  QpCore core = qp_core(rho, cfg, tol);
  if (core.degenerate)
    fail(Errc::DegenerateChi, "qp_matrix: dominant eigenvector is a product state");
  return core.t;
}

QpReport cqp(const BipartiteDensity& rho, const QpConfig& cfg, const Tolerances& tol) {
  const QpCore core = qp_core(rho, cfg, tol);
  QpReport report;
  report.dominant = core.dominant;
  report.rank = core.rank;
  if (core.degenerate) {
    report.degenerate_chi = true;
    return report;
  }
  report.singulars = singular_values(core.t);
  report.value =
      std::max(0.0, report.singulars(0) - (report.singulars.sum() - report.singulars(0)));
  return report;
}

double bell_singular(const BellSpectrum& spec, BellIndex nm, BellIndex kl,
                     const Tolerances& tol) {
  if (!spectrum_is_physical(spec, tol))
    fail(Errc::NotPhysical, "bell_singular: spectrum is not physical");
  const int d = spec.d;
  auto in_range = [d](BellIndex ix) { return ix.k >= 0 && ix.k < d && ix.l >= 0 && ix.l < d; };
  if (!in_range(nm) || !in_range(kl))
    fail(Errc::IndexOutOfRange, "bell_singular: index outside grid");

  const int mk = ((2 * nm.k - kl.k) % d + d) % d;
  const int ml = ((2 * nm.l - kl.l) % d + d) % d;
  const double delta = (kl.k == nm.k && kl.l == nm.l) ? 1.0 : 0.0;
  const double inner =
      (1.0 - 2.0 / d) * spec.lambda(nm.k, nm.l) * delta + spec.lambda(mk, ml) / (d * d);
  const double value = d / (2.0 * (d - 1.0)) * spec.lambda(kl.k, kl.l) * inner;
  return std::sqrt(std::max(0.0, value));
}

QpReport cqp_bell(const BellSpectrum& spec, std::optional<BellIndex> anchor,
                  const Tolerances& tol, double rank_tol) {
  const BellIndex nm = anchor.value_or(dominant_index(spec, tol));
  const int d = spec.d;

  QpReport report;
  report.dominant = DominantInfo{spec.lambda(nm.k, nm.l), nm.k * d + nm.l};
  report.rank = static_cast<int>((spec.lambda.array() >= rank_tol).count());

  std::vector<double> values;
  values.reserve(d * d);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) values.push_back(bell_singular(spec, nm, BellIndex{k, l}, tol));
  std::sort(values.begin(), values.end(), std::greater<>());

  report.singulars = Eigen::Map<const RVector>(values.data(), values.size());
  report.value =
      std::max(0.0, report.singulars(0) - (report.singulars.sum() - report.singulars(0)));
  return report;
}

double wootters_concurrence(const BipartiteDensity& rho) {
  if (rho.dim_a() != 2 || rho.dim_b() != 2)
    fail(Errc::BadDims, "wootters_concurrence: defined for 2x2 systems only");
  CMatrix yy = CMatrix::Zero(4, 4);
  // sigma_y (x) sigma_y in the product basis.
  yy(0, 3) = Complex(-1, 0);
  yy(1, 2) = Complex(1, 0);
  yy(2, 1) = Complex(1, 0);
  yy(3, 0) = Complex(-1, 0);

  // The nu_i are the descending square roots of the eigenvalues of
  // rho (yy) rho* (yy); for rho = Phi Phi^dag these equal the singular values
  // of Phi^T (yy) Phi, which stays accurate when rho is nearly pure.
  const Spectrum spec = hermitian_spectrum(rho.matrix());
  int rank = 0;
  while (rank < 4 && spec.eigenvalues(rank) > 1e-14) ++rank;
  CMatrix phi(4, rank);
  for (int i = 0; i < rank; ++i)
    phi.col(i) = std::sqrt(spec.eigenvalues(i)) * spec.eigenvectors.col(i);
  const RVector sv = singular_values(CMatrix(phi.transpose() * yy * phi));

  double nu[4] = {0, 0, 0, 0};
  for (int i = 0; i < rank; ++i) nu[i] = sv(i);
  return std::max(0.0, nu[0] - nu[1] - nu[2] - nu[3]);
}

}  // namespace entbound
