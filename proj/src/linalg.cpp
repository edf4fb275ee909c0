#include "entbound/linalg.hpp"

namespace entbound {

namespace {

// First component with magnitude above the noise floor of a unit vector.
int first_significant(const CVector& v) {
  for (int i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > 1e-12) return i;
  return 0;
}

}  // namespace

Spectrum hermitian_spectrum(const Eigen::Ref<const CMatrix>& mat, const Tolerances& tol) {
  if (mat.rows() != mat.cols()) fail(Errc::BadDims, "hermitian_spectrum: matrix not square");
  if (hermiticity_defect(mat) > tol.herm)
    fail(Errc::NotHermitian, "hermitian_spectrum: input exceeds hermiticity tolerance");

  Eigen::SelfAdjointEigenSolver<CMatrix> solver((mat + mat.adjoint()) / 2.0);
  if (solver.info() != Eigen::Success)
    fail(Errc::NoConvergence, "hermitian_spectrum: eigensolver did not converge");

  const int n = static_cast<int>(mat.rows());
  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);

  // Solver returns ascending order; fix phases first, then sort descending
  // with the deterministic tie-break.
  CMatrix vecs = solver.eigenvectors();
  std::vector<int> anchor(n);
  for (int c = 0; c < n; ++c) {
    CVector v = vecs.col(c);
    const int i0 = first_significant(v);
    const Complex pivot = v(i0);
    v *= std::conj(pivot) / std::abs(pivot);
    vecs.col(c) = v;
    anchor[c] = i0;
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const RVector& evs = solver.eigenvalues();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (evs(a) != evs(b)) return evs(a) > evs(b);
    return anchor[a] < anchor[b];
  });

  for (int c = 0; c < n; ++c) {
    out.eigenvalues(c) = evs(order[c]);
    out.eigenvectors.col(c) = vecs.col(order[c]);
  }
  return out;
}

RVector hermitian_eigenvalues(const Eigen::Ref<const CMatrix>& mat) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver((mat + mat.adjoint()) / 2.0,
                                                Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    fail(Errc::NoConvergence, "hermitian_eigenvalues: eigensolver did not converge");
  return solver.eigenvalues();
}

}  // namespace entbound
