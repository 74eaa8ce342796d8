#include "pwtime/qstate.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "pwtime/spectra.hpp"

namespace pwtime {

namespace {

double hermiticity_residual(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// Jacobi path per the d <= 64 design choice; Eigen's solver for the large
// discrete-clock composites where cyclic Jacobi stops being desk-scale.
double min_eigenvalue_of_hermitized(const ComplexMatrix& m) {
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  if (h.rows() <= 64) {
    EigenDecomposition eig = jacobi_diagonalize(h);
    return eig.eigenvalues(0);
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h,
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

}  // namespace

ValidationReport validate_density(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols())
    throw DimensionError("validate_density: matrix must be square");
  if (m.rows() < 1)
    throw DimensionError("validate_density: matrix must be non-empty");

  ValidationReport report;
  report.tol = tol;
  if (!m.allFinite()) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    report.hermiticity_residual = nan;
    report.trace_residual = nan;
    report.min_eigenvalue = nan;
    report.valid = false;
    return report;
  }

  report.hermiticity_residual = hermiticity_residual(m);
  report.trace_residual = std::abs(m.trace() - Complex(1.0, 0.0));
  report.min_eigenvalue = min_eigenvalue_of_hermitized(m);
  report.valid = report.hermiticity_residual <= tol &&
                 report.trace_residual <= tol &&
                 report.min_eigenvalue >= -tol;
  return report;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double tol)
    : mat_(std::move(m)), tol_(tol) {
  ValidationReport report = validate_density(mat_, tol_);
  if (!report.valid) {
    std::ostringstream msg;
    msg << "DensityMatrix: validation failed (hermiticity residual "
        << report.hermiticity_residual << ", trace residual "
        << report.trace_residual << ", min eigenvalue "
        << report.min_eigenvalue << ", tol " << tol_ << ")";
    throw ValidationError(msg.str());
  }
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix m, double tol) {
  return DensityMatrix(Unchecked{}, std::move(m), tol);
}

PureState::PureState(ComplexVector amplitudes, double norm_tol)
    : amp_(std::move(amplitudes)), tol_(norm_tol) {
  if (amp_.size() < 1) throw DimensionError("PureState: empty amplitude vector");
  if (!amp_.allFinite())
    throw ValidationError("PureState: amplitudes must be finite");
  const double norm_sq = amp_.squaredNorm();
  if (std::abs(norm_sq - 1.0) > tol_) {
    std::ostringstream msg;
    msg << "PureState: <psi|psi> = " << norm_sq << " is not 1 within " << tol_;
    throw ValidationError(msg.str());
  }
}

double linear_entropy(const DensityMatrix& rho) {
  // Tr rho^2 = sum_ij |rho_ij|^2 for Hermitian rho.
  return 1.0 - rho.matrix().squaredNorm();
}

DensityMatrix pure_density(const PureState& psi) {
  ComplexMatrix proj = psi.amplitudes() * psi.amplitudes().adjoint();
  return DensityMatrix::unchecked(std::move(proj), psi.norm_tol());
}

DensityMatrix mix_states(const std::vector<DensityMatrix>& states,
                         const std::vector<double>& weights,
                         double weight_tol) {
  if (states.empty()) throw DimensionError("mix_states: no states given");
  if (states.size() != weights.size())
    throw WeightError("mix_states: weight count does not match state count");

  double sum = 0.0;
  for (double w : weights) {
    if (w < -weight_tol)
      throw WeightError("mix_states: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > weight_tol) {
    std::ostringstream msg;
    msg << "mix_states: weights sum to " << sum << ", not 1 within "
        << weight_tol;
    throw WeightError(msg.str());
  }

  const int d = states.front().dim();
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  for (size_t j = 0; j < states.size(); ++j) {
    if (states[j].dim() != d)
      throw DimensionError("mix_states: states have mismatched dimensions");
    acc += weights[j] * states[j].matrix();
  }
  return DensityMatrix::unchecked(std::move(acc),
                                  states.front().validation_tol());
}

DensityMatrix partial_trace_over_clock(const DensityMatrix& rho_u, int sys_dim,
                                       int clock_dim) {
  if (sys_dim < 1 || clock_dim < 1)
    throw DimensionError("partial_trace_over_clock: factor dims must be >= 1");
  if (rho_u.dim() != sys_dim * clock_dim)
    throw DimensionError(
        "partial_trace_over_clock: composite dim != sys_dim * clock_dim");

  const ComplexMatrix& u = rho_u.matrix();
  ComplexMatrix reduced = ComplexMatrix::Zero(sys_dim, sys_dim);
  for (int n = 0; n < sys_dim; ++n)
    for (int m = 0; m < sys_dim; ++m) {
      Complex acc(0.0, 0.0);
      for (int k = 0; k < clock_dim; ++k)
        acc += u(n * clock_dim + k, m * clock_dim + k);
      reduced(n, m) = acc;
    }
  return DensityMatrix::unchecked(std::move(reduced),
                                  rho_u.validation_tol());
}

}  // namespace pwtime
