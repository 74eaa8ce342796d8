#pragma once

#include <vector>

#include "pwtime/common.hpp"

namespace pwtime {

/// Result of checking a matrix against the density-matrix axioms.
/// `valid` holds iff every residual is within the tolerance it was checked at.
struct ValidationReport {
  bool valid = false;
  double hermiticity_residual = 0.0;  // max_ij |m_ij - conj(m_ji)|
  double trace_residual = 0.0;        // |Tr m - 1|
  double min_eigenvalue = 0.0;        // of the hermitized part
  double tol = kDefaultValidationTol;
};

ValidationReport validate_density(const ComplexMatrix& m,
                                  double tol = kDefaultValidationTol);

/// Dense Hermitian, unit-trace, positive-semidefinite state.
///
/// The validating constructor throws ValidationError (or DimensionError for
/// non-square input) when the matrix fails validate_density. Operations that
/// produce states valid by construction use `unchecked` to avoid re-running
/// the eigenvalue check.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m, double tol = kDefaultValidationTol);

  static DensityMatrix unchecked(ComplexMatrix m,
                                 double tol = kDefaultValidationTol);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix& matrix() const { return mat_; }
  double validation_tol() const { return tol_; }

  Complex operator()(int i, int j) const { return mat_(i, j); }

 private:
  struct Unchecked {};
  DensityMatrix(Unchecked, ComplexMatrix m, double tol)
      : mat_(std::move(m)), tol_(tol) {}

  ComplexMatrix mat_;
  double tol_;
};

/// Normalized state vector; throws ValidationError when |<psi|psi> - 1| exceeds
/// the tolerance.
class PureState {
 public:
  explicit PureState(ComplexVector amplitudes,
                     double norm_tol = kDefaultValidationTol);

  int dim() const { return static_cast<int>(amp_.size()); }
  const ComplexVector& amplitudes() const { return amp_; }
  double norm_tol() const { return tol_; }

  Complex operator[](int n) const { return amp_(n); }

 private:
  ComplexVector amp_;
  double tol_;
};

/// S_L = 1 - Tr rho^2, computed as 1 - sum_ij |rho_ij|^2.
double linear_entropy(const DensityMatrix& rho);

/// Rank-1 projector |psi><psi|.
DensityMatrix pure_density(const PureState& psi);

/// Convex combination sum_i w_i rho_i. Throws WeightError when the weights are
/// negative or do not sum to one within `weight_tol`.
DensityMatrix mix_states(const std::vector<DensityMatrix>& states,
                         const std::vector<double>& weights,
                         double weight_tol = kDefaultValidationTol);

/// Trace out the clock factor of a system (x) clock composite state.
/// Composite basis is system-major: flat index n*clock_dim + k.
DensityMatrix partial_trace_over_clock(const DensityMatrix& rho_u, int sys_dim,
                                       int clock_dim);

}  // namespace pwtime
