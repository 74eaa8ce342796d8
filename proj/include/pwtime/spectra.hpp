#pragma once

#include <utility>
#include <vector>

#include "pwtime/qstate.hpp"

namespace pwtime {

/// One set of levels sharing an energy up to the grouping tolerance.
/// `energy` is the representative (lowest raw level of the group).
struct LevelGroup {
  double energy = 0.0;
  std::vector<int> members;
};

/// Partition of the level indices into degenerate groups.
struct LevelGroups {
  std::vector<LevelGroup> groups;
  double group_tol = kDefaultGroupTol;
  int dim = 0;

  int count() const { return static_cast<int>(groups.size()); }
  /// Index of the group whose representative matches `energy` within
  /// group_tol; throws LookupError otherwise.
  int find(double energy) const;
};

/// Ordered eigenvalues of the system Hamiltonian in the working eigenbasis,
/// with the degeneracy grouping that defines which omega_nm count as zero.
class EnergySpectrum {
 public:
  explicit EnergySpectrum(RealVector levels, double hbar = 1.0,
                          double group_tol = kDefaultGroupTol);

  int dim() const { return static_cast<int>(levels_.size()); }
  double hbar() const { return hbar_; }
  double group_tol() const { return group_tol_; }
  double level(int n) const { return levels_(n); }
  const RealVector& levels() const { return levels_; }

  const LevelGroups& level_groups() const { return groups_; }
  int group_of(int n) const { return group_index_[static_cast<size_t>(n)]; }
  bool same_group(int n, int m) const { return group_of(n) == group_of(m); }

  /// Representative energy of n's group; equals level(n) exactly for
  /// non-degenerate or exactly-degenerate spectra.
  double effective_level(int n) const {
    return groups_.groups[static_cast<size_t>(group_of(n))].energy;
  }

  /// Signed effective gap E_n - E_m; exactly 0 within a group.
  double gap(int n, int m) const {
    return same_group(n, m) ? 0.0 : effective_level(n) - effective_level(m);
  }

  /// omega_nm = |E_n - E_m| / hbar, with the grouped-zero convention.
  double omega(int n, int m) const { return std::abs(gap(n, m)) / hbar_; }

 private:
  RealVector levels_;
  double hbar_;
  double group_tol_;
  LevelGroups groups_;
  std::vector<int> group_index_;
};

/// Single-linkage grouping of the spectrum's levels (precomputed at
/// construction; returned by reference).
const LevelGroups& group_levels(const EnergySpectrum& spec);

/// Probabilities p_E = Tr(Pi_E sigma) over the distinct energies.
struct EnergyDistribution {
  struct Entry {
    double energy = 0.0;
    double probability = 0.0;
  };
  std::vector<Entry> entries;
};

/// 1 - sum_E p_E^2.
double linear_entropy(const EnergyDistribution& dist);

/// Projector Pi_E onto the eigenspace labelled by `energy`.
ComplexMatrix projector(const LevelGroups& groups, double energy);

EnergyDistribution energy_distribution(const DensityMatrix& sigma,
                                       const EnergySpectrum& spec);

/// Non-selective energy measurement sum_E Pi_E sigma Pi_E: kills every
/// coherence between distinct energy groups, keeps diagonal blocks bit-exact.
DensityMatrix dephase(const DensityMatrix& sigma, const EnergySpectrum& spec);

struct CollapsedState {
  DensityMatrix state;
  double probability = 0.0;
};

/// Pi_E sigma Pi_E / p_E together with p_E; throws ZeroProbabilityError when
/// p_E is at or below the state's validation tolerance.
CollapsedState collapsed_state(const DensityMatrix& sigma,
                               const EnergySpectrum& spec, double energy);

/// S_L[sigma_{R|M}] split into the spread of {p_E} plus the p_E^2-weighted
/// conditional entropies. total == spread + conditional.
struct EntropyDecomposition {
  double total = 0.0;
  double spread = 0.0;
  double conditional = 0.0;
};

EntropyDecomposition measurement_entropy_decomposition(
    const DensityMatrix& sigma, const EnergySpectrum& spec);

/// sigma_E^2 = Tr(H^2 sigma) - Tr(H sigma)^2 with H = diag(E_n).
double energy_dispersion(const DensityMatrix& sigma,
                         const EnergySpectrum& spec);

/// D = -Tr([H, sigma]^2) = sum_nm |sigma_nm|^2 (E_n - E_m)^2 >= 0.
double quantum_dispersion(const DensityMatrix& sigma,
                          const EnergySpectrum& spec);

struct EigenDecomposition {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // columns; h = V diag(lambda) V^dagger
};

/// Cyclic-Jacobi diagonalization of a Hermitian matrix. Sweeps until the
/// off-diagonal Frobenius norm drops below off_tol_rel * ||h||_F; throws
/// ConvergenceError after max_sweeps, ValidationError for non-Hermitian input.
EigenDecomposition jacobi_diagonalize(const ComplexMatrix& h,
                                      double off_tol_rel = 1e-12,
                                      int max_sweeps = 50);

}  // namespace pwtime
