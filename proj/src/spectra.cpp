#include "pwtime/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace pwtime {

int LevelGroups::find(double energy) const {
  for (size_t g = 0; g < groups.size(); ++g)
    if (std::abs(groups[g].energy - energy) <= group_tol)
      return static_cast<int>(g);
  std::ostringstream msg;
  msg << "no level group with representative energy " << energy;
  throw LookupError(msg.str());
}

EnergySpectrum::EnergySpectrum(RealVector levels, double hbar,
                               double group_tol)
    : levels_(std::move(levels)), hbar_(hbar), group_tol_(group_tol) {
  if (levels_.size() < 1) throw DimensionError("EnergySpectrum: empty levels");
  if (!levels_.allFinite())
    throw ValidationError("EnergySpectrum: levels must be finite");
  if (!(hbar_ > 0.0))
    throw std::invalid_argument("EnergySpectrum: hbar must be > 0");
  if (!(group_tol_ > 0.0))
    throw std::invalid_argument("EnergySpectrum: group_tol must be > 0");

  const int d = dim();
  std::vector<int> order(static_cast<size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return levels_(a) < levels_(b); });

  // Single linkage on the sorted levels: a gap > group_tol starts a new group.
  groups_.group_tol = group_tol_;
  groups_.dim = d;
  group_index_.assign(static_cast<size_t>(d), -1);
  for (int i = 0; i < d; ++i) {
    const int idx = order[static_cast<size_t>(i)];
    const bool new_group =
        groups_.groups.empty() ||
        levels_(idx) - levels_(order[static_cast<size_t>(i - 1)]) > group_tol_;
    if (new_group) {
      LevelGroup group;
      group.energy = levels_(idx);  // representative: lowest level in group
      groups_.groups.push_back(std::move(group));
    }
    groups_.groups.back().members.push_back(idx);
    group_index_[static_cast<size_t>(idx)] =
        static_cast<int>(groups_.groups.size()) - 1;
  }
}

const LevelGroups& group_levels(const EnergySpectrum& spec) {
  return spec.level_groups();
}

double linear_entropy(const EnergyDistribution& dist) {
  double sum_sq = 0.0;
  for (const auto& entry : dist.entries)
    sum_sq += entry.probability * entry.probability;
  return 1.0 - sum_sq;
}

ComplexMatrix projector(const LevelGroups& groups, double energy) {
  const int g = groups.find(energy);
  ComplexMatrix pi = ComplexMatrix::Zero(groups.dim, groups.dim);
  for (int n : groups.groups[static_cast<size_t>(g)].members)
    pi(n, n) = Complex(1.0, 0.0);
  return pi;
}

namespace {

void check_same_dim(const DensityMatrix& sigma, const EnergySpectrum& spec,
                    const char* op) {
  if (sigma.dim() != spec.dim()) {
    std::ostringstream msg;
    msg << op << ": state dim " << sigma.dim() << " != spectrum dim "
        << spec.dim();
    throw DimensionError(msg.str());
  }
}

}  // namespace

EnergyDistribution energy_distribution(const DensityMatrix& sigma,
                                       const EnergySpectrum& spec) {
  check_same_dim(sigma, spec, "energy_distribution");
  EnergyDistribution dist;
  for (const LevelGroup& group : spec.level_groups().groups) {
    double p = 0.0;
    for (int n : group.members) p += sigma(n, n).real();
    dist.entries.push_back({group.energy, p});
  }
  return dist;
}

DensityMatrix dephase(const DensityMatrix& sigma, const EnergySpectrum& spec) {
  check_same_dim(sigma, spec, "dephase");
  const int d = sigma.dim();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (int n = 0; n < d; ++n)
    for (int m = 0; m < d; ++m)
      if (spec.same_group(n, m)) out(n, m) = sigma(n, m);
  return DensityMatrix::unchecked(std::move(out), sigma.validation_tol());
}

CollapsedState collapsed_state(const DensityMatrix& sigma,
                               const EnergySpectrum& spec, double energy) {
  check_same_dim(sigma, spec, "collapsed_state");
  const LevelGroups& groups = spec.level_groups();
  const LevelGroup& group =
      groups.groups[static_cast<size_t>(groups.find(energy))];

  double p = 0.0;
  for (int n : group.members) p += sigma(n, n).real();
  if (p <= sigma.validation_tol()) {
    std::ostringstream msg;
    msg << "collapsed_state: outcome E = " << energy << " has probability "
        << p << " (zero-probability branch)";
    throw ZeroProbabilityError(msg.str());
  }

  const int d = sigma.dim();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (int n : group.members)
    for (int m : group.members) out(n, m) = sigma(n, m) / p;
  return {DensityMatrix::unchecked(std::move(out), sigma.validation_tol()), p};
}

EntropyDecomposition measurement_entropy_decomposition(
    const DensityMatrix& sigma, const EnergySpectrum& spec) {
  check_same_dim(sigma, spec, "measurement_entropy_decomposition");

  EntropyDecomposition out;
  out.total = linear_entropy(dephase(sigma, spec));

  double sum_p_sq = 0.0;
  double conditional = 0.0;
  for (const LevelGroup& group : spec.level_groups().groups) {
    double p = 0.0;
    for (int n : group.members) p += sigma(n, n).real();
    sum_p_sq += p * p;
    if (p > 1e-15) {
      double block_norm_sq = 0.0;
      for (int n : group.members)
        for (int m : group.members) block_norm_sq += std::norm(sigma(n, m));
      // p^2 * S_L[sigma_{R|E}] with sigma_{R|E} = block / p
      conditional += p * p * (1.0 - block_norm_sq / (p * p));
    }
  }
  out.spread = 1.0 - sum_p_sq;
  out.conditional = conditional;
  return out;
}

double energy_dispersion(const DensityMatrix& sigma,
                         const EnergySpectrum& spec) {
  check_same_dim(sigma, spec, "energy_dispersion");
  double first = 0.0;
  double second = 0.0;
  for (int n = 0; n < sigma.dim(); ++n) {
    const double p = sigma(n, n).real();
    first += spec.level(n) * p;
    second += spec.level(n) * spec.level(n) * p;
  }
  return second - first * first;
}

double quantum_dispersion(const DensityMatrix& sigma,
                          const EnergySpectrum& spec) {
  check_same_dim(sigma, spec, "quantum_dispersion");
  double acc = 0.0;
  for (int n = 0; n < sigma.dim(); ++n)
    for (int m = 0; m < sigma.dim(); ++m) {
      const double gap = spec.level(n) - spec.level(m);
      acc += std::norm(sigma(n, m)) * gap * gap;
    }
  return acc;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double acc = 0.0;
  for (Eigen::Index p = 0; p < a.rows(); ++p)
    for (Eigen::Index q = 0; q < a.cols(); ++q)
      if (p != q) acc += std::norm(a(p, q));
  return std::sqrt(acc);
}

}  // namespace

EigenDecomposition jacobi_diagonalize(const ComplexMatrix& h,
                                      double off_tol_rel, int max_sweeps) {
  if (h.rows() != h.cols())
    throw DimensionError("jacobi_diagonalize: matrix must be square");
  const int n = static_cast<int>(h.rows());
  if (n < 1) throw DimensionError("jacobi_diagonalize: empty matrix");

  const double scale = h.norm();
  const double herm_tol = 1e-9 * std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > herm_tol)
    throw ValidationError("jacobi_diagonalize: matrix is not Hermitian");

  // Exactly Hermitian working copy; diagonal kept real throughout.
  ComplexMatrix a = 0.5 * (h + h.adjoint());
  ComplexMatrix v = ComplexMatrix::Identity(n, n);

  const double off_target = off_tol_rel * scale;
  const double skip_below = scale > 0.0 ? 0.01 * off_target / (n * n) : 0.0;

  bool converged = off_diagonal_norm(a) <= off_target;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r <= skip_below) continue;

        // Unitary 2x2 rotation [[c, s*u], [-s*conj(u), c]] with u = e^{i phi}
        // chosen to annihilate a(p, q).
        const Complex u = a(p, q) / r;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
        const double sign = tau >= 0.0 ? 1.0 : -1.0;
        const double t = sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(u) * akq;
          a(k, q) = s * u * akp + c * akq;
          a(p, k) = std::conj(a(k, p));
          a(q, k) = std::conj(a(k, q));
        }
        a(p, p) = Complex(app * c * c - 2.0 * r * c * s + aqq * s * s, 0.0);
        a(q, q) = Complex(app * s * s + 2.0 * r * c * s + aqq * c * c, 0.0);
        a(p, q) = Complex(0.0, 0.0);
        a(q, p) = Complex(0.0, 0.0);

        for (int k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * std::conj(u) * vkq;
          v(k, q) = s * u * vkp + c * vkq;
        }
      }
    converged = off_diagonal_norm(a) <= off_target;
  }
  if (!converged)
    throw ConvergenceError("jacobi_diagonalize: no convergence after max sweeps");

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    out.eigenvalues(i) = a(order[static_cast<size_t>(i)],
                           order[static_cast<size_t>(i)]).real();
    out.eigenvectors.col(i) = v.col(order[static_cast<size_t>(i)]);
  }
  return out;
}

}  // namespace pwtime
