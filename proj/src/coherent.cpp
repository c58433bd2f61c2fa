#include "whlab/coherent.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "whlab/error.hpp"
#include "whlab/phase.hpp"

namespace whlab {

namespace {

// Ratio |term_{n}/term_{n-1}| without the phase.
double term_ratio(CoherentFlavor flavor, const AlgebraParams& params, double abs_z, int n) {
  const double f = structure_function(params, n);
  return flavor == CoherentFlavor::TypeI ? abs_z * std::sqrt(f) / n : abs_z / std::sqrt(f);
}

CoherentState expand(CoherentFlavor flavor, const AlgebraParams& params, Complex z,
                     const FockSpace& space, double tail_eps) {
  const int dim = space.size();
  const double abs_z = std::abs(z);
  CoherentState state{flavor, z, params.phi(), space, StateVector::Zero(dim), 0.0, 0};

  Complex term = 1.0;  // z^n times the flavor's coefficient, phase excluded
  double norm2 = 0.0;
  int n = 0;
  for (; n < dim; ++n) {
    if (n > 0) {
      const double f = structure_function(params, n);
      term *= flavor == CoherentFlavor::TypeI ? z * std::sqrt(f) / static_cast<double>(n)
                                              : z / std::sqrt(f);
    }
    state.vector(n) = term * phase_factor(-structure_function(params, n) * params.phi());
    norm2 += std::norm(term);
    if (!space.is_finite() && n > 0 && tail_eps > 0.0 && std::abs(term) < tail_eps * std::sqrt(norm2)) {
      ++n;
      break;
    }
  }
  state.terms = n;
  require_finite(state.vector, "coherent state amplitudes");

  if (!space.is_finite()) {
    // Geometric bound on the omitted tail, using the largest ratio still to come.
    double rho = term_ratio(flavor, params, abs_z, n);
    if (flavor == CoherentFlavor::TypeI) rho = std::max(rho, abs_z * std::sqrt(params.kappa(0)));
    const double last = std::abs(term);
    state.tail_bound = last == 0.0 ? 0.0
                       : rho < 1.0 ? last * rho / std::sqrt(1.0 - rho * rho)
                                   : std::numeric_limits<double>::infinity();
  }
  return state;
}

}  // namespace

CoherentState kp_state(const AlgebraParams& params, Complex z, const FockSpace& space, double tail_eps) {
  space.require_compatible(params);
  if (!space.is_finite()) {
    if (params.r() != 1) {
      throw Error(ErrorKind::TypeIUndefined,
                  "Klauder-Perelomov states in infinite dimension exist only for r = 1");
    }
    const double kappa = params.kappa(0);
    if (kappa > 0.0 && std::abs(z) >= 1.0 / std::sqrt(kappa)) {
      throw Error(ErrorKind::OutsideDomain, "|z| must be below 1/sqrt(kappa) = " +
                                                std::to_string(1.0 / std::sqrt(kappa)));
    }
  }
  return expand(CoherentFlavor::TypeI, params, z, space, tail_eps);
}

double kp_exponential_check(const AlgebraParams& params, Complex z, const FockSpace& space) {
  const CoherentState state = kp_state(params, z, space);
  const LadderOps ops = build_ladder_ops(params, space);
  const int dim = space.size();

  // a+ is nilpotent on both finite and cutoff spaces, so the series terminates.
  StateVector term = StateVector::Zero(dim);
  term(0) = 1.0;
  StateVector exp_state = term;
  for (int k = 1; k < dim; ++k) {
    term = (z / static_cast<double>(k)) * (ops.a_plus * term);
    exp_state += term;
  }
  const int compared = space.is_finite() ? dim : dim - 1;
  return (state.vector.head(compared) - exp_state.head(compared)).norm();
}

CoherentState bg_state(const AlgebraParams& params, Complex z, const FockSpace& space, double tail_eps) {
  space.require_compatible(params);
  if (space.is_finite() && z != Complex{}) {
    throw Error(ErrorKind::BGFiniteComplexUndefined,
                "a- is nilpotent on a finite space; only z = 0 has an eigenvector");
  }
  return expand(CoherentFlavor::TypeII, params, z, space, tail_eps);
}

double bg_eigen_check(const AlgebraParams& params, const CoherentState& state, Complex z) {
  const LadderOps ops = build_ladder_ops(params, state.space);
  const double norm = state.vector.norm();
  if (norm == 0.0) return 0.0;
  const int compared = state.space.is_finite() ? state.space.size() : state.space.size() - 1;
  const StateVector diff = ops.a_minus * state.vector - z * state.vector;
  return diff.head(compared).norm() / norm;
}

NonexistenceCertificate bg_finite_nonexistence(const AlgebraParams& params, const FockSpace& space,
                                               std::uint64_t seed, int probe_count) {
  space.require_compatible(params);
  if (!space.is_finite()) {
    throw Error(ErrorKind::DimensionMismatch, "nonexistence certificate needs a finite space");
  }
  const int d = space.size();
  const LadderOps ops = build_ladder_ops(params, space);

  NonexistenceCertificate cert;
  cert.nilpotent_deviation = max_abs(matrix_power(ops.a_minus, d));

  Eigen::JacobiSVD<Operator> svd(ops.a_minus);
  const auto& sigma = svd.singularValues();
  const double cutoff = 1e-12 * std::max(1.0, sigma.maxCoeff());
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) < cutoff) ++cert.null_space_dim;
  }

  // Probes scale with the operator norm: well inside that disk the resolvent of a
  // nilpotent a- grows like |z|^-d and sigma_min underflows any fixed threshold.
  const double scale = std::max(1.0, sigma.maxCoeff());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> modulus(scale, 2.0 * scale);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  cert.min_residual = std::numeric_limits<double>::infinity();
  for (int k = 0; k < probe_count; ++k) {
    const Complex z = std::polar(modulus(rng), angle(rng));
    const Operator shifted = ops.a_minus - z * Operator::Identity(d, d);
    const double residual = Eigen::JacobiSVD<Operator>(shifted).singularValues().minCoeff();
    cert.probes.push_back(z);
    cert.residuals.push_back(residual);
    cert.min_residual = std::min(cert.min_residual, residual);
  }
  cert.certified = cert.nilpotent_deviation == 0.0 && cert.null_space_dim == 1 &&
                   (probe_count == 0 || cert.min_residual > 1e-3);
  return cert;
}

GrassmannState grassmann_bg_state(const AlgebraParams& params, const FockSpace& space) {
  space.require_compatible(params);
  const int dim = space.size();
  GrassmannState state{space, {}};
  state.entries.reserve(dim);
  for (int n = 0; n < dim; ++n) {
    const Complex coeff = phase_factor(-structure_function(params, n) * params.phi()) /
                          std::sqrt(factorial_F(params, n));
    state.entries.push_back(GrassmannElement::monomial(dim, n, coeff));
  }
  return state;
}

double grassmann_eigen_check(const AlgebraParams& params, const GrassmannState& state) {
  const LadderOps ops = build_ladder_ops(params, state.space);
  const int dim = state.space.size();
  if (static_cast<int>(state.entries.size()) != dim) {
    throw Error(ErrorKind::DimensionMismatch, "one ring element per Fock label is required");
  }
  const GrassmannElement theta = GrassmannElement::theta(dim);
  double worst = 0.0;
  for (int i = 0; i < dim; ++i) {
    GrassmannElement lhs(dim);
    for (int j = 0; j < dim; ++j) {
      if (ops.a_minus(i, j) != Complex{}) lhs += ops.a_minus(i, j) * state.entries[j];
    }
    worst = std::max(worst, lhs.distance(theta * state.entries[i]));
  }
  return worst;
}

}  // namespace whlab
