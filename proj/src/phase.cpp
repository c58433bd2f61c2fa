#include "whlab/phase.hpp"

#include <cmath>
#include <string>

#include "whlab/error.hpp"

namespace whlab {

namespace {

void require_truncated(const FockSpace& space, const char* what) {
  if (space.is_finite()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " needs a truncated space");
  }
}

void require_finite_space(const FockSpace& space, const char* what) {
  if (!space.is_finite()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " needs a finite space");
  }
}

void require_label(int label, int size, const char* what) {
  if (label < 0 || label >= size) {
    throw Error(ErrorKind::IndexOutOfRange,
                std::string(what) + " = " + std::to_string(label) + " outside 0.." +
                    std::to_string(size - 1));
  }
}

// Upper shift carrying the phases e^{+i[F(n)-F(n-1)] phi}.
Operator shift_with_phases(const AlgebraParams& params, int dim) {
  Operator e = Operator::Zero(dim, dim);
  double f_prev = 0.0;
  for (int n = 1; n < dim; ++n) {
    const double f = structure_function(params, n);
    e(n - 1, n) = phase_factor((f - f_prev) * params.phi());
    f_prev = f;
  }
  return e;
}

// 2 pi m n / D reduced mod D before scaling.
double dft_angle(long long m, long long n, long long dim) {
  return 2.0 * kPi * static_cast<double>((m * n) % dim) / static_cast<double>(dim);
}

}  // namespace

double factorial_F(const AlgebraParams& params, int n) {
  if (n < 0 || (params.is_finite() && n >= params.finite_dim())) {
    throw Error(ErrorKind::IndexOutOfRange, "F(n)! needs 0 <= n < d, got n = " + std::to_string(n));
  }
  double product = 1.0;
  for (int k = 1; k <= n; ++k) product *= structure_function(params, k);
  return product;
}

Operator build_shift_phase_op(const AlgebraParams& params, const FockSpace& space) {
  space.require_compatible(params);
  require_truncated(space, "shift phase operator");
  return shift_with_phases(params, space.size());
}

Operator build_unitary_phase_op(const AlgebraParams& params, const FockSpace& space) {
  space.require_compatible(params);
  const int dim = space.size();
  Operator e = shift_with_phases(params, dim);
  e(dim - 1, 0) = phase_factor(-structure_function(params, dim - 1) * params.phi());
  return e;
}

PhaseStateTheta theta_phase_state(const AlgebraParams& params, double theta, const FockSpace& space) {
  space.require_compatible(params);
  require_truncated(space, "theta phase state");
  if (!(theta >= -kPi && theta <= kPi)) {
    throw Error(ErrorKind::OutsideDomain, "theta must lie in [-pi, pi]");
  }
  StateVector v(space.size());
  for (int n = 0; n < space.size(); ++n) {
    v(n) = phase_factor(-structure_function(params, n) * params.phi() + n * theta);
  }
  return PhaseStateTheta{params.phi(), theta, space, std::move(v)};
}

PhaseStateM m_phase_state(const AlgebraParams& params, int m, const FockSpace& space) {
  space.require_compatible(params);
  const int dim = space.size();
  require_label(m, dim, "m");
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  StateVector v(dim);
  for (int n = 0; n < dim; ++n) {
    v(n) = norm * phase_factor(-structure_function(params, n) * params.phi() + dft_angle(m, n, dim));
  }
  return PhaseStateM{params.phi(), m, std::move(v)};
}

Operator build_G_op(const AlgebraParams& params, const FockSpace& space) {
  space.require_compatible(params);
  require_finite_space(space, "G operator");
  const int d = space.size();
  const LadderOps ops = build_ladder_ops(params, space);
  return ops.a_minus + matrix_power(ops.a_plus, d - 1) / factorial_F(params, d - 1);
}

PhaseStateMu mu_phase_state(const AlgebraParams& params, int mu, const FockSpace& space) {
  space.require_compatible(params);
  require_finite_space(space, "mu phase state");
  const int d = space.size();
  require_label(mu, d, "mu");

  StateVector v(d);
  double norm2 = 0.0;
  for (int n = 0; n < d; ++n) {
    const double fact = factorial_F(params, n);
    norm2 += 1.0 / fact;
    v(n) = phase_factor(-structure_function(params, n) * params.phi() + dft_angle(mu, n, d)) /
           std::sqrt(fact);
  }
  const double c0 = 1.0 / std::sqrt(norm2);
  v *= c0;
  return PhaseStateMu{params.phi(), mu, c0, std::move(v)};
}

Operator time_evolution(const AlgebraParams& params, const FockSpace& space, double t) {
  space.require_compatible(params);
  Operator u = Operator::Zero(space.size(), space.size());
  for (int n = 0; n < space.size(); ++n) u(n, n) = phase_factor(-structure_function(params, n) * t);
  return u;
}

double closure_theta(const AlgebraParams& params, const FockSpace& space, int grid_points) {
  space.require_compatible(params);
  require_truncated(space, "theta closure");
  const int s = space.size();
  if (grid_points < 2 * s + 1) {
    throw Error(ErrorKind::InsufficientGrid, std::to_string(grid_points) + " points < 2s+1 = " +
                                                 std::to_string(2 * s + 1));
  }
  // Composite trapezoid over [-pi, pi] including both endpoints.
  const double h = 2.0 * kPi / (grid_points - 1);
  Operator integral = Operator::Zero(s, s);
  for (int k = 0; k < grid_points; ++k) {
    const double theta = k == grid_points - 1 ? kPi : -kPi + k * h;
    const double weight = (k == 0 || k == grid_points - 1) ? 0.5 * h : h;
    const StateVector v = theta_phase_state(params, theta, space).vector;
    integral += weight * (v * v.adjoint());
  }
  return max_abs(integral - 2.0 * kPi * Operator::Identity(s, s));
}

double closure_m(const AlgebraParams& params, const FockSpace& space) {
  space.require_compatible(params);
  const int dim = space.size();
  Operator sum = Operator::Zero(dim, dim);
  for (int m = 0; m < dim; ++m) {
    const StateVector v = m_phase_state(params, m, space).vector;
    sum += v * v.adjoint();
  }
  return max_abs(sum - Operator::Identity(dim, dim));
}

}  // namespace whlab
