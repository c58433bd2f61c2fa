#pragma once

#include "whlab/fock.hpp"

namespace whlab {

/// Eigenstate of the shift phase operator on a cutoff space; unnormalized,
/// every amplitude has modulus one.
struct PhaseStateTheta {
  double phi = 0.0;
  double theta = 0.0;
  FockSpace space;
  StateVector vector;
};

/// Normalized eigenstate of the unitary phase operator, eigenvalue e^{2 pi i m/D}.
struct PhaseStateM {
  double phi = 0.0;
  int m = 0;
  StateVector vector;
};

/// Eigenstate of G_d, eigenvalue e^{2 pi i mu/d}. c0 is the per-state
/// normalization (sum_n 1/F(n)!)^{-1/2}.
struct PhaseStateMu {
  double phi = 0.0;
  int mu = 0;
  double c0 = 1.0;
  StateVector vector;
};

/// F(n)! = F(1)...F(n), F(0)! = 1. Requires n < d for finite params.
double factorial_F(const AlgebraParams& params, int n);

/// Nonunitary shift E with a- = E sqrt(F(N)); cutoff spaces only.
Operator build_shift_phase_op(const AlgebraParams& params, const FockSpace& space);

/// Shift with wrap-around E|0> = e^{-i F(D-1) phi}|D-1>; unitary on any
/// space of size D (the finite E_d, or the cutoff E_s).
Operator build_unitary_phase_op(const AlgebraParams& params, const FockSpace& space);

/// theta in [-pi, pi]; cutoff spaces only.
PhaseStateTheta theta_phase_state(const AlgebraParams& params, double theta, const FockSpace& space);

/// 0 <= m < size. Also accepted on cutoff spaces, where it diagonalizes E_s.
PhaseStateM m_phase_state(const AlgebraParams& params, int m, const FockSpace& space);

/// G_d = a- + (a+)^{d-1} / F(d-1)!; finite spaces only.
Operator build_G_op(const AlgebraParams& params, const FockSpace& space);

PhaseStateMu mu_phase_state(const AlgebraParams& params, int mu, const FockSpace& space);

/// U(t) = diag(e^{-i F(n) t}).
Operator time_evolution(const AlgebraParams& params, const FockSpace& space, double t);

/// Max-entry deviation of the trapezoidal theta-integral of |phi,theta><phi,theta|
/// from 2 pi I. Throws InsufficientGrid if grid_points < 2s+1.
double closure_theta(const AlgebraParams& params, const FockSpace& space, int grid_points);

/// Max-entry deviation of sum_m |phi,m><phi,m| from I.
double closure_m(const AlgebraParams& params, const FockSpace& space);

}  // namespace whlab
