#pragma once

#include <cstdint>
#include <vector>

#include "whlab/fock.hpp"
#include "whlab/grassmann.hpp"

namespace whlab {

enum class CoherentFlavor {
  TypeI,   // Klauder-Perelomov: exp(z a+)|0>
  TypeII,  // Barut-Girardello: a-|z> = z|z>
};

/// Unnormalized coherent state. On a cutoff space the expansion may stop
/// early; `terms` counts the computed amplitudes and `tail_bound` estimates
/// the norm of everything omitted (zero on finite spaces).
struct CoherentState {
  CoherentFlavor flavor = CoherentFlavor::TypeI;
  Complex z;
  double phi = 0.0;
  FockSpace space;
  StateVector vector;
  double tail_bound = 0.0;
  int terms = 0;
};

/// Amplitudes sqrt(F(n)!)/n! z^n e^{-i F(n) phi}. On cutoff spaces only r = 1
/// is defined (TypeIUndefined otherwise) and kappa > 0 needs |z| < 1/sqrt(kappa)
/// (OutsideDomain). tail_eps = 0 computes every amplitude up to the cutoff.
CoherentState kp_state(const AlgebraParams& params, Complex z, const FockSpace& space,
                       double tail_eps = 0.0);

/// || kp_state - exp(z a+)|0> ||, on components 0..s-2 for cutoff spaces.
double kp_exponential_check(const AlgebraParams& params, Complex z, const FockSpace& space);

/// Amplitudes z^n e^{-i F(n) phi} / sqrt(F(n)!). On a finite space only z = 0
/// is allowed (BGFiniteComplexUndefined).
CoherentState bg_state(const AlgebraParams& params, Complex z, const FockSpace& space,
                       double tail_eps = 0.0);

/// || a-|z> - z|z> || / || |z> || on components 0..s-2.
double bg_eigen_check(const AlgebraParams& params, const CoherentState& state, Complex z);

/// Why no complex-z eigenvector of a- exists on a finite space.
struct NonexistenceCertificate {
  /// max |entry| of (a-)^d; zero for a nilpotent a-.
  double nilpotent_deviation = 0.0;
  int null_space_dim = 0;
  std::vector<Complex> probes;
  /// Smallest singular value of a- - z I per probe.
  std::vector<double> residuals;
  double min_residual = 0.0;
  bool certified = false;
};

/// Probes `probe_count` random z drawn from `seed`, with |z| in [1, 2] times
/// max(1, ||a-||_2).
NonexistenceCertificate bg_finite_nonexistence(const AlgebraParams& params, const FockSpace& space,
                                               std::uint64_t seed = 42, int probe_count = 10);

/// One ring element per Fock label; dim of every element equals the space size.
struct GrassmannState {
  FockSpace space;
  std::vector<GrassmannElement> entries;
};

/// Entry n is e^{-i F(n) phi}/sqrt(F(n)!) theta^n.
GrassmannState grassmann_bg_state(const AlgebraParams& params, const FockSpace& space);

/// Max coefficient deviation between a-|theta> and theta |theta>.
double grassmann_eigen_check(const AlgebraParams& params, const GrassmannState& state);

}  // namespace whlab
