#pragma once

#include <cstdint>

#include "whlab/coherent.hpp"
#include "whlab/fock.hpp"
#include "whlab/report.hpp"

namespace whlab {

/// Defining relations plus the single-parameter classification (r = 1 only).
VerificationReport algebra_suite(const AlgebraParams& params, const FockSpace& space, double tol);

/// Unitary/shift phase operators, phase-state families and their properties.
/// Random times and labels are drawn from `seed`.
VerificationReport phase_suite(const AlgebraParams& params, const FockSpace& space, double tol,
                               std::uint64_t seed);

VerificationReport mub_suite(int d, double tol);

enum class CoherentSelection { TypeI, TypeII, Both };

VerificationReport coherent_suite(const AlgebraParams& params, const FockSpace& space, Complex z,
                                  CoherentSelection selection, double tol, std::uint64_t seed);

/// kappa < 0 uses the finite triangular space; otherwise a cutoff at jmax.
VerificationReport twomode_suite(double kappa, int jmax, double tol);

}  // namespace whlab
