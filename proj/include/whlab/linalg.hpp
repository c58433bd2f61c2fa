#pragma once

#include <complex>

#include <Eigen/Dense>

namespace whlab {

using Complex = std::complex<double>;
/// Dense square complex matrix on a Fock space (a±, N, H, E, G, U(t)).
using Operator = Eigen::MatrixXcd;
/// Dense complex amplitude vector in the number basis.
using StateVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr Complex kI{0.0, 1.0};

/// e^{i x}
inline Complex phase_factor(double x) { return std::polar(1.0, x); }

inline Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

/// Max entry modulus; 0 for empty matrices.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Repeated-product power; exact zero structure is preserved (no rounding of zeros).
Operator matrix_power(const Operator& m, int power);

/// Throws NonFiniteValue if any entry is NaN or infinite.
void require_finite(const Operator& m, const char* what);
void require_finite(const StateVector& v, const char* what);

}  // namespace whlab
