#pragma once

#include <vector>

#include "whlab/linalg.hpp"

namespace whlab {

/// The d quadratic-DFT vectors |a m>, stored as the columns of `vectors`.
struct QuantizedBasis {
  int a = 0;
  int d = 0;
  Operator vectors;

  StateVector vector(int m) const { return vectors.col(m); }
};

struct MubReport {
  int d = 0;
  bool prime = false;
  /// Number of bases: the d quantized ones plus the canonical basis.
  int bases = 0;
  /// Symmetric (d+1)x(d+1); entry (i,j) is max ||<u|v>| - 1/sqrt(d)| over the
  /// vector pairs of bases i and j. Index 0 is the canonical basis, i = a+1
  /// the quantized basis a. The diagonal is left at zero.
  Eigen::MatrixXd pair_deviations;
  bool complete = false;
  double max_pair_deviation = 0.0;
};

/// phi = -pi (d-1) a / d.
double quantize_phi(int d, int a);

QuantizedBasis quantized_basis(int d, int a);

Operator canonical_basis(int d);

/// max over column pairs of ||<u|v>| - 1/sqrt(d)|.
double unbiasedness(const Operator& basis_a, const Operator& basis_b);

bool is_prime(int d);

MubReport complete_mub_set(int d, double tol);

/// All overlap moduli between every unordered pair of bases of the d+1 set.
/// Row and column indices are global vector indices (basis * d + member).
struct OverlapEntry {
  int row = 0;
  int col = 0;
  double modulus = 0.0;
};
std::vector<OverlapEntry> mub_overlaps(int d);

}  // namespace whlab
