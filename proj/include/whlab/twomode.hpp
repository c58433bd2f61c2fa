#pragma once

#include <string>
#include <utility>
#include <vector>

#include "whlab/linalg.hpp"
#include "whlab/report.hpp"

namespace whlab {

enum class TwoModeKind { FiniteTriangular, TruncatedTriangular };

/// Pairs (n1, n2) with n1 + n2 <= jmax, ordered n1-major.
class TwoModeSpace {
 public:
  /// kappa < 0 with -1/kappa = jmax a positive integer (snapped at 1e-12).
  static TwoModeSpace finite(double kappa);
  /// Cutoff at total excitation jmax >= 2.
  static TwoModeSpace truncated(int jmax);

  TwoModeKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == TwoModeKind::FiniteTriangular; }
  int jmax() const { return jmax_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::pair<int, int>>& labels() const { return labels_; }
  /// Position of (n1, n2), or -1 outside the space.
  int index(int n1, int n2) const;

 private:
  TwoModeSpace(TwoModeKind kind, int jmax);

  TwoModeKind kind_;
  int jmax_;
  std::vector<std::pair<int, int>> labels_;
};

struct TwoModeOps {
  TwoModeSpace space;
  double kappa = 0.0;
  Operator a1_minus, a1_plus, a2_minus, a2_plus, n1, n2;
};

/// F_i(n1, n2) = n_i (1 + kappa (n1 + n2 - 1)); on a finite space the factor is
/// evaluated as (jmax - n1 - n2 + 1)/jmax so that it vanishes exactly past the edge.
double two_mode_structure(double kappa, const TwoModeSpace& space, int mode, int n1, int n2);

/// a_i-|n1,n2> = sqrt(F_i(n1,n2)) |.., n_i - 1, ..>, a_i+ its adjoint.
/// Throws InvalidTruncation when the space does not fit kappa or some F_i < 0.
TwoModeOps build_two_mode_ops(double kappa, const TwoModeSpace& space);

/// All defining relations; cutoff spaces are compared on input states with
/// n1 + n2 <= jmax - 2 only.
VerificationReport verify_two_mode_algebra(const TwoModeOps& ops, double tol);

enum class TwoModeLabel { h4_x_h4, su_2_1, su_3 };
std::string to_string(TwoModeLabel label);
TwoModeLabel classify_two_mode(double kappa);

}  // namespace whlab
