#include "whlab/twomode.hpp"

#include <cmath>
#include <string>

#include "whlab/error.hpp"

namespace whlab {

TwoModeSpace::TwoModeSpace(TwoModeKind kind, int jmax) : kind_(kind), jmax_(jmax) {
  labels_.reserve(static_cast<std::size_t>(jmax + 1) * (jmax + 2) / 2);
  for (int n1 = 0; n1 <= jmax; ++n1) {
    for (int n2 = 0; n1 + n2 <= jmax; ++n2) labels_.emplace_back(n1, n2);
  }
}

TwoModeSpace TwoModeSpace::finite(double kappa) {
  if (!(kappa < 0.0) || !std::isfinite(kappa)) {
    throw Error(ErrorKind::InvalidTruncation, "finite two-mode space needs kappa < 0");
  }
  const double inv = -1.0 / kappa;
  const double nearest = std::round(inv);
  if (nearest < 1.0 || nearest > 4096.0 || std::abs(inv - nearest) > 1e-12 * nearest) {
    throw Error(ErrorKind::InvalidTruncation, "-1/kappa must be a positive integer");
  }
  return TwoModeSpace(TwoModeKind::FiniteTriangular, static_cast<int>(nearest));
}

TwoModeSpace TwoModeSpace::truncated(int jmax) {
  if (jmax < 2) throw Error(ErrorKind::InvalidTruncation, "two-mode cutoff jmax must be >= 2");
  return TwoModeSpace(TwoModeKind::TruncatedTriangular, jmax);
}

int TwoModeSpace::index(int n1, int n2) const {
  if (n1 < 0 || n2 < 0 || n1 + n2 > jmax_) return -1;
  // Rows n1' < n1 hold (jmax - n1' + 1) labels each.
  return n1 * (jmax_ + 1) - n1 * (n1 - 1) / 2 + n2;
}

double two_mode_structure(double kappa, const TwoModeSpace& space, int mode, int n1, int n2) {
  const int ni = mode == 1 ? n1 : n2;
  const int total = n1 + n2;
  const double factor = space.is_finite()
                            ? static_cast<double>(space.jmax() - total + 1) / space.jmax()
                            : 1.0 + kappa * (total - 1);
  return ni * factor;
}

TwoModeOps build_two_mode_ops(double kappa, const TwoModeSpace& space) {
  if (!std::isfinite(kappa)) throw Error(ErrorKind::InvalidTruncation, "kappa must be finite");
  if (space.is_finite()) {
    if (!(kappa < 0.0) || std::abs(-1.0 / kappa - space.jmax()) > 1e-12 * space.jmax()) {
      throw Error(ErrorKind::InvalidTruncation,
                  "finite two-mode space of jmax " + std::to_string(space.jmax()) +
                      " does not match kappa");
    }
  }

  const int dim = space.size();
  TwoModeOps ops{space, kappa, Operator::Zero(dim, dim), {}, Operator::Zero(dim, dim), {},
                 Operator::Zero(dim, dim), Operator::Zero(dim, dim)};
  for (int col = 0; col < dim; ++col) {
    const auto [n1, n2] = space.labels()[col];
    ops.n1(col, col) = static_cast<double>(n1);
    ops.n2(col, col) = static_cast<double>(n2);
    for (int mode = 1; mode <= 2; ++mode) {
      const double f = two_mode_structure(kappa, space, mode, n1, n2);
      if (f < 0.0) {
        throw Error(ErrorKind::InvalidTruncation,
                    "F_" + std::to_string(mode) + "(" + std::to_string(n1) + "," +
                        std::to_string(n2) + ") < 0 inside the space");
      }
      const int row = mode == 1 ? space.index(n1 - 1, n2) : space.index(n1, n2 - 1);
      if (row < 0) continue;
      (mode == 1 ? ops.a1_minus : ops.a2_minus)(row, col) = std::sqrt(f);
    }
  }
  ops.a1_plus = ops.a1_minus.adjoint();
  ops.a2_plus = ops.a2_minus.adjoint();
  return ops;
}

VerificationReport verify_two_mode_algebra(const TwoModeOps& ops, double tol) {
  const TwoModeSpace& space = ops.space;
  const int dim = space.size();
  const double kappa = ops.kappa;

  // Input columns on which every relation is free of cutoff effects.
  std::vector<int> columns;
  for (int col = 0; col < dim; ++col) {
    const auto [n1, n2] = space.labels()[col];
    if (space.is_finite() || n1 + n2 <= space.jmax() - 2) columns.push_back(col);
  }
  auto deviation = [&](const Operator& m) {
    double worst = 0.0;
    for (int col : columns) worst = std::max(worst, max_abs(m.col(col)));
    return worst;
  };

  const Operator id = Operator::Identity(dim, dim);
  const Operator total = ops.n1 + ops.n2;
  const Operator* minus[2] = {&ops.a1_minus, &ops.a2_minus};
  const Operator* plus[2] = {&ops.a1_plus, &ops.a2_plus};
  const Operator* number[2] = {&ops.n1, &ops.n2};

  VerificationReport report;
  for (int i = 0; i < 2; ++i) {
    const std::string mode = std::to_string(i + 1);
    const Operator expected = id + kappa * (total + *number[i]);
    report.add("twomode.commutator_" + mode, deviation(commutator(*minus[i], *plus[i]) - expected),
               tol, "[a_i-,a_i+] = I + kappa(N1 + N2 + N_i)");
  }

  report.add("twomode.same_sign_raise", deviation(commutator(ops.a1_plus, ops.a2_plus)), tol,
             "[a_i+,a_j+] = 0");
  report.add("twomode.same_sign_lower", deviation(commutator(ops.a1_minus, ops.a2_minus)), tol,
             "[a_i-,a_j-] = 0");

  double shift = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double delta = i == j ? 1.0 : 0.0;
      shift = std::max(shift, deviation(commutator(*number[i], *plus[j]) - delta * *plus[j]));
      shift = std::max(shift, deviation(commutator(*number[i], *minus[j]) + delta * *minus[j]));
    }
  }
  report.add("twomode.number_shift", shift, tol, "[N_i,a_j+-] = +-delta_ij a_i+-");

  double trilinear = 0.0;
  for (int i = 0; i < 2; ++i) {
    const int j = 1 - i;
    trilinear = std::max(trilinear,
                         deviation(commutator(*plus[i], commutator(*plus[i], *minus[j]))));
    trilinear = std::max(trilinear,
                         deviation(commutator(*minus[i], commutator(*minus[i], *plus[j]))));
  }
  report.add("twomode.trilinear", trilinear, tol, "[a_i+-,[a_i+-,a_j-+]] = 0 for i != j");

  report.add_exact("twomode.adjoint",
                   std::max(max_abs(ops.a1_plus - ops.a1_minus.adjoint()),
                            max_abs(ops.a2_plus - ops.a2_minus.adjoint())),
                   "a_i+ = (a_i-)^dagger");
  report.add_exact("twomode.number_hermitian",
                   std::max(max_abs(ops.n1 - ops.n1.adjoint()), max_abs(ops.n2 - ops.n2.adjoint())),
                   "N_i = N_i^dagger");

  if (space.is_finite()) {
    // Every raising step off the n1 + n2 = jmax edge must carry a vanishing F.
    double edge = 0.0;
    for (int col = 0; col < dim; ++col) {
      const auto [n1, n2] = space.labels()[col];
      if (n1 + n2 != space.jmax()) continue;
      edge = std::max(edge, std::abs(two_mode_structure(kappa, space, 1, n1 + 1, n2)));
      edge = std::max(edge, std::abs(two_mode_structure(kappa, space, 2, n1, n2 + 1)));
      edge = std::max(edge, max_abs(ops.a1_plus.col(col)));
      edge = std::max(edge, max_abs(ops.a2_plus.col(col)));
    }
    report.add_exact("twomode.boundary_annihilation", edge, "a_i+ |n1+n2 = jmax> = 0");
  }
  return report;
}

std::string to_string(TwoModeLabel label) {
  switch (label) {
    case TwoModeLabel::h4_x_h4: return "h4_x_h4";
    case TwoModeLabel::su_2_1: return "su_2_1";
    case TwoModeLabel::su_3: return "su_3";
  }
  return "unknown";
}

TwoModeLabel classify_two_mode(double kappa) {
  if (kappa > 0.0) return TwoModeLabel::su_2_1;
  if (kappa < 0.0) return TwoModeLabel::su_3;
  return TwoModeLabel::h4_x_h4;
}

}  // namespace whlab
