#include "whlab/fock.hpp"

#include <cmath>
#include <sstream>

#include "whlab/error.hpp"

namespace whlab {

namespace {

constexpr double kSnapTolerance = 1e-12;
constexpr int kMaxFiniteDim = 1 << 20;

std::string describe(std::span<const double> kappas) {
  std::ostringstream os;
  os << "kappa = [";
  for (std::size_t i = 0; i < kappas.size(); ++i) os << (i ? ", " : "") << kappas[i];
  os << "]";
  return os.str();
}

}  // namespace

AlgebraParams AlgebraParams::make(std::vector<double> kappas, double phi) {
  if (kappas.empty()) throw Error(ErrorKind::InvalidSignPattern, "at least one kappa is required");
  for (double k : kappas) {
    if (!std::isfinite(k)) throw Error(ErrorKind::InvalidSignPattern, "non-finite " + describe(kappas));
  }
  if (!std::isfinite(phi)) throw Error(ErrorKind::NonFiniteValue, "phi must be finite");
  for (std::size_t i = 1; i < kappas.size(); ++i) {
    if (kappas[i] < 0.0) {
      throw Error(ErrorKind::InvalidSignPattern,
                  "only kappa_1 may be negative, got " + describe(kappas));
    }
  }

  AlgebraParams p;
  p.phi_ = phi;
  if (kappas[0] < 0.0) {
    const double inv = -1.0 / kappas[0];
    const double nearest = std::round(inv);
    if (nearest < 1.0 || nearest > kMaxFiniteDim ||
        std::abs(inv - nearest) > kSnapTolerance * nearest) {
      throw Error(ErrorKind::NonIntegerDimension,
                  "-1/kappa_1 = " + std::to_string(inv) + " is not a positive integer");
    }
    const int n = static_cast<int>(nearest);
    kappas[0] = -1.0 / n;
    p.finite_dim_ = n + 1;
  }
  p.kappas_ = std::move(kappas);

  if (p.is_finite()) {
    const int d = p.finite_dim_;
    for (int n = 1; n < d; ++n) {
      if (!(structure_function(p, n) > 0.0)) {
        throw Error(ErrorKind::InvalidSignPattern, "F(n) must be positive below d");
      }
    }
    if (structure_function(p, d) != 0.0) {
      throw Error(ErrorKind::NonIntegerDimension, "F(d) does not vanish");
    }
  }
  return p;
}

AlgebraParams AlgebraParams::with_phi(double phi) const {
  if (!std::isfinite(phi)) throw Error(ErrorKind::NonFiniteValue, "phi must be finite");
  AlgebraParams copy = *this;
  copy.phi_ = phi;
  return copy;
}

double structure_function(const AlgebraParams& params, int n) {
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "structure function needs n >= 0");
  const auto kappas = params.kappas();
  // In the finite case 1 + kappa_1 (n-1) = (d-n)/(d-1), which vanishes exactly at n = d.
  double value = params.is_finite()
                     ? static_cast<double>(params.finite_dim() - n) / (params.finite_dim() - 1)
                     : 1.0 + kappas[0] * (n - 1);
  value *= n;
  for (std::size_t i = 1; i < kappas.size(); ++i) value *= 1.0 + kappas[i] * (n - 1);
  return value;
}

Dimension dimension(const AlgebraParams& params) {
  if (params.is_finite()) return Finite{params.finite_dim()};
  return Infinite{};
}

FockSpace FockSpace::finite(const AlgebraParams& params) {
  if (!params.is_finite()) {
    throw Error(ErrorKind::DimensionMismatch,
                "infinite representation has no finite space (" + describe(params.kappas()) + ")");
  }
  return FockSpace(SpaceKind::Finite, params.finite_dim());
}

FockSpace FockSpace::truncated(const AlgebraParams& params, int s) {
  if (params.is_finite()) {
    throw Error(ErrorKind::DimensionMismatch,
                "finite representation of dimension " + std::to_string(params.finite_dim()) +
                    " cannot be truncated");
  }
  if (s < 2) throw Error(ErrorKind::DimensionMismatch, "truncation order must be >= 2");
  return FockSpace(SpaceKind::Truncated, s);
}

FockSpace FockSpace::natural(const AlgebraParams& params, int s) {
  return params.is_finite() ? finite(params) : truncated(params, s);
}

void FockSpace::require_compatible(const AlgebraParams& params) const {
  if (is_finite() != params.is_finite() || (is_finite() && size_ != params.finite_dim())) {
    throw Error(ErrorKind::DimensionMismatch, "space of size " + std::to_string(size_) +
                                                  " does not match " + describe(params.kappas()));
  }
}

LadderOps build_ladder_ops(const AlgebraParams& params, const FockSpace& space) {
  space.require_compatible(params);
  const int dim = space.size();
  const double phi = params.phi();

  LadderOps ops{Operator::Zero(dim, dim), Operator(), Operator::Zero(dim, dim)};
  double f_prev = 0.0;
  for (int n = 1; n < dim; ++n) {
    const double f = structure_function(params, n);
    ops.a_minus(n - 1, n) = std::sqrt(f) * phase_factor((f - f_prev) * phi);
    f_prev = f;
  }
  for (int n = 0; n < dim; ++n) ops.number(n, n) = static_cast<double>(n);
  ops.a_plus = ops.a_minus.adjoint();
  require_finite(ops.a_minus, "ladder operator");
  return ops;
}

Operator hamiltonian(const AlgebraParams& params, const FockSpace& space) {
  space.require_compatible(params);
  Operator h = Operator::Zero(space.size(), space.size());
  for (int n = 0; n < space.size(); ++n) h(n, n) = structure_function(params, n);
  return h;
}

VerificationReport verify_algebra(const AlgebraParams& params, const FockSpace& space, double tol) {
  const LadderOps ops = build_ladder_ops(params, space);
  const int dim = space.size();
  const Operator h = hamiltonian(params, space);

  Operator delta_f = Operator::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    delta_f(n, n) = structure_function(params, n + 1) - structure_function(params, n);
  }
  const Operator comm = commutator(ops.a_minus, ops.a_plus) - delta_f;
  // The top level of a cutoff space loses its a+ partner.
  const int interior = space.is_finite() ? dim : dim - 1;

  VerificationReport report;
  report.add("algebra.commutator", max_abs(comm.topLeftCorner(interior, interior)), tol,
             "[a-,a+] = F(N+I) - F(N)");
  report.add("algebra.number_raise", max_abs(commutator(ops.number, ops.a_plus) - ops.a_plus), tol,
             "[N,a+] = +a+");
  report.add("algebra.number_lower",
             max_abs(commutator(ops.number, ops.a_minus) + ops.a_minus), tol, "[N,a-] = -a-");
  report.add("algebra.hamiltonian", max_abs(ops.a_plus * ops.a_minus - h), tol, "H = a+ a- = F(N)");
  report.add_exact("algebra.adjoint", max_abs(ops.a_plus - ops.a_minus.adjoint()), "a+ = (a-)^dagger");
  report.add_exact("algebra.number_hermitian", max_abs(ops.number - ops.number.adjoint()),
                   "N = N^dagger");

  if (space.is_finite()) {
    const int d = dim;
    double rule = std::abs(structure_function(params, d));
    for (int n = 1; n < d; ++n) {
      if (!(structure_function(params, n) > 0.0)) rule += 1.0;
    }
    report.add_exact("algebra.dimension_rule", rule, "d = 1 - 1/kappa_1, F(d) = 0");
    report.add_exact("algebra.top_annihilation", max_abs(ops.a_plus.col(d - 1)), "a+|d-1> = 0");
    report.add_exact("algebra.nilpotent_lower", max_abs(matrix_power(ops.a_minus, d)), "(a-)^d = 0");
    report.add_exact("algebra.nilpotent_raise", max_abs(matrix_power(ops.a_plus, d)), "(a+)^d = 0");
  }
  return report;
}

std::string to_string(AlgebraLabel label) {
  switch (label) {
    case AlgebraLabel::h4: return "h4";
    case AlgebraLabel::su_1_1: return "su_1_1";
    case AlgebraLabel::su_2: return "su_2";
  }
  return "unknown";
}

ClassificationReport classify(const AlgebraParams& params) {
  if (params.r() != 1) {
    throw Error(ErrorKind::NotSingleParameter,
                "classification needs r = 1, got r = " + std::to_string(params.r()));
  }
  const double kappa = params.kappa(0);
  ClassificationReport report{AlgebraLabel::h4, std::nullopt, std::nullopt, dimension(params)};
  if (kappa > 0.0) {
    report.label = AlgebraLabel::su_1_1;
    report.bargmann_k = 1.0 / (2.0 * kappa);
  } else if (kappa < 0.0) {
    report.label = AlgebraLabel::su_2;
    report.spin_j = -1.0 / (2.0 * kappa);
    const double d = 2.0 * *report.spin_j + 1.0;
    if (std::abs(d - params.finite_dim()) > 1e-9 * d) {
      throw Error(ErrorKind::DimensionMismatch, "2j + 1 disagrees with the representation dimension");
    }
  }
  return report;
}

H0Result h0_from_ab(const H0Params& h0, int truncation) {
  auto invalid = [](const std::string& why) { return Error(ErrorKind::InvalidCase, why); };
  auto close = [](double x, double y) { return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(y)); };

  if (!std::isfinite(h0.a) || !std::isfinite(h0.b) || !(h0.b > 0.0)) {
    throw invalid("b must be positive and a finite");
  }
  if (h0.ell && (h0.u || h0.v)) throw invalid("Morse and Poschl-Teller parameters are exclusive");
  if (h0.ell) {
    if (!close(h0.a, -1.0)) throw invalid("Morse case needs a = -1");
    if (*h0.ell < 2) throw invalid("Morse case needs ell >= 2");
    if (!close(2.0 * h0.b, *h0.ell - 1.0)) throw invalid("Morse case needs 2b = ell - 1");
  } else if (h0.u || h0.v) {
    if (!h0.u || !h0.v) throw invalid("Poschl-Teller case needs both u and v");
    if (!close(h0.a, 1.0)) throw invalid("Poschl-Teller case needs a = 1");
    if (!(*h0.u > 1.0 && *h0.v > 1.0)) throw invalid("Poschl-Teller case needs u > 1 and v > 1");
    if (!close(2.0 * h0.b, *h0.u + *h0.v + 1.0)) throw invalid("Poschl-Teller case needs 2b = u + v + 1");
  }

  const double kappa = h0.a / (2.0 * h0.b);
  std::optional<AlgebraParams> params;
  try {
    params = AlgebraParams::make({kappa});
  } catch (const Error& e) {
    throw invalid(std::string("a/(2b) is not admissible: ") + e.what());
  }
  const FockSpace space = FockSpace::natural(*params, truncation);
  Operator op = Operator::Zero(space.size(), space.size());
  for (int n = 0; n < space.size(); ++n) op(n, n) = 0.5 * h0.a * n * (n - 1) + h0.b * n;
  return H0Result{*params, space, std::move(op)};
}

}  // namespace whlab
