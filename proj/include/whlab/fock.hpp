#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "whlab/linalg.hpp"
#include "whlab/report.hpp"

namespace whlab {

struct Finite {
  int d = 0;
  bool operator==(const Finite&) const = default;
};
struct Infinite {
  bool operator==(const Infinite&) const = default;
};
using Dimension = std::variant<Finite, Infinite>;

/// Deformation parameters {kappa_1..kappa_r} and the phase reference phi.
///
/// Admissible patterns are all kappa_i >= 0 (infinite representation) or
/// kappa_1 < 0 with the others >= 0 (finite representation). In the finite
/// case -1/kappa_1 must be a positive integer; values within a relative 1e-12
/// of an integer are snapped so that kappa_1 == -1/(d-1) exactly.
class AlgebraParams {
 public:
  /// Throws Error{InvalidSignPattern} or Error{NonIntegerDimension}.
  static AlgebraParams make(std::vector<double> kappas, double phi = 0.0);

  std::span<const double> kappas() const { return kappas_; }
  double kappa(std::size_t i) const { return kappas_.at(i); }
  std::size_t r() const { return kappas_.size(); }
  double phi() const { return phi_; }
  bool is_finite() const { return finite_dim_ > 0; }
  /// d for the finite case, 0 otherwise.
  int finite_dim() const { return finite_dim_; }

  AlgebraParams with_phi(double phi) const;

 private:
  AlgebraParams() = default;

  std::vector<double> kappas_;
  double phi_ = 0.0;
  int finite_dim_ = 0;
};

/// F(n) = n * prod_i (1 + kappa_i (n - 1)); F(0) = 0.
double structure_function(const AlgebraParams& params, int n);

Dimension dimension(const AlgebraParams& params);

enum class SpaceKind { Finite, Truncated };

/// Number basis |0>..|size-1>: either the exact finite representation or a
/// cutoff of the infinite one.
class FockSpace {
 public:
  /// Exact space of dimension d; DimensionMismatch for infinite params.
  static FockSpace finite(const AlgebraParams& params);
  /// Cutoff s >= 2 of an infinite representation; DimensionMismatch otherwise.
  static FockSpace truncated(const AlgebraParams& params, int s);
  /// finite() when the representation is finite, truncated(s) otherwise.
  static FockSpace natural(const AlgebraParams& params, int s);

  SpaceKind kind() const { return kind_; }
  int size() const { return size_; }
  bool is_finite() const { return kind_ == SpaceKind::Finite; }

  /// Throws DimensionMismatch unless this space was built for `params`.
  void require_compatible(const AlgebraParams& params) const;

  bool operator==(const FockSpace&) const = default;

 private:
  FockSpace(SpaceKind kind, int size) : kind_(kind), size_(size) {}

  SpaceKind kind_;
  int size_;
};

struct LadderOps {
  Operator a_minus;
  Operator a_plus;
  Operator number;
};

/// a-|n> = sqrt(F(n)) e^{+i[F(n)-F(n-1)]phi} |n-1>, a+ = (a-)^dagger, N|n> = n|n>.
LadderOps build_ladder_ops(const AlgebraParams& params, const FockSpace& space);

/// diag(F(0), ..., F(size-1)).
Operator hamiltonian(const AlgebraParams& params, const FockSpace& space);

/// Deviations of the defining relations. On a truncated space the
/// commutator [a-,a+] is only compared on indices 0..s-2.
VerificationReport verify_algebra(const AlgebraParams& params, const FockSpace& space, double tol);

enum class AlgebraLabel { h4, su_1_1, su_2 };
std::string to_string(AlgebraLabel label);

struct ClassificationReport {
  AlgebraLabel label;
  std::optional<double> bargmann_k;
  std::optional<double> spin_j;
  Dimension dimension;
};

/// Single-parameter classification by the sign of kappa; NotSingleParameter if r > 1.
ClassificationReport classify(const AlgebraParams& params);

/// H0 = a N(N-1)/2 + b N. Oscillator (a=0,b=1), Poschl-Teller (a=1, 2b=u+v+1,
/// u,v>1) and Morse (a=-1, 2b=ell-1, ell>=2) are distinguished by which of
/// u/v/ell are set.
struct H0Params {
  double a = 0.0;
  double b = 1.0;
  std::optional<double> u;
  std::optional<double> v;
  std::optional<int> ell;
};

struct H0Result {
  AlgebraParams params;
  FockSpace space;
  Operator h0;
};

/// kappa = a/(2b); the operator lives on the finite space or on a cutoff of
/// size `truncation` for infinite cases. Throws InvalidCase.
H0Result h0_from_ab(const H0Params& h0, int truncation);

}  // namespace whlab
