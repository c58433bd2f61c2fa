// Acceptance suite: one line per criterion, each evaluated at its stated
// tolerance and timed against the 10 s budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "whlab/cli.hpp"
#include "whlab/coherent.hpp"
#include "whlab/mub.hpp"
#include "whlab/phase.hpp"
#include "whlab/twomode.hpp"

using namespace whlab;

namespace {

constexpr double kTimeBudgetSeconds = 10.0;
constexpr double kUnitRoundoff = 8.0 * std::numeric_limits<double>::epsilon();

/// Accumulates the worst value of each named quantity and whether it met its bound.
class Tally {
 public:
  void below(const std::string& what, double value, double bound) { record(what, value, value < bound, "<", bound); }
  void exact(const std::string& what, double value) { record(what, value, value == 0.0, "==", 0.0); }
  void above(const std::string& what, double value, double bound) {
    record(what, value, value > bound, ">", bound);
  }
  void holds(const std::string& what, bool ok) { record(what, ok ? 1.0 : 0.0, ok, "==", 1.0); }

  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (!first_failure_.empty()) os << "; first failure: " << first_failure_;
    return os.str();
  }

 private:
  void record(const std::string& what, double value, bool ok, const char* op, double bound) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (first_failure_.empty()) {
      char buf[256];
      std::snprintf(buf, sizeof buf, "%s = %.3e (need %s %.1e)", what.c_str(), value, op, bound);
      first_failure_ = buf;
    }
  }

  int checks_ = 0;
  int failures_ = 0;
  std::string first_failure_;
};

Complex root(int k, int d) { return std::polar(1.0, 2.0 * kPi * (k % d) / d); }

std::string label(const AlgebraParams& p) {
  std::ostringstream os;
  os << "kappa=[";
  for (std::size_t i = 0; i < p.r(); ++i) os << (i ? "," : "") << p.kappa(i);
  os << "] phi=" << p.phi();
  return os.str();
}

// 1. Defining relations on finite and cutoff spaces.
void algebra_criterion(Tally& t) {
  const std::vector<std::vector<double>> sets{{0.0},        {0.5},        {1.0},        {-1.0},
                                              {-0.5},       {-1.0 / 3.0}, {0.5, 1.0},   {-1.0 / 3.0, 0.25}};
  for (const auto& kappas : sets) {
    const auto p = AlgebraParams::make(kappas, 0.77);
    std::vector<FockSpace> spaces;
    if (p.is_finite()) {
      spaces.push_back(FockSpace::finite(p));
    } else {
      for (int s = 2; s <= 16; ++s) spaces.push_back(FockSpace::truncated(p, s));
    }
    for (const auto& space : spaces) {
      const auto report = verify_algebra(p, space, 1e-10);
      for (const auto& item : report.items()) {
        const std::string what = item.name + " " + label(p) + " size=" + std::to_string(space.size());
        if (item.tolerance == kExact) {
          t.exact(what, item.max_deviation);
        } else {
          t.below(what, item.max_deviation, 1e-10);
        }
      }
      if (p.is_finite()) {
        for (const char* name : {"algebra.top_annihilation", "algebra.nilpotent_lower", "algebra.nilpotent_raise"}) {
          t.holds(std::string(name) + " present", report.find(name) != nullptr);
        }
      }
    }
  }
}

// 2. Unitary phase operator, m- and mu-phase states.
void phase_criterion(Tally& t) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> phase(-kPi, kPi);
  std::uniform_real_distribution<double> time(-10.0, 10.0);
  for (int d : {2, 3, 4, 5, 8}) {
    for (const auto& extra : std::vector<std::vector<double>>{{}, {0.3}}) {
      std::vector<double> kappas{-1.0 / (d - 1)};
      kappas.insert(kappas.end(), extra.begin(), extra.end());
      for (int sample = 0; sample < 5; ++sample) {
        const auto p = AlgebraParams::make(kappas, phase(rng));
        const auto space = FockSpace::finite(p);
        const std::string tag = label(p) + " d=" + std::to_string(d);
        const Operator e = build_unitary_phase_op(p, space);
        const Operator g = build_G_op(p, space);
        t.below("E_d unitarity " + tag, max_abs(e.adjoint() * e - Operator::Identity(d, d)), 1e-12);

        Operator states(d, d);
        for (int m = 0; m < d; ++m) {
          states.col(m) = m_phase_state(p, m, space).vector;
          t.below("E_d eigen " + tag, (e * states.col(m) - root(m, d) * states.col(m)).norm(), 1e-10);
          const StateVector mu = mu_phase_state(p, m, space).vector;
          t.below("G_d eigen " + tag, (g * mu - root(m, d) * mu).norm(), 1e-10);
        }
        t.below("orthonormality " + tag, max_abs(states.adjoint() * states - Operator::Identity(d, d)), 1e-10);
        t.below("closure " + tag, closure_m(p, space), 1e-10);
        t.below("equiprobability " + tag, (states.cwiseAbs().array() - 1.0 / std::sqrt(d)).abs().maxCoeff(),
                1e-10);
        for (int k = 0; k < 20; ++k) {
          const double dt = time(rng);
          const int m = k % d;
          const StateVector evolved = time_evolution(p, space, dt) * states.col(m);
          const StateVector target = m_phase_state(p.with_phi(p.phi() + dt), m, space).vector;
          t.below("temporal stability " + tag, (evolved - target).norm(), 1e-10);
        }
      }
    }
  }
}

// 3. Shift phase operator on cutoff spaces and the theta closure.
void truncated_phase_criterion(Tally& t) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> phase(-kPi, kPi);
  for (const auto& kappas : std::vector<std::vector<double>>{{0.0}, {0.5}, {1.0}, {0.5, 1.0}}) {
    for (int s = 2; s <= 16; ++s) {
      const auto p = AlgebraParams::make(kappas, phase(rng));
      const auto space = FockSpace::truncated(p, s);
      const std::string tag = label(p) + " s=" + std::to_string(s);
      const Operator e = build_shift_phase_op(p, space);
      const Operator product = e.adjoint() * e;
      // Off-diagonal entries and the |0><0| slot vanish exactly; the unit
      // diagonal is |e^{ix}|^2, exact up to the rounding of cos^2 + sin^2.
      double structural = std::abs(product(0, 0));
      double diagonal = 0.0;
      for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) {
          if (i != j) structural = std::max(structural, std::abs(product(i, j)));
        }
        if (i > 0) diagonal = std::max(diagonal, std::abs(product(i, i) - 1.0));
      }
      t.exact("E^dagger E - (I - |0><0|) off-diagonal " + tag, structural);
      t.below("E^dagger E unit diagonal " + tag, diagonal, kUnitRoundoff);
      const Operator sqrt_h = hamiltonian(p, space).cwiseSqrt();
      t.below("a- = E sqrt(F(N)) " + tag, max_abs(build_ladder_ops(p, space).a_minus - e * sqrt_h), 1e-12);
      t.below("theta closure grid=4s " + tag, closure_theta(p, space, 4 * s), 1e-8);
    }
  }
}

// 4. Complete sets of d+1 mutually unbiased bases for prime d.
void mub_criterion(Tally& t) {
  for (int d : {2, 3, 5, 7, 11}) {
    const std::string tag = "d=" + std::to_string(d);
    const MubReport report = complete_mub_set(d, 1e-10);
    t.holds("d+1 bases " + tag, report.bases == d + 1);
    t.holds("prime " + tag, report.prime);
    for (int i = 0; i < report.bases; ++i) {
      for (int j = i + 1; j < report.bases; ++j) {
        t.below("pair unbiasedness " + tag, report.pair_deviations(i, j), 1e-10);
      }
    }
    t.holds("complete " + tag, report.complete);

    const auto params = AlgebraParams::make({-1.0 / (d - 1)});
    const auto space = FockSpace::finite(params);
    for (int a = 0; a < d; ++a) {
      const QuantizedBasis basis = quantized_basis(d, a);
      const auto quantized = params.with_phi(quantize_phi(d, a));
      for (int m = 0; m < d; ++m) {
        t.below("|a m> vs |phi,m> " + tag,
                max_abs(basis.vector(m) - m_phase_state(quantized, m, space).vector), 1e-12);
      }
    }
  }
}

// 5. Coherent states of both types, the finite-dimension obstruction and the nilpotent variable.
void coherent_criterion(Tally& t) {
  std::vector<Complex> zs;
  for (double r : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    for (double arg : {0.0, 1.0, 2.5, -2.0}) zs.push_back(std::polar(r, arg));
  }

  for (int d = 2; d <= 16; ++d) {
    for (const auto& extra : std::vector<std::vector<double>>{{}, {0.5}}) {
      std::vector<double> kappas{-1.0 / (d - 1)};
      kappas.insert(kappas.end(), extra.begin(), extra.end());
      const auto p = AlgebraParams::make(kappas, 0.7);
      const auto space = FockSpace::finite(p);
      for (Complex z : zs) t.below("KP exp residual finite " + label(p), kp_exponential_check(p, z, space), 1e-10);

      const auto cert = bg_finite_nonexistence(p, space, 42 + d);
      t.exact("(a-)^d " + label(p), cert.nilpotent_deviation);
      t.holds("null space of a- is |0> " + label(p), cert.null_space_dim == 1);
      for (double r : cert.residuals) t.above("random-z residual " + label(p), r, 1e-3);
    }
  }

  for (double kappa : {0.0, 0.25}) {
    const double radius = kappa > 0.0 ? 0.8 / std::sqrt(kappa) : 2.0;
    const auto p = AlgebraParams::make({kappa}, -0.4);
    for (int s : {10, 20, 30, 40}) {
      const auto space = FockSpace::truncated(p, s);
      for (double frac : {0.0, 0.3, 0.7, 1.0}) {
        for (double arg : {0.0, 1.3, -2.2}) {
          const Complex z = std::polar(frac * radius, arg);
          t.below("KP exp residual truncated " + label(p) + " s=" + std::to_string(s),
                  kp_exponential_check(p, z, space), 1e-10);
        }
      }
    }
  }

  for (const auto& kappas : std::vector<std::vector<double>>{{0.0}, {0.25}, {1.0}, {0.5, 2.0}}) {
    const auto p = AlgebraParams::make(kappas, 1.9);
    const auto space = FockSpace::truncated(p, 40);
    for (Complex z : {Complex(0.0), Complex(0.3, 0.0), Complex(0.0, 0.9), Complex(-1.1, 0.7), Complex(1.5, 0.0)}) {
      const CoherentState state = bg_state(p, z, space, 1e-16);
      t.below("BG tail bound " + label(p), state.tail_bound, 1e-12);
      t.below("BG eigen residual " + label(p), bg_eigen_check(p, state, z), 1e-10);
    }
  }

  const auto osc = AlgebraParams::make({0.0}, 0.6);
  const auto s30 = FockSpace::truncated(osc, 30);
  for (Complex z : zs) {
    t.below("Glauber coincidence", max_abs(kp_state(osc, z, s30).vector - bg_state(osc, z, s30).vector), 1e-12);
  }

  for (int d : {2, 3, 4, 6}) {
    for (double phi : {0.0, 1.0, 2.4, -3.0}) {
      const auto p = AlgebraParams::make({-1.0 / (d - 1)}, phi);
      const auto space = FockSpace::finite(p);
      t.below("Grassmann eigen " + label(p), grassmann_eigen_check(p, grassmann_bg_state(p, space)), 1e-12);
    }
  }
}

// 6. Two-mode algebra.
void twomode_criterion(Tally& t) {
  for (double kappa : {-1.0, -0.5, -1.0 / 3.0}) {
    const auto report = verify_two_mode_algebra(build_two_mode_ops(kappa, TwoModeSpace::finite(kappa)), 1e-10);
    for (const auto& item : report.items()) {
      const std::string what = item.name + " kappa=" + std::to_string(kappa);
      if (item.tolerance == kExact) {
        t.exact(what, item.max_deviation);
      } else {
        t.below(what, item.max_deviation, 1e-10);
      }
    }
    t.holds("boundary annihilation reported", report.find("twomode.boundary_annihilation") != nullptr);
  }
  for (double kappa : {0.0, 0.5, 1.0}) {
    for (int jmax = 2; jmax <= 8; ++jmax) {
      const auto report = verify_two_mode_algebra(build_two_mode_ops(kappa, TwoModeSpace::truncated(jmax)), 1e-10);
      for (const auto& item : report.items()) {
        t.below(item.name + " kappa=" + std::to_string(kappa) + " jmax=" + std::to_string(jmax), item.max_deviation,
                item.tolerance == kExact ? kExact : 1e-10);
      }
    }
  }
}

// 7. Same configuration and seed give byte-identical json.
void determinism_criterion(Tally& t) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"all", "--output=json"},
           {"all", "--kappa=-0.2", "--phi=1.4", "--seed=9", "--output=json"},
           {"all", "--kappa=0.5", "--kappa=1.0", "--trunc=12", "--seed=1234", "--output=json"},
           {"phase", "--kappa=0.25", "--trunc=16", "--output=json"},
           {"coherent", "--kappa=-0.1", "--z-re=1.5", "--output=json"}}) {
    const auto config = cli::parse_args(args);
    const std::string first = cli::render_json(config, cli::run(config));
    const std::string second = cli::render_json(config, cli::run(config));
    t.holds("byte-identical json for " + args[0], first == second);
    t.holds("run passes for " + args[0], cli::run(config).exit_code == cli::kExitPass);
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<void(Tally&)> body;
  };
  const std::vector<Criterion> criteria{
      {"1 algebra relations (tol 1e-10, k-fermion conditions exact)", algebra_criterion},
      {"2 unitary phase operator and phase states (1e-12 / 1e-10)", phase_criterion},
      {"3 truncated shift operator and theta closure (exact / 1e-12 / 1e-8)", truncated_phase_criterion},
      {"4 complete MUB sets for d in {2,3,5,7,11} (1e-10 / 1e-12)", mub_criterion},
      {"5 coherent states of type I and II, Grassmann states", coherent_criterion},
      {"6 two-mode algebra relations (1e-10, boundary exact)", twomode_criterion},
      {"7 deterministic json reports", determinism_criterion},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    Tally tally;
    const auto start = std::chrono::steady_clock::now();
    criterion.body(tally);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds < kTimeBudgetSeconds;
    const bool pass = tally.ok() && in_budget;
    if (!pass) ++failed;
    std::printf("[%s] criterion %s: %s, %.2f s%s\n", pass ? "PASS" : "FAIL", criterion.title, tally.summary().c_str(),
                seconds, in_budget ? "" : " (over the 10 s budget)");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
