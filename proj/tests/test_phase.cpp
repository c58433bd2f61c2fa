#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "test_support.hpp"
#include "whlab/error.hpp"
#include "whlab/phase.hpp"

using namespace whlab;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::NonFiniteValue;
}

Complex root(int k, int d) { return std::polar(1.0, 2.0 * kPi * k / d); }

}  // namespace

TEST_CASE("F factorial") {
  CHECK(factorial_F(AlgebraParams::make({0.0}), 4) == doctest::Approx(24.0));
  CHECK(factorial_F(AlgebraParams::make({0.7, 0.1}), 0) == 1.0);
  CHECK(factorial_F(AlgebraParams::make({-1.0 / 3.0}), 3) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(kind_of([] { factorial_F(AlgebraParams::make({-1.0 / 3.0}), 4); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("shift phase operator") {
  const auto osc = AlgebraParams::make({0.0});
  Operator lower = Operator::Zero(3, 3);
  lower(0, 1) = lower(1, 2) = 1.0;
  CHECK(max_abs(build_shift_phase_op(osc, FockSpace::truncated(osc, 3)) - lower) == 0.0);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = testing::random_params(rng, false);
    const int s = 2 + trial;
    const auto space = FockSpace::truncated(p, s);
    const Operator e = build_shift_phase_op(p, space);
    Operator left = Operator::Identity(s, s);
    left(0, 0) = 0.0;
    Operator right = Operator::Identity(s, s);
    right(s - 1, s - 1) = 0.0;
    CHECK(max_abs(e.adjoint() * e - left) < 1e-15);
    CHECK(max_abs(e * e.adjoint() - right) < 1e-15);
    const Operator sqrt_h = hamiltonian(p, space).cwiseSqrt();
    CHECK(max_abs(build_ladder_ops(p, space).a_minus - e * sqrt_h) < 1e-12 * (1 + max_abs(sqrt_h)));
  }
  const auto finite = AlgebraParams::make({-0.5});
  CHECK(kind_of([&] { build_shift_phase_op(finite, FockSpace::finite(finite)); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("unitary phase operator") {
  SUBCASE("cyclic permutation at phi = 0") {
    const auto p = AlgebraParams::make({-0.5});
    Operator perm = Operator::Zero(3, 3);
    perm(0, 1) = perm(1, 2) = perm(2, 0) = 1.0;
    CHECK(max_abs(build_unitary_phase_op(p, FockSpace::finite(p)) - perm) == 0.0);
  }
  SUBCASE("unitarity") {
    const auto p = AlgebraParams::make({-1.0 / 3.0}, 1.7);
    const Operator e = build_unitary_phase_op(p, FockSpace::finite(p));
    CHECK(max_abs(e.adjoint() * e - Operator::Identity(4, 4)) < 1e-12);
  }
  SUBCASE("spectrum agrees with a general eigensolver") {
    // Independent route: eigenvalues of E_d from a dense eigensolver must be the d-th roots of unity.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      const auto p = testing::random_params(rng, true, 9);
      const int d = p.finite_dim();
      Eigen::ComplexEigenSolver<Operator> solver(build_unitary_phase_op(p, FockSpace::finite(p)));
      std::vector<bool> hit(d, false);
      for (int k = 0; k < d; ++k) {
        const Complex lambda = solver.eigenvalues()(k);
        int m = static_cast<int>(std::lround(std::arg(lambda) * d / (2.0 * kPi)));
        m = ((m % d) + d) % d;
        CHECK(std::abs(lambda - root(m, d)) < 1e-10);
        hit[m] = true;
      }
      CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
    }
  }
}

TEST_CASE("theta phase states") {
  const auto osc = AlgebraParams::make({0.0});
  const auto s4 = FockSpace::truncated(osc, 4);
  CHECK((theta_phase_state(osc, 0.0, s4).vector - StateVector::Ones(4)).norm() == 0.0);

  const auto s3 = FockSpace::truncated(osc, 3);
  StateVector expected(3);
  expected << 1.0, Complex(0, 1), -1.0;
  CHECK((theta_phase_state(osc, kPi / 2, s3).vector - expected).norm() < 1e-15);

  const auto p = AlgebraParams::make({0.5, 0.2}, 0.9);
  const auto space = FockSpace::truncated(p, 10);
  const Operator e = build_shift_phase_op(p, space);
  for (double theta : {-kPi, -1.0, 0.3, 2.9, kPi}) {
    const StateVector v = theta_phase_state(p, theta, space).vector;
    CHECK((v.cwiseAbs().array() - 1.0).abs().maxCoeff() < 1e-15);
    CHECK((e * v - std::polar(1.0, theta) * v).head(9).norm() < 1e-12);
  }
  CHECK(kind_of([&] { theta_phase_state(p, 3.5, space); }) == ErrorKind::OutsideDomain);
}

TEST_CASE("m phase states") {
  const auto fermion = AlgebraParams::make({-1.0});
  StateVector plus(2);
  plus << 1.0, 1.0;
  plus /= std::sqrt(2.0);
  CHECK((m_phase_state(fermion, 0, FockSpace::finite(fermion)).vector - plus).norm() < 1e-15);
  CHECK(kind_of([&] { m_phase_state(fermion, 2, FockSpace::finite(fermion)); }) == ErrorKind::IndexOutOfRange);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    const auto p = testing::random_params(rng, true, 10);
    const auto space = FockSpace::finite(p);
    const int d = space.size();
    const Operator e = build_unitary_phase_op(p, space);
    Operator states(d, d);
    for (int m = 0; m < d; ++m) {
      states.col(m) = m_phase_state(p, m, space).vector;
      CHECK((e * states.col(m) - root(m, d) * states.col(m)).norm() < 1e-12);
    }
    CHECK(max_abs(states.adjoint() * states - Operator::Identity(d, d)) < 1e-12);
    CHECK((states.cwiseAbs().array() - 1.0 / std::sqrt(d)).abs().maxCoeff() < 1e-12);
    CHECK(closure_m(p, space) < 1e-12);

    // Phase states at different phi are not orthogonal.
    const auto shifted = p.with_phi(p.phi() + 0.8);
    double best = 0.0;
    for (int m = 0; m < d; ++m) {
      best = std::max(best, (states.adjoint() * m_phase_state(shifted, m, space).vector).cwiseAbs().maxCoeff());
    }
    CHECK(best > 1e-6);
  }
}

TEST_CASE("closure_m examples") {
  const auto a = AlgebraParams::make({-1.0}, 0.3);
  CHECK(closure_m(a, FockSpace::finite(a)) < 1e-12);
  const auto b = AlgebraParams::make({-1.0 / 3.0}, 2.1);
  CHECK(closure_m(b, FockSpace::finite(b)) < 1e-12);
  const auto c = AlgebraParams::make({-0.25});
  CHECK(closure_m(c, FockSpace::finite(c)) < 1e-12);
}

TEST_CASE("G operator") {
  const auto fermion = AlgebraParams::make({-1.0});
  Operator swap = Operator::Zero(2, 2);
  swap(0, 1) = swap(1, 0) = 1.0;
  CHECK(max_abs(build_G_op(fermion, FockSpace::finite(fermion)) - swap) == 0.0);

  const auto p = AlgebraParams::make({-1.0 / 3.0});
  const Operator g = build_G_op(p, FockSpace::finite(p));
  CHECK(max_abs(g.adjoint() * g - Operator::Identity(4, 4)) > 0.1);

  // The (d-1)-th power contributes a single corner entry.
  const auto ops = build_ladder_ops(p, FockSpace::finite(p));
  const Operator corner = g - ops.a_minus;
  CHECK(std::abs(corner(3, 0)) > 0.0);
  Operator masked = corner;
  masked(3, 0) = 0.0;
  CHECK(max_abs(masked) == 0.0);

  const auto osc = AlgebraParams::make({0.0});
  CHECK(kind_of([&] { build_G_op(osc, FockSpace::truncated(osc, 4)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("mu phase states") {
  const auto fermion = AlgebraParams::make({-1.0});
  const auto f2 = FockSpace::finite(fermion);
  StateVector plus(2);
  plus << 1.0, 1.0;
  plus /= std::sqrt(2.0);
  CHECK((mu_phase_state(fermion, 0, f2).vector - plus).norm() < 1e-15);
  CHECK(std::abs(mu_phase_state(fermion, 0, f2).vector.dot(mu_phase_state(fermion, 1, f2).vector)) < 1e-15);

  const auto p = AlgebraParams::make({-1.0 / 3.0});
  const auto space = FockSpace::finite(p);
  // <mu=0|mu=1> summed by hand: c0^2 sum_n e^{i pi n/2}/F(n)!, F! = (1, 1, 4/3, 4/3).
  const double c0sq = 1.0 / (1.0 + 1.0 + 0.75 + 0.75);
  const Complex overlap = c0sq * (1.0 + Complex(0, 1) - 0.75 - Complex(0, 0.75));
  CHECK(std::abs(mu_phase_state(p, 0, space).vector.dot(mu_phase_state(p, 1, space).vector) - overlap) < 1e-15);
  CHECK(std::abs(overlap) > 0.05);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 15; ++trial) {
    const auto q = testing::random_params(rng, true, 10);
    const auto s = FockSpace::finite(q);
    const Operator g = build_G_op(q, s);
    for (int mu = 0; mu < s.size(); ++mu) {
      const auto state = mu_phase_state(q, mu, s);
      CHECK(state.vector.norm() == doctest::Approx(1.0).epsilon(1e-14));
      CHECK((g * state.vector - root(mu, s.size()) * state.vector).norm() < 1e-10);
    }
  }
  CHECK(kind_of([&] { mu_phase_state(p, -1, space); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("time evolution shifts phi") {
  const auto p0 = AlgebraParams::make({0.3});
  const auto s = FockSpace::truncated(p0, 7);
  CHECK(max_abs(time_evolution(p0, s, 0.0) - Operator::Identity(7, 7)) == 0.0);

  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> time(-5.0, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = testing::random_params(rng, trial % 2 == 0, 8);
    const auto space = FockSpace::natural(p, 9);
    const double t = time(rng);
    const auto later = p.with_phi(p.phi() + t);
    const Operator u = time_evolution(p, space, t);
    const int m = trial % space.size();
    CHECK((u * m_phase_state(p, m, space).vector - m_phase_state(later, m, space).vector).norm() < 1e-10);
    if (space.is_finite()) {
      CHECK((u * mu_phase_state(p, m, space).vector - mu_phase_state(later, m, space).vector).norm() < 1e-10);
    } else {
      CHECK((u * theta_phase_state(p, 0.4, space).vector - theta_phase_state(later, 0.4, space).vector).norm() < 1e-10);
    }
  }
}

TEST_CASE("theta closure by quadrature") {
  const auto osc = AlgebraParams::make({0.0});
  CHECK(closure_theta(osc, FockSpace::truncated(osc, 4), 32) < 1e-10);
  const auto su11 = AlgebraParams::make({0.5}, 1.2);
  CHECK(closure_theta(su11, FockSpace::truncated(su11, 6), 64) < 1e-10);
  CHECK(kind_of([&] { closure_theta(osc, FockSpace::truncated(osc, 4), 8); }) == ErrorKind::InsufficientGrid);
  CHECK(closure_theta(osc, FockSpace::truncated(osc, 4), 9) < 1e-12);
}
