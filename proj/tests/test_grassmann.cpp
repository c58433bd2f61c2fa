#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "whlab/error.hpp"
#include "whlab/grassmann.hpp"

using namespace whlab;

namespace {

GrassmannElement random_element(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  std::vector<Complex> c(dim);
  for (auto& x : c) x = {g(rng), g(rng)};
  return GrassmannElement(std::move(c));
}

// Full polynomial product, truncated afterwards.
GrassmannElement naive_product(const GrassmannElement& a, const GrassmannElement& b) {
  const int dim = a.dim();
  std::vector<Complex> full(2 * dim - 1);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) full[i + j] += a[i] * b[j];
  }
  full.resize(dim);
  return GrassmannElement(std::move(full));
}

}  // namespace

TEST_CASE("theta is nilpotent of order dim") {
  for (int dim = 1; dim <= 8; ++dim) {
    const auto theta = GrassmannElement::theta(dim);
    for (int k = 0; k < dim; ++k) CHECK_FALSE(theta.pow(k).is_zero());
    CHECK(theta.pow(dim).is_zero());
    CHECK((theta.pow(dim - 1) * theta).is_zero());
  }
}

TEST_CASE("property: ring laws") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 1 + trial % 9;
    const auto a = random_element(rng, dim);
    const auto b = random_element(rng, dim);
    const auto c = random_element(rng, dim);
    CHECK((a * b).distance(b * a) < 1e-12);
    CHECK(((a * b) * c).distance(a * (b * c)) < 1e-12);
    CHECK((a * (b + c)).distance(a * b + a * c) < 1e-12);
    CHECK((a * b).distance(naive_product(a, b)) < 1e-12);
    CHECK(((a - a)).is_zero());
  }
}

TEST_CASE("monomials and mismatched orders") {
  const auto m = GrassmannElement::monomial(4, 2, Complex(0, 3));
  CHECK(m[2] == Complex(0, 3));
  CHECK(GrassmannElement::monomial(4, 5, 1.0).is_zero());
  CHECK_THROWS_AS(GrassmannElement(3) + GrassmannElement(4), Error);
  CHECK_THROWS_AS(GrassmannElement(0), Error);
}
