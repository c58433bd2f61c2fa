#include "whlab/grassmann.hpp"

#include <algorithm>
#include <string>

#include "whlab/error.hpp"

namespace whlab {

GrassmannElement::GrassmannElement(int dim) {
  if (dim < 1) throw Error(ErrorKind::DimensionMismatch, "nilpotency order must be >= 1");
  coeffs_.assign(dim, Complex{});
}

GrassmannElement::GrassmannElement(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::DimensionMismatch, "nilpotency order must be >= 1");
}

GrassmannElement GrassmannElement::theta(int dim) { return monomial(dim, 1, 1.0); }

GrassmannElement GrassmannElement::monomial(int dim, int power, Complex coeff) {
  GrassmannElement e(dim);
  if (power < 0) throw Error(ErrorKind::IndexOutOfRange, "negative power of theta");
  if (power < dim) e.coeffs_[power] = coeff;
  return e;
}

void GrassmannElement::require_same_dim(const GrassmannElement& other) const {
  if (dim() != other.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "nilpotency orders differ: " + std::to_string(dim()) +
                                                  " vs " + std::to_string(other.dim()));
  }
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& other) {
  require_same_dim(other);
  for (int k = 0; k < dim(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& other) {
  require_same_dim(other);
  for (int k = 0; k < dim(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

GrassmannElement& GrassmannElement::operator*=(const GrassmannElement& other) {
  require_same_dim(other);
  const int n = dim();
  std::vector<Complex> product(n, Complex{});
  for (int i = 0; i < n; ++i) {
    if (coeffs_[i] == Complex{}) continue;
    for (int j = 0; i + j < n; ++j) product[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(product);
  return *this;
}

GrassmannElement& GrassmannElement::operator*=(Complex scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

GrassmannElement GrassmannElement::pow(int exponent) const {
  if (exponent < 0) throw Error(ErrorKind::IndexOutOfRange, "negative exponent");
  GrassmannElement result = monomial(dim(), 0, 1.0);
  for (int k = 0; k < exponent; ++k) result *= *this;
  return result;
}

bool GrassmannElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex{}; });
}

double GrassmannElement::distance(const GrassmannElement& other) const {
  require_same_dim(other);
  double worst = 0.0;
  for (int k = 0; k < dim(); ++k) worst = std::max(worst, std::abs(coeffs_[k] - other.coeffs_[k]));
  return worst;
}

}  // namespace whlab
