#pragma once

#include <span>
#include <vector>

#include "whlab/linalg.hpp"

namespace whlab {

/// Element of C[theta]/(theta^dim): a polynomial in one commuting nilpotent
/// variable, coefficient k multiplying theta^k. Products drop every power >= dim.
class GrassmannElement {
 public:
  explicit GrassmannElement(int dim);
  explicit GrassmannElement(std::vector<Complex> coeffs);

  /// The generator theta itself (zero when dim == 1).
  static GrassmannElement theta(int dim);
  static GrassmannElement monomial(int dim, int power, Complex coeff);

  int dim() const { return static_cast<int>(coeffs_.size()); }
  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex operator[](int k) const { return coeffs_.at(k); }
  Complex& operator[](int k) { return coeffs_.at(k); }

  GrassmannElement& operator+=(const GrassmannElement& other);
  GrassmannElement& operator-=(const GrassmannElement& other);
  GrassmannElement& operator*=(const GrassmannElement& other);
  GrassmannElement& operator*=(Complex scalar);

  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(GrassmannElement a, const GrassmannElement& b) { return a *= b; }
  friend GrassmannElement operator*(Complex s, GrassmannElement a) { return a *= s; }
  friend GrassmannElement operator*(GrassmannElement a, Complex s) { return a *= s; }

  GrassmannElement pow(int exponent) const;
  bool is_zero() const;
  /// Max coefficient modulus of (this - other).
  double distance(const GrassmannElement& other) const;

 private:
  void require_same_dim(const GrassmannElement& other) const;

  std::vector<Complex> coeffs_;
};

}  // namespace whlab
