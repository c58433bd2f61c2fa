#include "whlab/linalg.hpp"

#include "whlab/error.hpp"

namespace whlab {

Operator matrix_power(const Operator& m, int power) {
  Operator result = Operator::Identity(m.rows(), m.cols());
  for (int k = 0; k < power; ++k) result = result * m;
  return result;
}

void require_finite(const Operator& m, const char* what) {
  if (!m.allFinite()) throw Error(ErrorKind::NonFiniteValue, what);
}

void require_finite(const StateVector& v, const char* what) {
  if (!v.allFinite()) throw Error(ErrorKind::NonFiniteValue, what);
}

}  // namespace whlab
