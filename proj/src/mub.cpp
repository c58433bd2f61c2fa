#include "whlab/mub.hpp"

#include <cmath>
#include <string>

#include "whlab/error.hpp"

namespace whlab {

namespace {

void require_dim(int d) {
  if (d < 2) throw Error(ErrorKind::IndexOutOfRange, "MUB dimension must be >= 2");
}

void require_index(int d, int a) {
  require_dim(d);
  if (a < 0 || a >= d) {
    throw Error(ErrorKind::IndexOutOfRange,
                "a = " + std::to_string(a) + " outside 0.." + std::to_string(d - 1));
  }
}

// All d+1 bases in report order: canonical first, then a = 0..d-1.
std::vector<Operator> all_bases(int d) {
  std::vector<Operator> bases;
  bases.reserve(d + 1);
  bases.push_back(canonical_basis(d));
  for (int a = 0; a < d; ++a) bases.push_back(quantized_basis(d, a).vectors);
  return bases;
}

}  // namespace

double quantize_phi(int d, int a) {
  require_index(d, a);
  return -kPi * (d - 1) * a / d;
}

QuantizedBasis quantized_basis(int d, int a) {
  require_index(d, a);
  // exp(i pi n(d-n)a/d + 2 pi i nm/d) = exp(i pi k/d) with k = n(d-n)a + 2nm taken mod 2d.
  const long long two_d = 2LL * d;
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  QuantizedBasis basis{a, d, Operator(d, d)};
  for (long long m = 0; m < d; ++m) {
    for (long long n = 0; n < d; ++n) {
      const long long k = (n * (d - n) * a + 2 * n * m) % two_d;
      basis.vectors(n, m) = norm * phase_factor(kPi * static_cast<double>(k) / d);
    }
  }
  return basis;
}

Operator canonical_basis(int d) {
  require_dim(d);
  return Operator::Identity(d, d);
}

double unbiasedness(const Operator& basis_a, const Operator& basis_b) {
  if (basis_a.rows() != basis_b.rows() || basis_a.cols() != basis_b.cols() ||
      basis_a.rows() != basis_a.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "bases must be square and of equal dimension");
  }
  const double target = 1.0 / std::sqrt(static_cast<double>(basis_a.rows()));
  const Operator overlaps = basis_a.adjoint() * basis_b;
  return (overlaps.cwiseAbs().array() - target).abs().maxCoeff();
}

bool is_prime(int d) {
  if (d < 2) return false;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p == 0) return false;
  }
  return true;
}

MubReport complete_mub_set(int d, double tol) {
  require_dim(d);
  const std::vector<Operator> bases = all_bases(d);
  const int count = static_cast<int>(bases.size());

  MubReport report;
  report.d = d;
  report.prime = is_prime(d);
  report.bases = count;
  report.pair_deviations = Eigen::MatrixXd::Zero(count, count);
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      const double dev = unbiasedness(bases[i], bases[j]);
      report.pair_deviations(i, j) = dev;
      report.pair_deviations(j, i) = dev;
      report.max_pair_deviation = std::max(report.max_pair_deviation, dev);
    }
  }
  report.complete = report.prime && report.max_pair_deviation < tol;
  return report;
}

std::vector<OverlapEntry> mub_overlaps(int d) {
  const std::vector<Operator> bases = all_bases(d);
  const int count = static_cast<int>(bases.size());
  std::vector<OverlapEntry> entries;
  entries.reserve(static_cast<std::size_t>(count) * (count - 1) / 2 * d * d);
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      const Operator overlaps = bases[i].adjoint() * bases[j];
      for (int u = 0; u < d; ++u) {
        for (int v = 0; v < d; ++v) entries.push_back({i * d + u, j * d + v, std::abs(overlaps(u, v))});
      }
    }
  }
  return entries;
}

}  // namespace whlab
