#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace whlab {

/// Tolerance used for relations that must hold exactly: only a deviation of
/// exactly zero is strictly below it.
inline constexpr double kExact = std::numeric_limits<double>::denorm_min();

struct ReportItem {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string provenance;
};

/// Non-asserted numeric observation (e.g. overlap deviations for composite
/// MUB dimensions). Never affects the pass/fail summary.
struct Observation {
  std::string name;
  double value = 0.0;
};

/// Non-numeric annotation such as a classification label.
struct Label {
  std::string name;
  std::string value;
};

class VerificationReport {
 public:
  /// Records a check; pass is max_deviation < tolerance (NaN never passes).
  void add(std::string name, double max_deviation, double tolerance, std::string provenance);
  /// Records a check that must be exactly zero.
  void add_exact(std::string name, double max_deviation, std::string provenance) {
    add(std::move(name), max_deviation, kExact, std::move(provenance));
  }
  void observe(std::string name, double value);
  void label(std::string name, std::string value);
  void append(const VerificationReport& other);
  void sort_by_name();

  const std::vector<ReportItem>& items() const { return items_; }
  const std::vector<Observation>& observations() const { return observations_; }
  const std::vector<Label>& labels() const { return labels_; }
  std::size_t passed() const;
  std::size_t total() const { return items_.size(); }
  bool all_pass() const { return passed() == total(); }
  const ReportItem* find(const std::string& name) const;

 private:
  std::vector<ReportItem> items_;
  std::vector<Observation> observations_;
  std::vector<Label> labels_;
};

}  // namespace whlab
