#include "whlab/report.hpp"

#include <algorithm>
#include <utility>

namespace whlab {

void VerificationReport::add(std::string name, double max_deviation, double tolerance,
                             std::string provenance) {
  const bool pass = max_deviation < tolerance;
  items_.push_back({std::move(name), max_deviation, tolerance, pass, std::move(provenance)});
}

void VerificationReport::observe(std::string name, double value) {
  observations_.push_back({std::move(name), value});
}

void VerificationReport::label(std::string name, std::string value) {
  labels_.push_back({std::move(name), std::move(value)});
}

void VerificationReport::append(const VerificationReport& other) {
  items_.insert(items_.end(), other.items_.begin(), other.items_.end());
  observations_.insert(observations_.end(), other.observations_.begin(),
                       other.observations_.end());
  labels_.insert(labels_.end(), other.labels_.begin(), other.labels_.end());
}

void VerificationReport::sort_by_name() {
  std::stable_sort(items_.begin(), items_.end(),
                   [](const ReportItem& a, const ReportItem& b) { return a.name < b.name; });
  std::stable_sort(observations_.begin(), observations_.end(),
                   [](const Observation& a, const Observation& b) { return a.name < b.name; });
  std::stable_sort(labels_.begin(), labels_.end(),
                   [](const Label& a, const Label& b) { return a.name < b.name; });
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(items_.begin(), items_.end(), [](const ReportItem& i) { return i.pass; }));
}

const ReportItem* VerificationReport::find(const std::string& name) const {
  auto it = std::find_if(items_.begin(), items_.end(),
                         [&](const ReportItem& i) { return i.name == name; });
  return it == items_.end() ? nullptr : &*it;
}

}  // namespace whlab
