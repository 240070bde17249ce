#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "ternalg/linalg.hpp"

namespace ternalg {

/// One violated identity instance: the identity id, the basis index tuple it
/// failed at, and both sides' values there.
struct Violation {
  std::string identity;
  std::vector<int> where;
  Vec lhs;
  Vec rhs;
};

struct ReportStats {
  long identities_checked = 0;
  long tuples_enumerated = 0;
  double wall_ms = 0.0;
};

/// Structured verdict of an axiom suite.  A failing suite carries the first
/// violating instance; checkers stop at the first violation.
struct Report {
  std::string suite;
  bool passed = true;
  std::vector<Violation> violations;
  ReportStats stats;
  std::string detail;  // used by verdict-equality reports

  bool pass() const { return passed; }
};

/// Collects a report while enumerating identity suites in a fixed order.
class ReportBuilder {
 public:
  explicit ReportBuilder(std::string suite);

  bool ok() const { return report_.passed; }
  void count_identity() { ++report_.stats.identities_checked; }
  void count_tuples(long n) { report_.stats.tuples_enumerated += n; }
  void fail(const std::string& identity, std::vector<int> where, Vec lhs, Vec rhs);
  void set_detail(std::string d) { report_.detail = std::move(d); }
  Report finish();

 private:
  Report report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace ternalg
