#include "ternalg/report.hpp"

namespace ternalg {

ReportBuilder::ReportBuilder(std::string suite) : start_(std::chrono::steady_clock::now()) {
  report_.suite = std::move(suite);
}

void ReportBuilder::fail(const std::string& identity, std::vector<int> where, Vec lhs, Vec rhs) {
  if (!report_.passed) return;  // keep the first violation only
  report_.passed = false;
  report_.violations.push_back({identity, std::move(where), std::move(lhs), std::move(rhs)});
}

Report ReportBuilder::finish() {
  report_.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
          .count();
  return report_;
}

}  // namespace ternalg
