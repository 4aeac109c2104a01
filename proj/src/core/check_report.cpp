#include "homtwist/check_report.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace homtwist {

void CheckReport::add_failure(Failure f) {
  ++total_;
  if (failures_.size() < cap_) failures_.push_back(std::move(f));
}

void CheckReport::merge(const CheckReport& other) { merge_prefixed(other, ""); }

void CheckReport::merge_prefixed(const CheckReport& other, const std::string& prefix) {
  for (const Failure& f : other.failures_) {
    if (failures_.size() >= cap_) break;
    Failure copy = f;
    copy.equation = prefix + copy.equation;
    failures_.push_back(std::move(copy));
  }
  total_ += other.total_;
}

std::string format_coeffs(const std::vector<Rational>& coeffs) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    os << (first ? "" : ", ") << i << ": " << coeffs[i];
    first = false;
  }
  os << "}";
  return os.str();
}

namespace {

std::string format_failure(const Failure& f) {
  std::ostringstream os;
  os << f.equation << " at (";
  for (std::size_t i = 0; i < f.tuple.size(); ++i) os << (i ? "," : "") << f.tuple[i];
  if (!f.detail.empty())
    os << "): " << f.detail;
  else
    os << "): lhs " << format_coeffs(f.lhs) << " rhs " << format_coeffs(f.rhs);
  return os.str();
}

}  // namespace

std::string CheckReport::summary() const {
  if (passed()) return "passed";
  return "failed (" + std::to_string(total_) + "): " + format_failure(failures_.front());
}

std::string CheckReport::format() const {
  if (passed()) return "passed\n";
  std::ostringstream os;
  os << "failed, " << total_ << " failing tuple(s)";
  if (total_ > failures_.size()) os << ", first " << failures_.size() << " shown";
  os << "\n";
  for (const Failure& f : failures_) os << "  " << format_failure(f) << "\n";
  return os.str();
}

std::size_t thread_count() {
  std::size_t n = 0;
  if (const char* env = std::getenv("HOMTWIST_THREADS")) n = std::strtoul(env, nullptr, 10);
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

namespace {

// Scans tuples whose first coordinate lies in [lo, hi).
void scan_range(CheckReport& report, const std::string& id, const std::vector<std::size_t>& ranges, const Equation& eq,
                std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> tuple(ranges.size(), 0);
  tuple[0] = lo;
  while (tuple[0] < hi) {
    Sides s = eq(tuple);
    if (!(s.first == s.second)) report.add_failure({id, tuple, s.first.dense(), s.second.dense(), {}});
    std::size_t i = ranges.size();
    while (i-- > 0) {
      if (++tuple[i] < ranges[i] || i == 0) break;
      tuple[i] = 0;
    }
  }
}

}  // namespace

void scan(CheckReport& report, const std::string& id, const std::vector<std::size_t>& ranges, const Equation& eq) {
  if (ranges.empty()) {
    CheckReport local(report.cap());
    Sides s = eq({});
    if (!(s.first == s.second)) local.add_failure({id, {}, s.first.dense(), s.second.dense(), {}});
    report.merge(local);
    return;
  }
  for (std::size_t r : ranges)
    if (r == 0) return;

  const std::size_t workers = std::min(thread_count(), ranges[0]);
  if (workers <= 1) {
    CheckReport local(report.cap());
    scan_range(local, id, ranges, eq, 0, ranges[0]);
    report.merge(local);
    return;
  }
  // Contiguous chunks of the first coordinate keep the merged failure list in
  // lexicographic order.
  std::vector<CheckReport> parts(workers, CheckReport(report.cap()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = ranges[0] * w / workers, hi = ranges[0] * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] { scan_range(parts[w], id, ranges, eq, lo, hi); });
    }
  }
  for (const CheckReport& p : parts) report.merge(p);
}

}  // namespace homtwist
