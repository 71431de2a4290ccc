#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ternalg/error.hpp"
#include "ternalg/linalg.hpp"

namespace ternalg {

struct Counterexample {
  std::string identity;
  std::vector<std::size_t> indices;  // 0-based basis indices, one per slot
  Vec residual;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct CheckReport {
  bool pass = true;
  std::string kind;
  std::vector<std::string> checked_identities;
  std::vector<Counterexample> counterexamples;
  std::uint64_t tuple_count = 0;
  std::optional<double> seconds;  // filled only when timing is requested

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

struct CheckOptions {
  std::size_t max_counterexamples = 1;
  unsigned jobs = 1;
  bool timing = false;
};

/// A multilinear defect: zero on every argument tuple iff the identity holds.
using Evaluator = std::function<Vec(std::span<const Vec>)>;

struct Condition {
  std::string id;
  std::vector<std::size_t> slot_dims;
  Evaluator eval;
};

/// Evaluates every condition on all basis tuples (lexicographic, last slot
/// fastest). Counterexamples keep the first `max_counterexamples` failures in
/// condition order, then tuple order, whatever the job count.
CheckReport run_conditions(std::string kind, const std::vector<Condition>& conditions,
                           const CheckOptions& options = {});

/// Thrown by builders whose hypothesis check failed; carries the failing report.
class PreconditionError : public Error {
 public:
  PreconditionError(Errc code, const std::string& what, CheckReport report)
      : Error(code, what), report_(std::move(report)) {}

  [[nodiscard]] const CheckReport& report() const noexcept { return report_; }

 private:
  CheckReport report_;
};

/// Throws PreconditionError(code) unless `report` passed.
void require_pass(const CheckReport& report, Errc code, const std::string& what);

}  // namespace ternalg
