#include "ternalg/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

namespace ternalg {

namespace {

constexpr std::uint64_t kChunk = 512;

std::uint64_t tuple_total(const std::vector<std::size_t>& dims) {
  std::uint64_t total = 1;
  for (auto d : dims) total *= d;
  return total;
}

// Evaluates tuples [begin, end) of one condition, appending failures in order.
void eval_range(const Condition& c, const std::map<std::size_t, std::vector<Vec>>& bases,
                std::uint64_t begin, std::uint64_t end, std::vector<Counterexample>& out) {
  const std::size_t arity = c.slot_dims.size();
  std::vector<std::size_t> idx(arity);
  std::uint64_t rem = begin;
  for (std::size_t s = arity; s-- > 0;) {
    idx[s] = rem % c.slot_dims[s];
    rem /= c.slot_dims[s];
  }
  std::vector<Vec> args(arity);
  for (std::size_t s = 0; s < arity; ++s) args[s] = bases.at(c.slot_dims[s])[idx[s]];

  for (std::uint64_t t = begin; t < end; ++t) {
    Vec r = c.eval(std::span<const Vec>(args));
    if (!r.is_zero()) out.push_back({c.id, idx, std::move(r)});
    // odometer increment, last slot fastest
    for (std::size_t s = arity; s-- > 0;) {
      if (++idx[s] < c.slot_dims[s]) {
        args[s] = bases.at(c.slot_dims[s])[idx[s]];
        break;
      }
      idx[s] = 0;
      args[s] = bases.at(c.slot_dims[s])[0];
    }
  }
}

}  // namespace

CheckReport run_conditions(std::string kind, const std::vector<Condition>& conditions,
                           const CheckOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t keep = std::max<std::size_t>(1, options.max_counterexamples);
  const unsigned jobs = std::max(1u, options.jobs);

  CheckReport report;
  report.kind = std::move(kind);

  std::map<std::size_t, std::vector<Vec>> bases;
  for (const auto& c : conditions)
    for (auto d : c.slot_dims)
      if (!bases.count(d)) {
        auto& v = bases[d];
        for (std::size_t i = 0; i < d; ++i) v.push_back(Vec::basis(d, i));
      }

  for (const auto& c : conditions) {
    report.checked_identities.push_back(c.id);
    const std::uint64_t total = c.slot_dims.empty() ? 0 : tuple_total(c.slot_dims);
    report.tuple_count += total;
    if (total == 0) continue;

    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    std::vector<std::vector<Counterexample>> found(chunks);
    auto work = [&](std::uint64_t k) {
      eval_range(c, bases, k * kChunk, std::min(total, (k + 1) * kChunk), found[k]);
    };

    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(jobs, chunks));
    if (workers <= 1) {
      for (std::uint64_t k = 0; k < chunks; ++k) work(k);
    } else {
      std::atomic<std::uint64_t> next{0};
      std::vector<std::thread> pool;
      std::exception_ptr failure;
      std::atomic<bool> failed{false};
      std::mutex failure_mu;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          for (std::uint64_t k; !failed && (k = next.fetch_add(1)) < chunks;) {
            try {
              work(k);
            } catch (...) {
              std::lock_guard lock(failure_mu);
              if (!failure) failure = std::current_exception();
              failed = true;
            }
          }
        });
      for (auto& t : pool) t.join();
      if (failure) std::rethrow_exception(failure);
    }

    for (auto& chunk : found)
      for (auto& ce : chunk) {
        if (report.counterexamples.size() >= keep) break;
        report.counterexamples.push_back(std::move(ce));
      }
  }

  report.pass = report.counterexamples.empty();
  if (options.timing)
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void require_pass(const CheckReport& report, Errc code, const std::string& what) {
  if (!report.pass) throw PreconditionError(code, what, report);
}

}  // namespace ternalg
