#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <thread>
#include <string>
#include <vector>

#include "polyadic/config.hpp"
#include "polyadic/report.hpp"

namespace polyadic::detail {

// Mixed-radix decode, most significant digit first, so that increasing
// indices enumerate tuples in lexicographic (row-major) order.
inline void decode(std::uint64_t index, std::uint64_t base, std::span<std::uint32_t> out) {
  for (std::size_t k = out.size(); k-- > 0;) {
    out[k] = static_cast<std::uint32_t>(index % base);
    index /= base;
  }
}

inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp,
                                                std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return std::nullopt;
    r *= base;
  }
  return r;
}

// Smallest index in [0, domain) rejected by the checker, or nullopt.
// `make_checker()` is called once per worker and must return a callable
// `bool(std::uint64_t)` answering "does this index violate the law".
// Chunks are handed out in increasing order and a worker abandons a chunk
// once it starts above the best failure seen, so the answer is the global
// minimum whatever the number of workers.
template <class MakeChecker>
std::optional<std::uint64_t> first_failure(std::uint64_t domain, unsigned jobs,
                                           MakeChecker&& make_checker) {
  constexpr std::uint64_t kChunk = 1u << 12;
  if (jobs <= 1 || domain <= kChunk) {
    auto fails = make_checker();
    for (std::uint64_t i = 0; i < domain; ++i)
      if (fails(i)) return i;
    return std::nullopt;
  }
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{domain};
  auto worker = [&] {
    auto fails = make_checker();
    for (;;) {
      const std::uint64_t start = next.fetch_add(kChunk);
      if (start >= domain || start >= best.load()) return;
      const std::uint64_t stop = std::min(domain, start + kChunk);
      for (std::uint64_t i = start; i < stop; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) break;
        if (fails(i)) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<unsigned>(jobs, 64);
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (best.load() == domain) return std::nullopt;
  return best.load();
}

// Exhaustive scan wrapped into a report. `domain` is nullopt when the size
// overflowed while being computed, which always counts as over budget.
// `describe(index)` builds the witness for the first failing index.
template <class MakeChecker, class Describe>
VerificationReport run_scan(std::string law, std::optional<std::uint64_t> domain,
                            const RunConfig& cfg, MakeChecker&& make_checker,
                            Describe&& describe) {
  if (!domain || *domain > cfg.budget)
    return over_budget(std::move(law), domain.value_or(0), cfg.budget);
  VerificationReport r;
  r.law = std::move(law);
  r.domain = *domain;
  const auto bad = first_failure(*domain, cfg.jobs, make_checker);
  if (!bad) {
    r.status = Status::pass;
    r.probes = *domain;
  } else {
    r.status = Status::fail;
    r.probes = *bad + 1;
    r.witness = describe(*bad);
  }
  return r;
}

}  // namespace polyadic::detail
