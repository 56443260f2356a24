#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace wsys {

/// Options shared by all quantifier scans.
struct ScanOptions {
  unsigned jobs = 1;
};

/// Evaluate `probe(i)` for i in [0, count) and return the witness of the
/// smallest i whose probe yields one. With jobs > 1, indices are handed out in
/// increasing order to worker threads; the result always equals the
/// sequential scan's first witness.
template <typename Probe>
auto first_witness(std::size_t count, const ScanOptions& opts, Probe&& probe)
    -> std::optional<std::pair<std::size_t, typename decltype(probe(std::size_t{}))::value_type>> {
  using W = typename decltype(probe(std::size_t{}))::value_type;
  using Result = std::optional<std::pair<std::size_t, W>>;

  if (opts.jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) {
      if (auto w = probe(i)) return Result(std::in_place, i, std::move(*w));
    }
    return std::nullopt;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::mutex mu;
  Result result;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i >= best.load()) return;
      if (auto w = probe(i)) {
        std::lock_guard lock(mu);
        if (i < best.load()) {
          best.store(i);
          result.emplace(i, std::move(*w));
        }
        return;
      }
    }
  };
  const unsigned width = static_cast<unsigned>(std::min<std::size_t>(opts.jobs, count));
  {
    std::vector<std::jthread> pool;
    pool.reserve(width);
    for (unsigned t = 0; t < width; ++t) pool.emplace_back(worker);
  }
  return result;
}

/// Run `body(i)` for every i in [0, count); results land in slot i.
template <typename T, typename Body>
std::vector<T> parallel_map(std::size_t count, const ScanOptions& opts, Body&& body) {
  std::vector<T> out(count);
  if (opts.jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = body(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) out[i] = body(i);
  };
  const unsigned width = static_cast<unsigned>(std::min<std::size_t>(opts.jobs, count));
  {
    std::vector<std::jthread> pool;
    pool.reserve(width);
    for (unsigned t = 0; t < width; ++t) pool.emplace_back(worker);
  }
  return out;
}

}  // namespace wsys
