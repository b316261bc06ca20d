#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

namespace lieext {

/// Knobs shared by the brute-force checkers.
struct CheckOptions {
  std::size_t threads = 1;
  std::size_t cap = 64;  // largest total dimension a brute-force check accepts
};

namespace detail {

/// Runs `probe(i)` for i in [0, count) and returns the result with the
/// smallest i that produced a value. Work is split into contiguous chunks;
/// the answer does not depend on `threads`.
template <typename Probe>
auto first_hit(std::size_t count, std::size_t threads, Probe probe) -> decltype(probe(std::size_t{})) {
  using Result = decltype(probe(std::size_t{}));
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (auto r = probe(i)) return r;
    }
    return Result{};
  }

  std::atomic<std::size_t> best{count};
  std::vector<std::optional<std::pair<std::size_t, Result>>> found(threads);
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (count + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        for (std::size_t i = begin; i < end; ++i) {
          if (i >= best.load(std::memory_order_relaxed)) return;
          if (auto r = probe(i)) {
            found[t].emplace(i, std::move(r));
            std::size_t current = best.load();
            while (i < current && !best.compare_exchange_weak(current, i)) {
            }
            return;
          }
        }
      });
    }
  }
  std::optional<std::pair<std::size_t, Result>> winner;
  for (auto& f : found) {
    if (f && (!winner || f->first < winner->first)) winner = std::move(f);
  }
  return winner ? std::move(winner->second) : Result{};
}

}  // namespace detail
}  // namespace lieext
