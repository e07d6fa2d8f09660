#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace stacky::detail {

// Splits [0, total) into contiguous chunks, one per worker, runs
// work(begin, end) -> Partial on each and folds the results left to right.
// Merge must be associative; the fold order is fixed, so the result does not
// depend on scheduling.
template <class Partial, class Work, class Merge>
Partial parallel_reduce(std::uint64_t total, unsigned threads, Work work, Merge merge) {
  const std::uint64_t workers = std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(total, 1));
  if (workers == 1) return work(std::uint64_t{0}, total);

  std::vector<Partial> partials(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = total / workers * w + std::min(w, total % workers);
      const std::uint64_t end = begin + total / workers + (w < total % workers ? 1 : 0);
      pool.emplace_back([&, w, begin, end] {
        try {
          partials[w] = work(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Partial out = std::move(partials.front());
  for (std::uint64_t w = 1; w < workers; ++w) merge(out, std::move(partials[w]));
  return out;
}

}  // namespace stacky::detail
