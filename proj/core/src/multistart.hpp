#pragma once

#include <future>
#include <vector>

namespace majorana::detail {

// Runs task(0..count-1) and returns the results in index order, optionally on
// separate threads. Callers derive any randomness from the index so the
// outcome does not depend on scheduling.
template <typename Task>
auto run_indexed(int count, bool parallel, const Task& task) {
  using Result = decltype(task(0));
  std::vector<Result> results;
  results.reserve(count);
  if (!parallel) {
    for (int i = 0; i < count; ++i) results.push_back(task(i));
    return results;
  }
  std::vector<std::future<Result>> pending;
  pending.reserve(count);
  for (int i = 0; i < count; ++i) pending.push_back(std::async(std::launch::async, task, i));
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

}  // namespace majorana::detail
