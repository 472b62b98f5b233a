#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace inducibility::detail {

// Runs body(shard) for every shard on up to hardware_concurrency threads.
// Shards are assigned round-robin, so results indexed by shard are
// independent of the worker count.
template <typename Body>
void run_shards(int shards, Body body) {
  const int workers = std::max(1, std::min<int>(shards, static_cast<int>(std::thread::hardware_concurrency())));
  if (workers == 1) {
    for (int s = 0; s < shards; ++s) body(s);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int s = w; s < shards; s += workers) body(s);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace inducibility::detail
