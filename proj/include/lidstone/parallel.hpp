#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace lidstone {

// out[i] = f(in[i]) on up to hardware_concurrency worker threads. Output
// order is the input order regardless of scheduling; the first exception
// thrown by any task is rethrown on the calling thread.
template <class In, class F>
auto parallel_map(const std::vector<In>& in, F f, unsigned max_threads = 0) {
  using Out = decltype(f(in[0]));
  std::vector<Out> out(in.size());
  unsigned threads = max_threads ? max_threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, in.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = f(in[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < in.size() && !failed; i = next++) {
        try {
          out[i] = f(in[i]);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace lidstone
