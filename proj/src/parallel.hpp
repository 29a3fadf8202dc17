#pragma once

#include <condition_variable>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

namespace flinthills::detail {

// Runs work(chunk) for chunk = 0..n_chunks-1 on up to `threads` workers and
// feeds the results to combine(chunk, result) strictly in chunk order, so the
// outcome is bit-identical whatever the thread count. A bounded reorder
// window keeps memory independent of n_chunks.
template <typename Result, typename Work, typename Combine>
void chunked_ordered(std::uint64_t n_chunks, unsigned threads, Work&& work,
                     Combine&& combine) {
  if (n_chunks == 0) return;
  if (threads <= 1 || n_chunks == 1) {
    for (std::uint64_t c = 0; c < n_chunks; ++c) combine(c, work(c));
    return;
  }

  const std::uint64_t window = std::uint64_t(threads) * 4;
  std::mutex mu;
  std::condition_variable cv;
  std::map<std::uint64_t, Result> ready;
  std::uint64_t next_issue = 0;
  std::uint64_t next_combine = 0;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      std::uint64_t c;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (failure || next_issue >= n_chunks) return;
        c = next_issue++;
      }
      try {
        Result r = work(c);
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return failure || c < next_combine + window; });
        if (failure) return;
        ready.emplace(c, std::move(r));
        cv.notify_all();
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        cv.notify_all();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  unsigned n_workers = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, n_chunks));
  pool.reserve(n_workers);
  for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);

  {
    std::unique_lock<std::mutex> lock(mu);
    while (next_combine < n_chunks) {
      cv.wait(lock, [&] {
        return failure || ready.count(next_combine) != 0;
      });
      if (failure) break;
      Result r = std::move(ready.at(next_combine));
      ready.erase(next_combine);
      lock.unlock();
      combine(next_combine, std::move(r));
      lock.lock();
      ++next_combine;
      cv.notify_all();
    }
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace flinthills::detail
