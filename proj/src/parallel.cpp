#include "almg/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace almg {
namespace {

std::atomic<unsigned> g_threads{1};
thread_local bool t_inside_parallel = false;

struct InsideGuard {
  bool saved;
  InsideGuard() : saved(t_inside_parallel) { t_inside_parallel = true; }
  ~InsideGuard() { t_inside_parallel = saved; }
};

}  // namespace

void set_thread_count(unsigned n) { g_threads = std::max(1u, n); }
unsigned thread_count() { return g_threads; }

std::size_t chunk_count(std::size_t count) {
  if (count == 0) return 0;
  if (t_inside_parallel) return 1;
  return std::min<std::size_t>(count, g_threads.load());
}

std::size_t parallel_chunks(
    std::size_t count,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  const std::size_t chunks = chunk_count(count);
  if (chunks == 0) return 0;
  auto bounds = [&](std::size_t c) { return c * count / chunks; };
  if (chunks == 1) {
    InsideGuard guard;
    body(0, 0, count);
    return 1;
  }

  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks - 1);
    for (std::size_t c = 1; c < chunks; ++c) {
      workers.emplace_back([&, c] {
        InsideGuard guard;
        try {
          body(c, bounds(c), bounds(c + 1));
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
    InsideGuard guard;
    try {
      body(0, 0, bounds(1));
    } catch (...) {
      errors[0] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return chunks;
}

}  // namespace almg
