#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lyk/report.hpp"

namespace lyk {

// Every kernel that sweeps a tuple space or a candidate space takes an Exec.
// Exec::serial is the reference loop; Exec::parallel distributes the same
// per-index body over OpenMP threads and merges results in index order, so
// both produce identical output.
enum class Exec { serial, parallel };

struct CheckOptions {
  Exec exec = Exec::parallel;
  std::size_t witness_limit = kDefaultWitnessLimit;
};

// One identity checked on every tuple of basis indices in dims[0] x dims[1] x ...
struct IdentityFamily {
  std::string id;
  std::vector<int> dims;
  std::function<bool(std::span<const int>)> holds;
};

void run_family(const IdentityFamily& family, Exec exec, Report& report);
Report run_families(const std::vector<IdentityFamily>& families, const CheckOptions& opts);

int max_threads();

namespace detail {

void ravel_to(std::uint64_t flat, std::span<const int> dims, std::span<int> out);

// The exceptions thrown by any iteration are rethrown once the loop is done.
class ExceptionSlot {
 public:
  template <class F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
      std::lock_guard<std::mutex> lock(m_);
      if (!e_) e_ = std::current_exception();
    }
  }
  void rethrow() {
    if (e_) std::rethrow_exception(e_);
  }

 private:
  std::mutex m_;
  std::exception_ptr e_;
};

}  // namespace detail

// out[i] = body(i) for i in [0, n).
template <class T, class F>
std::vector<T> map_indices(std::uint64_t n, Exec exec, F&& body) {
  std::vector<T> out(n);
  if (exec == Exec::serial) {
    for (std::uint64_t i = 0; i < n; ++i) out[i] = body(i);
    return out;
  }
  detail::ExceptionSlot slot;
  const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < nn; ++i) slot.run([&] { out[i] = body(static_cast<std::uint64_t>(i)); });
  slot.rethrow();
  return out;
}

// Smallest i in [0, n) with pred(i), if any.
template <class F>
std::optional<std::uint64_t> find_first(std::uint64_t n, Exec exec, F&& pred) {
  if (exec == Exec::serial) {
    for (std::uint64_t i = 0; i < n; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  std::atomic<std::uint64_t> best{n};
  detail::ExceptionSlot slot;
  const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < nn; ++i) {
    const auto u = static_cast<std::uint64_t>(i);
    if (u >= best.load(std::memory_order_relaxed)) continue;
    slot.run([&] {
      if (pred(u)) {
        std::uint64_t cur = best.load();
        while (u < cur && !best.compare_exchange_weak(cur, u)) {
        }
      }
    });
  }
  slot.rethrow();
  if (best.load() == n) return std::nullopt;
  return best.load();
}

}  // namespace lyk
