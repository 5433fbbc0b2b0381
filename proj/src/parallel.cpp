#include "lyk/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lyk {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace detail {

void ravel_to(std::uint64_t flat, std::span<const int> dims, std::span<int> out) {
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = static_cast<int>(flat % static_cast<std::uint64_t>(dims[k]));
    flat /= static_cast<std::uint64_t>(dims[k]);
  }
}

}  // namespace detail

void run_family(const IdentityFamily& family, Exec exec, Report& report) {
  std::uint64_t n = 1;
  for (int d : family.dims) n *= static_cast<std::uint64_t>(d);
  const std::size_t k = family.dims.size();
  if (n == 0) return;
  auto failed = map_indices<char>(n, exec, [&](std::uint64_t i) -> char {
    std::vector<int> t(k);
    detail::ravel_to(i, family.dims, t);
    return family.holds(t) ? 0 : 1;
  });
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!failed[i]) continue;
    std::vector<int> t(k);
    detail::ravel_to(i, family.dims, t);
    report.add(family.id, std::move(t));
  }
}

Report run_families(const std::vector<IdentityFamily>& families, const CheckOptions& opts) {
  Report r(opts.witness_limit);
  for (const auto& f : families) run_family(f, opts.exec, r);
  return r;
}

}  // namespace lyk
