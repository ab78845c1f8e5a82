#pragma once

#include <cstdint>

namespace sfd {

// Default cap on enumeration loops, in lattice/residue points.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Worker count for parallel kernels: SFD_THREADS if set and positive,
// otherwise the OpenMP default. Results never depend on this value.
int default_thread_count();

// requested > 0 picks that many workers, otherwise default_thread_count().
int resolve_threads(int requested);

}  // namespace sfd
