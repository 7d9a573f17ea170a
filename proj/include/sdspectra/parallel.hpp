#pragma once

#include <cstddef>
#include <functional>

namespace sdspectra {

// Worker count: hardware concurrency, capped by SD_SPECTRA_THREADS when set.
unsigned worker_count();

// Runs body(i) for i in [0, count). Work is handed out by index, so results
// written to slot i are independent of scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace sdspectra
