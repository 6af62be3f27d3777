#pragma once

#include <cstddef>
#include <functional>

namespace rpmsim {

// Runs body(0..count-1) on the given number of worker threads.  workers <= 1
// runs inline.  Indices are claimed from an atomic counter, so the assignment
// of index to thread is nondeterministic; callers that need determinism must
// make body(i) depend only on i.  The first exception thrown by any body is
// rethrown on the calling thread after all workers join.
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace rpmsim
