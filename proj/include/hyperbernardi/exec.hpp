#pragma once

namespace hb {

// Kernels that loop over independent work items take one of these. Serial is the
// reference; Parallel uses OpenMP and must produce identical output.
enum class Exec { Serial, Parallel };

// 0 leaves the OpenMP default in place.
void set_jobs(int jobs);
int jobs();

}  // namespace hb
