#pragma once

namespace groth {

// Worker count for parallel enumerations: the HECKE_WORKERS environment
// variable when set, otherwise the number of logical processors.  A value of
// 1 forces the serial code path.
int worker_count();

int resolve_workers(int requested);  // requested == 0 -> worker_count()

}  // namespace groth
