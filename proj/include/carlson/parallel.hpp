#pragma once

namespace carlson {

/// Worker count used by the OpenMP kernels. Defaults to the OpenMP default;
/// 0 or negative restores it.
void set_worker_count(int n);
int worker_count();

}  // namespace carlson
