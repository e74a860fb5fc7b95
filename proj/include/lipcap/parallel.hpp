#pragma once

#include <cstddef>
#include <functional>

namespace lipcap {

// honors TF_THREADS, falls back to hardware concurrency
int worker_thread_cap();

// runs fn(begin, end) over disjoint chunks of [0, n)
void parallel_for(size_t n, const std::function<void(size_t, size_t)>& fn);

}  // namespace lipcap
