#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace jrlab {

// JRLAB_THREADS workers, defaulting to the hardware count.
inline int worker_count() {
	if (const char* s = std::getenv("JRLAB_THREADS")) {
		int k = std::atoi(s);
		if (k > 0) return k;
	}
	return std::max(1u, std::thread::hardware_concurrency());
}

// Runs f(0..count-1).  Callers write results into per-index slots, which
// keeps aggregation independent of scheduling.
template <class F>
void parallel_for(int count, F&& f) {
	int workers = std::min(worker_count(), count);
	if (workers <= 1) {
		for (int i = 0; i < count; ++i) f(i);
		return;
	}
	std::atomic<int> next{0};
	std::exception_ptr err;
	std::mutex mu;
	std::vector<std::thread> pool;
	for (int w = 0; w < workers; ++w)
		pool.emplace_back([&] {
			for (int i; (i = next++) < count;) {
				try {
					f(i);
				} catch (...) {
					std::lock_guard lock(mu);
					if (!err) err = std::current_exception();
				}
			}
		});
	for (auto& t : pool) t.join();
	if (err) std::rethrow_exception(err);
}

}  // namespace jrlab
