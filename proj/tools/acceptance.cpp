// One line per acceptance criterion: number, verdict, size, failures, time.
#include <cstdio>
#include <cstdlib>
#include <exception>

#include "suites.hpp"

int main(int argc, char** argv) {
	std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240601;
	int failed = 0;
	for (int k = 1; k <= 10; ++k) {
		try {
			auto r = jrlab::suites::run_criterion(k, {}, seed);
			std::printf("criterion %2d %s  %-28s points=%ld failures=%ld time=%.2fs limit=%.0fs seed=%llu\n", k, r.pass() ? "PASS" : "FAIL",
				r.name.c_str(), r.points, r.failures, r.seconds, r.limit, static_cast<unsigned long long>(seed));
			if (!r.pass()) {
				++failed;
				for (auto& c : r.reports)
					if (c.failures) std::printf("    %s: %ld/%ld failed\n", c.config.c_str(), c.failures, c.points_tested);
			}
		} catch (const std::exception& e) {
			std::printf("criterion %2d FAIL  error: %s\n", k, e.what());
			++failed;
		}
		std::fflush(stdout);
	}
	std::printf("%s %d/10\n", failed ? "FAIL" : "PASS", 10 - failed);
	return failed ? 1 : 0;
}
