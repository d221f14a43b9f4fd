#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace jrlab {

// A configuration whose enumeration would exceed the work budget.
struct budget_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// One verified configuration: how many points were checked, how many
// disagreed, and how many sampled points were thrown away as non-generic.
struct CheckReport {
	std::string config;
	long points_tested = 0;
	long failures = 0;
	long rejected = 0;
};

inline long total_failures(const std::vector<CheckReport>& rs) {
	long f = 0;
	for (auto& r : rs) f += r.failures;
	return f;
}

// Per-configuration seed, so results do not depend on scheduling.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) {
	std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
	z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
	z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
	return z ^ (z >> 31);
}

}  // namespace jrlab
