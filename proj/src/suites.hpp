#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "report.hpp"

namespace jrlab::suites {

// Sizes for the acceptance criteria; zero means the criterion's default.
struct Budget {
	long instances = 0;	// criteria 1-4, 7 and 10
	long grid = 0;	// generic points per configuration, criteria 5 and 6
	int valuation = 0;	// criteria 8 and 9
};

struct SuiteResult {
	int criterion = 0;
	std::string name;
	std::vector<CheckReport> reports;
	double seconds = 0;
	double limit = 0;
	long failures = 0;
	long points = 0;
	bool pass() const { return failures == 0 && seconds < limit; }
};

SuiteResult multiplicativity(long instances, std::uint64_t seed);
SuiteResult jordan(long instances, std::uint64_t seed);
SuiteResult slice(long instances, std::uint64_t seed);
SuiteResult cayley(long instances, std::uint64_t seed);
SuiteResult cone_identities(long points, std::uint64_t seed);
SuiteResult descent(long points, std::uint64_t seed);
SuiteResult chambers(long cases, std::uint64_t seed);
SuiteResult toy(int vmax);
SuiteResult fl1(int N, std::uint64_t seed);
SuiteResult fl2(long samples, int N, std::uint64_t seed);

SuiteResult run_criterion(int k, const Budget& b, std::uint64_t seed);	// k in 1..10

}  // namespace jrlab::suites
