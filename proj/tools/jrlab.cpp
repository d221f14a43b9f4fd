// Command-line front end over the C interface.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jrlab/jrlab.h"

namespace {

std::string slurp(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw std::runtime_error("cannot read " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"Exact invariant theory, Cayley matching, cone combinatorics and local orbital integrals"};
	app.require_subcommand(1);
	app.fallthrough();

	long long p = 3, n = 0, valuation = 0, grid = 0, instances = 0;
	unsigned long long seed = 20240601;
	std::string out_path;
	bool json_only = false;
	app.add_option("--p", p, "odd prime of the local field")->check(CLI::PositiveNumber);
	app.add_option("--n", n, "dimension (m for chambers, criterion number for criterion)");
	app.add_option("--seed", seed, "seed for every random choice");
	app.add_option("--budget-valuation", valuation, "valuation bound N (fl) or range (toy)");
	app.add_option("--grid", grid, "generic grid points per configuration");
	app.add_option("--instances", instances, "random instances");
	app.add_option("--out", out_path, "also write the JSON lines to FILE");
	app.add_flag("--json-only", json_only, "omit the summary line");

	std::vector<std::string> files;
	std::string command;
	auto file_cmd = [&](const char* name, const char* help, int count) {
		auto* sub = app.add_subcommand(name, help);
		sub->add_option("files", files, "JSON input")->required()->expected(count);
		sub->callback([&command, name] { command = name; });
	};
	file_cmd("invariants", "invariants, stratum and d_r of a triple or hermitian pair", 1);
	file_cmd("jordan", "Jordan decomposition", 1);
	file_cmd("cayley", "Cayley transforms of Y on both sides", 1);
	file_cmd("match", "compare group invariants of g1 (GL) and g2 (unitary)", 2);
	for (auto [name, help] : std::vector<std::pair<const char*, const char*>>{{"fl", "fundamental lemma check"},
		     {"cones", "cone identities"},
		     {"descent", "descent combinatorics"},
		     {"chambers", "chamber suite"},
		     {"toy", "rank-one transfer check"},
		     {"criterion", "one acceptance criterion, number in --n"}}) {
		auto* sub = app.add_subcommand(name, help);
		sub->callback([&command, name = name] { command = name; });
	}

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int rc = app.exit(e);
		return rc == 0 ? 0 : 2;
	}

	std::unique_ptr<jrlab_session, decltype(&jrlab_close)> s(jrlab_open(), jrlab_close);
	if (!s) return 1;

	std::vector<std::string> docs;
	try {
		for (auto& f : files) docs.push_back(slurp(f));
	} catch (const std::exception& e) {
		std::cerr << "jrlab: " << e.what() << '\n';
		return 2;
	}
	std::vector<const char*> ptrs;
	for (auto& d : docs) ptrs.push_back(d.c_str());

	struct Setting {
		const char* key;
		long long value;
	};
	for (auto [key, value] : {Setting{"p", p}, Setting{"n", n}, Setting{"budget_valuation", valuation}, Setting{"grid", grid},
		     Setting{"instances", instances}, Setting{"seed", static_cast<long long>(seed)}}) {
		if (jrlab_set_int(s.get(), key, value) != JRLAB_OK) {
			std::cerr << "jrlab: " << jrlab_last_error(s.get()) << '\n';
			return 2;
		}
	}

	jrlab_status st = jrlab_run(s.get(), command.c_str(), ptrs.data(), int(ptrs.size()));
	if (st != JRLAB_OK && st != JRLAB_FAILURES) {
		std::cerr << "jrlab: " << jrlab_last_error(s.get()) << '\n';
		return st == JRLAB_INTERNAL ? 1 : int(st);
	}

	const char* text = jrlab_output(s.get());
	std::fputs(text, stdout);
	if (!out_path.empty()) {
		std::ofstream out(out_path);
		out << text;
		if (!out) {
			std::cerr << "jrlab: cannot write " << out_path << '\n';
			return 2;
		}
	}
	long long pts = jrlab_points(s.get()), bad = jrlab_failures(s.get());
	if (!json_only) std::printf("%s %lld/%lld %s seed=%llu\n", bad ? "FAIL" : "PASS", pts - bad, pts, command.c_str(), seed);
	return st == JRLAB_FAILURES ? 1 : 0;
}
