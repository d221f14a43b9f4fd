#include <doctest.h>

#include "helpers.hpp"
#include "json_io.hpp"
#include "random.hpp"

using namespace testing;
using jrlab::io::json;
namespace io = jrlab::io;

TEST_CASE("scalars") {
	// integers drop the denominator, both spellings parse
	CHECK(io::to_json(Q(3)) == "3");
	CHECK(io::q_from(json("3/1")) == 3);
	CHECK(io::to_json(Q(-6) / 4) == "-3/2");
	CHECK(io::q_from(json("4/6")) == Q(2) / 3);
	CHECK(io::q_from(json(7)) == 7);
	CHECK(io::q_from(json("-5")) == -5);
	CHECK_THROWS_AS(io::q_from(json("1/0")), io::parse_error);
	CHECK_THROWS_AS(io::q_from(json("x/2")), io::parse_error);
	CHECK_THROWS_AS(io::q_from(json(1.5)), io::parse_error);
	Q eps = 2;
	QE z(Q(1) / 2, Q(-3), eps);
	CHECK(io::qe_from(io::to_json(z), eps) == z);
	CHECK(io::qe_from(json("5/7"), eps) == QE(Q(5) / 7, 0, eps));
}

TEST_CASE("parse errors") {
	CHECK_THROWS_AS(io::parse("{\"A\": [[1, 2]"), io::parse_error);
	CHECK_THROWS_AS(io::parse(""), io::parse_error);
	CHECK_NOTHROW(io::parse("{\"A\": [[1]], \"b\": [1], \"c\": [1]}"));
	// shapes must agree
	CHECK_THROWS(io::triple_from(io::parse("{\"A\": [[1, 2], [3, 4]], \"b\": [1], \"c\": [1, 0]}")));
	CHECK_THROWS(io::matq_from(io::parse("[[1, 2], [3]]")));
}

TEST_CASE("round trips") {
	Rng rng(17);
	Local ctx = Local::make(5);
	for (int it = 0; it < 30; ++it) {
		int n = 1 + it % 3;
		Triple<Q> x = rng.triple(n);
		CHECK(io::triple_from(io::parse(io::to_json(x).dump())) == x);
		auto a = invariants(x);
		CHECK(io::invariants_from(io::to_json(a)) == a);
		HermitianForm f = rng.form(n, ctx);
		HermitianPair p = rng.pair(f, ctx);
		json j = io::to_json(p, f);
		HermitianPair back = io::pair_from(j, ctx);
		CHECK(back.A == p.A);
		CHECK(back.b == p.b);
		CHECK(io::form_from(j, ctx).gram == f.gram);
	}
}

TEST_CASE("flags") {
	for (int n = 1; n <= 3; ++n)
		for (auto& p : cones::enumerate_parabolic_subspaces(n)) CHECK(io::parab_from(n, io::to_json(p)) == p);
	CHECK_THROWS(io::parab_from(2, io::parse("{\"flag\": [[1], [1, 2]], \"i\": 0, \"j\": 1}")));
}

TEST_CASE("reports") {
	CheckReport r;
	r.config = "fl n=1";
	r.points_tested = 10;
	r.failures = 0;
	json j = io::to_json(r, 42);
	CHECK(j["seed"] == 42);
	CHECK(j["points_tested"] == 10);
	CHECK(j["failures"] == 0);
	CHECK(j["config"] == "fl n=1");
}
