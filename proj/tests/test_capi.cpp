#include <doctest.h>

#include <jrlab/jrlab.h>

#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct Session {
	std::unique_ptr<jrlab_session, void (*)(jrlab_session*)> s{jrlab_open(), jrlab_close};
	operator jrlab_session*() const { return s.get(); }
};

jrlab_status run(jrlab_session* s, const char* cmd, std::vector<const char*> in = {}) {
	return jrlab_run(s, cmd, in.empty() ? nullptr : in.data(), int(in.size()));
}

std::vector<json> lines(jrlab_session* s) {
	std::vector<json> out;
	std::istringstream is(jrlab_output(s));
	for (std::string l; std::getline(is, l);)
		if (!l.empty()) out.push_back(json::parse(l));
	return out;
}

}  // namespace

TEST_CASE("version and configuration keys") {
	CHECK(std::string(jrlab_version()) == "0.1.0");
	Session s;
	CHECK(jrlab_set_int(s, "p", 5) == JRLAB_OK);
	CHECK(jrlab_set_int(s, "p", 9) == JRLAB_PARSE);
	CHECK(std::string(jrlab_last_error(s)).find("prime") != std::string::npos);
	CHECK(jrlab_set_int(s, "p", 2) == JRLAB_PARSE);
	CHECK(jrlab_set_int(s, "colour", 1) == JRLAB_PARSE);
	CHECK(jrlab_set_int(s, "grid", -1) == JRLAB_PARSE);
	CHECK(jrlab_set_int(s, "seed", 7) == JRLAB_OK);
	CHECK(jrlab_set_int(nullptr, "p", 3) == JRLAB_PARSE);
	CHECK(run(s, "nonsense") == JRLAB_PARSE);
	CHECK(run(s, "invariants") == JRLAB_PARSE);	// wrong arity
}

TEST_CASE("invariants of the nilpotent triple") {
	Session s;
	REQUIRE(run(s, "invariants", {R"({"A":[[0,1],[0,0]],"b":[0,1],"c":[1,0]})"}) == JRLAB_OK);
	auto out = lines(s);
	REQUIRE(out.size() == 1);
	CHECK(out[0]["a"] == json({"0", "0"}));
	CHECK(out[0]["b"] == json({"0", "1"}));
	CHECK(out[0]["d"] == json({"0", "-1"}));
	CHECK(out[0]["stratum"] == 2);
}

TEST_CASE("error statuses") {
	Session s;
	CHECK(run(s, "invariants", {R"({"A":[[0,1],[0,0]],"b":[0,1])"}) == JRLAB_PARSE);
	CHECK(run(s, "invariants", {R"({"A":[[0,1],[0,0]],"b":[0,1],"c":["1/0",0]})"}) == JRLAB_PARSE);
	CHECK(run(s, "cayley", {R"({"Y":[[0,2],[1,0]]})"}) == JRLAB_DOMAIN);
	CHECK(std::string(jrlab_last_error(s)) == "κ pole");
	jrlab_set_int(s, "budget_valuation", 13);
	CHECK(run(s, "fl") == JRLAB_BUDGET);
	jrlab_set_int(s, "budget_valuation", 0);
	jrlab_set_int(s, "n", 5);
	CHECK(run(s, "chambers") == JRLAB_BUDGET);
	CHECK(run(s, "cones") == JRLAB_BUDGET);
}

TEST_CASE("suites report points and failures") {
	Session s;
	jrlab_set_int(s, "n", 1);
	jrlab_set_int(s, "budget_valuation", 4);
	REQUIRE(run(s, "fl") == JRLAB_OK);
	CHECK(jrlab_points(s) > 0);
	CHECK(jrlab_failures(s) == 0);
	for (auto& l : lines(s)) CHECK(l["seed"] == 20240601);

	jrlab_set_int(s, "n", 3);
	REQUIRE(run(s, "chambers") == JRLAB_OK);
	CHECK(jrlab_failures(s) == 0);

	jrlab_set_int(s, "budget_valuation", 0);
	REQUIRE(run(s, "toy") == JRLAB_OK);
	CHECK(jrlab_points(s) == 3 * 17 + 1);
}

TEST_CASE("cayley output matches back") {
	Session s;
	REQUIRE(run(s, "cayley", {R"({"Y":[[1,2],[3,5]]})"}) == JRLAB_OK);
	auto out = lines(s);
	REQUIRE(out.size() == 1);
	CHECK(out[0]["matched"] == true);
}
