#include "jrlab/jrlab.h"

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "suites.hpp"

using jrlab::io::json;

struct jrlab_session {
	long p = 3;
	long n = 0;
	std::uint64_t seed = 20240601;
	long valuation = 0, grid = 0, instances = 0;
	std::string output, error;
	long long points = 0, failures = 0;
};

namespace {

using namespace jrlab;

// Per-command caps.  Past these the lattice counts and grids grow beyond
// what a desk run finishes in reasonable time.
constexpr int kMaxValuationN1 = 12;
constexpr int kMaxValuationN2 = 4;
constexpr long kMaxGrid = 1000000;
constexpr long kMaxInstances = 100000;
constexpr int kMaxToyRange = 64;

long or_default(long v, long d) { return v > 0 ? v : d; }

class Run {
public:
	explicit Run(jrlab_session& s) : s_(s), ctx_(Local::make(s.p)) {}

	void emit(const json& j) {
		out_ << j.dump() << '\n';
	}
	void report(const CheckReport& r) {
		json j = io::to_json(r, s_.seed);
		emit(j);
		s_.points += r.points_tested;
		s_.failures += r.failures;
	}
	void reports(const std::vector<CheckReport>& rs) {
		for (auto& r : rs) report(r);
	}
	// single-element commands count as one point
	void single(const json& j, bool ok = true) {
		emit(j);
		++s_.points;
		if (!ok) ++s_.failures;
	}

	void invariants(const json& in);
	void jordan(const json& in);
	void match(const json& g1, const json& g2);
	void cayley(const json& in);
	void fl();
	void cones(bool descent);
	void chambers();
	void toy();
	void criterion();

	std::string text() const { return out_.str(); }

private:
	jrlab_session& s_;
	Local ctx_;
	std::ostringstream out_;
};

json qe_list(const std::vector<QE>& v) {
	json out = json::array();
	for (auto& e : v) out.push_back(io::to_json(e));
	return out;
}

json group_invariants_json(const GroupInvariants& g) {
	return {{"charpoly", qe_list(g.chi.c)}, {"moments", qe_list(g.moments)}};
}

void Run::invariants(const json& in) {
	json out;
	if (in.contains("gram")) {
		HermitianForm phi = io::form_from(in, ctx_);
		HermitianPair x = io::pair_from(in, ctx_);
		if (phi.n() != x.n()) throw io::parse_error("form and pair sizes differ");
		out = io::to_json(u_invariants(x, phi));
		out["stratum"] = u_stratum(x, phi);
		json d = json::array();
		for (int r = 1; r <= x.n(); ++r) d.push_back(io::to_json(u_d_r(x, phi, r)));
		out["d"] = d;
	} else {
		Triple<Q> x = io::triple_from(in);
		out = io::to_json(jrlab::invariants(x));
		out["stratum"] = stratum(x);
		json d = json::array();
		for (int r = 1; r <= x.n(); ++r) d.push_back(io::to_json(d_r(x, r)));
		out["d"] = d;
	}
	single(out);
}

void Run::jordan(const json& in) {
	if (in.contains("gram")) {
		HermitianForm phi = io::form_from(in, ctx_);
		HermitianPair x = io::pair_from(in, ctx_);
		if (phi.n() != x.n()) throw io::parse_error("form and pair sizes differ");
		auto [xs, xn] = u_jordan(x, phi);
		bool ok = u_invariants(xs, phi) == u_invariants(x, phi) && u_is_nilpotent(xn, phi) && u_is_semisimple(xs, phi);
		single({{"semisimple", io::to_json(xs, phi)}, {"nilpotent", io::to_json(xn, phi)}, {"ok", ok}}, ok);
	} else {
		Triple<Q> x = io::triple_from(in);
		auto [xs, xn] = jrlab::jordan(x);
		bool ok = xs + xn == x && jrlab::invariants(xs) == jrlab::invariants(x) && is_nilpotent(xn) && is_semisimple(xs);
		single({{"semisimple", io::to_json(xs)}, {"nilpotent", io::to_json(xn)}, {"ok", ok}}, ok);
	}
}

// g1 in GL(W) over E, g2 unitary for the form given with it.
void Run::match(const json& j1, const json& j2) {
	Q eps(ctx_.eps);
	if (!j1.contains("g") || !j2.contains("g")) throw io::parse_error("both inputs need a matrix \"g\"");
	MatE g1 = io::mate_from(j1.at("g"), eps), g2 = io::mate_from(j2.at("g"), eps);
	HermitianForm phit = io::form_from(j2, ctx_);
	if (g1.r != g1.c || g2.r != g2.c || g1.r != g2.r || phit.n() != g2.r) throw io::parse_error("matrix sizes disagree");
	bool m = match_invariants_group(g1, g2, phit);
	single({{"matched", m}, {"gl", group_invariants_json(x_invariants(g1))}, {"unitary", group_invariants_json(u_group_invariants(g2, phit))}});
}

void Run::cayley(const json& in) {
	if (!in.contains("Y")) throw io::parse_error("missing field \"Y\"");
	MatQ y = io::matq_from(in.at("Y"));
	if (y.r != y.c || y.r < 2) throw io::parse_error("Y must be square of size at least 2");
	CayleyParams k = CayleyParams::standard(ctx_);
	MatE r = cayley_gl(y, k);
	MatchedEnd me = matched_end(y);
	HermitianForm phit = extend_form(me.phi);
	MatE ru = cayley_u(me.y, phit, k);
	bool m = match_invariants_group(r, ru, phit);
	json out = {{"kappa_gl", io::to_json(r)}, {"kappa_u", io::to_json(ru)}, {"Y_u", io::to_json(me.y)}, {"matched", m}};
	out.update(io::to_json(phit));
	single(out, m);
}

void Run::fl() {
	int n = int(or_default(s_.n, 1));
	int N = int(or_default(s_.valuation, n == 1 ? 6 : 2));
	if (n != 1 && n != 2) throw domain_error("fl covers n = 1 and n = 2");
	if (N > (n == 1 ? kMaxValuationN1 : kMaxValuationN2)) throw budget_error("valuation bound too large for n = " + std::to_string(n));
	long samples = or_default(s_.instances, 20);
	if (samples > kMaxInstances) throw budget_error("too many instances");
	auto res = orbital::fl_check(n, ctx_, N, samples, s_.seed);
	for (auto& c : res.cases)
		if (!c.ok) emit(io::to_json(c, s_.seed));
	report(res.report);
}

void Run::cones(bool descent) {
	int n = int(or_default(s_.n, 2));
	long grid = or_default(s_.grid, descent ? 1000 : 10000);
	if (n < 1) throw std::invalid_argument("n must be positive");
	if (n > 3 || grid > kMaxGrid) throw budget_error("cone suites are limited to n <= 3 and grid <= 1000000");
	if (descent) {
		reports(jrlab::cones::descent_suite(n, 2, grid, s_.seed));
	} else {
		reports(jrlab::cones::structure_suite(n));
		reports(jrlab::cones::identity_suite(n, grid, s_.seed));
	}
}

void Run::chambers() {
	int m = int(or_default(s_.n, 4));
	long cases = or_default(s_.instances, 200);
	if (m < 2) throw std::invalid_argument("chamber suite needs m >= 2");
	if (m > 4 || cases > kMaxInstances) throw budget_error("chamber suite is limited to m <= 4 and 100000 instances");
	reports(jrlab::chambers::chamber_suite(m, cases, s_.seed));
}

void Run::toy() {
	int vmax = int(or_default(s_.valuation, 8));
	if (vmax > kMaxToyRange) throw budget_error("valuation range too large");
	CheckReport r{"toy transfer p=" + std::to_string(ctx_.p) + " vmax=" + std::to_string(vmax)};
	for (auto& c : orbital::toy_transfer_check(ctx_, vmax)) {
		++r.points_tested;
		if (!c.ok) {
			++r.failures;
			emit(io::to_json(c, ctx_.p));
		}
	}
	report(r);
}

void Run::criterion() {
	suites::Budget b{s_.instances, s_.grid, int(s_.valuation)};
	if (b.instances > kMaxInstances || b.grid > kMaxGrid || b.valuation > kMaxValuationN1) throw budget_error("budget too large");
	auto r = suites::run_criterion(int(s_.n), b, s_.seed);
	reports(r.reports);
	emit({{"criterion", r.criterion}, {"name", r.name}, {"seconds", r.seconds}, {"limit", r.limit}, {"pass", r.pass()}, {"seed", s_.seed}});
	if (r.failures == 0 && !r.pass()) ++s_.failures;	// over the time limit
}

jrlab_status fail(jrlab_session* s, jrlab_status st, const std::string& msg) {
	s->error = msg;
	return st;
}

}  // namespace

extern "C" {

jrlab_session* jrlab_open(void) {
	try {
		return new jrlab_session;
	} catch (...) {
		return nullptr;
	}
}

void jrlab_close(jrlab_session* s) { delete s; }

jrlab_status jrlab_set_int(jrlab_session* s, const char* key, long long value) {
	if (!s || !key) return JRLAB_PARSE;
	std::string k(key);
	if (k == "seed") {
		s->seed = std::uint64_t(value);
		return JRLAB_OK;
	}
	if (value < 0) return fail(s, JRLAB_PARSE, k + " must be nonnegative");
	if (k == "p") {
		if (!is_odd_prime(long(value))) return fail(s, JRLAB_PARSE, "p must be an odd prime");
		s->p = long(value);
	} else if (k == "n") {
		s->n = long(value);
	} else if (k == "budget_valuation") {
		s->valuation = long(value);
	} else if (k == "grid") {
		s->grid = long(value);
	} else if (k == "instances") {
		s->instances = long(value);
	} else {
		return fail(s, JRLAB_PARSE, "unknown key " + k);
	}
	return JRLAB_OK;
}

jrlab_status jrlab_run(jrlab_session* s, const char* command, const char* const* inputs, int count) {
	if (!s || !command) return JRLAB_PARSE;
	s->output.clear();
	s->error.clear();
	s->points = s->failures = 0;
	std::string cmd(command);
	static const std::map<std::string, int> arity{{"invariants", 1}, {"jordan", 1}, {"cayley", 1}, {"match", 2}, {"fl", 0},
		{"cones", 0}, {"descent", 0}, {"chambers", 0}, {"toy", 0}, {"criterion", 0}};
	auto it = arity.find(cmd);
	if (it == arity.end()) return fail(s, JRLAB_PARSE, "unknown command " + cmd);
	if (count != it->second || (count > 0 && !inputs)) return fail(s, JRLAB_PARSE, cmd + " takes " + std::to_string(it->second) + " input(s)");
	try {
		std::vector<json> docs;
		for (int i = 0; i < count; ++i) {
			if (!inputs[i]) return fail(s, JRLAB_PARSE, "null input");
			docs.push_back(io::parse(inputs[i]));
		}
		Run run(*s);
		if (cmd == "invariants") run.invariants(docs[0]);
		else if (cmd == "jordan") run.jordan(docs[0]);
		else if (cmd == "cayley") run.cayley(docs[0]);
		else if (cmd == "match") run.match(docs[0], docs[1]);
		else if (cmd == "fl") run.fl();
		else if (cmd == "cones") run.cones(false);
		else if (cmd == "descent") run.cones(true);
		else if (cmd == "chambers") run.chambers();
		else if (cmd == "toy") run.toy();
		else run.criterion();
		s->output = run.text();
		return s->failures ? JRLAB_FAILURES : JRLAB_OK;
	} catch (const io::parse_error& e) {
		return fail(s, JRLAB_PARSE, e.what());
	} catch (const json::exception& e) {
		return fail(s, JRLAB_PARSE, e.what());
	} catch (const jrlab::domain_error& e) {
		return fail(s, JRLAB_DOMAIN, e.what());
	} catch (const jrlab::budget_error& e) {
		return fail(s, JRLAB_BUDGET, e.what());
	} catch (const std::invalid_argument& e) {
		return fail(s, JRLAB_PARSE, e.what());
	} catch (const std::exception& e) {
		return fail(s, JRLAB_INTERNAL, e.what());
	} catch (...) {
		return fail(s, JRLAB_INTERNAL, "unknown error");
	}
}

const char* jrlab_output(const jrlab_session* s) { return s ? s->output.c_str() : ""; }
long long jrlab_points(const jrlab_session* s) { return s ? s->points : 0; }
long long jrlab_failures(const jrlab_session* s) { return s ? s->failures : 0; }
const char* jrlab_last_error(const jrlab_session* s) { return s ? s->error.c_str() : ""; }

const char* jrlab_version(void) { return "0.1.0"; }

}  // extern "C"
