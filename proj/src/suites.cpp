#include "suites.hpp"

#include <chrono>
#include <functional>

#include "chambers.hpp"
#include "cones.hpp"
#include "orbital.hpp"
#include "parallel.hpp"
#include "random.hpp"

namespace jrlab::suites {

namespace {

using Clock = std::chrono::steady_clock;

// Runs `count` independent instances; check(i, rng) returns true on success.
CheckReport instances(std::string config, long count, std::uint64_t seed, const std::function<bool(long, Rng&)>& check) {
	std::vector<char> ok(count, 0);
	parallel_for(int(count), [&](int i) {
		Rng rng(mix_seed(seed, std::uint64_t(i)));
		ok[i] = check(i, rng);
	});
	CheckReport r{std::move(config)};
	for (char c : ok) {
		++r.points_tested;
		if (!c) ++r.failures;
	}
	return r;
}

SuiteResult finish(int k, std::string name, double limit, std::vector<CheckReport> reports, Clock::time_point t0) {
	SuiteResult s;
	s.criterion = k;
	s.name = std::move(name);
	s.limit = limit;
	s.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
	for (auto& r : reports) {
		s.failures += r.failures;
		s.points += r.points_tested;
	}
	s.reports = std::move(reports);
	return s;
}

Triple<Q> regular_triple(int n, Rng& rng) {
	for (;;) {
		Triple<Q> x = rng.triple(n, 4);
		if (stratum(x) == n) return x;
	}
}

// Stratum-0 triple whose A has repeated eigenvalues and nilpotent parts.
Triple<Q> degenerate_triple(int k, Rng& rng) {
	if (k == 0) return Triple<Q>::zero(0);
	MatQ J(k, k);
	for (int i = 0; i < k; ++i) J(i, i) = rng.uniform(-1, 1);
	for (int i = 0; i + 1 < k; ++i)
		if (J(i, i) == J(i + 1, i + 1) && rng.coin()) J(i, i + 1) = 1;
	MatQ P = rng.invertible(k, 2);
	MatQ A = P * J * inverse(P);
	MatQ v(k, 1), w(1, k);
	switch (rng.uniform(0, 2)) {
	case 1: v = rng.matrix(k, 1, 3); break;
	case 2: w = rng.matrix(1, k, 3); break;
	default: break;
	}
	return Triple<Q>(A, v, w);
}

// g . iota(X+, Y) with X+ regular and Y of stratum 0: every stratum occurs.
Triple<Q> structured_triple(int n, Rng& rng) {
	int r = int(rng.uniform(0, n));
	Triple<Q> y = degenerate_triple(n - r, rng);
	Triple<Q> x = r ? iota(regular_triple(r, rng), y) : y;
	return act(rng.invertible(n, 2), x);
}

struct FormAndPair {
	HermitianForm phi;
	HermitianPair x;
};

// Either a random pair or one built on a hyperbolic plane carrying a
// nilpotent self-adjoint part, then moved by a unimodular change of basis
// (small entries keep the exact arithmetic cheap).
FormAndPair structured_pair(int n, Rng& rng, const Local& ctx) {
	Q eps(ctx.eps);
	auto e = [&](long x, long y = 0) { return QE(Q(x), Q(y), eps); };
	MatE g(n, n), A(n, n), b(n, 1);
	if (n < 2 || rng.coin()) {
		MatE h(n, n);
		for (int i = 0; i < n; ++i) {
			long d = rng.uniform(1, 3) * (rng.coin() ? 1 : -1);
			g(i, i) = e(rng.coin() ? d : d * ctx.p);
			h(i, i) = e(rng.uniform(-2, 2));
			for (int j = i + 1; j < n; ++j) {
				h(i, j) = e(rng.uniform(-2, 2), rng.uniform(-1, 1));
				h(j, i) = h(i, j).conj();
			}
		}
		A = inverse(g) * h;
		if (rng.uniform(0, 2)) b = rng.matrix_e(n, 1, ctx);
	} else {
		Q lam = rng.uniform(-1, 1);
		g(0, 1) = g(1, 0) = e(1);
		A(0, 0) = A(1, 1) = QE(lam, Q(0), eps);
		A(0, 1) = e(rng.uniform(0, 1));
		for (int i = 2; i < n; ++i) {
			g(i, i) = QE(rng.nonzero_rational(3, 2), Q(0), eps);
			A(i, i) = e(rng.uniform(-1, 1));
		}
		switch (rng.uniform(0, 2)) {
		case 0: b(0, 0) = e(1); break;
		case 1: b = rng.matrix_e(n, 1, ctx); break;
		default: break;
		}
	}
	MatE lo = MatE::id(n), up = MatE::id(n);
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j) {
			lo(j, i) = e(rng.uniform(-1, 1), rng.uniform(-1, 1));
			up(i, j) = e(rng.uniform(-1, 1), rng.uniform(-1, 1));
		}
	MatE h = lo * up, hi = inverse(h);
	return {HermitianForm(adjoint(hi) * g * hi), {h * A * hi, h * b}};
}

bool same(const HermitianPair& x, const HermitianPair& y) { return x.A == y.A && x.b == y.b; }

}  // namespace

SuiteResult multiplicativity(long count, std::uint64_t seed) {
	auto t0 = Clock::now();
	auto rep = instances("d_{r+j}(iota(X+, Y)) = d_r(X+) d_j(Y)", count, seed, [](long, Rng& rng) {
		int r = int(rng.uniform(1, 3)), k = int(rng.uniform(0, 3));
		Triple<Q> xp = regular_triple(r, rng);
		Triple<Q> y = k ? (rng.coin() ? rng.triple(k, 4) : degenerate_triple(k, rng)) : Triple<Q>::zero(0);
		Triple<Q> z = iota(xp, y);
		Q dr = d_r(xp, r);
		for (int j = 0; j <= k; ++j)
			if (d_r(z, r + j) != dr * d_r(y, j)) return false;
		if (!in_slice(z, r)) return false;
		auto [xp2, y2] = iota_inverse(z, r);
		return xp2 == xp && y2 == y;
	});
	return finish(1, "d-multiplicativity", 5, {rep}, t0);
}

SuiteResult jordan(long count, std::uint64_t seed) {
	auto t0 = Clock::now();
	auto gl = instances("jordan gl", count, seed, [](long, Rng& rng) {
		int n = int(rng.uniform(1, 4));
		Triple<Q> x = structured_triple(n, rng);
		auto [xs, xn] = jrlab::jordan(x);
		if (!(xs + xn == x) || !(invariants(xs) == invariants(x)) || !is_nilpotent(xn) || !is_semisimple(xs)) return false;
		for (int k = 0; k < 10; ++k) {
			MatQ g = rng.invertible(n, 3), gi = inverse(g);
			if (!(jrlab::jordan(act(g, gi, x)).first == act(g, gi, xs))) return false;
		}
		return true;
	});
	auto u = instances("jordan unitary", count, mix_seed(seed, 1), [](long, Rng& rng) {
		Local ctx = Local::make(3);
		int n = int(rng.uniform(1, 4));
		auto [phi, x] = structured_pair(n, rng, ctx);
		auto [xs, xn] = u_jordan(x, phi);
		if (!same({xs.A + xn.A, xs.b + xn.b}, x)) return false;
		if (!(u_invariants(xs, phi) == u_invariants(x, phi)) || !u_is_nilpotent(xn, phi) || !u_is_semisimple(xs, phi)) return false;
		// g^-1 = Phi^-1 g* Phi for unitary g, one elimination per instance
		MatE phi_inv = inverse(phi.gram);
		for (int k = 0; k < 10; ++k) {
			MatE g = rng.unitary(phi, ctx, 1), gi = phi_inv * adjoint(g) * phi.gram;
			HermitianPair gx{g * x.A * gi, g * x.b}, gxs{g * xs.A * gi, g * xs.b};
			if (!same(u_jordan(gx, phi).first, gxs)) return false;
		}
		return true;
	});
	return finish(2, "Jordan decomposition", 10, {gl, u}, t0);
}

SuiteResult slice(long count, std::uint64_t seed) {
	auto t0 = Clock::now();
	auto rep = instances("slice ratio in {1, -1}", count, seed, [](long, Rng& rng) {
		for (;;) {
			int blocks = int(rng.uniform(1, 3)), left = 4;
			std::vector<Triple<Q>> parts;
			for (int i = 0; i < blocks && left > blocks - i - 1; ++i) {
				int sz = int(rng.uniform(1, left - (blocks - i - 1)));
				parts.push_back(regular_triple(sz, rng));
				left -= sz;
			}
			try {
				Q r = slice_ratio(parts);
				return r == 1 || r == -1;
			} catch (const domain_error&) {
				// repeated eigenvalue: draw again
			}
		}
	});
	return finish(3, "slice/resultant ratio", 5, {rep}, t0);
}

SuiteResult cayley(long count, std::uint64_t seed) {
	auto t0 = Clock::now();
	Local ctx = Local::make(3);
	CayleyParams kp = CayleyParams::standard(ctx);
	Q eps(ctx.eps);
	std::vector<MatQ> samples(count);
	auto rep = instances("cayley both sides", count, seed, [&](long i, Rng& rng) {
		int n = int(1 + i % 3);
		for (;;) {
			MatQ y = rng.matrix(n + 1, n + 1, 3);
			if (rng.coin())
				for (auto& e : y.v) e *= pow_p(ctx.p, int(rng.uniform(-2, 2)));
			Triple<Q> t(block(y, 0, 0, n, n), block(y, 0, n, n, 1), block(y, n, 0, 1, n));
			if (stratum(t) != n) continue;
			MatE r;
			try {
				r = cayley_gl(y, kp);
			} catch (const domain_error&) {
				continue;
			}
			samples[i] = y;
			MatE ye = lift(y, eps);
			if (!in_X(r) || cayley_inverse(r, kp) != ye) return false;
			MatQ h = MatQ::id(n + 1), hg = rng.invertible(n, 3);
			for (int a = 0; a < n; ++a)
				for (int b = 0; b < n; ++b) h(a, b) = hg(a, b);
			MatE he = lift(h, eps);
			if (cayley_gl(h * y * inverse(h), kp) != he * r * inverse(he)) return false;
			MatchedEnd me = matched_end(y);
			HermitianForm phit = extend_form(me.phi);
			MatE ru = cayley_u(me.y, phit, kp);
			if (!is_unitary(ru, phit) || !match_invariants_group(r, ru, phit)) return false;
			if (cayley_inverse(ru, kp) != me.y) return false;
			MatE u = rng.unitary(HermitianForm(lift(to_base(me.phi.gram), eps)), ctx), ut = MatE::id(n + 1);
			for (int a = 0; a < n; ++a)
				for (int b = 0; b < n; ++b) ut(a, b) = u(a, b);
			MatE uti = inverse(ut);
			return cayley_u(ut * me.y * uti, phit, kp) == ut * ru * uti;
		}
	});
	std::vector<CheckReport> reports{rep};
	for (int n = 1; n <= 3; ++n) {
		std::vector<MatQ> ys;
		for (long i = 0; i < count; ++i)
			if (samples[i].r == n + 1) ys.push_back(samples[i]);
		FactorCompat fc = factor_compat_check(ys, kp, ctx);
		CheckReport r{"cayley factor constancy n=" + std::to_string(n) + " constant=" + std::to_string(fc.constant)};
		r.points_tested = fc.samples;
		r.failures = fc.ok ? 0 : 1;
		reports.push_back(r);
	}
	return finish(4, "Cayley transforms", 10, reports, t0);
}

SuiteResult cone_identities(long points, std::uint64_t seed) {
	auto t0 = Clock::now();
	std::vector<CheckReport> reports;
	for (int n = 1; n <= 2; ++n) {
		for (auto& r : cones::structure_suite(n)) reports.push_back(r);
		for (auto& r : cones::identity_suite(n, points, mix_seed(seed, n))) reports.push_back(r);
	}
	return finish(5, "cone identities", 60, reports, t0);
}

SuiteResult descent(long points, std::uint64_t seed) {
	auto t0 = Clock::now();
	std::vector<CheckReport> reports;
	for (int n = 1; n <= 3; ++n)
		for (auto& r : cones::descent_suite(n, 2, points, mix_seed(seed, n))) reports.push_back(r);
	return finish(6, "descent combinatorics", 120, reports, t0);
}

SuiteResult chambers(long cases, std::uint64_t seed) {
	auto t0 = Clock::now();
	return finish(7, "S4 chamber suite", 60, chambers::chamber_suite(4, cases, seed), t0);
}

SuiteResult toy(int vmax) {
	auto t0 = Clock::now();
	std::vector<CheckReport> reports;
	for (long p : {3L, 5L, 7L}) {
		CheckReport r{"toy transfer p=" + std::to_string(p)};
		for (auto& c : orbital::toy_transfer_check(Local::make(p), vmax)) {
			++r.points_tested;
			if (!c.ok) ++r.failures;
		}
		reports.push_back(r);
	}
	return finish(8, "toy transfer", 1, reports, t0);
}

SuiteResult fl1(int N, std::uint64_t seed) {
	auto t0 = Clock::now();
	std::vector<CheckReport> reports;
	for (long p : {3L, 5L, 7L}) reports.push_back(orbital::fl_check(1, Local::make(p), N, 0, mix_seed(seed, p)).report);
	return finish(9, "fundamental lemma n=1", 5, reports, t0);
}

SuiteResult fl2(long samples, int N, std::uint64_t seed) {
	auto t0 = Clock::now();
	return finish(10, "fundamental lemma n=2", 60, {orbital::fl_check(2, Local::make(3), N, samples, seed).report}, t0);
}

SuiteResult run_criterion(int k, const Budget& b, std::uint64_t seed) {
	auto or_ = [](long v, long d) { return v > 0 ? v : d; };
	std::uint64_t s = mix_seed(seed, std::uint64_t(1000 + k));
	switch (k) {
	case 1: return multiplicativity(or_(b.instances, 500), s);
	case 2: return jordan(or_(b.instances, 500), s);
	case 3: return slice(or_(b.instances, 200), s);
	case 4: return cayley(or_(b.instances, 200), s);
	case 5: return cone_identities(or_(b.grid, 10000), s);
	case 6: return descent(or_(b.grid, 1000), s);
	case 7: return chambers(or_(b.instances, 200), s);
	case 8: return toy(int(or_(b.valuation, 8)));
	case 9: return fl1(int(or_(b.valuation, 6)), s);
	case 10: return fl2(or_(b.instances, 20), 2, s);
	default: throw std::invalid_argument("criteria are numbered 1 to 10");
	}
}

}  // namespace jrlab::suites
