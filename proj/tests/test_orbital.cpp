#include <doctest.h>

#include "helpers.hpp"
#include "orbital.hpp"
#include "random.hpp"

using namespace testing;
using namespace jrlab::orbital;

namespace {

const Local ctx3 = Local::make(3);

bool integral(const Q& x, long p) { return mpz_divisible_ui_p(x.get_den().get_mpz_t(), p) == 0; }
bool integral(const QE& z, long p) { return integral(z.x, p) && integral(z.y, p); }
template <class T>
bool integral(const Mat<T>& m, long p) {
	for (auto& e : m.v)
		if (!integral(e, p)) return false;
	return true;
}

int vq(const Q& x, long p) { return valuation(x, p); }

// n = 1 on the linear side: the lattices are p^k O with -v(c) <= k <= v(b)
Q gl_closed_form(const Q& al, const Q& be, const Q& ga, long p) {
	if (!integral(al, p)) return 0;
	int lo = -vq(ga, p), hi = vq(be, p);
	int s = 0;
	for (int k = lo; k <= hi; ++k) s += (k % 2 == 0) ? 1 : -1;
	return Q((vq(be, p) % 2 == 0) ? s : -s);
}

// n = 1 on the hermitian side: the only self-dual line lattice is p^k O_E
// with 2k + v(phi) = 0.
Q u_closed_form(const Q& al, const QE& be, const Q& phi, long p) {
	if (!integral(al, p)) return 0;
	int v = vq(phi, p);
	if (v % 2) return 0;
	int k = -v / 2;
	return valuation_E(be, p) >= k ? 1 : 0;
}

long ipow(long p, int e) {
	long r = 1;
	while (e-- > 0) r *= p;
	return r;
}

// Brute force in standard coordinates: lattices g O^2 with
// g = [[p^e1, x], [0, p^e2]], e_i in [-B, B], x in p^-B Z mod p^e1.
Q gl_brute_force_2(const Triple<Q>& X, long p, int B) {
	Q sum = 0;
	for (int e1 = -B; e1 <= B; ++e1)
		for (int e2 = -B; e2 <= B; ++e2)
			for (long t = 0; t < ipow(p, e1 + B); ++t) {
				MatQ g(2, 2);
				g(0, 0) = pow_p(p, e1);
				g(0, 1) = Q(t) * pow_p(p, -B);
				g(1, 1) = pow_p(p, e2);
				MatQ gi = inverse(g);
				if (!integral(gi * X.b, p) || !integral(X.c * g, p) || !integral(gi * X.A * g, p)) continue;
				sum += eta(det(g), Local::make(p));
			}
	return sum * eta_tilde(X, Local::make(p));
}

// Same over O_E, keeping the self-dual lattices.
Q u_brute_force_2(const HermitianPair& X, const HermitianForm& phi, const Local& ctx, int B) {
	long p = ctx.p;
	Q eps(ctx.eps);
	Q count = 0;
	for (int e1 = -B; e1 <= B; ++e1)
		for (int e2 = -B; e2 <= B; ++e2) {
			long range = ipow(p, e1 + B);
			for (long s = 0; s < range; ++s)
				for (long t = 0; t < range; ++t) {
					MatE g(2, 2);
					g(0, 0) = QE(pow_p(p, e1), 0, eps);
					g(0, 1) = QE(Q(s) * pow_p(p, -B), Q(t) * pow_p(p, -B), eps);
					g(1, 1) = QE(pow_p(p, e2), 0, eps);
					g(1, 0) = QE(0, 0, eps);
					MatE gram = adjoint(g) * phi.gram * g;
					if (!integral(gram, p) || valuation(to_base(det(gram)), p) != 0) continue;
					MatE gi = inverse(g);
					if (!integral(gi * X.b, p) || !integral(gi * X.A * g, p)) continue;
					count += 1;
				}
		}
	return count;
}

MatQ unimodular(Rng& rng) {
	MatQ up = MatQ::id(2), lo = MatQ::id(2);
	up(0, 1) = rng.uniform(-3, 3);
	lo(1, 0) = rng.uniform(-3, 3);
	return up * lo;
}

}  // namespace

TEST_CASE("n = 1 linear side: worked examples") {
	auto x = scalar_triple(1, 1, 9);	// v(b) = 0, v(c) = 2
	auto lat = admissible_lattices_gl(x, ctx3);
	CHECK(lat.size() == 3);
	std::vector<int> ks;
	for (auto& l : lat) ks.push_back(l.exps[0]);
	std::sort(ks.begin(), ks.end());
	CHECK(ks == std::vector<int>{-2, -1, 0});
	auto r = orbital_gl(x, ctx3);
	CHECK(r.value == 1);
	CHECK(r.lattices == 3);
	CHECK(orbital_gl(scalar_triple(1, 1, 3), ctx3).value == 0);
	auto unit = orbital_gl(scalar_triple(2, 1, 2), ctx3);
	CHECK(unit.lattices == 1);
	CHECK((unit.value == 1 || unit.value == -1));
	CHECK_THROWS(orbital_gl(scalar_triple(1, 0, 1), ctx3));
}

TEST_CASE("n = 1 against the closed forms") {
	for (long p : {3L, 5L}) {
		Local ctx = Local::make(p);
		for (int va : {-1, 0, 2})
			for (int vb = -2; vb <= 3; ++vb)
				for (int vc = -2; vc <= 3; ++vc) {
					Q al = va < 0 ? Q(Q(1) / p) : Q(Q(2) * pow_p(p, va)), be = Q(p - 1) * pow_p(p, vb), ga = pow_p(p, vc);
					if (vb + vc < -2) continue;
					auto x = scalar_triple(al, be, ga);
					CHECK(orbital_gl(x, ctx).value == gl_closed_form(al, be, ga, p));
				}
		for (int vphi = -2; vphi <= 3; ++vphi)
			for (int vb = -2; vb <= 3; ++vb) {
				Q phi = Q(2) * pow_p(p, vphi);
				QE be(pow_p(p, vb), pow_p(p, vb), Q(ctx.eps));
				HermitianForm f(MatE::col({QE(phi, 0, Q(ctx.eps))}));
				HermitianPair x{MatE::col({QE(Q(1), 0, Q(ctx.eps))}), MatE::col({be})};
				auto r = orbital_u(x, f, ctx);
				CHECK(r.value == u_closed_form(1, be, phi, p));
			}
	}
}

TEST_CASE("n = 2 linear side against a brute-force lattice search") {
	Rng rng(123);
	int checked = 0;
	while (checked < 6) {
		Invariants<Q> a{{Q(rng.uniform(-3, 3)), Q(rng.uniform(-3, 3))}, {Q(rng.uniform(1, 4)), Q(3 * rng.uniform(-2, 2))}};
		auto m = continued_moments(a, 3);
		Q d2 = m[0] * m[2] - m[1] * m[1];
		if (is_zero(d2) || valuation(d2, 3) > 2) continue;
		Triple<Q> x = act(unimodular(rng), gl_representative(a));
		auto r = orbital_gl(x, ctx3);
		CHECK(r.value == gl_brute_force_2(x, 3, 3));
		++checked;
	}
}

TEST_CASE("n = 2 hermitian side against a brute-force lattice search") {
	Rng rng(321);
	int checked = 0;
	while (checked < 4) {
		Invariants<Q> a{{Q(rng.uniform(-2, 2)), Q(rng.uniform(-2, 2))}, {Q(rng.uniform(1, 2)), Q(3 * rng.uniform(-1, 1))}};
		auto m = continued_moments(a, 3);
		Q d2 = m[0] * m[2] - m[1] * m[1];
		if (is_zero(d2) || valuation(d2, 3) > 2) continue;
		URepresentative u = u_representative(a, ctx3);
		auto r = orbital_u(u.x, u.phi, ctx3);
		CHECK(r.value == u_brute_force_2(u.x, u.phi, ctx3, 1));
		++checked;
	}
}

TEST_CASE("orbital integrals do not depend on the representative") {
	Rng rng(8);
	for (int it = 0; it < 20; ++it) {
		Invariants<Q> a{{Q(rng.uniform(-3, 3)), Q(rng.uniform(-3, 3))}, {Q(1), Q(3 * rng.uniform(-2, 2))}};
		auto m = continued_moments(a, 3);
		if (is_zero(m[0] * m[2] - m[1] * m[1])) continue;
		Triple<Q> x = gl_representative(a);
		CHECK(invariants(x) == a);
		Q v = orbital_gl(x, ctx3).value;
		MatQ g = rng.invertible(2, 3);
		CHECK(orbital_gl(act(g, x), ctx3).value == v);
		URepresentative u = u_representative(a, ctx3);
		CHECK(u_invariants(u.x, u.phi) == a);
	}
}

TEST_CASE("toy example") {
	for (long p : {3L, 5L, 7L}) {
		Local ctx = Local::make(p);
		CHECK(toy_gl_orbital(Q(0), ctx) == 1);
		CHECK(toy_gl_orbital(pow_p(p, 2), ctx) == 1);
		CHECK(toy_gl_orbital(Q(p), ctx) == 0);
		CHECK(toy_gl_orbital(Q(2), ctx) == 1);
		CHECK(toy_gl_orbital(Q(1) / p, ctx) == 0);
		CHECK(toy_u_orbital(pow_p(p, 2), NormClass::norm, ctx) == 1);
		CHECK(toy_u_orbital(Q(p), NormClass::norm, ctx) == 0);
		CHECK(toy_u_orbital(Q(0), NormClass::norm, ctx) == 1);
		// the other form sees a p times a
		CHECK(toy_u_orbital(Q(p), NormClass::non_norm, ctx) == 1);
		CHECK(toy_u_orbital(Q(1), NormClass::non_norm, ctx) == 0);
		auto cases = toy_transfer_check(ctx, 8);
		CHECK(cases.size() == std::size_t(3 * 17 + 1));
		for (auto& c : cases) CHECK_MESSAGE(c.ok, to_string(c.a));
	}
}

TEST_CASE("fundamental lemma, n = 1") {
	for (long p : {3L, 5L, 7L}) {
		auto res = fl_check(1, Local::make(p), 6, 0, 1);
		CHECK(res.report.failures == 0);
		CHECK(res.report.points_tested == long(9 * (p - 1) * (1 + 6 * (p - 1))));
		for (auto& c : res.cases) {
			int v = valuation(c.a.b[0], p);
			if (v % 2) {
				CHECK(c.gl.value == 0);
				CHECK(c.u.value == 0);
			}
		}
	}
	auto split = fl_check(1, Local::make(5, Kind::split), 4, 0, 2);
	CHECK(split.report.failures == 0);
}

TEST_CASE("fundamental lemma, n = 2 smoke") {
	auto res = fl_check(2, ctx3, 2, 20, 77);
	CHECK(res.report.points_tested == 20);
	CHECK(res.report.failures == 0);
	CHECK_THROWS(fl_check(3, ctx3, 2, 1, 0));
}

TEST_CASE("instability") {
	Rng rng(4);
	std::vector<Invariants<Q>> sample;
	for (int i = 0; i < 10; ++i) sample.push_back({{Q(rng.uniform(-3, 3))}, {Q(rng.uniform(1, 8))}});
	sample.push_back({{Q(0)}, {Q(1)}});
	CHECK(is_instable({}, sample, ctx3));
	Translate unit{Q(1), MatQ::id(1)};
	CHECK_FALSE(is_instable({unit}, sample, ctx3));
	Translate moved{Q(-1), mat({{2}})};	// 2 is a unit at 3
	CHECK(is_instable({unit, moved}, sample, ctx3));
}
