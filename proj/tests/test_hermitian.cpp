#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "random.hpp"

using namespace testing;

namespace {

const Local ctx3 = Local::make(3);

MatE diag_e(std::initializer_list<long> d) {
	MatE m(int(d.size()), int(d.size()));
	int i = 0;
	for (long e : d) m(i, i) = QE(Q(e), 0, Q(ctx3.eps)), ++i;
	return m;
}

MatE embed(const MatE& g) {
	MatE big = MatE::id(g.r + 1);
	for (int i = 0; i < g.r; ++i)
		for (int j = 0; j < g.r; ++j) big(i, j) = g(i, j);
	return big;
}

// a regular Y in End(W) whose Cayley transform exists
MatQ regular_end(int n, Rng& rng, const CayleyParams& k) {
	for (;;) {
		MatQ y = rng.matrix(n + 1, n + 1, 3);
		Triple<Q> t(block(y, 0, 0, n, n), block(y, 0, n, n, 1), block(y, n, 0, 1, n));
		if (stratum(t) != n) continue;
		try {
			cayley_gl(y, k);
		} catch (const domain_error&) {
			continue;
		}
		return y;
	}
}

}  // namespace

TEST_CASE("self-adjointness") {
	HermitianForm phi(diag_e({1, 2, 3}));
	CHECK(is_selfadjoint(MatE::id(3), phi));
	// A diagonal over F commutes with a diagonal form
	CHECK(is_selfadjoint(diag_e({5, 7, 1}), phi));
	MatE skew = diag_e({5, 7, 1});
	skew(0, 1) = QE(Q(1), 0, Q(ctx3.eps));
	CHECK_FALSE(is_selfadjoint(skew, phi));
	CHECK_THROWS(is_selfadjoint(MatE::id(2), phi));
	Rng rng(4);
	for (int i = 0; i < 20; ++i) {
		HermitianForm f = rng.form(1 + i % 3, ctx3);
		CHECK(is_selfadjoint(rng.selfadjoint(f, ctx3), f));
	}
}

TEST_CASE("hermitian invariants") {
	HermitianForm one(diag_e({1}));
	QE beta(Q(2), Q(3), Q(ctx3.eps));
	HermitianPair x{diag_e({5}), MatE::col({beta})};
	auto a = u_invariants(x, one);
	CHECK(a.a == std::vector<Q>{-5});
	CHECK(a.b == std::vector<Q>{beta.norm()});

	HermitianForm phi(diag_e({1, 2}));
	auto z = u_invariants(HermitianPair{diag_e({1, 4}), MatE(2, 1)}, phi);
	CHECK(z.b == std::vector<Q>{0, 0});

	Rng rng(12);
	for (int i = 0; i < 30; ++i) {
		int n = 1 + i % 3;
		HermitianForm f = rng.form(n, ctx3);
		HermitianPair p = rng.pair(f, ctx3);
		auto inv = u_invariants(p, f);
		CHECK(u_invariants(u_act(rng.unitary(f, ctx3), p), f) == inv);
		// b_i = Phi(b, A^{i-1} b) evaluated directly
		MatE v = p.b;
		for (int k = 0; k < n; ++k, v = p.A * v) CHECK(f(p.b, v) == QE(inv.b[k], 0, Q(ctx3.eps)));
	}
}

TEST_CASE("hermitian Jordan decomposition") {
	HermitianForm phi(diag_e({1, 2}));
	HermitianPair xa{diag_e({1, 4}), MatE(2, 1)};
	auto [s0, n0] = u_jordan(xa, phi);
	CHECK(s0.A == xa.A);
	CHECK(n0.A.is_zero());

	Rng rng(31);
	for (int i = 0; i < 40; ++i) {
		int n = 1 + i % 3;
		HermitianForm f = rng.form(n, ctx3);
		HermitianPair p = rng.pair(f, ctx3);
		if (i % 2) p.b = MatE(n, 1);
		auto [s, nil] = u_jordan(p, f);
		CHECK(u_invariants(s, f) == u_invariants(p, f));
		CHECK(u_is_nilpotent(nil, f));
		CHECK(u_is_semisimple(s, f));
		if (u_stratum(p, f) == n) CHECK(s.A == p.A);
		MatE g = rng.unitary(f, ctx3);
		auto [gs, gn] = u_jordan(u_act(g, p), f);
		CHECK(gs.A == u_act(g, s).A);
		CHECK(gs.b == u_act(g, s).b);
	}
}

TEST_CASE("hermitian pairing") {
	Rng rng(2);
	HermitianForm f = rng.form(2, ctx3);
	HermitianPair x = rng.pair(f, ctx3), y = rng.pair(f, ctx3);
	HermitianPair zero{MatE(2, 2), MatE(2, 1)};
	CHECK(u_pairing(zero, x, f) == 0);
	CHECK(u_pairing(x, y, f) == u_pairing(y, x, f));
	MatE g = rng.unitary(f, ctx3);
	CHECK(u_pairing(u_act(g, x), u_act(g, y), f) == u_pairing(x, y, f));
}

TEST_CASE("form extension and local classes") {
	auto e1 = extend_form(HermitianForm(diag_e({1})));
	CHECK(e1.gram == diag_e({1, 1}));
	auto e2 = extend_form(HermitianForm(diag_e({ctx3.eps})));
	CHECK(e2.gram == diag_e({ctx3.eps, 1}));
	CHECK(extend_form(HermitianForm(diag_e({1, 2, 3}))).n() == 4);

	CHECK(classify_form_local(HermitianForm(diag_e({1, 1, 1})), ctx3) == FormClass::phi0);
	CHECK(classify_form_local(HermitianForm(diag_e({3, 1})), ctx3) == FormClass::phi1);
	CHECK(classify_form_local(HermitianForm(diag_e({3, 3})), ctx3) == FormClass::phi0);
	CHECK_THROWS_AS(HermitianForm(diag_e({1, 0})), domain_error);
}

TEST_CASE("orbit inventory") {
	// regular point: a single class, the Krylov model
	Invariants<Q> reg{{Q(-3), Q(2)}, {Q(1), Q(5)}};
	auto one = orbit_inventory(reg, {}, ctx3);
	REQUIRE(one.size() == 1);
	CHECK(u_invariants(one[0].rep, one[0].form) == reg);

	// n = 1, a = 0: the norm class and the other one
	Invariants<Q> zero{{Q(0)}, {Q(0)}};
	auto two = orbit_inventory(zero, {{Poly<Q>::monomial(1), 1, true}}, ctx3);
	REQUIRE(two.size() == 2);
	CHECK(two[0].disc_is_norm != two[1].disc_is_norm);
	for (auto& oc : two) {
		CHECK(oc.rep.A.is_zero());
		CHECK(oc.rep.b.is_zero());
	}

	// t^2 - eps splits over E: one class
	Invariants<Q> sp{{Q(0), Q(-ctx3.eps)}, {Q(0), Q(0)}};
	auto j = orbit_inventory(sp, {{Poly<Q>(std::vector<Q>{Q(-ctx3.eps), 0, 1}), 1, false}}, ctx3);
	CHECK(j.size() == 1);

	// two inert factors on top of a regular part: 4 classes, all with invariant a
	Invariants<Q> mixed;
	{
		// stratum 1 part with moment 1 and eigenvalue 2, then t (t - 1)
		Triple<Q> x = direct_sum<Q>({scalar_triple(2, 1, 1), scalar_triple(0, 0, 0), scalar_triple(1, 0, 0)});
		mixed = invariants(x);
	}
	auto four = orbit_inventory(mixed, {{Poly<Q>::monomial(1), 1, true}, {Poly<Q>(std::vector<Q>{-1, 1}), 1, true}}, ctx3);
	REQUIRE(four.size() == 4);
	std::set<std::vector<int>> labels;
	for (auto& oc : four) {
		labels.insert(oc.local);
		CHECK(u_invariants(oc.rep, oc.form) == mixed);
	}
	CHECK(labels.size() == 4);

	CHECK_THROWS_AS(orbit_inventory(zero, {}, ctx3), domain_error);
	CHECK_THROWS_AS(orbit_inventory(zero, {{Poly<Q>(std::vector<Q>{-1, 1}), 1, true}}, ctx3), domain_error);
}

TEST_CASE("Cayley transforms") {
	CayleyParams k = CayleyParams::standard(ctx3);
	CHECK(k.tau.conj() == -k.tau);
	CHECK((k.xi * k.xi.conj()) == QE(1));

	MatE r0 = cayley_gl(MatQ(3, 3), k);
	CHECK(r0 == (-k.xi) * MatE::id(3));
	CHECK(in_X(r0));

	MatQ pole = mat({{0, ctx3.eps}, {1, 0}});
	CHECK_THROWS_WITH_AS(cayley_gl(pole, k), "κ pole", domain_error);

	Rng rng(55);
	for (int i = 0; i < 30; ++i) {
		int n = 1 + i % 3;
		MatQ y = regular_end(n, rng, k);
		MatE r = cayley_gl(y, k);
		CHECK(in_X(r));
		CHECK(cayley_inverse(r, k) == lift(y, ctx3));
		CHECK(!is_zero((det(r - k.xi * MatE::id(n + 1))).norm()));
		MatQ h = MatQ::id(n + 1), g = rng.invertible(n);
		for (int a = 0; a < n; ++a)
			for (int b = 0; b < n; ++b) h(a, b) = g(a, b);
		MatE he = lift(h, ctx3);
		CHECK(cayley_gl(h * y * inverse(h), k) == he * r * inverse(he));

		MatchedEnd me = matched_end(y);
		HermitianForm phit = extend_form(me.phi);
		MatE ru = cayley_u(me.y, phit, k);
		CHECK(is_unitary(ru, phit));
		CHECK(cayley_inverse(ru, k) == me.y);
		CHECK(match_invariants_group(r, ru, phit));

		// perturbing one moment breaks the match
		MatE bent = ru;
		bent(n, n) = bent(n, n) + QE(1);
		CHECK_FALSE(match_invariants_group(r, bent, phit));
	}
	HermitianForm phit = extend_form(HermitianForm(diag_e({1, 2})));
	MatE c = (-k.xi) * MatE::id(3);
	CHECK(match_invariants_group(c, c, phit));
}

TEST_CASE("Omega and the Cayley factor ratio") {
	CayleyParams k = CayleyParams::standard(ctx3);
	Rng rng(66);
	for (int i = 0; i < 20; ++i) {
		int n = 1 + i % 3;
		MatQ y = regular_end(n, rng, k);
		MatE x = cayley_gl(y, k);
		int w = omega_factor(x, ctx3);
		CHECK((w == 1 || w == -1));
		MatE g = lift(rng.invertible(n, 4), ctx3), big = embed(g);
		CHECK(omega_factor(big * x * inverse(big), ctx3) == eta(to_base(det(g)), ctx3) * w);
	}
	for (int n = 1; n <= 2; ++n) {
		std::vector<MatQ> ys;
		for (int i = 0; i < 50; ++i) ys.push_back(regular_end(n, rng, k));
		FactorCompat fc = factor_compat_check(ys, k, ctx3);
		CHECK(fc.samples == 50);
		CHECK(fc.ok);
		CHECK((fc.constant == 1 || fc.constant == -1));
		// conjugating every sample by G leaves the ratio unchanged
		for (auto& y : ys) {
			MatQ h = MatQ::id(n + 1), g = rng.invertible(n);
			for (int a = 0; a < n; ++a)
				for (int b = 0; b < n; ++b) h(a, b) = g(a, b);
			CHECK(cayley_factor_ratio(h * y * inverse(h), k, ctx3) == fc.constant);
		}
	}
}
