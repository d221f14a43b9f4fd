#include <doctest.h>

#include "helpers.hpp"
#include "random.hpp"

using namespace testing;

namespace {

// Faddeev-LeVerrier: coefficients of det(t - A) from traces of powers.
std::vector<Q> leverrier(const MatQ& a) {
	int n = a.r;
	std::vector<Q> c(n + 1);
	c[n] = 1;
	MatQ m = MatQ::id(n), am;
	for (int k = 1; k <= n; ++k) {
		am = a * m;
		c[n - k] = -trace(am) / k;
		m = am + c[n - k] * MatQ::id(n);
	}
	return c;
}

// Laplace expansion along the first row.
Q cofactor_det(const MatQ& m) {
	int n = m.r;
	if (n == 0) return 1;
	Q s = 0;
	for (int j = 0; j < n; ++j) {
		MatQ minor(n - 1, n - 1);
		for (int i = 1; i < n; ++i)
			for (int k = 0, kk = 0; k < n; ++k)
				if (k != j) minor(i - 1, kk++) = m(i, k);
		Q t = m(0, j) * cofactor_det(minor);
		s += j % 2 ? -t : t;
	}
	return s;
}

Q hankel_det(const Triple<Q>& x, int r) {
	MatQ h(r, r);
	for (int i = 0; i < r; ++i)
		for (int j = 0; j < r; ++j) h(i, j) = (x.c * power(x.A, i + j) * x.b)(0, 0);
	return cofactor_det(h);
}

Triple<Q> regular(int n, Rng& rng) {
	for (;;) {
		Triple<Q> x = rng.triple(n);
		if (stratum(x) == n) return x;
	}
}

}  // namespace

TEST_CASE("invariants: worked examples") {
	auto x1 = scalar_triple(3, 5, 7);
	auto a1 = invariants(x1);
	CHECK(a1.a == std::vector<Q>{-3});
	CHECK(a1.b == std::vector<Q>{35});

	auto x2 = triple(mat({{0, 1}, {0, 0}}), col({0, 1}), row({1, 0}));
	auto a2 = invariants(x2);
	CHECK(a2.a == std::vector<Q>{0, 0});
	CHECK(a2.b == std::vector<Q>{0, 1});
	CHECK(d_r(x2, 0) == 1);
	CHECK(d_r(x2, 2) == -1);
	CHECK(d_r(x2, 3) == 0);
	CHECK_THROWS(d_r(x2, -1));
	CHECK(stratum(x2) == 2);

	CHECK(stratum(triple(mat({{1, 2}, {3, 4}}), col({0, 0}), row({0, 0}))) == 0);
	CHECK(stratum(scalar_triple(0, 2, 3)) == 1);
}

TEST_CASE("invariants against independent oracles") {
	Rng rng(101);
	for (int it = 0; it < 60; ++it) {
		int n = 1 + it % 4;
		Triple<Q> x = rng.triple(n);
		auto inv = invariants(x);
		auto lv = leverrier(x.A);
		for (int i = 1; i <= n; ++i) CHECK(inv.a[i - 1] == lv[n - i]);
		for (int i = 1; i <= n; ++i) CHECK(inv.b[i - 1] == (x.c * power(x.A, i - 1) * x.b)(0, 0));
		for (int r = 0; r <= n; ++r) CHECK(d_r(x, r) == hankel_det(x, r));
		int s = 0;
		for (int r = n; r >= 1 && !s; --r)
			if (!is_zero(hankel_det(x, r))) s = r;
		CHECK(stratum(x) == s);
		CHECK(invariants(act(rng.invertible(n), x)) == inv);
	}
}

TEST_CASE("stratum zero means every moment vanishes") {
	Rng rng(3);
	for (int it = 0; it < 40; ++it) {
		int n = 1 + it % 3;
		MatQ A = rng.matrix(n, n);
		// c kills the whole Krylov space of b when b = 0 or c = 0
		Triple<Q> x = it % 2 ? triple(A, MatQ(n, 1), rng.matrix(1, n)) : triple(A, rng.matrix(n, 1), MatQ(1, n));
		CHECK(stratum(x) == 0);
		for (auto& m : moments(x, 2 * n)) CHECK(is_zero(m));
	}
}

TEST_CASE("canonical decomposition at the extreme strata") {
	auto zero = triple(mat({{1, 2}, {0, 3}}), col({0, 0}), row({0, 0}));
	auto d0 = canonical_decomposition(zero);
	CHECK(d0.r == 0);
	CHECK(d0.minus().c == 2);
	auto reg = triple(mat({{0, 1}, {0, 0}}), col({0, 1}), row({1, 0}));
	auto d2 = canonical_decomposition(reg);
	CHECK(d2.r == 2);
	CHECK(d2.plus().c == 2);
	CHECK(d2.minus().c == 0);
}

TEST_CASE("iota for r = 1 matches the explicit formula") {
	Q al = 2, be = 3, ga = 5, de = 7, v = 11, w = 13;
	auto z = iota(scalar_triple(al, be, ga), scalar_triple(de, v, w));
	MatQ expect(2, 2);
	expect(0, 0) = al;
	expect(0, 1) = w / ga;
	expect(1, 0) = v / be;
	expect(1, 1) = de;
	CHECK(z.A == expect);
	CHECK(z.b == col({be, 0}));
	CHECK(z.c == row({ga, 0}));
	CHECK(in_slice(z, 1));
	auto [xp, y] = iota_inverse(z, 1);
	CHECK(xp == scalar_triple(al, be, ga));
	CHECK(y == scalar_triple(de, v, w));
}

TEST_CASE("iota round trips and multiplicativity of d") {
	Rng rng(29);
	for (int it = 0; it < 80; ++it) {
		int r = 1 + it % 3, k = it / 3 % 4;
		Triple<Q> xp = regular(r, rng);
		Triple<Q> y = k ? rng.triple(k) : Triple<Q>::zero(0);
		Triple<Q> z = iota(xp, y);
		CHECK(in_slice(z, r));
		auto [xp2, y2] = iota_inverse(z, r);
		CHECK(xp2 == xp);
		CHECK(y2 == y);
		CHECK(iota(xp2, y2) == z);
		for (int j = 0; j <= k; ++j) CHECK(d_r(z, r + j) == d_r(xp, r) * d_r(y, j));
		auto sp = split(z);
		CHECK(sp.dec.r == stratum(z));
	}
	CHECK_THROWS_AS(iota_inverse(triple(mat({{1, 0}, {0, 1}}), col({1, 1}), row({1, 0})), 1), domain_error);
}

TEST_CASE("Jordan decomposition: worked examples") {
	auto reg = triple(mat({{0, 1}, {0, 0}}), col({0, 1}), row({1, 0}));
	auto [s1, n1] = jordan(reg);
	CHECK(s1 == reg);
	CHECK(n1.A.is_zero());

	auto x = scalar_triple(4, 9, 0);
	auto [s2, n2] = jordan(x);
	CHECK(s2 == scalar_triple(4, 0, 0));
	CHECK(n2 == scalar_triple(0, 9, 0));
	CHECK_FALSE(is_semisimple(x));
	CHECK(is_semisimple(s2));

	CHECK(is_semisimple(triple(mat({{1, 0}, {0, 2}}), col({0, 0}), row({0, 0}))));
	CHECK_FALSE(is_semisimple(triple(mat({{1, 1}, {0, 1}}), col({0, 0}), row({0, 0}))));

	// stratum 0 with a Jordan block: A_s is the diagonal part
	auto blk = triple(mat({{2, 1, 0}, {0, 2, 0}, {0, 0, 5}}), col({0, 0, 0}), row({0, 0, 0}));
	auto [s3, n3] = jordan(blk);
	CHECK(s3.A == mat({{2, 0, 0}, {0, 2, 0}, {0, 0, 5}}));
	CHECK(n3.A == mat({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}));
}

TEST_CASE("Jordan decomposition properties") {
	Rng rng(43);
	for (int it = 0; it < 60; ++it) {
		int n = 1 + it % 4;
		Triple<Q> x = rng.triple(n, 2);
		// force degenerate strata some of the time
		if (it % 3 == 0) x.c = MatQ(1, n);
		if (it % 3 == 1 && n > 1) {
			x.A(n - 1, n - 2) = 0;
			x.b(n - 1, 0) = 0;
			for (int j = 0; j < n - 1; ++j) x.A(n - 1, j) = 0;
		}
		auto [s, nil] = jordan(x);
		CHECK(s + nil == x);
		CHECK(invariants(s) == invariants(x));
		CHECK(is_nilpotent(nil));
		CHECK(is_semisimple(s));
		MatQ g = rng.invertible(n);
		auto [gs, gn] = jordan(act(g, x));
		CHECK(gs == act(g, s));
		CHECK(gn == act(g, nil));
	}
}

TEST_CASE("pairing") {
	auto x = scalar_triple(3, 5, 7);
	CHECK(pairing(x, x) == 9 + 2 * 35);
	CHECK(pairing(Triple<Q>::zero(1), x) == 0);
	CHECK_THROWS(pairing(x, Triple<Q>::zero(2)));
	Rng rng(8);
	for (int it = 0; it < 30; ++it) {
		int n = 1 + it % 3;
		Triple<Q> a = rng.triple(n), b = rng.triple(n);
		MatQ g = rng.invertible(n);
		CHECK(pairing(act(g, a), act(g, b)) == pairing(a, b));
		CHECK(pairing(a, b) == pairing(b, a));
	}
}

TEST_CASE("transfer factor eta~") {
	Local ctx = Local::make(3);
	CHECK(eta_tilde(scalar_triple(1, 2, 1), ctx) == 1);
	CHECK(eta_tilde(scalar_triple(1, 3, 1), ctx) == -1);
	CHECK_THROWS_AS(eta_tilde(scalar_triple(1, 0, 1), ctx), domain_error);
	Rng rng(19);
	for (int it = 0; it < 40; ++it) {
		int n = 1 + it % 3;
		Triple<Q> x = regular(n, rng);
		MatQ g = rng.invertible(n, 4);
		CHECK(eta_tilde(act(inverse(g), x), ctx) == eta(det(g), ctx) * eta_tilde(x, ctx));
	}
}

TEST_CASE("slice ratio is a sign") {
	auto r = slice_ratio({scalar_triple(1, 2, 3), scalar_triple(4, 5, 6)});
	CHECK((r == 1 || r == -1));
	CHECK_THROWS_AS(slice_ratio({scalar_triple(1, 2, 3), scalar_triple(1, 5, 6)}), domain_error);
	auto single = slice_ratio({triple(mat({{0, 1}, {2, 0}}), col({1, 0}), row({1, 1}))});
	CHECK((single == 1 || single == -1));
	Rng rng(77);
	int checked = 0;
	while (checked < 40) {
		std::vector<Triple<Q>> parts;
		for (int i = 0; i < 1 + checked % 3; ++i) parts.push_back(regular(1 + rng.uniform(0, 1), rng));
		Q q;
		try {
			q = slice_ratio(parts);
		} catch (const domain_error&) {
			continue;	// repeated eigenvalue
		}
		CHECK((q == 1 || q == -1));
		++checked;
	}
}
