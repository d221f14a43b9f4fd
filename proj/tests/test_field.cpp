#include <doctest.h>

#include "helpers.hpp"
#include "random.hpp"

using namespace testing;

TEST_CASE("valuation of rationals") {
	CHECK(valuation(Q(1), 3) == 0);
	CHECK(valuation(Q(9, 2), 3) == 2);
	CHECK(valuation(Q(1, 27), 3) == -3);
	CHECK_THROWS_AS(valuation(Q(0), 3), domain_error);
	Rng rng(7);
	for (int i = 0; i < 200; ++i) {
		Q x = rng.nonzero_rational(50, 30), y = rng.nonzero_rational(50, 30);
		CHECK(valuation(x * y, 5) == valuation(x, 5) + valuation(y, 5));
	}
}

TEST_CASE("eta is the parity of the valuation at an inert place") {
	Local ctx = Local::make(5);
	CHECK(eta(Q(5), ctx) == -1);
	CHECK(eta(Q(3), ctx) == 1);
	CHECK(eta(Q(25), ctx) == 1);
	CHECK(eta(Q(1, 5), ctx) == -1);
	CHECK(eta(Q(5), Local::make(5, Kind::split)) == 1);
	CHECK_THROWS(eta(Q(0), ctx));
	Rng rng(11);
	for (int i = 0; i < 100; ++i) {
		Q x = rng.nonzero_rational(40, 40), y = rng.nonzero_rational(40, 40);
		CHECK(eta(x * y, ctx) == eta(x, ctx) * eta(y, ctx));
	}
}

TEST_CASE("non-residue choice") {
	CHECK(Local::make(3).eps == 2);
	CHECK(Local::make(5).eps == 2);
	CHECK(Local::make(7).eps == 3);
	CHECK(Local::make(17).eps == 3);
	CHECK_THROWS(Local::make(9));
	CHECK_THROWS(Local::make(2));
}

TEST_CASE("norm and trace") {
	Local ctx = Local::make(3);
	QE s = QE::sqrtd(ctx.eps);
	CHECK(s.norm() == Q(-ctx.eps));
	CHECK(s.trace() == 0);
	QE one = qe(1, 0, ctx);
	CHECK(one.norm() == 1);
	CHECK(one.trace() == 2);
	Split z{Q(2), Q(5)};
	CHECK(z.norm() == 10);
	CHECK(z.trace() == 7);
	CHECK(z.conj().conj().a == 2);
	Rng rng(3);
	for (int i = 0; i < 100; ++i) {
		QE a = rng.quad(ctx), b = rng.quad(ctx);
		CHECK((a * b).norm() == a.norm() * b.norm());
		CHECK(a.conj().conj() == a);
		CHECK((a * b).conj() == a.conj() * b.conj());
	}
}

namespace {

// x is a norm from the unramified extension iff some y = a + b sqrt(eps)
// with integral a, b has N(y) = x modulo p^(v(x)+2).  Searched directly,
// after scaling x into O by an even power of p.
bool norm_by_search(Q x, const Local& ctx) {
	long p = ctx.p;
	int v = valuation(x, p);
	int shift = v < 0 ? ((-v + 1) / 2) * 2 : 0;	// multiply by an even power of p
	x *= pow_p(p, shift);
	v += shift;
	long mod = 1;
	for (int i = 0; i < v + 2; ++i) mod *= p;
	Z num = x.get_num(), den = x.get_den();
	Z inv;
	mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), Z(mod).get_mpz_t());
	Z target = (num * inv) % mod;
	for (long a = 0; a < mod; ++a)
		for (long b = 0; b < mod; ++b) {
			Z n = (Z(a) * a - Z(ctx.eps) * b * b) % mod;
			if (n < 0) n += mod;
			if (n == target) return true;
		}
	return false;
}

}  // namespace

TEST_CASE("is_norm agrees with a residue search") {
	Local ctx = Local::make(3);
	CHECK_FALSE(is_norm(Q(3), ctx));
	CHECK(is_norm(Q(9 * 2), ctx));
	CHECK(is_norm(Q(2), ctx));
	CHECK(is_norm(Q(5, 7), ctx));
	for (long num : {1L, 2L, 3L, 4L, 5L, 6L, 7L, 9L, 12L, 18L, 27L, 45L})
		for (long den : {1L, 2L, 3L, 9L}) {
			Q x = Q(num) / den;
			CHECK_MESSAGE(is_norm(x, ctx) == norm_by_search(x, ctx), to_string(x));
		}
	CHECK(is_norm(Q(3), Local::make(3, Kind::split)));
}

TEST_CASE("is_norm is multiplicative in parity") {
	Local ctx = Local::make(7);
	Rng rng(5);
	for (int i = 0; i < 100; ++i) {
		Q x = rng.padic(7, -3, 3), y = rng.padic(7, -3, 3);
		CHECK(is_norm(x * y, ctx) == (is_norm(x, ctx) == is_norm(y, ctx)));
	}
}

TEST_CASE("scalar strings") {
	CHECK(to_string(Q(-3) / 6) == "-1/2");
	CHECK(to_string(Q(4)) == "4");
	CHECK(parse_q("6/4") == Q(3, 2));
	CHECK(parse_q("-7") == Q(-7));
	CHECK_THROWS(parse_q("1/0"));
	CHECK_THROWS(parse_q("abc"));
}

TEST_CASE("characteristic polynomial, resultant, discriminant") {
	Poly<Q> chi = charpoly(mat({{0, 1}, {0, 0}}));
	CHECK(chi == Poly<Q>::monomial(2));
	Poly<Q> t1(std::vector<Q>{-1, 1}), t2(std::vector<Q>{-2, 1});
	CHECK(resultant(t1, t2) == -1);
	CHECK(discriminant(Poly<Q>(std::vector<Q>{-1, 0, 1})) == 4);
	CHECK_THROWS_AS(resultant(Poly<Q>(), t1), domain_error);

	Rng rng(17);
	for (int i = 0; i < 50; ++i) {
		auto lin = [&] { return Poly<Q>(std::vector<Q>{rng.rational(5, 2), Q(1)}); };
		Poly<Q> p = lin() * lin(), q = lin() * lin() * lin();
		CHECK(resultant(p, q) == resultant(q, p) * Q((p.deg() * q.deg()) % 2 ? -1 : 1));
		Poly<Q> shared = lin();
		CHECK(is_zero(resultant(p * shared, q * shared)));
		// Res of products of linear factors: prod (a_i - b_j)
		Q a1 = -rng.rational(5, 2), a2 = -rng.rational(5, 2), b1 = -rng.rational(5, 2);
		Poly<Q> pa = Poly<Q>(std::vector<Q>{-a1, 1}) * Poly<Q>(std::vector<Q>{-a2, 1});
		Poly<Q> pb(std::vector<Q>{-b1, 1});
		CHECK(resultant(pa, pb) == (a1 - b1) * (a2 - b1));
		CHECK(discriminant(pa) == (a1 - a2) * (a1 - a2));
	}
}
