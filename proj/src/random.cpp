#include "random.hpp"

namespace jrlab {

Q Rng::rational(long num, long den) {
	Q q(uniform(-num, num), uniform(1, den));
	q.canonicalize();
	return q;
}

Q Rng::nonzero_rational(long num, long den) {
	for (;;) {
		Q q = rational(num, den);
		if (sgn(q) != 0) return q;
	}
}

Q Rng::padic(long p, int vmin, int vmax) {
	long u;
	do u = uniform(1, 2 * p - 1);
	while (u % p == 0);
	if (coin()) u = -u;
	return Q(u) * pow_p(p, int(uniform(vmin, vmax)));
}

QE Rng::quad(const Local& ctx, long num, long den) { return QE(rational(num, den), rational(num, den), Q(ctx.eps)); }

MatQ Rng::matrix(int r, int c, long num) {
	MatQ m(r, c);
	for (auto& e : m.v) e = rational(num, 2);
	return m;
}

MatQ Rng::invertible(int n, long num) {
	for (;;) {
		MatQ m = matrix(n, n, num);
		if (!is_zero(det(m))) return m;
	}
}

Triple<Q> Rng::triple(int n, long num) { return Triple<Q>(matrix(n, n, num), matrix(n, 1, num), matrix(1, n, num)); }

MatE Rng::matrix_e(int r, int c, const Local& ctx) {
	MatE m(r, c);
	for (auto& e : m.v) e = quad(ctx, 3, 2);
	return m;
}

MatE Rng::invertible_e(int n, const Local& ctx) {
	for (;;) {
		MatE m = matrix_e(n, n, ctx);
		if (!is_zero(det(m))) return m;
	}
}

HermitianForm Rng::form(int n, const Local& ctx) {
	MatE d(n, n);
	for (int i = 0; i < n; ++i) d(i, i) = QE(nonzero_rational(5, 2), 0, Q(ctx.eps));
	if (coin()) return HermitianForm(d);
	MatE g = invertible_e(n, ctx);
	return HermitianForm(adjoint(g) * d * g);
}

// Phi^{-1} H with H hermitian is self-adjoint for Phi.
MatE Rng::selfadjoint(const HermitianForm& phi, const Local& ctx) {
	int n = phi.n();
	MatE h(n, n);
	for (int i = 0; i < n; ++i) {
		h(i, i) = QE(rational(4, 2), 0, Q(ctx.eps));
		for (int j = i + 1; j < n; ++j) {
			h(i, j) = quad(ctx, 3, 2);
			h(j, i) = h(i, j).conj();
		}
	}
	return inverse(phi.gram) * h;
}

HermitianPair Rng::pair(const HermitianForm& phi, const Local& ctx) {
	return {selfadjoint(phi, ctx), matrix_e(phi.n(), 1, ctx)};
}

// Cayley transform of a Phi-skew-adjoint S = Phi^{-1} K, K skew-hermitian.
MatE Rng::unitary(const HermitianForm& phi, const Local& ctx, long num) {
	int n = phi.n();
	for (;;) {
		MatE k(n, n);
		for (int i = 0; i < n; ++i) {
			k(i, i) = QE(Q(0), rational(num, 2), Q(ctx.eps));
			for (int j = i + 1; j < n; ++j) {
				k(i, j) = quad(ctx, num, 2);
				k(j, i) = -k(i, j).conj();
			}
		}
		MatE s = inverse(phi.gram) * k, id = MatE::id(n);
		if (is_zero(det(id - s))) continue;
		MatE u = (id + s) * inverse(id - s);
		if (coin()) u = QE(-1) * u;
		return u;
	}
}

}  // namespace jrlab
