#pragma once

#include <utility>
#include <vector>

#include "poly.hpp"

namespace jrlab {

// X = (A, b, c): A is n x n, b is n x 1, c is 1 x n.
template <class T>
struct Triple {
	Mat<T> A, b, c;

	Triple() = default;
	Triple(Mat<T> a, Mat<T> bb, Mat<T> cc) : A(std::move(a)), b(std::move(bb)), c(std::move(cc)) { check(); }
	static Triple zero(int n) { return Triple(Mat<T>(n, n), Mat<T>(n, 1), Mat<T>(1, n)); }

	int n() const { return A.r; }
	void check() const {
		if (A.r != A.c || b.r != A.r || b.c != 1 || c.c != A.r || c.r != 1)
			throw std::invalid_argument("triple dimensions disagree");
	}
};

template <class T>
bool operator==(const Triple<T>& x, const Triple<T>& y) { return x.A == y.A && x.b == y.b && x.c == y.c; }

template <class T>
Triple<T> operator+(const Triple<T>& x, const Triple<T>& y) { return {x.A + y.A, x.b + y.b, x.c + y.c}; }
template <class T>
Triple<T> operator-(const Triple<T>& x, const Triple<T>& y) { return {x.A - y.A, x.b - y.b, x.c - y.c}; }

// g.X = (g A g^-1, g b, c g^-1)
template <class T>
Triple<T> act(const Mat<T>& g, const Mat<T>& gi, const Triple<T>& x) {
	return {g * x.A * gi, g * x.b, x.c * gi};
}
template <class T>
Triple<T> act(const Mat<T>& g, const Triple<T>& x) {
	return act(g, inverse(g), x);
}

template <class T>
struct Invariants {
	std::vector<T> a, b;
};

template <class T>
bool operator==(const Invariants<T>& x, const Invariants<T>& y) {
	if (x.a.size() != y.a.size() || x.b.size() != y.b.size()) return false;
	for (std::size_t i = 0; i < x.a.size(); ++i)
		if (x.a[i] != y.a[i] || x.b[i] != y.b[i]) return false;
	return true;
}

// c A^k b for k = 0..count-1
template <class T>
std::vector<T> moments(const Triple<T>& x, int count) {
	std::vector<T> m;
	Mat<T> v = x.b;
	for (int k = 0; k < count; ++k) {
		m.push_back((x.c * v)(0, 0));
		v = x.A * v;
	}
	return m;
}

template <class T>
Invariants<T> invariants(const Triple<T>& x) {
	int n = x.n();
	Poly<T> chi = charpoly(x.A);
	Invariants<T> r;
	for (int i = 1; i <= n; ++i) r.a.push_back(chi[n - i]);
	r.b = moments(x, n);
	return r;
}

// Hankel matrix (c A^{i+j} b)_{0 <= i,j < r}
template <class T>
Mat<T> moment_matrix(const Triple<T>& x, int r) {
	auto m = moments(x, 2 * r);
	Mat<T> h(r, r);
	for (int i = 0; i < r; ++i)
		for (int j = 0; j < r; ++j) h(i, j) = m[i + j];
	return h;
}

template <class T>
T d_r(const Triple<T>& x, int r) {
	if (r < 0) throw std::invalid_argument("negative r");
	if (r == 0) return T(1);
	if (r > x.n()) return T(0);
	return det(moment_matrix(x, r));
}

template <class T>
int stratum(const Triple<T>& x) {
	auto m = moments(x, 2 * x.n());
	for (int r = x.n(); r >= 1; --r) {
		Mat<T> h(r, r);
		for (int i = 0; i < r; ++i)
			for (int j = 0; j < r; ++j) h(i, j) = m[i + j];
		if (!is_zero(det(h))) return r;
	}
	return 0;
}

// columns b, Ab, ..., A^{k-1} b
template <class T>
Mat<T> krylov(const Mat<T>& A, const Mat<T>& b, int k) {
	Mat<T> K(A.r, k);
	Mat<T> v = b;
	for (int j = 0; j < k; ++j) {
		K.set_column(j, v.column(0));
		v = A * v;
	}
	return K;
}

// rows c, cA, ..., c A^{k-1}
template <class T>
Mat<T> cokrylov(const Mat<T>& A, const Mat<T>& c, int k) {
	Mat<T> K(k, A.r);
	Mat<T> w = c;
	for (int i = 0; i < k; ++i) {
		for (int j = 0; j < A.r; ++j) K(i, j) = w(0, j);
		w = w * A;
	}
	return K;
}

// basis: columns are a basis of V+ followed by a basis of V-.
template <class T>
struct Decomposition {
	int r = 0;
	Mat<T> basis;
	Mat<T> plus() const { return block(basis, 0, 0, basis.r, r); }
	Mat<T> minus() const { return block(basis, 0, r, basis.r, basis.c - r); }
};

template <class T>
Decomposition<T> canonical_decomposition(const Triple<T>& x) {
	int n = x.n(), r = stratum(x);
	Mat<T> plus = krylov(x.A, x.b, r);
	Mat<T> minus = r == 0 ? Mat<T>::id(n) : kernel(cokrylov(x.A, x.c, r));
	Decomposition<T> d{r, hcat(plus, minus)};
	if (d.basis.c != n || rank(d.basis) != n) throw std::logic_error("V+ and V- are not complementary");
	return d;
}

// iota(X+, Y) written in the basis (V+ , V-).
template <class T>
Triple<T> iota(const Triple<T>& xp, const Triple<T>& y) {
	int r = xp.n();
	if (r == 0) return y;
	int k = y.n(), n = r + k;
	Mat<T> e(r, 1);
	e(r - 1, 0) = T(1);
	Mat<T> K = krylov(xp.A, xp.b, r);
	Mat<T> C = cokrylov(xp.A, xp.c, r);
	if (is_zero(det(C * K))) throw domain_error("X+ is not in the open stratum");
	// c' K = e^T and C b' = e
	Mat<T> cp = transpose(e) * inverse(K);
	Mat<T> bp = inverse(C) * e;
	Triple<T> z = Triple<T>::zero(n);
	for (int i = 0; i < r; ++i) {
		for (int j = 0; j < r; ++j) z.A(i, j) = xp.A(i, j);
		z.b(i, 0) = xp.b(i, 0);
		z.c(0, i) = xp.c(0, i);
	}
	if (k > 0) {
		Mat<T> up = bp * y.c;	// b' w
		Mat<T> lo = y.b * cp;	// v c'
		for (int i = 0; i < r; ++i)
			for (int j = 0; j < k; ++j) z.A(i, r + j) = up(i, j);
		for (int i = 0; i < k; ++i) {
			for (int j = 0; j < r; ++j) z.A(r + i, j) = lo(i, j);
			for (int j = 0; j < k; ++j) z.A(r + i, r + j) = y.A(i, j);
		}
	}
	return z;
}

// Membership in s~(V+, V-) for the coordinate split F^r + F^{n-r}.
template <class T>
bool in_slice(const Triple<T>& x, int r) {
	int n = x.n();
	if (r == 0) return true;
	Mat<T> K = krylov(x.A, x.b, r);
	Mat<T> C = cokrylov(x.A, x.c, r);
	for (int i = r; i < n; ++i)
		for (int j = 0; j < r; ++j)
			if (!is_zero(K(i, j))) return false;
	for (int i = 0; i < r; ++i)
		for (int j = r; j < n; ++j)
			if (!is_zero(C(i, j))) return false;
	return !is_zero(det(block(K, 0, 0, r, r))) && !is_zero(det(block(C, 0, 0, r, r)));
}

template <class T>
std::pair<Triple<T>, Triple<T>> iota_inverse(const Triple<T>& x, int r) {
	int n = x.n(), k = n - r;
	if (!in_slice(x, r)) throw domain_error("triple is not in the slice");
	if (r == 0) return {Triple<T>::zero(0), x};
	Triple<T> xp(block(x.A, 0, 0, r, r), block(x.b, 0, 0, r, 1), block(x.c, 0, 0, 1, r));
	Mat<T> Lp = block(x.A, 0, r, r, k), Lm = block(x.A, r, 0, k, r);
	Mat<T> pw = power(xp.A, r - 1);
	Triple<T> y(block(x.A, r, r, k, k), Lm * pw * xp.b, xp.c * pw * Lp);
	return {xp, y};
}

// Coordinates adapted to the canonical decomposition: X = P . iota(X+, X-).
template <class T>
struct SliceSplit {
	Decomposition<T> dec;
	Triple<T> plus, minus;
};

template <class T>
SliceSplit<T> split(const Triple<T>& x) {
	Decomposition<T> d = canonical_decomposition(x);
	auto [xp, xm] = iota_inverse(act(inverse(d.basis), x), d.r);
	return {d, xp, xm};
}

// Semisimple part via Newton iteration on the squarefree part of the
// characteristic polynomial.
template <class T>
Mat<T> semisimple_part(const Mat<T>& a) {
	Poly<T> chi = charpoly(a);
	Poly<T> f = divmod(chi, gcd(chi, derivative(chi))).first;
	if (f.deg() == chi.deg()) return a;	// squarefree characteristic polynomial
	Poly<T> df = derivative(f);
	Mat<T> s = a;
	for (int it = 0; it < 64; ++it) {
		Mat<T> fs = f.eval(s);
		if (fs.is_zero()) return s;
		s = s - fs * inverse(df.eval(s));
	}
	throw std::logic_error("Newton iteration did not terminate");
}

template <class T>
std::pair<Triple<T>, Triple<T>> jordan(const Triple<T>& x) {
	int n = x.n(), r = stratum(x);
	if (r == n) return {x, Triple<T>::zero(n)};
	if (r == 0) {
		Mat<T> s = semisimple_part(x.A);
		Triple<T> xs(s, Mat<T>(n, 1), Mat<T>(1, n));
		return {xs, x - xs};
	}
	SliceSplit<T> sp = split(x);
	Triple<T> ms(semisimple_part(sp.minus.A), Mat<T>(n - r, 1), Mat<T>(1, n - r));
	Triple<T> xs = act(sp.dec.basis, iota(sp.plus, ms));
	return {xs, x - xs};
}

// V+ must contain every A^i b and V- be killed by every c A^i; then
// A|V- has to be semisimple in the usual sense.
template <class T>
bool is_semisimple(const Triple<T>& x) {
	int n = x.n(), r = stratum(x);
	if (rank(krylov(x.A, x.b, n + 1)) != r) return false;
	if (rank(cokrylov(x.A, x.c, n + 1)) != r) return false;
	if (r == n) return true;
	Decomposition<T> d = canonical_decomposition(x);
	Triple<T> y = act(inverse(d.basis), x);
	for (int i = 0; i < r; ++i)
		for (int j = r; j < n; ++j)
			if (!is_zero(y.A(i, j)) || !is_zero(y.A(j, i))) return false;
	return is_squarefree(minpoly(block(y.A, r, r, n - r, n - r)));
}

template <class T>
bool is_nilpotent(const Triple<T>& x) {
	auto inv = invariants(x);
	for (auto& e : inv.a)
		if (!is_zero(e)) return false;
	for (auto& e : inv.b)
		if (!is_zero(e)) return false;
	return true;
}

template <class T>
T pairing(const Triple<T>& x, const Triple<T>& y) {
	if (x.n() != y.n()) throw std::invalid_argument("dimension mismatch");
	return trace(x.A * y.A) + (x.c * y.b)(0, 0) + (y.c * x.b)(0, 0);
}

// Block-diagonal assembly of triples (Fi = F).
template <class T>
Triple<T> direct_sum(const std::vector<Triple<T>>& parts) {
	int n = 0;
	for (auto& p : parts) n += p.n();
	Triple<T> z = Triple<T>::zero(n);
	int o = 0;
	for (auto& p : parts) {
		for (int i = 0; i < p.n(); ++i) {
			for (int j = 0; j < p.n(); ++j) z.A(o + i, o + j) = p.A(i, j);
			z.b(o + i, 0) = p.b(i, 0);
			z.c(0, o + i) = p.c(0, i);
		}
		o += p.n();
	}
	return z;
}

int eta_tilde(const Triple<Q>& x, const Local& ctx);

// d_{n-}(sum X_i) divided by disc(chi_A) prod d_{n_i}(X_i)/disc(chi_{A_i})
Q slice_ratio(const std::vector<Triple<Q>>& parts);

}  // namespace jrlab
