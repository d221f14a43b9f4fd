#pragma once

#include <utility>
#include <vector>

#include "linalg.hpp"

namespace jrlab {

// c[i] is the coefficient of t^i; no trailing zeros (zero polynomial is empty).
template <class T>
struct Poly {
	std::vector<T> c;

	Poly() = default;
	explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }
	static Poly constant(const T& a) { return Poly(std::vector<T>{a}); }
	static Poly monomial(int k, const T& a = T(1)) {
		std::vector<T> v(k + 1, T(0));
		v[k] = a;
		return Poly(v);
	}

	void trim() {
		while (!c.empty() && jrlab::is_zero(c.back())) c.pop_back();
	}
	int deg() const { return int(c.size()) - 1; }
	bool is_zero() const { return c.empty(); }
	const T& lead() const { return c.back(); }
	T operator[](int i) const { return (i >= 0 && i < int(c.size())) ? c[i] : T(0); }

	T eval(const T& x) const {
		T r(0);
		for (int i = deg(); i >= 0; --i) r = r * x + c[i];
		return r;
	}
	Mat<T> eval(const Mat<T>& a) const {
		Mat<T> r(a.r, a.c);
		for (int i = deg(); i >= 0; --i) r = r * a + c[i] * Mat<T>::id(a.r);
		return r;
	}
};

template <class T>
bool operator==(const Poly<T>& a, const Poly<T>& b) {
	if (a.c.size() != b.c.size()) return false;
	for (std::size_t i = 0; i < a.c.size(); ++i)
		if (a.c[i] != b.c[i]) return false;
	return true;
}

template <class T>
Poly<T> operator+(const Poly<T>& a, const Poly<T>& b) {
	std::vector<T> v(std::max(a.c.size(), b.c.size()), T(0));
	for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[int(i)] + b[int(i)];
	return Poly<T>(v);
}
template <class T>
Poly<T> operator-(const Poly<T>& a, const Poly<T>& b) {
	std::vector<T> v(std::max(a.c.size(), b.c.size()), T(0));
	for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[int(i)] - b[int(i)];
	return Poly<T>(v);
}
template <class T>
Poly<T> operator*(const Poly<T>& a, const Poly<T>& b) {
	if (a.is_zero() || b.is_zero()) return {};
	std::vector<T> v(a.c.size() + b.c.size() - 1, T(0));
	for (std::size_t i = 0; i < a.c.size(); ++i)
		for (std::size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
	return Poly<T>(v);
}
template <class T>
Poly<T> operator*(const std::type_identity_t<T>& s, const Poly<T>& a) {
	Poly<T> r = a;
	for (auto& e : r.c) e = s * e;
	r.trim();
	return r;
}

template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
	if (b.is_zero()) throw domain_error("polynomial division by zero");
	Poly<T> q, r = a;
	if (a.deg() >= b.deg()) q.c.assign(a.deg() - b.deg() + 1, T(0));
	while (!r.is_zero() && r.deg() >= b.deg()) {
		int k = r.deg() - b.deg();
		T f = r.lead() / b.lead();
		q.c[k] = f;
		for (int i = 0; i <= b.deg(); ++i) r.c[i + k] -= f * b.c[i];
		r.c.pop_back();
		r.trim();
	}
	q.trim();
	return {q, r};
}

template <class T>
Poly<T> monic(const Poly<T>& a) {
	if (a.is_zero()) return a;
	return (T(1) / a.lead()) * a;
}

template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
	while (!b.is_zero()) {
		auto r = divmod(a, b).second;
		a = std::move(b);
		b = std::move(r);
	}
	return monic(a);
}

template <class T>
Poly<T> derivative(const Poly<T>& a) {
	if (a.deg() < 1) return {};
	std::vector<T> v(a.deg());
	for (int i = 1; i <= a.deg(); ++i) v[i - 1] = T(i) * a.c[i];
	return Poly<T>(v);
}

// Faddeev-LeVerrier; monic, characteristic zero.
template <class T>
Poly<T> charpoly(const Mat<T>& a) {
	if (a.r != a.c) throw std::invalid_argument("charpoly of non-square matrix");
	int n = a.r;
	std::vector<T> c(n + 1, T(0));
	c[n] = T(1);
	// Faddeev-LeVerrier; am = A M_k feeds both the trace and M_{k+1}
	Mat<T> am(n, n);
	for (int k = 1; k <= n; ++k) {
		for (int i = 0; i < n; ++i) am(i, i) += c[n - k + 1];
		am = a * am;
		c[n - k] = -trace(am) / T(k);
	}
	return Poly<T>(c);
}

template <class T>
Mat<T> sylvester(const Poly<T>& p, const Poly<T>& q) {
	int m = p.deg(), n = q.deg();
	Mat<T> s(m + n, m + n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j <= m; ++j) s(i, i + j) = p.c[m - j];
	for (int i = 0; i < m; ++i)
		for (int j = 0; j <= n; ++j) s(n + i, i + j) = q.c[n - j];
	return s;
}

template <class T>
T resultant(const Poly<T>& p, const Poly<T>& q) {
	if (p.is_zero() || q.is_zero()) throw domain_error("resultant of zero polynomial");
	if (p.deg() == 0 && q.deg() == 0) return T(1);
	return det(sylvester(p, q));
}

// disc(P) = (-1)^{d(d-1)/2} Res(P, P') / lead(P)
template <class T>
T discriminant(const Poly<T>& p) {
	if (p.is_zero()) throw domain_error("discriminant of zero polynomial");
	int d = p.deg();
	if (d < 1) throw domain_error("discriminant of a constant");
	if (d == 1) return T(1);
	T r = resultant(p, derivative(p)) / p.lead();
	return ((d * (d - 1) / 2) % 2) ? -r : r;
}

// Minimal polynomial of a, found as the first linear dependence among powers.
template <class T>
Poly<T> minpoly(const Mat<T>& a) {
	int n = a.r;
	std::vector<Mat<T>> pw{Mat<T>::id(n)};
	for (int k = 1; k <= n; ++k) {
		pw.push_back(pw.back() * a);
		Mat<T> sys(n * n, k);
		for (int j = 0; j < k; ++j)
			for (int e = 0; e < n * n; ++e) sys(e, j) = pw[j].v[e];
		Mat<T> rhs(n * n, 1);
		for (int e = 0; e < n * n; ++e) rhs(e, 0) = pw[k].v[e];
		Mat<T> aug = hcat(sys, rhs);
		std::vector<int> piv;
		echelon(aug, &piv);
		if (!piv.empty() && piv.back() == k) continue;
		std::vector<T> c(k + 1, T(0));
		c[k] = T(1);
		for (std::size_t i = 0; i < piv.size(); ++i) c[piv[i]] = -aug(int(i), k);
		return Poly<T>(c);
	}
	return charpoly(a);
}

template <class T>
bool is_squarefree(const Poly<T>& p) { return gcd(p, derivative(p)).deg() == 0; }

}  // namespace jrlab
