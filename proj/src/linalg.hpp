#pragma once

#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "field.hpp"

namespace jrlab {

template <class T>
struct Mat {
	int r = 0, c = 0;
	std::vector<T> v;

	Mat() = default;
	Mat(int rows, int cols) : r(rows), c(cols), v(std::size_t(rows) * cols, T(0)) {}

	static Mat id(int n) {
		Mat m(n, n);
		for (int i = 0; i < n; ++i) m(i, i) = T(1);
		return m;
	}
	static Mat col(const std::vector<T>& x) {
		Mat m(int(x.size()), 1);
		for (int i = 0; i < m.r; ++i) m(i, 0) = x[i];
		return m;
	}
	static Mat row(const std::vector<T>& x) {
		Mat m(1, int(x.size()));
		for (int i = 0; i < m.c; ++i) m(0, i) = x[i];
		return m;
	}

	T& operator()(int i, int j) { return v[std::size_t(i) * c + j]; }
	const T& operator()(int i, int j) const { return v[std::size_t(i) * c + j]; }

	std::vector<T> column(int j) const {
		std::vector<T> x(r);
		for (int i = 0; i < r; ++i) x[i] = (*this)(i, j);
		return x;
	}
	void set_column(int j, const std::vector<T>& x) {
		for (int i = 0; i < r; ++i) (*this)(i, j) = x[i];
	}
	bool is_zero() const {
		for (auto& e : v)
			if (!jrlab::is_zero(e)) return false;
		return true;
	}
};

template <class T>
bool operator==(const Mat<T>& a, const Mat<T>& b) {
	if (a.r != b.r || a.c != b.c) return false;
	for (std::size_t i = 0; i < a.v.size(); ++i)
		if (a.v[i] != b.v[i]) return false;
	return true;
}
template <class T>
bool operator!=(const Mat<T>& a, const Mat<T>& b) { return !(a == b); }

template <class T>
Mat<T> operator+(const Mat<T>& a, const Mat<T>& b) {
	if (a.r != b.r || a.c != b.c) throw std::invalid_argument("shape mismatch");
	Mat<T> m = a;
	for (std::size_t i = 0; i < m.v.size(); ++i) m.v[i] += b.v[i];
	return m;
}
template <class T>
Mat<T> operator-(const Mat<T>& a, const Mat<T>& b) {
	if (a.r != b.r || a.c != b.c) throw std::invalid_argument("shape mismatch");
	Mat<T> m = a;
	for (std::size_t i = 0; i < m.v.size(); ++i) m.v[i] -= b.v[i];
	return m;
}
template <class T>
Mat<T> operator-(const Mat<T>& a) {
	Mat<T> m = a;
	for (auto& e : m.v) e = -e;
	return m;
}
template <class T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
	if (a.c != b.r) throw std::invalid_argument("shape mismatch");
	Mat<T> m(a.r, b.c);
	for (int i = 0; i < a.r; ++i)
		for (int k = 0; k < a.c; ++k) {
			if (is_zero(a(i, k))) continue;
			for (int j = 0; j < b.c; ++j) mul_add(m(i, j), a(i, k), b(k, j));
		}
	return m;
}
template <class T>
Mat<T> operator*(const std::type_identity_t<T>& s, const Mat<T>& a) {
	Mat<T> m = a;
	for (auto& e : m.v) e = s * e;
	return m;
}

template <class T>
Mat<T> transpose(const Mat<T>& a) {
	Mat<T> m(a.c, a.r);
	for (int i = 0; i < a.r; ++i)
		for (int j = 0; j < a.c; ++j) m(j, i) = a(i, j);
	return m;
}

template <class T>
Mat<T> conj(const Mat<T>& a) {
	Mat<T> m = a;
	for (auto& e : m.v) e = jrlab::conj(e);
	return m;
}

// sigma-conjugate transpose
template <class T>
Mat<T> adjoint(const Mat<T>& a) { return transpose(conj(a)); }

template <class T>
Mat<T> block(const Mat<T>& a, int r0, int c0, int nr, int nc) {
	Mat<T> m(nr, nc);
	for (int i = 0; i < nr; ++i)
		for (int j = 0; j < nc; ++j) m(i, j) = a(r0 + i, c0 + j);
	return m;
}

template <class T>
T trace(const Mat<T>& a) {
	T t(0);
	for (int i = 0; i < a.r; ++i) t += a(i, i);
	return t;
}

template <class T>
Mat<T> power(const Mat<T>& a, int k) {
	Mat<T> m = Mat<T>::id(a.r);
	for (int i = 0; i < k; ++i) m = m * a;
	return m;
}

// Row echelon over a field.  Returns rank; det_sign accumulates the
// determinant of the row operations when requested.
template <class T>
int echelon(Mat<T>& m, std::vector<int>* pivots = nullptr, T* det = nullptr) {
	int row = 0;
	if (det) *det = T(1);
	for (int col = 0; col < m.c && row < m.r; ++col) {
		int piv = -1;
		for (int i = row; i < m.r; ++i)
			if (!is_zero(m(i, col))) { piv = i; break; }
		if (piv < 0) continue;
		if (piv != row) {
			for (int j = 0; j < m.c; ++j) std::swap(m(piv, j), m(row, j));
			if (det) *det = -*det;
		}
		T inv = T(1) / m(row, col);
		if (det) *det = *det * m(row, col);
		for (int j = col; j < m.c; ++j) m(row, j) = m(row, j) * inv;
		for (int i = 0; i < m.r; ++i) {
			if (i == row || is_zero(m(i, col))) continue;
			T f = m(i, col);
			for (int j = col; j < m.c; ++j) m(i, j) -= f * m(row, j);
		}
		if (pivots) pivots->push_back(col);
		++row;
	}
	return row;
}

template <class T>
T det(const Mat<T>& a) {
	if (a.r != a.c) throw std::invalid_argument("det of non-square matrix");
	if (a.r == 0) return T(1);
	Mat<T> m = a;
	T d;
	int rk = echelon(m, nullptr, &d);
	return rk < a.r ? T(0) : d;
}

template <class T>
int rank(const Mat<T>& a) {
	Mat<T> m = a;
	return echelon(m);
}

template <class T>
Mat<T> inverse(const Mat<T>& a) {
	if (a.r != a.c) throw std::invalid_argument("inverse of non-square matrix");
	int n = a.r;
	Mat<T> aug(n, 2 * n);
	for (int i = 0; i < n; ++i) {
		for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
		aug(i, n + i) = T(1);
	}
	std::vector<int> piv;
	echelon(aug, &piv);
	if (int(piv.size()) < n || piv.back() >= n) throw domain_error("singular matrix");
	return block(aug, 0, n, n, n);
}

// Basis of {x : a x = 0}, as columns.
template <class T>
Mat<T> kernel(const Mat<T>& a) {
	Mat<T> m = a;
	std::vector<int> piv;
	echelon(m, &piv);
	std::vector<bool> is_piv(a.c, false);
	for (int p : piv) is_piv[p] = true;
	int free = a.c - int(piv.size());
	Mat<T> k(a.c, free);
	int col = 0;
	for (int f = 0; f < a.c; ++f) {
		if (is_piv[f]) continue;
		k(f, col) = T(1);
		for (std::size_t i = 0; i < piv.size(); ++i) k(piv[i], col) = -m(int(i), f);
		++col;
	}
	return k;
}

template <class T>
Mat<T> hcat(const Mat<T>& a, const Mat<T>& b) {
	if (a.r != b.r) throw std::invalid_argument("hcat row mismatch");
	Mat<T> m(a.r, a.c + b.c);
	for (int i = 0; i < a.r; ++i) {
		for (int j = 0; j < a.c; ++j) m(i, j) = a(i, j);
		for (int j = 0; j < b.c; ++j) m(i, a.c + j) = b(i, j);
	}
	return m;
}

template <class T>
Mat<T> vcat(const Mat<T>& a, const Mat<T>& b) { return transpose(hcat(transpose(a), transpose(b))); }

// Solve a x = b for square invertible a.
template <class T>
Mat<T> solve(const Mat<T>& a, const Mat<T>& b) { return inverse(a) * b; }

template <class T, class S>
Mat<T> convert(const Mat<S>& a) {
	Mat<T> m(a.r, a.c);
	for (std::size_t i = 0; i < a.v.size(); ++i) m.v[i] = T(a.v[i]);
	return m;
}

}  // namespace jrlab
