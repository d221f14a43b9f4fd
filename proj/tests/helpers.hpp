#pragma once

#include <initializer_list>
#include <vector>

#include "hermitian.hpp"

namespace testing {

using namespace jrlab;

template <class T = Q>
Mat<T> mat(std::initializer_list<std::initializer_list<long>> rows) {
	Mat<T> m(int(rows.size()), rows.size() ? int(rows.begin()->size()) : 0);
	int i = 0;
	for (auto& row : rows) {
		int j = 0;
		for (long e : row) m(i, j++) = T(e);
		++i;
	}
	return m;
}

inline MatQ col(std::initializer_list<Q> xs) { return MatQ::col(std::vector<Q>(xs)); }
inline MatQ row(std::initializer_list<Q> xs) { return MatQ::row(std::vector<Q>(xs)); }

inline Triple<Q> triple(MatQ A, MatQ b, MatQ c) { return Triple<Q>(std::move(A), std::move(b), std::move(c)); }

// n = 1 triple (alpha, beta, gamma)
inline Triple<Q> scalar_triple(const Q& a, const Q& b, const Q& c) { return triple(MatQ::col({a}), MatQ::col({b}), MatQ::col({c})); }

inline QE qe(const Q& x, const Q& y, const Local& ctx) { return QE(x, y, Q(ctx.eps)); }

}  // namespace testing
