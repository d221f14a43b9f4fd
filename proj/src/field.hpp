#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace jrlab {

using Q = mpq_class;
using Z = mpz_class;

struct domain_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

enum class Kind { inert, split };

// A finite place of F = Q at an odd prime, unramified in E.
struct Local {
	long p = 3;
	Kind kind = Kind::inert;
	long eps = 2;	// smallest positive non-residue mod p

	static Local make(long p, Kind kind = Kind::inert);
};

bool is_odd_prime(long p);
long smallest_nonresidue(long p);

int valuation(const Z& x, long p);
int valuation(const Q& x, long p);
int eta(const Q& x, const Local& ctx);
bool is_norm(const Q& x, const Local& ctx);
Q pow_p(long p, int k);	// p^k, k of either sign

// x + y*sqrt(d).  d is a nonsquare integer carried by value; 0 means "not
// yet fixed", which is only legal while y == 0 (constants built from integers).
struct QE {
	Q x, y;
	long d = 0;

	QE() = default;
	QE(long v) : x(v) {}
	QE(const Q& v) : x(v) {}
	QE(Q a, Q b, long dd) : x(std::move(a)), y(std::move(b)), d(dd) {}
	QE(Q a, Q b, const Q& dd) : x(std::move(a)), y(std::move(b)), d(integral_d(dd)) {}

	static QE sqrtd(long d) { return QE(0, 1, d); }

	bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0; }
	bool in_base() const { return sgn(y) == 0; }
	QE conj() const { return QE(x, -y, d); }
	Q norm() const { return x * x - d * y * y; }
	Q trace() const { return 2 * x; }

private:
	static long integral_d(const Q& dd);
};

long common_d(const QE& a, const QE& b);

QE operator+(const QE& a, const QE& b);
QE operator-(const QE& a, const QE& b);
QE operator-(const QE& a);
QE operator*(const QE& a, const QE& b);
QE operator/(const QE& a, const QE& b);
inline QE& operator+=(QE& a, const QE& b) { return a = a + b; }
inline QE& operator-=(QE& a, const QE& b) { return a = a - b; }
inline QE& operator*=(QE& a, const QE& b) { return a = a * b; }
bool operator==(const QE& a, const QE& b);

// acc += a * b without temporaries; matrix products spend their time here.
void mul_add(Q& acc, const Q& a, const Q& b);
void mul_add(QE& acc, const QE& a, const QE& b);
inline bool operator!=(const QE& a, const QE& b) { return !(a == b); }

// E_v = F_v x F_v at a split place; sigma swaps the factors.
struct Split {
	Q a, b;
	Split conj() const { return {b, a}; }
	Q norm() const { return a * b; }
	Q trace() const { return a + b; }
};

// v_E at an inert unramified place: half the valuation of the norm.
int valuation_E(const QE& z, long p);
// eta' extending eta: (-1)^{v_E}
int eta_prime(const QE& z, long p);

inline bool is_zero(const Q& q) { return sgn(q) == 0; }
inline bool is_zero(const QE& q) { return q.is_zero(); }
inline Q conj(const Q& q) { return q; }
inline QE conj(const QE& q) { return q.conj(); }

std::string to_string(const Q& q);
Q parse_q(const std::string& s);

}  // namespace jrlab
