#include "field.hpp"

namespace jrlab {

bool is_odd_prime(long p) {
	if (p < 3 || p % 2 == 0) return false;
	for (long q = 3; q * q <= p; q += 2)
		if (p % q == 0) return false;
	return true;
}

long smallest_nonresidue(long p) {
	for (long e = 2; e < p; ++e) {
		Z r;
		mpz_powm_ui(r.get_mpz_t(), Z(e).get_mpz_t(), (p - 1) / 2, Z(p).get_mpz_t());
		if (r != 1) return e;
	}
	throw domain_error("no non-residue mod " + std::to_string(p));
}

Local Local::make(long p, Kind kind) {
	if (!is_odd_prime(p)) throw domain_error("p must be an odd prime");
	return Local{p, kind, smallest_nonresidue(p)};
}

int valuation(const Z& x, long p) {
	if (sgn(x) == 0) throw domain_error("infinite valuation");
	Z pp(p);
	return static_cast<int>(mpz_remove(Z().get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
}

int valuation(const Q& x, long p) {
	if (sgn(x) == 0) throw domain_error("infinite valuation");
	return valuation(Z(x.get_num()), p) - valuation(Z(x.get_den()), p);
}

int eta(const Q& x, const Local& ctx) {
	int v = valuation(x, ctx.p);
	if (ctx.kind == Kind::split) return 1;
	return (v % 2 == 0) ? 1 : -1;
}

bool is_norm(const Q& x, const Local& ctx) {
	int v = valuation(x, ctx.p);
	if (ctx.kind == Kind::split) return true;
	return v % 2 == 0;
}

Q pow_p(long p, int k) {
	Z r;
	mpz_ui_pow_ui(r.get_mpz_t(), p, k < 0 ? -k : k);
	return k < 0 ? Q(1) / Q(r) : Q(r);
}

long QE::integral_d(const Q& dd) {
	if (dd.get_den() != 1 || !dd.get_num().fits_slong_p()) throw std::invalid_argument("sqrt(d) needs a small integer d");
	return dd.get_num().get_si();
}

long common_d(const QE& a, const QE& b) {
	if (a.d == 0) return b.d;
	if (b.d != 0 && a.d != b.d) throw std::logic_error("mixed quadratic extensions");
	return a.d;
}

QE operator+(const QE& a, const QE& b) { return QE(a.x + b.x, a.y + b.y, common_d(a, b)); }
QE operator-(const QE& a, const QE& b) { return QE(a.x - b.x, a.y - b.y, common_d(a, b)); }
QE operator-(const QE& a) { return QE(-a.x, -a.y, a.d); }

QE operator*(const QE& a, const QE& b) {
	long d = common_d(a, b);
	// most entries in practice lie in F
	if (sgn(a.y) == 0) {
		if (sgn(b.y) == 0) return QE(a.x * b.x, Q(0), d);
		return QE(a.x * b.x, a.x * b.y, d);
	}
	if (sgn(b.y) == 0) return QE(a.x * b.x, a.y * b.x, d);
	return QE(a.x * b.x + d * a.y * b.y, a.x * b.y + a.y * b.x, d);
}

QE operator/(const QE& a, const QE& b) {
	Q n = b.norm();
	if (sgn(n) == 0) throw domain_error("division by zero in E");
	QE num = a * b.conj();
	return QE(num.x / n, num.y / n, common_d(a, b));
}

void mul_add(Q& acc, const Q& a, const Q& b) {
	thread_local Q t;
	mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
	acc += t;
}

void mul_add(QE& acc, const QE& a, const QE& b) {
	thread_local Q t;
	if (acc.d == 0) acc.d = common_d(a, b);
	else if ((a.d && a.d != acc.d) || (b.d && b.d != acc.d)) throw std::logic_error("mixed quadratic extensions");
	mpq_mul(t.get_mpq_t(), a.x.get_mpq_t(), b.x.get_mpq_t());
	acc.x += t;
	bool ay = sgn(a.y) != 0, by = sgn(b.y) != 0;
	if (ay && by) {
		mpq_mul(t.get_mpq_t(), a.y.get_mpq_t(), b.y.get_mpq_t());
		t *= acc.d;
		acc.x += t;
	}
	if (by) {
		mpq_mul(t.get_mpq_t(), a.x.get_mpq_t(), b.y.get_mpq_t());
		acc.y += t;
	}
	if (ay) {
		mpq_mul(t.get_mpq_t(), a.y.get_mpq_t(), b.x.get_mpq_t());
		acc.y += t;
	}
}

bool operator==(const QE& a, const QE& b) { return a.x == b.x && a.y == b.y; }

int valuation_E(const QE& z, long p) {
	int v = valuation(z.norm(), p);
	if (v % 2 != 0) throw std::logic_error("odd norm valuation at an inert place");
	return v / 2;
}

int eta_prime(const QE& z, long p) { return valuation_E(z, p) % 2 == 0 ? 1 : -1; }

std::string to_string(const Q& q) {
	if (q.get_den() == 1) return q.get_num().get_str();
	return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Q parse_q(const std::string& s) {
	Q q;
	if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
	if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
	q.canonicalize();
	return q;
}

}  // namespace jrlab
