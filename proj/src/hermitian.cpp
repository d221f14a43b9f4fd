#include "hermitian.hpp"

namespace jrlab {

HermitianForm::HermitianForm(MatE g) : gram(std::move(g)) {
	if (gram.r != gram.c) throw std::invalid_argument("gram matrix must be square");
	if (!is_hermitian(gram)) throw domain_error("gram matrix is not hermitian");
	if (is_zero(jrlab::det(gram))) throw domain_error("degenerate hermitian form");
}

Q HermitianForm::det() const { return to_base(jrlab::det(gram)); }

Q to_base(const QE& z) {
	if (!z.in_base()) throw std::logic_error("value expected in F has a sqrt(eps) part");
	return z.x;
}

MatQ to_base(const MatE& m) {
	MatQ r(m.r, m.c);
	for (std::size_t i = 0; i < m.v.size(); ++i) r.v[i] = to_base(m.v[i]);
	return r;
}

MatE lift(const MatQ& m, const Q& d) {
	MatE r(m.r, m.c);
	for (std::size_t i = 0; i < m.v.size(); ++i) r.v[i] = QE(m.v[i], 0, d);
	return r;
}

bool is_hermitian(const MatE& g) { return g.r == g.c && adjoint(g) == g; }

bool is_selfadjoint(const MatE& A, const HermitianForm& phi) {
	if (A.r != phi.n() || A.c != phi.n()) throw std::invalid_argument("dimension mismatch");
	return adjoint(A) * phi.gram == phi.gram * A;
}

Triple<QE> as_triple(const HermitianPair& x, const HermitianForm& phi) {
	if (x.A.r != phi.n() || x.b.r != phi.n() || x.b.c != 1) throw std::invalid_argument("dimension mismatch");
	if (!is_selfadjoint(x.A, phi)) throw domain_error("A is not self-adjoint");
	return Triple<QE>(x.A, x.b, adjoint(x.b) * phi.gram);
}

Invariants<Q> u_invariants(const HermitianPair& x, const HermitianForm& phi) {
	Invariants<QE> e = invariants(as_triple(x, phi));
	Invariants<Q> r;
	for (auto& v : e.a) r.a.push_back(to_base(v));
	for (auto& v : e.b) r.b.push_back(to_base(v));
	return r;
}

int u_stratum(const HermitianPair& x, const HermitianForm& phi) { return stratum(as_triple(x, phi)); }

Q u_d_r(const HermitianPair& x, const HermitianForm& phi, int r) { return to_base(d_r(as_triple(x, phi), r)); }

std::pair<HermitianPair, HermitianPair> u_jordan(const HermitianPair& x, const HermitianForm& phi) {
	Triple<QE> t = as_triple(x, phi);
	auto [s, nil] = jordan(t);
	HermitianPair xs{s.A, s.b}, xn{nil.A, nil.b};
	// both parts have to stay in u~ for the same form
	if (!is_selfadjoint(xs.A, phi) || adjoint(xs.b) * phi.gram != s.c)
		throw std::logic_error("semisimple part left the hermitian space");
	return {xs, xn};
}

bool u_is_semisimple(const HermitianPair& x, const HermitianForm& phi) { return is_semisimple(as_triple(x, phi)); }

bool u_is_nilpotent(const HermitianPair& x, const HermitianForm& phi) { return is_nilpotent(as_triple(x, phi)); }

Q u_pairing(const HermitianPair& x, const HermitianPair& y, const HermitianForm& phi) {
	if (x.n() != y.n()) throw std::invalid_argument("dimension mismatch");
	return to_base(trace(x.A * y.A) + phi(x.b, y.b) + phi(y.b, x.b));
}

HermitianPair u_act(const MatE& g, const HermitianPair& x) { return {g * x.A * inverse(g), g * x.b}; }

HermitianForm extend_form(const HermitianForm& phi) {
	int n = phi.n();
	MatE g(n + 1, n + 1);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) g(i, j) = phi.gram(i, j);
	g(n, n) = QE(1);
	return HermitianForm(g);
}

FormClass classify_form_local(const HermitianForm& phi, const Local& ctx) {
	return is_norm(phi.det(), ctx) ? FormClass::phi0 : FormClass::phi1;
}

Poly<Q> charpoly_of(const Invariants<Q>& a) {
	int n = int(a.a.size());
	std::vector<Q> c(n + 1);
	c[n] = 1;
	for (int i = 1; i <= n; ++i) c[n - i] = a.a[i - 1];
	return Poly<Q>(c);
}

std::vector<Q> continued_moments(const Invariants<Q>& a, int count) {
	int n = int(a.a.size());
	std::vector<Q> m(a.b.begin(), a.b.end());
	while (int(m.size()) < count) {
		int k = int(m.size());
		Q s = 0;
		for (int i = 1; i <= n; ++i) s -= a.a[i - 1] * m[k - i];
		m.push_back(s);
	}
	m.resize(count);
	return m;
}

namespace {

MatQ hankel(const std::vector<Q>& m, int r) {
	MatQ h(r, r);
	for (int i = 0; i < r; ++i)
		for (int j = 0; j < r; ++j) h(i, j) = m[i + j];
	return h;
}

MatQ companion(const Poly<Q>& p) {
	int d = p.deg();
	MatQ c(d, d);
	for (int i = 1; i < d; ++i) c(i, i - 1) = 1;
	for (int i = 0; i < d; ++i) c(i, d - 1) = -p[i];
	return c;
}

// Monic recurrence polynomial of degree r for a moment sequence whose
// r x r Hankel matrix is invertible.
Poly<Q> recurrence(const std::vector<Q>& m, int r) {
	if (r == 0) return Poly<Q>::constant(1);
	MatQ h = hankel(m, r), rhs(r, 1);
	for (int i = 0; i < r; ++i) rhs(i, 0) = -m[r + i];
	MatQ q = solve(h, rhs);
	std::vector<Q> c(r + 1);
	c[r] = 1;
	for (int i = 0; i < r; ++i) c[i] = q(i, 0);
	return Poly<Q>(c);
}

// Power sums of the roots of p, via Newton's identities.
std::vector<Q> power_sums(const Poly<Q>& p, int count) {
	int d = p.deg();
	std::vector<Q> s(count);
	for (int k = 0; k < count; ++k) {
		if (k == 0) { s[0] = d; continue; }
		Q v = 0;
		for (int i = 1; i <= std::min(k, d); ++i) {
			Q e = p[d - i];	// coefficient of t^{d-i}
			if (i < k) v -= e * s[k - i];
			else v -= Q(k) * e;
		}
		s[k] = v;
	}
	return s;
}

}  // namespace

int stratum_of(const Invariants<Q>& a) {
	int n = int(a.a.size());
	auto m = continued_moments(a, 2 * n);
	for (int r = n; r >= 1; --r)
		if (!is_zero(det(hankel(m, r)))) return r;
	return 0;
}

Poly<Q> stratum_zero_part(const Invariants<Q>& a) {
	int n = int(a.a.size()), r = stratum_of(a);
	auto m = continued_moments(a, 2 * n + 1);
	auto [q, rem] = divmod(charpoly_of(a), recurrence(m, r));
	if (!rem.is_zero()) throw std::logic_error("regular part does not divide the characteristic polynomial");
	return q;
}

KrylovModel krylov_model(const Invariants<Q>& a) {
	int n = int(a.a.size());
	auto m = continued_moments(a, 2 * n);
	KrylovModel k{companion(charpoly_of(a)), hankel(m, n)};
	if (is_zero(det(k.D))) throw domain_error("invariant point is not regular");
	return k;
}

std::vector<OrbitClass> orbit_inventory(const Invariants<Q>& a, const std::vector<Factor>& factors, const Local& ctx) {
	if (ctx.kind != Kind::inert) throw domain_error("orbit inventory needs an inert place");
	int n = int(a.a.size()), r = stratum_of(a);
	Poly<Q> P = stratum_zero_part(a);
	Poly<Q> prod = Poly<Q>::constant(1);
	for (auto& f : factors) {
		if (f.mult < 1 || f.poly.deg() < 1 || f.poly.lead() != 1) throw domain_error("factor must be monic of positive degree");
		for (int k = 0; k < f.mult; ++k) prod = prod * f.poly;
		int d = f.poly.deg();
		if (d == 1) {
			if (!f.inert) throw domain_error("a linear factor cannot split over an inert E");
		} else if (d == 2) {
			Q disc = discriminant(f.poly);
			int v = valuation(disc, ctx.p);
			bool square = v % 2 == 0 && [&] {
				Q u = disc / pow_p(ctx.p, v);
				Z num = u.get_num() * u.get_den();
				return mpz_legendre(num.get_mpz_t(), Z(ctx.p).get_mpz_t()) == 1;
			}();
			if (square) throw domain_error("quadratic factor is reducible over F");
			if (f.inert != (v % 2 != 0)) throw domain_error("split/inert flag disagrees with the discriminant");
		} else {
			throw domain_error("irreducibility certificates exist only for degree <= 2");
		}
	}
	if (!(prod == P)) throw domain_error("factorization does not multiply back to the stratum-0 part");
	for (std::size_t i = 0; i < factors.size(); ++i)
		for (std::size_t j = i + 1; j < factors.size(); ++j)
			if (factors[i].poly == factors[j].poly) throw domain_error("repeated factor");

	// regular part in Krylov form
	auto m = continued_moments(a, 2 * n + 1);
	Poly<Q> qreg = recurrence(m, r);
	MatQ Areg = r ? companion(qreg) : MatQ(0, 0);
	MatQ Dreg = hankel(m, r);

	std::vector<int> inert_idx;
	for (std::size_t i = 0; i < factors.size(); ++i)
		if (factors[i].inert) inert_idx.push_back(int(i));
	std::vector<OrbitClass> out;
	for (unsigned mask = 0; mask < (1u << inert_idx.size()); ++mask) {
		MatQ A(n, n), D(n, n), b(n, 1);
		for (int i = 0; i < r; ++i)
			for (int j = 0; j < r; ++j) A(i, j) = Areg(i, j), D(i, j) = Dreg(i, j);
		if (r) b(0, 0) = 1;
		OrbitClass oc;
		int off = r, slot = 0;
		for (std::size_t fi = 0; fi < factors.size(); ++fi) {
			const Factor& f = factors[fi];
			bool twist = false;
			if (f.inert) {
				twist = (mask >> slot) & 1;
				oc.local.push_back(twist);
				++slot;
			}
			int d = f.poly.deg();
			MatQ C = companion(f.poly);
			auto s = power_sums(f.poly, 2 * d);
			for (int k = 0; k < f.mult; ++k) {
				// block form Tr(u lambda^{i+j}); u = 1, or u of odd valuation
				// in F[t]/P on the last copy of a twisted factor
				std::vector<Q> mk(2 * d - 1);
				bool tw = twist && k == f.mult - 1;
				for (int e = 0; e + 1 < 2 * d; ++e) {
					if (!tw) mk[e] = s[e];
					else if (d == 1) mk[e] = Q(ctx.p) * s[e];
					else mk[e] = s[e + 1] + f.poly[1] / 2 * s[e];	// u = lambda + a_1/2
				}
				for (int i = 0; i < d; ++i)
					for (int j = 0; j < d; ++j) {
						A(off + i, off + j) = C(i, j);
						D(off + i, off + j) = mk[i + j];
					}
				off += d;
			}
		}
		oc.form = HermitianForm(lift(D, ctx));
		oc.rep = HermitianPair{lift(A, ctx), lift(b, ctx)};
		oc.disc_is_norm = classify_form_local(oc.form, ctx) == FormClass::phi0;
		out.push_back(std::move(oc));
	}
	return out;
}

CayleyParams CayleyParams::make(const QE& tau, const QE& xi) {
	if (tau.is_zero() || sgn(tau.x) != 0) throw domain_error("tau must satisfy sigma(tau) = -tau, tau != 0");
	if (xi.norm() != 1) throw domain_error("xi must have norm 1");
	return {tau, xi};
}

CayleyParams CayleyParams::standard(const Local& ctx) {
	Q e(ctx.eps);
	// xi = (1 + sqrt(eps)) / (1 - sqrt(eps))
	QE one(Q(1), Q(0), e), s(Q(0), Q(1), e);
	return make(s, (one + s) / (one - s));
}

MatE cayley(const MatE& y, const CayleyParams& k) {
	int n = y.r;
	MatE id = MatE::id(n);
	MatE u = (QE(1) / k.tau) * y;
	MatE den = id - u;
	if (is_zero(det(y * y - (k.tau * k.tau) * id))) throw domain_error("κ pole");
	return (-k.xi) * ((id + u) * inverse(den));
}

MatE cayley_gl(const MatQ& y, const CayleyParams& k) {
	MatE r = cayley(lift(y, k.tau.d), k);
	if (!in_X(r)) throw std::logic_error("cayley image is not in X");
	return r;
}

MatE cayley_u(const MatE& y, const HermitianForm& phit, const CayleyParams& k) {
	if (!is_selfadjoint(y, phit)) throw domain_error("Y is not self-adjoint");
	MatE r = cayley(y, k);
	if (!is_unitary(r, phit)) throw std::logic_error("cayley image is not unitary");
	return r;
}

MatE cayley_inverse(const MatE& r, const CayleyParams& k) {
	int n = r.r;
	MatE id = MatE::id(n);
	MatE m = (QE(-1) / k.xi) * r;
	return k.tau * (inverse(m + id) * (m - id));
}

bool in_X(const MatE& g) { return g * conj(g) == MatE::id(g.r); }

bool is_unitary(const MatE& g, const HermitianForm& phi) { return adjoint(g) * phi.gram * g == phi.gram; }

GroupInvariants x_invariants(const MatE& y) {
	int n = y.r - 1;
	GroupInvariants gi{charpoly(y), {}};
	MatE p = y;
	for (int i = 1; i <= n; ++i, p = p * y) gi.moments.push_back(p(n, n));
	return gi;
}

GroupInvariants u_group_invariants(const MatE& y, const HermitianForm& phit) {
	int n = y.r - 1;
	MatE e0(n + 1, 1);
	e0(n, 0) = QE(1);
	GroupInvariants gi{charpoly(y), {}};
	MatE v = y * e0;
	for (int i = 1; i <= n; ++i, v = y * v) gi.moments.push_back(phit(e0, v));
	return gi;
}

bool match_invariants_group(const MatE& y1, const MatE& y2, const HermitianForm& phit) {
	if (y1.r != y2.r || y2.r != phit.n()) return false;
	GroupInvariants a = x_invariants(y1), b = u_group_invariants(y2, phit);
	if (!(a.chi == b.chi)) return false;
	for (std::size_t i = 0; i < a.moments.size(); ++i)
		if (a.moments[i] != b.moments[i]) return false;
	return true;
}

MatchedEnd matched_end(const MatQ& y) {
	int n = y.r - 1;
	if (y.r != y.c || n < 1) throw std::invalid_argument("Y must be square of size n+1 >= 2");
	Triple<Q> t(block(y, 0, 0, n, n), block(y, 0, n, n, 1), block(y, n, 0, 1, n));
	KrylovModel km = krylov_model(invariants(t));
	// eps is irrelevant for rational entries; keep d unset
	MatE g(n, n), ye(n + 1, n + 1);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) {
			g(i, j) = QE(km.D(i, j));
			ye(i, j) = QE(km.C(i, j));
		}
	ye(0, n) = QE(1);
	for (int j = 0; j < n; ++j) ye(n, j) = QE(km.D(0, j));
	ye(n, n) = QE(y(n, n));
	return {HermitianForm(g), ye};
}

namespace {
int eta_prime_signed(const QE& z, const Local& ctx, int power) {
	int v = valuation_E(z, ctx.p) * power;
	return (v % 2 == 0) ? 1 : -1;
}
}  // namespace

int omega_factor(const MatE& x, const Local& ctx) {
	int n = x.r - 1;
	MatE k(n + 1, n + 1), v(n + 1, 1);
	v(n, 0) = QE(1);
	for (int j = 0; j <= n; ++j) {
		k.set_column(j, v.column(0));
		v = x * v;
	}
	QE dk = det(k);
	if (dk.is_zero()) throw domain_error("x is not regular");
	return eta_prime_signed(det(x), ctx, -((n + 1) / 2)) * eta_prime_signed(dk, ctx, 1);
}

MatE nu(const MatE& g, const MatE& gt) {
	int n = g.r;
	MatE big = MatE::id(n + 1);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) big(i, j) = g(i, j);
	MatE y = inverse(big) * gt;
	return y * inverse(conj(y));
}

int omega_group(const MatE& g, const MatE& gt, const Local& ctx) {
	int n = g.r;
	int w = omega_factor(nu(g, gt), ctx);
	if (n % 2 == 1) w *= eta_prime_signed(det(gt) / det(g), ctx, 1);
	return w;
}

int eta_tilde_end(const MatQ& y, const Local& ctx) {
	int n = y.r - 1;
	MatQ k(n + 1, n + 1), v(n + 1, 1);
	v(n, 0) = 1;
	for (int j = 0; j <= n; ++j) {
		k.set_column(j, v.column(0));
		v = y * v;
	}
	Q d = det(k);
	if (is_zero(d)) throw domain_error("Y is not regular");
	return eta(n % 2 ? Q(-d) : d, ctx);
}

int cayley_factor_ratio(const MatQ& y, const CayleyParams& k, const Local& ctx) {
	int n = y.r - 1;
	MatE x = cayley_gl(y, k);
	int w = omega_factor(x, ctx) * eta_tilde_end(y, ctx);
	if (n % 2 == 1) w *= eta_prime_signed(det(lift(y, k.tau.d) - k.tau * MatE::id(n + 1)), ctx, 1);
	return w;
}

FactorCompat factor_compat_check(const std::vector<MatQ>& ys, const CayleyParams& k, const Local& ctx) {
	FactorCompat r;
	for (auto& y : ys) {
		int w = cayley_factor_ratio(y, k, ctx);
		if (r.samples == 0) r.constant = w;
		else if (w != r.constant) r.constant = 0;
		++r.samples;
	}
	r.ok = r.samples > 0 && r.constant != 0;
	return r;
}

}  // namespace jrlab
