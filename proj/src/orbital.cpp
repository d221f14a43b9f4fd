#include "orbital.hpp"

#include "parallel.hpp"
#include "random.hpp"

namespace jrlab::orbital {

namespace {

constexpr long kMaxCandidates = 20'000'000;

bool integral(const Q& x, long p) { return mpz_divisible_ui_p(x.get_den_mpz_t(), p) == 0; }
bool integral(const QE& x, long p) { return integral(x.x, p) && integral(x.y, p); }

template <class T>
bool integral(const Mat<T>& m, long p) {
	for (auto& e : m.v)
		if (!integral(e, p)) return false;
	return true;
}

// p-power as an integer, with overflow guarded by the candidate budget
long ipow(long p, int k) {
	long r = 1;
	for (int i = 0; i < k; ++i) {
		if (r > kMaxCandidates) throw budget_error("lattice enumeration exceeds the work budget");
		r *= p;
	}
	return r;
}

// Residues of p^-v O (resp. p^-v O_E) modulo p^e O: representatives
// a p^-v with 0 <= a < p^{v+e}, and (a + b sqrt(eps)) p^-v over E.
std::vector<Q> residues_f(long p, int v, int e) {
	long k = ipow(p, v + e);
	Q s = pow_p(p, -v);
	std::vector<Q> r;
	for (long a = 0; a < k; ++a) r.push_back(Q(a) * s);
	return r;
}
std::vector<QE> residues_e(long p, int v, int e, const Q& eps) {
	long k = ipow(p, v + e);
	if (k > kMaxCandidates / k) throw budget_error("lattice enumeration exceeds the work budget");
	Q s = pow_p(p, -v);
	std::vector<QE> r;
	for (long a = 0; a < k; ++a)
		for (long b = 0; b < k; ++b) r.push_back(QE(Q(a) * s, Q(b) * s, eps));
	return r;
}

// Walks every normalized Hermite form with exponents in [-v, 0] and keeps
// those accepted by `keep`.
template <class T, class Res, class Keep>
std::vector<Lattice<T>> enumerate(int n, int v, long p, Res&& res, Keep&& keep) {
	std::vector<Lattice<T>> out;
	std::vector<int> e(n, -v);
	long budget = kMaxCandidates;
	for (;;) {
		std::vector<std::vector<T>> choices(n);
		long total = 1;
		for (int i = 0; i + 1 < n; ++i) {
			choices[i] = res(e[i]);
			for (int j = i + 1; j < n; ++j) {
				total *= long(choices[i].size());
				if (total > budget) throw budget_error("lattice enumeration exceeds the work budget");
			}
		}
		budget -= total;
		// slots (i, j), i < j, filled in row-major order
		std::vector<std::pair<int, int>> slots;
		for (int i = 0; i < n; ++i)
			for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
		Mat<T> h(n, n);
		for (int i = 0; i < n; ++i) h(i, i) = T(pow_p(p, e[i]));
		std::vector<std::size_t> idx(slots.size(), 0);
		for (;;) {
			for (std::size_t s = 0; s < slots.size(); ++s) h(slots[s].first, slots[s].second) = choices[slots[s].first][idx[s]];
			if (keep(h)) out.push_back({h, Mat<T>(), e});
			std::size_t s = 0;
			for (; s < slots.size(); ++s) {
				if (++idx[s] < choices[slots[s].first].size()) break;
				idx[s] = 0;
			}
			if (s == slots.size()) break;
		}
		int k = 0;
		for (; k < n; ++k) {
			if (++e[k] <= 0) break;
			e[k] = -v;
		}
		if (k == n) break;
	}
	return out;
}

struct GlCoords {
	MatQ K, C, D;
};

GlCoords gl_coords(const Triple<Q>& x) {
	int n = x.n();
	MatQ K = krylov(x.A, x.b, n);
	MatQ D = cokrylov(x.A, x.c, n) * K;
	if (is_zero(det(D))) throw domain_error("orbital integral needs d_n(X) != 0");
	return {K, inverse(K) * x.A * K, D};
}

// sum over admissible lattices of eta(det g_Lambda), un-normalized
int signed_sum(const Triple<Q>& x, const Local& ctx, long* count = nullptr) {
	auto ls = admissible_lattices_gl(x, ctx);
	int s = 0;
	for (auto& l : ls) s += eta(det(l.basis), ctx);
	if (count) *count = long(ls.size());
	return s;
}

}  // namespace

std::string side_name(Side s) { return s == Side::gl ? "gl" : "unitary"; }

std::vector<Lattice<Q>> admissible_lattices_gl(const Triple<Q>& x, const Local& ctx) {
	int n = x.n();
	GlCoords k = gl_coords(x);
	long p = ctx.p;
	// Lambda+ inside Lambda- fails: nothing to count
	if (!integral(k.D, p)) return {};
	int v = valuation(det(k.D), p);
	auto ls = enumerate<Q>(
		n, v, p, [&](int e) { return residues_f(p, v, e); },
		[&](const MatQ& h) {
			MatQ hi = inverse(h);
			return integral(hi, p) && integral(k.D * h, p) && integral(hi * k.C * h, p);
		});
	for (auto& l : ls) l.basis = k.K * l.hnf;
	return ls;
}

OrbitalReport orbital_gl(const Triple<Q>& x, const Local& ctx) {
	OrbitalReport r;
	r.side = Side::gl;
	r.a = invariants(x);
	r.p = ctx.p;
	GlCoords k = gl_coords(x);
	r.bound = integral(k.D, ctx.p) ? valuation(det(k.D), ctx.p) : 0;
	int s = signed_sum(x, ctx, &r.lattices);
	r.value = Q(eta_tilde(x, ctx) * s);
	return r;
}

std::vector<Lattice<QE>> selfdual_lattices_u(const HermitianPair& x, const HermitianForm& phi, const Local& ctx) {
	if (ctx.kind != Kind::inert) throw domain_error("unitary lattices need an inert place");
	int n = x.n();
	if (u_stratum(x, phi) != n) throw domain_error("orbital integral needs d_n(X) != 0");
	long p = ctx.p;
	Q eps(ctx.eps);
	MatE K = krylov(x.A, x.b, n);
	MatE C = inverse(K) * x.A * K;
	MatE D = adjoint(K) * phi.gram * K;
	if (!integral(D, p)) return {};
	int v = valuation(to_base(det(D)), p);
	auto ls = enumerate<QE>(
		n, v, p, [&](int e) { return residues_e(p, v, e, eps); },
		[&](const MatE& h) {
			MatE hi = inverse(h);
			if (!integral(hi, p) || !integral(hi * C * h, p)) return false;
			MatE g = adjoint(h) * D * h;
			return integral(g, p) && valuation(to_base(det(g)), p) == 0;
		});
	for (auto& l : ls) l.basis = K * l.hnf;
	return ls;
}

OrbitalReport orbital_u(const HermitianPair& x, const HermitianForm& phi, const Local& ctx) {
	OrbitalReport r;
	r.side = Side::unitary;
	r.a = u_invariants(x, phi);
	r.p = ctx.p;
	Q dn = det(krylov_model(r.a).D);
	r.bound = integral(dn, ctx.p) ? valuation(dn, ctx.p) : 0;
	r.lattices = long(selfdual_lattices_u(x, phi, ctx).size());
	r.value = Q(r.lattices);
	return r;
}

Q toy_gl_orbital(const Q& a, const Local& ctx) {
	if (ctx.kind != Kind::inert) throw domain_error("the torus example needs an inert place");
	if (is_zero(a)) {
		// sum_{k>=0} (-1)^k p^{-ks} = 1/(1 + p^{-s}), twice, at s = 0
		return Q(1, 2) + Q(1, 2);
	}
	// t with 0 <= v(t) <= v(a)
	Q s = 0;
	for (int k = 0; k <= valuation(a, ctx.p); ++k) s += (k % 2) ? -1 : 1;
	return s;
}

Q toy_u_orbital(const Q& a, NormClass nu, const Local& ctx) {
	if (ctx.kind != Kind::inert) throw domain_error("the torus example needs an inert place");
	if (is_zero(a)) return 1;
	Q t = nu == NormClass::norm ? a : a * ctx.p;
	return (is_norm(t, ctx) && valuation(t, ctx.p) >= 0) ? 1 : 0;
}

std::vector<ToyCase> toy_transfer_check(const Local& ctx, int vmax) {
	std::vector<Q> as{Q(0)};
	for (int v = -vmax; v <= vmax; ++v)
		for (long u : {1L, ctx.eps, -1L}) as.push_back(Q(u) * pow_p(ctx.p, v));
	std::vector<ToyCase> out;
	for (auto& a : as) {
		ToyCase c{a, toy_gl_orbital(a, ctx), toy_u_orbital(a, NormClass::norm, ctx), toy_u_orbital(a, NormClass::non_norm, ctx)};
		// the non-norm class carries the zero function, so only nu = 1 counts
		c.ok = c.gl == c.u_norm;
		out.push_back(c);
	}
	return out;
}

Triple<Q> gl_representative(const Invariants<Q>& a) {
	KrylovModel k = krylov_model(a);
	int n = k.C.r;
	MatQ b(n, 1), c(1, n);
	b(0, 0) = 1;
	for (int j = 0; j < n; ++j) c(0, j) = k.D(0, j);
	return Triple<Q>(k.C, b, c);
}

URepresentative u_representative(const Invariants<Q>& a, const Local& ctx) {
	KrylovModel k = krylov_model(a);
	int n = k.C.r;
	MatQ b(n, 1);
	b(0, 0) = 1;
	return {{lift(k.C, ctx), lift(b, ctx)}, HermitianForm(lift(k.D, ctx))};
}

namespace {

Invariants<Q> random_point(int n, Rng& rng, long p) {
	Invariants<Q> a;
	auto draw = [&] { return rng.uniform(0, 5) == 0 ? Q(0) : rng.padic(p, -1, 2); };
	for (int i = 0; i < n; ++i) a.a.push_back(draw());
	for (int i = 0; i < n; ++i) a.b.push_back(draw());
	return a;
}

FlCase run_case(const Invariants<Q>& a, const Local& ctx, std::uint64_t seed) {
	Rng rng(seed);
	int n = int(a.a.size());
	FlCase c;
	c.a = a;
	Triple<Q> x = act(rng.invertible(n, 3), gl_representative(a));
	c.gl = orbital_gl(x, ctx);
	if (ctx.kind == Kind::split) {
		// E_v = F_v x F_v: the unitary side is a second gl~ integral
		Triple<Q> y = act(rng.invertible(n, 3), gl_representative(a));
		c.u = orbital_gl(y, ctx);
		c.u.side = Side::unitary;
		c.ok = c.gl.value == c.u.value;
		return c;
	}
	URepresentative u = u_representative(a, ctx);
	MatE g = rng.invertible_e(n, ctx), gi = inverse(g);
	HermitianPair xu = u_act(g, u.x);
	HermitianForm phi(adjoint(gi) * u.phi.gram * gi);
	c.cls = classify_form_local(phi, ctx);
	c.u = orbital_u(xu, phi, ctx);
	if (c.cls == FormClass::phi0)
		c.ok = c.gl.value == c.u.value;
	else
		c.ok = is_zero(c.gl.value) && is_zero(c.u.value);
	return c;
}

}  // namespace

FlResult fl_check(int n, const Local& ctx, int N, long samples, std::uint64_t seed) {
	if (n != 1 && n != 2) throw domain_error("fl_check covers n = 1 and n = 2");
	std::vector<Invariants<Q>> points;
	long p = ctx.p;
	if (n == 1) {
		std::vector<Q> alphas{Q(0)};
		for (int k = -2; k <= 3; ++k)
			for (long u = 1; u < p; ++u) alphas.push_back(Q(u) * pow_p(p, k));
		for (int v = -2; v <= N; ++v)
			for (long u = 1; u < p; ++u)
				for (auto& al : alphas) points.push_back({{-al}, {Q(u) * pow_p(p, v)}});
	} else {
		Rng rng(seed);
		while (long(points.size()) < samples) {
			Invariants<Q> a = random_point(n, rng, p);
			auto m = continued_moments(a, 3);
			Q d2 = m[0] * m[2] - m[1] * m[1];
			if (is_zero(d2) || valuation(d2, p) > N) continue;
			points.push_back(a);
		}
	}
	FlResult res;
	res.cases.resize(points.size());
	parallel_for(int(points.size()), [&](int i) { res.cases[i] = run_case(points[i], ctx, mix_seed(seed, std::uint64_t(i))); });
	res.report.config = "fl n=" + std::to_string(n) + " p=" + std::to_string(p) + " N=" + std::to_string(N);
	for (auto& c : res.cases) {
		++res.report.points_tested;
		if (!c.ok) ++res.report.failures;
	}
	return res;
}

bool is_instable(const std::vector<Translate>& f, const std::vector<Invariants<Q>>& sample, const Local& ctx) {
	for (auto& a : sample) {
		Triple<Q> x = gl_representative(a);
		int et = eta_tilde(x, ctx);
		Q total = 0;
		// O(f_g)(X) = sum over lattices admissible for g^-1 X
		for (auto& t : f) total += t.coef * et * signed_sum(act(inverse(t.g), x), ctx);
		if (!is_zero(total)) return false;
	}
	return true;
}

}  // namespace jrlab::orbital
