#include <algorithm>
#include <functional>
#include <memory>
#include <random>

#include "cones.hpp"
#include "parallel.hpp"

namespace jrlab::cones {

namespace {

using Task = std::function<CheckReport()>;

std::vector<CheckReport> run_tasks(const std::vector<Task>& tasks) {
	std::vector<CheckReport> out(tasks.size());
	parallel_for(int(tasks.size()), [&](int i) { out[i] = tasks[i](); });
	return out;
}

class Points {
public:
	Points(std::uint64_t seed, int n, long long scale) : eng_(seed), n_(n), scale_(scale) {}

	long long coin_range(bool big) { return big ? 1000000 : 30; }
	long long draw(long long r) { return std::uniform_int_distribution<long long>(-r, r)(eng_); }

	IVec full(bool big) {
		IVec h(n_ + 1);
		for (auto& x : h) x = draw(coin_range(big)) * scale_;
		return h;
	}
	// constant on blocks; the block of e_0 is zero when z_only is set
	IVec on_blocks(const Parab& p, bool big, bool z_only) {
		IVec h(n_ + 1, 0);
		for (int k = 0; k < p.m(); ++k) {
			long long c = (z_only && k == p.t) ? 0 : draw(coin_range(big)) * scale_;
			for (int b = 0; b <= n_; ++b)
				if (p.blocks[k] >> b & 1) h[b] = c;
		}
		return h;
	}
	// T in a_P with coordinate sum zero
	IVec sum_zero(const Parab& p, bool big) {
		IVec c = on_blocks(p, big, false);
		long long tot = 0;
		for (auto x : c) tot += x;
		for (auto& x : c) x = x * (n_ + 1) - tot;
		return c;
	}

private:
	std::mt19937_64 eng_;
	int n_;
	long long scale_;
};

bool is_zero_vec(const IVec& v) {
	return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

std::string pair_name(const char* what, const Parab& p, const Parab& q) {
	return std::string(what) + " " + label(p) + " <= " + label(q);
}

}  // namespace

std::vector<CheckReport> structure_suite(int n) {
	std::vector<CheckReport> out;
	auto all = enumerate_parabolic_subspaces(n);
	CheckReport roots{"pi bases n=" + std::to_string(n)};
	for (auto& p : all)
		for (auto& q : all) {
			if (!contained(p, q)) continue;
			++roots.points_tested;
			auto a = pi_rel(p, q), b = pihat_rel(p, q);
			bool ok = a.size() == b.size() && int(a.size()) == p.m() - q.m();
			for (size_t i = 0; ok && i < a.size(); ++i)
				for (size_t j = i + 1; j < a.size(); ++j)
					ok = ok && sgn(dot(a[i], a[j])) <= 0 && sgn(dot(b[i], b[j])) >= 0;
			// dual up to positive scalars: one positive entry per row and column
			for (size_t i = 0; ok && i < a.size(); ++i) {
				int row = 0, col = 0;
				for (size_t j = 0; j < a.size(); ++j) {
					int s = sgn(dot(a[i], b[j])), t = sgn(dot(a[j], b[i]));
					if (s < 0 || t < 0) ok = false;
					row += s > 0;
					col += t > 0;
				}
				ok = ok && row == 1 && col == 1;
			}
			if (!ok) ++roots.failures;
		}
	out.push_back(roots);

	CheckReport rho{"rho n=" + std::to_string(n)}, flags{"flag form n=" + std::to_string(n)};
	for (auto& p : all) {
		++rho.points_tested;
		++flags.points_tested;
		Vec u = rho_underline(p), d = two_rho_difference(p);
		d.back() = 0;
		if (u != d) ++rho.failures;
		if (from_flag(n, to_flag(p)) != p) ++flags.failures;
	}
	out.push_back(rho);
	out.push_back(flags);
	return out;
}

std::vector<CheckReport> identity_suite(int n, long points, std::uint64_t seed) {
	auto e = std::make_shared<Engine>(n);
	const long long L = e->scale();
	const int top = e->top();
	std::vector<Task> tasks;
	auto seed_of = [&](std::uint64_t k) { return mix_seed(seed, k); };

	for (int p = 0; p < e->size(); ++p)
		for (int q = 0; q < e->size(); ++q) {
			if (!e->le(p, q)) continue;
			// tau^Q_P(H) = sigma^Q_P(r1 H) on a_P
			tasks.push_back([=, s = seed_of(tasks.size())] {
				Points pts(s, n, L);
				return sample_generic(
					pair_name("sig-tau", e->at(p), e->at(q)), points,
					[&](bool big) { return pts.on_blocks(e->at(p), big, false); },
					[&](const IVec& h) { return e->tau(p, q, h) == e->sigma(p, q, r1(h)); });
			});
			// sum over Q <= S <= P is 1 exactly when Q = P
			tasks.push_back([=, s = seed_of(tasks.size())] {
				Points pts(s, n, L);
				return sample_generic(
					pair_name("langlands", e->at(p), e->at(q)), points, [&](bool big) { return pts.full(big); },
					[&](const IVec& h) { return e->langlands_sum(p, q, h) == (p == q ? 1 : 0); });
			});
		}

	for (int p = 0; p < e->size(); ++p) {
		std::string lp = label(e->at(p));
		// tau^_P(H) = sigma^_P(r^1 H)
		tasks.push_back([=, s = seed_of(tasks.size())] {
			Points pts(s, n, L);
			return sample_generic(
				"sig-tau-hat " + lp, points, [&](bool big) { return pts.full(big); },
				[&](const IVec& h) { return e->tau_hat(p, top, h) == e->sigma_hat(p, top, rh1(h)); });
		});
		tasks.push_back([=, s = seed_of(tasks.size())] {
			Points pts(s, n, L);
			struct HX {
				IVec h, x;
			};
			return sample_generic(
				"upgamma " + lp, points, [&](bool big) { return HX{pts.full(big), pts.full(big)}; },
				[&](const HX& a) {
					int rhs = 0;
					for (int r = 0; r < e->size(); ++r)
						if (e->le(p, r)) rhs += e->sigma_hat(p, r, a.h) * e->b_function(r, a.h, a.x);
					return e->sigma_hat(p, top, a.h - a.x) == rhs;
				});
		});
		tasks.push_back([=, s = seed_of(tasks.size())] {
			Points pts(s, n, L);
			struct HT {
				IVec h, t;
			};
			return sample_generic(
				"gammab " + lp, points,
				[&](bool big) { return HT{pts.on_blocks(e->at(p), big, true), pts.sum_zero(e->at(p), big)}; },
				[&](const HT& a) {
					return e->gamma_prime(p, a.h - a.t, rh2(a.h)) == e->b_function(p, a.h - r1(a.t), r2(a.t) + rh2(a.h));
				});
		});
		if (p == top) continue;
		// B_P(., X) has compact support on z_P: far points give 0
		tasks.push_back([=, s = seed_of(tasks.size())] {
			Points pts(s, n, L);
			struct HX {
				IVec h, x;
			};
			return sample_generic(
				"support " + lp, points,
				[&](bool big) {
					IVec h;
					do h = pts.on_blocks(e->at(p), big, true);
					while (is_zero_vec(h));
					return HX{times(1000, h), pts.full(false)};
				},
				[&](const HX& a) { return e->b_function(p, a.h, a.x) == 0; });
		});
	}
	return run_tasks(tasks);
}

namespace {

// Everything about one (descent, R) configuration that the checks share.
struct DescentConfig {
	const Engine* e = nullptr;
	Descent d;
	ParabProd r;
	Families fam;
	std::string name;
	std::vector<ParabProd> minus;	// per engine index, empty when M1 is not contained
	std::vector<ParabProd> ups;	// S >= R
	std::vector<int> minus_up;	// per engine index, position of its minus in ups or -1
	WeightList pihat_r;
	std::vector<WeightList> pihat_up;	// R -> ups[k]
	std::vector<std::vector<WeightList>> pi_between;	// ups[a] -> ups[b]
	unsigned zm1 = 0;

	WeightList prod_pi(const ParabProd& a, const ParabProd& b) const {
		WeightList w;
		for (size_t i = 0; i < a.size(); ++i)
			for (auto& v : pi_rel(a[i], b[i])) w.push_back(scaled(v, e->scale()));
		return w;
	}
	WeightList prod_pihat(const ParabProd& a, const ParabProd& b) const {
		WeightList w;
		for (size_t i = 0; i < a.size(); ++i)
			for (auto& v : pihat_rel(a[i], b[i])) w.push_back(scaled(v, e->scale()));
		return w;
	}
};

DescentConfig make_config(const Engine& e, const Descent& d, const ParabProd& r) {
	DescentConfig c;
	c.e = &e;
	c.d = d;
	c.r = r;
	c.fam = families_F(e, r, d);
	int n = e.n();
	c.name = "V+=" + std::to_string(d.vplus);
	for (unsigned v : d.v) c.name += " V=" + std::to_string(v);
	c.name += " R=";
	for (auto& x : r) c.name += "[" + label(x) + "]";
	for (unsigned v : d.v) c.zm1 |= v;
	for (auto& s : product_parabolics(n, d))
		if (contained(r, s)) c.ups.push_back(s);
	c.minus.resize(e.size());
	c.minus_up.assign(e.size(), -1);
	for (int p = 0; p < e.size(); ++p) {
		if (!contains_m1(e.at(p), d)) continue;
		c.minus[p] = parabolic_minus(e.at(p), d);
		auto it = std::find(c.ups.begin(), c.ups.end(), c.minus[p]);
		if (it != c.ups.end()) c.minus_up[p] = int(it - c.ups.begin());
	}
	for (auto& x : r)
		for (auto& v : pihat_abs(x)) c.pihat_r.push_back(scaled(v, e.scale()));
	for (auto& s : c.ups) {
		c.pihat_up.push_back(c.prod_pihat(r, s));
	}
	c.pi_between.resize(c.ups.size());
	for (size_t a = 0; a < c.ups.size(); ++a)
		for (size_t b = 0; b < c.ups.size(); ++b)
			c.pi_between[a].push_back(contained(c.ups[a], c.ups[b]) ? c.prod_pi(c.ups[a], c.ups[b]) : WeightList{});
	return c;
}

int sign_pow(int k) { return k % 2 ? -1 : 1; }

// random point of z_R: constant on the blocks of each factor away from e_0
IVec point_in_zr(const ParabProd& r, int n, std::mt19937_64& g, long long range, long long scale) {
	IVec h(n + 1, 0);
	std::uniform_int_distribution<long long> u(-range, range);
	for (auto& x : r)
		for (int k = 0; k < x.m(); ++k) {
			if (k == x.t) continue;
			long long c = u(g) * scale;
			for (int b = 0; b <= n; ++b)
				if (x.blocks[k] >> b & 1) h[b] = c;
		}
	return h;
}

// The Levi blocks of M~: the blocks of each factor away from e_0, and W.
struct Levi {
	std::vector<unsigned> blocks;
	unsigned w = 0;
};

Levi levi_of(const DescentConfig& c) {
	Levi l;
	l.w = c.d.vplus | zero_bit(c.e->n());
	for (auto& x : c.r)
		for (int k = 0; k < x.m(); ++k) {
			if (k == x.t) l.w |= x.blocks[k];
			else l.blocks.push_back(x.blocks[k]);
		}
	l.blocks.push_back(l.w);
	return l;
}

int block_position(const Parab& p, unsigned b) {
	for (int k = 0; k < p.m(); ++k)
		if (p.blocks[k] == b) return k;
	return -1;
}

CheckReport check_structure(const DescentConfig& c) {
	const Engine& e = *c.e;
	CheckReport rep{"convexity " + c.name, 2, 0, 0};
	Levi l = levi_of(c);
	auto sorted_blocks = [](std::vector<unsigned> b) {
		std::sort(b.begin(), b.end());
		return b;
	};
	auto levi_sorted = sorted_blocks(l.blocks);
	// Sigma(R~) as ordered pairs (U, U'): U comes before U'
	std::vector<std::pair<unsigned, unsigned>> sig;
	for (auto& x : c.r)
		for (int a = 0; a < x.m(); ++a)
			for (int b = a + 1; b < x.m(); ++b) {
				unsigned u = a == x.t ? l.w : x.blocks[a], v = b == x.t ? l.w : x.blocks[b];
				sig.push_back({u, v});
			}
	std::vector<int> conv;
	for (int p = 0; p < e.size(); ++p) {
		if (sorted_blocks(e.at(p).blocks) != levi_sorted) continue;
		bool ok = std::all_of(sig.begin(), sig.end(), [&](auto& uv) {
			return block_position(e.at(p), uv.first) < block_position(e.at(p), uv.second);
		});
		if (ok) conv.push_back(p);
	}
	auto f0 = c.fam.f0;
	std::sort(f0.begin(), f0.end());
	if (conv != f0) ++rep.failures;
	for (int p : c.fam.fbar)
		if (std::none_of(c.fam.f0.begin(), c.fam.f0.end(), [&](int q) { return e.le(q, p); })) {
			++rep.failures;
			break;
		}
	return rep;
}

CheckReport check_lem51(const DescentConfig& c, long points, std::uint64_t seed, bool closure) {
	const Engine& e = *c.e;
	int n = e.n();
	std::mt19937_64 g(seed);
	auto draw = [&](bool big) {
		IVec h(n + 1, 0);
		std::uniform_int_distribution<long long> u(big ? -1000000 : -30, big ? 1000000 : 30);
		for (int b = 0; b < n; ++b)
			if (c.zm1 >> b & 1) h[b] = u(g);
		return h;
	};
	int sign = sign_pow(total_blocks(c.r) - int(c.r.size()));
	const auto& fam = closure ? c.fam.fbar : c.fam.f;
	return sample_generic((closure ? "closed cone " : "open cone ") + c.name, points, draw, [&](const IVec& h) {
		int l = 0;
		for (int p : fam) l += e.eps(p, e.top()) * e.sigma_hat(p, e.top(), h);
		return closure ? l == chi_closed_neg(c.pihat_r, h) : l == sign * chi(c.pihat_r, h);
	});
}

CheckReport check_lem42(const DescentConfig& c, int p, long points, std::uint64_t seed) {
	const Engine& e = *c.e;
	std::mt19937_64 g(seed);
	std::vector<int> qs;
	std::vector<WeightList> ws;
	for (int q : c.fam.fbar)
		if (e.le(q, p)) {
			qs.push_back(q);
			ws.push_back(c.prod_pi(c.r, c.minus[q]));
		}
	bool in_f0 = std::find(c.fam.f0.begin(), c.fam.f0.end(), p) != c.fam.f0.end();
	return sample_generic(
		"relative sum " + label(e.at(p)) + " " + c.name, points,
		[&](bool big) { return point_in_zr(c.r, e.n(), g, big ? 1000000 : 30, 1); },
		[&](const IVec& x) {
			int l = 0;
			for (size_t k = 0; k < qs.size(); ++k) l += e.eps(qs[k], p) * chi(ws[k], x) * e.sigma_hat(qs[k], p, x);
			return l == (in_f0 ? 1 : 0);
		});
}

// Orthogonal-positive family on F0: a translate plus a zonotope vertex per
// chamber, Y_P = Y0 + sum over block pairs of c * coroot oriented by P.
struct Family {
	std::vector<IVec> y;	// per engine index, F0 members
	std::vector<IVec> yq;	// per engine index, Fbar members
	long long scale = 1;
	bool consistent = true;
};

Family make_family(const DescentConfig& c, std::mt19937_64& g) {
	const Engine& e = *c.e;
	int n = e.n();
	Levi l = levi_of(c);
	std::uniform_int_distribution<int> cu(0, 6), du(1, 2), yu(-5, 5);
	Vec y0(n + 1, Q(0));
	for (unsigned b : l.blocks) y0 = y0 + indicator(n, b, Q(yu(g)));
	struct Pair {
		unsigned u, v;
		Q c;
	};
	std::vector<Pair> pairs;
	for (size_t a = 0; a < l.blocks.size(); ++a)
		for (size_t b = a + 1; b < l.blocks.size(); ++b) pairs.push_back({l.blocks[a], l.blocks[b], Q(cu(g), du(g))});
	auto coroot = [&](unsigned u, unsigned v) {
		return indicator(n, u, Q(1, std::popcount(u))) - indicator(n, v, Q(1, std::popcount(v)));
	};
	std::vector<Vec> y(e.size()), yq(e.size());
	Family fam;
	for (int p : c.fam.f0) {
		Vec v = y0;
		for (auto& pr : pairs) {
			bool before = block_position(e.at(p), pr.u) < block_position(e.at(p), pr.v);
			Vec cr = before ? coroot(pr.u, pr.v) : coroot(pr.v, pr.u);
			for (auto& x : cr) x *= pr.c;
			v = v + cr;
		}
		y[p] = v;
	}
	for (int q : c.fam.fbar) {
		bool have = false;
		for (int p : c.fam.f0) {
			if (!e.le(p, q)) continue;
			Vec v = proj_a(e.at(q), y[p]);
			if (!have) yq[q] = v;
			else if (v != yq[q]) fam.consistent = false;
			have = true;
		}
		if (!have) fam.consistent = false;
	}
	mpz_class m = 1;
	for (auto* vs : {&y, &yq})
		for (auto& v : *vs)
			for (auto& x : v) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), x.get_den().get_mpz_t());
	fam.scale = m.get_si();
	fam.y.resize(e.size());
	fam.yq.resize(e.size());
	for (int p : c.fam.f0) fam.y[p] = scaled(y[p], fam.scale);
	for (int q : c.fam.fbar)
		if (!yq[q].empty()) fam.yq[q] = scaled(yq[q], fam.scale);
	return fam;
}

// B_R(H, Y) as defined for the descent: sum over S >= R of sigma_R^S(H) times
// the signed sum over P in F_S of sigma^_P(H - Y_P)
int b_descent(const DescentConfig& c, const Family& fam, int a, const IVec& h) {
	const Engine& e = *c.e;
	int tot = 0;
	for (size_t b = 0; b < c.ups.size(); ++b) {
		if (!contained(c.ups[a], c.ups[b])) continue;
		int sg = chi(c.pi_between[a][b], h), inner = 0;
		for (int q : c.fam.fbar)
			if (c.minus_up[q] == int(b)) inner += e.eps(q, e.top()) * e.sigma_hat(q, e.top(), h - fam.yq[q]);
		tot += sg * inner;
	}
	return tot;
}

std::vector<CheckReport> check_families(const DescentConfig& c, long points, int trials, std::uint64_t seed) {
	const Engine& e = *c.e;
	std::mt19937_64 g(seed);
	CheckReport star{"alternating expansion " + c.name}, gam{"chamber sum " + c.name}, fam_rep{"family " + c.name};
	int r_up = int(std::find(c.ups.begin(), c.ups.end(), c.r) - c.ups.begin());
	for (int t = 0; t < trials; ++t) {
		Family fam = make_family(c, g);
		++fam_rep.points_tested;
		if (!fam.consistent) {
			++fam_rep.failures;
			continue;
		}
		auto draw = [&](bool big) { return point_in_zr(c.r, e.n(), g, big ? 1000000 : 30, fam.scale); };
		auto s1 = sample_generic(star.config, points, draw, [&](const IVec& h) {
			int l = 0;
			for (int p : c.fam.f) l += e.eps(p, e.top()) * e.sigma_hat(p, e.top(), h - fam.yq[p]);
			int rr = 0;
			for (size_t b = 0; b < c.ups.size(); ++b)
				rr += sign_pow(total_blocks(c.r) - total_blocks(c.ups[b])) * chi(c.pihat_up[b], h) *
					  b_descent(c, fam, int(b), h);
			return l == rr;
		});
		auto s2 = sample_generic(gam.config, points, draw, [&](const IVec& h) {
			int rb = 0;
			for (int p : c.fam.f0) rb += e.b_function(p, h, fam.y[p], false);
			return b_descent(c, fam, r_up, h) == rb;
		});
		for (auto [dst, src] : {std::pair{&star, &s1}, std::pair{&gam, &s2}}) {
			dst->points_tested += src->points_tested;
			dst->failures += src->failures;
			dst->rejected += src->rejected;
		}
	}
	return {fam_rep, star, gam};
}

}  // namespace

std::vector<CheckReport> descent_suite(int n, int max_i, long points, std::uint64_t seed) {
	auto e = std::make_shared<Engine>(n);
	std::vector<std::shared_ptr<DescentConfig>> configs;
	for (auto& d : descents(n, max_i))
		for (auto& r : product_parabolics(n, d)) configs.push_back(std::make_shared<DescentConfig>(make_config(*e, d, r)));
	std::vector<std::vector<CheckReport>> parts(configs.size());
	parallel_for(int(configs.size()), [&](int i) {
		const auto& c = *configs[i];
		auto s = [&](std::uint64_t k) { return mix_seed(seed, std::uint64_t(i) * 4096 + k); };
		auto& out = parts[i];
		out.push_back(check_structure(c));
		out.push_back(check_lem51(c, points, s(3), true));
		out.push_back(check_lem51(c, points, s(2), false));
		CheckReport rel{"relative sums " + c.name};
		for (size_t k = 0; k < c.fam.fbar.size(); ++k) {
			auto x = check_lem42(c, c.fam.fbar[k], points, s(100 + k));
			rel.points_tested += x.points_tested;
			rel.failures += x.failures;
			rel.rejected += x.rejected;
		}
		out.push_back(rel);
		for (auto& x : check_families(c, points, 4, s(1))) out.push_back(x);
	});
	std::vector<CheckReport> out;
	for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
	return out;
}

}  // namespace jrlab::cones
