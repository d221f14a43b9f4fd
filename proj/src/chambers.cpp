#include "chambers.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>

namespace jrlab::chambers {

using cones::chi;
using cones::chi_closed_neg;
using cones::WeightList;
using cones::operator-;

namespace {

std::vector<Facet> ordered_partitions(unsigned rest) {
	if (!rest) return {Facet{}};
	std::vector<Facet> out;
	for (unsigned s = rest; s; s = (s - 1) & rest)
		for (auto& tail : ordered_partitions(rest & ~s)) {
			Facet f{s};
			f.insert(f.end(), tail.begin(), tail.end());
			out.push_back(std::move(f));
		}
	return out;
}

// fundamental weights of Q relative to G, scaled by m: one per cut between blocks
WeightList facet_weights(int m, const Facet& q) {
	WeightList out;
	unsigned acc = 0;
	for (size_t k = 0; k + 1 < q.size(); ++k) {
		acc |= q[k];
		IVec w(m);
		for (int i = 0; i < m; ++i) w[i] = (acc >> i & 1 ? m : 0) - std::popcount(acc);
		out.push_back(w);
	}
	return out;
}

Facet chamber_facet(const Chamber& c) {
	Facet f;
	for (int x : c.perm) f.push_back(1u << (x - 1));
	return f;
}

long long lcm_upto(int m) {
	long long l = 1;
	for (int k = 2; k <= m; ++k) l = std::lcm(l, (long long)k);
	return l;
}

}  // namespace

Complex::Complex(int m) : m_(m) {
	if (m < 1 || m > 5) throw std::invalid_argument("chamber guard: need 1 <= m <= 5");
	std::vector<int> p(m);
	std::iota(p.begin(), p.end(), 1);
	do ch_.push_back({p});
	while (std::next_permutation(p.begin(), p.end()));
	for (auto& c : ch_) {
		std::vector<int> pos(m);
		for (int k = 0; k < m; ++k) pos[c.perm[k] - 1] = k;
		pos_.push_back(pos);
	}
	adj_.resize(size());
	for (int a = 0; a < size(); ++a)
		for (int k = 0; k + 1 < m; ++k) {
			Chamber c = ch_[a];
			std::swap(c.perm[k], c.perm[k + 1]);
			adj_[a].push_back(index(c));
		}
	bfs_.assign(size() * size(), -1);
	for (int s = 0; s < size(); ++s) {
		std::deque<int> queue{s};
		bfs_[s * size() + s] = 0;
		while (!queue.empty()) {
			int u = queue.front();
			queue.pop_front();
			for (int v : adj_[u])
				if (bfs_[s * size() + v] < 0) {
					bfs_[s * size() + v] = bfs_[s * size() + u] + 1;
					queue.push_back(v);
				}
		}
	}
	facets_ = ordered_partitions((1u << m) - 1);
}

int Complex::index(const Chamber& c) const {
	auto it = std::lower_bound(ch_.begin(), ch_.end(), c);
	if (it == ch_.end() || *it != c) throw std::invalid_argument("not a chamber of this complex");
	return int(it - ch_.begin());
}

std::vector<Root> Complex::roots() const {
	std::vector<Root> out;
	for (int i = 1; i <= m_; ++i)
		for (int j = 1; j <= m_; ++j)
			if (i != j) out.push_back({i, j});
	return out;
}

// roots positive for P1 and negative for P2
std::vector<Root> Complex::sigma_set(int p2, int p1) const {
	std::vector<Root> out;
	for (auto a : roots())
		if (positive(p1, a) && !positive(p2, a)) out.push_back(a);
	return out;
}

int Complex::distance(int p1, int p2) const { return int(sigma_set(p2, p1).size()); }

std::vector<std::vector<int>> Complex::minimal_galleries(int p1, int p2) const {
	std::vector<std::vector<int>> out;
	std::vector<int> path{p1};
	auto walk = [&](auto&& self, int u) -> void {
		if (u == p2) {
			out.push_back(path);
			return;
		}
		for (int v : adj_[u])
			if (graph_distance(v, p2) == graph_distance(u, p2) - 1) {
				path.push_back(v);
				self(self, v);
				path.pop_back();
			}
	};
	walk(walk, p1);
	return out;
}

int Complex::adjacency_step_distance(int p, int p1, int p2) const {
	if (std::find(adj_[p1].begin(), adj_[p1].end(), p2) == adj_[p1].end())
		throw std::invalid_argument("chambers are not adjacent");
	return graph_distance(p2, p) - graph_distance(p1, p);
}

bool Complex::is_convex(const std::vector<int>& s) const {
	if (m_ > 4) throw std::invalid_argument("convexity guard: need m <= 4");
	std::vector<char> in(size(), 0);
	for (int p : s) in[p] = 1;
	for (int a : s)
		for (int b : s)
			for (auto& g : minimal_galleries(a, b))
				for (int x : g)
					if (!in[x]) return false;
	return true;
}

std::vector<int> Complex::h_plus(Root a) const {
	std::vector<int> out;
	for (int p = 0; p < size(); ++p)
		if (positive(p, a)) out.push_back(p);
	return out;
}

std::vector<int> Complex::convex_hull(const std::vector<int>& s) const {
	std::vector<char> in(size(), 0);
	for (int p : s) in[p] = 1;
	for (bool grew = true; grew;) {
		grew = false;
		for (int a = 0; a < size(); ++a)
			for (int b = 0; b < size(); ++b) {
				if (!in[a] || !in[b]) continue;
				for (int x = 0; x < size(); ++x)
					if (!in[x] && graph_distance(a, x) + graph_distance(x, b) == graph_distance(a, b)) in[x] = grew = true;
			}
	}
	std::vector<int> out;
	for (int p = 0; p < size(); ++p)
		if (in[p]) out.push_back(p);
	return out;
}

bool Complex::contained(int p, const Facet& q) const {
	size_t k = 0;
	for (unsigned c : q)
		for (int i = 0; i < std::popcount(c); ++i, ++k)
			if (!(c >> (ch_[p].perm[k] - 1) & 1)) return false;
	return k == size_t(m_);
}

std::vector<Root> Complex::simple_roots(int p, const Facet& q) const {
	std::vector<Root> out;
	const auto& w = ch_[p].perm;
	for (int k = 0; k + 1 < m_; ++k) {
		unsigned both = 1u << (w[k] - 1) | 1u << (w[k + 1] - 1);
		for (unsigned c : q)
			if ((c & both) == both) out.push_back({w[k], w[k + 1]});
	}
	return out;
}

int Complex::langlands_type_rep(const std::vector<int>& s, int p, const Facet& q) const {
	if (std::find(s.begin(), s.end(), p) == s.end()) throw std::invalid_argument("P is not in the family");
	if (std::none_of(s.begin(), s.end(), [&](int x) { return contained(x, q); }))
		throw std::invalid_argument("no member of the family lies in Q");
	int found = -1, count = 0;
	for (int p1 : s) {
		if (!contained(p1, q)) continue;
		auto d = simple_roots(p1, q);
		if (std::all_of(d.begin(), d.end(), [&](Root a) { return positive(p, a); })) {
			found = p1;
			++count;
		}
	}
	if (count != 1) throw std::logic_error("representative is not unique");
	return found;
}

// Zonotope vertices: Y_P = Y0 + sum over i < j of c_ij times the coroot
// oriented by P, plus the Weyl translates w_P T of a dominant T.
Family random_orthogonal_positive(std::uint64_t seed, const Complex& cx) {
	std::mt19937_64 g(seed);
	int m = cx.m();
	long long l = lcm_upto(m);
	std::uniform_int_distribution<int> small(-5, 5), coef(0, 6);
	IVec y0(m), t(m, 0);
	for (auto& x : y0) x = small(g);
	std::vector<std::vector<int>> c(m + 1, std::vector<int>(m + 1, 0));
	for (int i = 1; i <= m; ++i)
		for (int j = i + 1; j <= m; ++j) c[i][j] = coef(g);
	if (g() & 1) {
		for (auto& x : t) x = coef(g);
		std::sort(t.rbegin(), t.rend());
	}
	Family f;
	for (int p = 0; p < cx.size(); ++p) {
		IVec y = y0;
		for (int i = 1; i <= m; ++i)
			for (int j = i + 1; j <= m; ++j) {
				int s = cx.positive(p, {i, j}) ? 1 : -1;
				y[i - 1] += s * c[i][j];
				y[j - 1] -= s * c[i][j];
			}
		for (int k = 0; k < m; ++k) y[cx.at(p).perm[k] - 1] += t[k];
		f.y.push_back(cones::times(l, y));
	}
	return f;
}

bool is_orthogonal_positive(const Complex& cx, const Family& f) {
	for (int p = 0; p < cx.size(); ++p)
		for (int q : cx.neighbors(p)) {
			auto a = cx.sigma_set(q, p);
			if (a.size() != 1) return false;
			auto [i, j] = a[0];
			IVec d = f.y[p] - f.y[q];
			for (int k = 1; k <= cx.m(); ++k)
				if (k != i && k != j && d[k - 1] != 0) return false;
			if (d[i - 1] < 0 || d[i - 1] + d[j - 1] != 0) return false;
		}
	return true;
}

IVec y_facet(const Complex& cx, const Family& f, const Facet& q) {
	IVec out;
	for (int p = 0; p < cx.size(); ++p) {
		if (!cx.contained(p, q)) continue;
		IVec v(cx.m());
		for (unsigned b : q) {
			long long s = 0;
			for (int i = 0; i < cx.m(); ++i)
				if (b >> i & 1) s += f.y[p][i];
			if (s % std::popcount(b)) throw std::logic_error("family is off the integer grid");
			for (int i = 0; i < cx.m(); ++i)
				if (b >> i & 1) v[i] = s / std::popcount(b);
		}
		if (out.empty()) out = v;
		else if (out != v) throw std::logic_error("Y_Q depends on the chamber");
	}
	return out;
}

int psi_geometric(const Complex& cx, const std::vector<int>& s, const IVec& h, const Family& f) {
	int total = 0;
	for (auto& q : cx.facets()) {
		if (std::none_of(s.begin(), s.end(), [&](int p) { return cx.contained(p, q); })) continue;
		int sign = (q.size() - 1) % 2 ? -1 : 1;
		total += sign * chi(facet_weights(cx.m(), q), h - y_facet(cx, f, q));
	}
	return total;
}

int epsilon_lambda(const Complex& cx, int p, const IVec& lambda) {
	const auto& w = cx.at(p).perm;
	int count = 0;
	for (int k = 0; k + 1 < cx.m(); ++k) count += lambda[w[k] - 1] - lambda[w[k + 1] - 1] <= 0;
	return count % 2 ? -1 : 1;
}

int phi(const Complex& cx, int p, const IVec& lambda, const IVec& h) {
	const auto& w = cx.at(p).perm;
	auto weights = facet_weights(cx.m(), chamber_facet(cx.at(p)));
	WeightList pos, neg;
	for (int k = 0; k + 1 < cx.m(); ++k)
		(lambda[w[k] - 1] - lambda[w[k + 1] - 1] <= 0 ? pos : neg).push_back(weights[k]);
	return chi(pos, h) * chi_closed_neg(neg, h);
}

int psi_analytic(const Complex& cx, const std::vector<int>& s, const IVec& lambda, const IVec& h, const Family& f) {
	bool inside = std::any_of(s.begin(), s.end(), [&](int p) {
		const auto& w = cx.at(p).perm;
		for (int k = 0; k + 1 < cx.m(); ++k)
			if (lambda[w[k] - 1] <= lambda[w[k + 1] - 1]) return false;
		return true;
	});
	if (!inside) throw std::invalid_argument("lambda is outside the open cones of the family");
	int total = 0;
	for (int p : s) total += epsilon_lambda(cx, p, lambda) * phi(cx, p, lambda, h - f.y[p]);
	return total;
}

int below_all(const Complex& cx, const std::vector<int>& s, const IVec& h, const Family& f) {
	int r = 1;
	for (int p : s) r *= chi_closed_neg(facet_weights(cx.m(), chamber_facet(cx.at(p))), h - f.y[p]);
	return r;
}

namespace {

std::vector<int> random_convex(const Complex& cx, std::mt19937_64& g) {
	std::uniform_int_distribution<int> pick(0, cx.size() - 1), k3(1, 3);
	auto roots = cx.roots();
	std::uniform_int_distribution<int> rpick(0, int(roots.size()) - 1);
	for (;;) {
		std::vector<int> s;
		if (g() & 1) {
			for (int k = k3(g); k > 0; --k) s.push_back(pick(g));
			s = cx.convex_hull(s);
		} else {
			std::vector<char> in(cx.size(), 1);
			for (int k = k3(g); k > 0; --k) {
				std::vector<char> h(cx.size(), 0);
				for (int p : cx.h_plus(roots[rpick(g)])) h[p] = 1;
				for (int p = 0; p < cx.size(); ++p) in[p] &= h[p];
			}
			for (int p = 0; p < cx.size(); ++p)
				if (in[p]) s.push_back(p);
		}
		if (!s.empty()) return s;
	}
}

}  // namespace

std::vector<CheckReport> chamber_suite(int m, long cases, std::uint64_t seed) {
	if (m < 2 || m > 4) throw std::invalid_argument("chamber suite guard: need 2 <= m <= 4");
	Complex cx(m);
	std::string tag = " S" + std::to_string(m);
	CheckReport dist{"distance" + tag}, wall{"gallery walls" + tag}, half{"half-space convexity" + tag},
		key{"adjacent step" + tag};
	for (int a = 0; a < cx.size(); ++a)
		for (int b = 0; b < cx.size(); ++b) {
			++dist.points_tested;
			if (cx.distance(a, b) != cx.graph_distance(a, b)) ++dist.failures;
			auto target = cx.sigma_set(b, a);
			std::sort(target.begin(), target.end());
			for (auto& gal : cx.minimal_galleries(a, b)) {
				++wall.points_tested;
				std::vector<Root> walls;
				bool ok = int(gal.size()) == cx.graph_distance(a, b) + 1;
				for (size_t k = 0; k + 1 < gal.size(); ++k) {
					auto s = cx.sigma_set(gal[k + 1], gal[k]);
					ok = ok && s.size() == 1;
					walls.insert(walls.end(), s.begin(), s.end());
				}
				std::sort(walls.begin(), walls.end());
				if (!ok || walls != target) ++wall.failures;
			}
			for (int b2 : cx.neighbors(b)) {
				++key.points_tested;
				auto alpha = cx.sigma_set(b2, b)[0];
				auto toward = cx.sigma_set(a, b);
				bool in = std::find(toward.begin(), toward.end(), alpha) != toward.end();
				if (cx.adjacency_step_distance(a, b, b2) != (in ? -1 : 1)) ++key.failures;
			}
		}
	for (auto a : cx.roots()) {
		++half.points_tested;
		if (!cx.is_convex(cx.h_plus(a))) ++half.failures;
	}

	CheckReport conv{"random convex families" + tag}, fam{"orthogonal-positive families" + tag},
		rep{"langlands type" + tag}, nol{"two psi forms" + tag}, arth{"psi equivalence" + tag};
	std::mt19937_64 g(seed);
	for (long c = 0; c < cases; ++c) {
		auto s = random_convex(cx, g);
		++conv.points_tested;
		if (!cx.is_convex(s)) ++conv.failures;
		for (int p : s)
			for (auto& q : cx.facets()) {
				if (std::none_of(s.begin(), s.end(), [&](int x) { return cx.contained(x, q); })) continue;
				++rep.points_tested;
				try {
					int p1 = cx.langlands_type_rep(s, p, q);
					if (!cx.contained(p1, q)) ++rep.failures;
				} catch (const std::logic_error&) {
					++rep.failures;
				}
			}
		Family f = random_orthogonal_positive(g(), cx);
		++fam.points_tested;
		try {
			for (auto& q : cx.facets()) y_facet(cx, f, q);
			if (!is_orthogonal_positive(cx, f)) ++fam.failures;
		} catch (const std::logic_error&) {
			++fam.failures;
			continue;
		}
		long long scale = lcm_upto(m);
		std::uniform_int_distribution<int> sp(0, int(s.size()) - 1);
		struct Pt {
			IVec h, lambda;
		};
		auto draw = [&](bool big) {
			long long r = big ? 1000000 : 40;
			std::uniform_int_distribution<long long> u(-r, r);
			Pt pt{IVec(m), IVec(m)};
			for (auto& x : pt.h) x = u(g) * scale;
			// strictly decreasing along a random member of the family
			std::vector<long long> vals(m);
			std::uniform_int_distribution<long long> lv(1, 1000);
			for (auto& x : vals) x = lv(g);
			std::sort(vals.rbegin(), vals.rend());
			for (int k = 1; k < m; ++k) vals[k] = std::min(vals[k], vals[k - 1] - 1);
			const auto& w = cx.at(s[sp(g)]).perm;
			for (int k = 0; k < m; ++k) pt.lambda[w[k] - 1] = vals[k];
			return pt;
		};
		auto r1 = cones::sample_generic(nol.config, 10, draw, [&](const Pt& pt) {
			return psi_geometric(cx, s, pt.h, f) == psi_analytic(cx, s, pt.lambda, pt.h, f);
		});
		auto r2 = cones::sample_generic(arth.config, 10, draw, [&](const Pt& pt) {
			int psi = psi_geometric(cx, s, pt.h, f);
			bool i = psi != 0, ii = below_all(cx, s, pt.h, f) == 1, iii = psi == 1;
			return i == ii && ii == iii;
		});
		for (auto [dst, src] : {std::pair{&nol, &r1}, std::pair{&arth, &r2}}) {
			dst->points_tested += src->points_tested;
			dst->failures += src->failures;
			dst->rejected += src->rejected;
		}
	}
	return {dist, wall, half, key, conv, fam, rep, nol, arth};
}

}  // namespace jrlab::chambers
