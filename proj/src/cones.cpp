#include "cones.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace jrlab::cones {

namespace {

int popcount(unsigned m) { return std::popcount(m); }

struct Keyed {
	int sign;
	unsigned set;
	Vec w;
};

std::vector<Keyed> pihat_keyed(const Parab& p) {
	std::vector<Keyed> out;
	unsigned acc = 0;
	for (int k = 0; k < p.t; ++k) {
		acc |= p.blocks[k];
		out.push_back({1, acc, indicator(p.n, acc)});
	}
	acc = 0;
	for (int k = p.m() - 1; k > p.t; --k) {
		acc |= p.blocks[k];
		out.push_back({-1, acc, indicator(p.n, acc, Q(-1))});
	}
	return out;
}

// blocks k and k+1 of p lie in one block of q
bool same_outer_block(const Parab& p, int k, const Parab& q) {
	unsigned both = p.blocks[k] | p.blocks[k + 1];
	for (unsigned c : q.blocks)
		if ((c & both) == both) return true;
	return false;
}

Vec adjacent_root(const Parab& p, int k) {
	unsigned a = p.blocks[k], b = p.blocks[k + 1];
	return indicator(p.n, a, Q(1, popcount(a))) - indicator(p.n, b, Q(1, popcount(b)));
}

thread_local WallScope* current_scope = nullptr;

}  // namespace

unsigned Parab::universe() const {
	unsigned u = 0;
	for (unsigned b : blocks) u |= b;
	return u;
}

unsigned coord_bit(int n, int coord) { return coord == 0 ? zero_bit(n) : 1u << (coord - 1); }

std::vector<int> coords_of(int n, unsigned mask) {
	std::vector<int> out;
	for (int k = 1; k <= n; ++k)
		if (mask & coord_bit(n, k)) out.push_back(k);
	if (mask & zero_bit(n)) out.push_back(0);
	return out;
}

std::string label(const Parab& p) {
	std::string s;
	for (int k = 0; k < p.m(); ++k) {
		if (k) s += '|';
		for (int c : coords_of(p.n, p.blocks[k])) s += std::to_string(c);
	}
	return s;
}

Parab make_parab(int n, std::vector<unsigned> blocks) {
	Parab p{n, std::move(blocks), -1};
	unsigned seen = 0;
	for (int k = 0; k < p.m(); ++k) {
		if (!p.blocks[k] || (p.blocks[k] & seen)) throw std::invalid_argument("blocks must be nonempty and disjoint");
		seen |= p.blocks[k];
		if (p.blocks[k] & zero_bit(n)) p.t = k;
	}
	if (p.t < 0) throw std::invalid_argument("no block contains e_0");
	return p;
}

Parab whole(int n, unsigned universe) { return make_parab(n, {universe}); }

std::vector<Parab> ordered_partitions(int n, unsigned universe) {
	std::vector<std::pair<std::vector<unsigned>, unsigned>> stack{{{}, universe}};
	std::vector<Parab> out;
	while (!stack.empty()) {
		auto [blocks, rest] = stack.back();
		stack.pop_back();
		if (!rest) {
			out.push_back(make_parab(n, blocks));
			continue;
		}
		for (unsigned s = rest; s; s = (s - 1) & rest) {
			auto b = blocks;
			b.push_back(s);
			stack.push_back({std::move(b), rest & ~s});
		}
	}
	std::sort(out.begin(), out.end(), [](const Parab& a, const Parab& b) {
		return a.m() != b.m() ? a.m() < b.m() : a.blocks < b.blocks;
	});
	return out;
}

std::vector<Parab> enumerate_parabolic_subspaces(int n, bool standard_only) {
	if (n < 1 || n > 4) throw std::invalid_argument("enumeration guard: need 1 <= n <= 4");
	auto all = ordered_partitions(n, (zero_bit(n) << 1) - 1);
	if (!standard_only) return all;
	std::vector<Parab> out;
	for (auto& p : all) {
		auto f = to_flag(p);
		bool ok = true;
		for (auto& w : f.flag)
			for (int k = 0; k < int(w.size()); ++k) ok = ok && w[k] == k + 1;
		if (ok) out.push_back(p);
	}
	return out;
}

// q's blocks must be unions of consecutive blocks of p
bool contained(const Parab& p, const Parab& q) {
	if (p.universe() != q.universe()) return false;
	size_t i = 0;
	for (unsigned c : q.blocks) {
		unsigned acc = 0;
		while (i < p.blocks.size() && (p.blocks[i] & ~c) == 0) acc |= p.blocks[i++];
		if (acc != c) return false;
	}
	return i == p.blocks.size();
}

int epsilon(const Parab& p, const Parab& q) { return (p.m() - q.m()) % 2 ? -1 : 1; }

FlagForm to_flag(const Parab& p) {
	FlagForm f;
	unsigned zb = zero_bit(p.n), w = 0;
	f.flag.push_back({});
	for (int k = 0; k < p.m(); ++k) {
		unsigned b = p.blocks[k] & ~zb;
		if (k == p.t) {
			f.i = int(f.flag.size()) - 1;
			f.j = f.i + (b ? 1 : 0);
		}
		if (!b) continue;
		w |= b;
		f.flag.push_back(coords_of(p.n, w));
	}
	return f;
}

Parab from_flag(int n, const FlagForm& f) {
	int s = int(f.flag.size()) - 1;
	if (s < 0 || !f.flag[0].empty()) throw std::invalid_argument("flag must start with the zero subspace");
	if (f.i < 0 || f.j > s || f.j - f.i < 0 || f.j - f.i > 1) throw std::invalid_argument("need 0 <= j - i <= 1");
	std::vector<unsigned> ws;
	for (auto& w : f.flag) {
		unsigned m = 0;
		for (int c : w) {
			if (c < 1 || c > n) throw std::invalid_argument("flag coordinate out of range");
			m |= coord_bit(n, c);
		}
		ws.push_back(m);
	}
	if (ws[s] != zero_bit(n) - 1) throw std::invalid_argument("flag must end with V");
	std::vector<unsigned> blocks;
	for (int k = 1; k <= s; ++k) {
		if ((ws[k - 1] & ~ws[k]) || ws[k - 1] == ws[k]) throw std::invalid_argument("flag must be strictly increasing");
		if (k == f.j && f.j == f.i + 1) continue;
		blocks.push_back(ws[k] & ~ws[k - 1]);
	}
	// the block of e_0 follows the first i blocks and absorbs W_j - W_i
	unsigned b0 = zero_bit(n) | (ws[f.j] & ~ws[f.i]);
	blocks.insert(blocks.begin() + f.i, b0);
	return make_parab(n, blocks);
}

Vec indicator(int n, unsigned mask, const Q& c) {
	Vec v(n + 1, Q(0));
	for (int b = 0; b <= n; ++b)
		if (mask >> b & 1) v[b] = c;
	return v;
}

Q dot(const Vec& u, const Vec& v) {
	Q s = 0;
	for (size_t k = 0; k < u.size(); ++k) s += u[k] * v[k];
	return s;
}

Vec operator+(const Vec& u, const Vec& v) {
	Vec w(u);
	for (size_t k = 0; k < w.size(); ++k) w[k] += v[k];
	return w;
}

Vec operator-(const Vec& u, const Vec& v) {
	Vec w(u);
	for (size_t k = 0; k < w.size(); ++k) w[k] -= v[k];
	return w;
}

Projections projections(const Vec& h) {
	int len = int(h.size());
	Q last = h.back(), mean = 0;
	for (auto& x : h) mean += x;
	mean /= len;
	Projections r{Vec(len), Vec(len, last), Vec(len), Vec(len, mean)};
	for (int k = 0; k < len; ++k) {
		r.r1[k] = h[k] - last;
		r.rh1[k] = h[k] - mean;
	}
	return r;
}

static Vec block_average(const Parab& p, const Vec& v, bool skip_t) {
	Vec out(v.size(), Q(0));
	for (int k = 0; k < p.m(); ++k) {
		if (skip_t && k == p.t) continue;
		Q a = 0;
		for (int b = 0; b <= p.n; ++b)
			if (p.blocks[k] >> b & 1) a += v[b];
		a /= popcount(p.blocks[k]);
		for (int b = 0; b <= p.n; ++b)
			if (p.blocks[k] >> b & 1) out[b] = a;
	}
	return out;
}

Vec proj_z(const Parab& p, const Vec& v) { return block_average(p, v, true); }
Vec proj_a(const Parab& p, const Vec& v) { return block_average(p, v, false); }

std::vector<Vec> pihat_abs(const Parab& p) {
	std::vector<Vec> out;
	for (auto& k : pihat_keyed(p)) out.push_back(k.w);
	return out;
}

std::vector<Vec> pi_rel(const Parab& p, const Parab& q) {
	std::vector<Vec> out;
	for (int k = 0; k + 1 < p.m(); ++k)
		if (same_outer_block(p, k, q)) out.push_back(proj_z(p, adjacent_root(p, k)));
	return out;
}

std::vector<Vec> pihat_rel(const Parab& p, const Parab& q) {
	auto qk = pihat_keyed(q);
	std::vector<Vec> out;
	for (auto& k : pihat_keyed(p)) {
		bool in_q = std::any_of(qk.begin(), qk.end(), [&](const Keyed& x) { return x.sign == k.sign && x.set == k.set; });
		if (!in_q) out.push_back(proj_z(p, k.w) - proj_z(q, k.w));
	}
	return out;
}

std::vector<Vec> delta_rel(const Parab& p, const Parab& q) {
	std::vector<Vec> out;
	for (int k = 0; k + 1 < p.m(); ++k)
		if (same_outer_block(p, k, q)) out.push_back(adjacent_root(p, k));
	return out;
}

std::vector<Vec> deltahat_rel(const Parab& p, const Parab& q) {
	std::vector<Vec> out;
	size_t i = 0;
	for (unsigned c : q.blocks) {
		std::vector<unsigned> inside;
		while (i < p.blocks.size() && (p.blocks[i] & ~c) == 0) inside.push_back(p.blocks[i++]);
		unsigned acc = 0;
		for (size_t k = 0; k + 1 < inside.size(); ++k) {
			acc |= inside[k];
			out.push_back(indicator(p.n, acc) - indicator(p.n, c, Q(popcount(acc), popcount(c))));
		}
	}
	return out;
}

// det on V_P minus det on V'_P: 1 before the block of e_0, -1 after it
Vec rho_underline(const Parab& p) {
	Vec v(p.n + 1, Q(0));
	for (int k = 0; k < p.m(); ++k) {
		if (k == p.t) continue;
		v = v + indicator(p.n, p.blocks[k], Q(k < p.t ? 1 : -1));
	}
	return v;
}

Vec two_rho_difference(const Parab& p) {
	int n = p.n;
	Vec tilde(n + 1, Q(0)), small(n + 1, Q(0));
	unsigned zb = zero_bit(n);
	for (int a = 0; a < p.m(); ++a)
		for (int b = a + 1; b < p.m(); ++b)
			for (int x = 0; x <= n; ++x)
				for (int y = 0; y <= n; ++y) {
					if (!(p.blocks[a] >> x & 1) || !(p.blocks[b] >> y & 1)) continue;
					tilde[x] += 1;
					tilde[y] -= 1;
					if ((1u << x) != zb && (1u << y) != zb) {
						small[x] += 1;
						small[y] -= 1;
					}
				}
	return tilde - small;
}

IVec scaled(const Vec& v, long long L) {
	IVec out(v.size());
	for (size_t k = 0; k < v.size(); ++k) {
		Q x = v[k] * Q(long(L));
		if (x.get_den() != 1) throw std::logic_error("weight does not scale to an integer");
		out[k] = x.get_num().get_si();
	}
	return out;
}

long long dot(const IVec& w, const IVec& x) {
	long long s = 0;
	for (size_t k = 0; k < w.size(); ++k) s += w[k] * x[k];
	return s;
}

IVec operator+(const IVec& u, const IVec& v) {
	IVec w(u);
	for (size_t k = 0; k < w.size(); ++k) w[k] += v[k];
	return w;
}

IVec operator-(const IVec& u, const IVec& v) {
	IVec w(u);
	for (size_t k = 0; k < w.size(); ++k) w[k] -= v[k];
	return w;
}

IVec times(long long c, const IVec& v) {
	IVec w(v);
	for (auto& x : w) x *= c;
	return w;
}

IVec r1(const IVec& h) {
	IVec w(h);
	for (auto& x : w) x -= h.back();
	return w;
}

IVec r2(const IVec& h) { return IVec(h.size(), h.back()); }

IVec rh2(const IVec& h) {
	long long s = std::accumulate(h.begin(), h.end(), 0LL), len = (long long)h.size();
	if (s % len) throw std::logic_error("point not on the integer grid");
	return IVec(h.size(), s / len);
}

IVec rh1(const IVec& h) { return h - rh2(h); }

IVec proj_a(const Parab& p, const IVec& v) {
	IVec out(v.size(), 0);
	for (unsigned b : p.blocks) {
		long long s = 0;
		for (int k = 0; k <= p.n; ++k)
			if (b >> k & 1) s += v[k];
		if (s % popcount(b)) throw std::logic_error("point not on the integer grid");
		for (int k = 0; k <= p.n; ++k)
			if (b >> k & 1) out[k] = s / popcount(b);
	}
	return out;
}

WallScope::WallScope() {
	if (current_scope) throw std::logic_error("nested wall scopes");
	current_scope = this;
}

WallScope::~WallScope() { current_scope = nullptr; }

int chi(const std::vector<IVec>& ws, const IVec& x) {
	int r = 1;
	for (auto& w : ws) {
		long long d = dot(w, x);
		if (current_scope) current_scope->zeros.push_back(d == 0);
		if (d <= 0) r = 0;
	}
	return r;
}

int chi_closed_neg(const std::vector<IVec>& ws, const IVec& x) {
	int r = 1;
	for (auto& w : ws) {
		long long d = dot(w, x);
		if (current_scope) current_scope->zeros.push_back(d == 0);
		if (d > 0) r = 0;
	}
	return r;
}

Engine::Engine(int n) : n_(n), L_(1) {
	if (n < 1 || n > 3) throw std::invalid_argument("cone engine guard: need 1 <= n <= 3");
	for (int k = 2; k <= n + 1; ++k) L_ = std::lcm(L_, (long long)k);
	all_ = ordered_partitions(n, (zero_bit(n) << 1) - 1);
	top_ = index(whole(n));
	int s = size();
	le_.assign(s * s, 0);
	pi_.resize(s * s);
	pihat_.resize(s * s);
	delta_.resize(s * s);
	deltahat_.resize(s * s);
	auto conv = [&](const std::vector<Vec>& ws) {
		WeightList out;
		for (auto& w : ws) out.push_back(scaled(w, L_));
		return out;
	};
	for (int p = 0; p < s; ++p)
		for (int q = 0; q < s; ++q) {
			if (!contained(all_[p], all_[q])) continue;
			int k = p * s + q;
			le_[k] = 1;
			pi_[k] = conv(pi_rel(all_[p], all_[q]));
			pihat_[k] = conv(pihat_rel(all_[p], all_[q]));
			delta_[k] = conv(delta_rel(all_[p], all_[q]));
			deltahat_[k] = conv(deltahat_rel(all_[p], all_[q]));
		}
}

int Engine::index(const Parab& p) const {
	auto it = std::find(all_.begin(), all_.end(), p);
	if (it == all_.end()) throw std::invalid_argument("not a parabolic subspace of this engine");
	return int(it - all_.begin());
}

int Engine::langlands_sum(int q, int p, const IVec& h) const {
	int s = 0;
	for (int r = 0; r < size(); ++r)
		if (le(q, r) && le(r, p)) s += eps(q, r) * sigma(q, r, h) * sigma_hat(r, p, h);
	return s;
}

int Engine::b_function(int p, const IVec& h, const IVec& x, bool sign_pr) const {
	IVec hx = h - x;
	int s = 0;
	for (int r = 0; r < size(); ++r)
		if (le(p, r)) s += (sign_pr ? eps(p, r) : eps(r, top_)) * sigma_hat(r, top_, hx) * sigma(p, r, h);
	return s;
}

int Engine::gamma_prime(int p, const IVec& h, const IVec& x) const {
	IVec hx = h - x;
	int s = 0;
	for (int r = 0; r < size(); ++r)
		if (le(p, r)) s += eps(p, r) * tau_hat(r, top_, hx) * tau(p, r, h);
	return s;
}

std::vector<Descent> descents(int n, int max_i) {
	if (n < 1 || n > 3 || max_i < 1 || max_i > 2) throw std::invalid_argument("descent guard: need n <= 3 and |I| <= 2");
	std::vector<Descent> out;
	for (int k = 1; k <= max_i; ++k) {
		int total = 1;
		for (int c = 0; c < n; ++c) total *= k + 1;
		for (int code = 0; code < total; ++code) {
			Descent d;
			d.v.assign(k, 0);
			int x = code;
			for (int c = 1; c <= n; ++c, x /= k + 1) {
				int lab = x % (k + 1);
				if (lab == 0) d.vplus |= coord_bit(n, c);
				else d.v[lab - 1] |= coord_bit(n, c);
			}
			if (std::any_of(d.v.begin(), d.v.end(), [](unsigned m) { return m == 0; })) continue;
			// the V_i are unordered: keep them sorted by lowest coordinate
			if (k == 2 && std::countr_zero(d.v[0]) > std::countr_zero(d.v[1])) continue;
			out.push_back(d);
		}
	}
	return out;
}

bool contains_m1(const Parab& q, const Descent& d) {
	unsigned need = d.vplus | zero_bit(q.n);
	return (q.blocks[q.t] & need) == need;
}

ParabProd parabolic_minus(const Parab& q, const Descent& d) {
	if (!contains_m1(q, d)) throw std::invalid_argument("parabolic does not contain M1");
	ParabProd out;
	for (unsigned v : d.v) {
		unsigned u = v | zero_bit(q.n);
		std::vector<unsigned> blocks;
		for (unsigned b : q.blocks)
			if (b & u) blocks.push_back(b & u);
		out.push_back(make_parab(q.n, blocks));
	}
	return out;
}

std::vector<ParabProd> product_parabolics(int n, const Descent& d) {
	std::vector<ParabProd> out{{}};
	for (unsigned v : d.v) {
		auto factor = ordered_partitions(n, v | zero_bit(n));
		std::vector<ParabProd> next;
		for (auto& r : out)
			for (auto& f : factor) {
				auto x = r;
				x.push_back(f);
				next.push_back(std::move(x));
			}
		out = std::move(next);
	}
	return out;
}

bool contained(const ParabProd& r, const ParabProd& s) {
	for (size_t i = 0; i < r.size(); ++i)
		if (!contained(r[i], s[i])) return false;
	return true;
}

int total_blocks(const ParabProd& r) {
	int m = 0;
	for (auto& x : r) m += x.m();
	return m;
}

// z_P = z_R as subspaces: the blocks away from e_0 coincide
bool same_z(const Parab& p, const ParabProd& r) {
	std::vector<unsigned> a, b;
	for (int k = 0; k < p.m(); ++k)
		if (k != p.t) a.push_back(p.blocks[k]);
	for (auto& x : r)
		for (int k = 0; k < x.m(); ++k)
			if (k != x.t) b.push_back(x.blocks[k]);
	std::sort(a.begin(), a.end());
	std::sort(b.begin(), b.end());
	return a == b;
}

Families families_F(const Engine& e, const ParabProd& r, const Descent& d) {
	Families f;
	for (int p = 0; p < e.size(); ++p) {
		if (!contains_m1(e.at(p), d)) continue;
		auto mp = parabolic_minus(e.at(p), d);
		if (!contained(r, mp)) continue;
		f.fbar.push_back(p);
		if (mp != r) continue;
		f.f.push_back(p);
		if (same_z(e.at(p), r)) f.f0.push_back(p);
	}
	return f;
}

}  // namespace jrlab::cones
