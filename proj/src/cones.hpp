#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"
#include "report.hpp"

namespace jrlab::cones {

// A parabolic subspace of (GL(n), GL(n+1)) as an ordered set partition of
// the coordinates {1..n, 0}.  Bit k-1 stands for coordinate k and bit n for
// the extra coordinate 0; blocks[t] is the block containing 0.  The same
// type serves the factors GL(V_i + F e_0) of a descent, with a smaller
// universe of coordinates.
struct Parab {
	int n = 0;
	std::vector<unsigned> blocks;
	int t = 0;

	int m() const { return int(blocks.size()); }
	unsigned universe() const;
	auto operator<=>(const Parab&) const = default;
};

inline unsigned zero_bit(int n) { return 1u << n; }
unsigned coord_bit(int n, int coord);
std::vector<int> coords_of(int n, unsigned mask);
std::string label(const Parab& p);

Parab make_parab(int n, std::vector<unsigned> blocks);
Parab whole(int n, unsigned universe);
inline Parab whole(int n) { return whole(n, (zero_bit(n) << 1) - 1); }
std::vector<Parab> ordered_partitions(int n, unsigned universe);
// guard n <= 4; standard_only keeps the flags made of initial segments
std::vector<Parab> enumerate_parabolic_subspaces(int n, bool standard_only = false);
bool contained(const Parab& p, const Parab& q);
int epsilon(const Parab& p, const Parab& q);

// Flag-plus-pointer form: W_0 = 0 < W_1 < ... < W_s = V with (i, j), j - i in {0, 1}.
struct FlagForm {
	std::vector<std::vector<int>> flag;
	int i = 0, j = 0;
};
FlagForm to_flag(const Parab& p);
Parab from_flag(int n, const FlagForm& f);

using Vec = std::vector<Q>;
Vec indicator(int n, unsigned mask, const Q& c = 1);
Q dot(const Vec& u, const Vec& v);
Vec operator+(const Vec& u, const Vec& v);
Vec operator-(const Vec& u, const Vec& v);

struct Projections {
	Vec r1, r2, rh1, rh2;
};
Projections projections(const Vec& h);

Vec proj_z(const Parab& p, const Vec& v);	// block averages, zero on the block of 0
Vec proj_a(const Parab& p, const Vec& v);	// block averages

// Weight sets for P <= Q.  Pi/Pi^ drive sigma/sigma^, Delta/Delta^ drive tau/tau^.
std::vector<Vec> pihat_abs(const Parab& p);
std::vector<Vec> pi_rel(const Parab& p, const Parab& q);
std::vector<Vec> pihat_rel(const Parab& p, const Parab& q);
std::vector<Vec> delta_rel(const Parab& p, const Parab& q);
std::vector<Vec> deltahat_rel(const Parab& p, const Parab& q);

Vec rho_underline(const Parab& p);
Vec two_rho_difference(const Parab& p);	// 2 rho_P~ - 2 rho_P

// Exact evaluation on integer points.  Cone memberships are positively
// homogeneous, so rational grid points are sampled as integer vectors and
// weights are rescaled to integers.
using IVec = std::vector<long long>;
IVec scaled(const Vec& v, long long L);
long long dot(const IVec& w, const IVec& x);
IVec operator+(const IVec& u, const IVec& v);
IVec operator-(const IVec& u, const IVec& v);
IVec times(long long c, const IVec& v);
IVec r1(const IVec& h);
IVec r2(const IVec& h);
IVec rh1(const IVec& h);	// needs sum(h) divisible by n+1
IVec rh2(const IVec& h);
IVec proj_a(const Parab& p, const IVec& v);	// needs divisible block sums

// Every weight evaluation inside chi is recorded while a WallScope is alive
// on the current thread: zeros[k] says whether the k-th evaluated weight
// vanished.  Evaluation order never depends on values.
struct WallScope {
	std::vector<char> zeros;
	WallScope();
	~WallScope();
	WallScope(const WallScope&) = delete;
	WallScope& operator=(const WallScope&) = delete;
};

int chi(const std::vector<IVec>& ws, const IVec& x);	// all weights > 0
int chi_closed_neg(const std::vector<IVec>& ws, const IVec& x);	// all weights <= 0

// Draws points until `target` of them avoid every wall.  A weight vanishing
// at three large probe points vanishes on the whole sampling domain and is
// ignored; any other zero rejects the point.  draw(true) gives a probe.
template <class Draw, class Check>
CheckReport sample_generic(std::string config, long target, Draw&& draw, Check&& check) {
	CheckReport rep{std::move(config)};
	std::vector<char> structural;
	for (int k = 0; k < 3; ++k) {
		auto pt = draw(true);
		WallScope scope;
		check(pt);
		if (k == 0) structural = scope.zeros;
		if (scope.zeros.size() != structural.size()) throw std::logic_error("value-dependent evaluation order");
		for (size_t i = 0; i < structural.size(); ++i) structural[i] &= scope.zeros[i];
	}
	for (long attempts = 0; rep.points_tested < target && attempts < 200 * target + 1000; ++attempts) {
		auto pt = draw(false);
		bool ok, wall = false;
		{
			WallScope scope;
			ok = check(pt);
			if (scope.zeros.size() != structural.size()) throw std::logic_error("value-dependent evaluation order");
			for (size_t i = 0; i < structural.size(); ++i) wall = wall || (scope.zeros[i] && !structural[i]);
		}
		if (wall) {
			++rep.rejected;
			continue;
		}
		++rep.points_tested;
		if (!ok) ++rep.failures;
	}
	if (rep.points_tested < target) ++rep.failures;	// ran out of generic points
	return rep;
}

using WeightList = std::vector<IVec>;

class Engine {
public:
	explicit Engine(int n);

	int n() const { return n_; }
	long long scale() const { return L_; }
	int size() const { return int(all_.size()); }
	const Parab& at(int i) const { return all_[i]; }
	int index(const Parab& p) const;
	int top() const { return top_; }
	bool le(int p, int q) const { return le_[p * size() + q]; }
	int eps(int p, int q) const { return ((all_[p].m() - all_[q].m()) % 2) ? -1 : 1; }

	const WeightList& pi(int p, int q) const { return pi_[p * size() + q]; }
	const WeightList& pihat(int p, int q) const { return pihat_[p * size() + q]; }
	const WeightList& delta(int p, int q) const { return delta_[p * size() + q]; }
	const WeightList& deltahat(int p, int q) const { return deltahat_[p * size() + q]; }

	int sigma(int p, int q, const IVec& h) const { return chi(pi(p, q), h); }
	int sigma_hat(int p, int q, const IVec& h) const { return chi(pihat(p, q), h); }
	int tau(int p, int q, const IVec& h) const { return chi(delta(p, q), h); }
	int tau_hat(int p, int q, const IVec& h) const { return chi(deltahat(p, q), h); }

	// sum over Q <= S <= P of eps_Q^S sigma_Q^S(H) sigma^_S^P(H)
	int langlands_sum(int q, int p, const IVec& h) const;
	// B_P(H, X) and Arthur's Gamma'_P(H, X); sign_pr selects eps_P^R (true)
	// or eps_R^G (false) in front of each term
	int b_function(int p, const IVec& h, const IVec& x, bool sign_pr = true) const;
	int gamma_prime(int p, const IVec& h, const IVec& x) const;

private:
	int n_;
	long long L_;
	int top_ = 0;
	std::vector<Parab> all_;
	std::vector<char> le_;
	std::vector<WeightList> pi_, pihat_, delta_, deltahat_;
};

// Descent data with every F_i = F.
struct Descent {
	unsigned vplus = 0;
	std::vector<unsigned> v;	// the V_i, nonempty, coordinates only
};
std::vector<Descent> descents(int n, int max_i);

using ParabProd = std::vector<Parab>;
bool contains_m1(const Parab& q, const Descent& d);
ParabProd parabolic_minus(const Parab& q, const Descent& d);
std::vector<ParabProd> product_parabolics(int n, const Descent& d);
bool contained(const ParabProd& r, const ParabProd& s);
int total_blocks(const ParabProd& r);
bool same_z(const Parab& p, const ParabProd& r);

struct Families {
	std::vector<int> fbar, f, f0;	// indices into an Engine
};
Families families_F(const Engine& e, const ParabProd& r, const Descent& d);

// Verification suites.  Each returns one report per configuration.
std::vector<CheckReport> structure_suite(int n);	// dual bases, obtuseness, rho, flags
std::vector<CheckReport> identity_suite(int n, long points, std::uint64_t seed);
std::vector<CheckReport> descent_suite(int n, int max_i, long points, std::uint64_t seed);

}  // namespace jrlab::cones
