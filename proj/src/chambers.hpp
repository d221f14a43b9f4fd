#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cones.hpp"
#include "report.hpp"

namespace jrlab::chambers {

using cones::IVec;

// A chamber of GL(m) relative to the diagonal torus, as the order in which
// the coordinates 1..m appear: its positive roots are e_perm[a] - e_perm[b]
// for a < b.
struct Chamber {
	std::vector<int> perm;
	auto operator<=>(const Chamber&) const = default;
};

// e_i - e_j
using Root = std::pair<int, int>;

// A parabolic containing the torus: an ordered set partition of 1..m,
// bit i-1 standing for coordinate i.
using Facet = std::vector<unsigned>;

class Complex {
public:
	explicit Complex(int m);	// guard m <= 5

	int m() const { return m_; }
	int size() const { return int(ch_.size()); }
	const Chamber& at(int p) const { return ch_[p]; }
	int index(const Chamber& c) const;
	const std::vector<Facet>& facets() const { return facets_; }
	std::vector<Root> roots() const;

	bool positive(int p, Root a) const { return pos_[p][a.first - 1] < pos_[p][a.second - 1]; }
	std::vector<Root> sigma_set(int p2, int p1) const;	// Sigma(P2|P1)
	int distance(int p1, int p2) const;	// |Sigma(P2|P1)|
	int graph_distance(int p1, int p2) const { return bfs_[p1 * size() + p2]; }
	const std::vector<int>& neighbors(int p) const { return adj_[p]; }
	std::vector<std::vector<int>> minimal_galleries(int p1, int p2) const;
	// d(P2, P) - d(P1, P) for P2 adjacent to P1
	int adjacency_step_distance(int p, int p1, int p2) const;

	bool is_convex(const std::vector<int>& s) const;	// guard m <= 4
	std::vector<int> h_plus(Root a) const;
	std::vector<int> convex_hull(const std::vector<int>& s) const;

	bool contained(int p, const Facet& q) const;
	std::vector<Root> simple_roots(int p, const Facet& q) const;	// Delta_P^Q
	int langlands_type_rep(const std::vector<int>& s, int p, const Facet& q) const;

private:
	int m_;
	std::vector<Chamber> ch_;
	std::vector<std::vector<int>> pos_;	// pos_[p][i-1] = place of coordinate i
	std::vector<std::vector<int>> adj_;
	std::vector<int> bfs_;
	std::vector<Facet> facets_;
};

// Chamber-indexed points with Y_P1 - Y_P2 = r alpha^vee, r >= 0, for
// adjacent chambers.  Entries are integers; the common scale makes every
// facet projection Y_Q integral too.
struct Family {
	std::vector<IVec> y;
};

Family random_orthogonal_positive(std::uint64_t seed, const Complex& cx);
bool is_orthogonal_positive(const Complex& cx, const Family& f);
IVec y_facet(const Complex& cx, const Family& f, const Facet& q);	// throws if ill-defined

int psi_geometric(const Complex& cx, const std::vector<int>& s, const IVec& h, const Family& f);
int epsilon_lambda(const Complex& cx, int p, const IVec& lambda);
int phi(const Complex& cx, int p, const IVec& lambda, const IVec& h);
// lambda must lie in the open cone of some member of s
int psi_analytic(const Complex& cx, const std::vector<int>& s, const IVec& lambda, const IVec& h, const Family& f);
// all weights of every member of s are <= 0 at H - Y_P
int below_all(const Complex& cx, const std::vector<int>& s, const IVec& h, const Family& f);

std::vector<CheckReport> chamber_suite(int m, long cases, std::uint64_t seed);

}  // namespace jrlab::chambers
