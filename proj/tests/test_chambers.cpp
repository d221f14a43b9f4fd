#include <doctest.h>

#include <algorithm>
#include <map>

#include "chambers.hpp"

using namespace jrlab;
using namespace jrlab::chambers;

namespace {

int idx(const Complex& cx, std::vector<int> perm) { return cx.index(Chamber{std::move(perm)}); }

std::vector<int> all_chambers(const Complex& cx) {
	std::vector<int> s(cx.size());
	for (int i = 0; i < cx.size(); ++i) s[i] = i;
	return s;
}

// positions swapped between consecutive chambers of a gallery, read as roots
Root wall(const Complex& cx, int a, int b) {
	const auto& pa = cx.at(a).perm;
	const auto& pb = cx.at(b).perm;
	for (int k = 0; k + 1 < int(pa.size()); ++k)
		if (pa[k] != pb[k]) return pa[k] < pa[k + 1] ? Root{pa[k], pa[k + 1]} : Root{pa[k + 1], pa[k]};
	return {0, 0};
}

}  // namespace

TEST_CASE("distances in S3") {
	Complex cx(3);
	CHECK(cx.size() == 6);
	int e = idx(cx, {1, 2, 3}), w0 = idx(cx, {3, 2, 1}), s1 = idx(cx, {2, 1, 3});
	CHECK(cx.sigma_set(e, e).empty());
	CHECK(cx.distance(e, e) == 0);
	CHECK(cx.sigma_set(w0, e).size() == 3);
	CHECK(cx.distance(e, s1) == 1);
	CHECK(cx.minimal_galleries(e, s1).size() == 1);
	CHECK(cx.minimal_galleries(e, w0).size() == 2);
}

TEST_CASE("distance is the gallery distance and walls of minimal galleries are Sigma") {
	for (int m = 2; m <= 4; ++m) {
		Complex cx(m);
		long ordered = 0;
		for (int a = 0; a < cx.size(); ++a)
			for (int b = 0; b < cx.size(); ++b) {
				if (a != b) ++ordered;
				CHECK(cx.distance(a, b) == cx.graph_distance(a, b));
				auto sig = cx.sigma_set(b, a);
				std::sort(sig.begin(), sig.end());
				for (auto& g : cx.minimal_galleries(a, b)) {
					CHECK(int(g.size()) == cx.distance(a, b) + 1);
					std::vector<Root> walls;
					for (std::size_t k = 0; k + 1 < g.size(); ++k) {
						Root r = wall(cx, g[k], g[k + 1]);
						walls.push_back(r);
					}
					std::sort(walls.begin(), walls.end());
					// each root crossed once; orientation aside, the set is Sigma
					std::vector<Root> unoriented;
					for (auto r : sig) unoriented.push_back(r.first < r.second ? r : Root{r.second, r.first});
					std::sort(unoriented.begin(), unoriented.end());
					CHECK(walls == unoriented);
				}
			}
		if (m == 4) CHECK(ordered == 552);
	}
}

TEST_CASE("adjacency step changes the distance by one") {
	Complex cx(3);
	for (int p = 0; p < cx.size(); ++p)
		for (int p1 = 0; p1 < cx.size(); ++p1)
			for (int p2 : cx.neighbors(p1)) {
				auto sig = cx.sigma_set(p2, p1);
				REQUIRE(sig.size() == 1);
				auto inner = cx.sigma_set(p, p1);
				bool in = std::find(inner.begin(), inner.end(), sig[0]) != inner.end();
				int step = cx.adjacency_step_distance(p, p1, p2);
				CHECK(step == cx.distance(p2, p) - cx.distance(p1, p));
				CHECK(step == (in ? -1 : 1));
			}
	CHECK_THROWS(cx.adjacency_step_distance(0, 0, 0));
}

TEST_CASE("convexity") {
	Complex cx(4);
	CHECK(cx.is_convex(all_chambers(cx)));
	auto roots = cx.roots();
	CHECK(roots.size() == 12);
	for (auto a : roots) {
		auto h = cx.h_plus(a);
		CHECK(int(h.size()) == cx.size() / 2);
		CHECK(cx.is_convex(h));
	}
	// intersections of half-spaces stay convex
	for (std::size_t i = 0; i < roots.size(); ++i)
		for (std::size_t j = i + 1; j < roots.size(); ++j) {
			auto a = cx.h_plus(roots[i]), b = cx.h_plus(roots[j]), both = std::vector<int>{};
			std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
			CHECK(cx.is_convex(both));
		}
	Complex c3(3);
	CHECK_FALSE(c3.is_convex({idx(c3, {1, 2, 3}), idx(c3, {3, 2, 1})}));
	CHECK_THROWS(Complex(5).is_convex({0}));
}

TEST_CASE("Langlands-type representative") {
	Complex cx(3);
	Facet g{7u};
	for (int p = 0; p < cx.size(); ++p) {
		CHECK(cx.langlands_type_rep({p}, p, g) == p);
		// convex hull of a pair contains both ends
		for (int q = 0; q < cx.size(); ++q) {
			auto hull = cx.convex_hull({p, q});
			CHECK(cx.is_convex(hull));
			CHECK(std::count(hull.begin(), hull.end(), p) == 1);
		}
	}
	auto h = cx.h_plus(Root{1, 2});
	for (int p : h) {
		int rep = cx.langlands_type_rep(h, p, g);
		CHECK(std::count(h.begin(), h.end(), rep) == 1);
	}
}

TEST_CASE("orthogonal positive families and psi") {
	Complex cx(3);
	Family constant{std::vector<IVec>(cx.size(), IVec{6, -6, 0})};
	CHECK(is_orthogonal_positive(cx, constant));
	for (std::uint64_t s = 0; s < 20; ++s) CHECK(is_orthogonal_positive(cx, random_orthogonal_positive(s, cx)));
	Family f = random_orthogonal_positive(3, cx);
	CHECK(psi_geometric(cx, {}, IVec{1, 2, 3}, f) == 0);
}

TEST_CASE("chamber suites") {
	for (int m = 2; m <= 4; ++m)
		for (auto& r : chamber_suite(m, 30, 99)) CHECK_MESSAGE(r.failures == 0, r.config);
	CHECK_THROWS(chamber_suite(5, 1, 0));
}
