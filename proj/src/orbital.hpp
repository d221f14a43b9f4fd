#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hermitian.hpp"
#include "report.hpp"

namespace jrlab::orbital {

// A lattice between the Krylov lattice O[A]b and its c-dual.  `hnf` is the
// normalized Hermite form in Krylov coordinates y (x = K y, K = [b, Ab, ...]);
// `basis` = K hnf generates the lattice inside the original space.
template <class T>
struct Lattice {
	Mat<T> hnf;
	Mat<T> basis;
	std::vector<int> exps;	// diagonal of hnf as powers of p
};

enum class Side { gl, unitary };

struct OrbitalReport {
	Side side = Side::gl;
	Invariants<Q> a;
	Q value;
	long lattices = 0;
	long p = 0;
	int bound = 0;	// v(d_n): exponents range over [-bound, 0]
};

// Needs stratum n.  An empty list when the Krylov lattice is not c-integral.
std::vector<Lattice<Q>> admissible_lattices_gl(const Triple<Q>& x, const Local& ctx);
OrbitalReport orbital_gl(const Triple<Q>& x, const Local& ctx);

// Self-dual O_E-lattices stable under A and containing b.  For a form
// without self-dual lattices the count is 0.
std::vector<Lattice<QE>> selfdual_lattices_u(const HermitianPair& x, const HermitianForm& phi, const Local& ctx);
OrbitalReport orbital_u(const HermitianPair& x, const HermitianForm& phi, const Local& ctx);

// The rank-one torus example.  a = 0 uses the value at s = 0 of the
// continued one-sided series with vol(O^x) = 1.
Q toy_gl_orbital(const Q& a, const Local& ctx);
enum class NormClass { norm, non_norm };
Q toy_u_orbital(const Q& a, NormClass nu, const Local& ctx);

struct ToyCase {
	Q a;
	Q gl, u_norm, u_non_norm;
	bool ok = false;
};
// a = unit * p^v for |v| <= vmax and each unit class, plus a = 0
std::vector<ToyCase> toy_transfer_check(const Local& ctx, int vmax);

// Representatives of the fiber over a regular point a.
Triple<Q> gl_representative(const Invariants<Q>& a);
struct URepresentative {
	HermitianPair x;
	HermitianForm phi;
};
URepresentative u_representative(const Invariants<Q>& a, const Local& ctx);

struct FlCase {
	Invariants<Q> a;
	FormClass cls = FormClass::phi0;
	OrbitalReport gl, u;
	bool ok = false;
};
struct FlResult {
	std::vector<FlCase> cases;
	CheckReport report;
};
// n = 1: every (alpha, d_1) with v(d_1) in [-2, N], alpha in {0} and
// unit * p^k for k in [-2, 3].  n = 2: `samples` random regular points with
// v(d_2) <= N.  Representatives are conjugated by random group elements.
FlResult fl_check(int n, const Local& ctx, int N, long samples, std::uint64_t seed);

// f = sum coef * 1[g^-1 . Y integral]
struct Translate {
	Q coef;
	MatQ g;
};
// True iff every orbital integral of f at the sampled regular points vanishes.
bool is_instable(const std::vector<Translate>& f, const std::vector<Invariants<Q>>& sample, const Local& ctx);

std::string side_name(Side s);

}  // namespace jrlab::orbital
