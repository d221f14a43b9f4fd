#pragma once

#include <cstdint>
#include <random>

#include "hermitian.hpp"

namespace jrlab {

// Seeded generators for property tests.  Small numerators keep the exact
// arithmetic cheap; everything derives from one 64-bit seed.
class Rng {
public:
	explicit Rng(std::uint64_t seed) : eng_(seed) {}

	long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
	bool coin() { return uniform(0, 1) == 1; }
	std::uint64_t next() { return eng_(); }

	Q rational(long num = 6, long den = 3);
	Q nonzero_rational(long num = 6, long den = 3);
	// unit * p^v with v uniform in [vmin, vmax]
	Q padic(long p, int vmin, int vmax);
	QE quad(const Local& ctx, long num = 4, long den = 2);

	MatQ matrix(int r, int c, long num = 4);
	MatQ invertible(int n, long num = 3);
	Triple<Q> triple(int n, long num = 4);
	MatE matrix_e(int r, int c, const Local& ctx);
	MatE invertible_e(int n, const Local& ctx);

	HermitianForm form(int n, const Local& ctx);
	MatE selfadjoint(const HermitianForm& phi, const Local& ctx);
	HermitianPair pair(const HermitianForm& phi, const Local& ctx);
	MatE unitary(const HermitianForm& phi, const Local& ctx, long num = 3);

private:
	std::mt19937_64 eng_;
};

}  // namespace jrlab
