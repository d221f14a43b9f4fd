#pragma once

#include <utility>
#include <vector>

#include "gltilde.hpp"

namespace jrlab {

using MatE = Mat<QE>;
using MatQ = Mat<Q>;

// Phi(x, y) = sigma(x)^T Phi y, linear in the second variable.
struct HermitianForm {
	MatE gram;

	HermitianForm() = default;
	explicit HermitianForm(MatE g);
	int n() const { return gram.r; }
	QE operator()(const MatE& x, const MatE& y) const { return (adjoint(x) * gram * y)(0, 0); }
	Q det() const;
};

struct HermitianPair {
	MatE A, b;
	int n() const { return A.r; }
};

Q to_base(const QE& z);
MatQ to_base(const MatE& m);
MatE lift(const MatQ& m, const Q& d);
inline MatE lift(const MatQ& m, const Local& ctx) { return lift(m, Q(ctx.eps)); }

bool is_hermitian(const MatE& g);
bool is_selfadjoint(const MatE& A, const HermitianForm& phi);

// The gl~ triple over E attached to (A, b): c = b* Phi.
Triple<QE> as_triple(const HermitianPair& x, const HermitianForm& phi);

Invariants<Q> u_invariants(const HermitianPair& x, const HermitianForm& phi);
int u_stratum(const HermitianPair& x, const HermitianForm& phi);
Q u_d_r(const HermitianPair& x, const HermitianForm& phi, int r);
std::pair<HermitianPair, HermitianPair> u_jordan(const HermitianPair& x, const HermitianForm& phi);
bool u_is_semisimple(const HermitianPair& x, const HermitianForm& phi);
bool u_is_nilpotent(const HermitianPair& x, const HermitianForm& phi);
Q u_pairing(const HermitianPair& x, const HermitianPair& y, const HermitianForm& phi);
HermitianPair u_act(const MatE& g, const HermitianPair& x);

HermitianForm extend_form(const HermitianForm& phi);

enum class FormClass { phi0, phi1 };
FormClass classify_form_local(const HermitianForm& phi, const Local& ctx);

// Moments m_0, m_1, ... of an invariant point, continued past n by the
// Cayley-Hamilton recurrence of the a-part.
std::vector<Q> continued_moments(const Invariants<Q>& a, int count);
Poly<Q> charpoly_of(const Invariants<Q>& a);
int stratum_of(const Invariants<Q>& a);

struct Factor {
	Poly<Q> poly;	// monic, irreducible over F
	int mult = 1;
	bool inert = true;	// stays irreducible over E (index set I)
};

struct OrbitClass {
	std::vector<int> local;	// per factor in I: 0 norm class, 1 the other one
	bool disc_is_norm = true;
	HermitianForm form;
	HermitianPair rep;
};

// Stratum-0 part of the characteristic polynomial at a.
Poly<Q> stratum_zero_part(const Invariants<Q>& a);
std::vector<OrbitClass> orbit_inventory(const Invariants<Q>& a, const std::vector<Factor>& factors, const Local& ctx);

// Krylov model of a regular point: companion matrix, e_1 and the Hankel form.
struct KrylovModel {
	MatQ C, D;
};
KrylovModel krylov_model(const Invariants<Q>& a);

struct CayleyParams {
	QE tau, xi;
	static CayleyParams make(const QE& tau, const QE& xi);
	static CayleyParams standard(const Local& ctx);
};

// Y = [[A, b], [c, d]] on W = V + F e_0, e_0 last.
MatE cayley(const MatE& y, const CayleyParams& k);
MatE cayley_gl(const MatQ& y, const CayleyParams& k);
MatE cayley_u(const MatE& y, const HermitianForm& phit, const CayleyParams& k);
MatE cayley_inverse(const MatE& r, const CayleyParams& k);

bool in_X(const MatE& g);
bool is_unitary(const MatE& g, const HermitianForm& phi);

struct GroupInvariants {
	Poly<QE> chi;
	std::vector<QE> moments;	// i = 1..n
};
GroupInvariants x_invariants(const MatE& y);
GroupInvariants u_group_invariants(const MatE& y, const HermitianForm& phit);
bool match_invariants_group(const MatE& y1, const MatE& y2, const HermitianForm& phit);

// Lie-level matching on End(W): the self-adjoint partner of y in Krylov form.
struct MatchedEnd {
	HermitianForm phi;
	MatE y;
};
MatchedEnd matched_end(const MatQ& y);

int omega_factor(const MatE& x, const Local& ctx);
int omega_group(const MatE& g, const MatE& gt, const Local& ctx);
MatE nu(const MatE& g, const MatE& gt);
int eta_tilde_end(const MatQ& y, const Local& ctx);

struct FactorCompat {
	int samples = 0;
	int constant = 0;	// eta'(mu_n) if constant, else 0
	bool ok = false;
};
// Omega(kappa(Y)) * eta~(Y) [* eta'(det(Y - tau)) for n odd] over the samples.
int cayley_factor_ratio(const MatQ& y, const CayleyParams& k, const Local& ctx);
FactorCompat factor_compat_check(const std::vector<MatQ>& ys, const CayleyParams& k, const Local& ctx);

}  // namespace jrlab
