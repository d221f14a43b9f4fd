#include "gltilde.hpp"

namespace jrlab {

int eta_tilde(const Triple<Q>& x, const Local& ctx) {
	int n = x.n();
	if (stratum(x) != n) throw domain_error("eta~ needs a regular semisimple triple");
	// eta is a sign, so eta^{-1} = eta
	return eta(det(krylov(x.A, x.b, n)), ctx);
}

Q slice_ratio(const std::vector<Triple<Q>>& parts) {
	Triple<Q> x = direct_sum(parts);
	Q den = discriminant(charpoly(x.A));
	if (den == 0) throw domain_error("disc=0");
	for (auto& p : parts) {
		Q di = discriminant(charpoly(p.A));
		if (di == 0) throw domain_error("disc=0");
		Q dn = d_r(p, p.n());
		if (dn == 0) throw domain_error("block is not regular");
		den *= dn / di;
	}
	return d_r(x, x.n()) / den;
}

}  // namespace jrlab
