#include "json_io.hpp"

namespace jrlab::io {

json parse(const std::string& text) {
	try {
		return json::parse(text);
	} catch (const json::parse_error& e) {
		throw parse_error(std::string("malformed JSON: ") + e.what());
	}
}

namespace {

const json& field(const json& j, const char* key) {
	if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing field \"") + key + "\"");
	return j.at(key);
}

const json& list(const json& j, const char* what) {
	if (!j.is_array()) throw parse_error(std::string(what) + " must be a list");
	return j;
}

}  // namespace

json to_json(const Q& q) { return to_string(q); }

Q q_from(const json& j) {
	if (j.is_number_integer()) return Q(long(j.get<long long>()));
	if (j.is_string()) {
		try {
			return parse_q(j.get<std::string>());
		} catch (const std::invalid_argument& e) {
			throw parse_error(e.what());
		}
	}
	throw parse_error("scalar must be an integer or a \"num/den\" string");
}

json to_json(const QE& z) { return {{"x", to_json(z.x)}, {"y", to_json(z.y)}, {"kind", "inert"}}; }

QE qe_from(const json& j, const Q& eps) {
	if (j.is_object()) return QE(q_from(field(j, "x")), j.contains("y") ? q_from(j.at("y")) : Q(0), eps);
	return QE(q_from(j), 0, eps);
}

json to_json(const MatQ& m) {
	json rows = json::array();
	for (int i = 0; i < m.r; ++i) {
		json row = json::array();
		for (int j = 0; j < m.c; ++j) row.push_back(to_json(m(i, j)));
		rows.push_back(row);
	}
	return rows;
}

namespace {

template <class T, class Conv>
Mat<T> mat_from(const json& j, Conv&& conv) {
	list(j, "matrix");
	int r = int(j.size()), c = r ? int(list(j[0], "matrix row").size()) : 0;
	Mat<T> m(r, c);
	for (int i = 0; i < r; ++i) {
		if (!j[i].is_array() || int(j[i].size()) != c) throw parse_error("matrix rows must have equal length");
		for (int k = 0; k < c; ++k) m(i, k) = conv(j[i][k]);
	}
	return m;
}

template <class T, class Conv>
Mat<T> column_from(const json& j, Conv&& conv) {
	list(j, "vector");
	Mat<T> m(int(j.size()), 1);
	for (int i = 0; i < m.r; ++i) m(i, 0) = conv(j[i]);
	return m;
}

}  // namespace

MatQ matq_from(const json& j) { return mat_from<Q>(j, q_from); }

json to_json(const MatE& m) {
	json rows = json::array();
	for (int i = 0; i < m.r; ++i) {
		json row = json::array();
		for (int j = 0; j < m.c; ++j) row.push_back(to_json(m(i, j)));
		rows.push_back(row);
	}
	return rows;
}

MatE mate_from(const json& j, const Q& eps) {
	return mat_from<QE>(j, [&](const json& e) { return qe_from(e, eps); });
}

json column_json(const MatQ& v) {
	json out = json::array();
	for (auto& e : v.v) out.push_back(to_json(e));
	return out;
}

json column_json(const MatE& v) {
	json out = json::array();
	for (auto& e : v.v) out.push_back(to_json(e));
	return out;
}

json to_json(const Triple<Q>& x) { return {{"A", to_json(x.A)}, {"b", column_json(x.b)}, {"c", column_json(x.c)}}; }

Triple<Q> triple_from(const json& j) {
	MatQ A = matq_from(field(j, "A"));
	MatQ b = column_from<Q>(field(j, "b"), q_from);
	MatQ c = transpose(column_from<Q>(field(j, "c"), q_from));
	try {
		return Triple<Q>(A, b, c);
	} catch (const std::invalid_argument& e) {
		throw parse_error(e.what());
	}
}

json to_json(const Invariants<Q>& a) {
	json ja = json::array(), jb = json::array();
	for (auto& e : a.a) ja.push_back(to_json(e));
	for (auto& e : a.b) jb.push_back(to_json(e));
	return {{"a", ja}, {"b", jb}};
}

Invariants<Q> invariants_from(const json& j) {
	Invariants<Q> a;
	for (auto& e : list(field(j, "a"), "a")) a.a.push_back(q_from(e));
	for (auto& e : list(field(j, "b"), "b")) a.b.push_back(q_from(e));
	if (a.a.size() != a.b.size() || a.a.empty()) throw parse_error("a and b must have the same positive length");
	return a;
}

json to_json(const HermitianForm& phi) {
	json rows = json::array();
	for (int i = 0; i < phi.n(); ++i) {
		json row = json::array();
		for (int j = 0; j < phi.n(); ++j) row.push_back({{"x", to_json(phi.gram(i, j).x)}, {"y", to_json(phi.gram(i, j).y)}});
		rows.push_back(row);
	}
	return {{"gram", rows}};
}

HermitianForm form_from(const json& j, const Local& ctx) { return HermitianForm(mate_from(field(j, "gram"), Q(ctx.eps))); }

json to_json(const HermitianPair& x, const HermitianForm& phi) {
	json j = to_json(phi);
	j["A"] = to_json(x.A);
	j["b"] = column_json(x.b);
	return j;
}

HermitianPair pair_from(const json& j, const Local& ctx) {
	Q eps(ctx.eps);
	HermitianPair x{mate_from(field(j, "A"), eps), column_from<QE>(field(j, "b"), [&](const json& e) { return qe_from(e, eps); })};
	if (x.A.r != x.A.c || x.b.r != x.A.r) throw parse_error("A must be square and b of matching length");
	return x;
}

json to_json(const cones::Parab& p) {
	auto f = cones::to_flag(p);
	return {{"flag", f.flag}, {"i", f.i}, {"j", f.j}};
}

cones::Parab parab_from(int n, const json& j) {
	cones::FlagForm f;
	try {
		f.flag = field(j, "flag").get<std::vector<std::vector<int>>>();
		f.i = field(j, "i").get<int>();
		f.j = field(j, "j").get<int>();
		return cones::from_flag(n, f);
	} catch (const json::exception& e) {
		throw parse_error(e.what());
	} catch (const std::invalid_argument& e) {
		throw parse_error(e.what());
	}
}

json to_json(const chambers::Chamber& c) { return {{"perm", c.perm}}; }

json to_json(const CheckReport& r, std::uint64_t seed) {
	return {{"config", r.config}, {"points_tested", r.points_tested}, {"failures", r.failures}, {"rejected", r.rejected}, {"seed", seed}};
}

json to_json(const orbital::OrbitalReport& r) {
	return {{"side", orbital::side_name(r.side)}, {"a", to_json(r.a)}, {"value", to_json(r.value)}, {"lattices", r.lattices}, {"p", r.p}, {"bound", r.bound}};
}

json to_json(const orbital::FlCase& c, std::uint64_t seed) {
	return {{"a", to_json(c.a)},
		{"class", c.cls == FormClass::phi0 ? "phi0" : "phi1"},
		{"gl", to_json(c.gl)},
		{"unitary", to_json(c.u)},
		{"ok", c.ok},
		{"seed", seed}};
}

json to_json(const orbital::ToyCase& c, long p) {
	return {{"a", to_json(c.a)}, {"p", p}, {"gl", to_json(c.gl)}, {"u_norm", to_json(c.u_norm)}, {"u_non_norm", to_json(c.u_non_norm)}, {"ok", c.ok}};
}

}  // namespace jrlab::io
