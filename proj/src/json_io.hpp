#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "chambers.hpp"
#include "cones.hpp"
#include "hermitian.hpp"
#include "orbital.hpp"

namespace jrlab::io {

using json = nlohmann::json;

struct parse_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

json parse(const std::string& text);	// throws parse_error

// Scalars are "num/den" strings; integers may also come in as numbers.
json to_json(const Q& q);
Q q_from(const json& j);
json to_json(const QE& z);	// {"x","y","kind"}
QE qe_from(const json& j, const Q& eps);	// also accepts a plain F scalar

json to_json(const MatQ& m);	// list of rows
MatQ matq_from(const json& j);
json to_json(const MatE& m);
MatE mate_from(const json& j, const Q& eps);
json column_json(const MatQ& v);	// column vector as a flat list
json column_json(const MatE& v);

json to_json(const Triple<Q>& x);
Triple<Q> triple_from(const json& j);
json to_json(const Invariants<Q>& a);
Invariants<Q> invariants_from(const json& j);

json to_json(const HermitianForm& phi);
HermitianForm form_from(const json& j, const Local& ctx);
// {"A":…,"b":…,"gram":…}; A and b entries in the {"x","y"} form or plain
json to_json(const HermitianPair& x, const HermitianForm& phi);
HermitianPair pair_from(const json& j, const Local& ctx);

json to_json(const cones::Parab& p);	// flag form
cones::Parab parab_from(int n, const json& j);
json to_json(const chambers::Chamber& c);

json to_json(const CheckReport& r, std::uint64_t seed);
json to_json(const orbital::OrbitalReport& r);
json to_json(const orbital::FlCase& c, std::uint64_t seed);
json to_json(const orbital::ToyCase& c, long p);

}  // namespace jrlab::io
