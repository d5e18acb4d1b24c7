#pragma once

// JSON encodings shared by the CLI and tests. Rationals travel as "p/q"
// strings; integers are JSON numbers when |n| < 2^53 and decimal strings
// otherwise. Decoders throw ValidationError on malformed documents.

#include <json.hpp>

#include "k3twist/brauer.hpp"
#include "k3twist/moduli.hpp"
#include "k3twist/walls.hpp"

namespace k3twist::json_io {

using nlohmann::json;

json encode(const Int& x);
json encode(const Rat& x);
json encode(const IntVec& v);
json encode(const RatVec& v);
json encode_rows(const IntMatrix& m); // [[...]]
json encode_rows(const RatMatrix& m); // integers as numbers, others as "p/q"
json encode_matrix(const IntMatrix& m); // {"rows", "cols", "data"}
json encode(const Lattice& l);
json encode(const Sublattice& s);
json encode(const MukaiVector& v);
json encode(const BField& b);
json encode(const BrauerWitness& w);
json encode(const Wall& w);
json encode(const Isometry& iso);
json encode(const ModuliReport& r);
json encode(const Inertia& s);

Int decode_int(const json& j);
Rat decode_rat(const json& j);
IntVec decode_int_vec(const json& j);
RatVec decode_rat_vec(const json& j);
// Accepts either [[...]] or {"rows", "cols", "data"}.
IntMatrix decode_int_matrix(const json& j);
RatMatrix decode_rat_matrix(const json& j);
// Object {"name"?, "gram"} or one of "U", "E8(-1)", "K3", "Mukai".
Lattice decode_lattice(const json& j);
Sublattice decode_sublattice(const json& j);
MukaiVector decode_mukai(const json& j);
HilbertCoeffs decode_hilbert(const json& j);
BField decode_bfield(const json& j);
BrauerWitness decode_witness(const json& j);
WallQuery decode_wall_query(const json& j);
Isometry decode_isometry(const json& j);

// Member access with a readable error for missing keys.
const json& field(const json& obj, const char* key);

} // namespace k3twist::json_io
