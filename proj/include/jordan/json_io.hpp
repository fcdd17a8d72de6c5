#pragma once

// JSON forms of the library types. Rationals are always canonical fraction strings
// ("-3/2", "7"); reading rejects anything else with ParseError.
//
//   QMat   {"rows": n, "cols": m, "entries": [["0", "1"], ...]}
//   Rep    {"n": n, "partition": [..], "X": QMat, "Y": QMat}
//   params {"lambda": ["1", "0"], "toeplitz": {"0": [c_1, ...], "0,1": [t_0, ...]}}
//
// In params, key "i" holds the Toeplitz coefficients of diagonal block i and key "i,j" the
// coupling block (i, j), both 0-indexed in partition order. Absent keys mean zeros.

#include "json.hpp"

#include "jordan/automorphism.hpp"
#include "jordan/rep.hpp"

namespace jordan {

using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json qmat_to_json(const QMat& m);
QMat qmat_from_json(const Json& j);

Json vec_to_json(const QVec& v);
QVec vec_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json rep_to_json(const Rep& r);
/// Validates the pair; a stated partition must agree with Y's Jordan type.
Rep rep_from_json(const Json& j);

Json params_to_json(const PartitionParams& p);
/// Throws ParamCountMismatch on wrong lengths, ParseError on malformed keys.
PartitionParams params_from_json(const Json& j, const Partition& p);

Json automorphism_to_json(const Automorphism& f);
Automorphism automorphism_from_json(const Json& j);

Json normal_poly_to_json(const NormalPoly& p);

/// Parses text as JSON, mapping syntax errors to ParseError.
Json parse_json(std::string_view text);

}  // namespace jordan
