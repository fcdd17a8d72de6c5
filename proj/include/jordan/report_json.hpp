#pragma once

// JSON forms of the analysis results.
//
//   AlgebraDesc    {"dim", "radical_dims", "semisimple_rank", "spectrum_split", "vertices", "arrows"}
//   QuiverDesc     {"vertices": ["0", "1/2"], "arrows": [[2]]}
//   CanonicalPair  {"lambda", "mu", "conjugator": QMat}
//   Decomposition  {"summands": [{"eigenvalue", "basis": [[..]], "rep": Rep}], "change_of_basis": QMat}
//   IsoResult      {"isomorphic", "witness": QMat or null, "reason"}
//
// Key order is fixed so that output is byte-stable.

#include "jordan/json_io.hpp"
#include "jordan/structure.hpp"

namespace jordan {

Json quiver_to_json(const QuiverDesc& q);
QuiverDesc quiver_from_json(const Json& j);

Json algebra_desc_to_json(const AlgebraDesc& d);
AlgebraDesc algebra_desc_from_json(const Json& j);

Json canonical_pair_to_json(const CanonicalPair& c);
CanonicalPair canonical_pair_from_json(const Json& j);

Json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

Json iso_result_to_json(const IsoResult& r);
IsoResult iso_result_from_json(const Json& j);

}  // namespace jordan
