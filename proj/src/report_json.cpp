#include "jordan/report_json.hpp"

#include <string>

#include "jordan/error.hpp"

namespace jordan {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t count(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) bad(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> counts(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& e : j) out.push_back(count(e, what));
  return out;
}

bool flag(const Json& j, const char* what) {
  if (!j.is_boolean()) bad(std::string(what) + " must be true or false");
  return j.get<bool>();
}

}  // namespace

Json quiver_to_json(const QuiverDesc& q) {
  Json arrows = Json::array();
  for (const auto& row : q.arrows) arrows.push_back(row);
  return Json{{"vertices", vec_to_json(q.vertices)}, {"arrows", std::move(arrows)}};
}

QuiverDesc quiver_from_json(const Json& j) {
  QuiverDesc q;
  q.vertices = vec_from_json(field(j, "vertices"));
  const Json& arrows = field(j, "arrows");
  if (!arrows.is_array() || arrows.size() != q.vertices.size()) bad("\"arrows\" must be a square array");
  for (const auto& row : arrows) {
    q.arrows.push_back(counts(row, "arrow count"));
    if (q.arrows.back().size() != q.vertices.size()) bad("\"arrows\" must be a square array");
  }
  return q;
}

Json algebra_desc_to_json(const AlgebraDesc& d) {
  Json q = quiver_to_json(d.quiver);
  return Json{{"dim", d.dim},
              {"radical_dims", d.radical_dims},
              {"semisimple_rank", d.semisimple_rank},
              {"spectrum_split", !d.quiver.vertices.empty()},
              {"vertices", std::move(q["vertices"])},
              {"arrows", std::move(q["arrows"])}};
}

AlgebraDesc algebra_desc_from_json(const Json& j) {
  AlgebraDesc d;
  d.dim = count(field(j, "dim"), "\"dim\"");
  d.radical_dims = counts(field(j, "radical_dims"), "\"radical_dims\"");
  d.semisimple_rank = count(field(j, "semisimple_rank"), "\"semisimple_rank\"");
  const bool split = flag(field(j, "spectrum_split"), "\"spectrum_split\"");
  d.quiver = quiver_from_json(j);
  if (split == d.quiver.vertices.empty()) bad("\"spectrum_split\" disagrees with \"vertices\"");
  return d;
}

Json canonical_pair_to_json(const CanonicalPair& c) {
  return Json{{"lambda", rat_to_json(c.lambda)}, {"mu", rat_to_json(c.mu)}, {"conjugator", qmat_to_json(c.conjugator)}};
}

CanonicalPair canonical_pair_from_json(const Json& j) {
  return CanonicalPair{rat_from_json(field(j, "lambda")), rat_from_json(field(j, "mu")),
                       qmat_from_json(field(j, "conjugator"))};
}

Json decomposition_to_json(const Decomposition& d) {
  Json summands = Json::array();
  for (const auto& s : d.summands) {
    Json basis = Json::array();
    for (const auto& v : s.basis) basis.push_back(vec_to_json(v));
    summands.push_back(Json{{"eigenvalue", rat_to_json(s.eigenvalue)}, {"basis", std::move(basis)}, {"rep", rep_to_json(s.rep)}});
  }
  return Json{{"summands", std::move(summands)}, {"change_of_basis", qmat_to_json(d.change_of_basis)}};
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d;
  const Json& summands = field(j, "summands");
  if (!summands.is_array()) bad("\"summands\" must be an array");
  for (const auto& s : summands) {
    const Json& basis = field(s, "basis");
    if (!basis.is_array()) bad("\"basis\" must be an array");
    std::vector<QVec> vs;
    for (const auto& v : basis) vs.push_back(vec_from_json(v));
    d.summands.push_back(Summand{rat_from_json(field(s, "eigenvalue")), std::move(vs), rep_from_json(field(s, "rep"))});
  }
  d.change_of_basis = qmat_from_json(field(j, "change_of_basis"));
  return d;
}

Json iso_result_to_json(const IsoResult& r) {
  return Json{{"isomorphic", r.isomorphic},
              {"witness", r.witness ? qmat_to_json(*r.witness) : Json(nullptr)},
              {"reason", r.reason}};
}

IsoResult iso_result_from_json(const Json& j) {
  IsoResult r;
  r.isomorphic = flag(field(j, "isomorphic"), "\"isomorphic\"");
  const Json& w = field(j, "witness");
  if (!w.is_null()) r.witness = qmat_from_json(w);
  const Json& reason = field(j, "reason");
  if (!reason.is_string()) bad("\"reason\" must be a string");
  r.reason = reason.get<std::string>();
  return r;
}

}  // namespace jordan
