#include "jordan/json_io.hpp"

#include <charconv>
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

std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) bad(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

void only_keys(const Json& j, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* allowed : keys) known = known || k == allowed;
    if (!known) bad("unknown key \"" + k + "\"");
  }
}

std::vector<Rat> rats_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of fraction strings");
  std::vector<Rat> out;
  for (const auto& e : j) out.push_back(rat_from_json(e));
  return out;
}

std::size_t parse_index(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || (s.size() > 1 && s[0] == '0')) {
    bad("malformed block index \"" + std::string(s) + "\"");
  }
  return v;
}

}  // namespace

Json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) bad("rational entries must be strings such as \"-3/2\"");
  return Rat::parse(j.get<std::string>());
}

Json qmat_to_json(const QMat& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).str());
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

QMat qmat_from_json(const Json& j) {
  only_keys(j, {"rows", "cols", "entries"});
  const std::size_t rows = size_from_json(field(j, "rows"), "rows");
  const std::size_t cols = size_from_json(field(j, "cols"), "cols");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows) bad("entries must hold exactly `rows` rows");
  QMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols) bad("row " + std::to_string(i) + " must hold `cols` entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rat_from_json(entries[i][c]);
  }
  return m;
}

Json vec_to_json(const QVec& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(e.str());
  return out;
}

QVec vec_from_json(const Json& j) { return rats_from_json(j); }

Json partition_to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) bad("partition must be an array of positive integers");
  std::vector<std::size_t> parts;
  for (const auto& e : j) parts.push_back(size_from_json(e, "partition part"));
  try {
    return Partition(std::move(parts));
  } catch (const Error& e) {
    bad(e.what());
  }
}

Json rep_to_json(const Rep& r) {
  return Json{{"n", r.n()},
              {"partition", partition_to_json(r.partition())},
              {"X", qmat_to_json(r.X())},
              {"Y", qmat_to_json(r.Y())}};
}

Rep rep_from_json(const Json& j) {
  only_keys(j, {"n", "partition", "X", "Y"});
  QMat x = qmat_from_json(field(j, "X"));
  QMat y = qmat_from_json(field(j, "Y"));
  if (j.contains("n") && size_from_json(j["n"], "n") != x.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "stated n does not match the matrices");
  }
  Rep r = validate_rep(std::move(x), std::move(y));
  if (j.contains("partition") && !(partition_from_json(j["partition"]) == r.partition())) {
    throw Error(ErrorCode::InvariantViolation, "stated partition " + partition_from_json(j["partition"]).str() +
                                                   " differs from the Jordan type " + r.partition().str() + " of Y");
  }
  return r;
}

Json params_to_json(const PartitionParams& p) {
  Json toeplitz = Json::object();
  for (std::size_t i = 0; i < p.diag.size(); ++i) {
    if (!p.diag[i].empty()) toeplitz[std::to_string(i)] = vec_to_json(p.diag[i]);
  }
  for (const auto& [key, values] : p.coupling) {
    toeplitz[std::to_string(key.first) + "," + std::to_string(key.second)] = vec_to_json(values);
  }
  return Json{{"lambda", vec_to_json(p.lambda)}, {"toeplitz", std::move(toeplitz)}};
}

PartitionParams params_from_json(const Json& j, const Partition& p) {
  if (!j.is_object()) bad("params must be a JSON object");
  only_keys(j, {"lambda", "toeplitz"});
  PartitionParams out = PartitionParams::zero(p);
  if (j.contains("lambda")) {
    out.lambda = rats_from_json(j["lambda"]);
    if (out.lambda.size() != p.size()) {
      throw Error(ErrorCode::ParamCountMismatch, "\"lambda\" needs " + std::to_string(p.size()) + " entries");
    }
  }
  if (j.contains("toeplitz")) {
    const Json& t = j["toeplitz"];
    if (!t.is_object()) bad("\"toeplitz\" must be an object");
    for (const auto& [key, value] : t.items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) {
        const std::size_t i = parse_index(key);
        if (i >= p.size()) throw Error(ErrorCode::ParamCountMismatch, "block index " + key + " out of range");
        out.diag[i] = rats_from_json(value);
        if (out.diag[i].size() + 1 != p[i]) {
          throw Error(ErrorCode::ParamCountMismatch,
                      "block " + key + " needs " + std::to_string(p[i] - 1) + " Toeplitz coefficients");
        }
      } else {
        const std::size_t i = parse_index(std::string_view(key).substr(0, comma));
        const std::size_t k = parse_index(std::string_view(key).substr(comma + 1));
        if (i >= p.size() || k >= p.size() || i == k) {
          throw Error(ErrorCode::ParamCountMismatch, "coupling key " + key + " out of range");
        }
        out.coupling[{i, k}] = rats_from_json(value);
        if (out.coupling[{i, k}].size() != std::min(p[i], p[k])) {
          throw Error(ErrorCode::ParamCountMismatch,
                      "coupling " + key + " needs " + std::to_string(std::min(p[i], p[k])) + " coefficients");
        }
      }
    }
  }
  return out;
}

Json automorphism_to_json(const Automorphism& f) {
  return Json{{"p", vec_to_json(f.p().coefficients())}, {"c", f.c().str()}};
}

Automorphism automorphism_from_json(const Json& j) {
  only_keys(j, {"p", "c"});
  return {UPoly(rats_from_json(field(j, "p"))), rat_from_json(field(j, "c"))};
}

Json normal_poly_to_json(const NormalPoly& p) { return p.str(); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace jordan
