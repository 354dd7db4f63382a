#pragma once

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "fanostab/cohomology.hpp"
#include "fanostab/lattice.hpp"
#include "fanostab/linprog.hpp"
#include "fanostab/stability.hpp"
#include "fanostab/surface.hpp"

namespace fanostab {

// Insertion-ordered JSON keeps serialized field order fixed, which the CLI
// round-trip guarantee (byte-identical re-emission) depends on.
using Json = nlohmann::ordered_json;

namespace io_detail {

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw input_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::int64_t as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer())
    throw input_error("expected an integer for " + what);
  return j.get<std::int64_t>();
}

inline std::string as_string(const Json& j, const std::string& what) {
  if (!j.is_string()) throw input_error("expected a string for " + what);
  return j.get<std::string>();
}

}  // namespace io_detail

// Files carry plain JSON numbers; they are bridged to 64 bits with an
// overflow check while in-memory arithmetic stays arbitrary-precision.
inline std::int64_t to_file_int(const Integer& v) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max())
    throw input_error("integer exceeds the 64-bit file format");
  return static_cast<std::int64_t>(v);
}

inline Json integer_array(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_file_int(x));
  return a;
}

inline std::vector<Integer> integer_array_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw input_error("expected an array for " + what);
  std::vector<Integer> out;
  out.reserve(j.size());
  for (const auto& e : j) out.emplace_back(io_detail::as_int(e, what));
  return out;
}

inline Json rational_array(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline std::vector<Rational> rational_array_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw input_error("expected an array for " + what);
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(parse_rational(io_detail::as_string(e, what)));
  return out;
}

// --------------------------------------------------------------------------
// Varieties and surfaces. A threefold document carries "triples", a surface
// document carries "pairing"; readers distinguish them by that.
// --------------------------------------------------------------------------

inline Json variety_to_json(const Variety3Fold& x) {
  Json j;
  j["name"] = x.name;
  j["rank"] = x.rank();
  j["basis"] = x.basis;
  Json triples = Json::array();
  for (const auto& [key, value] : x.form.entries())
    triples.push_back(Json::array({key[0], key[1], key[2], to_file_int(value)}));
  j["triples"] = std::move(triples);
  j["K"] = integer_array(x.canonical.coeffs);
  Json curves = Json::array();
  for (const auto& c : x.curves) {
    Json jc;
    jc["name"] = c.name;
    jc["genus"] = c.genus;
    jc["meets"] = integer_array(c.meets);
    curves.push_back(std::move(jc));
  }
  j["curves"] = std::move(curves);
  Json fibs = Json::array();
  for (const auto& f : x.fibrations) {
    Json jf;
    jf["name"] = f.name;
    jf["target"] = f.target;
    jf["target_dim"] = f.target_dim;
    jf["relative_rank"] = f.relative_rank;
    jf["fstar_canonical"] = integer_array(f.target_canonical_pullback.coeffs);
    jf["has_discriminant"] = f.has_discriminant;
    fibs.push_back(std::move(jf));
  }
  j["fibrations"] = std::move(fibs);
  Json classes = Json::array();
  for (const auto& [name, d] : x.classes) {
    Json jc;
    jc["name"] = name;
    jc["coeffs"] = integer_array(d.coeffs);
    classes.push_back(std::move(jc));
  }
  j["classes"] = std::move(classes);
  j["provenance"] = x.provenance;
  return j;
}

inline Variety3Fold variety_from_json(const Json& j) {
  using io_detail::as_int;
  using io_detail::as_string;
  using io_detail::require;
  Variety3Fold x;
  x.name = as_string(require(j, "name"), "name");
  for (const auto& b : require(j, "basis"))
    x.basis.push_back(as_string(b, "basis label"));
  const int n = x.rank();
  if (n == 0) throw input_error("variety needs a nonempty basis");
  if (j.contains("rank") && as_int(j.at("rank"), "rank") != n)
    throw input_error("rank field disagrees with basis length");
  x.form = TrilinearForm(n);
  for (const auto& t : require(j, "triples")) {
    if (!t.is_array() || t.size() != 4)
      throw input_error("each triple must be [i, j, k, value]");
    const auto i = as_int(t[0], "triple index"), jj = as_int(t[1], "triple index"),
               k = as_int(t[2], "triple index");
    if (i < 0 || i >= n || jj < 0 || jj >= n || k < 0 || k >= n)
      throw input_error("triple index out of range");
    x.form.set(static_cast<int>(i), static_cast<int>(jj), static_cast<int>(k),
               Integer(as_int(t[3], "triple value")));
  }
  x.canonical = DivisorClass(integer_array_from_json(require(j, "K"), "K"));
  if (x.canonical.rank() != n) throw input_error("canonical class length must match basis");
  if (j.contains("curves"))
    for (const auto& c : j.at("curves")) {
      CurveClass cc;
      cc.name = as_string(require(c, "name"), "curve name");
      cc.genus = static_cast<int>(as_int(require(c, "genus"), "curve genus"));
      cc.meets = integer_array_from_json(require(c, "meets"), "curve meets");
      if (static_cast<int>(cc.meets.size()) != n)
        throw input_error("curve meeting vector length must match basis");
      x.curves.push_back(std::move(cc));
    }
  if (j.contains("fibrations"))
    for (const auto& f : j.at("fibrations")) {
      FibrationDescriptor fd;
      fd.name = as_string(require(f, "name"), "fibration name");
      fd.target = as_string(require(f, "target"), "fibration target");
      fd.target_dim = static_cast<int>(as_int(require(f, "target_dim"), "target_dim"));
      if (fd.target_dim != 1 && fd.target_dim != 2)
        throw input_error("fibration target_dim must be 1 or 2");
      fd.relative_rank =
          static_cast<int>(as_int(require(f, "relative_rank"), "relative_rank"));
      if (fd.relative_rank < 1) throw input_error("relative_rank must be >= 1");
      fd.target_canonical_pullback = DivisorClass(
          integer_array_from_json(require(f, "fstar_canonical"), "fstar_canonical"));
      if (fd.target_canonical_pullback.rank() != n)
        throw input_error("fibration pullback class length must match basis");
      if (f.contains("has_discriminant")) {
        if (!f.at("has_discriminant").is_boolean())
          throw input_error("has_discriminant must be boolean");
        fd.has_discriminant = f.at("has_discriminant").get<bool>();
      }
      x.fibrations.push_back(std::move(fd));
    }
  if (j.contains("classes"))
    for (const auto& c : j.at("classes")) {
      const std::string cname = as_string(require(c, "name"), "class name");
      DivisorClass d(integer_array_from_json(require(c, "coeffs"), "class coeffs"));
      if (d.rank() != n) throw input_error("named class length must match basis");
      x.classes.emplace_back(cname, std::move(d));
    }
  if (j.contains("provenance"))
    for (const auto& p : j.at("provenance"))
      x.provenance.push_back(as_string(p, "provenance step"));
  return x;
}

inline Json surface_to_json(const Surface& s) {
  Json j;
  j["name"] = s.name;
  j["rank"] = s.rank();
  j["basis"] = s.basis;
  Json pairing = Json::array();
  for (const auto& row : s.pairing) pairing.push_back(integer_array(row));
  j["pairing"] = std::move(pairing);
  j["K"] = integer_array(s.canonical.coeffs);
  return j;
}

inline Surface surface_from_json(const Json& j) {
  using io_detail::as_string;
  using io_detail::require;
  Surface s;
  s.name = as_string(require(j, "name"), "name");
  for (const auto& b : require(j, "basis")) s.basis.push_back(as_string(b, "basis label"));
  const int n = s.rank();
  if (n == 0) throw input_error("surface needs a nonempty basis");
  if (j.contains("rank") && io_detail::as_int(j.at("rank"), "rank") != n)
    throw input_error("rank field disagrees with basis length");
  const Json& pairing = require(j, "pairing");
  if (!pairing.is_array() || static_cast<int>(pairing.size()) != n)
    throw input_error("pairing must be a dense rank x rank matrix");
  for (const auto& row : pairing) {
    auto r = integer_array_from_json(row, "pairing row");
    if (static_cast<int>(r.size()) != n)
      throw input_error("pairing must be a dense rank x rank matrix");
    s.pairing.push_back(std::move(r));
  }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (s.pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] !=
          s.pairing[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)])
        throw input_error("surface pairing must be symmetric");
  s.canonical = DivisorClass(integer_array_from_json(require(j, "K"), "K"));
  if (s.canonical.rank() != n) throw input_error("canonical class length must match basis");
  return s;
}

// --------------------------------------------------------------------------
// Constraint systems and LP results.
// --------------------------------------------------------------------------

inline Json constraint_system_to_json(const ConstraintSystem& cs) {
  Json j;
  j["name"] = cs.name;
  j["variables"] = cs.variables;
  j["objective"] = rational_array(cs.objective);
  Json cons = Json::array();
  for (const auto& c : cs.constraints) {
    Json jc;
    jc["coeffs"] = rational_array(c.coeffs);
    jc["rel"] = to_string(c.rel);
    jc["rhs"] = to_string(c.rhs);
    cons.push_back(std::move(jc));
  }
  j["constraints"] = std::move(cons);
  return j;
}

inline ConstraintSystem constraint_system_from_json(const Json& j) {
  using io_detail::as_string;
  using io_detail::require;
  ConstraintSystem cs;
  if (j.contains("name")) cs.name = as_string(j.at("name"), "name");
  for (const auto& v : require(j, "variables"))
    cs.variables.push_back(as_string(v, "variable label"));
  cs.objective = rational_array_from_json(require(j, "objective"), "objective");
  if (cs.objective.size() != cs.variables.size())
    throw input_error("objective length must match variable count");
  if (j.contains("constraints"))
    for (const auto& c : j.at("constraints")) {
      LinearConstraint lc;
      lc.coeffs = rational_array_from_json(require(c, "coeffs"), "constraint coeffs");
      if (lc.coeffs.size() != cs.variables.size())
        throw input_error("constraint length must match variable count");
      lc.rel = relation_from_string(as_string(require(c, "rel"), "constraint relation"));
      lc.rhs = parse_rational(as_string(require(c, "rhs"), "constraint rhs"));
      cs.constraints.push_back(std::move(lc));
    }
  return cs;
}

inline Json lp_result_to_json(const LpResult& r) {
  Json j;
  j["status"] = to_string(r.status);
  if (r.status == LpStatus::optimal) {
    j["max"] = to_string(r.max_value);
    j["point"] = rational_array(r.point);
  }
  return j;
}

// --------------------------------------------------------------------------
// Stability verdicts.
// --------------------------------------------------------------------------

inline Json sheaf_to_json(const SheafDescriptor& f) {
  Json j;
  j["name"] = f.name;
  j["rank"] = f.rank;
  j["c1"] = integer_array(f.c1.coeffs);
  return j;
}

inline Json candidate_to_json(const CandidateEval& c) {
  Json j;
  j["sheaf"] = sheaf_to_json(c.sheaf);
  j["side"] = c.side == CheckSide::tangent ? "tangent" : "cotangent";
  j["slope"] = to_string(c.candidate_slope);
  j["reference"] = to_string(c.reference_slope);
  return j;
}

// Witness field order follows the documented envelope: {sheaf, slope, mu_tx};
// mu_tx holds the reference slope of the side the witness lives on (mu(T_X)
// for tangent-side witnesses, mu(Omega^1_X) for cotangent-side ones).
inline Json verdict_to_json(const Verdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  if (v.witness) {
    Json w;
    w["sheaf"] = sheaf_to_json(v.witness->sheaf);
    w["slope"] = to_string(v.witness->candidate_slope);
    w["mu_tx"] = to_string(v.witness->reference_slope);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  Json cands = Json::array();
  for (const auto& c : v.candidates) cands.push_back(candidate_to_json(c));
  j["candidates"] = std::move(cands);
  return j;
}

// --------------------------------------------------------------------------
// Rank-one rule traces.
// --------------------------------------------------------------------------

inline Json b2one_to_json(const B2OneVerdict& v) {
  Json j;
  j["status"] = v.stable ? "stable" : "inconclusive";
  Json trace = Json::array();
  for (const auto& s : v.trace) {
    Json js;
    js["condition"] = s.condition;
    js["rule"] = s.rule;
    js["established"] = s.established;
    js["statement"] = s.fact.statement;
    js["hypothesis"] = s.fact.hypothesis;
    js["citation"] = s.fact.citation;
    trace.push_back(std::move(js));
  }
  j["trace"] = std::move(trace);
  return j;
}

}  // namespace fanostab
