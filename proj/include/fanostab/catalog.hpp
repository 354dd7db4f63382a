#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanostab/cohomology.hpp"
#include "fanostab/constructions.hpp"
#include "fanostab/io.hpp"
#include "fanostab/linprog.hpp"
#include "fanostab/stability.hpp"

namespace fanostab {

enum class ClassVerdict { stable, semistable, unstable };

inline std::string to_string(ClassVerdict v) {
  switch (v) {
    case ClassVerdict::stable:
      return "stable";
    case ClassVerdict::semistable:
      return "semistable";
    case ClassVerdict::unstable:
      return "unstable";
  }
  return "stable";
}

inline ClassVerdict class_verdict_from_string(const std::string& s) {
  if (s == "stable") return ClassVerdict::stable;
  if (s == "semistable") return ClassVerdict::semistable;
  if (s == "unstable") return ClassVerdict::unstable;
  throw input_error("unknown verdict '" + s + "'");
}

// One deformation class with its recorded verdict. `construction` names a
// preset when the class is mechanizable here; rank-one entries carry the index
// data the rule engine needs instead. `b2` is recorded only where the source
// data pins it down (rank-one entries and explicit constructions) — the
// unnamed stable classes ship without one rather than with an invented value.
struct CatalogEntry {
  std::string id;
  std::string description;
  std::optional<int> b2;
  ClassVerdict verdict = ClassVerdict::stable;
  std::optional<std::string> construction;
  std::optional<int> index;     // rank-one entries only
  Integer generator_degree = 0; // L0^3 for rank-one entries, 0 elsewhere
  std::string provenance;
};

namespace catalog_detail {

inline CatalogEntry rank_one(std::string id, std::string description, int index,
                             Integer degree, std::optional<std::string> construction = {}) {
  CatalogEntry e;
  e.id = std::move(id);
  e.description = std::move(description);
  e.b2 = 1;
  e.verdict = ClassVerdict::stable;
  e.construction = std::move(construction);
  e.index = index;
  e.generator_degree = std::move(degree);
  e.provenance = "rank-one classification";
  return e;
}

inline CatalogEntry listed(std::string id, std::string description, int b2, ClassVerdict v,
                           std::string construction, std::string provenance) {
  CatalogEntry e;
  e.id = std::move(id);
  e.description = std::move(description);
  e.b2 = b2;
  e.verdict = v;
  e.construction = std::move(construction);
  e.provenance = std::move(provenance);
  return e;
}

}  // namespace catalog_detail

// The full roster: 18 rank-one classes, then the b2 >= 2 classes — 2 + 10
// semistable, 7 unstable, 68 stable (one worked example plus the remainder).
// Counts are always derived by iterating this list.
inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    using catalog_detail::listed;
    using catalog_detail::rank_one;
    std::vector<CatalogEntry> es;

    // b2 = 1, ordered by descending index, then anticanonical degree.
    es.push_back(rank_one("b1.1", "projective 3-space", 4, Integer(1), "p3"));
    es.push_back(rank_one("b1.2", "smooth quadric hypersurface in P^4", 3, Integer(2), "q3"));
    es.push_back(rank_one("b1.3", "sextic hypersurface in the weighted space P(1,1,1,2,3)",
                          2, Integer(1)));
    es.push_back(rank_one("b1.4", "double cover of P^3 branched along a quartic surface", 2,
                          Integer(2)));
    es.push_back(rank_one("b1.5", "cubic hypersurface in P^4", 2, Integer(3)));
    es.push_back(
        rank_one("b1.6", "complete intersection of two quadrics in P^5", 2, Integer(4)));
    es.push_back(rank_one(
        "b1.7", "linear section of the Grassmannian Gr(2,5) in its Pluecker embedding", 2,
        Integer(5)));
    es.push_back(rank_one("b1.8", "double cover of P^3 branched along a sextic surface", 1,
                          Integer(2)));
    es.push_back(rank_one("b1.9", "quartic hypersurface in P^4", 1, Integer(4)));
    es.push_back(rank_one(
        "b1.10", "double cover of a quadric threefold branched along a degree-8 surface", 1,
        Integer(4)));
    es.push_back(rank_one("b1.11", "complete intersection of a quadric and a cubic in P^5",
                          1, Integer(6)));
    es.push_back(rank_one("b1.12", "complete intersection of three quadrics in P^6", 1,
                          Integer(8)));
    es.push_back(rank_one(
        "b1.13", "section of Gr(2,5) by two hyperplanes and a quadric", 1, Integer(10)));
    es.push_back(
        rank_one("b1.14", "prime Fano threefold of anticanonical degree 12", 1, Integer(12)));
    es.push_back(rank_one("b1.15", "linear section of the Grassmannian Gr(2,6)", 1,
                          Integer(14)));
    es.push_back(
        rank_one("b1.16", "prime Fano threefold of anticanonical degree 16", 1, Integer(16)));
    es.push_back(
        rank_one("b1.17", "prime Fano threefold of anticanonical degree 18", 1, Integer(18)));
    es.push_back(
        rank_one("b1.18", "prime Fano threefold of anticanonical degree 22", 1, Integer(22)));

    // Semistable, b2 >= 2: two named blow-ups and the ten del Pezzo products
    // (indexed by the degree K_S^2 of the surface factor; the two degree-8
    // surfaces are distinguished by a/b suffixes).
    es.push_back(listed("i.1", "blow-up of P^3 along a line", 2, ClassVerdict::semistable,
                        "p3_blowup_line", "semistable list"));
    es.push_back(listed("i.2",
                        "blow-up of P^3 along two disjoint lines, then along two disjoint "
                        "ruling fibers of the first exceptional divisor",
                        5, ClassVerdict::semistable, "two_exc_fibers_blowup",
                        "semistable list"));
    es.push_back(listed("i.3.dp9", "product of P^2 with P^1", 2, ClassVerdict::semistable,
                        "p2xp1", "semistable list"));
    es.push_back(listed("i.3.dp8a", "product of P^1 x P^1 with P^1", 3,
                        ClassVerdict::semistable, "p1xp1xp1", "semistable list"));
    es.push_back(listed("i.3.dp8b", "product of the Hirzebruch surface F1 with P^1", 3,
                        ClassVerdict::semistable, "f1xp1", "semistable list"));
    for (int k = 2; k <= 8; ++k) {
      const int degree = 9 - k;
      es.push_back(listed(
          "i.3.dp" + std::to_string(degree),
          "product of the blow-up of P^2 in " + std::to_string(k) + " points with P^1",
          k + 2, ClassVerdict::semistable, "dp" + std::to_string(k) + "xp1",
          "semistable list"));
    }

    // Unstable, b2 >= 2.
    es.push_back(listed("ii.1", "V7 = P(O + O(1)) over P^2 (blow-up of P^3 at a point)", 2,
                        ClassVerdict::unstable, "v7", "unstable list"));
    es.push_back(listed("ii.2",
                        "blow-up of the Veronese cone W4 in P^6 at its vertex "
                        "(P(O + O(2)) over P^2)",
                        2, ClassVerdict::unstable, "w4_blowup", "unstable list"));
    es.push_back(listed("ii.3", "blow-up of V7 along a line of the exceptional plane", 3,
                        ClassVerdict::unstable, "v7_blowup_exc_line", "unstable list"));
    es.push_back(listed("ii.4",
                        "blow-up of V7 along the strict transform of a line through the "
                        "blown-up point",
                        3, ClassVerdict::unstable, "v7_blowup_strict_line", "unstable list"));
    es.push_back(listed("ii.5",
                        "blow-up of the cone over the quadric surface at its vertex "
                        "(P(O + O(1,1)) over P^1 x P^1)",
                        3, ClassVerdict::unstable, "quadric_cone_blowup", "unstable list"));
    es.push_back(listed("ii.6", "blow-up of F1 x P^1 along (-1)-curve x point", 4,
                        ClassVerdict::unstable, "p1xf1_blowup", "unstable list"));
    es.push_back(listed("ii.7",
                        "blow-up of P^3 at a point, then the strict transform of a line "
                        "through it, then a ruling fiber of the second exceptional divisor",
                        4, ClassVerdict::unstable, "example1", "unstable list"));

    // Stable, b2 >= 2: one worked conic-bundle example plus the remainder.
    es.push_back(listed("iii.1",
                        "blow-up of P^3 at a point and along a disjoint plane cubic; conic "
                        "bundle over P^2",
                        3, ClassVerdict::stable, "example2", "stable list (worked example)"));
    for (int k = 2; k <= 68; ++k) {
      CatalogEntry e;
      e.id = "iii." + std::to_string(k);
      e.description = "deformation class with stable tangent bundle; construction not "
                      "mechanized here";
      e.verdict = ClassVerdict::stable;
      e.provenance = "stable remainder";
      es.push_back(std::move(e));
    }
    return es;
  }();
  return entries;
}

struct CatalogCounts {
  int stable_b2ge2 = 0;
  int semistable_b2ge2 = 0;
  int unstable_b2ge2 = 0;
  int stable_b2one = 0;
  int total_b2ge2() const { return stable_b2ge2 + semistable_b2ge2 + unstable_b2ge2; }
  int total() const { return total_b2ge2() + stable_b2one; }
};

inline CatalogCounts counts() {
  CatalogCounts c;
  for (const auto& e : catalog_entries()) {
    if (e.b2 && *e.b2 == 1) {
      ++c.stable_b2one;
      continue;
    }
    switch (e.verdict) {
      case ClassVerdict::stable:
        ++c.stable_b2ge2;
        break;
      case ClassVerdict::semistable:
        ++c.semistable_b2ge2;
        break;
      case ClassVerdict::unstable:
        ++c.unstable_b2ge2;
        break;
    }
  }
  return c;
}

struct CatalogFilter {
  std::optional<ClassVerdict> verdict;
  std::optional<int> b2;
};

// Filtered listing in catalog order (rank-one block, then the b2 >= 2 lists).
// The b2 filter matches only entries whose b2 is recorded.
inline std::vector<CatalogEntry> list_entries(const CatalogFilter& f = {}) {
  std::vector<CatalogEntry> out;
  for (const auto& e : catalog_entries()) {
    if (f.verdict && e.verdict != *f.verdict) continue;
    if (f.b2 && (!e.b2 || *e.b2 != *f.b2)) continue;
    out.push_back(e);
  }
  return out;
}

inline const CatalogEntry& catalog_entry(const std::string& id) {
  for (const auto& e : catalog_entries())
    if (e.id == id) return e;
  throw input_error("unknown catalog id '" + id + "'");
}

// The two shipped vanishing-bound systems for the worked conic-bundle example:
// exact upper bounds on the slope of a rank-one subsheaf candidate with
// c1 = a1 H1 + a2 H2 + a3 H3, in the two cases of the argument. Maximizing
// them reproduces the bounds 9 and -17, both below the respective reference
// slopes 32/3 and -32/3.
inline ConstraintSystem example2_tangent_system() {
  ConstraintSystem cs;
  cs.name = "ex2-case1";
  cs.variables = {"a1", "a2", "a3"};
  cs.objective = {Rational(9), Rational(13), Rational(19)};
  cs.constraints = {
      {{Rational(0), Rational(1), Rational(0)}, Relation::le, Rational(0)},
      {{Rational(0), Rational(1), Rational(1)}, Relation::le, Rational(0)},
      {{Rational(1), Rational(1), Rational(2)}, Relation::le, Rational(1)},
  };
  return cs;
}

inline ConstraintSystem example2_cotangent_system() {
  ConstraintSystem cs;
  cs.name = "ex2-case2";
  cs.variables = {"a1", "a2", "a3"};
  cs.objective = {Rational(9), Rational(13), Rational(19)};
  cs.constraints = {
      {{Rational(0), Rational(1), Rational(0)}, Relation::le, Rational(-2)},
      {{Rational(0), Rational(1), Rational(1)}, Relation::le, Rational(-2)},
      {{Rational(1), Rational(1), Rational(2)}, Relation::le, Rational(-1)},
  };
  return cs;
}

struct EntryReport {
  CatalogEntry entry;
  bool mechanized = false;
  bool consistent = true;
  std::optional<Verdict> computed;       // contraction-candidate test
  std::optional<B2OneVerdict> rank_one;  // index rule engine
  std::vector<std::string> notes;
};

// Rebuilds whatever the entry makes mechanizable and checks it against the
// recorded verdict: recorded unstable must be computed unstable; recorded
// (semi)stable must not admit a computed destabilizer; rank-one entries must
// be decided stable by the rule engine. Entries with no recipe are reported
// as recorded claims, consistent by vacuity.
inline EntryReport verify_entry(const std::string& id) {
  EntryReport r;
  r.entry = catalog_entry(id);
  const CatalogEntry& e = r.entry;

  if (e.construction) {
    const Variety3Fold x = threefold_preset(*e.construction);
    const Verdict v = theorem1_check(x);
    r.computed = v;
    r.mechanized = true;
    r.notes.push_back("(-K)^3 = " + x.anticanonical_degree().str());
    if (v.witness)
      r.notes.push_back("witness " + v.witness->sheaf.name + ": slope " +
                        to_string(v.witness->candidate_slope) + " vs " +
                        to_string(v.witness->reference_slope));
    switch (e.verdict) {
      case ClassVerdict::unstable:
        if (v.status != StabilityStatus::unstable) r.consistent = false;
        break;
      case ClassVerdict::semistable:
        if (v.status == StabilityStatus::unstable) r.consistent = false;
        break;
      case ClassVerdict::stable:
        if (v.status != StabilityStatus::stable_among_tested) r.consistent = false;
        break;
    }
  }

  if (e.index) {
    IndexedFano f;
    f.dimension = 3;
    f.index = *e.index;
    f.generator_degree = e.generator_degree;
    const B2OneVerdict bv = check_b2_one_stability(f);
    r.rank_one = bv;
    r.mechanized = true;
    r.notes.push_back(std::string("rank-one rule engine: ") +
                      (bv.stable ? "stable" : "inconclusive") + " at index " +
                      std::to_string(*e.index));
    if (bv.stable != (e.verdict == ClassVerdict::stable)) r.consistent = false;
  }

  if (e.id == "iii.1") {
    // The shipped bound systems only apply once the side condition holds:
    // candidates exceeding the relative tangent slope map onto the base side.
    const Variety3Fold x = threefold_preset("example2");
    const FibrationDescriptor* g = x.find_fibration("g");
    const Rational mu_t = slope(x, tangent_sheaf(x));
    const Rational mu_rel = slope(x, relative_tangent(x, *g));
    const bool side = mu_rel < mu_t;
    r.notes.push_back("side condition mu(T_{X/" + g->target + "}) = " + to_string(mu_rel) +
                      " < mu(T_X) = " + to_string(mu_t) +
                      (side ? " holds" : " FAILS"));
    if (!side) r.consistent = false;
    const LpResult c1 = maximize_slope(example2_tangent_system());
    const LpResult c2 = maximize_slope(example2_cotangent_system());
    const Rational mu_omega = slope(x, cotangent_sheaf(x));
    const bool ok1 = c1.status == LpStatus::optimal && c1.max_value < mu_t;
    const bool ok2 = c2.status == LpStatus::optimal && c2.max_value < mu_omega;
    r.notes.push_back("bound system " + example2_tangent_system().name + ": max " +
                      (c1.status == LpStatus::optimal ? to_string(c1.max_value)
                                                      : to_string(c1.status)) +
                      " < " + to_string(mu_t) + (ok1 ? " holds" : " FAILS"));
    r.notes.push_back("bound system " + example2_cotangent_system().name + ": max " +
                      (c2.status == LpStatus::optimal ? to_string(c2.max_value)
                                                      : to_string(c2.status)) +
                      " < " + to_string(mu_omega) + (ok2 ? " holds" : " FAILS"));
    if (!ok1 || !ok2) r.consistent = false;
  }

  if (!r.mechanized)
    r.notes.push_back("not mechanized: verdict is a recorded claim (no construction recipe)");
  return r;
}

// --------------------------------------------------------------------------
// Serialization. Mechanized entries embed their variety document and computed
// verdict so the shipped data file is self-contained.
// --------------------------------------------------------------------------

inline Json catalog_entry_to_json(const CatalogEntry& e) {
  Json j;
  j["id"] = e.id;
  j["description"] = e.description;
  if (e.b2)
    j["b2"] = *e.b2;
  else
    j["b2"] = nullptr;
  j["verdict"] = to_string(e.verdict);
  if (e.construction)
    j["construction"] = *e.construction;
  else
    j["construction"] = nullptr;
  if (e.index)
    j["index"] = *e.index;
  else
    j["index"] = nullptr;
  if (e.generator_degree != 0)
    j["generator_degree"] = to_file_int(e.generator_degree);
  else
    j["generator_degree"] = nullptr;
  j["provenance"] = e.provenance;
  if (e.construction) {
    const Variety3Fold x = threefold_preset(*e.construction);
    j["variety"] = variety_to_json(x);
    j["witness"] = verdict_to_json(theorem1_check(x));
  } else {
    j["variety"] = nullptr;
    j["witness"] = nullptr;
  }
  return j;
}

inline Json catalog_to_json() {
  Json j;
  Json entries = Json::array();
  for (const auto& e : catalog_entries()) entries.push_back(catalog_entry_to_json(e));
  j["entries"] = std::move(entries);
  const CatalogCounts c = counts();
  Json jc;
  Json ge2;
  ge2["stable"] = c.stable_b2ge2;
  ge2["semistable"] = c.semistable_b2ge2;
  ge2["unstable"] = c.unstable_b2ge2;
  ge2["total"] = c.total_b2ge2();
  jc["b2_ge_2"] = std::move(ge2);
  Json one;
  one["stable"] = c.stable_b2one;
  jc["b2_1"] = std::move(one);
  jc["total"] = c.total();
  j["counts"] = std::move(jc);
  return j;
}

inline Json entry_report_to_json(const EntryReport& r) {
  Json j;
  j["id"] = r.entry.id;
  j["description"] = r.entry.description;
  j["claimed"] = to_string(r.entry.verdict);
  j["mechanized"] = r.mechanized;
  j["consistent"] = r.consistent;
  if (r.computed)
    j["computed"] = verdict_to_json(*r.computed);
  else
    j["computed"] = nullptr;
  if (r.rank_one)
    j["rank_one"] = b2one_to_json(*r.rank_one);
  else
    j["rank_one"] = nullptr;
  j["notes"] = r.notes;
  return j;
}

}  // namespace fanostab
