// Command-line surface for the fanostab library. Every subcommand emits a
// deterministic envelope {status, payload, provenance}; --format json prints
// it as JSON, --format text prints a human rendering of the same payload.
// Exit code 0 covers every mathematical outcome (including "unbounded" and
// "infeasible"); nonzero is reserved for malformed input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fanostab/fanostab.hpp"

namespace {

using namespace fanostab;

Json ok_envelope(Json payload, const std::vector<std::string>& provenance) {
  Json j;
  j["status"] = "ok";
  j["payload"] = std::move(payload);
  j["provenance"] = provenance;
  return j;
}

void emit_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int fail_input(const std::string& format, const std::string& message) {
  if (format == "json") {
    Json j;
    j["status"] = "input-error";
    j["payload"] = Json{{"message", message}};
    emit_json(j);
  } else {
    std::cerr << "input-error: " << message << "\n";
  }
  return 1;
}

Json parse_json_text(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("malformed JSON in " + what);
  return j;
}

// Documents may arrive bare or wrapped in an ok-envelope; unwrap the latter.
Json unwrap_payload(Json j) {
  if (j.is_object() && j.contains("status") && j.contains("payload")) {
    if (j.at("status") != "ok") throw input_error("input envelope has non-ok status");
    return j.at("payload");
  }
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_stdin() {
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

Variety3Fold load_variety(const std::string& preset, const std::string& file) {
  if (!preset.empty()) return threefold_preset(preset);
  const std::string text = file.empty() ? read_stdin() : read_file(file);
  const std::string what = file.empty() ? "stdin" : "file '" + file + "'";
  return variety_from_json(unwrap_payload(parse_json_text(text, what)));
}

std::vector<Integer> parse_integer_csv(const std::string& csv, const std::string& what) {
  std::vector<Integer> out;
  std::string token;
  std::istringstream ss(csv);
  while (std::getline(ss, token, ',')) out.push_back(parse_integer(token));
  if (out.empty()) throw input_error(what + " must be a comma-separated integer vector");
  return out;
}

SheafDescriptor sheaf_from_flag(const Variety3Fold& x, const std::string& flag) {
  if (flag == "tangent") return tangent_sheaf(x);
  if (flag == "cotangent") return cotangent_sheaf(x);
  const std::string rel = "relative:";
  if (flag.rfind(rel, 0) == 0) {
    const std::string name = flag.substr(rel.size());
    const FibrationDescriptor* f = x.find_fibration(name);
    if (!f) throw input_error("variety has no fibration named '" + name + "'");
    return relative_tangent(x, *f);
  }
  const std::string custom = "custom:";
  if (flag.rfind(custom, 0) == 0) {
    const std::string rest = flag.substr(custom.size());
    const auto split = rest.rfind(':');
    if (split == std::string::npos)
      throw input_error("--sheaf custom needs the form custom:<c1 vector>:<rank>");
    SheafDescriptor s;
    s.name = "custom";
    s.c1 = DivisorClass(parse_integer_csv(rest.substr(0, split), "custom c1"));
    const Integer r = parse_integer(rest.substr(split + 1));
    if (r <= 0 || r > 1000) throw input_error("custom sheaf rank must be a small positive integer");
    s.rank = static_cast<int>(r);
    if (s.c1.rank() != x.rank())
      throw input_error("custom c1 length must match the variety rank");
    return s;
  }
  throw input_error("unknown --sheaf value '" + flag +
                    "' (expected tangent | cotangent | relative:<fibration> | "
                    "custom:<c1 vector>:<rank>)");
}

std::string render_vector(const std::vector<Integer>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + ")";
}

std::string render_rational_vector(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + ")";
}

void print_variety_text(const Variety3Fold& x) {
  std::cout << "name: " << x.name << "\n";
  std::cout << "rank: " << x.rank() << "\n";
  std::cout << "basis:";
  for (const auto& b : x.basis) std::cout << " " << b;
  std::cout << "\n";
  std::cout << "K: " << render_vector(x.canonical.coeffs) << "\n";
  std::cout << "(-K)^3: " << x.anticanonical_degree().str() << "\n";
  std::cout << "degree form: " << render_rational_vector(degree_form(x)) << "\n";
  for (const auto& c : x.curves)
    std::cout << "curve " << c.name << " (genus " << c.genus << "): meets "
              << render_vector(c.meets) << "\n";
  for (const auto& f : x.fibrations)
    std::cout << "fibration " << f.name << " -> " << f.target << " (target dim "
              << f.target_dim << ", relative rank " << f.relative_rank << ", f*K = "
              << render_vector(f.target_canonical_pullback.coeffs) << ")\n";
  for (const auto& [name, d] : x.classes)
    std::cout << "class " << name << " = " << render_vector(d.coeffs) << "\n";
  std::cout << "provenance:";
  for (const auto& p : x.provenance) std::cout << " " << p;
  std::cout << "\n";
}

void print_verdict_text(const Verdict& v) {
  std::cout << "status: " << to_string(v.status) << "\n";
  if (v.witness)
    std::cout << "witness: " << v.witness->sheaf.name << ": slope "
              << to_string(v.witness->candidate_slope) << " vs "
              << to_string(v.witness->reference_slope) << "\n";
  std::cout << "candidates:\n";
  if (v.candidates.empty()) std::cout << "  (none registered)\n";
  for (const auto& c : v.candidates)
    std::cout << "  " << c.sheaf.name << ": " << to_string(c.candidate_slope) << " vs "
              << to_string(c.reference_slope) << "\n";
}

void print_trace_text(const B2OneVerdict& v) {
  std::cout << "status: " << (v.stable ? "stable" : "inconclusive") << "\n";
  for (const auto& s : v.trace) {
    std::cout << s.condition << " [" << s.rule << "] "
              << (s.established ? "established" : "not established") << ": "
              << s.fact.statement;
    if (!s.fact.hypothesis.empty()) std::cout << " | hypothesis: " << s.fact.hypothesis;
    if (!s.fact.citation.empty()) std::cout << " | " << s.fact.citation;
    std::cout << "\n";
  }
}

struct CommonFlags {
  std::string preset;
  std::string file;
  std::string format;  // empty = subcommand default
  std::string resolved(const std::string& fallback) const {
    return format.empty() ? fallback : format;
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_source = true) {
  if (with_source) {
    cmd->add_option("--preset", flags.preset, "construct a built-in preset variety");
    cmd->add_option("--file", flags.file,
                    "read a variety document (bare or ok-envelope) from a JSON file; "
                    "without --preset/--file, stdin is read");
  }
  cmd->add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact slope-stability toolkit for Fano threefold tangent bundles"};
  app.require_subcommand(1);

  // construct
  CommonFlags construct_flags;
  auto* cmd_construct = app.add_subcommand("construct", "build a preset variety");
  cmd_construct->add_option("--preset", construct_flags.preset, "preset identifier")
      ->required();
  cmd_construct->add_option("--format", construct_flags.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  // blowup
  CommonFlags blowup_flags;
  bool blowup_point = false;
  std::string blowup_curve;
  std::vector<std::string> blowup_declares;
  auto* cmd_blowup = app.add_subcommand("blowup", "blow up a variety at a point or curve");
  add_common(cmd_blowup, blowup_flags);
  cmd_blowup->add_flag("--point", blowup_point, "blow up a general point");
  cmd_blowup->add_option("--curve", blowup_curve, "blow up along this tracked curve");
  cmd_blowup->add_option(
      "--declare", blowup_declares,
      "strict-transform intersection for a tracked curve: NAME=<int> or NAME=disjoint");

  // slope
  CommonFlags slope_flags;
  std::string slope_sheaf = "tangent";
  std::string slope_polarization;
  auto* cmd_slope = app.add_subcommand("slope", "slope of a sheaf on a variety");
  add_common(cmd_slope, slope_flags);
  cmd_slope->add_option(
      "--sheaf", slope_sheaf,
      "tangent | cotangent | relative:<fibration> | custom:<c1 vector>:<rank>");
  cmd_slope->add_option("--polarization", slope_polarization,
                        "polarization class as comma-separated integers (default -K)");

  // check
  CommonFlags check_flags;
  std::string check_side = "tangent";
  auto* cmd_check = app.add_subcommand(
      "check", "compare contraction-candidate slopes against the tangent bundle");
  add_common(cmd_check, check_flags);
  cmd_check->add_option("--side", check_side, "tangent | cotangent")
      ->check(CLI::IsMember({"tangent", "cotangent"}));

  // maximize
  CommonFlags maximize_flags;
  auto* cmd_maximize =
      app.add_subcommand("maximize", "maximize a linear objective over a constraint system");
  cmd_maximize->add_option("--file", maximize_flags.file,
                           "constraint-system JSON file (default: stdin)");
  cmd_maximize->add_option("--format", maximize_flags.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  // bott
  CommonFlags bott_flags;
  int bott_n = 0, bott_p = 0, bott_q = 0, bott_k = 0;
  auto* cmd_bott =
      app.add_subcommand("bott", "dimension of H^q(P^n, Omega^p(k)) by the closed formula");
  cmd_bott->add_option("n", bott_n, "ambient dimension")->required();
  cmd_bott->add_option("p", bott_p, "exterior power")->required();
  cmd_bott->add_option("q", bott_q, "cohomology degree")->required();
  cmd_bott->add_option("k", bott_k, "twist")->required();
  cmd_bott->add_option("--format", bott_flags.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  // check-b2one
  CommonFlags b2one_flags;
  int b2one_index = 0, b2one_dim = 3;
  std::string b2one_degree = "0";
  auto* cmd_b2one = app.add_subcommand(
      "check-b2one", "rule-engine stability check for a Picard-rank-one Fano");
  cmd_b2one->add_option("--index", b2one_index, "Fano index")->required();
  cmd_b2one->add_option("--dim", b2one_dim, "dimension (default 3)");
  cmd_b2one->add_option("--degree", b2one_degree,
                        "degree L0^n of the ample generator (0 = unspecified)");
  cmd_b2one->add_option("--format", b2one_flags.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  // catalog
  CommonFlags catalog_flags;
  bool catalog_list = false, catalog_counts = false, catalog_verify_all = false;
  std::string catalog_verify, catalog_verdict;
  int catalog_b2 = -1;
  auto* cmd_catalog = app.add_subcommand("catalog", "the classified deformation-class roster");
  cmd_catalog->add_flag("--list", catalog_list, "list entries");
  cmd_catalog->add_flag("--counts", catalog_counts, "partition counts");
  cmd_catalog->add_option("--verify", catalog_verify, "re-derive one entry by id");
  cmd_catalog->add_flag("--verify-all", catalog_verify_all, "re-derive every entry");
  cmd_catalog->add_option("--verdict", catalog_verdict, "filter --list by verdict")
      ->check(CLI::IsMember({"stable", "semistable", "unstable"}));
  cmd_catalog->add_option("--b2", catalog_b2, "filter --list by recorded b2");
  cmd_catalog->add_option("--format", catalog_flags.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  const auto active_format = [&]() -> std::string {
    if (cmd_construct->parsed()) return construct_flags.resolved("json");
    if (cmd_blowup->parsed()) return blowup_flags.resolved("json");
    if (cmd_slope->parsed()) return slope_flags.resolved("text");
    if (cmd_check->parsed()) return check_flags.resolved("text");
    if (cmd_maximize->parsed()) return maximize_flags.resolved("text");
    if (cmd_bott->parsed()) return bott_flags.resolved("text");
    if (cmd_b2one->parsed()) return b2one_flags.resolved("text");
    if (cmd_catalog->parsed()) return catalog_flags.resolved("text");
    return "text";
  };

  try {
    if (cmd_construct->parsed()) {
      const std::string format = construct_flags.resolved("json");
      const Variety3Fold x = threefold_preset(construct_flags.preset);
      if (format == "text")
        print_variety_text(x);
      else
        emit_json(ok_envelope(variety_to_json(x), x.provenance));
      return 0;
    }

    if (cmd_blowup->parsed()) {
      const std::string format = blowup_flags.resolved("json");
      if (blowup_point == !blowup_curve.empty())
        throw input_error("blowup needs exactly one of --point or --curve NAME");
      const Variety3Fold x = load_variety(blowup_flags.preset, blowup_flags.file);
      BlowUpSpec spec = BlowUpSpec::at_point();
      if (!blowup_curve.empty()) {
        const CurveClass* c = x.find_curve(blowup_curve);
        if (!c) throw input_error("variety has no tracked curve named '" + blowup_curve + "'");
        spec = BlowUpSpec::along_curve(*c);
      }
      for (const auto& d : blowup_declares) {
        const auto eq = d.find('=');
        if (eq == std::string::npos)
          throw input_error("--declare needs NAME=<int> or NAME=disjoint");
        const std::string name = d.substr(0, eq);
        const std::string value = d.substr(eq + 1);
        spec.strict_transforms[name] = value == "disjoint" ? Integer(0) : parse_integer(value);
      }
      const Variety3Fold y = blow_up(x, spec);
      if (format == "text")
        print_variety_text(y);
      else
        emit_json(ok_envelope(variety_to_json(y), y.provenance));
      return 0;
    }

    if (cmd_slope->parsed()) {
      const std::string format = slope_flags.resolved("text");
      const Variety3Fold x = load_variety(slope_flags.preset, slope_flags.file);
      const SheafDescriptor sheaf = sheaf_from_flag(x, slope_sheaf);
      const DivisorClass polarization =
          slope_polarization.empty()
              ? x.anticanonical()
              : DivisorClass(parse_integer_csv(slope_polarization, "--polarization"));
      if (polarization.rank() != x.rank())
        throw input_error("--polarization length must match the variety rank");
      const Rational mu = slope(x, sheaf, polarization);
      if (format == "text") {
        std::cout << to_string(mu) << "\n";
      } else {
        Json payload;
        payload["sheaf"] = sheaf_to_json(sheaf);
        payload["polarization"] = integer_array(polarization.coeffs);
        payload["slope"] = to_string(mu);
        emit_json(ok_envelope(std::move(payload), x.provenance));
      }
      return 0;
    }

    if (cmd_check->parsed()) {
      const std::string format = check_flags.resolved("text");
      const Variety3Fold x = load_variety(check_flags.preset, check_flags.file);
      const CheckSide side =
          check_side == "cotangent" ? CheckSide::cotangent : CheckSide::tangent;
      const Verdict v = theorem1_check(x, side);
      // Cross-reference the catalog when the variety's name matches an
      // entry's construction (preset names double as variety names, and the
      // name rides through serialization, so --file input cross-references
      // identically).
      const CatalogEntry* entry = nullptr;
      for (const auto& e : catalog_entries())
        if (e.construction && *e.construction == x.name) entry = &e;
      const bool consistent =
          entry == nullptr ||
          (entry->verdict == ClassVerdict::unstable
               ? v.status == StabilityStatus::unstable
               : entry->verdict == ClassVerdict::semistable
                     ? v.status != StabilityStatus::unstable
                     : v.status == StabilityStatus::stable_among_tested);
      if (format == "text") {
        print_verdict_text(v);
        if (entry)
          std::cout << "catalog: " << entry->id << " records " << to_string(entry->verdict)
                    << " — " << (consistent ? "consistent" : "INCONSISTENT") << "\n";
      } else {
        Json payload = verdict_to_json(v);
        if (entry) {
          Json jc;
          jc["id"] = entry->id;
          jc["verdict"] = to_string(entry->verdict);
          jc["consistent"] = consistent;
          payload["catalog"] = std::move(jc);
        } else {
          payload["catalog"] = nullptr;
        }
        emit_json(ok_envelope(std::move(payload), x.provenance));
      }
      return 0;
    }

    if (cmd_maximize->parsed()) {
      const std::string format = maximize_flags.resolved("text");
      const std::string text =
          maximize_flags.file.empty() ? read_stdin() : read_file(maximize_flags.file);
      const std::string what =
          maximize_flags.file.empty() ? "stdin" : "file '" + maximize_flags.file + "'";
      const ConstraintSystem cs =
          constraint_system_from_json(unwrap_payload(parse_json_text(text, what)));
      const LpResult r = maximize_slope(cs);
      if (format == "text") {
        std::cout << "status: " << to_string(r.status) << "\n";
        if (r.status == LpStatus::optimal) {
          std::cout << "max: " << to_string(r.max_value) << "\n";
          std::cout << "point: " << render_rational_vector(r.point) << "\n";
        }
      } else {
        Json payload = lp_result_to_json(r);
        payload["system"] = cs.name;
        emit_json(ok_envelope(std::move(payload), {}));
      }
      return 0;
    }

    if (cmd_bott->parsed()) {
      const std::string format = bott_flags.resolved("text");
      const Integer dim = bott_dimension(bott_n, bott_p, bott_q, bott_k);
      if (format == "text") {
        std::cout << dim.str() << "\n";
      } else {
        Json payload;
        payload["n"] = bott_n;
        payload["p"] = bott_p;
        payload["q"] = bott_q;
        payload["k"] = bott_k;
        payload["dimension"] = to_file_int(dim);
        emit_json(ok_envelope(std::move(payload), {}));
      }
      return 0;
    }

    if (cmd_b2one->parsed()) {
      const std::string format = b2one_flags.resolved("text");
      IndexedFano f;
      f.dimension = b2one_dim;
      f.index = b2one_index;
      f.generator_degree = parse_integer(b2one_degree);
      const B2OneVerdict v = check_b2_one_stability(f);
      if (format == "text")
        print_trace_text(v);
      else
        emit_json(ok_envelope(b2one_to_json(v), {}));
      return 0;
    }

    if (cmd_catalog->parsed()) {
      const std::string format = catalog_flags.resolved("text");
      const int selected = int(catalog_list) + int(catalog_counts) +
                           int(!catalog_verify.empty()) + int(catalog_verify_all);
      if (selected != 1)
        throw input_error(
            "catalog needs exactly one of --list, --counts, --verify <id>, --verify-all");

      if (catalog_counts) {
        const CatalogCounts c = counts();
        if (format == "text") {
          std::cout << "b2>=2: stable " << c.stable_b2ge2 << ", semistable "
                    << c.semistable_b2ge2 << ", unstable " << c.unstable_b2ge2 << " (total "
                    << c.total_b2ge2() << ")\n";
          std::cout << "b2=1: stable " << c.stable_b2one << "\n";
          std::cout << "total: " << c.total() << "\n";
        } else {
          Json payload;
          Json ge2;
          ge2["stable"] = c.stable_b2ge2;
          ge2["semistable"] = c.semistable_b2ge2;
          ge2["unstable"] = c.unstable_b2ge2;
          ge2["total"] = c.total_b2ge2();
          payload["b2_ge_2"] = std::move(ge2);
          Json one;
          one["stable"] = c.stable_b2one;
          payload["b2_1"] = std::move(one);
          payload["total"] = c.total();
          emit_json(ok_envelope(std::move(payload), {}));
        }
        return 0;
      }

      if (catalog_list) {
        CatalogFilter filter;
        if (!catalog_verdict.empty())
          filter.verdict = class_verdict_from_string(catalog_verdict);
        if (catalog_b2 >= 0) filter.b2 = catalog_b2;
        const auto entries = list_entries(filter);
        if (format == "text") {
          for (const auto& e : entries) {
            std::cout << e.id << "\t" << to_string(e.verdict) << "\tb2="
                      << (e.b2 ? std::to_string(*e.b2) : "?") << "\t"
                      << (e.construction ? *e.construction : "-") << "\t" << e.description
                      << "\n";
          }
        } else {
          Json payload = Json::array();
          for (const auto& e : entries) payload.push_back(catalog_entry_to_json(e));
          emit_json(ok_envelope(std::move(payload), {}));
        }
        return 0;
      }

      auto print_report_text = [](const EntryReport& r) {
        std::cout << r.entry.id << ": claimed " << to_string(r.entry.verdict) << ", "
                  << (r.mechanized ? "mechanized" : "recorded claim") << ", "
                  << (r.consistent ? "consistent" : "INCONSISTENT") << "\n";
        for (const auto& n : r.notes) std::cout << "  " << n << "\n";
      };

      if (!catalog_verify.empty()) {
        const EntryReport r = verify_entry(catalog_verify);
        if (format == "text")
          print_report_text(r);
        else
          emit_json(ok_envelope(entry_report_to_json(r), {}));
        return 0;
      }

      // --verify-all
      std::vector<EntryReport> reports;
      for (const auto& e : catalog_entries()) reports.push_back(verify_entry(e.id));
      if (format == "text") {
        int bad = 0;
        for (const auto& r : reports) {
          print_report_text(r);
          if (!r.consistent) ++bad;
        }
        std::cout << "inconsistent entries: " << bad << "\n";
      } else {
        Json payload = Json::array();
        for (const auto& r : reports) payload.push_back(entry_report_to_json(r));
        emit_json(ok_envelope(std::move(payload), {}));
      }
      return 0;
    }
  } catch (const input_error& e) {
    return fail_input(active_format(), e.what());
  } catch (const Json::exception& e) {
    return fail_input(active_format(), std::string("malformed document: ") + e.what());
  }
  return 0;
}
