#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fanostab/lattice.hpp"
#include "fanostab/surface.hpp"

namespace fanostab {

namespace detail {

inline std::string join_integers(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s;
}

inline DivisorClass extend_by_zero(const DivisorClass& d) {
  DivisorClass out = d;
  out.coeffs.emplace_back(0);
  return out;
}

}  // namespace detail

// S x P1. Basis = basis(S) followed by the fiber class F of the projection to
// S. Nonzero triples are A.B.F = (A.B)_S; F^2 = 0 and triples of pullbacks
// from S vanish. Both projections are registered as fibrations.
inline Variety3Fold product_with_p1(const Surface& s) {
  const int ns = s.rank();
  const int n = ns + 1;
  Variety3Fold x;
  x.name = s.name + "xp1";
  x.basis = s.basis;
  x.basis.push_back("F");
  x.form = TrilinearForm(n);
  for (int a = 0; a < ns; ++a)
    for (int b = a; b < ns; ++b)
      x.form.set(a, b, ns, s.pairing[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
  x.canonical = detail::extend_by_zero(s.canonical);
  x.canonical[n - 1] = -2;

  FibrationDescriptor pi1;
  pi1.name = "pi1";
  pi1.target = s.name;
  pi1.target_dim = 2;
  pi1.relative_rank = 1;
  pi1.target_canonical_pullback = detail::extend_by_zero(s.canonical);
  FibrationDescriptor pi2;
  pi2.name = "pi2";
  pi2.target = "p1";
  pi2.target_dim = 1;
  pi2.relative_rank = 2;
  pi2.target_canonical_pullback = DivisorClass::zero(n);
  pi2.target_canonical_pullback[n - 1] = -2;
  x.fibrations = {pi1, pi2};

  x.classes.emplace_back("F", DivisorClass::unit(n, n - 1));
  x.provenance = {"product_with_p1:" + s.name};
  return x;
}

// P(O + O(D)) -> S with tautological class xi normalized by the Grothendieck
// relation xi^2 = xi . pi*D (i.e. xi.(xi - pi*D) = 0 since c_2 of the bundle
// vanishes). Basis = {xi} followed by pullbacks of basis(S).
// Triples: xi.pi*A.pi*B = (A.B)_S, xi^2.pi*A = (D.A)_S, xi^3 = (D.D)_S,
// pullback triples 0. Canonical class: K = -2 xi + pi*(K_S + D).
inline Variety3Fold p1_bundle(const Surface& s, const DivisorClass& d) {
  if (d.rank() != s.rank())
    throw input_error("p1_bundle twist class must live on the base surface");
  const int ns = s.rank();
  const int n = ns + 1;
  Variety3Fold x;
  x.name = "p1bundle_" + s.name;
  x.basis = {"xi"};
  for (const auto& b : s.basis) x.basis.push_back(b);
  x.form = TrilinearForm(n);
  for (int a = 0; a < ns; ++a)
    for (int b = a; b < ns; ++b)
      x.form.set(0, 1 + a, 1 + b,
                 s.pairing[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
  for (int a = 0; a < ns; ++a)
    x.form.set(0, 0, 1 + a, s.pair(d, DivisorClass::unit(ns, a)));
  x.form.set(0, 0, 0, s.pair(d, d));
  x.canonical = DivisorClass::zero(n);
  x.canonical[0] = -2;
  for (int a = 0; a < ns; ++a) x.canonical[1 + a] = s.canonical[a] + d[a];

  FibrationDescriptor pi;
  pi.name = "pi";
  pi.target = s.name;
  pi.target_dim = 2;
  pi.relative_rank = 1;
  pi.target_canonical_pullback = DivisorClass::zero(n);
  for (int a = 0; a < ns; ++a) pi.target_canonical_pullback[1 + a] = s.canonical[a];
  x.fibrations = {pi};

  x.classes.emplace_back("xi", DivisorClass::unit(n, 0));
  x.provenance = {"p1_bundle:" + s.name + ":" + detail::join_integers(d.coeffs)};
  return x;
}

// Blow-up request. Incidence of previously tracked curves with the new
// exceptional divisor is explicit user data: every tracked curve on the base,
// other than the consumed center, must appear in strict_transforms with its
// intersection number against E (0 = declared disjoint). The lattice cannot
// reconstruct geometric incidence, so silence is an error rather than a guess.
struct BlowUpSpec {
  enum class Center { point, curve };
  Center center = Center::point;
  std::optional<CurveClass> center_curve;        // required when center == curve
  std::map<std::string, Integer> strict_transforms;

  static BlowUpSpec at_point(std::map<std::string, Integer> decls = {}) {
    BlowUpSpec s;
    s.center = Center::point;
    s.strict_transforms = std::move(decls);
    return s;
  }
  static BlowUpSpec along_curve(CurveClass c, std::map<std::string, Integer> decls = {}) {
    BlowUpSpec s;
    s.center = Center::curve;
    s.center_curve = std::move(c);
    s.strict_transforms = std::move(decls);
    return s;
  }
};

// Blow-up of a point or a tracked smooth curve. Intersection calculus:
//   point:  E^3 = 1,                 f*D . E^2 = 0,        K' = f*K + 2E;
//   curve:  E^3 = K.C + 2 - 2g(C),   f*D . E^2 = -(D.C),   K' = f*K + E;
// pullback triples are unchanged and f*D . f*D' . E = 0. Tracked curves gain
// their declared E-intersection; the center curve is consumed. One curve on
// the new exceptional divisor is auto-tracked (a line of E = P^2 over a point,
// a ruling fiber of E over a curve), each meeting E in -1 and pullbacks in 0.
// Declared fibrations are dropped: composing with the blow-down need not be a
// fibration of the new variety, so constructions re-register what they assert.
inline Variety3Fold blow_up(const Variety3Fold& x, const BlowUpSpec& spec) {
  const int n = x.rank();
  const bool is_curve = spec.center == BlowUpSpec::Center::curve;
  const CurveClass* center = nullptr;
  if (is_curve) {
    if (!spec.center_curve) throw input_error("curve blow-up without a center curve");
    center = &*spec.center_curve;
    if (static_cast<int>(center->meets.size()) != n)
      throw input_error("center curve meeting vector does not match lattice rank");
  } else if (spec.center_curve) {
    throw input_error("point blow-up given a center curve");
  }

  // Every surviving tracked curve needs a declared E-intersection; reject
  // declarations for curves that do not exist to catch misspelled names.
  std::set<std::string> tracked;
  for (const auto& c : x.curves)
    if (!(is_curve && c.name == center->name)) tracked.insert(c.name);
  for (const auto& [cname, value] : spec.strict_transforms)
    if (tracked.find(cname) == tracked.end())
      throw input_error("strict-transform declaration for unknown curve '" + cname + "'");
  for (const auto& cname : tracked)
    if (spec.strict_transforms.find(cname) == spec.strict_transforms.end())
      throw input_error("tracked curve '" + cname +
                        "' is neither the center nor declared against the exceptional "
                        "divisor (declare 0 for disjoint)");

  int label_index = 1;
  auto label_of = [](int k) { return "E" + std::to_string(k); };
  while (std::find(x.basis.begin(), x.basis.end(), label_of(label_index)) != x.basis.end())
    ++label_index;
  const std::string label = label_of(label_index);

  Variety3Fold out;
  out.name = x.name + "_bl_" + (is_curve ? center->name : std::string("pt"));
  out.basis = x.basis;
  out.basis.push_back(label);
  out.form = TrilinearForm(n + 1);
  for (const auto& [key, value] : x.form.entries())
    out.form.set(key[0], key[1], key[2], value);
  if (is_curve) {
    for (int i = 0; i < n; ++i)
      out.form.set(i, n, n, -center->meets[static_cast<std::size_t>(i)]);
    Integer kc = 0;
    for (int i = 0; i < n; ++i) kc += x.canonical[i] * center->meets[static_cast<std::size_t>(i)];
    out.form.set(n, n, n, kc + 2 - 2 * center->genus);
  } else {
    out.form.set(n, n, n, 1);
  }
  out.canonical = detail::extend_by_zero(x.canonical);
  out.canonical[n] = is_curve ? 1 : 2;

  for (const auto& c : x.curves) {
    if (is_curve && c.name == center->name) continue;
    CurveClass t = c;
    t.meets.push_back(spec.strict_transforms.at(c.name));
    out.curves.push_back(std::move(t));
  }
  CurveClass exc;
  exc.name = label + (is_curve ? "_fiber" : "_line");
  exc.genus = 0;
  exc.meets.assign(static_cast<std::size_t>(n + 1), Integer(0));
  exc.meets[static_cast<std::size_t>(n)] = -1;
  out.curves.push_back(std::move(exc));

  for (const auto& [cname, dclass] : x.classes)
    out.classes.emplace_back(cname, detail::extend_by_zero(dclass));
  out.classes.emplace_back(label, DivisorClass::unit(n + 1, n));

  out.provenance = x.provenance;
  out.provenance.push_back(is_curve ? "blowup:curve:" + center->name : "blowup:point");
  return out;
}

// ---------------------------------------------------------------------------
// Presets. Each returns a fully assembled variety (or surface): lattice,
// canonical class, tracked curves, declared fibrations, named classes.
// ---------------------------------------------------------------------------

inline Variety3Fold preset_p3() {
  Variety3Fold x;
  x.name = "p3";
  x.basis = {"H"};
  x.form = TrilinearForm(1);
  x.form.set(0, 0, 0, 1);
  x.canonical = DivisorClass({Integer(-4)});
  x.curves = {CurveClass{"line", 0, {Integer(1)}}};
  x.provenance = {"preset:p3"};
  return x;
}

inline Variety3Fold preset_q3() {
  Variety3Fold x;
  x.name = "q3";
  x.basis = {"H"};
  x.form = TrilinearForm(1);
  x.form.set(0, 0, 0, 2);
  x.canonical = DivisorClass({Integer(-3)});
  x.curves = {CurveClass{"line", 0, {Integer(1)}}};
  x.provenance = {"preset:q3"};
  return x;
}

// V7 = P(O + O(1)) over the plane; equivalently the blow-up of P3 at a point.
// Tracked curves: a line of the exceptional plane and the strict transform of
// a line of P3 through the blown-up point (a section over a plane line).
inline Variety3Fold preset_v7() {
  Variety3Fold x = p1_bundle(surface_p2(), DivisorClass({Integer(1)}));
  x.name = "v7";
  x.curves = {CurveClass{"exc_line", 0, {Integer(0), Integer(1)}},
              CurveClass{"strict_line", 0, {Integer(1), Integer(0)}}};
  return x;
}

// Blow-up of the Veronese cone W4 in P6 at its vertex = P(O + O(2)) over the
// plane; the relevant contraction is the bundle projection itself.
inline Variety3Fold preset_w4_blowup() {
  Variety3Fold x = p1_bundle(surface_p2(), DivisorClass({Integer(2)}));
  x.name = "w4_blowup";
  return x;
}

// Blow-up of the cone over a smooth quadric surface at its vertex
// = P(O + O(1,1)) over P1 x P1.
inline Variety3Fold preset_quadric_cone_blowup() {
  Variety3Fold x = p1_bundle(surface_p1xp1(), DivisorClass({Integer(1), Integer(1)}));
  x.name = "quadric_cone_blowup";
  return x;
}

// Blow-up of P3 along a line; the pencil of planes through the line induces a
// del Pezzo fibration to P1 with fiber class H - E1.
inline Variety3Fold preset_p3_blowup_line() {
  Variety3Fold x = preset_p3();
  const CurveClass center = *x.find_curve("line");
  x = blow_up(x, BlowUpSpec::along_curve(center));
  x.name = "p3_blowup_line";
  FibrationDescriptor g;
  g.name = "g";
  g.target = "p1";
  g.target_dim = 1;
  g.relative_rank = 2;
  g.target_canonical_pullback = DivisorClass({Integer(-2), Integer(2)});
  x.fibrations = {g};
  return x;
}

// Blow-up of V7 along a line of the exceptional plane. The plane projection
// survives as a conic bundle (the blown-up fibers break into line pairs).
inline Variety3Fold preset_v7_blowup_exc_line() {
  Variety3Fold x = preset_v7();
  const CurveClass center = *x.find_curve("exc_line");
  // A generic plane line avoids the single point where strict_line meets the
  // exceptional plane.
  x = blow_up(x, BlowUpSpec::along_curve(center, {{"strict_line", Integer(0)}}));
  x.name = "v7_blowup_exc_line";
  FibrationDescriptor g;
  g.name = "g";
  g.target = "p2";
  g.target_dim = 2;
  g.relative_rank = 1;
  g.target_canonical_pullback = DivisorClass({Integer(0), Integer(-3), Integer(0)});
  g.has_discriminant = true;
  x.fibrations = {g};
  return x;
}

// Blow-up of V7 along the strict transform of a line of P3 through the blown
// point. Planes of P3 through that line induce a fibration to P1 with fiber
// class h - E1 (pullback notation: h = pi* plane line class on V7).
inline Variety3Fold preset_v7_blowup_strict_line() {
  Variety3Fold x = preset_v7();
  const CurveClass center = *x.find_curve("strict_line");
  // A generic line of the exceptional plane avoids the single intersection
  // point of the center with that plane.
  x = blow_up(x, BlowUpSpec::along_curve(center, {{"exc_line", Integer(0)}}));
  x.name = "v7_blowup_strict_line";
  FibrationDescriptor g;
  g.name = "g";
  g.target = "p1";
  g.target_dim = 1;
  g.relative_rank = 2;
  g.target_canonical_pullback = DivisorClass({Integer(0), Integer(-2), Integer(2)});
  x.fibrations = {g};
  return x;
}

// Blow-up of F1 x P1 along (-1)-curve x point. Three fibrations re-registered:
// the product projection to P1, the conic bundle to F1 and the composite to P1
// through the ruling of F1 (fiber class h - e).
inline Variety3Fold preset_p1xf1_blowup() {
  Variety3Fold x = product_with_p1(surface_f1());
  CurveClass c;
  c.name = "te";
  c.genus = 0;
  c.meets = {Integer(0), Integer(-1), Integer(0)};
  x.curves.push_back(c);
  x = blow_up(x, BlowUpSpec::along_curve(c));
  x.name = "p1xf1_blowup";
  FibrationDescriptor pi2;
  pi2.name = "pi2";
  pi2.target = "p1";
  pi2.target_dim = 1;
  pi2.relative_rank = 2;
  pi2.target_canonical_pullback =
      DivisorClass({Integer(0), Integer(0), Integer(-2), Integer(0)});
  FibrationDescriptor pi1;
  pi1.name = "pi1";
  pi1.target = "f1";
  pi1.target_dim = 2;
  pi1.relative_rank = 1;
  pi1.target_canonical_pullback =
      DivisorClass({Integer(-3), Integer(1), Integer(0), Integer(0)});
  pi1.has_discriminant = true;
  FibrationDescriptor ruling;
  ruling.name = "ruling";
  ruling.target = "p1";
  ruling.target_dim = 1;
  ruling.relative_rank = 2;
  ruling.target_canonical_pullback =
      DivisorClass({Integer(-2), Integer(2), Integer(0), Integer(0)});
  x.fibrations = {pi2, pi1, ruling};
  return x;
}

// Blow-up of P3 along two disjoint lines, then along a fiber of each ruled
// exceptional divisor over the first line — both fibers on the same component,
// chosen disjoint. Pencils of planes through either original line induce two
// fibrations to P1.
inline Variety3Fold preset_two_exc_fibers_blowup() {
  Variety3Fold x;
  x.name = "p3";
  x.basis = {"H"};
  x.form = TrilinearForm(1);
  x.form.set(0, 0, 0, 1);
  x.canonical = DivisorClass({Integer(-4)});
  x.curves = {CurveClass{"L1", 0, {Integer(1)}}, CurveClass{"L2", 0, {Integer(1)}}};
  x.provenance = {"preset:p3"};

  x = blow_up(x, BlowUpSpec::along_curve(*x.find_curve("L1"), {{"L2", Integer(0)}}));
  x = blow_up(x, BlowUpSpec::along_curve(*x.find_curve("L2"), {{"E1_fiber", Integer(0)}}));
  // Track a second ruling fiber of E1, disjoint from the first.
  CurveClass second_fiber;
  second_fiber.name = "E1_fiber2";
  second_fiber.genus = 0;
  second_fiber.meets = {Integer(0), Integer(-1), Integer(0)};
  x.curves.push_back(second_fiber);
  x = blow_up(x, BlowUpSpec::along_curve(*x.find_curve("E1_fiber"),
                                         {{"E2_fiber", Integer(0)}, {"E1_fiber2", Integer(0)}}));
  x = blow_up(x, BlowUpSpec::along_curve(*x.find_curve("E1_fiber2"),
                                         {{"E2_fiber", Integer(0)}, {"E3_fiber", Integer(0)}}));
  x.name = "two_exc_fibers_blowup";

  FibrationDescriptor g1;
  g1.name = "g1";
  g1.target = "p1";
  g1.target_dim = 1;
  g1.relative_rank = 2;
  g1.target_canonical_pullback =
      DivisorClass({Integer(-2), Integer(2), Integer(0), Integer(0), Integer(0)});
  FibrationDescriptor g2 = g1;
  g2.name = "g2";
  g2.target_canonical_pullback =
      DivisorClass({Integer(-2), Integer(0), Integer(2), Integer(0), Integer(0)});
  x.fibrations = {g1, g2};
  return x;
}

// Blow-up of P3 at a point p on a line L, then along the strict transform of
// L, then along a ruling fiber of the second exceptional divisor. Presented in
// the basis (H1, H2, Df11, Df1): the two "horizontal" hyperplane-type classes
// and the two vertical divisor classes of the induced fibration g to P1 with
// fiber class H3 = H1 - Df11.
inline Variety3Fold preset_example1() {
  Variety3Fold x = preset_p3();
  x.curves = {CurveClass{"L", 0, {Integer(1)}}};

  // p lies on L: the strict transform meets the exceptional plane once.
  x = blow_up(x, BlowUpSpec::at_point({{"L", Integer(1)}}));
  // A generic line of the exceptional plane avoids the point E1 meets L.
  x = blow_up(x, BlowUpSpec::along_curve(*x.find_curve("L"), {{"E1_line", Integer(0)}}));
  x = blow_up(x,
              BlowUpSpec::along_curve(*x.find_curve("E2_fiber"), {{"E1_line", Integer(0)}}));

  const int n = x.rank();  // basis (H, E1, E2, E3)
  const DivisorClass h = DivisorClass::unit(n, 0);
  const DivisorClass e1 = DivisorClass::unit(n, 1);
  const DivisorClass e2 = DivisorClass::unit(n, 2);
  const DivisorClass e3 = DivisorClass::unit(n, 3);
  const DivisorClass h1 = h - e1;
  const DivisorClass h3 = h - e1 - e2;
  x.classes.emplace_back("H1", h1);
  x.classes.emplace_back("H2", h);
  x.classes.emplace_back("H3", h3);
  x.classes.emplace_back("Df11", e2);
  x.classes.emplace_back("Df1", e3);

  FibrationDescriptor g;
  g.name = "g";
  g.target = "p1";
  g.target_dim = 1;
  g.relative_rank = 2;
  g.target_canonical_pullback = Integer(-2) * h3;
  x.fibrations = {g};

  x = rebase(x, {h1, h, e2, e3}, {"H1", "H2", "Df11", "Df1"});
  x.name = "example1";
  return x;
}

// Blow-up of P3 at a point p, then along a plane cubic C disjoint from p.
// Presented in the basis (H1, H2, H3) with H1 = H - E_p (conic-bundle
// pullback), H2 = H, H3 = 3H - 2E_p - E_C; the conic bundle g to P2 has
// relative canonical 3H1 - H2 - H3 and the two vertical classes satisfy
// Df2 = 3H1 - Df1 and H2 - H1 = H3 - Df2.
inline Variety3Fold preset_example2() {
  Variety3Fold x = preset_p3();
  x.curves = {CurveClass{"C", 1, {Integer(3)}}};

  // p avoids the plane of C.
  x = blow_up(x, BlowUpSpec::at_point({{"C", Integer(0)}}));
  x = blow_up(x, BlowUpSpec::along_curve(*x.find_curve("C"), {{"E1_line", Integer(0)}}));

  const int n = x.rank();  // basis (H, E1, E2)
  const DivisorClass h = DivisorClass::unit(n, 0);
  const DivisorClass e1 = DivisorClass::unit(n, 1);
  const DivisorClass e2 = DivisorClass::unit(n, 2);
  const DivisorClass h1 = h - e1;
  const DivisorClass h3 =
      Integer(3) * h - Integer(2) * e1 - e2;
  x.classes.emplace_back("H1", h1);
  x.classes.emplace_back("H2", h);
  x.classes.emplace_back("H3", h3);
  x.classes.emplace_back("Df1", e2);
  x.classes.emplace_back("Df2", Integer(3) * h1 - e2);

  FibrationDescriptor g;
  g.name = "g";
  g.target = "p2";
  g.target_dim = 2;
  g.relative_rank = 1;
  g.target_canonical_pullback = Integer(-3) * h1;
  g.has_discriminant = true;
  x.fibrations = {g};

  x = rebase(x, {h1, h, h3}, {"H1", "H2", "H3"});
  x.name = "example2";
  return x;
}

inline bool is_surface_preset(const std::string& id) {
  if (id == "p2" || id == "p1xp1" || id == "f1") return true;
  if (id.size() == 3 && id.compare(0, 2, "dp") == 0 && id[2] >= '1' && id[2] <= '8')
    return true;
  return false;
}

inline Surface surface_preset(const std::string& id) {
  if (id == "p2") return surface_p2();
  if (id == "p1xp1") return surface_p1xp1();
  if (id == "f1") return surface_f1();
  if (id.size() == 3 && id.compare(0, 2, "dp") == 0 && id[2] >= '1' && id[2] <= '8')
    return surface_dp(id[2] - '0');
  throw input_error("unknown surface preset '" + id + "'");
}

inline std::vector<std::string> threefold_preset_ids() {
  std::vector<std::string> ids = {"p3",
                                  "q3",
                                  "v7",
                                  "w4_blowup",
                                  "quadric_cone_blowup",
                                  "p3_blowup_line",
                                  "two_exc_fibers_blowup",
                                  "v7_blowup_exc_line",
                                  "v7_blowup_strict_line",
                                  "p1xf1_blowup",
                                  "example1",
                                  "example2"};
  ids.push_back("p2xp1");
  ids.push_back("p1xp1xp1");
  ids.push_back("f1xp1");
  for (int k = 1; k <= 8; ++k) ids.push_back("dp" + std::to_string(k) + "xp1");
  return ids;
}

inline Variety3Fold threefold_preset(const std::string& id) {
  if (id == "p3") return preset_p3();
  if (id == "q3") return preset_q3();
  if (id == "v7") return preset_v7();
  if (id == "w4_blowup") return preset_w4_blowup();
  if (id == "quadric_cone_blowup") return preset_quadric_cone_blowup();
  if (id == "p3_blowup_line") return preset_p3_blowup_line();
  if (id == "two_exc_fibers_blowup") return preset_two_exc_fibers_blowup();
  if (id == "v7_blowup_exc_line") return preset_v7_blowup_exc_line();
  if (id == "v7_blowup_strict_line") return preset_v7_blowup_strict_line();
  if (id == "p1xf1_blowup") return preset_p1xf1_blowup();
  if (id == "example1") return preset_example1();
  if (id == "example2") return preset_example2();
  // <surface>xp1 product ids, e.g. p2xp1, p1xp1xp1, dp5xp1.
  if (id.size() > 3 && id.compare(id.size() - 3, 3, "xp1") == 0) {
    const std::string base = id.substr(0, id.size() - 3);
    if (is_surface_preset(base)) return product_with_p1(surface_preset(base));
  }
  throw input_error("unknown preset '" + id + "'");
}

inline std::vector<std::string> surface_preset_ids() {
  std::vector<std::string> ids = {"p2", "p1xp1", "f1"};
  for (int k = 1; k <= 8; ++k) ids.push_back("dp" + std::to_string(k));
  return ids;
}

inline Variety3Fold example1_variety() { return preset_example1(); }
inline Variety3Fold example2_variety() { return preset_example2(); }

}  // namespace fanostab
