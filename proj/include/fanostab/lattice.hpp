#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanostab/matrix.hpp"
#include "fanostab/rational.hpp"

namespace fanostab {

// A divisor class written in the ambient variety's chosen basis. Coefficients
// are exact integers: numerical classes modulo torsion, no rational divisors.
struct DivisorClass {
  std::vector<Integer> coeffs;

  DivisorClass() = default;
  explicit DivisorClass(std::vector<Integer> c) : coeffs(std::move(c)) {}

  static DivisorClass zero(int rank) {
    return DivisorClass(std::vector<Integer>(static_cast<std::size_t>(rank), Integer(0)));
  }
  static DivisorClass unit(int rank, int i) {
    DivisorClass d = zero(rank);
    d.coeffs[static_cast<std::size_t>(i)] = 1;
    return d;
  }

  int rank() const { return static_cast<int>(coeffs.size()); }
  const Integer& operator[](int i) const { return coeffs[static_cast<std::size_t>(i)]; }
  Integer& operator[](int i) { return coeffs[static_cast<std::size_t>(i)]; }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.coeffs == b.coeffs;
  }
};

inline void require_same_rank(const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != b.rank())
    throw input_error("divisor classes live in lattices of different rank");
}

inline DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  require_same_rank(a, b);
  DivisorClass out = a;
  for (int i = 0; i < out.rank(); ++i) out[i] += b[i];
  return out;
}

inline DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  require_same_rank(a, b);
  DivisorClass out = a;
  for (int i = 0; i < out.rank(); ++i) out[i] -= b[i];
  return out;
}

inline DivisorClass operator-(const DivisorClass& a) {
  DivisorClass out = a;
  for (int i = 0; i < out.rank(); ++i) out[i] = -out[i];
  return out;
}

inline DivisorClass operator*(const Integer& s, const DivisorClass& a) {
  DivisorClass out = a;
  for (int i = 0; i < out.rank(); ++i) out[i] *= s;
  return out;
}

// Symmetric trilinear intersection form on a rank-r lattice. Entries are
// stored once per sorted index triple; lookups symmetrize.
class TrilinearForm {
 public:
  TrilinearForm() : rank_(0) {}
  explicit TrilinearForm(int rank) : rank_(rank) {
    if (rank < 0) throw input_error("negative lattice rank");
  }

  int rank() const { return rank_; }

  void set(int i, int j, int k, Integer value) {
    const auto key = sorted_key(i, j, k);
    if (value == 0)
      entries_.erase(key);
    else
      entries_[key] = std::move(value);
  }

  Integer at(int i, int j, int k) const {
    const auto it = entries_.find(sorted_key(i, j, k));
    return it == entries_.end() ? Integer(0) : it->second;
  }

  const std::map<std::array<int, 3>, Integer>& entries() const { return entries_; }

 private:
  std::array<int, 3> sorted_key(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0 || i >= rank_ || j >= rank_ || k >= rank_)
      throw input_error("trilinear form index out of range");
    std::array<int, 3> key{i, j, k};
    std::sort(key.begin(), key.end());
    return key;
  }

  int rank_;
  std::map<std::array<int, 3>, Integer> entries_;
};

// Full symmetric expansion sum_{a,b,c} d1_a d2_b d3_c T(a,b,c), evaluated over
// the sparse entries by summing each stored triple over its distinct
// permutations.
inline Integer triple_product(const TrilinearForm& form, const DivisorClass& d1,
                              const DivisorClass& d2, const DivisorClass& d3) {
  if (d1.rank() != form.rank() || d2.rank() != form.rank() || d3.rank() != form.rank())
    throw input_error("divisor class rank does not match the intersection form");
  Integer total = 0;
  for (const auto& [key, value] : form.entries()) {
    std::array<int, 3> p = key;  // sorted ascending, so the loop below visits
    Integer s = 0;               // each distinct permutation exactly once
    do {
      s += d1[p[0]] * d2[p[1]] * d3[p[2]];
    } while (std::next_permutation(p.begin(), p.end()));
    total += value * s;
  }
  return total;
}

// A numerical curve class, tracked through constructions. `meets[i]` is the
// intersection number of the i-th basis divisor with the curve, `genus` the
// geometric genus of the (smooth) representative.
struct CurveClass {
  std::string name;
  int genus = 0;
  std::vector<Integer> meets;
};

// A declared fibration f : X -> Y with connected fibers. The library does not
// compute contractions from cones; constructions register the morphisms they
// assert, carrying exactly the data slope computations need.
struct FibrationDescriptor {
  std::string name;        // map name, e.g. "g" or "pi1"
  std::string target;      // target label, e.g. "P1", "P2", "F1"
  int target_dim = 1;      // 1 or 2
  int relative_rank = 2;   // rank of the relative tangent sheaf = 3 - target_dim
  DivisorClass target_canonical_pullback;  // f* K_Y
  bool has_discriminant = false;           // conic bundles may degenerate
};

// A smooth projective threefold presented by its numerical data: a basis of
// divisor classes, the trilinear intersection form, the canonical class, and
// the tracked curves / declared fibrations / named classes accumulated by the
// construction that produced it. Treated as immutable after construction; all
// operations return new values.
struct Variety3Fold {
  std::string name;
  std::vector<std::string> basis;
  TrilinearForm form;
  DivisorClass canonical;
  std::vector<CurveClass> curves;
  std::vector<FibrationDescriptor> fibrations;
  std::vector<std::pair<std::string, DivisorClass>> classes;  // named, ordered
  std::vector<std::string> provenance;  // construction steps, in order

  int rank() const { return static_cast<int>(basis.size()); }

  DivisorClass anticanonical() const { return -canonical; }

  Integer anticanonical_degree() const {
    const DivisorClass a = anticanonical();
    return triple_product(form, a, a, a);
  }

  int basis_index(const std::string& label) const {
    for (int i = 0; i < rank(); ++i)
      if (basis[static_cast<std::size_t>(i)] == label) return i;
    throw input_error("unknown basis label '" + label + "'");
  }

  const DivisorClass* find_class(const std::string& class_name) const {
    for (const auto& [n, d] : classes)
      if (n == class_name) return &d;
    return nullptr;
  }

  DivisorClass class_named(const std::string& class_name) const {
    if (const DivisorClass* d = find_class(class_name)) return *d;
    throw input_error("unknown named class '" + class_name + "'");
  }

  const CurveClass* find_curve(const std::string& curve_name) const {
    for (const auto& c : curves)
      if (c.name == curve_name) return &c;
    return nullptr;
  }

  const FibrationDescriptor* find_fibration(const std::string& fib_name) const {
    for (const auto& f : fibrations)
      if (f.name == fib_name) return &f;
    return nullptr;
  }
};

// D . C for a tracked curve, from the stored meeting numbers.
inline Integer intersect_curve(const DivisorClass& d, const CurveClass& c) {
  if (d.rank() != static_cast<int>(c.meets.size()))
    throw input_error("curve meeting vector does not match lattice rank");
  Integer s = 0;
  for (int i = 0; i < d.rank(); ++i) s += d[i] * c.meets[static_cast<std::size_t>(i)];
  return s;
}

// Degrees B_i . (-K)^2 of the basis classes against the anticanonical
// polarization. Exact; integral entries presented as rationals for uniformity
// with slope arithmetic.
inline std::vector<Rational> degree_form(const Variety3Fold& x) {
  const DivisorClass a = x.anticanonical();
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(x.rank()));
  for (int i = 0; i < x.rank(); ++i)
    out.emplace_back(triple_product(x.form, DivisorClass::unit(x.rank(), i), a, a));
  return out;
}

// Checks a claimed linear relation lhs == rhs coefficient-wise.
inline bool verify_relation(const Variety3Fold& x, const DivisorClass& lhs,
                            const DivisorClass& rhs) {
  if (lhs.rank() != x.rank() || rhs.rank() != x.rank())
    throw input_error("relation classes do not match the lattice rank");
  return lhs == rhs;
}

// Change of basis along new_basis, whose vectors are written in the current
// basis (columns of the transition matrix M). Requires |det M| == 1: the
// rewrite must be a lattice isomorphism. The form transforms by evaluation on
// the new basis vectors, curve meeting vectors covariantly, and divisor
// coordinates (canonical class, fibration pullbacks, named classes) through
// M^{-1}.
inline Variety3Fold rebase(const Variety3Fold& x, const std::vector<DivisorClass>& new_basis,
                           const std::vector<std::string>& labels) {
  const int n = x.rank();
  if (static_cast<int>(new_basis.size()) != n)
    throw input_error("rebase needs exactly rank-many new basis vectors");
  if (labels.size() != new_basis.size())
    throw input_error("rebase needs one label per new basis vector");
  IntMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    if (new_basis[static_cast<std::size_t>(j)].rank() != n)
      throw input_error("new basis vector has wrong rank");
    for (int i = 0; i < n; ++i) m.at(i, j) = new_basis[static_cast<std::size_t>(j)][i];
  }
  const IntMatrix minv = inverse_unimodular(m);  // throws unless unimodular

  Variety3Fold out;
  out.name = x.name;
  out.basis = labels;
  out.form = TrilinearForm(n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = b; c < n; ++c)
        out.form.set(a, b, c,
                     triple_product(x.form, new_basis[static_cast<std::size_t>(a)],
                                    new_basis[static_cast<std::size_t>(b)],
                                    new_basis[static_cast<std::size_t>(c)]));
  out.canonical = DivisorClass(multiply(minv, x.canonical.coeffs));
  out.curves = x.curves;
  for (auto& c : out.curves) {
    std::vector<Integer> meets(static_cast<std::size_t>(n), Integer(0));
    for (int j = 0; j < n; ++j) {
      Integer s = 0;
      for (int i = 0; i < n; ++i) s += m.at(i, j) * c.meets[static_cast<std::size_t>(i)];
      meets[static_cast<std::size_t>(j)] = s;
    }
    c.meets = std::move(meets);
  }
  out.fibrations = x.fibrations;
  for (auto& f : out.fibrations)
    f.target_canonical_pullback =
        DivisorClass(multiply(minv, f.target_canonical_pullback.coeffs));
  out.classes = x.classes;
  for (auto& [cname, d] : out.classes) d = DivisorClass(multiply(minv, d.coeffs));
  out.provenance = x.provenance;
  std::string step = "rebase:";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) step += ",";
    step += labels[i];
  }
  out.provenance.push_back(step);
  return out;
}

}  // namespace fanostab
