#pragma once

#include <string>
#include <vector>

#include "fanostab/rational.hpp"

namespace fanostab {

// binomial(n, k) with the convention 0 outside 0 <= k <= n (n >= 0).
inline Integer binomial(const Integer& n, const Integer& k) {
  if (n < 0 || k < 0 || k > n) return 0;
  const Integer kk = k > n - k ? n - k : k;
  Integer num = 1, den = 1;
  for (Integer i = 0; i < kk; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

struct BottQuery {
  int n = 1;  // ambient projective space dimension
  int p = 0;  // exterior power of the cotangent bundle
  int q = 0;  // cohomological degree
  int k = 0;  // twist
};

// h^q(P^n, Omega^p(k)) in closed form: nonzero only in the three classical
// ranges (q = 0 with k > p; the Hodge diagonal q = p at k = 0; q = n with
// k < p - n), with binomial-product dimensions.
inline Integer bott_dimension(const BottQuery& query) {
  const int n = query.n, p = query.p, q = query.q, k = query.k;
  if (n < 1) throw input_error("bott_dimension needs ambient dimension >= 1");
  if (p < 0 || p > n || q < 0 || q > n)
    throw input_error("bott_dimension needs 0 <= p,q <= n");
  if (q == 0 && k > p)
    return binomial(Integer(k + n - p), Integer(k)) * binomial(Integer(k - 1), Integer(p));
  if (q == p && k == 0) return 1;
  if (q == n && k < p - n)
    return binomial(Integer(-k + p), Integer(-k)) * binomial(Integer(-k - 1), Integer(n - p));
  return 0;
}

inline Integer bott_dimension(int n, int p, int q, int k) {
  return bott_dimension(BottQuery{n, p, q, k});
}

// Rank-one Fano data: -K = r L0 with L0 the ample generator, generator_degree
// = L0^n (0 = unspecified; unused by the rule engine). The extremal indices
// pin the variety: r = n+1 happens only on P^n and r = n only on the quadric
// (Kobayashi-Ochiai), so those combinations must carry the matching generator
// degree when one is given.
struct IndexedFano {
  int dimension = 3;
  int index = 1;
  Integer generator_degree = 0;
};

inline void validate(const IndexedFano& x) {
  if (x.dimension < 2) throw input_error("IndexedFano needs dimension >= 2");
  if (x.index < 1 || x.index > x.dimension + 1)
    throw input_error("Fano index must satisfy 1 <= r <= n+1");
  if (x.generator_degree != 0) {
    if (x.index == x.dimension + 1 && x.generator_degree != 1)
      throw input_error("index n+1 forces projective space (generator degree 1)");
    if (x.index == x.dimension && x.generator_degree != 2)
      throw input_error("index n forces the quadric (generator degree 2)");
  }
}

// The two families of twist conditions on a rank-one Fano: the
// exterior-cotangent conditions quantify H^0(Omega^i x L^{-1}) = 0 over all
// L = m L0 with m >= ceil(-i r / n); the exterior-tangent ones over
// m >= ceil(i r / n).
enum class HoppeCondition { exterior_cotangent, exterior_tangent };

inline Integer hoppe_threshold(int n, int r, int i, HoppeCondition c) {
  if (n < 1 || i < 0) throw input_error("hoppe_threshold needs n >= 1, i >= 0");
  const Integer num = c == HoppeCondition::exterior_cotangent ? Integer(-i) * r : Integer(i) * r;
  return ceil_div(num, Integer(n));
}

inline Integer hoppe_threshold(const IndexedFano& x, int i,
                               HoppeCondition c = HoppeCondition::exterior_cotangent) {
  validate(x);
  return hoppe_threshold(x.dimension, x.index, i, c);
}

enum class VanishStatus { vanishes, nonzero, inconclusive };

inline std::string to_string(VanishStatus s) {
  switch (s) {
    case VanishStatus::vanishes:
      return "vanishes";
    case VanishStatus::nonzero:
      return "nonzero";
    case VanishStatus::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

// H^0(X, Omega^i x L^m) on a Fano with L ample: vanishes for m < 0 (the group
// embeds in a Kodaira-Nakano-vanishing one), and for m = 0 with i >= 1
// (h^0(Omega^i) = h^i(O) = 0). Positive twists are outside this rule's domain
// and come back inconclusive, never as a guess.
inline VanishStatus kodaira_nakano_vanishes(int i, int m) {
  if (i < 0) throw input_error("negative exterior power");
  if (m < 0) return VanishStatus::vanishes;
  if (m == 0 && i >= 1) return VanishStatus::vanishes;
  return VanishStatus::inconclusive;
}

// One established (or attempted) vanishing statement with the hypothesis that
// was checked and the classical result it leans on.
struct Fact {
  std::string statement;
  std::string hypothesis;
  std::string citation;
};

struct RuleStep {
  std::string condition;  // "A1", "A2", ...
  std::string rule;       // "reid" | "kodaira" | "wahl" | "bott" | "none"
  bool established = false;
  Fact fact;
};

struct B2OneVerdict {
  bool stable = false;
  std::vector<RuleStep> trace;
};

namespace cohomology_detail {

// Verifies one exterior-cotangent condition on projective space directly: all
// twists at or above the threshold give h^0 = 0. Finite window by evaluation,
// infinite tail by the Bott support bound (h^0(Omega^i(j)) = 0 unless j > i).
inline RuleStep bott_condition_step(int n, int i) {
  const int r = n + 1;
  const Integer t = hoppe_threshold(n, r, i, HoppeCondition::exterior_cotangent);
  constexpr int window = 24;
  bool ok = true;
  for (Integer m = t; m <= t + window; ++m) {
    const int twist = -static_cast<int>(m);  // tiny values only
    if (bott_dimension(n, i, 0, twist) != 0) {
      ok = false;
      break;
    }
  }
  const Integer neg_t = -t;
  const Integer window_end = t + window;
  const bool tail_ok = neg_t <= i;  // beyond the window every twist is <= i
  RuleStep step;
  step.condition = "A" + std::to_string(i);
  step.rule = "bott";
  step.established = ok && tail_ok;
  step.fact.statement = "h^0(Omega^" + std::to_string(i) + "(j)) = 0 for all j <= " +
                        neg_t.str() + " on P^" + std::to_string(n);
  step.fact.hypothesis = "index n+1 identifies X with P^n (Kobayashi-Ochiai); window m = " +
                         t.str() + ".." + window_end.str() +
                         " evaluated, tail by support bound -t <= i: " + neg_t.str() +
                         " <= " + std::to_string(i);
  step.fact.citation = "Bott";
  return step;
}

}  // namespace cohomology_detail

// Decision procedure for stability of the tangent bundle on a rank-one Fano,
// by establishing the exterior-cotangent conditions A1..A(n-1):
//   - index 1: all conditions hold (Reid);
//   - A1 holds for every index (Kodaira-Nakano + Kodaira);
//   - index <= n: A(n-1) holds (Wahl);
//   - index n+1 (projective space): every condition checked via Bott.
// Every step records the hypothesis it checked; conditions no rule reaches are
// reported inconclusive, never guessed. For n = 3 the four possible indices
// are all decided.
inline B2OneVerdict check_b2_one_stability(const IndexedFano& x) {
  validate(x);
  const int n = x.dimension;
  const int r = x.index;

  B2OneVerdict v;
  v.stable = true;
  for (int i = 1; i <= n - 1; ++i) {
    RuleStep step;
    step.condition = "A" + std::to_string(i);
    if (r == 1) {
      step.rule = "reid";
      step.established = true;
      step.fact.statement = "H^0(Omega^" + std::to_string(i) +
                            " x L^{-1}) = 0 for every L = m L0 with m >= " +
                            hoppe_threshold(n, r, i, HoppeCondition::exterior_cotangent).str();
      step.fact.hypothesis = "index r = 1";
      step.fact.citation = "Reid";
    } else if (r == n + 1) {
      step = cohomology_detail::bott_condition_step(n, i);
    } else if (i == 1) {
      step.rule = "kodaira";
      step.established = true;
      step.fact.statement = "H^0(Omega^1 x L^{-1}) = 0 above the first threshold";
      step.fact.hypothesis = "holds for every index; shown via h^0(Omega^1 x O(m)) = 0, m <= 0";
      step.fact.citation = "Kodaira-Nakano + Kodaira";
    } else if (i == n - 1 && r <= n) {
      step.rule = "wahl";
      step.established = true;
      step.fact.statement = "H^0(Omega^" + std::to_string(i) + " x L^{-1}) = 0 (top condition)";
      step.fact.hypothesis = "index r = " + std::to_string(r) + " <= n = " + std::to_string(n);
      step.fact.citation = "Wahl";
    } else {
      step.rule = "none";
      step.established = false;
      step.fact.statement = "no rule reaches condition A" + std::to_string(i);
      step.fact.hypothesis = "1 < r <= n and 1 < i < n-1";
      step.fact.citation = "";
    }
    if (!step.established) v.stable = false;
    v.trace.push_back(std::move(step));
  }
  return v;
}

}  // namespace fanostab
