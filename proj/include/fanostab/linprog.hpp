#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fanostab/rational.hpp"

namespace fanostab {

enum class Relation { le, ge, eq };

inline std::string to_string(Relation r) {
  switch (r) {
    case Relation::le:
      return "<=";
    case Relation::ge:
      return ">=";
    case Relation::eq:
      return "==";
  }
  return "<=";
}

inline Relation relation_from_string(const std::string& s) {
  if (s == "<=") return Relation::le;
  if (s == ">=") return Relation::ge;
  if (s == "==" || s == "=") return Relation::eq;
  throw input_error("unknown relation '" + s + "'");
}

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::le;
  Rational rhs;
};

// A linear maximization problem over exact rationals. Non-"<=" relations are
// normalized away internally; coefficient vectors must match the variable
// count.
struct ConstraintSystem {
  std::string name;
  std::vector<std::string> variables;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus { optimal, unbounded, infeasible };

inline std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal:
      return "optimal";
    case LpStatus::unbounded:
      return "unbounded";
    case LpStatus::infeasible:
      return "infeasible";
  }
  return "optimal";
}

struct LpResult {
  LpStatus status = LpStatus::optimal;
  Rational max_value;            // meaningful when status == optimal
  std::vector<Rational> point;   // lexicographically smallest optimal vertex
};

namespace lp_detail {

// A row c_0 .. c_{k-1} | rhs encodes sum c_i x_i <= rhs, all integers, gcd 1.
using Row = std::vector<Integer>;

inline Row normalized(Row r) {
  Integer g = 0;
  for (const auto& v : r) g = boost::multiprecision::gcd(g, v);
  if (g > 1)
    for (auto& v : r) v /= g;
  return r;
}

// Inserts a row unless trivially true; flags 0 <= negative contradictions.
inline void add_row(std::set<Row>& rows, Row r, bool& contradiction) {
  const int k = static_cast<int>(r.size()) - 1;
  bool all_zero = true;
  for (int i = 0; i < k; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) {
      all_zero = false;
      break;
    }
  if (all_zero) {
    if (r.back() < 0) contradiction = true;
    return;
  }
  rows.insert(normalized(std::move(r)));
}

// Scales a rational row to a primitive integer row.
inline Row integer_row(const std::vector<Rational>& coeffs, const Rational& rhs) {
  Integer scale = denominator(rhs);
  for (const auto& c : coeffs) scale = boost::multiprecision::lcm(scale, denominator(c));
  Row r;
  r.reserve(coeffs.size() + 1);
  for (const auto& c : coeffs) r.push_back(numerator(c) * (scale / denominator(c)));
  r.push_back(numerator(rhs) * (scale / denominator(rhs)));
  return r;
}

// Fourier-Motzkin step: projects out variable `var`. Every positive/negative
// pair combines with positive multipliers, so inequality directions survive.
inline void eliminate(std::set<Row>& rows, int var, bool& contradiction) {
  std::vector<Row> pos, neg;
  std::set<Row> out;
  for (const auto& r : rows) {
    const Integer& c = r[static_cast<std::size_t>(var)];
    if (c > 0)
      pos.push_back(r);
    else if (c < 0)
      neg.push_back(r);
    else
      out.insert(r);
  }
  const std::size_t width = rows.empty() ? 0 : rows.begin()->size();
  for (const auto& p : pos)
    for (const auto& m : neg) {
      const Integer a = p[static_cast<std::size_t>(var)];   // > 0
      const Integer b = -m[static_cast<std::size_t>(var)];  // > 0
      Row r(width);
      for (std::size_t i = 0; i < width; ++i) r[i] = a * m[i] + b * p[i];
      add_row(out, std::move(r), contradiction);
    }
  rows = std::move(out);
}

// Exact max of objective (rational vector over the first k variables) subject
// to rows; assumes the system is feasible. nullopt = unbounded above.
struct BoundResult {
  bool contradiction = false;
  std::optional<Rational> max;
};

inline BoundResult max_of(const std::set<Row>& rows, int k,
                          const std::vector<Rational>& objective) {
  bool contradiction = false;
  // Append a fresh variable z with z - objective . x <= 0, then project x out.
  std::set<Row> work;
  for (Row r : rows) {
    r.insert(r.end() - 1, Integer(0));  // z coefficient slot before rhs
    work.insert(std::move(r));
  }
  {
    std::vector<Rational> zrow_coeffs;
    zrow_coeffs.reserve(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i < k; ++i) zrow_coeffs.push_back(-objective[static_cast<std::size_t>(i)]);
    zrow_coeffs.emplace_back(1);
    add_row(work, integer_row(zrow_coeffs, Rational(0)), contradiction);
  }
  for (int var = 0; var < k; ++var) eliminate(work, var, contradiction);

  BoundResult out;
  if (contradiction) {
    out.contradiction = true;
    return out;
  }
  std::optional<Rational> best;
  for (const auto& r : work) {
    const Integer& a = r[static_cast<std::size_t>(k)];
    if (a > 0) {
      const Rational ub = make_rational(r.back(), a);
      if (!best || ub < *best) best = ub;
    }
    // a == 0 rows are pure feasibility facts, handled by the caller's
    // feasibility pass; a < 0 cannot occur (z coefficients stay nonnegative).
  }
  out.max = best;
  return out;
}

// Substitutes x_var = value into every row, keeping rows integral.
inline std::set<Row> substitute(const std::set<Row>& rows, int var, const Rational& value) {
  bool contradiction = false;  // cannot trigger: value is feasible for rows
  std::set<Row> out;
  for (const auto& r : rows) {
    const Integer& c = r[static_cast<std::size_t>(var)];
    Row nr = r;
    nr[static_cast<std::size_t>(var)] = 0;
    if (c != 0) {
      const Integer den = denominator(value);
      for (auto& v : nr) v *= den;
      nr.back() -= c * numerator(value);
    }
    add_row(out, std::move(nr), contradiction);
  }
  return out;
}

}  // namespace lp_detail

// Exact maximization by Fourier-Motzkin elimination. Reports the maximum and
// the lexicographically smallest attaining point (per coordinate: the minimum
// over the optimal face; if a coordinate is unbounded below there, its maximum;
// failing both, 0), or the unbounded/infeasible status.
inline LpResult maximize_slope(const ConstraintSystem& cs) {
  const int k = static_cast<int>(cs.variables.size());
  if (static_cast<int>(cs.objective.size()) != k)
    throw input_error("objective length does not match variable count");

  bool contradiction = false;
  std::set<lp_detail::Row> rows;
  for (const auto& c : cs.constraints) {
    if (static_cast<int>(c.coeffs.size()) != k)
      throw input_error("constraint length does not match variable count");
    std::vector<Rational> coeffs = c.coeffs;
    if (c.rel == Relation::le || c.rel == Relation::eq)
      lp_detail::add_row(rows, lp_detail::integer_row(coeffs, c.rhs), contradiction);
    if (c.rel == Relation::ge || c.rel == Relation::eq) {
      std::vector<Rational> neg;
      neg.reserve(coeffs.size());
      for (const auto& v : coeffs) neg.push_back(-v);
      lp_detail::add_row(rows, lp_detail::integer_row(neg, -c.rhs), contradiction);
    }
  }

  LpResult res;
  {
    std::set<lp_detail::Row> feas = rows;
    for (int var = 0; var < k; ++var) lp_detail::eliminate(feas, var, contradiction);
    if (contradiction) {
      res.status = LpStatus::infeasible;
      return res;
    }
  }

  const lp_detail::BoundResult bound = lp_detail::max_of(rows, k, cs.objective);
  if (bound.contradiction) {  // unreachable once feasibility passed; belt and braces
    res.status = LpStatus::infeasible;
    return res;
  }
  if (!bound.max) {
    res.status = LpStatus::unbounded;
    return res;
  }
  res.status = LpStatus::optimal;
  res.max_value = *bound.max;

  // Optimal face: feasible points with objective >= max (<= is implied).
  std::set<lp_detail::Row> face = rows;
  {
    std::vector<Rational> neg;
    neg.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) neg.push_back(-cs.objective[static_cast<std::size_t>(i)]);
    lp_detail::add_row(face, lp_detail::integer_row(neg, -res.max_value), contradiction);
  }
  res.point.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    std::vector<Rational> minus_ei(static_cast<std::size_t>(k), Rational(0));
    minus_ei[static_cast<std::size_t>(i)] = -1;
    Rational value;
    if (const auto lo = lp_detail::max_of(face, k, minus_ei); lo.max) {
      value = -*lo.max;
    } else {
      std::vector<Rational> ei(static_cast<std::size_t>(k), Rational(0));
      ei[static_cast<std::size_t>(i)] = 1;
      const auto hi = lp_detail::max_of(face, k, ei);
      value = hi.max ? *hi.max : Rational(0);
    }
    res.point.push_back(value);
    face = lp_detail::substitute(face, i, value);
  }
  return res;
}

}  // namespace fanostab
