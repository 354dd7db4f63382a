#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanostab/lattice.hpp"

namespace fanostab {

// Rank and first Chern class of a torsion-free sheaf: all that slope
// computations see.
struct SheafDescriptor {
  std::string name;
  int rank = 1;
  DivisorClass c1;
};

inline SheafDescriptor tangent_sheaf(const Variety3Fold& x) {
  return SheafDescriptor{"T_X", 3, x.anticanonical()};
}

inline SheafDescriptor cotangent_sheaf(const Variety3Fold& x) {
  return SheafDescriptor{"Omega1_X", 3, x.canonical};
}

// Dual sheaf: rank unchanged, c1 negated.
inline SheafDescriptor dual_view(const SheafDescriptor& f) {
  return SheafDescriptor{f.name + "^", f.rank, -f.c1};
}

// T_{X/Y} for a declared fibration f : X -> Y, the kernel of T_X -> f*T_Y:
// rank dim X - dim Y, c1 = -K_X + f*K_Y.
inline SheafDescriptor relative_tangent(const Variety3Fold& x, const FibrationDescriptor& f) {
  return SheafDescriptor{"T_{X/" + f.target + "}", f.relative_rank,
                         x.anticanonical() + f.target_canonical_pullback};
}

// f*Omega^1_Y, the pulled-back cotangent sheaf of the base: rank dim Y,
// c1 = f*K_Y. A subsheaf of Omega^1_X.
inline SheafDescriptor pullback_cotangent(const Variety3Fold& x, const FibrationDescriptor& f) {
  if (f.target_canonical_pullback.rank() != x.rank())
    throw input_error("fibration pullback class does not match the lattice rank");
  return SheafDescriptor{f.name + "*Omega1_{" + f.target + "}", f.target_dim,
                         f.target_canonical_pullback};
}

// Mumford-Takemoto slope c1(F) . H^2 / rank(F) for a polarization H
// (anticanonical unless overridden; ampleness of a custom H is the caller's
// assertion, not checked).
inline Rational slope(const Variety3Fold& x, const SheafDescriptor& f,
                      const DivisorClass& polarization) {
  if (f.rank <= 0) throw input_error("slope of a sheaf with non-positive rank");
  return make_rational(triple_product(x.form, f.c1, polarization, polarization),
                       Integer(f.rank));
}

inline Rational slope(const Variety3Fold& x, const SheafDescriptor& f) {
  return slope(x, f, x.anticanonical());
}

enum class StabilityStatus { stable_among_tested, strictly_semistable_witness, unstable };

inline std::string to_string(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::stable_among_tested:
      return "stable-among-tested";
    case StabilityStatus::strictly_semistable_witness:
      return "strictly-semistable-witness";
    case StabilityStatus::unstable:
      return "unstable";
  }
  return "unstable";
}

// Which bundle the candidates are compared inside: subsheaves of T_X against
// mu(T_X), or subsheaves of Omega^1_X against mu(Omega^1_X).
enum class CheckSide { tangent, cotangent };

struct CandidateEval {
  SheafDescriptor sheaf;
  CheckSide side = CheckSide::tangent;
  Rational candidate_slope;   // mu of the candidate subsheaf
  Rational reference_slope;   // mu of the ambient bundle on that side
  Rational excess() const { return candidate_slope - reference_slope; }
};

// Verdict of the contraction-driven test. `witness` carries the candidate of
// maximal slope excess when the status is not stable-among-tested; its
// reference slope is mu(T_X) for tangent-side witnesses and mu(Omega^1_X) for
// cotangent-side ones.
struct Verdict {
  StabilityStatus status = StabilityStatus::stable_among_tested;
  std::optional<CandidateEval> witness;
  std::vector<CandidateEval> candidates;
};

// Tests the canonical destabilizer candidates attached to the declared
// fibrations. On the tangent side: T_{X/Y} inside T_X for every fibration,
// plus (for one-dimensional targets) the line bundle f*Omega^1_Y inside
// Omega^1_X — the witnesses classically reported for del Pezzo fibrations. On
// the cotangent side: f*Omega^1_Y inside Omega^1_X for every fibration. Both
// sides yield the same status: for each fibration the two excesses have the
// same sign. Only declared fibrations are tested: a stable-among-tested
// verdict is relative to the candidate list, never a stability proof.
inline Verdict theorem1_check(const Variety3Fold& x, CheckSide side,
                              const DivisorClass& polarization) {
  const Rational mu_t = slope(x, tangent_sheaf(x), polarization);
  const Rational mu_omega = slope(x, cotangent_sheaf(x), polarization);

  Verdict v;
  for (const auto& f : x.fibrations) {
    if (f.target_canonical_pullback.rank() != x.rank())
      throw input_error("fibration pullback class does not match the lattice rank");
    if (side == CheckSide::tangent) {
      CandidateEval rel;
      rel.sheaf = relative_tangent(x, f);
      rel.side = CheckSide::tangent;
      rel.candidate_slope = slope(x, rel.sheaf, polarization);
      rel.reference_slope = mu_t;
      v.candidates.push_back(rel);
      if (f.target_dim == 1) {
        CandidateEval pull;
        pull.sheaf = pullback_cotangent(x, f);
        pull.side = CheckSide::cotangent;
        pull.candidate_slope = slope(x, pull.sheaf, polarization);
        pull.reference_slope = mu_omega;
        v.candidates.push_back(pull);
      }
    } else {
      CandidateEval pull;
      pull.sheaf = pullback_cotangent(x, f);
      pull.side = CheckSide::cotangent;
      pull.candidate_slope = slope(x, pull.sheaf, polarization);
      pull.reference_slope = mu_omega;
      v.candidates.push_back(pull);
    }
  }

  const CandidateEval* best = nullptr;
  for (const auto& c : v.candidates)
    if (best == nullptr || c.excess() > best->excess()) best = &c;
  if (best == nullptr || best->excess() < 0) {
    v.status = StabilityStatus::stable_among_tested;
  } else {
    v.status = best->excess() > 0 ? StabilityStatus::unstable
                                  : StabilityStatus::strictly_semistable_witness;
    v.witness = *best;
  }
  return v;
}

inline Verdict theorem1_check(const Variety3Fold& x, CheckSide side = CheckSide::tangent) {
  return theorem1_check(x, side, x.anticanonical());
}

}  // namespace fanostab
