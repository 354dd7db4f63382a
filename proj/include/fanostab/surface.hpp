#pragma once

#include <string>
#include <vector>

#include "fanostab/lattice.hpp"

namespace fanostab {

// A smooth projective surface given by its Picard basis, symmetric pairing and
// canonical class. Only what the threefold constructions consume.
struct Surface {
  std::string name;
  std::vector<std::string> basis;
  std::vector<std::vector<Integer>> pairing;  // dense symmetric, basis x basis
  DivisorClass canonical;

  int rank() const { return static_cast<int>(basis.size()); }

  Integer pair(const DivisorClass& a, const DivisorClass& b) const {
    if (a.rank() != rank() || b.rank() != rank())
      throw input_error("surface pairing: class rank mismatch");
    Integer s = 0;
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j)
        s += a[i] * b[j] * pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return s;
  }

  Integer canonical_square() const { return pair(canonical, canonical); }
};

inline Surface surface_p2() {
  Surface s;
  s.name = "p2";
  s.basis = {"h"};
  s.pairing = {{Integer(1)}};
  s.canonical = DivisorClass({Integer(-3)});
  return s;
}

inline Surface surface_p1xp1() {
  Surface s;
  s.name = "p1xp1";
  s.basis = {"h1", "h2"};
  s.pairing = {{Integer(0), Integer(1)}, {Integer(1), Integer(0)}};
  s.canonical = DivisorClass({Integer(-2), Integer(-2)});
  return s;
}

// Blow-up of the plane in k general points: basis (h, e_1, ..., e_k),
// h^2 = 1, e_i^2 = -1, mixed products 0, K = -3h + sum e_i. K^2 = 9 - k.
inline Surface surface_dp(int k) {
  if (k < 1 || k > 8) throw input_error("del Pezzo blow-up count must be 1..8");
  Surface s;
  s.name = "dp" + std::to_string(k);
  s.basis = {"h"};
  for (int i = 1; i <= k; ++i) s.basis.push_back("e" + std::to_string(i));
  const int n = k + 1;
  s.pairing.assign(static_cast<std::size_t>(n),
                   std::vector<Integer>(static_cast<std::size_t>(n), Integer(0)));
  s.pairing[0][0] = 1;
  for (int i = 1; i < n; ++i)
    s.pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -1;
  std::vector<Integer> kc(static_cast<std::size_t>(n), Integer(1));
  kc[0] = -3;
  s.canonical = DivisorClass(std::move(kc));
  return s;
}

// The Hirzebruch surface F1 is the one-point blow-up of the plane; alias kept
// because ruled-surface sources name it that way.
inline Surface surface_f1() {
  Surface s = surface_dp(1);
  s.name = "f1";
  return s;
}

}  // namespace fanostab
