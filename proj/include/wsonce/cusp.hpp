#pragma once

#include <cstdint>
#include <vector>

#include "wsonce/semigroup.hpp"

namespace wsonce {

// A unibranch plane singularity of multiplicity nu whose tangent line meets
// the branch with contact mu > nu. Only the coprime case is supported.
struct CuspType {
  std::int64_t nu = 0;
  std::int64_t mu = 0;

  static CuspType of(std::int64_t nu, std::int64_t mu);
};

// Blow-up bookkeeping for a (nu, mu) cusp: the remainder chain
// cs = (c1 > c2 > ... > c_{k+1} = 1) with c1 = mu, c2 = nu, and the
// quotients ns = (n2, ..., nk) of c_{i-1} = n_i * c_i + c_{i+1}.
// delta = sum over i of n_i * c_i (c_i - 1) / 2 is the genus drop.
struct MultiplicitySequence {
  std::vector<std::int64_t> cs;
  std::vector<std::int64_t> ns;
  std::int64_t delta = 0;
};

// Runs the remainder chain down to 1; coprimality guarantees termination.
MultiplicitySequence euclid_sequence(CuspType c);

// (nu - 1)(mu - 1) / 2, an integer by coprimality. The independent
// cross-check of euclid_sequence().delta.
std::int64_t delta_closed(CuspType c);

// Arithmetic-genus drop bound for a degree-b plane model carrying a
// (b-a, b) cusp and a (mu, a) cusp: (a-1)(b-mu)/2. Requires gcd(a, mu) = 1
// and 1 <= mu < a; NonIntegral if the product is odd.
std::int64_t max_genus_with_cusp(const TwoGenParams& p, std::int64_t mu);

}  // namespace wsonce
