#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wsonce/semigroup.hpp"

namespace wsonce {

// The forced non-gaps {i*b - m*a : n(m) <= i <= a-1, 1 <= m <= mu-1} of a
// second total-ramification point sitting over a (mu, a) cusp. They are
// pairwise distinct, disjoint from <a;b>, and number (a-1)(mu-1)/2.
struct TrivialNewNonGaps {
  TwoGenParams params;
  std::int64_t mu = 0;
  bool mu_is_default = false;                 // mu == a - r
  std::map<std::int64_t, std::int64_t> n_table;  // m -> n(m)
  std::vector<std::int64_t> values;           // sorted ascending
};

// The unique n with (n-1)*mu < m*a < n*mu, i.e. floor(m*a/mu) + 1.
// Coprimality makes both inequalities strict; they are asserted.
std::int64_t n_of_m(std::int64_t m, std::int64_t a, std::int64_t mu);

// Requires gcd(a, mu) = 1 and 1 <= mu < a (NotCoprimeMu otherwise).
TrivialNewNonGaps trivial_new_nongaps(const TwoGenParams& p, std::int64_t mu);

// <a;b> together with the trivial new non-gaps for mu = a - r. Always a
// valid semigroup of genus (a-1)(b-a+r)/2; a closure or genus failure here
// is a build-stopping internal error, not a runtime condition.
NumericalSemigroup sharp_semigroup_s(const TwoGenParams& p);

// Member count of <a;b> strictly between t*a and (t+1)*a, and the top-s
// values of that window, which are the second point's members there.
struct WindowProfile {
  std::int64_t t = 0;
  std::int64_t s = 0;
  std::vector<std::int64_t> q_non_gaps;  // {(t+1)a - i : 1 <= i <= s}, ascending
};

// Profiles for t = 1 .. last window below the conductor of <a;b>.
std::vector<WindowProfile> window_profiles(const TwoGenParams& p);

// The full-genus second-point semigroup: multiples of a plus the top-s
// elements of every window. Genus (a-1)(b-1)/2, equal to <a;b> exactly
// when r = a-1.
NumericalSemigroup ws_of_q_full_genus(const TwoGenParams& p);

}  // namespace wsonce
