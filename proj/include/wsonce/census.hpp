#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wsonce/classify.hpp"
#include "wsonce/semigroup.hpp"

namespace wsonce {

// All semigroups H containing <a;b> with genus(H) = g, formed by promoting
// exactly fullGenus - g gaps of <a;b> subject to additive closure. With
// require_standing set, only rows with multiplicity a, second generator b
// and the dim condition survive. Output is canonically ordered
// (lexicographic on ascending gap lists) and duplicate-free.
std::vector<NumericalSemigroup> enumerate_containing(const TwoGenParams& p,
                                                     std::int64_t genus,
                                                     bool require_standing);

// Unpruned oracle: iterates every gap subset of the right size and validates
// closure from scratch. Guarded to fullGenus - g <= 12 (TooLarge). Test use.
std::vector<NumericalSemigroup> brute_force_enumerate(const TwoGenParams& p,
                                                      std::int64_t genus);

// <4;4n+1> with the top m values of the 3-mod-4 gap column promoted;
// genus 6n - m. Needs n >= 2 and 0 <= m <= 2n-1.
NumericalSemigroup family_4_1(std::int64_t n, std::int64_t m);

// <5;5n+1> with {5i+3 : m' <= i <= 3n} and {5i+4 : m <= i <= 4n} promoted,
// under m <= n+m', 2m >= m', m+m' > 3n+3 (ConstraintViolated otherwise)
// and n >= 4.
NumericalSemigroup family_4_2(std::int64_t n, std::int64_t m, std::int64_t m_prime);

// The ten-value augmentation of <6;6n+1>, genus 15n-10; equals
// sharp_semigroup_s(6, 6n+1) for every n >= 2.
NumericalSemigroup family_4_3(std::int64_t n);

struct CensusRow {
  NumericalSemigroup semigroup;
  Verdict verdict;
  std::optional<std::string> family_tag;  // BASE, EX_4_1, EX_4_2, EX_4_3, SHARP_S
};

// Enumerate, classify every row (jobs > 1 splits classification across
// threads; output is independent of the worker count), and tag rows that
// match a family generator or the sharp semigroup.
std::vector<CensusRow> census_classify(const TwoGenParams& p, std::int64_t genus,
                                       bool require_standing, int jobs = 1);

}  // namespace wsonce
