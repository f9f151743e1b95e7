#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wsonce/errors.hpp"

namespace wsonce {

/* A numerical semigroup is an additively closed subset of the non-negative
 * integers that contains 0 and has finite complement. The complement elements
 * are the gaps, their count is the genus, the smallest positive member is the
 * multiplicity, and the conductor c is the least integer with [c, infinity)
 * entirely inside the semigroup (c = 0 for the full semigroup N).
 *
 * Everything here is a bounded membership scan over [0, conductor]: the table
 * plus cached statistics is the whole representation. Values are immutable
 * after construction and safe to share across threads. */
class NumericalSemigroup {
 public:
  // Default: the full semigroup N (genus 0, conductor 0).
  NumericalSemigroup() = default;

  // Smallest additively closed set containing 0 and the generators.
  // The generators must be positive with overall gcd 1, otherwise the
  // complement would be infinite (NonCoprimeGenerators).
  static NumericalSemigroup from_generators(std::vector<std::int64_t> gens);

  // Semigroup whose gap set is exactly `gapset` (positive integers), if the
  // complement is additively closed; NotClosed with a witness pair otherwise.
  static NumericalSemigroup from_gaps(std::vector<std::int64_t> gapset);

  // Membership table over [0, bound); positions >= bound are implicit
  // members. Validates closure (NotClosed) and normalizes the conductor.
  static NumericalSemigroup from_membership(std::vector<unsigned char> table);

  bool contains(std::int64_t x) const;

  std::int64_t conductor() const { return conductor_; }
  std::int64_t frobenius() const;  // conductor - 1; requires genus > 0
  std::int64_t genus() const { return static_cast<std::int64_t>(gaps_.size()); }
  const std::vector<std::int64_t>& gaps() const { return gaps_; }
  std::int64_t multiplicity() const { return multiplicity_; }

  // Members of H union `extra` if that set is additively closed, else
  // NotClosed with witness (u, m): u promoted, m member, u + m missing.
  NumericalSemigroup union_with(const std::vector<std::int64_t>& extra) const;

  bool operator==(const NumericalSemigroup& o) const { return gaps_ == o.gaps_; }
  bool operator!=(const NumericalSemigroup& o) const { return !(*this == o); }

 private:
  static NumericalSemigroup normalize(std::vector<unsigned char> table);

  std::vector<unsigned char> member_ = {1};  // index range [0, conductor_]
  std::vector<std::int64_t> gaps_;
  std::int64_t conductor_ = 0;
  std::int64_t multiplicity_ = 1;
};

// The decomposition b = n*a + r with n >= 1 and 0 < r < a, for coprime
// 2 <= a < b. fullGenus = (a-1)(b-1)/2 is the genus of <a;b>.
struct TwoGenParams {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t n = 0;
  std::int64_t r = 0;

  static TwoGenParams from(std::int64_t a, std::int64_t b);
  std::int64_t full_genus() const;
};

// Smallest member of H not divisible by the multiplicity; requires genus > 0.
std::int64_t second_generator(const NumericalSemigroup& h);

// The standing shape of H around its second generator: a = multiplicity,
// b = second generator, b = n*a + r, and whether b is the ONLY member
// strictly between n*a and (n+1)*a (the dim condition).
struct StandingHypotheses {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t n = 0;
  std::int64_t r = 0;
  bool dim_condition_holds = false;
  bool dim_condition_assumed = false;  // true only in bound mode, g < fullGenus
};

// Throws NotCoprime if gcd(multiplicity, second generator) != 1.
StandingHypotheses standing_hypotheses_check(const NumericalSemigroup& h);

}  // namespace wsonce
