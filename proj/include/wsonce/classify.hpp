#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wsonce/pencil.hpp"
#include "wsonce/rational.hpp"
#include "wsonce/semigroup.hpp"

namespace wsonce {

/* Classification of a Weierstrass semigroup candidate H:
 *
 *   AtMostOnce    -- no curve can carry two points with semigroup H
 *   KnownMultiple -- a curve with two such points is known to exist
 *   Undetermined  -- neither criterion family applies; nothing is claimed
 *
 * AtMostOnce needs two independent facts: the degree-a pencil through the
 * distinguished point is unique (pencil axis), and no second point on that
 * same pencil can share the semigroup (same-pencil axis). COR_7, COR_10 and
 * THEOREM_A establish both at once. */

enum class RuleId {
  THEOREM_A,
  LEMMA_X_PENCIL,
  PROP_1,
  PROP_2_BOUND,
  COR_2_GENUS,
  COR_Y_TRIVIAL,
  COR_7,
  COR_10,
  KNOWN_MULTIPLE_FULL_GENUS,
  KNOWN_MULTIPLE_S,
};

enum class RuleStatus { Established, Failed, NotApplicable };

const char* to_string(RuleId id);
const char* to_string(RuleStatus s);

// Deterministic evidence map; non-empty whenever status != NotApplicable.
struct CriterionOutcome {
  RuleId rule = RuleId::THEOREM_A;
  RuleStatus status = RuleStatus::NotApplicable;
  std::map<std::string, std::string> evidence;
};

enum class VerdictKind { AtMostOnce, KnownMultiple, Undetermined };

const char* to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Undetermined;
  StandingHypotheses hypotheses;
  std::vector<CriterionOutcome> outcomes;  // every RuleId exactly once, in enum order
  bool bounds_mode = false;                // true when built from (a, b, g) only

  const CriterionOutcome& outcome(RuleId id) const;
  bool established(RuleId id) const;
  std::vector<RuleId> established_rules() const;
};

// --- individual criteria (exposed for tests and reports) ------------------

// For every divisor e < a of a there must be some ladder value
// (a/e - 1)a + i*e, i >= 1, missing from H; a divisor whose whole ladder is
// contained (everything at or beyond the conductor counts as contained)
// defeats the test.
CriterionOutcome check_pencil_lemma_x(const NumericalSemigroup& h,
                                      const StandingHypotheses& hyp);

// Established iff H = <a;b> at full genus with b >= a+2.
CriterionOutcome check_prop1(const TwoGenParams& p, const NumericalSemigroup& h);

// Exact genus bound below which a second degree-a pencil cannot be ruled
// out, per divisor e of a: (a-1)(b-1)/2 - (an-ne-a/e+2)(an-ne-a/e+1)/(2ne).
Rational prop2_bound(const TwoGenParams& p, std::int64_t e);

// Established iff genus > prop2_bound for every divisor e < a.
CriterionOutcome check_prop2(const TwoGenParams& p, std::int64_t genus);

// Established iff the dim condition holds and genus > (a-1)(b-a+r)/2.
CriterionOutcome check_cor2(const StandingHypotheses& hyp, std::int64_t genus);

// Established iff the dim condition holds and some trivial new non-gap for
// mu = a-r is missing from H (the witness is recorded).
CriterionOutcome check_cor_y(const NumericalSemigroup& h, const StandingHypotheses& hyp);

// a prime, b > 3a, H pure below (n+1)a (no member outside <a;b>), and
// genus > (a-1)(b-a+r)/2. Establishes both axes.
CriterionOutcome check_cor7(const NumericalSemigroup& h, const StandingHypotheses& hyp);

// dim condition, b > (a/2)^2, genus > (a-1)(b-a+r)/2. Establishes both axes.
CriterionOutcome check_cor10(const StandingHypotheses& hyp, std::int64_t genus);

// The two existence records: (FULL_GENUS) full genus with b = a+1 or
// r = a-1; (S) H equals the sharp semigroup at its genus with the dim
// condition, provided every divisor ladder is capacity-excluded (no
// semigroup of this genus containing <a;b> can host a second pencil).
CriterionOutcome check_known_multiple_full_genus(const TwoGenParams& p,
                                                 std::int64_t genus);
CriterionOutcome check_known_multiple_s(const NumericalSemigroup& h,
                                        const StandingHypotheses& hyp);

// --- composition -----------------------------------------------------------

// Classify a concrete semigroup. Throws NotCoprime when the multiplicity and
// second generator are not coprime. Deterministic; outcomes carry every rule.
Verdict classify(const NumericalSemigroup& h);

// Bound mode: only (a, b, g) are known. Evaluates the subset of rules that
// need no membership table (PROP_1, PROP_2_BOUND, COR_2_GENUS, COR_10); the
// dim condition is assumed (and flagged) unless g is the full genus, where
// it is provable.
Verdict classify_bounds(std::int64_t a, std::int64_t b, std::int64_t genus);

}  // namespace wsonce
