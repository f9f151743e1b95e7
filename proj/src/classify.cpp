#include "wsonce/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "wsonce/checked.hpp"
#include "wsonce/errors.hpp"

namespace wsonce {

namespace {

constexpr RuleId kAllRules[] = {
    RuleId::THEOREM_A,      RuleId::LEMMA_X_PENCIL,
    RuleId::PROP_1,         RuleId::PROP_2_BOUND,
    RuleId::COR_2_GENUS,    RuleId::COR_Y_TRIVIAL,
    RuleId::COR_7,          RuleId::COR_10,
    RuleId::KNOWN_MULTIPLE_FULL_GENUS, RuleId::KNOWN_MULTIPLE_S,
};

std::vector<std::int64_t> proper_divisors(std::int64_t a) {
  std::vector<std::int64_t> out;
  for (std::int64_t e = 1; e < a; ++e)
    if (a % e == 0) out.push_back(e);
  return out;
}

bool is_prime(std::int64_t a) {
  if (a < 2) return false;
  for (std::int64_t d = 2; d * d <= a; ++d)
    if (a % d == 0) return false;
  return true;
}

std::string i2s(std::int64_t v) { return std::to_string(v); }

// (a-1)(b-a+r)/2, the genus threshold shared by COR_2, COR_7, COR_10 and the
// sharp semigroup.
std::int64_t sharp_threshold(const StandingHypotheses& hyp) {
  return checked_mul(hyp.a - 1, checked_sub(checked_add(hyp.b, hyp.r), hyp.a)) / 2;
}

}  // namespace

const char* to_string(RuleId id) {
  switch (id) {
    case RuleId::THEOREM_A: return "THEOREM_A";
    case RuleId::LEMMA_X_PENCIL: return "LEMMA_X_PENCIL";
    case RuleId::PROP_1: return "PROP_1";
    case RuleId::PROP_2_BOUND: return "PROP_2_BOUND";
    case RuleId::COR_2_GENUS: return "COR_2_GENUS";
    case RuleId::COR_Y_TRIVIAL: return "COR_Y_TRIVIAL";
    case RuleId::COR_7: return "COR_7";
    case RuleId::COR_10: return "COR_10";
    case RuleId::KNOWN_MULTIPLE_FULL_GENUS: return "KNOWN_MULTIPLE_FULL_GENUS";
    case RuleId::KNOWN_MULTIPLE_S: return "KNOWN_MULTIPLE_S";
  }
  return "UNKNOWN_RULE";
}

const char* to_string(RuleStatus s) {
  switch (s) {
    case RuleStatus::Established: return "Established";
    case RuleStatus::Failed: return "Failed";
    case RuleStatus::NotApplicable: return "NotApplicable";
  }
  return "UnknownStatus";
}

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::AtMostOnce: return "AtMostOnce";
    case VerdictKind::KnownMultiple: return "KnownMultiple";
    case VerdictKind::Undetermined: return "Undetermined";
  }
  return "UnknownKind";
}

const CriterionOutcome& Verdict::outcome(RuleId id) const {
  for (const CriterionOutcome& o : outcomes)
    if (o.rule == id) return o;
  throw std::logic_error("verdict is missing a rule outcome");
}

bool Verdict::established(RuleId id) const {
  for (const CriterionOutcome& o : outcomes)
    if (o.rule == id) return o.status == RuleStatus::Established;
  return false;
}

std::vector<RuleId> Verdict::established_rules() const {
  std::vector<RuleId> out;
  for (const CriterionOutcome& o : outcomes)
    if (o.status == RuleStatus::Established) out.push_back(o.rule);
  return out;
}

CriterionOutcome check_pencil_lemma_x(const NumericalSemigroup& h,
                                      const StandingHypotheses& hyp) {
  CriterionOutcome out{RuleId::LEMMA_X_PENCIL, RuleStatus::Established, {}};
  for (std::int64_t e : proper_divisors(hyp.a)) {
    const std::int64_t l0 = (hyp.a / e - 1) * hyp.a;
    std::int64_t witness = -1;
    for (std::int64_t v = l0 + e; v < h.conductor(); v += e) {
      if (!h.contains(v)) {
        witness = v;
        break;
      }
    }
    const std::string key = "e" + i2s(e);
    if (witness < 0) {
      out.status = RuleStatus::Failed;
      out.evidence[key] = "ladder contained";
    } else {
      out.evidence[key] = "missing " + i2s(witness);
    }
  }
  return out;
}

CriterionOutcome check_prop1(const TwoGenParams& p, const NumericalSemigroup& h) {
  CriterionOutcome out{RuleId::PROP_1, RuleStatus::NotApplicable, {}};
  if (p.b < p.a + 2) return out;
  if (h.genus() != p.full_genus()) return out;
  if (h != NumericalSemigroup::from_generators({p.a, p.b})) return out;
  out.status = RuleStatus::Established;
  out.evidence["genus"] = i2s(h.genus());
  out.evidence["b"] = i2s(p.b);
  return out;
}

Rational prop2_bound(const TwoGenParams& p, std::int64_t e) {
  if (e < 1 || e >= p.a || p.a % e != 0)
    throw DomainError(ErrorCode::InvalidInput,
                      "e must be a proper divisor of a, got " + i2s(e));
  const std::int64_t an = checked_mul(p.a, p.n);
  const std::int64_t big = checked_sub(checked_sub(an, checked_mul(p.n, e)), p.a / e);
  const Rational full = Rational::of(checked_mul(p.a - 1, p.b - 1), 2);
  const Rational correction = Rational::of(
      checked_mul(checked_add(big, 2), checked_add(big, 1)),
      checked_mul(2, checked_mul(p.n, e)));
  return full - correction;
}

CriterionOutcome check_prop2(const TwoGenParams& p, std::int64_t genus) {
  CriterionOutcome out{RuleId::PROP_2_BOUND, RuleStatus::Established, {}};
  for (std::int64_t e : proper_divisors(p.a)) {
    const Rational bound = prop2_bound(p, e);
    const bool ok = genus > bound;
    out.evidence["bound_e" + i2s(e)] = bound.str();
    if (!ok) out.status = RuleStatus::Failed;
  }
  out.evidence["genus"] = i2s(genus);
  return out;
}

CriterionOutcome check_cor2(const StandingHypotheses& hyp, std::int64_t genus) {
  CriterionOutcome out{RuleId::COR_2_GENUS, RuleStatus::NotApplicable, {}};
  if (!hyp.dim_condition_holds) return out;
  const std::int64_t threshold = sharp_threshold(hyp);
  out.evidence["threshold"] = i2s(threshold);
  out.evidence["genus"] = i2s(genus);
  out.status = genus > threshold ? RuleStatus::Established : RuleStatus::Failed;
  return out;
}

CriterionOutcome check_cor_y(const NumericalSemigroup& h,
                             const StandingHypotheses& hyp) {
  CriterionOutcome out{RuleId::COR_Y_TRIVIAL, RuleStatus::NotApplicable, {}};
  if (!hyp.dim_condition_holds) return out;
  const std::int64_t mu = hyp.a - hyp.r;
  const TwoGenParams p = TwoGenParams::from(hyp.a, hyp.b);
  if (mu < 1) throw std::logic_error("mu = a - r out of range");
  if (mu == 1) {
    // empty list is vacuously contained
    out.status = RuleStatus::Failed;
    out.evidence["trivialCount"] = "0";
    return out;
  }
  const TrivialNewNonGaps t = trivial_new_nongaps(p, mu);
  for (std::int64_t v : t.values) {
    if (!h.contains(v)) {
      out.status = RuleStatus::Established;
      out.evidence["missing"] = i2s(v);
      return out;
    }
  }
  out.status = RuleStatus::Failed;
  out.evidence["trivialCount"] = i2s(static_cast<std::int64_t>(t.values.size()));
  return out;
}

CriterionOutcome check_cor7(const NumericalSemigroup& h,
                            const StandingHypotheses& hyp) {
  CriterionOutcome out{RuleId::COR_7, RuleStatus::NotApplicable, {}};
  if (!is_prime(hyp.a)) return out;
  out.status = RuleStatus::Established;
  if (hyp.b <= 3 * hyp.a) {
    out.status = RuleStatus::Failed;
    out.evidence["b"] = i2s(hyp.b) + " <= 3a";
  }
  // purity: no member outside <a;b> strictly below (n+1)a
  NumericalSemigroup base = NumericalSemigroup::from_generators({hyp.a, hyp.b});
  for (std::int64_t x = 1; x < (hyp.n + 1) * hyp.a; ++x) {
    if (h.contains(x) && !base.contains(x)) {
      out.status = RuleStatus::Failed;
      out.evidence["impure"] = i2s(x);
      break;
    }
  }
  const std::int64_t threshold = sharp_threshold(hyp);
  out.evidence["threshold"] = i2s(threshold);
  out.evidence["genus"] = i2s(h.genus());
  if (h.genus() <= threshold) out.status = RuleStatus::Failed;
  return out;
}

CriterionOutcome check_cor10(const StandingHypotheses& hyp, std::int64_t genus) {
  CriterionOutcome out{RuleId::COR_10, RuleStatus::NotApplicable, {}};
  if (!hyp.dim_condition_holds) return out;
  // b = a+1 is the smooth-plane-curve case: the pencil is never unique
  // there, so the size condition on b proves nothing.
  if (hyp.b == hyp.a + 1) return out;
  // b > (a/2)^2 exactly: 4b > a^2
  if (checked_mul(4, hyp.b) <= checked_mul(hyp.a, hyp.a)) return out;
  const std::int64_t threshold = sharp_threshold(hyp);
  out.evidence["threshold"] = i2s(threshold);
  out.evidence["genus"] = i2s(genus);
  out.evidence["bCondition"] = "4b=" + i2s(4 * hyp.b) + " > a^2=" + i2s(hyp.a * hyp.a);
  out.status = genus > threshold ? RuleStatus::Established : RuleStatus::Failed;
  return out;
}

CriterionOutcome check_known_multiple_full_genus(const TwoGenParams& p,
                                                 std::int64_t genus) {
  CriterionOutcome out{RuleId::KNOWN_MULTIPLE_FULL_GENUS, RuleStatus::NotApplicable, {}};
  if (genus != p.full_genus()) return out;
  if (p.b == p.a + 1) {
    out.status = RuleStatus::Established;
    out.evidence["reason"] = "b = a+1";
  } else if (p.r == p.a - 1) {
    out.status = RuleStatus::Established;
    out.evidence["reason"] = "r = a-1";
  } else {
    out.status = RuleStatus::Failed;
    out.evidence["b"] = i2s(p.b);
    out.evidence["r"] = i2s(p.r);
  }
  return out;
}

CriterionOutcome check_known_multiple_s(const NumericalSemigroup& h,
                                        const StandingHypotheses& hyp) {
  CriterionOutcome out{RuleId::KNOWN_MULTIPLE_S, RuleStatus::NotApplicable, {}};
  const TwoGenParams p = TwoGenParams::from(hyp.a, hyp.b);
  const std::int64_t sharp_genus = sharp_threshold(hyp);
  if (h.genus() != sharp_genus) return out;
  if (!hyp.dim_condition_holds) return out;
  const NumericalSemigroup s = sharp_semigroup_s(p);
  if (h != s) return out;
  out.evidence["sharpGenus"] = i2s(sharp_genus);
  // Capacity gate: the multiple-occurrence construction is only on record
  // when NO semigroup of this genus containing <a;b> can host a second
  // degree-a pencil. A divisor e is excluded when its ladder has more gap
  // values than the genus budget allows, or exactly as many but promoting
  // just those values is not additively closed.
  const NumericalSemigroup base = NumericalSemigroup::from_generators({p.a, p.b});
  const std::int64_t capacity = p.full_genus() - h.genus();
  bool all_excluded = true;
  for (std::int64_t e : proper_divisors(p.a)) {
    const std::int64_t l0 = (p.a / e - 1) * p.a;
    std::vector<std::int64_t> ladder_gaps;
    for (std::int64_t v = l0 + e; v < base.conductor(); v += e)
      if (!base.contains(v)) ladder_gaps.push_back(v);
    const std::int64_t count = static_cast<std::int64_t>(ladder_gaps.size());
    bool excluded = count > capacity;
    if (!excluded && count == capacity) {
      try {
        base.union_with(ladder_gaps);
      } catch (const DomainError&) {
        excluded = true;
      }
    }
    out.evidence["ladder_e" + i2s(e)] =
        i2s(count) + (excluded ? " excluded" : " live") + " (capacity " +
        i2s(capacity) + ")";
    if (!excluded) all_excluded = false;
  }
  out.status = all_excluded ? RuleStatus::Established : RuleStatus::Failed;
  return out;
}

namespace {

CriterionOutcome check_theorem_a(const TwoGenParams& p, const NumericalSemigroup& h) {
  CriterionOutcome out{RuleId::THEOREM_A, RuleStatus::NotApplicable, {}};
  if (p.b < p.a + 2 || p.r > p.a - 2) return out;
  if (h.genus() != p.full_genus()) return out;
  if (h != NumericalSemigroup::from_generators({p.a, p.b})) return out;
  out.status = RuleStatus::Established;
  out.evidence["genus"] = i2s(h.genus());
  out.evidence["r"] = i2s(p.r);
  return out;
}

VerdictKind compose_kind(const Verdict& v) {
  const bool km = v.established(RuleId::KNOWN_MULTIPLE_FULL_GENUS) ||
                  v.established(RuleId::KNOWN_MULTIPLE_S);
  const bool both_axes_shortcut = v.established(RuleId::COR_7) ||
                                  v.established(RuleId::COR_10) ||
                                  v.established(RuleId::THEOREM_A);
  const bool pencil = both_axes_shortcut || v.established(RuleId::LEMMA_X_PENCIL) ||
                      v.established(RuleId::PROP_1) ||
                      v.established(RuleId::PROP_2_BOUND);
  const bool same_pencil = both_axes_shortcut || v.established(RuleId::COR_2_GENUS) ||
                           v.established(RuleId::COR_Y_TRIVIAL);
  const bool amo = pencil && same_pencil;
  if (km && amo)
    throw std::logic_error("classification established both AtMostOnce and KnownMultiple");
  if (km) return VerdictKind::KnownMultiple;
  if (amo) return VerdictKind::AtMostOnce;
  return VerdictKind::Undetermined;
}

}  // namespace

Verdict classify(const NumericalSemigroup& h) {
  Verdict v;
  v.hypotheses = standing_hypotheses_check(h);  // throws NotCoprime
  const TwoGenParams p = TwoGenParams::from(v.hypotheses.a, v.hypotheses.b);
  for (RuleId id : kAllRules) {
    switch (id) {
      case RuleId::THEOREM_A:
        v.outcomes.push_back(check_theorem_a(p, h));
        break;
      case RuleId::LEMMA_X_PENCIL:
        v.outcomes.push_back(check_pencil_lemma_x(h, v.hypotheses));
        break;
      case RuleId::PROP_1:
        v.outcomes.push_back(check_prop1(p, h));
        break;
      case RuleId::PROP_2_BOUND:
        v.outcomes.push_back(check_prop2(p, h.genus()));
        break;
      case RuleId::COR_2_GENUS:
        v.outcomes.push_back(check_cor2(v.hypotheses, h.genus()));
        break;
      case RuleId::COR_Y_TRIVIAL:
        v.outcomes.push_back(check_cor_y(h, v.hypotheses));
        break;
      case RuleId::COR_7:
        v.outcomes.push_back(check_cor7(h, v.hypotheses));
        break;
      case RuleId::COR_10:
        v.outcomes.push_back(check_cor10(v.hypotheses, h.genus()));
        break;
      case RuleId::KNOWN_MULTIPLE_FULL_GENUS:
        v.outcomes.push_back(check_known_multiple_full_genus(p, h.genus()));
        break;
      case RuleId::KNOWN_MULTIPLE_S:
        v.outcomes.push_back(check_known_multiple_s(h, v.hypotheses));
        break;
    }
  }
  v.kind = compose_kind(v);
  return v;
}

Verdict classify_bounds(std::int64_t a, std::int64_t b, std::int64_t genus) {
  const TwoGenParams p = TwoGenParams::from(a, b);
  if (genus < 0 || genus > p.full_genus())
    throw DomainError(ErrorCode::GenusTooLarge,
                      "genus " + i2s(genus) + " outside [0, " + i2s(p.full_genus()) + "]");
  Verdict v;
  v.bounds_mode = true;
  v.hypotheses.a = p.a;
  v.hypotheses.b = p.b;
  v.hypotheses.n = p.n;
  v.hypotheses.r = p.r;
  v.hypotheses.dim_condition_holds = true;
  // for g below the full genus the window content is unknowable from (a,b,g)
  v.hypotheses.dim_condition_assumed = (genus != p.full_genus());

  CriterionOutcome prop1{RuleId::PROP_1, RuleStatus::NotApplicable, {}};
  if (p.b >= p.a + 2 && genus == p.full_genus()) {
    // H contains <a;b> and has its genus, so H is forced to equal it
    prop1.status = RuleStatus::Established;
    prop1.evidence["genus"] = i2s(genus);
    prop1.evidence["b"] = i2s(p.b);
  }
  v.outcomes.push_back(prop1);
  v.outcomes.push_back(check_prop2(p, genus));
  v.outcomes.push_back(check_cor2(v.hypotheses, genus));
  v.outcomes.push_back(check_cor10(v.hypotheses, genus));

  const bool both = v.established(RuleId::COR_10);
  const bool pencil =
      both || v.established(RuleId::PROP_1) || v.established(RuleId::PROP_2_BOUND);
  const bool same_pencil = both || v.established(RuleId::COR_2_GENUS);
  v.kind = (pencil && same_pencil) ? VerdictKind::AtMostOnce : VerdictKind::Undetermined;
  return v;
}

}  // namespace wsonce
