#include "wsonce/semigroup.hpp"

#include <algorithm>
#include <set>

#include "wsonce/checked.hpp"

namespace wsonce {

namespace {

// First (s, t) with s <= t, both members, whose sum is a gap. The table is
// closed iff no such pair exists: sums landing at or beyond the table end are
// implicit members and need no check.
std::optional<std::pair<std::int64_t, std::int64_t>> closure_witness(
    const std::vector<unsigned char>& mem) {
  const std::int64_t size = static_cast<std::int64_t>(mem.size());
  std::vector<std::int64_t> members;
  for (std::int64_t x = 1; x < size; ++x)
    if (mem[x]) members.push_back(x);
  for (std::int64_t x = 2; x < size; ++x) {
    if (mem[x]) continue;
    for (std::int64_t s : members) {
      if (s > x / 2) break;
      if (mem[x - s]) return std::make_pair(s, x - s);
    }
  }
  return std::nullopt;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::normalize(std::vector<unsigned char> table) {
  if (table.empty() || !table[0])
    throw DomainError(ErrorCode::InvalidInput, "0 must be a member");
  std::int64_t last_gap = -1;
  for (std::int64_t x = static_cast<std::int64_t>(table.size()) - 1; x >= 1; --x) {
    if (!table[x]) {
      last_gap = x;
      break;
    }
  }
  NumericalSemigroup h;
  h.conductor_ = last_gap + 1;
  table.resize(static_cast<std::size_t>(h.conductor_) + 1, 1);
  table[static_cast<std::size_t>(h.conductor_)] = 1;
  h.member_ = std::move(table);
  for (std::int64_t x = 1; x < h.conductor_; ++x)
    if (!h.member_[static_cast<std::size_t>(x)]) h.gaps_.push_back(x);
  h.multiplicity_ = 1;
  if (!h.gaps_.empty()) {
    std::int64_t m = 1;
    while (!h.member_[static_cast<std::size_t>(m)]) ++m;
    h.multiplicity_ = m;
  }
  return h;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<std::int64_t> gens) {
  if (gens.empty())
    throw DomainError(ErrorCode::InvalidInput, "need at least one generator");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.front() <= 0)
    throw DomainError(ErrorCode::InvalidInput, "generators must be positive");
  std::int64_t g = 0;
  for (std::int64_t x : gens) g = gcd64(g, x);
  if (g != 1)
    throw DomainError(ErrorCode::NonCoprimeGenerators,
                      "gcd of generators is " + std::to_string(g));

  const std::int64_t lo = gens.front();
  const std::int64_t hi = gens.back();
  // (lo-1)(hi-1) bounds the Frobenius number; the tail check below makes the
  // bound self-verifying rather than relying on that.
  std::int64_t bound =
      checked_add(checked_mul(checked_sub(lo, 1), checked_sub(hi, 1)),
                  checked_add(hi, 2));
  for (;;) {
    std::vector<unsigned char> mem(static_cast<std::size_t>(bound) + 1, 0);
    mem[0] = 1;
    for (std::int64_t x = 1; x <= bound; ++x) {
      for (std::int64_t gen : gens) {
        if (gen > x) break;
        if (mem[static_cast<std::size_t>(x - gen)]) {
          mem[static_cast<std::size_t>(x)] = 1;
          break;
        }
      }
    }
    bool tail_full = true;
    for (std::int64_t x = bound - lo + 1; x <= bound; ++x)
      if (!mem[static_cast<std::size_t>(x)]) tail_full = false;
    if (tail_full) return normalize(std::move(mem));
    bound = checked_mul(bound, 2);
  }
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<std::int64_t> gapset) {
  std::sort(gapset.begin(), gapset.end());
  gapset.erase(std::unique(gapset.begin(), gapset.end()), gapset.end());
  if (!gapset.empty() && gapset.front() <= 0)
    throw DomainError(ErrorCode::InvalidInput, "gaps must be positive integers");
  const std::int64_t conductor = gapset.empty() ? 0 : gapset.back() + 1;
  std::vector<unsigned char> mem(static_cast<std::size_t>(conductor) + 1, 1);
  for (std::int64_t x : gapset) mem[static_cast<std::size_t>(x)] = 0;
  if (auto w = closure_witness(mem))
    throw DomainError(ErrorCode::NotClosed,
                      "complement of the gap set is not additively closed", *w);
  return normalize(std::move(mem));
}

NumericalSemigroup NumericalSemigroup::from_membership(std::vector<unsigned char> table) {
  if (auto w = closure_witness(table))
    throw DomainError(ErrorCode::NotClosed, "membership table is not additively closed",
                      *w);
  return normalize(std::move(table));
}

bool NumericalSemigroup::contains(std::int64_t x) const {
  if (x < 0) throw DomainError(ErrorCode::InvalidInput, "membership query of a negative integer");
  if (x >= conductor_) return true;
  return member_[static_cast<std::size_t>(x)] != 0;
}

std::int64_t NumericalSemigroup::frobenius() const {
  if (gaps_.empty())
    throw DomainError(ErrorCode::InvalidInput, "the full semigroup has no Frobenius number");
  return conductor_ - 1;
}

NumericalSemigroup NumericalSemigroup::union_with(
    const std::vector<std::int64_t>& extra) const {
  std::set<std::int64_t> promoted;
  for (std::int64_t x : extra) {
    if (x < 0)
      throw DomainError(ErrorCode::InvalidInput, "union with a negative integer");
    if (x < conductor_ && !member_[static_cast<std::size_t>(x)]) promoted.insert(x);
  }
  if (promoted.empty()) return *this;

  std::vector<unsigned char> mem = member_;
  for (std::int64_t x : promoted) mem[static_cast<std::size_t>(x)] = 1;
  const std::int64_t size = static_cast<std::int64_t>(mem.size());

  // The base is already closed, so a violation must involve a promoted value:
  // check u + m for every promoted u against every member m (promoted or not).
  for (std::int64_t u : promoted) {
    for (std::int64_t m = 1; u + m < size; ++m) {
      if (!mem[static_cast<std::size_t>(m)]) continue;
      if (!mem[static_cast<std::size_t>(u + m)])
        throw DomainError(ErrorCode::NotClosed, "union is not additively closed",
                          {u, m});
    }
  }
  return normalize(std::move(mem));
}

TwoGenParams TwoGenParams::from(std::int64_t a, std::int64_t b) {
  if (a < 2) throw DomainError(ErrorCode::InvalidInput, "a must be at least 2");
  if (b <= a)
    throw DomainError(ErrorCode::BNotLarger,
                      "b = " + std::to_string(b) + " must exceed a = " + std::to_string(a));
  if (gcd64(a, b) != 1)
    throw DomainError(ErrorCode::NotCoprime, "gcd(" + std::to_string(a) + ", " +
                                                 std::to_string(b) + ") = " +
                                                 std::to_string(gcd64(a, b)));
  TwoGenParams p;
  p.a = a;
  p.b = b;
  p.n = b / a;
  p.r = b % a;  // nonzero: gcd(a,b)=1 and a >= 2
  return p;
}

std::int64_t TwoGenParams::full_genus() const {
  return checked_mul(a - 1, b - 1) / 2;
}

std::int64_t second_generator(const NumericalSemigroup& h) {
  if (h.genus() == 0)
    throw DomainError(ErrorCode::InvalidInput,
                      "second generator requires positive genus");
  const std::int64_t a = h.multiplicity();
  for (std::int64_t x = a + 1; x <= h.conductor() + a; ++x)
    if (x % a != 0 && h.contains(x)) return x;
  throw DomainError(ErrorCode::InvalidInput, "unreachable: gaps are finite");
}

StandingHypotheses standing_hypotheses_check(const NumericalSemigroup& h) {
  if (h.genus() == 0)
    throw DomainError(ErrorCode::InvalidInput,
                      "standing hypotheses require positive genus");
  const std::int64_t a = h.multiplicity();
  const std::int64_t b = second_generator(h);
  if (gcd64(a, b) != 1)
    throw DomainError(ErrorCode::NotCoprime,
                      "gcd(multiplicity " + std::to_string(a) + ", second generator " +
                          std::to_string(b) + ") = " + std::to_string(gcd64(a, b)));
  StandingHypotheses s;
  s.a = a;
  s.b = b;
  s.n = b / a;
  s.r = b % a;
  std::int64_t count = 0;
  for (std::int64_t x = s.n * a + 1; x < (s.n + 1) * a; ++x)
    if (h.contains(x)) ++count;
  s.dim_condition_holds = (count == 1);
  return s;
}

}  // namespace wsonce
