#include "wsonce/pencil.hpp"

#include <set>
#include <stdexcept>

#include "wsonce/checked.hpp"
#include "wsonce/errors.hpp"

namespace wsonce {

std::int64_t n_of_m(std::int64_t m, std::int64_t a, std::int64_t mu) {
  if (mu < 2 || m < 1 || m > mu - 1)
    throw DomainError(ErrorCode::InvalidInput,
                      "n(m) needs 1 <= m <= mu-1, got m=" + std::to_string(m) +
                          " mu=" + std::to_string(mu));
  if (gcd64(a, mu) != 1)
    throw DomainError(ErrorCode::NotCoprimeMu,
                      "gcd(a, mu) = " + std::to_string(gcd64(a, mu)));
  const std::int64_t ma = checked_mul(m, a);
  const std::int64_t n = ma / mu + 1;
  // coprimality rules out equality on either side
  if (!((n - 1) * mu < ma && ma < n * mu) || n < 2 || n > a - 1)
    throw std::logic_error("n(m) bracket violated for m=" + std::to_string(m) +
                           " a=" + std::to_string(a) + " mu=" + std::to_string(mu));
  return n;
}

TrivialNewNonGaps trivial_new_nongaps(const TwoGenParams& p, std::int64_t mu) {
  if (mu < 1 || mu >= p.a)
    throw DomainError(ErrorCode::InvalidInput,
                      "mu must satisfy 1 <= mu < a, got " + std::to_string(mu));
  if (gcd64(p.a, mu) != 1)
    throw DomainError(ErrorCode::NotCoprimeMu,
                      "gcd(a, mu) = " + std::to_string(gcd64(p.a, mu)));
  TrivialNewNonGaps t;
  t.params = p;
  t.mu = mu;
  t.mu_is_default = (mu == p.a - p.r);
  std::set<std::int64_t> vals;
  std::int64_t listed = 0;
  for (std::int64_t m = 1; m <= mu - 1; ++m) {
    const std::int64_t n = n_of_m(m, p.a, mu);
    t.n_table[m] = n;
    for (std::int64_t i = n; i <= p.a - 1; ++i) {
      vals.insert(checked_sub(checked_mul(i, p.b), checked_mul(m, p.a)));
      ++listed;
    }
  }
  const std::int64_t expected = checked_mul(p.a - 1, mu - 1) / 2;
  // A collision would silently shrink the count; fail loudly instead of
  // guessing which count is meant.
  if (static_cast<std::int64_t>(vals.size()) != listed ||
      listed != expected)
    throw std::logic_error("trivial new non-gap count mismatch for a=" +
                           std::to_string(p.a) + " b=" + std::to_string(p.b) +
                           " mu=" + std::to_string(mu) + ": distinct=" +
                           std::to_string(vals.size()) + " listed=" +
                           std::to_string(listed) + " expected=" +
                           std::to_string(expected));
  t.values.assign(vals.begin(), vals.end());
  return t;
}

NumericalSemigroup sharp_semigroup_s(const TwoGenParams& p) {
  const std::int64_t mu = p.a - p.r;
  NumericalSemigroup base = NumericalSemigroup::from_generators({p.a, p.b});
  NumericalSemigroup s = base;
  if (mu >= 1) {
    const TrivialNewNonGaps t = trivial_new_nongaps(p, mu);
    s = base.union_with(t.values);  // NotClosed here would be a broken build
  }
  const std::int64_t want = checked_mul(p.a - 1, checked_sub(p.b, mu)) / 2;
  if (s.genus() != want)
    throw std::logic_error("sharp semigroup genus " + std::to_string(s.genus()) +
                           " != " + std::to_string(want) + " for a=" +
                           std::to_string(p.a) + " b=" + std::to_string(p.b));
  return s;
}

std::vector<WindowProfile> window_profiles(const TwoGenParams& p) {
  NumericalSemigroup base = NumericalSemigroup::from_generators({p.a, p.b});
  std::vector<WindowProfile> out;
  // runs one window past the interesting range, to where s saturates at a-1
  for (std::int64_t t = 1; t * p.a <= base.conductor(); ++t) {
    WindowProfile w;
    w.t = t;
    for (std::int64_t e = t * p.a + 1; e < (t + 1) * p.a; ++e)
      if (base.contains(e)) ++w.s;
    for (std::int64_t i = w.s; i >= 1; --i)
      w.q_non_gaps.push_back((t + 1) * p.a - i);
    out.push_back(std::move(w));
  }
  return out;
}

NumericalSemigroup ws_of_q_full_genus(const TwoGenParams& p) {
  NumericalSemigroup base = NumericalSemigroup::from_generators({p.a, p.b});
  const std::int64_t cond = base.conductor();
  std::vector<unsigned char> mem(static_cast<std::size_t>(cond) + 1, 0);
  for (std::int64_t x = 0; x <= cond; x += p.a) mem[static_cast<std::size_t>(x)] = 1;
  mem[static_cast<std::size_t>(cond)] = 1;
  for (const WindowProfile& w : window_profiles(p))
    for (std::int64_t v : w.q_non_gaps)
      if (v <= cond) mem[static_cast<std::size_t>(v)] = 1;
  NumericalSemigroup q = NumericalSemigroup::from_membership(std::move(mem));
  if (q.genus() != p.full_genus())
    throw std::logic_error("window semigroup genus " + std::to_string(q.genus()) +
                           " != " + std::to_string(p.full_genus()));
  return q;
}

}  // namespace wsonce
