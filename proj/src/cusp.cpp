#include "wsonce/cusp.hpp"

#include "wsonce/checked.hpp"
#include "wsonce/errors.hpp"

namespace wsonce {

CuspType CuspType::of(std::int64_t nu, std::int64_t mu) {
  if (nu < 2 || mu <= nu)
    throw DomainError(ErrorCode::InvalidInput,
                      "cusp type needs 2 <= nu < mu, got (" + std::to_string(nu) +
                          ", " + std::to_string(mu) + ")");
  if (gcd64(nu, mu) != 1)
    throw DomainError(ErrorCode::NotCoprime,
                      "cusp type (" + std::to_string(nu) + ", " + std::to_string(mu) +
                          ") is not coprime");
  return CuspType{nu, mu};
}

MultiplicitySequence euclid_sequence(CuspType c) {
  CuspType::of(c.nu, c.mu);  // revalidate invariants
  MultiplicitySequence seq;
  seq.cs.push_back(c.mu);
  seq.cs.push_back(c.nu);
  // c_{i-1} = n_i c_i + c_{i+1}; remainders stay coprime and reach 1.
  while (seq.cs.back() != 1) {
    const std::int64_t prev = seq.cs[seq.cs.size() - 2];
    const std::int64_t cur = seq.cs.back();
    seq.ns.push_back(prev / cur);
    seq.cs.push_back(prev % cur);
  }
  seq.delta = 0;
  for (std::size_t i = 0; i < seq.ns.size(); ++i) {
    const std::int64_t ci = seq.cs[i + 1];
    seq.delta = checked_add(
        seq.delta, checked_mul(seq.ns[i], checked_mul(ci, ci - 1) / 2));
  }
  return seq;
}

std::int64_t delta_closed(CuspType c) {
  CuspType::of(c.nu, c.mu);
  return checked_mul(c.nu - 1, c.mu - 1) / 2;
}

std::int64_t max_genus_with_cusp(const TwoGenParams& p, std::int64_t mu) {
  if (mu < 1 || mu >= p.a)
    throw DomainError(ErrorCode::InvalidInput,
                      "mu must satisfy 1 <= mu < a, got " + std::to_string(mu));
  if (gcd64(p.a, mu) != 1)
    throw DomainError(ErrorCode::NotCoprimeMu,
                      "gcd(a, mu) = " + std::to_string(gcd64(p.a, mu)));
  const std::int64_t prod = checked_mul(p.a - 1, checked_sub(p.b, mu));
  if (prod % 2 != 0)
    throw DomainError(ErrorCode::NonIntegral,
                      "(a-1)(b-mu) = " + std::to_string(prod) + " is odd");
  return prod / 2;
}

}  // namespace wsonce
