#include "wsonce/census.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "wsonce/checked.hpp"
#include "wsonce/errors.hpp"
#include "wsonce/pencil.hpp"

namespace wsonce {

namespace {

struct DfsState {
  const std::vector<std::int64_t>* gaps_desc;  // gaps of <a;b>, decreasing
  std::vector<unsigned char> mem;              // current membership, [0, cond]
  std::int64_t cond;
  std::vector<std::int64_t> promoted;
  std::vector<std::vector<std::int64_t>> results;  // promoted sets
};

// Promoting x is legal only if x + m is a member for every member m of the
// would-be set (including m = x). Gaps are visited in decreasing order, so
// everything above x is final and sums involving x are decided here once
// and for all.
bool promotable(DfsState& st, std::int64_t x) {
  st.mem[static_cast<std::size_t>(x)] = 1;
  bool ok = true;
  for (std::int64_t m = 1; x + m < st.cond; ++m) {
    if (!st.mem[static_cast<std::size_t>(m)]) continue;
    if (!st.mem[static_cast<std::size_t>(x + m)]) {
      ok = false;
      break;
    }
  }
  st.mem[static_cast<std::size_t>(x)] = 0;
  return ok;
}

void dfs(DfsState& st, std::size_t idx, std::int64_t needed) {
  const auto& gaps = *st.gaps_desc;
  if (needed == 0) {
    st.results.push_back(st.promoted);
    return;
  }
  if (gaps.size() - idx < static_cast<std::size_t>(needed)) return;
  const std::int64_t x = gaps[idx];
  // branch 1: promote x
  if (promotable(st, x)) {
    st.mem[static_cast<std::size_t>(x)] = 1;
    st.promoted.push_back(x);
    dfs(st, idx + 1, needed - 1);
    st.promoted.pop_back();
    st.mem[static_cast<std::size_t>(x)] = 0;
  }
  // branch 2: keep x a gap
  dfs(st, idx + 1, needed);
}

std::vector<NumericalSemigroup> sorted_unique(std::vector<NumericalSemigroup> v) {
  std::sort(v.begin(), v.end(), [](const NumericalSemigroup& x, const NumericalSemigroup& y) {
    return x.gaps() < y.gaps();
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<NumericalSemigroup> enumerate_containing(const TwoGenParams& p,
                                                     std::int64_t genus,
                                                     bool require_standing) {
  const std::int64_t full = p.full_genus();
  if (genus > full)
    throw DomainError(ErrorCode::GenusTooLarge,
                      "genus " + std::to_string(genus) + " exceeds full genus " +
                          std::to_string(full));
  if (genus < 0)
    throw DomainError(ErrorCode::InvalidInput, "genus must be non-negative");

  NumericalSemigroup base = NumericalSemigroup::from_generators({p.a, p.b});
  std::vector<std::int64_t> gaps_desc(base.gaps().rbegin(), base.gaps().rend());
  if (require_standing) {
    // any promotion below (n+1)a changes the multiplicity, the second
    // generator, or the window content; drop those candidates up front
    std::erase_if(gaps_desc, [&](std::int64_t x) { return x < (p.n + 1) * p.a; });
  }

  DfsState st;
  st.gaps_desc = &gaps_desc;
  st.cond = base.conductor();
  st.mem.assign(static_cast<std::size_t>(st.cond) + 1, 0);
  for (std::int64_t x = 0; x <= st.cond; ++x)
    st.mem[static_cast<std::size_t>(x)] = base.contains(x) ? 1 : 0;
  dfs(st, 0, full - genus);

  std::vector<NumericalSemigroup> out;
  out.reserve(st.results.size());
  for (const auto& promoted : st.results)
    out.push_back(base.union_with(promoted));
  return sorted_unique(std::move(out));
}

std::vector<NumericalSemigroup> brute_force_enumerate(const TwoGenParams& p,
                                                      std::int64_t genus) {
  const std::int64_t full = p.full_genus();
  if (genus > full)
    throw DomainError(ErrorCode::GenusTooLarge,
                      "genus " + std::to_string(genus) + " exceeds full genus " +
                          std::to_string(full));
  const std::int64_t k = full - genus;
  if (k > 12)
    throw DomainError(ErrorCode::TooLarge,
                      "brute force limited to 12 promotions, asked for " +
                          std::to_string(k));
  NumericalSemigroup base = NumericalSemigroup::from_generators({p.a, p.b});
  const std::vector<std::int64_t>& gaps = base.gaps();
  const std::size_t n = gaps.size();
  std::vector<NumericalSemigroup> out;
  if (static_cast<std::size_t>(k) > n) return out;

  std::vector<std::size_t> idx(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (;;) {
    std::vector<std::int64_t> subset;
    subset.reserve(idx.size());
    for (std::size_t i : idx) subset.push_back(gaps[i]);
    try {
      out.push_back(base.union_with(subset));
    } catch (const DomainError& e) {
      if (e.code() != ErrorCode::NotClosed) throw;
    }
    // next combination
    std::size_t i = idx.size();
    while (i > 0) {
      --i;
      if (idx[i] != i + n - idx.size()) break;
      if (i == 0) return sorted_unique(std::move(out));
    }
    if (idx.empty()) return sorted_unique(std::move(out));
    ++idx[i];
    for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
  }
}

NumericalSemigroup family_4_1(std::int64_t n, std::int64_t m) {
  if (n < 2)
    throw DomainError(ErrorCode::ConstraintViolated, "family 4.1 needs n >= 2");
  if (m < 0 || m > 2 * n - 1)
    throw DomainError(ErrorCode::ConstraintViolated,
                      "family 4.1 needs 0 <= m <= 2n-1, got m=" + std::to_string(m));
  NumericalSemigroup base = NumericalSemigroup::from_generators({4, 4 * n + 1});
  std::vector<std::int64_t> extra;
  for (std::int64_t i = 3 * n - m; i <= 3 * n - 1; ++i) extra.push_back(4 * i + 3);
  NumericalSemigroup h = base.union_with(extra);
  if (h.genus() != 6 * n - m)
    throw std::logic_error("family 4.1 genus mismatch at n=" + std::to_string(n) +
                           " m=" + std::to_string(m));
  return h;
}

NumericalSemigroup family_4_2(std::int64_t n, std::int64_t m, std::int64_t m_prime) {
  if (n < 4)
    throw DomainError(ErrorCode::ConstraintViolated, "family 4.2 needs n >= 4");
  if (m < 0 || m_prime < 0)
    throw DomainError(ErrorCode::ConstraintViolated, "family 4.2 needs m, m' >= 0");
  if (!(m <= n + m_prime))
    throw DomainError(ErrorCode::ConstraintViolated,
                      "m <= n + m' fails: " + std::to_string(m) + " > " +
                          std::to_string(n + m_prime));
  if (!(2 * m >= m_prime))
    throw DomainError(ErrorCode::ConstraintViolated,
                      "2m >= m' fails: " + std::to_string(2 * m) + " < " +
                          std::to_string(m_prime));
  if (!(m + m_prime > 3 * n + 3))
    throw DomainError(ErrorCode::ConstraintViolated,
                      "m + m' > 3n+3 fails: " + std::to_string(m + m_prime) +
                          " <= " + std::to_string(3 * n + 3));
  NumericalSemigroup base = NumericalSemigroup::from_generators({5, 5 * n + 1});
  std::vector<std::int64_t> extra;
  for (std::int64_t i = m_prime; i <= 3 * n; ++i) extra.push_back(5 * i + 3);
  for (std::int64_t i = m; i <= 4 * n; ++i) extra.push_back(5 * i + 4);
  return base.union_with(extra);
}

NumericalSemigroup family_4_3(std::int64_t n) {
  if (n < 2)
    throw DomainError(ErrorCode::ConstraintViolated, "family 4.3 needs n >= 2");
  NumericalSemigroup base = NumericalSemigroup::from_generators({6, 6 * n + 1});
  const std::vector<std::int64_t> extra = {
      12 * n - 4,  18 * n - 9,  18 * n - 3,  24 * n - 14, 24 * n - 8,
      24 * n - 2,  30 * n - 19, 30 * n - 13, 30 * n - 7,  30 * n - 1};
  NumericalSemigroup h = base.union_with(extra);
  if (h.genus() != 15 * n - 10)
    throw std::logic_error("family 4.3 genus mismatch at n=" + std::to_string(n));
  return h;
}

namespace {

std::optional<std::string> derive_family_tag(const NumericalSemigroup& h,
                                             const TwoGenParams& p) {
  NumericalSemigroup base = NumericalSemigroup::from_generators({p.a, p.b});
  if (h == base) return "BASE";
  if (p.a == 4 && p.b % 4 == 1 && p.b >= 9) {
    const std::int64_t n = (p.b - 1) / 4;
    const std::int64_t m = 6 * n - h.genus();
    if (m >= 0 && m <= 2 * n - 1 && h == family_4_1(n, m)) return "EX_4_1";
  }
  if (p.a == 5 && p.b % 5 == 1 && p.b >= 21) {
    const std::int64_t n = (p.b - 1) / 5;
    std::int64_t m_prime = 3 * n;
    for (std::int64_t i = 0; i < 3 * n; ++i)
      if (h.contains(5 * i + 3)) {
        m_prime = i;
        break;
      }
    std::int64_t m = 4 * n;
    for (std::int64_t i = 0; i < 4 * n; ++i)
      if (h.contains(5 * i + 4)) {
        m = i;
        break;
      }
    if (m <= n + m_prime && 2 * m >= m_prime && m + m_prime > 3 * n + 3) {
      try {
        if (h == family_4_2(n, m, m_prime)) return "EX_4_2";
      } catch (const DomainError&) {
      }
    }
  }
  if (p.a == 6 && p.b % 6 == 1 && p.b >= 13) {
    const std::int64_t n = (p.b - 1) / 6;
    if (h == family_4_3(n)) return "EX_4_3";
  }
  if (h == sharp_semigroup_s(p)) return "SHARP_S";
  return std::nullopt;
}

// A row whose own multiplicity and second generator are not coprime (or the
// degenerate genus-0 row) cannot be classified under the standing
// assumptions; report it honestly instead of aborting the census.
Verdict undetermined_unclassifiable(const NumericalSemigroup& h) {
  Verdict v;
  v.kind = VerdictKind::Undetermined;
  if (h.genus() > 0) {
    v.hypotheses.a = h.multiplicity();
    v.hypotheses.b = second_generator(h);
    v.hypotheses.n = v.hypotheses.b / v.hypotheses.a;
    v.hypotheses.r = v.hypotheses.b % v.hypotheses.a;
  }
  v.hypotheses.dim_condition_holds = false;
  for (RuleId id :
       {RuleId::THEOREM_A, RuleId::LEMMA_X_PENCIL, RuleId::PROP_1,
        RuleId::PROP_2_BOUND, RuleId::COR_2_GENUS, RuleId::COR_Y_TRIVIAL,
        RuleId::COR_7, RuleId::COR_10, RuleId::KNOWN_MULTIPLE_FULL_GENUS,
        RuleId::KNOWN_MULTIPLE_S})
    v.outcomes.push_back({id, RuleStatus::NotApplicable, {}});
  return v;
}

}  // namespace

std::vector<CensusRow> census_classify(const TwoGenParams& p, std::int64_t genus,
                                       bool require_standing, int jobs) {
  std::vector<NumericalSemigroup> rows = enumerate_containing(p, genus, require_standing);
  std::vector<CensusRow> out(rows.size());
  const int workers = std::max(1, jobs);

  auto work = [&](std::size_t start) {
    for (std::size_t i = start; i < rows.size(); i += static_cast<std::size_t>(workers)) {
      CensusRow row;
      row.semigroup = rows[i];
      try {
        row.verdict = classify(rows[i]);
      } catch (const DomainError& e) {
        if (e.code() != ErrorCode::NotCoprime && e.code() != ErrorCode::InvalidInput)
          throw;
        row.verdict = undetermined_unclassifiable(rows[i]);
      }
      row.family_tag = derive_family_tag(rows[i], p);
      out[i] = std::move(row);
    }
  };

  if (workers == 1 || rows.size() <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          work(static_cast<std::size_t>(w));
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace wsonce
