// Acceptance suite: every release criterion, run end to end, one PASS/FAIL
// line each. Exits non-zero if any criterion fails. argv[1] must be the path
// to the CLI binary (used by the determinism criterion).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "wsonce/census.hpp"
#include "wsonce/classify.hpp"
#include "wsonce/cusp.hpp"
#include "wsonce/pencil.hpp"
#include "wsonce/report.hpp"

using namespace wsonce;

namespace {

int g_failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool cond, const std::string& what) {
    if (!cond && ok_) {
      ok_ = false;
      detail_ = what;
    }
  }

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

  void finish(double time_limit_s = 0.0) {
    const double secs = seconds();
    if (time_limit_s > 0.0 && secs >= time_limit_s && ok_) {
      ok_ = false;
      detail_ = "time limit " + std::to_string(time_limit_s) + "s exceeded";
    }
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok_ ? "PASS" : "FAIL", number_,
                title_.c_str(), secs, ok_ ? "" : " -- ", ok_ ? "" : detail_.c_str());
    if (!ok_) ++g_failures;
  }

 private:
  int number_;
  std::string title_;
  bool ok_ = true;
  std::string detail_;
  std::chrono::steady_clock::time_point start_;
};

std::string run_capture(const std::string& cmd, int* exit_code) {
  const std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  *exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return out;
}

void criterion_1_lemma4() {
  Criterion c(1, "delta recursion = closed form = genus, coprime pairs up to 200");
  std::int64_t pairs = 0;
  for (std::int64_t nu = 2; nu <= 200 && pairs >= 0; ++nu) {
    for (std::int64_t mu = nu + 1; mu <= 200; ++mu) {
      if (std::gcd(nu, mu) != 1) continue;
      ++pairs;
      const auto seq = euclid_sequence(CuspType::of(nu, mu));
      const std::int64_t closed = delta_closed(CuspType::of(nu, mu));
      if (seq.delta != closed) {
        c.require(false, "recursion != closed form at (" + std::to_string(nu) + "," +
                             std::to_string(mu) + ")");
        break;
      }
      const std::int64_t genus = NumericalSemigroup::from_generators({nu, mu}).genus();
      if (closed != genus) {
        c.require(false, "closed form != genus at (" + std::to_string(nu) + "," +
                             std::to_string(mu) + ")");
        break;
      }
    }
  }
  c.require(pairs > 12000, "expected ~12k coprime pairs, saw " + std::to_string(pairs));
  c.finish(5.0);
}

void criterion_2_lemma3() {
  Criterion c(2, "trivial new non-gap count, disjointness, distinctness (a <= 60)");
  for (std::int64_t a = 2; a <= 60; ++a) {
    for (std::int64_t n = 1; n <= 5; ++n) {
      for (std::int64_t r = 1; r < a; ++r) {
        if (std::gcd(a, r) != 1) continue;
        const std::int64_t b = n * a + r;
        const auto p = TwoGenParams::from(a, b);
        const auto base = NumericalSemigroup::from_generators({a, b});
        for (std::int64_t mu = 1; mu < a; ++mu) {
          if (std::gcd(a, mu) != 1) continue;
          // trivial_new_nongaps itself asserts pairwise distinctness loudly
          const auto t = trivial_new_nongaps(p, mu);
          const std::int64_t want = (a - 1) * (mu - 1) / 2;
          c.require(static_cast<std::int64_t>(t.values.size()) == want,
                    "count mismatch at a=" + std::to_string(a) + " b=" +
                        std::to_string(b) + " mu=" + std::to_string(mu));
          for (std::int64_t v : t.values)
            if (base.contains(v)) {
              c.require(false, "value " + std::to_string(v) + " inside <" +
                                   std::to_string(a) + ";" + std::to_string(b) + ">");
              break;
            }
        }
      }
    }
  }
  c.finish(30.0);
}

void criterion_3_cor5() {
  Criterion c(3, "sharp semigroup S valid with genus (a-1)(b-a+r)/2 (a <= 30, b <= 6a)");
  for (std::int64_t a = 2; a <= 30; ++a) {
    for (std::int64_t b = a + 1; b <= 6 * a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto p = TwoGenParams::from(a, b);
      try {
        const auto s = sharp_semigroup_s(p);  // validates closure and genus
        c.require(s.genus() == (a - 1) * (b - a + p.r) / 2,
                  "genus mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      } catch (const std::exception& e) {
        c.require(false, "construction failed at (" + std::to_string(a) + "," +
                             std::to_string(b) + "): " + e.what());
      }
    }
  }
  c.finish(30.0);
}

void criterion_4_theorem3() {
  Criterion c(4, "window semigroup valid at full genus; equals <a;b> iff r = a-1");
  for (std::int64_t a = 2; a <= 20; ++a) {
    for (std::int64_t b = a + 1; b <= 5 * a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto p = TwoGenParams::from(a, b);
      try {
        const auto q = ws_of_q_full_genus(p);  // closure-validated internally
        c.require(q.genus() == p.full_genus(),
                  "genus mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        const bool eq = (q == NumericalSemigroup::from_generators({a, b}));
        c.require(eq == (p.r == a - 1),
                  "base equality iff r=a-1 fails at (" + std::to_string(a) + "," +
                      std::to_string(b) + ")");
      } catch (const std::exception& e) {
        c.require(false, "construction failed at (" + std::to_string(a) + "," +
                             std::to_string(b) + "): " + e.what());
      }
    }
  }
  const auto q37 = ws_of_q_full_genus(TwoGenParams::from(3, 7));
  c.require(q37.gaps() == std::vector<std::int64_t>{1, 2, 4, 5, 7, 10},
            "gap set of the (3,7) window semigroup");
  c.finish();
}

void criterion_5_theorem_a() {
  Criterion c(5, "THEOREM_A grid to 40: AtMostOnce, and KnownMultiple at the excluded edges");
  for (std::int64_t a = 3; a <= 39; ++a) {
    for (std::int64_t b = a + 1; b <= 40; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const std::int64_t r = b % a;
      const auto h = NumericalSemigroup::from_generators({a, b});
      const auto v = classify(h);
      if (b >= a + 2 && r <= a - 2) {
        c.require(v.kind == VerdictKind::AtMostOnce,
                  "expected AtMostOnce at (" + std::to_string(a) + "," + std::to_string(b) +
                      "), got " + to_string(v.kind));
      } else {
        // b = a+1 or r = a-1 at full genus
        c.require(v.kind == VerdictKind::KnownMultiple,
                  "expected KnownMultiple at (" + std::to_string(a) + "," +
                      std::to_string(b) + "), got " + to_string(v.kind));
      }
    }
  }
  c.finish(10.0);
}

void criterion_6_example_4_1() {
  Criterion c(6, "first family reproduction (a=4): verdicts and census sweep");
  for (std::int64_t n = 2; n <= 8; ++n) {
    for (std::int64_t m = 0; m <= 2 * n - 1; ++m) {
      const auto v = classify(family_4_1(n, m));
      c.require(v.kind == VerdictKind::AtMostOnce,
                "family row n=" + std::to_string(n) + " m=" + std::to_string(m) +
                    " got " + to_string(v.kind));
    }
    const auto p = TwoGenParams::from(4, 4 * n + 1);
    const auto sharp = sharp_semigroup_s(p);
    c.require(sharp.genus() == 6 * n - 3, "sharp genus at n=" + std::to_string(n));
    c.require(classify(sharp).kind == VerdictKind::KnownMultiple,
              "sharp S not KnownMultiple at n=" + std::to_string(n));
    for (std::int64_t g : {6 * n - 1, 6 * n}) {
      for (const auto& row : census_classify(p, g, true))
        c.require(row.verdict.kind == VerdictKind::AtMostOnce,
                  "census row at n=" + std::to_string(n) + " g=" + std::to_string(g));
    }
  }
  c.finish();
}

void criterion_7_example_4_3() {
  Criterion c(7, "third family reproduction (a=6): sharp identity and verdict split");
  for (std::int64_t n = 2; n <= 8; ++n) {
    const auto f = family_4_3(n);
    c.require(f == sharp_semigroup_s(TwoGenParams::from(6, 6 * n + 1)),
              "family != sharp S at n=" + std::to_string(n));
    const auto v = classify(f);
    if (n >= 4) {
      c.require(v.kind == VerdictKind::KnownMultiple,
                "expected KnownMultiple at n=" + std::to_string(n) + ", got " +
                    to_string(v.kind));
    } else {
      c.require(v.kind == VerdictKind::Undetermined,
                "expected Undetermined at n=" + std::to_string(n) + ", got " +
                    to_string(v.kind));
    }
  }
  c.finish();
}

void criterion_8_enumeration_oracle() {
  Criterion c(8, "pruned enumeration equals brute force (a <= 5, b <= 13, depth <= 6)");
  for (std::int64_t a = 2; a <= 5; ++a) {
    for (std::int64_t b = a + 1; b <= 13; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto p = TwoGenParams::from(a, b);
      const std::int64_t full = p.full_genus();
      for (std::int64_t g = std::max<std::int64_t>(0, full - 6); g <= full; ++g) {
        const auto fast = enumerate_containing(p, g, false);
        const auto slow = brute_force_enumerate(p, g);
        if (!(fast == slow)) {
          c.require(false, "mismatch at (" + std::to_string(a) + "," + std::to_string(b) +
                               ") g=" + std::to_string(g));
        }
      }
    }
  }
  c.finish(60.0);
}

void criterion_9_prop2() {
  Criterion c(9, "second-pencil genus bounds: exact rationals and the flip point");
  c.require(prop2_bound(TwoGenParams::from(5, 11), 1) == Rational::of(15), "(5,11,1)");
  c.require(prop2_bound(TwoGenParams::from(4, 9), 2) == Rational::of(21, 2), "(4,9,2)");
  c.require(prop2_bound(TwoGenParams::from(4, 9), 1) == Rational::of(9), "(4,9,1)");
  c.require(check_prop2(TwoGenParams::from(5, 11), 15).status == RuleStatus::Failed,
            "g=15 should fail");
  c.require(check_prop2(TwoGenParams::from(5, 11), 16).status == RuleStatus::Established,
            "g=16 should establish");
  c.require(check_prop2(TwoGenParams::from(4, 9), 10).status == RuleStatus::Failed,
            "g=10 should fail (bound 21/2)");
  c.require(check_prop2(TwoGenParams::from(4, 9), 11).status == RuleStatus::Established,
            "g=11 should establish");
  c.finish();
}

void criterion_10_cli_determinism(const std::string& cli) {
  Criterion c(10, "CLI result bodies byte-identical across runs and job counts");
  const std::vector<std::string> fixtures = {
      " analyze --a 4 --b 9 --genus 12 --format json",
      " analyze --a 4 --b 9 --gaps 1,2,3,5,6,7,10,11,15 --format json",
      " analyze --a 3 --b 7 --gaps 1,2,4,5,8,11 --format human",
      " delta --nu 4 --mu 9 --format json",
      " delta --nu 17 --mu 60 --format csv",
      " trivial-nongaps --a 6 --b 13 --format json",
      " trivial-nongaps --a 5 --b 11 --mu 3 --format csv",
      " ws-q --a 3 --b 7 --format json",
      " sharp-s --a 4 --b 9 --format csv",
      " sharp-s --a 6 --b 25 --format json",
      " census --a 4 --b 9 --genus 9 --format csv",
      " census --a 5 --b 11 --genus 15 --no-hypotheses --format json",
      " census --a 3 --b 7 --genus 6 --format json",
      " census --a 4 --b 9 --genus 7 --format csv",  // empty: header only
      " examples --which 4.1 --n 3 --m 2 --format json",
      " examples --which 4.2 --n 4 --m 8 --m-prime 8 --format human",
      " examples --which 4.3 --n 4 --format csv",
  };
  for (const std::string& fx : fixtures) {
    int rc1 = 0, rc2 = 0;
    const std::string out1 = run_capture(cli + fx, &rc1);
    const std::string out2 = run_capture(cli + fx, &rc2);
    c.require(rc1 == 0 && rc2 == 0, "non-zero exit for" + fx);
    c.require(out1 == out2, "two runs differ for" + fx);
    c.require(!out1.empty() && out1.back() == '\n', "missing trailing newline for" + fx);
  }
  // worker count must not touch a single byte
  for (const std::string& fmt : {std::string("json"), std::string("csv")}) {
    int rc1 = 0, rc8 = 0;
    const std::string j1 =
        run_capture(cli + " census --a 5 --b 11 --genus 14 --format " + fmt + " --jobs 1", &rc1);
    const std::string j8 =
        run_capture(cli + " census --a 5 --b 11 --genus 14 --format " + fmt + " --jobs 8", &rc8);
    c.require(rc1 == 0 && rc8 == 0, "census exit codes");
    c.require(j1 == j8, "--jobs 1 vs --jobs 8 differ (" + fmt + ")");
  }
  // exit-code contract
  int rc = 0;
  run_capture(cli + " analyze --a 4 --b 6 --genus 7", &rc);
  c.require(rc == 1, "domain error should exit 1, got " + std::to_string(rc));
  run_capture(cli + " analyze --a 4", &rc);
  c.require(rc == 2, "usage error should exit 2, got " + std::to_string(rc));
  run_capture(cli + " analyze --a 4 --b 9", &rc);
  c.require(rc == 2, "missing --gaps/--genus should exit 2, got " + std::to_string(rc));
  run_capture(cli + " delta --nu 4 --mu 9", &rc);
  c.require(rc == 0, "delta should exit 0, got " + std::to_string(rc));
  // the a=3 census report carries the residue note
  const std::string a3 = run_capture(cli + " census --a 3 --b 7 --genus 6 --format json", &rc);
  c.require(rc == 0 && a3.find("residue") != std::string::npos,
            "a=3 census should note the genus residue class");
  c.finish();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: " << argv[0] << " <path-to-cli>\n";
    return 2;
  }
  criterion_1_lemma4();
  criterion_2_lemma3();
  criterion_3_cor5();
  criterion_4_theorem3();
  criterion_5_theorem_a();
  criterion_6_example_4_1();
  criterion_7_example_4_3();
  criterion_8_enumeration_oracle();
  criterion_9_prop2();
  criterion_10_cli_determinism(argv[1]);
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
