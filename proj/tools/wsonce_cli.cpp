// wsonce: exact combinatorics of numerical semigroups dominated by two
// coprime generators a and b, and the classification of such semigroups as
// occurring at most once / known to occur multiple times / undetermined.
//
// Result bodies are byte-deterministic for fixed inputs: identical
// invocations (including --jobs variations) print identical bytes on stdout.
// Timing goes to stderr only.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wsonce/census.hpp"
#include "wsonce/classify.hpp"
#include "wsonce/cusp.hpp"
#include "wsonce/errors.hpp"
#include "wsonce/pencil.hpp"
#include "wsonce/report.hpp"

namespace {

using nlohmann::json;
using namespace wsonce;

struct CommonOpts {
  std::string format = "human";
  std::string out;
};

// Command-line shape problems discovered after CLI11 parsing (mode-dependent
// required flags); mapped to exit code 2 like any other usage error.
struct UsageError {
  std::string message;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format: human|json|csv")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out, "Write the result body to a file instead of stdout");
}

std::vector<std::int64_t> parse_csv_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t pos = 0;
      const std::int64_t v = std::stoll(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw DomainError(ErrorCode::InvalidInput, "bad integer '" + item + "' in list");
    }
  }
  return out;
}

// --jobs is a pure performance knob and contractually never changes the
// result body, so it is dropped from the echoed command line.
std::string echo_command(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg == "--jobs") {
      ++i;  // swallow the value too
      continue;
    }
    if (arg.rfind("--jobs=", 0) == 0) continue;
    if (!s.empty()) s += ' ';
    s += argv[i];
  }
  return s;
}

void finish(const json& body, const CommonOpts& opts, const std::string& csv_text,
            const std::string& human_override = "") {
  const Format fmt = parse_format(opts.format);
  if (fmt == Format::Human && !human_override.empty()) {
    emit(human_override, opts.out);
    return;
  }
  emit(serialize(body, fmt, csv_text), opts.out);
}

std::string aligned_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.resize(i + 1, 0);
      width[i] = std::max(width[i], row[i].size());
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += row[i];
      if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
    }
    out += line + "\n";
  }
  return out;
}

// analyze: classify a concrete gap-defined semigroup, or (a, b, genus) bounds.
int run_analyze(const std::string& cmdline, std::int64_t a, std::int64_t b,
                const std::string& gaps_csv, bool have_gaps, std::int64_t genus,
                bool have_genus, const CommonOpts& opts) {
  json inputs;
  inputs["a"] = a;
  inputs["b"] = b;
  json results;
  std::string csv = csv_header();
  if (have_gaps) {
    inputs["gaps"] = gaps_csv;
    NumericalSemigroup h = NumericalSemigroup::from_gaps(parse_csv_ints(gaps_csv));
    if (h.genus() == 0 || h.multiplicity() != a || second_generator(h) != b)
      throw DomainError(ErrorCode::InvalidInput,
                        "gap list has multiplicity/second generator different from --a/--b");
    Verdict v = classify(h);
    results["semigroup"] = to_json(h);
    results["verdict"] = to_json(v);
    csv += "\n" + csv_row(h, &v);
  } else {
    if (!have_genus) throw UsageError{"analyze needs --gaps or --genus"};
    inputs["genus"] = genus;
    Verdict v = classify_bounds(a, b, genus);
    results["genus"] = genus;
    results["verdict"] = to_json(v);
    // bounds mode has no gap list; CSV shows the parameters and the verdict
    std::string row = std::to_string(a) + ',' + std::to_string(b) + ',' +
                      std::to_string(v.hypotheses.n) + ',' + std::to_string(v.hypotheses.r) +
                      ',' + std::to_string(genus) + ",\"\"," + to_string(v.kind) + ",\"";
    bool first = true;
    for (RuleId id : v.established_rules()) {
      if (!first) row += ',';
      row += to_string(id);
      first = false;
    }
    row += '"';
    csv += "\n" + row;
  }
  finish(make_report(cmdline, inputs, results), opts, csv);
  return 0;
}

int run_delta(const std::string& cmdline, std::int64_t nu, std::int64_t mu,
              const CommonOpts& opts) {
  json inputs;
  inputs["nu"] = nu;
  inputs["mu"] = mu;
  const CuspType c = CuspType::of(nu, mu);
  const MultiplicitySequence seq = euclid_sequence(c);
  const std::int64_t closed = delta_closed(c);
  json results;
  results["sequence"] = to_json(seq);
  results["deltaRecursive"] = seq.delta;
  results["deltaClosed"] = closed;
  results["agree"] = (seq.delta == closed);
  std::string csv = "nu,mu,cs,ns,delta_recursive,delta_closed";
  std::string cs_str, ns_str;
  for (std::size_t i = 0; i < seq.cs.size(); ++i)
    cs_str += (i ? " " : "") + std::to_string(seq.cs[i]);
  for (std::size_t i = 0; i < seq.ns.size(); ++i)
    ns_str += (i ? " " : "") + std::to_string(seq.ns[i]);
  csv += "\n" + std::to_string(nu) + ',' + std::to_string(mu) + ",\"" + cs_str +
         "\",\"" + ns_str + "\"," + std::to_string(seq.delta) + ',' +
         std::to_string(closed);
  finish(make_report(cmdline, inputs, results), opts, csv);
  return 0;
}

int run_trivial(const std::string& cmdline, std::int64_t a, std::int64_t b,
                std::int64_t mu, bool have_mu, const CommonOpts& opts) {
  const TwoGenParams p = TwoGenParams::from(a, b);
  const std::int64_t mu_used = have_mu ? mu : p.a - p.r;
  json inputs;
  inputs["a"] = a;
  inputs["b"] = b;
  inputs["mu"] = mu_used;
  const TrivialNewNonGaps t = trivial_new_nongaps(p, mu_used);
  json results;
  results["trivialNewNonGaps"] = to_json(t);
  results["expectedCount"] = (p.a - 1) * (mu_used - 1) / 2;
  std::string csv = "a,b,mu,m,n_of_m,values";
  for (const auto& [m, n] : t.n_table) {
    std::string vals;
    for (std::int64_t i = n; i <= a - 1; ++i)
      vals += (vals.empty() ? "" : ",") + std::to_string(i * b - m * a);
    csv += "\n" + std::to_string(a) + ',' + std::to_string(b) + ',' +
           std::to_string(mu_used) + ',' + std::to_string(m) + ',' +
           std::to_string(n) + ",\"" + vals + "\"";
  }
  finish(make_report(cmdline, inputs, results), opts, csv);
  return 0;
}

int run_ws_q(const std::string& cmdline, std::int64_t a, std::int64_t b,
             const CommonOpts& opts) {
  const TwoGenParams p = TwoGenParams::from(a, b);
  const NumericalSemigroup q = ws_of_q_full_genus(p);
  json inputs;
  inputs["a"] = a;
  inputs["b"] = b;
  json results;
  results["semigroup"] = to_json(q);
  json windows = json::array();
  for (const WindowProfile& w : window_profiles(p)) windows.push_back(to_json(w));
  results["windows"] = windows;
  std::string csv = csv_header();
  csv += "\n" + csv_row(q, nullptr);
  finish(make_report(cmdline, inputs, results), opts, csv);
  return 0;
}

int run_sharp_s(const std::string& cmdline, std::int64_t a, std::int64_t b,
                const CommonOpts& opts) {
  const TwoGenParams p = TwoGenParams::from(a, b);
  const NumericalSemigroup s = sharp_semigroup_s(p);
  const Verdict v = classify(s);
  json inputs;
  inputs["a"] = a;
  inputs["b"] = b;
  json results;
  results["mu"] = p.a - p.r;
  results["semigroup"] = to_json(s);
  results["verdict"] = to_json(v);
  std::string csv = csv_header();
  csv += "\n" + csv_row(s, &v);
  finish(make_report(cmdline, inputs, results), opts, csv);
  return 0;
}

int run_census(const std::string& cmdline, std::int64_t a, std::int64_t b,
               std::int64_t genus, bool no_hypotheses, int jobs, const CommonOpts& opts) {
  const TwoGenParams p = TwoGenParams::from(a, b);
  const std::vector<CensusRow> rows = census_classify(p, genus, !no_hypotheses, jobs);
  json inputs;
  inputs["a"] = a;
  inputs["b"] = b;
  inputs["genus"] = genus;
  inputs["requireStandingHypotheses"] = !no_hypotheses;
  json results;
  json jrows = json::array();
  for (const CensusRow& row : rows) jrows.push_back(to_json(row));
  results["rows"] = jrows;
  results["rowCount"] = static_cast<std::int64_t>(rows.size());
  json notes = json::array();
  if (a == 3)
    notes.push_back("first-non-gap-3 census: genus " + std::to_string(genus) +
                    " has residue " + std::to_string(((genus % 3) + 3) % 3) +
                    " mod 3; the <3;3n+1> family has genus 3n (residue 0)");
  results["notes"] = notes;
  std::string csv = csv_header();
  for (const CensusRow& row : rows) csv += "\n" + csv_row(row.semigroup, &row.verdict);

  std::string human = "census of genus-" + std::to_string(genus) + " semigroups containing <" +
                      std::to_string(a) + ";" + std::to_string(b) + ">\n";
  std::vector<std::vector<std::string>> table = {
      {"a", "b", "n", "r", "genus", "verdict", "tag", "gaps"}};
  for (const CensusRow& row : rows) {
    std::string gap_list;
    for (std::size_t i = 0; i < row.semigroup.gaps().size(); ++i)
      gap_list += (i ? "," : "") + std::to_string(row.semigroup.gaps()[i]);
    table.push_back({std::to_string(row.verdict.hypotheses.a),
                     std::to_string(row.verdict.hypotheses.b),
                     std::to_string(row.verdict.hypotheses.n),
                     std::to_string(row.verdict.hypotheses.r),
                     std::to_string(row.semigroup.genus()),
                     to_string(row.verdict.kind),
                     row.family_tag.value_or("-"), gap_list});
  }
  human += aligned_table(table);
  human += "rows: " + std::to_string(rows.size()) + "\n";
  for (const auto& note : notes) human += "note: " + note.get<std::string>() + "\n";
  finish(make_report(cmdline, inputs, results), opts, csv, human);
  return 0;
}

int run_examples(const std::string& cmdline, const std::string& which, std::int64_t n,
                 std::int64_t m, bool have_m, std::int64_t m_prime, bool have_mp,
                 const CommonOpts& opts) {
  json inputs;
  inputs["which"] = which;
  inputs["n"] = n;
  NumericalSemigroup h;
  std::string tag;
  if (which == "4.1") {
    if (!have_m) throw UsageError{"example 4.1 needs --m"};
    inputs["m"] = m;
    h = family_4_1(n, m);
    tag = "EX_4_1";
  } else if (which == "4.2") {
    if (!have_m || !have_mp) throw UsageError{"example 4.2 needs --m and --m-prime"};
    inputs["m"] = m;
    inputs["mPrime"] = m_prime;
    h = family_4_2(n, m, m_prime);
    tag = "EX_4_2";
  } else if (which == "4.3") {
    h = family_4_3(n);
    tag = "EX_4_3";
  } else {
    throw DomainError(ErrorCode::InvalidInput, "unknown example '" + which + "'");
  }
  const Verdict v = classify(h);
  json results;
  results["familyTag"] = tag;
  results["semigroup"] = to_json(h);
  results["verdict"] = to_json(v);
  std::string csv = csv_header();
  csv += "\n" + csv_row(h, &v);
  finish(make_report(cmdline, inputs, results), opts, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical-semigroup uniqueness toolkit"};
  app.require_subcommand(1);
  const std::string cmdline = echo_command(argc, argv);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Classify a semigroup or (a,b,genus) bounds");
  std::int64_t an_a = 0, an_b = 0, an_genus = 0;
  std::string an_gaps;
  CommonOpts an_opts;
  analyze->add_option("--a", an_a, "Multiplicity a")->required();
  analyze->add_option("--b", an_b, "Second generator b")->required();
  auto* an_grp = analyze->add_option_group("input", "exactly one of --gaps / --genus");
  auto* gaps_opt = an_grp->add_option("--gaps", an_gaps, "Comma-separated gap list of H");
  auto* genus_opt = an_grp->add_option("--genus", an_genus, "Genus (bound mode)");
  an_grp->require_option(1);
  add_common(analyze, an_opts);

  // delta
  auto* delta = app.add_subcommand("delta", "Delta invariant of a coprime (nu,mu) cusp");
  std::int64_t d_nu = 0, d_mu = 0;
  CommonOpts d_opts;
  delta->add_option("--nu", d_nu, "Cusp multiplicity nu")->required();
  delta->add_option("--mu", d_mu, "Tangent contact mu")->required();
  add_common(delta, d_opts);

  // trivial-nongaps
  auto* trivial = app.add_subcommand("trivial-nongaps", "Forced second-point non-gaps");
  std::int64_t t_a = 0, t_b = 0, t_mu = 0;
  CommonOpts t_opts;
  trivial->add_option("--a", t_a)->required();
  trivial->add_option("--b", t_b)->required();
  auto* mu_opt = trivial->add_option("--mu", t_mu, "Cusp multiplicity (default a-r)");
  add_common(trivial, t_opts);

  // ws-q
  auto* wsq = app.add_subcommand("ws-q", "Second-point semigroup at full genus");
  std::int64_t w_a = 0, w_b = 0;
  CommonOpts w_opts;
  wsq->add_option("--a", w_a)->required();
  wsq->add_option("--b", w_b)->required();
  add_common(wsq, w_opts);

  // sharp-s
  auto* sharp = app.add_subcommand("sharp-s", "Sharp semigroup S and its verdict");
  std::int64_t s_a = 0, s_b = 0;
  CommonOpts s_opts;
  sharp->add_option("--a", s_a)->required();
  sharp->add_option("--b", s_b)->required();
  add_common(sharp, s_opts);

  // census
  auto* census = app.add_subcommand("census", "Enumerate and classify genus-g semigroups containing <a;b>");
  std::int64_t c_a = 0, c_b = 0, c_genus = 0;
  bool c_nohyp = false;
  int c_jobs = 1;
  CommonOpts c_opts;
  census->add_option("--a", c_a)->required();
  census->add_option("--b", c_b)->required();
  census->add_option("--genus", c_genus)->required();
  census->add_flag("--no-hypotheses", c_nohyp, "Keep rows violating the standing hypotheses");
  census->add_option("--jobs", c_jobs, "Worker threads (output is jobs-independent)")
      ->check(CLI::Range(1, 64));
  add_common(census, c_opts);

  // examples
  auto* examples = app.add_subcommand("examples", "Explicit family fixtures");
  std::string e_which;
  std::int64_t e_n = 0, e_m = 0, e_mp = 0;
  CommonOpts e_opts;
  examples->add_option("--which", e_which, "4.1|4.2|4.3")
      ->required()
      ->check(CLI::IsMember({"4.1", "4.2", "4.3"}));
  examples->add_option("--n", e_n, "Family parameter n")->required();
  auto* m_opt = examples->add_option("--m", e_m, "Family parameter m");
  auto* mp_opt = examples->add_option("--m-prime", e_mp, "Family parameter m'");
  add_common(examples, e_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (analyze->parsed()) {
      rc = run_analyze(cmdline, an_a, an_b, an_gaps, gaps_opt->count() > 0, an_genus,
                       genus_opt->count() > 0, an_opts);
    } else if (delta->parsed()) {
      rc = run_delta(cmdline, d_nu, d_mu, d_opts);
    } else if (trivial->parsed()) {
      rc = run_trivial(cmdline, t_a, t_b, t_mu, mu_opt->count() > 0, t_opts);
    } else if (wsq->parsed()) {
      rc = run_ws_q(cmdline, w_a, w_b, w_opts);
    } else if (sharp->parsed()) {
      rc = run_sharp_s(cmdline, s_a, s_b, s_opts);
    } else if (census->parsed()) {
      rc = run_census(cmdline, c_a, c_b, c_genus, c_nohyp, c_jobs, c_opts);
    } else if (examples->parsed()) {
      rc = run_examples(cmdline, e_which, e_n, e_m, m_opt->count() > 0, e_mp,
                        mp_opt->count() > 0, e_opts);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.message << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  std::cerr << "elapsed_ms=" << elapsed.count() << "\n";
  return rc;
}
