#include "wsonce/report.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wsonce/errors.hpp"

namespace wsonce {

namespace {

std::string join_i64(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::int64_t parse_i64(std::string_view s) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError(ErrorCode::InvalidInput,
                      "not an integer: '" + std::string(s) + "'");
  return value;
}

}  // namespace

Format parse_format(std::string_view s) {
  if (s == "human") return Format::Human;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw DomainError(ErrorCode::InvalidInput, "unknown format '" + std::string(s) + "'");
}

std::string canonical_form(const NumericalSemigroup& h) {
  return "genus=" + std::to_string(h.genus()) + "; gaps=" + join_i64(h.gaps()) + ";";
}

NumericalSemigroup parse_canonical(std::string_view text) {
  constexpr std::string_view kGenus = "genus=";
  constexpr std::string_view kGaps = "; gaps=";
  if (text.substr(0, kGenus.size()) != kGenus)
    throw DomainError(ErrorCode::InvalidInput, "canonical form must start with 'genus='");
  const std::size_t semi = text.find(kGaps);
  if (semi == std::string_view::npos || text.empty() || text.back() != ';')
    throw DomainError(ErrorCode::InvalidInput, "malformed canonical form");
  const std::int64_t genus = parse_i64(text.substr(kGenus.size(), semi - kGenus.size()));
  std::string_view list = text.substr(semi + kGaps.size());
  list.remove_suffix(1);  // trailing ';'
  std::vector<std::int64_t> gaps;
  while (!list.empty()) {
    const std::size_t comma = list.find(',');
    gaps.push_back(parse_i64(list.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  NumericalSemigroup h = NumericalSemigroup::from_gaps(gaps);
  if (h.genus() != genus)
    throw DomainError(ErrorCode::InvalidInput,
                      "genus field " + std::to_string(genus) + " does not match " +
                          std::to_string(h.genus()) + " gaps");
  return h;
}

nlohmann::json to_json(const NumericalSemigroup& h) {
  nlohmann::json j;
  j["canonical"] = canonical_form(h);
  j["conductor"] = h.conductor();
  j["gaps"] = h.gaps();
  j["genus"] = h.genus();
  j["multiplicity"] = h.multiplicity();
  return j;
}

nlohmann::json to_json(const StandingHypotheses& hyp, bool bounds_mode) {
  nlohmann::json j;
  j["a"] = hyp.a;
  j["b"] = hyp.b;
  j["n"] = hyp.n;
  j["r"] = hyp.r;
  j["dimConditionHolds"] = hyp.dim_condition_holds;
  j["dimConditionAssumed"] = hyp.dim_condition_assumed;
  j["mode"] = bounds_mode ? "bounds" : "concrete";
  return j;
}

nlohmann::json to_json(const CriterionOutcome& o) {
  nlohmann::json j;
  j["ruleId"] = to_string(o.rule);
  j["status"] = to_string(o.status);
  j["evidence"] = o.evidence;
  return j;
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["kind"] = to_string(v.kind);
  j["hypotheses"] = to_json(v.hypotheses, v.bounds_mode);
  nlohmann::json outs = nlohmann::json::array();
  for (const CriterionOutcome& o : v.outcomes) outs.push_back(to_json(o));
  j["outcomes"] = outs;
  return j;
}

nlohmann::json to_json(const MultiplicitySequence& seq) {
  nlohmann::json j;
  j["cs"] = seq.cs;
  j["ns"] = seq.ns;
  j["delta"] = seq.delta;
  return j;
}

nlohmann::json to_json(const TrivialNewNonGaps& t) {
  nlohmann::json j;
  j["a"] = t.params.a;
  j["b"] = t.params.b;
  j["mu"] = t.mu;
  j["muIsDefault"] = t.mu_is_default;
  nlohmann::json table = nlohmann::json::array();
  for (const auto& [m, n] : t.n_table) table.push_back({{"m", m}, {"n", n}});
  j["nTable"] = table;
  j["values"] = t.values;
  j["count"] = static_cast<std::int64_t>(t.values.size());
  return j;
}

nlohmann::json to_json(const WindowProfile& w) {
  nlohmann::json j;
  j["t"] = w.t;
  j["s"] = w.s;
  j["qNonGaps"] = w.q_non_gaps;
  return j;
}

nlohmann::json to_json(const CensusRow& row) {
  nlohmann::json j;
  j["semigroup"] = to_json(row.semigroup);
  j["verdict"] = to_json(row.verdict);
  j["familyTag"] = row.family_tag ? nlohmann::json(*row.family_tag) : nlohmann::json();
  return j;
}

std::string csv_header() { return "a,b,n,r,genus,gaps,verdict,rules_established"; }

std::string csv_row(const NumericalSemigroup& h, const Verdict* verdict) {
  std::int64_t a = 0, b = 0, n = 0, r = 0;
  std::string kind;
  std::string rules;
  if (verdict != nullptr) {
    a = verdict->hypotheses.a;
    b = verdict->hypotheses.b;
    n = verdict->hypotheses.n;
    r = verdict->hypotheses.r;
    kind = to_string(verdict->kind);
    bool first = true;
    for (RuleId id : verdict->established_rules()) {
      if (!first) rules += ',';
      rules += to_string(id);
      first = false;
    }
  } else if (h.genus() > 0) {
    a = h.multiplicity();
    b = second_generator(h);
    n = b / a;
    r = b % a;
  }
  std::string out;
  out += std::to_string(a) + ',' + std::to_string(b) + ',' + std::to_string(n) + ',' +
         std::to_string(r) + ',' + std::to_string(h.genus()) + ',';
  out += '"' + join_i64(h.gaps()) + '"';
  out += ',' + kind + ',';
  out += '"' + rules + '"';
  return out;
}

nlohmann::json make_report(const std::string& command, nlohmann::json inputs,
                           nlohmann::json results) {
  nlohmann::json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["results"] = std::move(results);
  j["version"] = kToolVersion;
  return j;
}

namespace {

void render_value(std::ostringstream& os, const nlohmann::json& v, int indent);

void render_object(std::ostringstream& os, const nlohmann::json& obj, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [key, value] : obj.items()) {
    os << pad << key << ":";
    if ((value.is_object() && !value.empty()) ||
        (value.is_array() && !value.empty() && !value[0].is_primitive())) {
      os << "\n";
      render_value(os, value, indent + 1);
    } else if (value.is_object()) {
      os << " {}\n";
    } else if (value.is_array()) {
      os << " ";
      render_value(os, value, 0);
    } else {
      os << " ";
      render_value(os, value, 0);
      os << "\n";
    }
  }
}

void render_value(std::ostringstream& os, const nlohmann::json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (v.is_object()) {
    render_object(os, v, indent);
  } else if (v.is_array()) {
    bool scalars = true;
    for (const auto& e : v)
      if (e.is_object() || e.is_array()) scalars = false;
    if (scalars) {
      os << pad << "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        render_value(os, v[i], 0);
      }
      os << "]\n";
    } else {
      for (std::size_t i = 0; i < v.size(); ++i) {
        os << pad << "- [" << i << "]\n";
        render_value(os, v[i], indent + 1);
      }
    }
  } else if (v.is_string()) {
    os << v.get<std::string>();
  } else {
    os << v.dump();
  }
}

}  // namespace

std::string render_human(const nlohmann::json& body) {
  std::ostringstream os;
  render_object(os, body, 0);
  return os.str();
}

std::string serialize(const nlohmann::json& body, Format format,
                      const std::string& csv_text) {
  switch (format) {
    case Format::Json:
      return body.dump(2) + "\n";
    case Format::Csv:
      return csv_text + "\n";
    case Format::Human: {
      std::string text = render_human(body);
      if (text.empty() || text.back() != '\n') text += '\n';
      return text;
    }
  }
  throw std::logic_error("unreachable format");
}

void emit(const std::string& bytes, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << bytes;
    std::cout.flush();
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw DomainError(ErrorCode::Io, "cannot open '" + out_path + "' for writing");
  f << bytes;
  f.flush();
  if (!f) throw DomainError(ErrorCode::Io, "write failed for '" + out_path + "'");
}

}  // namespace wsonce
