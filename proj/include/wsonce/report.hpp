#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "wsonce/census.hpp"
#include "wsonce/classify.hpp"
#include "wsonce/cusp.hpp"
#include "wsonce/pencil.hpp"
#include "wsonce/semigroup.hpp"

namespace wsonce {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Format { Human, Json, Csv };

Format parse_format(std::string_view s);  // InvalidInput on unknown name

// Canonical textual form, fixed byte-for-byte:
//   genus=<g>; gaps=<comma-separated ascending>;
// The empty gap list prints as "gaps=;". Injective, hence round-trippable.
std::string canonical_form(const NumericalSemigroup& h);
NumericalSemigroup parse_canonical(std::string_view text);

// JSON building blocks (ordered_json is not used: key order is the sorted
// order nlohmann gives std::map-backed objects, which the determinism
// contract relies on).
nlohmann::json to_json(const NumericalSemigroup& h);
nlohmann::json to_json(const StandingHypotheses& hyp, bool bounds_mode);
nlohmann::json to_json(const CriterionOutcome& o);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const MultiplicitySequence& seq);
nlohmann::json to_json(const TrivialNewNonGaps& t);
nlohmann::json to_json(const WindowProfile& w);
nlohmann::json to_json(const CensusRow& row);

// One semigroup/verdict line of the pinned CSV schema
//   a,b,n,r,genus,gaps,verdict,rules_established
// (header excluded; gaps and rules_established are always double-quoted).
std::string csv_header();
std::string csv_row(const NumericalSemigroup& h, const Verdict* verdict);

// Human-readable rendering of a full report body.
std::string render_human(const nlohmann::json& body);

// Assemble the top-level report object {command, inputs, results, version}.
nlohmann::json make_report(const std::string& command, nlohmann::json inputs,
                           nlohmann::json results);

// Serialize `body` in the requested format; every format ends with exactly
// one trailing newline. For CSV the caller supplies the rows via `csv_text`
// (already newline-joined, no trailing newline).
std::string serialize(const nlohmann::json& body, Format format,
                      const std::string& csv_text);

// Write to stdout or to a file (Io error mentions the path).
void emit(const std::string& bytes, const std::string& out_path);

}  // namespace wsonce
