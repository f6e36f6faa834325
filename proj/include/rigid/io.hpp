#pragma once

// Input documents and report rendering.
//
// Line-oriented input (blank lines and '#' comments ignored):
//
//   2 3            header: m n
//   +: 1 2 -3      one line per row: sign, colon, n weights
//   +: -1 -2 3
//
// or a single declaration line:
//
//   quasilinear: 0 1 2
//   search: m=2 n=3 bound=5 mode=T budget=10000000 exact-budget=100000 signs=+,-
//
// The JSON alternative carries the same content:
//   {"m": 2, "n": 1, "rows": [{"sign": 1, "weights": [1]}, ...]}
//   {"quasilinear": [0, 1, 2]}
//   {"search": {"m": 2, "n": 3, "bound": 5, "mode": "T"}}

#include "json.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rigid/bott.hpp"
#include "rigid/search.hpp"
#include "rigid/weights.hpp"

namespace rigid {

struct QuasilinearSeed {
  std::vector<int> a;
};

using Document = std::variant<WeightMatrix, SearchSpec, QuasilinearSeed>;

/// Throws Error(ParseError) with a "line N: " prefix.
Document parse_document(std::string_view text);
Document parse_json_document(std::string_view text);

/// Parses either format and resolves a quasilinear seed to its matrix.
/// A search declaration is a ParseError here.
WeightMatrix parse_matrix(std::string_view text, bool json);

/// Line-oriented document that parse_document reads back.
std::string render_matrix(const WeightMatrix& w);

nlohmann::json matrix_to_json(const WeightMatrix& w);

/// "c0" for the empty monomial, otherwise e.g. "c1^2*c3".
std::string render_partition(const ChernPartition& r);

/// Parses "r1,r2,...,rn".
ChernPartition parse_partition(std::string_view text);

/// Parses "+,-,+" or "1,-1,1".
std::vector<int> parse_signs(std::string_view text);

/// Newline-delimited JSON: a spec record, one record per find, and a summary.
/// Wall time is left out so identical runs give identical bytes.
std::string render_report_jsonl(const SearchReport& report);

/// Fixed-width table of finds for terminals.
std::string render_report_table(const SearchReport& report);

std::string render_problem24_jsonl(unsigned n, int bound, const std::vector<Problem24Solution>& solutions);

}  // namespace rigid
