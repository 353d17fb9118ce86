#pragma once

// Interchange files and report rendering.
//
// Problem file (1-based packet indices):
//   {
//     "k": 6,
//     "n": 6,
//     "q": 3,
//     "holdings": [
//       [1, 3, 6],
//       ...
//     ]
//   }
//
// Matrix file (row i = packet i, column j = client j):
//   {
//     "q": 3,
//     "k": 6,
//     "n": 6,
//     "entries": [
//       [1, 0, 1, 0, 0, 1],
//       ...
//     ]
//   }
//
// Readers accept any JSON layout; the format_* writers emit exactly the
// canonical layout above (two-space indent, one row per line, trailing
// newline), so reading and re-writing a canonical file is byte-exact.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cde/analysis.hpp"
#include "cde/codec.hpp"
#include "cde/decoder.hpp"
#include "cde/model.hpp"
#include "cde/sim.hpp"

namespace cde::io {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

ProblemSpec parse_problem(std::string_view text);
ProblemSpec load_problem(const std::filesystem::path& path);
std::string format_problem(const ProblemSpec& spec);

struct MatrixDocument {
  std::uint64_t q = 0;
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::vector<std::vector<std::int64_t>> entries;

  friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

MatrixDocument parse_matrix(std::string_view text);
MatrixDocument load_matrix(const std::filesystem::path& path);
std::string format_matrix(const MatrixDocument& doc);

MatrixDocument to_document(const EncodingMatrix& encoding);
/// Checks the document's shape against the problem and that every entry is
/// a residue mod q.  Throws ParseError, NotPrime or SupportViolation.
EncodingMatrix to_encoding(const CdeProblem& problem, const MatrixDocument& doc);

/// Parses "1,2,0" (whitespace tolerated).
std::vector<std::int64_t> parse_int_list(std::string_view text);

// Structured (JSON) renderings.  Client and packet indices are 1-based.
nlohmann::ordered_json to_json(const CapabilityReport& report);
nlohmann::ordered_json to_json(const VerificationReport& report);
nlohmann::ordered_json to_json(const DecodeResult& result);
nlohmann::ordered_json to_json(const ExchangeTrace& trace);
nlohmann::ordered_json to_json(const AdversaryCheck& check);
nlohmann::ordered_json to_json(const MonteCarloStats& stats);

// Human-readable renderings carrying the same fields.
std::string render_text(const CapabilityReport& report);
std::string render_text(const VerificationReport& report);
std::string render_text(const DecodeResult& result);
std::string render_text(const AdversaryCheck& check);
std::string render_text(const MonteCarloStats& stats);

std::string_view to_string(DecodeStatus status) noexcept;

}  // namespace cde::io
