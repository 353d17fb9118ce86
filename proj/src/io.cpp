#include "cde/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "cde/error.hpp"

namespace cde::io {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::int64_t require_int(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  if (!it->is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return it->get<std::int64_t>();
}

std::vector<std::vector<std::int64_t>> require_int_lists(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  if (!it->is_array()) throw ParseError(std::string("field '") + key + "' must be a list of integer lists");
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& row : *it) {
    if (!row.is_array()) throw ParseError(std::string("field '") + key + "' must be a list of integer lists");
    auto& dst = out.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' holds a non-integer");
      dst.push_back(v.get<std::int64_t>());
    }
  }
  return out;
}

void write_int_lists(std::ostringstream& out, const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) {
    out << "[]";
    return;
  }
  out << "[\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << "    [";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0) out << ", ";
      out << rows[r][c];
    }
    out << (r + 1 < rows.size() ? "],\n" : "]\n");
  }
  out << "  ]";
}

ordered_json one_based(const std::vector<std::size_t>& indices) {
  ordered_json out = ordered_json::array();
  for (std::size_t i : indices) out.push_back(i + 1);
  return out;
}

std::string join_one_based(const std::vector<std::size_t>& indices) {
  std::string s;
  for (std::size_t i : indices) s += (s.empty() ? "" : ", ") + std::to_string(i + 1);
  return s.empty() ? "none" : s;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << contents;
}

ProblemSpec parse_problem(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("problem file must be a JSON object");
  ProblemSpec spec;
  spec.k = require_int(doc, "k");
  spec.n = require_int(doc, "n");
  if (doc.contains("q")) {
    const std::int64_t q = require_int(doc, "q");
    if (q < 0) throw ParseError("field 'q' must be positive");
    spec.q = static_cast<std::uint64_t>(q);
  }
  spec.holdings = require_int_lists(doc, "holdings");
  return spec;
}

ProblemSpec load_problem(const std::filesystem::path& path) { return parse_problem(read_file(path)); }

std::string format_problem(const ProblemSpec& spec) {
  std::ostringstream out;
  out << "{\n  \"k\": " << spec.k << ",\n  \"n\": " << spec.n << ",\n";
  if (spec.q) out << "  \"q\": " << *spec.q << ",\n";
  out << "  \"holdings\": ";
  write_int_lists(out, spec.holdings);
  out << "\n}\n";
  return out.str();
}

MatrixDocument parse_matrix(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("matrix file must be a JSON object");
  MatrixDocument m;
  const std::int64_t q = require_int(doc, "q");
  if (q < 0) throw ParseError("field 'q' must be positive");
  m.q = static_cast<std::uint64_t>(q);
  m.k = require_int(doc, "k");
  m.n = require_int(doc, "n");
  m.entries = require_int_lists(doc, "entries");
  return m;
}

MatrixDocument load_matrix(const std::filesystem::path& path) { return parse_matrix(read_file(path)); }

std::string format_matrix(const MatrixDocument& doc) {
  std::ostringstream out;
  out << "{\n  \"q\": " << doc.q << ",\n  \"k\": " << doc.k << ",\n  \"n\": " << doc.n << ",\n  \"entries\": ";
  write_int_lists(out, doc.entries);
  out << "\n}\n";
  return out.str();
}

MatrixDocument to_document(const EncodingMatrix& encoding) {
  const Matrix& a = encoding.coefficients();
  MatrixDocument doc;
  doc.q = encoding.field().modulus();
  doc.k = static_cast<std::int64_t>(a.rows());
  doc.n = static_cast<std::int64_t>(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto& row = doc.entries.emplace_back();
    for (Symbol v : a.row(r)) row.push_back(v);
  }
  return doc;
}

EncodingMatrix to_encoding(const CdeProblem& problem, const MatrixDocument& doc) {
  if (doc.k != static_cast<std::int64_t>(problem.packets()) || doc.n != static_cast<std::int64_t>(problem.clients())) {
    throw ParseError("matrix is " + std::to_string(doc.k) + " x " + std::to_string(doc.n) + " but the problem has k=" +
                     std::to_string(problem.packets()) + ", n=" + std::to_string(problem.clients()));
  }
  if (doc.entries.size() != problem.packets()) throw ParseError("entries must list k rows");
  const PrimeField field(doc.q);
  for (const auto& row : doc.entries) {
    if (row.size() != problem.clients()) throw ParseError("every entries row must have n values");
    for (std::int64_t v : row) {
      if (v < 0 || static_cast<std::uint64_t>(v) >= doc.q) {
        throw ParseError("entry " + std::to_string(v) + " is not a residue mod " + std::to_string(doc.q));
      }
    }
  }
  return EncodingMatrix(problem, Matrix::from_rows(field, doc.entries));
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw ParseError("empty entry in list '" + std::string(text) + "'");
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ParseError("'" + token + "' is not an integer");
    out.push_back(v);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (ch != ' ' && ch != '\t') {
      token += ch;
    }
  }
  if (!token.empty() || !out.empty()) flush();
  return out;
}

std::string_view to_string(DecodeStatus status) noexcept {
  switch (status) {
    case DecodeStatus::kUnique:
      return "unique";
    case DecodeStatus::kAmbiguous:
      return "ambiguous";
    case DecodeStatus::kFailed:
      break;
  }
  return "failed";
}

ordered_json to_json(const CapabilityReport& report) {
  ordered_json out;
  out["rho_per_client"] = report.rho_per_client;
  out["rho"] = report.rho;
  out["delta"] = report.delta;
  out["degree_bound"] = report.degree_bound ? ordered_json(*report.degree_bound) : ordered_json(nullptr);
  out["degree_bound_kind"] = "upper_bound";
  out["vacuous_clients"] = one_based(report.vacuous_clients);
  return out;
}

ordered_json to_json(const VerificationReport& report) {
  ordered_json out;
  out["delta"] = report.delta;
  out["required_distance"] = report.required_distance;
  out["passed"] = report.passed;
  ordered_json distances = ordered_json::array();
  for (const auto& d : report.distances) distances.push_back(d ? ordered_json(*d) : ordered_json(nullptr));
  out["distances"] = distances;
  out["binding_client"] = report.binding_client ? ordered_json(*report.binding_client + 1) : ordered_json(nullptr);
  out["failing_clients"] = one_based(report.failing_clients);
  return out;
}

ordered_json to_json(const DecodeResult& result) {
  ordered_json out;
  out["client"] = result.client + 1;
  out["status"] = to_string(result.status);
  out["distance"] = result.distance;
  out["minimizers"] = result.minimizers;
  ordered_json recovered = ordered_json::object();
  for (const auto& [i, v] : result.recovered) recovered[std::to_string(i + 1)] = v.value();
  out["recovered"] = recovered;
  if (result.estimate) {
    ordered_json est = ordered_json::array();
    for (Symbol v : result.estimate->symbols()) est.push_back(v);
    out["estimate"] = est;
  }
  return out;
}

ordered_json to_json(const ExchangeTrace& trace) {
  ordered_json out;
  auto symbols = [](auto span) {
    ordered_json a = ordered_json::array();
    for (Symbol v : span) a.push_back(v);
    return a;
  };
  out["packets"] = symbols(trace.truth.symbols());
  out["honest"] = symbols(trace.honest.symbols());
  out["received"] = symbols(trace.received.symbols());
  ordered_json plan = ordered_json::object();
  for (const auto& [j, v] : trace.plan.substitutions) plan[std::to_string(j + 1)] = v.value();
  out["substitutions"] = plan;
  out["verdict"] = trace.verdict == Verdict::kAllRecovered ? "all_recovered" : "violations";
  out["violations"] = one_based(trace.violations);
  ordered_json results = ordered_json::array();
  for (const auto& r : trace.results) results.push_back(to_json(r));
  out["results"] = results;
  return out;
}

ordered_json to_json(const AdversaryCheck& check) {
  ordered_json out;
  out["passed"] = check.passed;
  out["plans_checked"] = check.plans_checked;
  out["witness"] = check.witness ? to_json(*check.witness) : ordered_json(nullptr);
  return out;
}

ordered_json to_json(const MonteCarloStats& stats) {
  ordered_json out;
  out["trials"] = stats.trials;
  out["passes"] = stats.passes;
  out["pass_fraction"] = stats.pass_fraction;
  out["ci99_low"] = stats.ci_low;
  out["ci99_high"] = stats.ci_high;
  out["upper_bound_one_sided99"] = stats.upper_bound;
  out["degree_bound"] = stats.degree_bound;
  out["theoretical_floor"] = stats.theoretical_floor;
  out["consistent_with_floor"] = stats.consistent_with_floor;
  return out;
}

std::string render_text(const CapabilityReport& report) {
  std::ostringstream out;
  out << "client  rho_j\n";
  for (std::size_t j = 0; j < report.rho_per_client.size(); ++j) {
    out << std::left << std::setw(8) << j + 1 << report.rho_per_client[j] << "\n";
  }
  out << "rho           " << report.rho << "\n";
  out << "delta         " << report.delta << "\n";
  out << "degree_bound  " << (report.degree_bound ? std::to_string(*report.degree_bound) : "n/a")
      << " (upper bound)\n";
  if (!report.vacuous_clients.empty()) {
    out << "note: client(s) " << join_one_based(report.vacuous_clients)
        << " hold every packet; rho_j = 0 and no decoding is needed\n";
  }
  return out.str();
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  out << (report.passed ? "PASS" : "FAIL") << ": delta=" << report.delta
      << " needs local distance >= " << report.required_distance << "\n";
  out << "client  distance\n";
  for (std::size_t j = 0; j < report.distances.size(); ++j) {
    out << std::left << std::setw(8) << j + 1
        << (report.distances[j] ? std::to_string(*report.distances[j]) : "-") << "\n";
  }
  if (report.binding_client) out << "binding client  " << *report.binding_client + 1 << "\n";
  if (!report.failing_clients.empty()) out << "failing clients " << join_one_based(report.failing_clients) << "\n";
  return out.str();
}

std::string render_text(const DecodeResult& result) {
  std::ostringstream out;
  out << "client     " << result.client + 1 << "\n";
  out << "status     " << to_string(result.status) << "\n";
  out << "distance   " << result.distance << "\n";
  out << "minimizers " << result.minimizers << "\n";
  out << "recovered ";
  if (result.recovered.empty()) out << " none";
  for (const auto& [i, v] : result.recovered) out << " x" << i + 1 << "=" << v.value();
  out << "\n";
  if (result.estimate) {
    out << "estimate  ";
    for (Symbol v : result.estimate->symbols()) out << " " << v;
    out << "\n";
  }
  return out.str();
}

std::string render_text(const AdversaryCheck& check) {
  std::ostringstream out;
  out << "exhaustive adversary check: " << (check.passed ? "PASS" : "FAIL") << " (" << check.plans_checked
      << " plans)\n";
  if (check.witness) {
    const auto& w = *check.witness;
    out << (check.passed ? "hardest plan:" : "violating plan:");
    if (w.plan.substitutions.empty()) out << " none";
    for (const auto& [j, v] : w.plan.substitutions) out << " y" << j + 1 << "'=" << v.value();
    out << "\n";
    if (!w.violations.empty()) out << "clients failing to recover: " << join_one_based(w.violations) << "\n";
  }
  return out.str();
}

std::string render_text(const MonteCarloStats& stats) {
  std::ostringstream out;
  out << std::setprecision(6);
  out << "trials             " << stats.trials << "\n";
  out << "passes             " << stats.passes << "\n";
  out << "pass fraction      " << stats.pass_fraction << "\n";
  out << "99% interval       [" << stats.ci_low << ", " << stats.ci_high << "]\n";
  out << "degree bound       " << stats.degree_bound << "\n";
  out << "theoretical floor  " << stats.theoretical_floor << "\n";
  out << "consistent         " << (stats.consistent_with_floor ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace cde::io
