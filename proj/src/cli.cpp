#include "cde/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>

#include "cde/analysis.hpp"
#include "cde/codec.hpp"
#include "cde/decoder.hpp"
#include "cde/error.hpp"
#include "cde/io.hpp"
#include "cde/sim.hpp"

namespace cde::cli {
namespace {

struct RunConfig {
  std::string problem_path;
  std::optional<std::uint64_t> field;
  std::optional<std::size_t> delta;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> trials;
  std::string matrix_path;
  bool exhaustive = false;
  std::uint64_t budget = kDefaultBudget;
  std::string output;
  std::string format = "text";
  // construct
  std::string strategy = "sweep";
  std::uint64_t attempts = 10'000;
  // decode
  std::size_t client = 0;
  std::string broadcast;
  std::string held;
  // simulate
  std::string packets;
};

bool structured(const RunConfig& cfg) { return cfg.format == "structured"; }

struct Loaded {
  CdeProblem problem;
  std::optional<std::uint64_t> q;
};

Loaded load(const RunConfig& cfg, std::ostream& err) {
  const ProblemSpec spec = io::load_problem(cfg.problem_path);
  std::vector<std::string> warnings;
  CdeProblem problem = validate_problem(spec, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  const auto q = cfg.field ? cfg.field : spec.q;
  if (q) PrimeField{*q};
  return {std::move(problem), q};
}

PrimeField field_of(const Loaded& loaded) {
  if (!loaded.q) throw InvalidArgument("no field size: pass --field or set \"q\" in the problem file");
  return PrimeField(*loaded.q);
}

EncodingMatrix load_encoding(const RunConfig& cfg, const Loaded& loaded) {
  if (cfg.matrix_path.empty()) throw InvalidArgument("--matrix is required");
  const io::MatrixDocument doc = io::load_matrix(cfg.matrix_path);
  if (cfg.field && *cfg.field != doc.q) {
    throw InvalidArgument("--field " + std::to_string(*cfg.field) + " does not match the matrix file q=" +
                          std::to_string(doc.q));
  }
  return io::to_encoding(loaded.problem, doc);
}

template <typename Report>
void emit(const RunConfig& cfg, std::ostream& out, const Report& report) {
  if (structured(cfg)) {
    out << io::to_json(report).dump(2) << "\n";
  } else {
    out << io::render_text(report);
  }
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Loaded loaded = load(cfg, err);
  const CapabilityReport report = analyze(loaded.problem, cfg.budget);
  if (!cfg.output.empty()) {
    io::write_file(cfg.output, structured(cfg) ? io::to_json(report).dump(2) + "\n" : io::render_text(report));
  }
  emit(cfg, out, report);
  return kOk;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Loaded loaded = load(cfg, err);
  const PrimeField field = field_of(loaded);
  ConstructOptions options;
  if (cfg.strategy == "exhaustive") {
    options.strategy = SearchStrategy::kExhaustive;
  } else if (cfg.strategy != "sweep") {
    throw InvalidArgument("--strategy must be sweep or exhaustive");
  }
  options.delta = cfg.delta;
  options.max_attempts = cfg.attempts;
  options.budget = cfg.budget;
  const Construction built = deterministic_encoding(loaded.problem, field, options);
  const std::string matrix = io::format_matrix(io::to_document(built.encoding));
  std::ostream& report_out = cfg.output.empty() ? err : out;
  if (cfg.output.empty()) {
    out << matrix;
  } else {
    io::write_file(cfg.output, matrix);
  }
  emit(cfg, report_out, built.report);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Loaded loaded = load(cfg, err);
  const EncodingMatrix encoding = load_encoding(cfg, loaded);
  const std::size_t delta = cfg.delta.value_or(capability(loaded.problem, cfg.budget).delta);
  const VerificationReport report = verify_error_correction(encoding, delta, cfg.budget);
  emit(cfg, out, report);
  return report.passed ? kOk : kVerificationFailed;
}

HeldPackets parse_held(const std::string& text, const CdeProblem& problem, const PrimeField& field) {
  HeldPackets held;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("--held expects packet=value pairs, got '" + item + "'");
    const auto packet = io::parse_int_list(item.substr(0, eq));
    const auto value = io::parse_int_list(item.substr(eq + 1));
    if (packet.size() != 1 || value.size() != 1) throw ParseError("bad --held entry '" + item + "'");
    if (packet[0] < 1 || packet[0] > static_cast<std::int64_t>(problem.packets())) {
      throw IndexOutOfRange("held packet " + std::to_string(packet[0]) + " out of range");
    }
    held.insert_or_assign(static_cast<std::size_t>(packet[0] - 1), field.element(value[0]));
  }
  return held;
}

int cmd_decode(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Loaded loaded = load(cfg, err);
  const EncodingMatrix encoding = load_encoding(cfg, loaded);
  const std::size_t n = loaded.problem.clients();
  if (cfg.client < 1 || cfg.client > n) throw IndexOutOfRange("--client must be in [1, " + std::to_string(n) + "]");
  const auto y = io::parse_int_list(cfg.broadcast);
  if (y.size() != n) throw InvalidArgument("--broadcast needs " + std::to_string(n) + " values");
  const BroadcastVector received = BroadcastVector::from_ints(encoding.field(), y);
  const HeldPackets held = parse_held(cfg.held, loaded.problem, encoding.field());
  const DecodeResult result = decode_all(encoding, cfg.client - 1, received, held, cfg.budget);
  emit(cfg, out, result);
  return kOk;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.trials && *cfg.trials < 1) throw InvalidArgument("--trials must be at least 1");
  const Loaded loaded = load(cfg, err);
  const std::size_t delta = cfg.delta.value_or(capability(loaded.problem, cfg.budget).delta);
  nlohmann::ordered_json summary;
  std::string log;
  bool ok = true;

  if (cfg.exhaustive) {
    const EncodingMatrix encoding = load_encoding(cfg, loaded);
    // Success does not depend on X by linearity; several X are swept anyway.
    std::vector<PacketVector> xs;
    if (!cfg.packets.empty()) {
      xs.push_back(PacketVector::from_ints(encoding.field(), io::parse_int_list(cfg.packets)));
      if (xs.back().size() != loaded.problem.packets()) throw InvalidArgument("--packets needs k values");
    } else {
      for (std::uint64_t t = 0; t < 3; ++t) {
        std::vector<Symbol> x;
        for (std::size_t i = 0; i < loaded.problem.packets(); ++i) {
          x.push_back(static_cast<Symbol>(trial_seed(trial_seed(cfg.seed, t), i) % encoding.field().modulus()));
        }
        xs.emplace_back(encoding.field(), std::move(x));
      }
    }
    nlohmann::ordered_json runs = nlohmann::ordered_json::array();
    for (const auto& x : xs) {
      const AdversaryCheck check = exhaustive_adversary_check(encoding, delta, x, cfg.budget);
      ok = ok && check.passed;
      runs.push_back(io::to_json(check));
      if (!structured(cfg)) out << io::render_text(check);
      if (check.witness) log += io::to_json(*check.witness).dump() + "\n";
    }
    summary["exhaustive"] = runs;
  }

  if (!cfg.exhaustive || cfg.trials) {
    const PrimeField field = field_of(loaded);
    const std::uint64_t trials = static_cast<std::uint64_t>(cfg.trials.value_or(500));
    const MonteCarloStats stats =
        monte_carlo_success_rate(loaded.problem, field, delta, trials, cfg.seed, cfg.budget);
    ok = ok && stats.consistent_with_floor;
    summary["monte_carlo"] = io::to_json(stats);
    if (!structured(cfg)) out << io::render_text(stats);
    log += io::to_json(stats).dump() + "\n";
  }

  if (structured(cfg)) out << summary.dump(2) << "\n";
  if (!cfg.output.empty()) io::write_file(cfg.output, log);
  return ok ? kOk : kVerificationFailed;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--problem", cfg.problem_path, "Problem file (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--field", cfg.field, "Prime field size q (overrides the problem file)");
  cmd->add_option("--budget", cfg.budget, "Brute-force evaluation cap")->check(CLI::PositiveNumber);
  cmd->add_option("--output", cfg.output, "Output path");
  cmd->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"text", "structured"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Error-correction analysis for cooperative data exchange", "cde"};
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand("analyze", "Diameters, capability and degree bound");
  add_common(analyze_cmd, cfg);

  auto* construct_cmd = app.add_subcommand("construct", "Build and verify an encoding matrix");
  add_common(construct_cmd, cfg);
  construct_cmd->add_option("--delta", cfg.delta, "Target capability (default: structural capability)");
  construct_cmd->add_option("--seed", cfg.seed, "Unused; construction sweeps seeds from 0");
  construct_cmd->add_option("--strategy", cfg.strategy, "sweep or exhaustive")
      ->check(CLI::IsMember({"sweep", "exhaustive"}));
  construct_cmd->add_option("--attempts", cfg.attempts, "Seeds to try before giving up")
      ->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Check an encoding matrix against a capability");
  add_common(verify_cmd, cfg);
  verify_cmd->add_option("--matrix", cfg.matrix_path, "Matrix file (JSON)")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--delta", cfg.delta, "Capability to verify (default: structural capability)");

  auto* decode_cmd = app.add_subcommand("decode", "Minimum-distance decode at one client");
  add_common(decode_cmd, cfg);
  decode_cmd->add_option("--matrix", cfg.matrix_path, "Matrix file (JSON)")->required()->check(CLI::ExistingFile);
  decode_cmd->add_option("--client", cfg.client, "Decoding client (1-based)")->required();
  decode_cmd->add_option("--broadcast", cfg.broadcast, "Received y_1..y_n, comma separated")->required();
  decode_cmd->add_option("--held", cfg.held, "Held packets as packet=value pairs, comma separated")
      ->required();

  auto* simulate_cmd = app.add_subcommand("simulate", "Adversarial sweeps and Monte Carlo campaigns");
  add_common(simulate_cmd, cfg);
  simulate_cmd->add_option("--matrix", cfg.matrix_path, "Matrix file for --exhaustive")
      ->check(CLI::ExistingFile);
  simulate_cmd->add_option("--delta", cfg.delta, "Capability to test (default: structural capability)");
  simulate_cmd->add_option("--seed", cfg.seed, "Campaign seed");
  simulate_cmd->add_option("--trials", cfg.trials, "Monte Carlo trials (default 500)");
  simulate_cmd->add_flag("--exhaustive", cfg.exhaustive, "Sweep every adversary plan against --matrix");
  simulate_cmd->add_option("--packets", cfg.packets, "Packet vector x_1..x_k for --exhaustive");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(cfg, out, err);
    if (construct_cmd->parsed()) return cmd_construct(cfg, out, err);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out, err);
    if (decode_cmd->parsed()) return cmd_decode(cfg, out, err);
    return cmd_simulate(cfg, out, err);
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const SearchExhausted& e) {
    err << "search exhausted: " << e.what() << "\n";
    return kSearchExhausted;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "; raise --budget\n";
    return kBudgetExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace cde::cli
