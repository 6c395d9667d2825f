#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rca/grid.hpp"
#include "rca/poly.hpp"
#include "rca/rules.hpp"
#include "rca/sequences.hpp"
#include "rca/verify.hpp"

namespace rca::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RuleId require_rule(const std::string& name) {
  if (auto r = parse_rule(name)) return *r;
  throw UsageError("unknown rule '" + name + "' (expected R1, R2, R3, R3p or C1..C3p)");
}

// Sends output to `fallback` unless a path was given.
void emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  body(file);
  file.flush();
  if (!file) throw IoError("write to '" + path + "' failed");
}

SecondOrderState load_state(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "'");
  try {
    return read_state(file);
  } catch (const FormatError& e) {
    throw IoError("'" + path + "': " + e.what());
  }
}

// --- simulate -------------------------------------------------------------

struct SimulateArgs {
  std::string rule = "R1";
  std::int64_t steps = 0;
  std::string format = "txt";
  std::string out;
  std::string from;
  std::string save_state;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const RuleId rule = require_rule(a.rule);
  const SecondOrderState start = a.from.empty() ? single_seed() : load_state(a.from);
  const SecondOrderState end = evolve(rule, start, a.steps);
  CountRecord c = count_values(end);
  c.n = a.steps;

  emit(a.out, out, [&](std::ostream& os) {
    if (a.format == "json") {
      nlohmann::ordered_json j{{"n", c.n}, {"R1", c.r1}, {"R2", c.r2}, {"R3", c.r3},
                               {"R", c.total}};
      os << j.dump() << '\n';
    } else if (a.format == "state") {
      write_state(os, end);
    } else {
      os << "n=" << c.n << " R1=" << c.r1 << " R2=" << c.r2 << " R3=" << c.r3
         << " R=" << c.total << '\n';
    }
  });
  if (!a.save_state.empty())
    emit(a.save_state, out, [&](std::ostream& os) { write_state(os, end); });
  return kOk;
}

// --- sequence -------------------------------------------------------------

struct SequenceArgs {
  std::string which = "R";
  std::int64_t max = 15;
  std::string method = "recursive";
  std::string format = "csv";
  std::string out;
  bool check = false;
};

std::vector<SequenceRow> rows_by(const std::string& method, std::int64_t n_max) {
  std::vector<SequenceRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  if (method == "recursive") {
    for (std::int64_t n = 0; n <= n_max; ++n)
      rows.push_back({n, seq_value(SeqId::R, n), seq_value(SeqId::R1, n), seq_value(SeqId::R2, n)});
  } else if (method == "alt") {
    for (std::int64_t n = 0; n <= n_max; ++n)
      rows.push_back({n, seq_value_alt(SeqId::R, n), seq_value_alt(SeqId::R1, n),
                      seq_value_alt(SeqId::R2, n)});
  } else if (method == "sim") {
    for (const CountRecord& c : trajectory_counts(RuleId::C1, n_max))
      rows.push_back({c.n, c.total, c.r1, c.r2});
  } else if (method == "poly") {
    for (std::int64_t n = 0; n <= n_max; ++n) {
      const PolyPair p = state_poly_at(RuleId::C1, static_cast<std::uint64_t>(n));
      const SecondOrderState s = polys_to_state(p);
      const CountRecord c = count_values(s);
      rows.push_back({n, c.total, c.r1, c.r2});
    }
  } else {
    throw UsageError("unknown method '" + method + "' (expected sim, recursive, alt, poly)");
  }
  return rows;
}

Count column(const SequenceRow& row, SeqId which) {
  switch (which) {
    case SeqId::R: return row.r;
    case SeqId::R1: return row.r1;
    case SeqId::R2: return row.r2;
  }
  return 0;
}

int cmd_sequence(const SequenceArgs& a, std::ostream& out, std::ostream& err) {
  const auto which = parse_seq(a.which);
  if (!which) throw UsageError("unknown sequence '" + a.which + "' (expected R, R1, R2)");
  if (a.max < 0) throw UsageError("--max must be non-negative");

  SequenceTable table;
  table.rows = rows_by(a.method, a.max);

  if (a.check) {
    for (const char* other : {"sim", "recursive", "alt", "poly"}) {
      if (a.method == other) continue;
      const auto rows = rows_by(other, a.max);
      for (std::size_t n = 0; n < rows.size(); ++n) {
        if (rows[n] != table.rows[n]) {
          err << "mismatch at n=" << n << ": " << a.method << " gives R="
              << to_string(table.rows[n].r) << " R1=" << to_string(table.rows[n].r1)
              << " R2=" << to_string(table.rows[n].r2) << ", " << other
              << " gives R=" << to_string(rows[n].r) << " R1=" << to_string(rows[n].r1)
              << " R2=" << to_string(rows[n].r2) << '\n';
          return kMismatch;
        }
      }
    }
  }

  emit(a.out, out, [&](std::ostream& os) {
    if (a.format == "json") {
      write_json(os, table);
    } else if (a.format == "txt") {
      for (const auto& row : table.rows)
        os << "n=" << row.n << ' ' << a.which << '=' << to_string(column(row, *which)) << '\n';
    } else {
      write_csv(os, table);
    }
  });
  return kOk;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::optional<std::int64_t> max;
  std::string format = "txt";
  std::string out;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.max && *a.max < 0) throw UsageError("--max must be non-negative");
  std::vector<SuiteReport> reports;
  if (a.suite == "all") {
    // Like CA_DEFAULT_MAX, a shared --max only rescales the n-indexed suites.
    for (const auto& info : suite_catalog()) {
      const bool use_max = a.max && !info.indexed_by_k;
      reports.push_back(run_suite(info, use_max ? *a.max : default_max_for(info)));
    }
  } else {
    const SuiteInfo* info = find_suite(a.suite);
    if (info == nullptr) throw UsageError("unknown suite '" + a.suite + "'");
    reports.push_back(run_suite(*info, a.max.value_or(default_max_for(*info))));
  }

  emit(a.out, out, [&](std::ostream& os) {
    if (a.format == "json") {
      write_reports_json(os, reports);
    } else {
      for (const auto& r : reports) os << format_report(r) << '\n';
    }
  });
  for (const auto& r : reports)
    if (!r.passed) return kSuiteFailure;
  return kOk;
}

// --- render ---------------------------------------------------------------

struct RenderArgs {
  std::string rule = "R1";
  std::int64_t steps = 0;
  std::string format = "txt";
  std::string out;
};

void render(std::ostream& os, const SecondOrderState& s, int radius, const std::string& format) {
  const int side = 2 * radius + 1;
  if (format == "pbm") {
    os << "P1\n" << side << ' ' << side << '\n';
  } else if (format == "ppm") {
    os << "P3\n" << side << ' ' << side << "\n255\n";
  }
  static constexpr const char* kPalette[4] = {"255 255 255", "0 0 0", "128 128 128", "255 0 0"};
  for (int j = radius; j >= -radius; --j) {
    for (int i = -radius; i <= radius; ++i) {
      const int v = s.value_at({i, j});
      if (format == "pbm") {
        os << (i > -radius ? " " : "") << (v ? '1' : '0');
      } else if (format == "ppm") {
        os << (i > -radius ? " " : "") << kPalette[v];
      } else {
        os << ".123"[v];
      }
    }
    os << '\n';
  }
}

int cmd_render(const RenderArgs& a, std::ostream& out) {
  const RuleId rule = require_rule(a.rule);
  const SecondOrderState s = evolve(rule, single_seed(), a.steps);
  const int radius = static_cast<int>(a.steps < 0 ? -a.steps : a.steps);
  emit(a.out, out, [&](std::ostream& os) { render(os, s, radius, a.format); });
  return kOk;
}

// --- export ---------------------------------------------------------------

struct ExportArgs {
  std::string what = "state";
  std::string rule = "R1";
  std::int64_t steps = 0;
  std::string component = "current";
  std::int64_t max = 15;
  std::string format = "csv";
  std::string out;
};

int cmd_export(const ExportArgs& a, std::ostream& out) {
  if (a.what == "table") {
    if (a.max < 0) throw UsageError("--max must be non-negative");
    const SequenceTable t = build_table(a.max);
    emit(a.out, out, [&](std::ostream& os) {
      if (a.format == "json")
        write_json(os, t);
      else
        write_csv(os, t);
    });
    return kOk;
  }

  const RuleId rule = require_rule(a.rule);
  if (a.component != "current" && a.component != "previous")
    throw UsageError("--component must be current or previous");
  const bool current = a.component == "current";

  if (a.what == "poly") {
    if (!is_linear(rule)) throw UsageError("polynomial export needs a linear rule (R1 or R2)");
    if (a.steps < 0) throw UsageError("polynomial export needs --steps >= 0");
    const PolyPair p = state_poly_at(rule, static_cast<std::uint64_t>(a.steps));
    emit(a.out, out, [&](std::ostream& os) { write_poly(os, current ? p.first : p.second); });
    return kOk;
  }

  const SecondOrderState s = evolve(rule, single_seed(), a.steps);
  if (a.what == "state") {
    emit(a.out, out, [&](std::ostream& os) { write_state(os, s); });
  } else if (a.what == "grid") {
    emit(a.out, out, [&](std::ostream& os) { write_grid(os, current ? s.current : s.previous); });
  } else {
    throw UsageError("unknown export '" + a.what + "' (expected state, grid, poly, table)");
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reversible second-order cellular automata: simulation, sequences, checks"};
  app.name("rca");
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Evolve a lift from the seed (or a saved state)");
  simulate->add_option("--rule", sim.rule, "R1, R2, R3 or R3p");
  simulate->add_option("--steps", sim.steps, "signed step count; negative runs backwards")
      ->allow_extra_args(false);
  simulate->add_option("--format", sim.format)->check(CLI::IsMember({"txt", "json", "state"}));
  simulate->add_option("--out", sim.out, "output path (default stdout)");
  simulate->add_option("--from", sim.from, "start from a saved #bstate file");
  simulate->add_option("--save-state", sim.save_state, "also write the final state here");

  SequenceArgs seq;
  auto* sequence = app.add_subcommand("sequence", "Tabulate R, R1, R2");
  sequence->add_option("--which", seq.which)->check(CLI::IsMember({"R", "R1", "R2"}));
  sequence->add_option("--max", seq.max);
  sequence->add_option("--method", seq.method)
      ->check(CLI::IsMember({"sim", "recursive", "alt", "poly"}));
  sequence->add_option("--format", seq.format)->check(CLI::IsMember({"csv", "json", "txt"}));
  sequence->add_option("--out", seq.out);
  sequence->add_flag("--check", seq.check, "cross-validate every method; exit 3 on mismatch");

  VerifyArgs ver;
  std::int64_t ver_max = 0;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", ver.suite, "suite name or 'all'");
  auto* ver_max_opt = verify->add_option("--max", ver_max, "n_max (or k_max for k-indexed suites)");
  verify->add_option("--format", ver.format)->check(CLI::IsMember({"txt", "json"}));
  verify->add_option("--out", ver.out);

  RenderArgs ren;
  auto* render_cmd = app.add_subcommand("render", "Draw the step-n state over [-n, n]^2");
  render_cmd->add_option("--rule", ren.rule);
  render_cmd->add_option("--steps,--step", ren.steps);
  render_cmd->add_option("--format", ren.format)->check(CLI::IsMember({"pbm", "ppm", "txt"}));
  render_cmd->add_option("--out", ren.out);

  ExportArgs ex;
  auto* export_cmd = app.add_subcommand("export", "Write states, polynomials or tables");
  export_cmd->add_option("--what", ex.what)
      ->check(CLI::IsMember({"state", "grid", "poly", "table"}));
  export_cmd->add_option("--rule", ex.rule);
  export_cmd->add_option("--steps", ex.steps);
  export_cmd->add_option("--component", ex.component);
  export_cmd->add_option("--max", ex.max);
  export_cmd->add_option("--format", ex.format)->check(CLI::IsMember({"csv", "json"}));
  export_cmd->add_option("--out", ex.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*simulate) return cmd_simulate(sim, out);
    if (*sequence) return cmd_sequence(seq, out, err);
    if (*verify) {
      if (ver_max_opt->count() > 0) ver.max = ver_max;
      return cmd_verify(ver, out);
    }
    if (*render_cmd) return cmd_render(ren, out);
    if (*export_cmd) return cmd_export(ex, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kUsage;
}

}  // namespace rca::cli
