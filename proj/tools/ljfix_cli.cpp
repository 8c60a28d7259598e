// ljfix command-line front end. Links only the C interface.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ljfix/ljfix.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;

struct TableDeleter {
  void operator()(ljfix_table* t) const { ljfix_table_free(t); }
};
struct CascadeDeleter {
  void operator()(ljfix_cascade* c) const { ljfix_cascade_free(c); }
};
struct TrajectoryDeleter {
  void operator()(ljfix_trajectory* t) const { ljfix_trajectory_free(t); }
};
using TablePtr = std::unique_ptr<ljfix_table, TableDeleter>;
using CascadePtr = std::unique_ptr<ljfix_cascade, CascadeDeleter>;
using TrajectoryPtr = std::unique_ptr<ljfix_trajectory, TrajectoryDeleter>;

struct LibraryError {
  ljfix_status status;
  std::string message;
};

void check(ljfix_status status) {
  if (status != LJFIX_OK) throw LibraryError{status, ljfix_last_error()};
}

struct RunConfig {
  double sigma1 = 1.0;
  double eps1 = 1.0;
  bool json = false;
  std::string format;
  std::string out;

  int orders = 8;
  bool vacancy = false;
  std::optional<double> uc;
  std::optional<double> depth;
  std::optional<double> q;
  std::optional<double> chi;
  double delta = 0.01;
  int steps = 10;
  bool linearized = false;
  std::string figure = "family";
  double q_min = 1.0;
  double q_max = 2.3;
  int samples = 101;
  double figure_delta = 0.0625;
};

ljfix_format output_format(const RunConfig& cfg) {
  return (cfg.json || cfg.format == "json") ? LJFIX_FORMAT_JSON : LJFIX_FORMAT_CSV;
}

std::string serialize(const ljfix_table* table, ljfix_format format) {
  char* text = nullptr;
  std::size_t length = 0;
  check(ljfix_table_serialize(table, format, &text, &length));
  std::string bytes(text, length);
  ljfix_string_free(text);
  return bytes;
}

// Aligned plain-text rendering used by `verify` when no format is requested.
std::string render_text(const ljfix_table* table) {
  const std::size_t cols = ljfix_table_columns(table);
  const std::size_t rows = ljfix_table_rows(table);
  std::vector<std::size_t> width(cols, 0);
  for (std::size_t c = 0; c < cols; ++c) {
    width[c] = std::string(ljfix_table_column_name(table, c)).size();
    for (std::size_t r = 0; r < rows; ++r) {
      width[c] = std::max(width[c], std::string(ljfix_table_text(table, r, c)).size());
    }
  }
  auto line = [&](auto cell) {
    std::string s;
    for (std::size_t c = 0; c < cols; ++c) {
      std::string v = cell(c);
      v.resize(width[c], ' ');
      s += v;
      s += c + 1 < cols ? "  " : "";
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + '\n';
  };
  std::string out = line([&](std::size_t c) { return std::string(ljfix_table_column_name(table, c)); });
  for (std::size_t r = 0; r < rows; ++r) {
    out += line([&](std::size_t c) { return std::string(ljfix_table_text(table, r, c)); });
  }
  return out;
}

void emit(const RunConfig& cfg, const std::string& bytes) {
  if (cfg.out.empty()) {
    std::cout << bytes << std::flush;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) throw LibraryError{LJFIX_ERR_ARGUMENT, "cannot open output file " + cfg.out};
  file << bytes;
  if (!file.flush()) throw LibraryError{LJFIX_ERR_ARGUMENT, "failed writing " + cfg.out};
}

void emit_table(const RunConfig& cfg, ljfix_table* raw) {
  TablePtr table(raw);
  emit(cfg, serialize(table.get(), output_format(cfg)));
}

CascadePtr make_cascade(const RunConfig& cfg) {
  ljfix_cascade* raw = nullptr;
  check(ljfix_cascade_build(cfg.sigma1, cfg.eps1, cfg.orders, &raw));
  return CascadePtr(raw);
}

int run_verify(const RunConfig& cfg) {
  ljfix_table* raw = nullptr;
  int all_passed = 0;
  check(ljfix_table_verify(&raw, &all_passed));
  TablePtr table(raw);
  if (cfg.json || !cfg.format.empty()) {
    emit(cfg, serialize(table.get(), output_format(cfg)));
  } else {
    emit(cfg, render_text(table.get()));
  }
  return all_passed ? kExitOk : kExitVerify;
}

int dispatch(const std::string& command, const RunConfig& cfg) {
  ljfix_table* raw = nullptr;
  if (command == "verify") return run_verify(cfg);
  if (command == "cascade") {
    auto cascade = make_cascade(cfg);
    check(ljfix_table_cascade(cascade.get(), cfg.vacancy ? 1 : 0, &raw));
  } else if (command == "crossings") {
    const double uc = cfg.uc ? *cfg.uc : -*cfg.depth;
    check(ljfix_table_crossings(cfg.sigma1, cfg.eps1, uc, &raw));
  } else if (command == "recur") {
    ljfix_trajectory* traj_raw = nullptr;
    check(ljfix_iterate(cfg.chi.value_or(0.375), cfg.delta, cfg.steps,
                        cfg.linearized ? LJFIX_MODE_LINEARIZED : LJFIX_MODE_EXACT, &traj_raw));
    TrajectoryPtr traj(traj_raw);
    check(ljfix_table_trajectory(traj.get(), &raw));
    std::cerr << "terminated_by: " << (ljfix_trajectory_diverged(traj.get()) ? "diverged" : "completed")
              << '\n';
  } else if (command == "stability") {
    check(ljfix_table_stability(*cfg.chi, &raw));
  } else if (command == "profile") {
    if (cfg.figure == "recursion") {
      check(ljfix_table_recursion_figure(cfg.figure_delta, cfg.samples, &raw));
    } else {
      auto cascade = make_cascade(cfg);
      check(ljfix_table_family(cascade.get(), cfg.q_min, cfg.q_max, cfg.samples, &raw));
    }
  } else if (command == "path") {
    auto cascade = make_cascade(cfg);
    check(ljfix_table_path(cascade.get(), &raw));
  } else if (command == "ledger") {
    check(ljfix_table_ledger(cfg.sigma1, cfg.eps1, &raw));
  } else if (command == "potential") {
    double q = 0.0;
    if (cfg.q) {
      q = *cfg.q;
    } else {
      check(ljfix_q_of_chi(cfg.sigma1, *cfg.chi, &q));
    }
    check(ljfix_table_potential(cfg.sigma1, cfg.eps1, q, &raw));
  }
  emit_table(cfg, raw);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Self-similar Lennard-Jones fixed point, recursion and cluster cascade"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--sigma1", cfg.sigma1, "diameter of the first-order curve")->capture_default_str();
  app.add_option("--eps1", cfg.eps1, "well depth")->capture_default_str();
  auto* json_flag = app.add_flag("--json", cfg.json, "emit JSON instead of CSV");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->excludes(json_flag);
  app.add_option("--out", cfg.out, "write output to FILE instead of standard output");

  app.add_subcommand("verify", "re-derive every constant and report pass/fail");

  auto* cascade = app.add_subcommand("cascade", "self-similar cluster hierarchy");
  cascade->add_option("--orders,--levels", cfg.orders, "number of orders (1..64)")->capture_default_str();
  cascade->add_flag("--vacancy", cfg.vacancy, "append the sigma1-vacancy column");

  auto* cross = app.add_subcommand("crossings", "radii where a curve reaches a level");
  auto* uc = cross->add_option("--uc", cfg.uc, "signed level in (-eps1, 0)");
  auto* depth = cross->add_option("--depth", cfg.depth, "positive depth in (0, eps1); u_c = -depth");
  uc->excludes(depth);
  cross->callback([&] {
    if (!cfg.uc && !cfg.depth) throw CLI::RequiredError("--uc or --depth");
  });

  auto* recur = app.add_subcommand("recur", "iterate the fluctuation recursion");
  recur->add_option("--chi", cfg.chi, "base chi (default 0.375)");
  recur->add_option("--delta", cfg.delta, "initial disturbance")->capture_default_str();
  recur->add_option("--steps", cfg.steps, "number of steps")->capture_default_str();
  recur->add_flag("--linearized", cfg.linearized, "use the linearized step");

  auto* stab = app.add_subcommand("stability", "stability of the recursion at chi");
  stab->add_option("--chi", cfg.chi, "reduced variable")->required();

  auto* profile = app.add_subcommand("profile", "figure tables: curve family or recursion tent");
  profile->add_option("--figure", cfg.figure, "family or recursion")
      ->check(CLI::IsMember({"family", "recursion"}))
      ->capture_default_str();
  profile->add_option("--orders,--levels", cfg.orders, "number of orders")->capture_default_str();
  profile->add_option("--q-min", cfg.q_min, "first radius")->capture_default_str();
  profile->add_option("--q-max", cfg.q_max, "last radius")->capture_default_str();
  profile->add_option("--samples", cfg.samples, "grid points")->capture_default_str();
  profile->add_option("--delta", cfg.figure_delta, "chi margin for the recursion figure")
      ->capture_default_str();

  auto* path = app.add_subcommand("path", "sharp-angled delocalization polyline");
  path->add_option("--orders,--levels", cfg.orders, "number of orders")->capture_default_str();

  app.add_subcommand("ledger", "fixed-point constants and energy ledger");

  auto* potential = app.add_subcommand("potential", "evaluate one curve at --q or --chi");
  auto* q_opt = potential->add_option("--q", cfg.q, "radius");
  auto* chi_opt = potential->add_option("--chi", cfg.chi, "reduced variable");
  q_opt->excludes(chi_opt);
  potential->callback([&] {
    if (!cfg.q && !cfg.chi) throw CLI::RequiredError("--q or --chi");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), cfg);
  } catch (const LibraryError& e) {
    std::cerr << "error: " << ljfix_status_string(e.status) << ": " << e.message << '\n';
    return kExitDomain;
  }
}
