#include "ljfix/ljfix.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <variant>
#include <vector>

#include "ljfix/cascade.hpp"
#include "ljfix/error.hpp"
#include "ljfix/potential.hpp"
#include "ljfix/profile.hpp"
#include "ljfix/recursion.hpp"
#include "ljfix/table.hpp"
#include "ljfix/verify.hpp"

struct ljfix_trajectory {
  ljfix::FluctuationTrajectory value;
};

struct ljfix_cascade {
  std::vector<ljfix::CascadeLevel> levels;
  double eps1;
};

struct ljfix_table {
  ljfix::Table value;
  std::vector<std::vector<std::string>> text;  // CSV rendering, filled on construction
};

namespace {

thread_local std::string last_error;

ljfix_status status_of(ljfix::ErrorCode code) {
  switch (code) {
    case ljfix::ErrorCode::domain: return LJFIX_ERR_DOMAIN;
    case ljfix::ErrorCode::argument: return LJFIX_ERR_ARGUMENT;
    case ljfix::ErrorCode::level_out_of_range: return LJFIX_ERR_LEVEL_OUT_OF_RANGE;
    case ljfix::ErrorCode::degenerate_level: return LJFIX_ERR_DEGENERATE_LEVEL;
  }
  return LJFIX_ERR_INTERNAL;
}

ljfix_status fail(ljfix_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class Fn>
ljfix_status guarded(Fn&& fn) noexcept {
  try {
    last_error.clear();
    fn();
    return LJFIX_OK;
  } catch (const ljfix::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LJFIX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LJFIX_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LJFIX_ERR_INTERNAL, "unknown error");
  }
}

#define LJFIX_REQUIRE(ptr)                                               \
  do {                                                                   \
    if ((ptr) == nullptr) return fail(LJFIX_ERR_NULL_POINTER, #ptr " is null"); \
  } while (0)

struct CellText {
  std::string operator()(std::monostate) const { return {}; }
  std::string operator()(double v) const { return ljfix::format_number(v); }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(const std::string& v) const { return v; }
};

ljfix_table* make_table(ljfix::Table table) {
  auto* handle = new ljfix_table{std::move(table), {}};
  for (const auto& row : handle->value.rows) {
    auto& line = handle->text.emplace_back();
    for (const auto& cell : row) line.push_back(std::visit(CellText{}, cell));
  }
  return handle;
}

ljfix::StepMode to_mode(ljfix_mode mode) {
  if (mode == LJFIX_MODE_EXACT) return ljfix::StepMode::exact;
  if (mode == LJFIX_MODE_LINEARIZED) return ljfix::StepMode::linearized;
  throw ljfix::ArgumentError("unknown recursion mode");
}

ljfix_point to_point(ljfix::ReducedPoint p) { return {p.chi, p.f}; }

}  // namespace

extern "C" {

LJFIX_API unsigned ljfix_abi_version(void) { return LJFIX_ABI_VERSION; }

LJFIX_API const char* ljfix_status_string(ljfix_status status) {
  switch (status) {
    case LJFIX_OK: return "ok";
    case LJFIX_ERR_DOMAIN: return "domain error";
    case LJFIX_ERR_ARGUMENT: return "argument error";
    case LJFIX_ERR_LEVEL_OUT_OF_RANGE: return "level out of range";
    case LJFIX_ERR_DEGENERATE_LEVEL: return "degenerate level";
    case LJFIX_ERR_NULL_POINTER: return "null pointer";
    case LJFIX_ERR_INDEX: return "index out of range";
    case LJFIX_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

LJFIX_API const char* ljfix_last_error(void) { return last_error.c_str(); }

LJFIX_API ljfix_status ljfix_evaluate(double sigma, double epsilon, double q, double* out) {
  LJFIX_REQUIRE(out);
  return guarded([&] { *out = ljfix::evaluate(ljfix::PotentialSpec(sigma, epsilon), q); });
}

LJFIX_API ljfix_status ljfix_chi_of(double sigma, double q, double* out) {
  LJFIX_REQUIRE(out);
  return guarded([&] { *out = ljfix::chi_of(ljfix::PotentialSpec(sigma, 1.0), q); });
}

LJFIX_API ljfix_status ljfix_q_of_chi(double sigma, double chi, double* out) {
  LJFIX_REQUIRE(out);
  return guarded([&] { *out = ljfix::q_of_chi(ljfix::PotentialSpec(sigma, 1.0), chi); });
}

LJFIX_API double ljfix_f_reduced(double chi) { return ljfix::f_reduced(chi); }

LJFIX_API ljfix_status ljfix_crossings(double sigma, double epsilon, double u_c,
                                       ljfix_crossing_pair* out) {
  LJFIX_REQUIRE(out);
  return guarded([&] {
    const auto pair = ljfix::crossings(ljfix::PotentialSpec(sigma, epsilon), u_c);
    *out = {pair.u_c, pair.q_left, pair.q_right};
  });
}

LJFIX_API double ljfix_step_exact(double chi, double delta) { return ljfix::step_exact(chi, delta); }

LJFIX_API double ljfix_step_linear(double chi, double delta) {
  return ljfix::step_linear(chi, delta);
}

LJFIX_API ljfix_status ljfix_iterate(double chi, double delta0, int n_steps, ljfix_mode mode,
                                     ljfix_trajectory** out) {
  LJFIX_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new ljfix_trajectory{ljfix::iterate(chi, delta0, n_steps, to_mode(mode))};
  });
}

LJFIX_API size_t ljfix_trajectory_size(const ljfix_trajectory* trajectory) {
  return trajectory ? trajectory->value.steps.size() : 0;
}

LJFIX_API ljfix_status ljfix_trajectory_step(const ljfix_trajectory* trajectory, size_t i,
                                             ljfix_step* out) {
  LJFIX_REQUIRE(trajectory);
  LJFIX_REQUIRE(out);
  if (i >= trajectory->value.steps.size()) return fail(LJFIX_ERR_INDEX, "step index out of range");
  const auto& s = trajectory->value.steps[i];
  *out = {s.index, s.delta, s.f_value};
  return LJFIX_OK;
}

LJFIX_API int ljfix_trajectory_diverged(const ljfix_trajectory* trajectory) {
  return trajectory && trajectory->value.terminated_by == ljfix::Termination::diverged;
}

LJFIX_API void ljfix_trajectory_free(ljfix_trajectory* trajectory) { delete trajectory; }

LJFIX_API ljfix_status ljfix_stability_at(double chi, ljfix_stability_report* out) {
  LJFIX_REQUIRE(out);
  const auto r = ljfix::stability_at(chi);
  *out = {r.chi, r.slope, r.s, static_cast<ljfix_stability>(r.classification)};
  return LJFIX_OK;
}

LJFIX_API ljfix_status ljfix_bifurcation_constants_get(ljfix_bifurcation_constants* out) {
  LJFIX_REQUIRE(out);
  const auto c = ljfix::bifurcation_constants();
  *out = {c.chi_plus, c.chi_minus, c.u_c_star, to_point(c.deep_point), c.qiee};
  return LJFIX_OK;
}

LJFIX_API ljfix_status ljfix_self_similar_points(ljfix_point out[2]) {
  LJFIX_REQUIRE(out);
  return guarded([&] {
    const auto pts = ljfix::self_similar_points();
    out[0] = to_point(pts[0]);
    out[1] = to_point(pts[1]);
  });
}

LJFIX_API ljfix_status ljfix_tangent_intersection(ljfix_point* out) {
  LJFIX_REQUIRE(out);
  *out = to_point(ljfix::tangent_intersection());
  return LJFIX_OK;
}

LJFIX_API ljfix_status ljfix_cascade_build(double sigma1, double eps1, int max_orders,
                                           ljfix_cascade** out) {
  LJFIX_REQUIRE(out);
  *out = nullptr;
  return guarded(
      [&] { *out = new ljfix_cascade{ljfix::build_cascade(sigma1, eps1, max_orders), eps1}; });
}

LJFIX_API size_t ljfix_cascade_size(const ljfix_cascade* cascade) {
  return cascade ? cascade->levels.size() : 0;
}

LJFIX_API ljfix_status ljfix_cascade_level_at(const ljfix_cascade* cascade, size_t i,
                                              ljfix_cascade_level* out) {
  LJFIX_REQUIRE(cascade);
  LJFIX_REQUIRE(out);
  if (i >= cascade->levels.size()) return fail(LJFIX_ERR_INDEX, "level index out of range");
  const auto& l = cascade->levels[i];
  *out = {l.order,     l.sigma(),   l.spec.epsilon(),           l.q_left,
          l.q_right,   l.gap_prev.has_value() ? 1 : 0,          l.gap_prev.value_or(0.0),
          l.lindemann.value_or(0.0)};
  return LJFIX_OK;
}

LJFIX_API void ljfix_cascade_free(ljfix_cascade* cascade) { delete cascade; }

LJFIX_API double ljfix_lindemann_ratio(void) { return ljfix::lindemann_ratio(); }

LJFIX_API ljfix_status ljfix_order_count(double sigma1, int* out) {
  LJFIX_REQUIRE(out);
  return guarded([&] { *out = ljfix::order_count(sigma1); });
}

LJFIX_API ljfix_status ljfix_vacancy_check(const ljfix_cascade* cascade, double sigma1, int* flags,
                                           size_t n_flags) {
  LJFIX_REQUIRE(cascade);
  LJFIX_REQUIRE(flags);
  if (n_flags != cascade->levels.size()) {
    return fail(LJFIX_ERR_ARGUMENT, "flags buffer size must equal the number of levels");
  }
  return guarded([&] {
    const auto fits = ljfix::vacancy_check(cascade->levels, sigma1);
    for (std::size_t i = 0; i < fits.size(); ++i) flags[i] = fits[i] ? 1 : 0;
  });
}

LJFIX_API ljfix_status ljfix_energy_ledger_for(double eps1, ljfix_energy_ledger* out) {
  LJFIX_REQUIRE(out);
  return guarded([&] {
    const auto l = ljfix::energy_ledger(eps1);
    *out = {l.u_c_star, l.qiee, l.deep_attractive, l.e_c, l.k_t_c};
  });
}

LJFIX_API ljfix_status ljfix_table_cascade(const ljfix_cascade* cascade, int with_vacancy,
                                           ljfix_table** out) {
  LJFIX_REQUIRE(cascade);
  LJFIX_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const std::span<const ljfix::CascadeLevel> levels{cascade->levels};
    if (with_vacancy) {
      *out = make_table(ljfix::to_table(levels, ljfix::vacancy_check(levels, levels.front().sigma())));
    } else {
      *out = make_table(ljfix::to_table(levels));
    }
  });
}

LJFIX_API ljfix_status ljfix_table_family(const ljfix_cascade* cascade, double q_min, double q_max,
                                          int n_samples, ljfix_table** out) {
  LJFIX_REQUIRE(cascade);
  LJFIX_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const auto rows = ljfix::sample_family(cascade->levels, q_min, q_max, n_samples);
    *out = make_table(ljfix::to_table(std::span{rows}));
  });
}

LJFIX_API ljfix_status ljfix_table_path(const ljfix_cascade* cascade, ljfix_table** out) {
  LJFIX_REQUIRE(cascade);
  LJFIX_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const auto path = ljfix::delocalization_path(cascade->levels, cascade->eps1);
    *out = make_table(ljfix::to_table(std::span{path}));
  });
}

LJFIX_API ljfix_status ljfix_table_recursion_figure(double delta0, int n_samples,
                                                    ljfix_table** out) {
  LJFIX_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const auto rows = ljfix::recursion_figure(delta0, n_samples);
    *out = make_table(ljfix::to_table(std::span{rows}));
  });
}

LJFIX_API ljfix_status ljfix_table_trajectory(const ljfix_trajectory* trajectory,
                                              ljfix_table** out) {
  LJFIX_REQUIRE(trajectory);
  LJFIX_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = make_table(ljfix::to_table(trajectory->value)); });
}

LJFIX_API ljfix_status ljfix_table_crossings(double sigma, double epsilon, double u_c,
                                             ljfix_table** out) {
  LJFIX_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const ljfix::PotentialSpec spec(sigma, epsilon);
    *out = make_table(ljfix::to_table(ljfix::crossings(spec, u_c), spec));
  });
}

LJFIX_API ljfix_status ljfix_table_stability(double chi, ljfix_table** out) {
  LJFIX_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = make_table(ljfix::to_table(ljfix::stability_at(chi))); });
}

LJFIX_API ljfix_status ljfix_table_potential(double sigma, double epsilon, double q,
                                             ljfix_table** out) {
  LJFIX_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const ljfix::PotentialSpec spec(sigma, epsilon);
    const double chi = ljfix::chi_of(spec, q);
    ljfix::Table t{{"q", "chi", "u", "f"}, {}};
    t.rows.push_back({q, chi, ljfix::evaluate(spec, q), ljfix::f_reduced(chi)});
    *out = make_table(std::move(t));
  });
}

LJFIX_API ljfix_status ljfix_table_ledger(double sigma1, double eps1, ljfix_table** out) {
  LJFIX_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const auto entries = ljfix::ledger_entries(sigma1, eps1);
    *out = make_table(ljfix::to_table(std::span{entries}));
  });
}

LJFIX_API ljfix_status ljfix_table_verify(ljfix_table** out, int* all_passed) {
  LJFIX_REQUIRE(out);
  LJFIX_REQUIRE(all_passed);
  *out = nullptr;
  return guarded([&] {
    const auto checks = ljfix::run_verification();
    *all_passed = 1;
    for (const auto& c : checks) {
      if (!c.passed) *all_passed = 0;
    }
    *out = make_table(ljfix::to_table(std::span{checks}));
  });
}

LJFIX_API size_t ljfix_table_rows(const ljfix_table* table) {
  return table ? table->value.rows.size() : 0;
}

LJFIX_API size_t ljfix_table_columns(const ljfix_table* table) {
  return table ? table->value.columns.size() : 0;
}

LJFIX_API const char* ljfix_table_column_name(const ljfix_table* table, size_t column) {
  if (!table || column >= table->value.columns.size()) return nullptr;
  return table->value.columns[column].c_str();
}

LJFIX_API const char* ljfix_table_text(const ljfix_table* table, size_t row, size_t column) {
  if (!table || row >= table->text.size() || column >= table->text[row].size()) return nullptr;
  return table->text[row][column].c_str();
}

LJFIX_API ljfix_status ljfix_table_number(const ljfix_table* table, size_t row, size_t column,
                                          double* out) {
  LJFIX_REQUIRE(table);
  LJFIX_REQUIRE(out);
  if (row >= table->value.rows.size() || column >= table->value.columns.size()) {
    return fail(LJFIX_ERR_INDEX, "cell index out of range");
  }
  const auto& cell = table->value.rows[row][column];
  if (const auto* d = std::get_if<double>(&cell)) {
    *out = *d;
  } else if (const auto* i = std::get_if<std::int64_t>(&cell)) {
    *out = static_cast<double>(*i);
  } else {
    return fail(LJFIX_ERR_ARGUMENT, "cell is empty or not numeric");
  }
  return LJFIX_OK;
}

LJFIX_API ljfix_status ljfix_table_serialize(const ljfix_table* table, ljfix_format format,
                                             char** out, size_t* length) {
  LJFIX_REQUIRE(table);
  LJFIX_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    if (format != LJFIX_FORMAT_CSV && format != LJFIX_FORMAT_JSON) {
      throw ljfix::ArgumentError("unknown output format");
    }
    const std::string bytes = ljfix::serialize(
        table->value, format == LJFIX_FORMAT_CSV ? ljfix::Format::csv : ljfix::Format::json);
    char* buffer = static_cast<char*>(std::malloc(bytes.size() + 1));
    if (!buffer) throw std::bad_alloc();
    std::memcpy(buffer, bytes.data(), bytes.size() + 1);
    *out = buffer;
    if (length) *length = bytes.size();
  });
}

LJFIX_API void ljfix_table_free(ljfix_table* table) { delete table; }

LJFIX_API void ljfix_string_free(char* text) { std::free(text); }

}  // extern "C"
