#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "sqwell/apps.hpp"
#include "sqwell/approx.hpp"
#include "sqwell/error.hpp"
#include "sqwell/format.hpp"
#include "sqwell/reference.hpp"
#include "sqwell/series.hpp"
#include "table.hpp"

namespace sqwell::cli {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> branches;
  std::vector<std::string> methods;
  std::optional<double> p_min, p_max, p_step;
  std::optional<double> P;
  std::optional<double> well_depth, well_width, mass;
  std::string mass_preset = "electron";
  std::optional<double> work_function, fermi_energy, thickness;
  std::string format = "csv";
  std::string out;
  std::string config;
  int order = 16;
  bool text = false;
};

struct Emitted {
  std::string content;
  int status = kOk;
};

std::vector<MethodTag> parse_methods(const std::vector<std::string>& names,
                                     std::vector<std::string> fallback) {
  const auto& src = names.empty() ? fallback : names;
  std::vector<MethodTag> tags;
  for (const auto& n : src) tags.push_back(MethodTag::parse(n));
  return tags;
}

std::vector<BranchId> parse_branches(const std::vector<std::string>& names) {
  std::vector<BranchId> out;
  for (const auto& n : names) out.push_back(BranchId::parse(n));
  return out;
}

double existence_bound(BranchId b) { return bracket_for(b).existence_bound; }

std::vector<double> make_grid(const Options& o, const std::vector<BranchId>& branches) {
  double bound = std::numeric_limits<double>::infinity();
  for (auto b : branches) bound = std::min(bound, existence_bound(b));
  const double lo = o.p_min.value_or(0.0);
  const double hi = o.p_max.value_or(std::isfinite(bound) ? bound : 1.0);
  const double step = o.p_step.value_or((hi - lo) / 100.0);
  if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step) || lo < 0.0 || hi < lo ||
      !(step > 0.0 || hi == lo)) {
    throw UsageError("invalid p grid: need 0 <= p-min <= p-max and p-step > 0");
  }
  if (hi > bound) {
    throw UsageError("p-max " + format_number(hi) + " exceeds the existence bound " +
                     format_number(bound));
  }
  std::vector<double> grid;
  if (hi == lo) return {lo};
  const auto count = static_cast<long long>(std::floor((hi - lo) / step * (1.0 + 1e-12))) + 1;
  if (count > 10000000) throw UsageError("p grid too large");
  for (long long i = 0; i < count; ++i) grid.push_back(lo + static_cast<double>(i) * step);
  return grid;
}

double try_root(BranchId b, double p, MethodTag tag) {
  try {
    return approximate(b, p, tag).x;
  } catch (const Error&) {
    return nan;
  }
}

WellSpec well_from_options(const Options& o) {
  if (o.P) {
    if (o.well_depth || o.well_width) throw UsageError("--P excludes --well-depth/--well-width");
    return WellSpec::reduced(*o.P);
  }
  if (!o.well_depth || !o.well_width) {
    throw UsageError("give --P or both --well-depth and --well-width");
  }
  if (o.mass_preset == "electron") {
    return WellSpec(*o.well_depth, *o.well_width, o.mass.value_or(1.0),
                    ZeroConvention::BottomAtZero, units::electron_nm_ev);
  }
  if (o.mass_preset == "si") {
    return WellSpec(*o.well_depth, *o.well_width, o.mass.value_or(constants::electron_mass_si),
                    ZeroConvention::BottomAtZero, units::si);
  }
  if (o.mass_preset == "reduced") {
    return WellSpec(*o.well_depth, *o.well_width, o.mass.value_or(1.0),
                    ZeroConvention::BottomAtZero, units::reduced);
  }
  throw UsageError("unknown mass preset '" + o.mass_preset + "'");
}

Table roots_table(const Options& o) {
  const auto branches = parse_branches(o.branches);
  const auto methods = parse_methods(o.methods, {"exact"});
  const auto grid = make_grid(o, branches);
  Table t;
  t.columns = {"branch", "p"};
  for (const auto& m : methods) t.columns.push_back("x_" + m.name());
  for (auto b : branches) {
    for (double p : grid) {
      std::vector<Cell> row{b.label(), p};
      for (const auto& m : methods) row.emplace_back(try_root(b, p, m));
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

Table residuals_table(const Options& o) {
  if (o.branches.size() != 1) throw UsageError("residuals takes exactly one --branch");
  const BranchId b = BranchId::parse(o.branches.front());
  const auto methods = parse_methods(o.methods, {"sp", "ip", "cubic", "barker"});
  const auto grid = make_grid(o, {b});
  Table t;
  t.columns = {"p"};
  for (const auto& m : methods) t.columns.push_back(m.name());
  t.columns.push_back("reference");
  for (double p : grid) {
    std::vector<Cell> row{p};
    for (const auto& m : methods) {
      const double x = try_root(b, p, m);
      row.emplace_back(std::isfinite(x) ? defining_function(b.family, x) : nan);
    }
    row.emplace_back(b.sign() * p);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table spectrum_table(const SpectrumReport& report, const std::vector<MethodTag>& methods) {
  Table t;
  t.columns = {"n",        "branch",   "parity",     "matched",  "x_root",
               "E_top",    "E_bottom", "E_infinite", "E_garrett"};
  for (const auto& m : methods) {
    t.columns.push_back(m.name() + "_E");
    t.columns.push_back(m.name() + "_rel");
  }
  for (const auto& r : report.rows) {
    std::vector<Cell> row{static_cast<long long>(r.n),
                          r.branch.label(),
                          std::string(r.parity == Parity::Even ? "even" : "odd"),
                          r.matched,
                          r.x_root,
                          r.E_top,
                          r.E_bottom,
                          r.E_infinite,
                          r.E_garrett};
    for (const auto& c : r.cells) {
      row.emplace_back(c.exists ? c.E_bottom : nan);
      row.emplace_back(c.exists ? c.rel_dev : nan);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table coeffs_table(const SeriesTable& table) {
  Table t;
  t.columns = {"m", "power", "coefficient", "value"};
  for (int m = 0; m <= table.max_order; ++m) {
    const auto& c = table.q(m).coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (sgn(c[k]) == 0) continue;
      t.rows.push_back({static_cast<long long>(m), static_cast<long long>(k),
                        format_rational(c[k]), c[k].get_d()});
    }
  }
  return t;
}

Emitted verify_report(Format format) {
  Table t;
  t.columns = {"item", "status", "detail"};
  bool ok = true;
  const auto report = verify_against_published(default_table());
  for (const auto& e : report.entries) {
    std::string detail;
    for (const auto& mm : e.mismatches) {
      if (!detail.empty()) detail += "; ";
      detail += "b^" + std::to_string(mm.power) + " printed " + format_rational(mm.printed) +
                " computed " + format_rational(mm.computed);
    }
    const std::string status = !e.verifiable ? "SKIP" : e.pass ? "PASS" : "FAIL";
    if (status == "FAIL") ok = false;
    t.rows.push_back({"q" + std::to_string(e.m), status, detail});
  }
  constexpr double tol = 2e-4;
  for (const auto& d : printed::cubic_displays()) {
    const CubicDisplayForm f = display_form(cubic_coefficients(d.branch));
    const double got[] = {f.c0, f.amp, f.d0, f.d1};
    const double want[] = {d.c0, d.amp, d.d0, d.d1};
    const char* names[] = {"c0", "amp", "d0", "d1"};
    bool pass = true;
    std::string detail;
    for (int i = 0; i < 4; ++i) {
      const bool good = std::abs(got[i] - want[i]) <= tol;
      pass = pass && good;
      char buf[96];
      std::snprintf(buf, sizeof buf, "%s%s %.5f/%.5f%s", i ? "; " : "", names[i], got[i],
                    want[i], good ? "" : " !");
      detail += buf;
    }
    std::string status = pass ? "PASS" : (d.known_discrepancy ? "WARN" : "FAIL");
    if (status == "FAIL") ok = false;
    t.rows.push_back({std::string(d.tag) + " " + d.branch.label(), status,
                      "computed/printed " + detail});
  }
  std::ostringstream s;
  write_table(s, t, format);
  return {s.str(), ok ? kOk : kInternal};
}

void add_grid(CLI::App* sub, Options& o) {
  sub->add_option("--p-min", o.p_min, "First p of the grid (>= 0)");
  sub->add_option("--p-max", o.p_max, "Last p of the grid (<= existence bound, closed)");
  sub->add_option("--p-step", o.p_step, "Grid spacing");
}

void add_output(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", o.out, "Output file (written atomically); stdout if absent");
}

void add_methods(CLI::App* sub, Options& o) {
  sub->add_option("--method", o.methods, "exact|sp|ip|cubic|barker|seriesN|garrett")
      ->delimiter(',');
}

void add_well(CLI::App* sub, Options& o) {
  sub->add_option("--P", o.P, "Dimensionless strength (reduced units)");
  sub->add_option("--well-depth", o.well_depth, "Well depth U");
  sub->add_option("--well-width", o.well_width, "Well width a");
  sub->add_option("--mass-preset", o.mass_preset,
                  "electron (eV, nm, m_e) | si (J, m, kg) | reduced");
  sub->add_option("--mass", o.mass, "Particle mass in preset units");
}

// Flat key=value file; keys are long option names without dashes. Keys
// already given on the command line are skipped.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  const auto given = [&](const std::string& flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
  };
  std::vector<std::string> extra;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    const auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string flag = "--" + key;
    if (key == "config" || given(flag)) continue;
    extra.push_back(flag);
    extra.push_back(value);
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite square well roots, approximations and series coefficients", "sqwell"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "sqwell 0.1.0");

  auto* roots = app.add_subcommand("roots", "Roots X(p) of one or more branches on a p grid");
  roots->add_option("--branch", o.branches, "xi:N or zeta:N")->required()->delimiter(',');
  add_methods(roots, o);
  add_grid(roots, o);
  add_output(roots, o);

  auto* residuals = app.add_subcommand(
      "residuals", "cos X/X or sin X/X per method against the reference +-p");
  residuals->add_option("--branch", o.branches, "xi:N or zeta:N")->required();
  add_methods(residuals, o);
  add_grid(residuals, o);
  add_output(residuals, o);

  auto* coeffs = app.add_subcommand("coeffs", "Exact series coefficients q_m(b)");
  coeffs->add_option("--order", o.order, "Highest m")->check(CLI::Range(0, 200));
  coeffs->add_flag("--text", o.text, "Archival num/den text format instead of csv/json");
  add_output(coeffs, o);

  auto* spectrum = app.add_subcommand(
      "spectrum",
      "Bound levels of a well. At p exactly equal to a branch threshold the level is "
      "counted (closed interval) but carries no interior root.");
  add_well(spectrum, o);
  add_methods(spectrum, o);
  add_output(spectrum, o);

  auto* film = app.add_subcommand("film", "Subbands of a freestanding film (eV, nm, m_e)");
  film->add_option("--work-function", o.work_function, "W_m in eV")->required();
  film->add_option("--fermi-energy", o.fermi_energy, "E_F in eV")->required();
  film->add_option("--thickness", o.thickness, "Film thickness in nm")->required();
  film->add_option("--mass", o.mass, "Effective mass in electron masses");
  add_methods(film, o);
  add_output(film, o);

  auto* verify = app.add_subcommand("verify", "Check q_0..q_16 and the cubic constants");
  add_output(verify, o);

  for (auto* sub : {roots, residuals, coeffs, spectrum, film, verify}) {
    sub->add_option("--config", o.config, "key=value file; command-line flags win");
  }

  try {
    auto args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const Format format = o.format == "json" ? Format::Json : Format::Csv;
  try {
    Emitted result;
    const auto render = [&](const Table& t) {
      std::ostringstream s;
      write_table(s, t, format);
      return s.str();
    };
    if (*roots) {
      result.content = render(roots_table(o));
    } else if (*residuals) {
      result.content = render(residuals_table(o));
    } else if (*coeffs) {
      const SeriesTable table = o.order <= 16 ? default_table() : generate_q_table(o.order);
      SeriesTable cut = table;
      cut.max_order = o.order;
      cut.polys.resize(static_cast<std::size_t>(o.order) + 1);
      result.content = o.text ? export_table(cut) : render(coeffs_table(cut));
    } else if (*spectrum) {
      const auto methods = parse_methods(o.methods, {"sp", "ip", "cubic", "barker"});
      result.content = render(spectrum_table(spectrum_report(well_from_options(o), methods), methods));
    } else if (*film) {
      const auto methods = parse_methods(o.methods, {"sp", "ip", "cubic", "barker"});
      FilmSpec spec{*o.work_function, *o.fermi_energy, *o.thickness, o.mass.value_or(1.0)};
      result.content = render(spectrum_table(film_subbands(spec, methods), methods));
    } else if (*verify) {
      result = verify_report(format);
    }
    if (o.out.empty()) {
      out << result.content;
    } else {
      write_atomically(o.out, result.content);
    }
    return result.status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace sqwell::cli
