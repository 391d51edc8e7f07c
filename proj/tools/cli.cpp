#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fextlab/analysis/lebesgue.hpp"
#include "fextlab/analysis/remez.hpp"
#include "fextlab/arcpoly/asymptotics.hpp"
#include "fextlab/arcpoly/kernel.hpp"
#include "fextlab/errors.hpp"
#include "fextlab/fourext/extension.hpp"
#include "fextlab/geometry/mapped_ellipse.hpp"
#include "fextlab/harness/config.hpp"
#include "fextlab/harness/experiment.hpp"
#include "fextlab/harness/functions.hpp"
#include "fextlab/harness/svg.hpp"

namespace fextlab::cli {

namespace {

using harness::Settings;
using mp::MpReal;

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

/// Raw flag values; empty options were not given.
struct Flags {
  std::string config;
  std::string T;
  std::string N;
  std::string precision_bits;
  std::string epsilon;
  std::string out;
  std::string function;
  std::string x;
  bool csv = false;
  bool svg = false;
};

void add_flags(CLI::App& app, Flags& f) {
  app.add_option("--config", f.config, "key=value settings file (default: ./fextlab.cfg if present)");
  app.add_option("--T", f.T, "extension period parameter T > 1");
  app.add_option("--N", f.N, "comma-separated odd N list");
  app.add_option("--precision-bits", f.precision_bits, "working precision in bits (default max(256, 24N))");
  app.add_option("--epsilon", f.epsilon, "eigenvalue cutoff for the regularized solver");
  app.add_option("--out", f.out, "output directory");
  app.add_option("--function", f.function, "function spec, e.g. exp, pole(0.6), spline(3)");
  app.add_option("--x", f.x, "comma-separated evaluation abscissae");
  app.add_flag("--csv", f.csv, "write CSV output (alone: CSV only)");
  app.add_flag("--svg", f.svg, "write SVG output (alone: SVG only)");
}

Settings resolve(const Flags& f) {
  Settings s;
  if (!f.config.empty()) {
    harness::apply_settings(s, harness::load_config_file(f.config));
  } else if (std::filesystem::exists(harness::kDefaultConfigFile)) {
    harness::apply_settings(s, harness::load_config_file(harness::kDefaultConfigFile));
  }
  harness::apply_environment(s);
  std::map<std::string, std::string> flags;
  if (!f.T.empty()) flags["T"] = f.T;
  if (!f.N.empty()) flags["N"] = f.N;
  if (!f.precision_bits.empty()) flags["precision_bits"] = f.precision_bits;
  if (!f.epsilon.empty()) flags["epsilon"] = f.epsilon;
  if (!f.out.empty()) flags["out"] = f.out;
  if (!f.function.empty()) flags["function"] = f.function;
  if (!f.x.empty()) flags["x"] = f.x;
  if (f.csv || f.svg) {
    flags["csv"] = f.csv ? "true" : "false";
    flags["svg"] = f.svg ? "true" : "false";
  }
  harness::apply_settings(s, flags);
  if (!(s.T > 1.0)) throw UsageError("T must exceed 1");
  if (s.Ns.empty()) throw UsageError("empty N list");
  return s;
}

void require_odd(const std::vector<int>& Ns) {
  for (int N : Ns) {
    if (N < 1 || N % 2 == 0) throw UsageError("N must be odd and positive, got " + std::to_string(N));
  }
}

int max_of(const std::vector<int>& v) { return *std::max_element(v.begin(), v.end()); }

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> g;
  for (int i = 0; i < count; ++i) g.push_back(lo + (hi - lo) * i / (count - 1));
  return g;
}

void write_text(const std::filesystem::path& path, const std::string& text, std::ostream& out) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
  out << "wrote " << path.string() << '\n';
}

int cmd_extend(const Settings& s, std::ostream& out) {
  require_odd(s.Ns);
  const harness::TestFunction tf = harness::make_function(s.function);
  const Function g = tf.f.mapped_from(tf.a, tf.b);
  const auto grid = linspace(-1.0, 1.0, 1001);
  for (int N : s.Ns) {
    FEProblem p = FEProblem::with_N(s.T, N, s.precision_bits);
    p.a = tf.a;
    p.b = tf.b;
    FitOptions fo;
    fo.rhs.tolerance = tf.rhs_tolerance;
    Extension ext;
    if (s.epsilon) {
      ext = solve_regularized(assemble(tf.f, p, fo.rhs), *s.epsilon);
    } else {
      ext = fit(tf.f, p, fo);
    }
    out << "function " << tf.id << " on [" << tf.a << ", " << tf.b << "], T = " << s.T << ", N = " << N
        << ", precision " << ext.solve_precision << " bits";
    if (ext.epsilon) out << ", epsilon " << *ext.epsilon << " keeps " << ext.retained_count << " of " << N;
    out << '\n';
    for (int k = -ext.n(); k <= ext.n(); ++k) {
      const auto& c = ext.coefficient(k);
      out << "c_" << k << " = " << c.re.to_string(20);
      if (!c.im.is_zero()) {
        out << (c.im < 0.0 ? " - " : " + ") << abs(c.im).to_string(20) << " i";
      }
      out << '\n';
    }
    const ErrorNorms e = error_norms(g, ext, grid);
    out << "sup error = " << fmt("%.3e", sup_error(g, ext, grid)) << ", L2 error = " << fmt("%.3e", e.l2) << '\n';
  }
  return kExitOk;
}

int cmd_kernel(const Settings& s, std::ostream& out) {
  require_odd(s.Ns);
  const auto basis = analysis::build_arc_basis(s.T, max_of(s.Ns));
  const int bits = basis.precision();
  out << "T,N,x,y,K_N,closed_form\n";
  for (int N : s.Ns) {
    for (double x : s.xs) {
      for (double y : linspace(-1.0, 1.0, 9)) {
        const auto k = arc::cd_kernel(MpReal(x, bits), MpReal(y, bits), basis, N);
        out << s.T << ',' << N << ',' << x << ',' << y << ',' << k.value.to_string(17) << ','
            << (k.closed_form ? "true" : "false") << '\n';
      }
    }
  }
  return kExitOk;
}

std::vector<analysis::LebesgueRecord> lebesgue_rows(double T, const std::vector<int>& Ns,
                                                    const std::vector<double>& xs) {
  require_odd(Ns);
  const arc::ArcRecurrence rec(analysis::build_arc_basis(T, max_of(Ns)));
  std::vector<analysis::LebesgueRecord> rows;
  for (int N : Ns) {
    for (double x : xs) {
      if (std::abs(x) > 1.0) throw UsageError("Lebesgue abscissa must lie in [-1, 1]");
      rows.push_back(analysis::lebesgue_function(x, N, rec));
    }
  }
  return rows;
}

std::string lebesgue_csv(double T, const std::vector<analysis::LebesgueRecord>& rows) {
  std::ostringstream os;
  os << "T,N,x,lambda,panels\n";
  for (const auto& r : rows) {
    os << T << ',' << r.N << ',' << r.x << ',' << fmt("%.10g", r.value) << ',' << r.panels << '\n';
  }
  return os.str();
}

int cmd_lebesgue(const Settings& s, std::ostream& out) {
  out << lebesgue_csv(s.T, lebesgue_rows(s.T, s.Ns, s.xs));
  return kExitOk;
}

std::function<double(double)> real_on_unit(const harness::TestFunction& tf) {
  if (!tf.f.is_real) throw UsageError("minimax needs a real function; " + tf.id + " is complex");
  const Function g = tf.f.mapped_from(tf.a, tf.b);
  return [g](double x) { return g(x).real(); };
}

std::string remez_csv(double T, const std::string& id, const std::function<double(double)>& f,
                      const std::vector<int>& Ns) {
  std::ostringstream os;
  os << "function,T,N,E,iterations,alternation_points\n";
  for (int N : Ns) {
    const auto r = analysis::remez(f, N, T);
    os << id << ',' << T << ',' << N << ',' << fmt("%.10e", r.E) << ',' << r.iterations << ','
       << r.alternation_points.size() << '\n';
  }
  return os.str();
}

int cmd_remez(const Settings& s, std::ostream& out) {
  require_odd(s.Ns);
  const auto tf = harness::make_function(s.function);
  out << remez_csv(s.T, tf.id, real_on_unit(tf), s.Ns);
  return kExitOk;
}

struct AsymRow {
  int N;
  double x;
  arc::AsymEval asym;
  std::complex<double> exact;
  /// |asym - exact|; the O(N^-1) and O(N^-1/2) terms are absolute.
  double deviation;
};

std::vector<AsymRow> asym_rows(double T, const std::vector<std::pair<int, double>>& cases) {
  int top = 0;
  for (const auto& c : cases) top = std::max(top, c.first);
  const auto basis = analysis::build_arc_basis(T, top);
  std::vector<AsymRow> rows;
  for (const auto& [N, x] : cases) {
    if (std::abs(x) > 1.0) throw UsageError("asymptotic abscissa must lie in [-1, 1]");
    const auto a = std::abs(x) <= 1.0 - arc::kRegimeDelta ? arc::asym_bulk(x, N, T) : arc::asym_edge(x, N, T);
    const auto exact = basis.on_arc(N, MpReal(x, basis.precision())).to_complex();
    rows.push_back({N, x, a, exact, std::abs(a.value - exact)});
  }
  return rows;
}

std::string asym_csv(double T, const std::vector<AsymRow>& rows) {
  std::ostringstream os;
  os << "T,N,x,regime,exact_re,exact_im,asym_re,asym_im,abs_deviation\n";
  for (const auto& r : rows) {
    os << T << ',' << r.N << ',' << fmt("%.10g", r.x) << ',' << (r.asym.regime == arc::Regime::bulk ? "bulk" : "edge")
       << ',' << fmt("%.12e", r.exact.real()) << ',' << fmt("%.12e", r.exact.imag()) << ','
       << fmt("%.12e", r.asym.value.real()) << ',' << fmt("%.12e", r.asym.value.imag()) << ','
       << fmt("%.6e", r.deviation) << '\n';
  }
  return os.str();
}

int cmd_asym(const Settings& s, std::ostream& out) {
  std::vector<std::pair<int, double>> cases;
  for (int N : s.Ns) {
    if (N < 1) throw UsageError("N must be positive");
    for (double x : s.xs) cases.push_back({N, x});
  }
  out << asym_csv(s.T, asym_rows(s.T, cases));
  return kExitOk;
}

void print_fits(const harness::ExperimentRecord& rec, std::ostream& out) {
  out << "function,x_tag,method,slope,envelope_slope,rho,predicted\n";
  for (const auto& f : rec.fits) {
    out << f.function << ',' << f.x_tag << ',' << f.method << ',' << fmt("%.4f", f.slope) << ','
        << (rec.spec.exponential ? std::string() : fmt("%.4f", f.envelope_slope)) << ','
        << (rec.spec.exponential ? fmt("%.4f", f.rho) : std::string()) << ','
        << (f.predicted ? fmt("%.4f", *f.predicted) : std::string(f.inverse_log ? "1/log N" : "")) << '\n';
  }
}

void run_named(const std::string& name, const Settings& s, bool overrides, std::ostream& out, std::ostream& err) {
  harness::ExperimentSpec spec = harness::experiment_spec(name);
  if (overrides) {
    spec.T = s.T;
    spec.Ns = s.Ns;
  }
  spec.precision_bits = s.precision_bits;
  const auto started = std::chrono::steady_clock::now();
  const auto rec = harness::run_experiment(spec, [&err](const std::string& m) { err << m << '\n'; });
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  out << "experiment " << name << ": " << rec.rows.size() << " rows in " << fmt("%.1f", secs) << " s\n";
  print_fits(rec, out);
  for (const auto& path : harness::write_outputs(rec, s.out, s.csv, s.svg)) out << "wrote " << path << '\n';
}

void lebesgue_figure(const Settings& s, std::ostream& out) {
  const double T = 2.0;
  const std::vector<int> Ns{17, 33, 65, 129};
  const std::vector<double> xs{0.0, 0.5, 1.0};
  const auto rows = lebesgue_rows(T, Ns, xs);
  const std::filesystem::path dir(s.out);
  if (s.csv) write_text(dir / "lebesgue.csv", lebesgue_csv(T, rows), out);
  if (s.svg) {
    harness::SvgPlot plot("Lebesgue function (T = 2)", "N", "Lambda(x; P_N)", true, true);
    const auto& colors = harness::SvgPlot::palette();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      harness::SvgPlot::Series series;
      series.label = "x = " + fmt("%g", xs[i]);
      series.color = colors[i % colors.size()];
      for (const auto& r : rows) {
        if (r.x == xs[i]) {
          series.xs.push_back(r.N);
          series.ys.push_back(r.value);
        }
      }
      plot.add(series);
    }
    write_text(dir / "lebesgue.svg", plot.render(860, 520), out);
  }
}

void remez_figure(const Settings& s, std::ostream& out) {
  const auto tf = harness::make_function("abs");
  const std::vector<int> Ns{3, 5, 7, 9, 11, 13, 15, 17, 19, 21};
  const std::string csv = remez_csv(2.0, tf.id, real_on_unit(tf), Ns);
  const std::filesystem::path dir(s.out);
  if (s.csv) write_text(dir / "remez.csv", csv, out);
  if (s.svg) {
    harness::SvgPlot plot("Best approximation of |x| in H_N (T = 2)", "N", "E(f; H_N)", true, true);
    harness::SvgPlot::Series series;
    series.label = "E";
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
      std::vector<std::string> cells;
      std::stringstream ls(line);
      for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
      series.xs.push_back(std::stod(cells[2]));
      series.ys.push_back(std::stod(cells[3]));
    }
    plot.add(series);
    write_text(dir / "remez.svg", plot.render(860, 520), out);
  }
}

void asym_figure(const Settings& s, std::ostream& out) {
  const double T = 2.0;
  const std::vector<int> Ns{16, 32, 64, 128};
  std::vector<std::pair<int, double>> cases;
  for (int N : Ns) {
    cases.push_back({N, 0.3});
    cases.push_back({N, 1.0 - 1.0 / N});
  }
  const auto rows = asym_rows(T, cases);
  const std::filesystem::path dir(s.out);
  if (s.csv) write_text(dir / "asym.csv", asym_csv(T, rows), out);
  if (s.svg) {
    harness::SvgPlot plot("Asymptotic formulas against exact Pi_N (T = 2)", "N", "|asym - exact|", true, true);
    harness::SvgPlot::Series bulk{"bulk, x = 0.3", {}, {}, harness::SvgPlot::palette()[0], "", true};
    harness::SvgPlot::Series edge{"edge, x = 1 - 1/N", {}, {}, harness::SvgPlot::palette()[1], "", true};
    for (const auto& r : rows) {
      auto& series = r.asym.regime == arc::Regime::bulk ? bulk : edge;
      series.xs.push_back(r.N);
      series.ys.push_back(r.deviation);
    }
    plot.add(bulk);
    plot.add(edge);
    write_text(dir / "asym.svg", plot.render(860, 520), out);
  }
}

void ellipse_figure(const Settings& s, std::ostream& out) {
  const double T = 2.43;
  // Contours through the poles 0.3i, 0.6i and 1.0i.
  const std::vector<double> rhos{geometry::predicted_rate({0.0, 0.3}, T), geometry::predicted_rate({0.0, 0.6}, T),
                                 geometry::predicted_rate({0.0, 1.0}, T)};
  std::ostringstream csv;
  csv << "rho,T,re,im\n";
  harness::SvgPlot plot("Mapped Bernstein ellipses (T = 2.43)", "Re z", "Im z", false, false);
  const auto& colors = harness::SvgPlot::palette();
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    const auto c = geometry::mapped_ellipse_contour(rhos[i], T, 128);
    // Two closed loops: the samples with Re z >= 0, then their negatives.
    const std::size_t half = c.points.size() / 2;
    for (int loop = 0; loop < 2; ++loop) {
      harness::SvgPlot::Series series;
      series.label = loop == 0 ? "rho = " + fmt("%.4g", rhos[i]) : "";
      series.color = colors[i % colors.size()];
      series.markers = false;
      for (std::size_t k = 0; k <= half; ++k) {
        const auto z = c.points[loop * half + k % half];
        series.xs.push_back(z.real());
        series.ys.push_back(z.imag());
        if (k < half) csv << fmt("%.6g", rhos[i]) << ',' << T << ',' << z.real() << ',' << z.imag() << '\n';
      }
      plot.add(series);
    }
  }
  const std::filesystem::path dir(s.out);
  if (s.csv) write_text(dir / "ellipses.csv", csv.str(), out);
  if (s.svg) write_text(dir / "ellipses.svg", plot.render(720, 560), out);
}

int cmd_all_figures(const Settings& s, std::ostream& out, std::ostream& err) {
  for (const auto& name : harness::experiment_names()) run_named(name, s, false, out, err);
  err << "Lebesgue sweep\n";
  lebesgue_figure(s, out);
  err << "minimax sweep\n";
  remez_figure(s, out);
  err << "asymptotics sweep\n";
  asym_figure(s, out);
  ellipse_figure(s, out);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"fextlab: Fourier extension convergence laboratory"};
  app.require_subcommand(1);
  Flags flags;
  std::string experiment_name;

  struct Command {
    CLI::App* app;
    std::string name;
  };
  std::vector<Command> commands;
  const auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_flags(*sub, flags);
    commands.push_back({sub, name});
    return sub;
  };
  add("extend", "solve one Fourier extension per N; prints coefficients and errors");
  add("kernel", "table of the prolate kernel K_N(x, y)");
  add("lebesgue", "Lebesgue function Lambda(x; P_N) sweep");
  add("remez", "best approximation error E(f; H_N) by Remez exchange");
  add("asym", "asymptotic formulas for Pi_N against exact values");
  add("experiment", "run a registered experiment")
      ->add_option("name", experiment_name, "exp_analytic, exp_spline, exp_holder or exp_interior")
      ->required();
  add("all-figures", "run every experiment and sweep, writing CSV and SVG files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string chosen;
  for (const auto& c : commands) {
    if (c.app->parsed()) chosen = c.name;
  }
  try {
    const Settings s = resolve(flags);
    if (chosen == "extend") return cmd_extend(s, out);
    if (chosen == "kernel") return cmd_kernel(s, out);
    if (chosen == "lebesgue") return cmd_lebesgue(s, out);
    if (chosen == "remez") return cmd_remez(s, out);
    if (chosen == "asym") return cmd_asym(s, out);
    if (chosen == "experiment") {
      run_named(experiment_name, s, !flags.T.empty() || !flags.N.empty(), out, err);
      return kExitOk;
    }
    return cmd_all_figures(s, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace fextlab::cli
