#include "fextlab/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include "fextlab/analysis/fit.hpp"
#include "fextlab/errors.hpp"
#include "fextlab/fourext/extension.hpp"
#include "fextlab/geometry/mapped_ellipse.hpp"
#include "fextlab/harness/functions.hpp"
#include "fextlab/harness/legendre.hpp"
#include "fextlab/harness/svg.hpp"

namespace fextlab::harness {

using mp::MpReal;

namespace {

const std::vector<int> kAlgebraicNs{17, 33, 49, 65, 81, 97, 113, 129};

double to_unit(double x, double a, double b) { return 2.0 * (x - a) / (b - a) - 1.0; }

std::vector<double> window_grid(double lo, double hi, int count = 201) {
  std::vector<double> g;
  for (int i = 0; i < count; ++i) g.push_back(lo + (hi - lo) * i / (count - 1));
  return g;
}

struct Partial {
  std::vector<ExperimentRow> rows;
  std::vector<SeriesFit> fits;
};

Partial run_function(const ExperimentSpec& spec, const std::string& fspec, const Progress& progress) {
  const TestFunction tf = make_function(fspec);
  const Function g = tf.f.mapped_from(tf.a, tf.b);
  const int top = spec.Ns.back();
  FEProblem big = FEProblem::with_N(spec.T, top, spec.precision_bits);
  big.a = tf.a;
  big.b = tf.b;
  FitOptions fo;
  fo.rhs.tolerance = tf.rhs_tolerance;

  Partial out;
  const auto started = std::chrono::steady_clock::now();
  ProlateSystem system;
  try {
    system = assemble(tf.f, big, fo.rhs);
  } catch (const Error& e) {
    throw Error(std::string("experiment ") + spec.name + ": function " + tf.id + ", N = " + std::to_string(top) +
                ": " + e.what());
  }
  const double assemble_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

  // Abscissae per tag, in native coordinates.
  std::vector<std::pair<std::string, std::vector<double>>> probes;
  for (const auto& p : tf.points) probes.push_back({p.tag, {p.x}});
  for (const auto& w : tf.windows) probes.push_back({w.tag, window_grid(w.lo, w.hi)});

  std::map<std::string, std::vector<double>> fe_errors;
  for (int N : spec.Ns) {
    const auto t0 = std::chrono::steady_clock::now();
    Extension ext;
    try {
      ext = fit_sliced(system, (N - 1) / 2, tf.f, fo);
    } catch (const Error& e) {
      throw Error(std::string("experiment ") + spec.name + ": function " + tf.id + ", N = " + std::to_string(N) +
                  ": " + e.what());
    }
    const int bits = ext.evaluation_bits();
    const Extension e = ext.rounded(bits);
    const double solve_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() +
                            (N == spec.Ns.front() ? assemble_ms : 0.0);
    for (const auto& [tag, xs] : probes) {
      const auto t1 = std::chrono::steady_clock::now();
      double worst = -1.0;
      double where = xs.front();
      for (double x : xs) {
        const MpReal t(to_unit(x, tf.a, tf.b), bits);
        const double err = abs(g(t) - e.evaluate(t)).to_double();
        if (err > worst) {
          worst = err;
          where = x;
        }
      }
      const double eval_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t1).count();
      out.rows.push_back({tf.id, spec.T, N, where, tag, worst, solve_ms + eval_ms});
      fe_errors[tag].push_back(worst);
    }
    if (progress) {
      progress(spec.name + ": " + tf.id + " N=" + std::to_string(N) + " done");
    }
  }

  std::vector<double> ns;
  for (int N : spec.Ns) ns.push_back(N);
  auto fit_algebraic = [&](const std::string& label, const std::string& method,
                           const std::map<std::string, std::vector<double>>& errors) {
    for (const auto& [tag, xs] : probes) {
      (void)xs;
      const auto& errs = errors.at(tag);
      SeriesFit f;
      f.function = label;
      f.x_tag = tag;
      f.method = method;
      try {
        const auto line = analysis::loglog_fit(ns, errs);
        f.slope = line.slope;
        f.residual = line.residual;
        f.envelope_slope = analysis::loglog_fit(ns, analysis::upper_envelope(errs)).slope;
      } catch (const std::invalid_argument&) {
        f.slope = std::nan("");
        f.envelope_slope = std::nan("");
      }
      for (const auto& [ptag, slope] : tf.predicted_slopes) {
        if (ptag == tag) f.predicted = slope;
      }
      f.inverse_log = std::find(tf.inverse_log_tags.begin(), tf.inverse_log_tags.end(), tag) !=
                      tf.inverse_log_tags.end();
      out.fits.push_back(f);
    }
  };

  if (spec.exponential) {
    std::vector<int> half;
    for (int N : spec.Ns) half.push_back((N - 1) / 2);
    for (const auto& [tag, xs] : probes) {
      (void)xs;
      SeriesFit f;
      f.function = tf.id;
      f.x_tag = tag;
      f.method = "fe";
      try {
        const auto r = geometry::fit_exponential_rate(half, fe_errors.at(tag));
        f.slope = r.slope;
        f.residual = r.residual;
        f.rho = r.rho;
      } catch (const std::invalid_argument&) {
        f.slope = std::nan("");
      }
      if (tf.pole) {
        f.predicted = geometry::predicted_rate(*tf.pole, spec.T);
      } else if (tf.entire) {
        f.predicted = geometry::predicted_rate_entire(spec.T);
      }
      out.fits.push_back(f);
    }
  } else {
    fit_algebraic(tf.id, "fe", fe_errors);
  }

  if (spec.baseline) {
    if (!g.is_real) {
      throw UsageError("Legendre baseline needs a real function: " + tf.id);
    }
    const auto t0 = std::chrono::steady_clock::now();
    LegendreBaseline leg;
    try {
      leg = legendre_series(g, top, spec.baseline_bits);
    } catch (const Error& e) {
      throw Error(std::string("experiment ") + spec.name + ": Legendre series of " + tf.id + ": " + e.what());
    }
    const double coef_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const std::string label = legendre_label(tf.id);
    std::map<std::string, std::vector<double>> leg_errors;
    // For each tag, the worst abscissa per N over the probe set.
    std::vector<std::vector<ExperimentRow>> per_tag;
    for (const auto& [tag, xs] : probes) {
      std::vector<double> worst(spec.Ns.size(), -1.0);
      std::vector<double> where(spec.Ns.size(), xs.front());
      for (double x : xs) {
        const MpReal t(to_unit(x, tf.a, tf.b), spec.baseline_bits);
        const double fx = g(t).re.to_double();
        const auto sums = leg.partial_sums(t);
        for (std::size_t i = 0; i < spec.Ns.size(); ++i) {
          const double err = std::abs(fx - sums[static_cast<std::size_t>(spec.Ns[i] - 1)]);
          if (err > worst[i]) {
            worst[i] = err;
            where[i] = x;
          }
        }
      }
      leg_errors[tag] = worst;
      std::vector<ExperimentRow> rows;
      for (std::size_t i = 0; i < spec.Ns.size(); ++i) {
        rows.push_back({label, spec.T, spec.Ns[i], where[i], tag, worst[i], coef_ms / spec.Ns.size()});
      }
      per_tag.push_back(std::move(rows));
    }
    for (std::size_t i = 0; i < spec.Ns.size(); ++i) {
      for (const auto& rows : per_tag) out.rows.push_back(rows[i]);
    }
    fit_algebraic(label, "legendre", leg_errors);
  }
  return out;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

}  // namespace

void ExperimentSpec::validate() const {
  if (!(T > 1.0)) {
    throw UsageError("experiment T must exceed 1");
  }
  if (Ns.empty()) {
    throw UsageError("experiment needs at least one N");
  }
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    if (Ns[i] < 1 || Ns[i] % 2 == 0) {
      throw UsageError("N values must be odd and positive");
    }
    if (i > 0 && Ns[i] <= Ns[i - 1]) {
      throw UsageError("N values must increase");
    }
  }
  if (functions.empty()) {
    throw UsageError("experiment needs at least one function");
  }
}

std::vector<std::string> experiment_names() { return {"exp_analytic", "exp_spline", "exp_holder", "exp_interior"}; }

ExperimentSpec experiment_spec(const std::string& name) {
  ExperimentSpec s;
  s.name = name;
  if (name == "exp_analytic") {
    s.functions = {"exp", "pole(0.3)", "pole(0.6)", "pole(1.5)", "pole(2.0)"};
    s.T = 2.43;
    s.Ns = {11, 21, 31, 41, 51, 61, 71, 81};
    s.exponential = true;
  } else if (name == "exp_spline") {
    s.functions = {"spline(3)", "spline(9)", "spline(15)"};
    s.Ns = kAlgebraicNs;
    s.baseline = true;
  } else if (name == "exp_holder") {
    s.functions = {"power(0.75)", "power(0.5)", "power(0.1)"};
    s.Ns = kAlgebraicNs;
    s.baseline = true;
  } else if (name == "exp_interior") {
    s.functions = {"interior_power(0.25)", "jump", "log_cusp"};
    s.Ns = kAlgebraicNs;
    s.baseline = true;
  } else {
    throw UsageError("unknown experiment '" + name + "'");
  }
  return s;
}

std::string legendre_label(const std::string& function) { return "legendre:" + function; }

std::vector<ExperimentRow> ExperimentRecord::series(const std::string& function, const std::string& x_tag) const {
  std::vector<ExperimentRow> out;
  for (const auto& r : rows) {
    if (r.function == function && r.x_tag == x_tag) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.N < b.N; });
  return out;
}

const SeriesFit* ExperimentRecord::fit(const std::string& function, const std::string& x_tag,
                                       const std::string& method) const {
  for (const auto& f : fits) {
    if (f.x_tag == x_tag && f.method == method &&
        (f.function == function || (method == "legendre" && f.function == legendre_label(function)))) {
      return &f;
    }
  }
  return nullptr;
}

ExperimentRecord run_experiment(const ExperimentSpec& spec, const Progress& progress) {
  spec.validate();
  std::vector<Partial> parts(spec.functions.size());
  std::vector<std::exception_ptr> failures(spec.functions.size());
  std::mutex progress_mutex;
  const Progress locked = [&](const std::string& m) {
    if (progress) {
      std::lock_guard lock(progress_mutex);
      progress(m);
    }
  };
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < spec.functions.size(); i = next++) {
      try {
        parts[i] = run_function(spec, spec.functions[i], locked);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(spec.functions.size(), std::max(1u, std::thread::hardware_concurrency()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  ExperimentRecord rec;
  rec.spec = spec;
  for (auto& p : parts) {
    rec.rows.insert(rec.rows.end(), p.rows.begin(), p.rows.end());
    rec.fits.insert(rec.fits.end(), p.fits.begin(), p.fits.end());
  }
  return rec;
}

void write_csv(const ExperimentRecord& record, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : record.rows) {
    out << r.function << ',' << fmt("%.6g", r.T) << ',' << r.N << ',' << fmt("%.10g", r.x) << ',' << r.x_tag << ','
        << fmt("%.6e", r.abs_error) << ',' << fmt("%.3f", r.runtime_ms) << '\n';
  }
}

std::string render_svg(const ExperimentRecord& record) {
  const bool expo = record.spec.exponential;
  SvgPlot plot(record.spec.name + " (T = " + fmt("%.6g", record.spec.T) + ")", "N",
               expo ? "max error over [-1, 1]" : "pointwise error", !expo, true);
  std::vector<std::pair<std::string, std::string>> keys;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& r : record.rows) {
    if (r.function.rfind("legendre:", 0) == 0) continue;
    if (seen.insert({r.function, r.x_tag}).second) keys.push_back({r.function, r.x_tag});
  }
  const auto& colors = SvgPlot::palette();
  std::size_t ci = 0;
  for (const auto& [fn, tag] : keys) {
    const std::string color = colors[ci++ % colors.size()];
    const auto rows = record.series(fn, tag);
    SvgPlot::Series s;
    s.label = fn + " " + tag;
    s.color = color;
    for (const auto& r : rows) {
      s.xs.push_back(r.N);
      s.ys.push_back(r.abs_error);
    }
    plot.add(s);
    const auto leg = record.series(legendre_label(fn), tag);
    if (!leg.empty()) {
      SvgPlot::Series l;
      l.label = "Legendre " + fn + " " + tag;
      l.color = color;
      l.dash = "5 3";
      l.markers = false;
      for (const auto& r : leg) {
        l.xs.push_back(r.N);
        l.ys.push_back(r.abs_error);
      }
      plot.add(l);
    }
    // Reference line through the first point with the predicted rate.
    const SeriesFit* f = record.fit(fn, tag, "fe");
    const bool has_reference = f != nullptr && (f->predicted || f->inverse_log);
    if (has_reference && !rows.empty() && rows.front().abs_error > 0.0) {
      SvgPlot::Series ref;
      ref.color = "#000000";
      ref.dash = expo ? "6 4" : "1 3";
      ref.markers = false;
      const double n0 = rows.front().N;
      const double e0 = rows.front().abs_error;
      for (const auto& r : rows) {
        ref.xs.push_back(r.N);
        if (f->inverse_log) {
          ref.ys.push_back(e0 * std::log(n0) / std::log(static_cast<double>(r.N)));
        } else if (expo) {
          ref.ys.push_back(e0 * std::pow(*f->predicted, -(r.N - n0) / 2.0));
        } else {
          ref.ys.push_back(e0 * std::pow(r.N / n0, *f->predicted));
        }
      }
      plot.add(ref);
    }
  }
  return plot.render(860, 520);
}

std::vector<std::string> write_outputs(const ExperimentRecord& record, const std::string& dir, bool csv, bool svg) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;
  if (csv) {
    const std::string path = (std::filesystem::path(dir) / (record.spec.name + ".csv")).string();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_csv(record, out);
    written.push_back(path);
  }
  if (svg) {
    const std::string path = (std::filesystem::path(dir) / (record.spec.name + ".svg")).string();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << render_svg(record);
    written.push_back(path);
  }
  return written;
}

}  // namespace fextlab::harness
