#include "fextlab/harness/functions.hpp"

#include <cmath>
#include <regex>
#include <sstream>

#include "fextlab/errors.hpp"

namespace fextlab::harness {

using mp::MpComplex;
using mp::MpReal;

namespace {

double constant(double, double v) { return v; }
MpReal constant(const MpReal& like, double v) { return MpReal(v, like.precision()); }

std::vector<double> parse_params(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) {
        throw UsageError("bad number '" + item + "'");
      }
    } catch (const std::logic_error&) {
      throw UsageError("bad number '" + item + "' in function parameters");
    }
  }
  return out;
}

void expect_params(const std::string& name, const std::vector<double>& p, std::size_t lo, std::size_t hi) {
  if (p.size() < lo || p.size() > hi) {
    throw UsageError("function " + name + " takes " + std::to_string(lo) +
                     (lo == hi ? "" : " to " + std::to_string(hi)) + " parameters, got " + std::to_string(p.size()));
  }
}

std::string format_id(const std::string& name, const std::vector<double>& p) {
  if (p.empty()) {
    return name;
  }
  std::ostringstream os;
  os << name << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    os << (i ? "," : "") << p[i];
  }
  os << ')';
  return os.str();
}

// Points for functions on [0, 1/2] and similar: interior, second interior, right endpoint.
std::vector<EvalPoint> standard_points(double a, double b) {
  return {{a + 0.6 * (b - a), "interior"}, {a + 0.35 * (b - a), "interior2"}, {b, "endpoint"}};
}

}  // namespace

std::vector<EvalPoint> default_points(double a, double b) { return {{a + 0.6 * (b - a), "interior"}, {b, "endpoint"}}; }

std::vector<std::string> function_names() {
  return {"const(c)", "x",          "exp",      "pole(im)", "pole(re,im)", "spline(d)", "power(alpha)",
          "interior_power(alpha)", "jump", "log_cusp", "abs",      "sqrt_cap"};
}

TestFunction make_function(const std::string& spec) {
  static const std::regex pattern(R"(^\s*([a-z_]+)\s*(?:\(([^)]*)\))?\s*$)");
  std::smatch m;
  if (!std::regex_match(spec, m, pattern)) {
    throw UsageError("cannot parse function spec '" + spec + "'");
  }
  const std::string name = m[1];
  const std::vector<double> p = m[2].matched ? parse_params(m[2]) : std::vector<double>{};
  TestFunction t;
  t.id = format_id(name, p);

  if (name == "const") {
    expect_params(name, p, 1, 1);
    const double c = p[0];
    t.f = Function::real(t.id, [c](const auto& x) { return constant(x, c); });
    t.entire = true;
  } else if (name == "x") {
    expect_params(name, p, 0, 0);
    t.f = Function::real(t.id, [](const auto& x) { return x; });
    t.entire = true;
  } else if (name == "exp") {
    expect_params(name, p, 0, 0);
    t.f = Function::real(t.id, [](const auto& x) {
      using std::exp;
      return exp(x);
    });
    t.entire = true;
    t.rhs_tolerance = 1e-45;
    t.windows = {{-1.0, 1.0, "sup"}};
  } else if (name == "pole") {
    expect_params(name, p, 1, 2);
    const std::complex<double> z0 = p.size() == 1 ? std::complex<double>(0.0, p[0]) : std::complex<double>(p[0], p[1]);
    if (z0.imag() == 0.0 && std::abs(z0.real()) <= 1.0) {
      throw UsageError("pole must lie off [-1, 1]");
    }
    t.f = Function::complex(
        t.id,
        [z0](const MpReal& x) {
          const int bits = x.precision();
          const MpComplex d(x - z0.real(), MpReal(-z0.imag(), bits));
          return MpComplex(MpReal::one(bits), MpReal::zero(bits)) / d;
        },
        [z0](double x) { return 1.0 / (x - z0); });
    t.pole = z0;
    t.rhs_tolerance = 1e-45;
    t.windows = {{-1.0, 1.0, "sup"}};
  } else if (name == "spline") {
    expect_params(name, p, 1, 1);
    const int d = static_cast<int>(p[0]);
    if (d < 1 || d != p[0]) {
      throw UsageError("spline degree must be a positive integer");
    }
    // Sum of truncated powers at the knots 1/8, 1/4, 3/8 of [0, 1/2]: exactly C^{d-1}.
    t.f = Function::real(
        t.id,
        [d](const auto& x) {
          const auto s = x * 8.0;
          auto acc = constant(x, 0.0);
          const double w[3] = {1.0, -1.0, 1.0};
          for (int i = 1; i <= 3; ++i) {
            if (s > static_cast<double>(i)) {
              const auto r = (s - static_cast<double>(i)) / static_cast<double>(4 - i);
              auto q = r;
              for (int k = 1; k < d; ++k) q = q * r;
              acc = acc + q * w[i - 1];
            }
          }
          return acc;
        });
    t.f.breakpoints = {0.125, 0.25, 0.375};
    t.a = 0.0;
    t.b = 0.5;
    t.points = standard_points(t.a, t.b);
    // Interior window through all three knots, where the smoothness is lowest.
    t.windows = {{0.1, 0.4, "interior_sup"}};
    t.predicted_slopes = {{"interior", -static_cast<double>(d)},
                          {"interior2", -static_cast<double>(d)},
                          {"interior_sup", -static_cast<double>(d)},
                          {"endpoint", 0.5 - d}};
  } else if (name == "power") {
    expect_params(name, p, 1, 1);
    const double alpha = p[0];
    if (!(alpha > 0.0)) {
      throw UsageError("power exponent must be positive");
    }
    t.f = Function::real(
        t.id,
        [alpha](const auto& x) {
          using std::pow;
          return x > 0.0 ? pow(x, alpha) : constant(x, 0.0);
        },
        {0.0});
    t.a = 0.0;
    t.b = 0.5;
    t.points = standard_points(t.a, t.b);
    t.points.push_back({0.0, "singular"});
    t.rhs_tolerance = 1e-20;
    t.predicted_slopes = {{"interior", -alpha}, {"interior2", -alpha}, {"endpoint", 0.5 - alpha},
                          {"singular", 0.5 - alpha}};
  } else if (name == "interior_power") {
    expect_params(name, p, 1, 1);
    const double alpha = p[0];
    const double r = kInteriorSingularity;
    t.f = Function::real(
        t.id,
        [alpha, r](const auto& x) {
          using std::abs;
          using std::pow;
          const auto d = abs(x - r);
          return d > 0.0 ? pow(d, alpha) : constant(x, 0.0);
        },
        {r});
    t.a = 0.0;
    t.b = 0.5;
    t.points = standard_points(t.a, t.b);
    t.points.push_back({r, "singular"});
    t.rhs_tolerance = 1e-20;
    t.predicted_slopes = {{"interior", -alpha}, {"interior2", -alpha}, {"endpoint", 0.5 - alpha}};
  } else if (name == "jump") {
    expect_params(name, p, 0, 0);
    t.f = Function::real(t.id, [](const auto& x) { return x <= 0.25 ? x : constant(x, 1.0); });
    t.f.breakpoints = {0.25};
    t.a = 0.0;
    t.b = 0.5;
    t.points = standard_points(t.a, t.b);
    t.windows = {{0.2, 0.3, "jump_sup"}};
  } else if (name == "log_cusp") {
    expect_params(name, p, 0, 0);
    const double r = kInteriorSingularity;
    t.f = Function::real(
        t.id,
        [r](const auto& x) {
          using std::abs;
          using std::log;
          const auto d = abs(x - r);
          if (!(d > 0.0)) {
            return constant(x, 0.0);
          }
          const auto l = log(d);
          return 1.0 / (l * l);
        },
        {r});
    t.a = 0.0;
    t.b = 0.5;
    t.points = standard_points(t.a, t.b);
    t.points.push_back({r, "singular"});
    t.rhs_tolerance = 1e-20;
    t.inverse_log_tags = {"singular"};
  } else if (name == "abs") {
    expect_params(name, p, 0, 0);
    t.f = Function::real(
        t.id,
        [](const auto& x) {
          using std::abs;
          return abs(x);
        },
        {0.0});
    t.rhs_tolerance = 1e-20;
    t.points = {{0.3, "interior"}, {1.0, "endpoint"}, {0.0, "singular"}};
  } else if (name == "sqrt_cap") {
    expect_params(name, p, 0, 0);
    t.f = Function::real(
        t.id,
        [](const auto& x) {
          using std::pow;
          const auto v = 1.0 - x * x;
          return v > 0.0 ? pow(v, 0.25) : constant(x, 0.0);
        },
        {-1.0, 1.0});
    t.rhs_tolerance = 1e-20;
  } else {
    throw UsageError("unknown function '" + name + "'");
  }
  t.f.name = t.id;
  if (t.points.empty()) {
    t.points = default_points(t.a, t.b);
  }
  return t;
}

}  // namespace fextlab::harness
