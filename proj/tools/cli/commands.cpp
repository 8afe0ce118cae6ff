#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "genfrac/combinatorics/delta.hpp"
#include "genfrac/error.hpp"
#include "genfrac/format.hpp"
#include "genfrac/mellin/mellin.hpp"
#include "genfrac/operators/fractional.hpp"

namespace genfrac::cli {
namespace {

using operators::Interval;
using operators::Order;
using operators::TestFunction;

std::string g12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v + 0.0);  // no "-0"
  return buf;
}

std::string g3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

std::string complex12(numerics::Complex z) {
  if (z.imag() == 0.0) return g12(z.real());
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

std::vector<double> parse_numbers(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      fail(ErrorKind::domain, "cannot parse number '" + item + "' in " + what);
    }
    out.push_back(v);
  }
  return out;
}

// Shared flags of integrate/differentiate.
struct OperatorFlags {
  std::string f;
  double alpha = 0.0;
  double rho = 1.0;
  std::optional<double> a;
  std::optional<double> b;
  double x = 0.0;
  std::string side = "left";
  double tol = 1e-12;

  void attach(CLI::App& cmd) {
    cmd.add_option("--f", f, "power:NU | truncpower:NU,CUTOFF | exppower:MU,D")->required();
    cmd.add_option("--alpha", alpha, "order alpha > 0")->required();
    cmd.add_option("--rho", rho, "parameter rho > 0")->capture_default_str();
    cmd.add_option("--a", a, "lower limit (left side, default 0)");
    cmd.add_option("--b", b, "upper limit (right side, default inf)");
    cmd.add_option("--x", x, "evaluation point")->required();
    cmd.add_option("--side", side, "left or right (right is implied by --b)")
        ->check(CLI::IsMember({"left", "right"}))
        ->capture_default_str();
    cmd.add_option("--tol", tol, "target relative tolerance")->capture_default_str();
  }

  bool right() const { return side == "right" || b.has_value(); }

  Interval interval() const {
    if (right()) {
      if (a) fail(ErrorKind::domain, "--a applies to left-sided operators only");
      return Interval::right(b.value_or(std::numeric_limits<double>::infinity()));
    }
    return Interval::left(a.value_or(0.0));
  }

  numerics::QuadratureConfig config() const {
    numerics::QuadratureConfig cfg;
    cfg.target_rel_tol = tol;
    cfg.validate();
    return cfg;
  }
};

int cmd_integrate(const OperatorFlags& fl, std::ostream& out) {
  const TestFunction f = parse_test_function(fl.f);
  const Order ord(fl.alpha, fl.rho);
  const auto iv = fl.interval();
  const auto r = fl.right() ? operators::gfi_right(f, ord, iv, fl.x, fl.config())
                            : operators::gfi_left(f, ord, iv, fl.x, fl.config());
  out << g12(r.value) << " est_rel_err=" << g3(r.est_rel_err) << "\n";
  return kOk;
}

int cmd_differentiate(const OperatorFlags& fl, bool closed_form, std::ostream& out) {
  const TestFunction f = parse_test_function(fl.f);
  const Order ord(fl.alpha, fl.rho);
  const auto iv = fl.interval();
  std::optional<operators::PowerLaw> law;
  if (closed_form) {
    const auto* p = std::get_if<operators::Power>(&f.rep());
    if (p == nullptr) fail(ErrorKind::domain, "--closed-form needs a power:NU function");
    if (fl.right() || iv.a != 0.0) fail(ErrorKind::domain, "--closed-form needs a left side with a = 0");
    law = operators::power_closed_form(p->nu, ord);
  }
  const auto r = fl.right() ? operators::gfd_right(f, ord, iv, fl.x, fl.config())
                            : operators::gfd_left(f, ord, iv, fl.x, fl.config());
  if (!law) {
    out << g12(r.value) << " est_rel_err=" << g3(r.est_rel_err) << "\n";
    return kOk;
  }
  const double exact = law->coefficient * std::pow(fl.x, law->exponent);
  const double gap = std::abs(r.value - exact) / std::max(std::abs(exact), 1e-300);
  out << "quadrature=" << g12(r.value) << " est_rel_err=" << g3(r.est_rel_err) << "\n"
      << "closed_form=" << g12(exact) << " coefficient=" << g12(law->coefficient)
      << " exponent=" << g12(law->exponent) << "\n"
      << "rel_gap=" << g3(gap) << "\n";
  return kOk;
}

struct MellinFlags {
  std::string identity;
  std::string f = "exppower:1,1";
  double alpha = 0.5;
  double rho = 1.0;
  double s = 0.25;
  double t = 0.0;
  double a = 0.0;
  double tol = 1e-3;
  double nu = 1.0;
  double power = 2.0;
};

int cmd_mellin_check(const MellinFlags& fl, std::ostream& out) {
  const TestFunction f = parse_test_function(fl.f);
  const numerics::Complex s(fl.s, fl.t);
  const auto sp = mellin::StripPoint::for_function(f, s);
  std::vector<mellin::IdentityReport> reports;
  if (fl.identity == "props") {
    reports = mellin::check_transform_properties(f, sp, {}, {fl.nu, fl.power});
  } else if (fl.identity == "MD") {
    reports.push_back(mellin::mth_derivative_transform_check(f, 1, sp));
  } else {
    const Order ord(fl.alpha, fl.rho);
    if (fl.identity == "MT1") {
      reports.push_back(mellin::check_integral_identity(f, ord, sp, operators::Side::left, {},
                                                        {fl.a}));
    } else if (fl.identity == "MT2") {
      reports.push_back(mellin::check_integral_identity(f, ord, sp, operators::Side::right));
    } else if (fl.identity == "MTD1") {
      reports.push_back(mellin::check_derivative_identity(f, ord, sp, operators::Side::left));
    } else {
      reports.push_back(mellin::check_derivative_identity(f, ord, sp, operators::Side::right));
    }
  }
  int code = kOk;
  for (const auto& r : reports) {
    std::string verdict;
    if (!r.evaluated()) {
      verdict = "SKIP";
    } else if (r.rel_residual < fl.tol) {
      verdict = "PASS";
    } else {
      verdict = "FAIL";
      code = kCheckFailed;
    }
    out << r.label << " " << verdict;
    if (r.evaluated()) {
      out << " lhs=" << complex12(r.lhs) << " rhs=" << complex12(r.rhs)
          << " rel_residual=" << g3(r.rel_residual);
    }
    out << " strip_condition_met=" << (r.strip_condition_met ? "true" : "false")
        << " status=" << mellin::to_string(r.status);
    if (!r.note.empty()) out << " note=\"" << r.note << "\"";
    out << "\n";
  }
  return code;
}

int cmd_triangle(double k, int rows, const std::string& format, std::ostream& out,
                 std::ostream& err) {
  if (rows < 1 || rows > 50) fail(ErrorKind::domain, "--rows must be in 1..50");
  const auto triangle = combinatorics::delta_triangle(k, rows);
  if (triangle.back().precision_loss) {
    err << "warning: non-integer k; rows beyond " << combinatorics::kFloatPrecisionRows
        << " are computed in floating point and lose precision\n";
  }
  const bool csv = format == "csv";
  for (const auto& row : triangle) {
    if (!csv) out << "n=" << row.n << ":";
    for (int j = 1; j <= row.n; ++j) {
      if (csv) {
        if (j > 1) out << ",";
      } else {
        out << " ";
      }
      out << row.entry_string(j);
    }
    out << "\n";
  }
  return kOk;
}

struct FigureFlags {
  std::string nus = "0.5,2";
  std::string alphas = "0.1,0.5,0.9";
  std::string rhos = "0.4,1,1.4";
  double x_min = 0.1;
  double x_max = 2.0;
  int samples = 20;
  std::string out;
};

int cmd_figure1(const FigureFlags& fl, std::ostream& out, std::ostream& err) {
  const auto nus = parse_numbers(fl.nus, "--nu");
  const auto alphas = parse_numbers(fl.alphas, "--alpha");
  const auto rhos = parse_numbers(fl.rhos, "--rho");
  if (nus.empty() || alphas.empty() || rhos.empty()) fail(ErrorKind::domain, "empty parameter list");
  if (!(fl.x_min > 0.0) || !(fl.x_min < fl.x_max) || !std::isfinite(fl.x_max)) {
    fail(ErrorKind::domain, "need 0 < x-min < x-max");
  }
  if (fl.samples < 2) fail(ErrorKind::domain, "--samples must be >= 2");

  struct Column {
    std::string name;
    operators::PowerLaw law;
  };
  std::vector<Column> columns;
  const bool tag_nu = nus.size() > 1;
  for (const double nu : nus) {
    for (const double alpha : alphas) {
      for (const double rho : rhos) {
        std::string name = "a" + format_shortest(alpha) + "_r" + format_shortest(rho);
        if (tag_nu) name = "n" + format_shortest(nu) + "_" + name;
        columns.push_back({name, operators::power_closed_form(nu, Order(alpha, rho))});
      }
    }
  }

  std::ostringstream csv;
  csv << "x";
  for (const auto& c : columns) csv << "," << c.name;
  csv << "\n";
  const double step = (fl.x_max - fl.x_min) / (fl.samples - 1);
  for (int i = 0; i < fl.samples; ++i) {
    const double x = i == fl.samples - 1 ? fl.x_max : fl.x_min + i * step;
    csv << format_shortest(x);
    for (const auto& c : columns) {
      csv << "," << format_shortest(c.law.coefficient * std::pow(x, c.law.exponent));
    }
    csv << "\n";
  }

  std::ofstream file(fl.out, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << fl.out << "' for writing\n";
    return kIo;
  }
  file << csv.str();
  file.close();
  if (!file) {
    err << "error: failed writing '" << fl.out << "'\n";
    return kIo;
  }
  out << "wrote " << fl.out << " (" << fl.samples << " rows, " << columns.size()
      << " curves)\n";
  return kOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain:
    case ErrorKind::pole:
    case ErrorKind::divergence:
    case ErrorKind::step_underflow:
      return kUsage;
    case ErrorKind::overflow:
    case ErrorKind::convergence:
    case ErrorKind::nonfinite:
      return kCheckFailed;
  }
  return kCheckFailed;
}

}  // namespace

TestFunction parse_test_function(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    fail(ErrorKind::domain, "function '" + text + "' must look like kind:params");
  }
  const std::string kind = text.substr(0, colon);
  const auto params = parse_numbers(text.substr(colon + 1), "--f");
  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      fail(ErrorKind::domain, "function '" + text + "' expects " + std::to_string(count) +
                                  " parameter(s)");
    }
  };
  if (kind == "power") {
    expect(1);
    return TestFunction::power(params[0]);
  }
  if (kind == "truncpower") {
    expect(2);
    return TestFunction::truncated_power(params[0], params[1]);
  }
  if (kind == "exppower") {
    expect(2);
    return TestFunction::exp_power(params[0], params[1]);
  }
  fail(ErrorKind::domain, "unknown function kind '" + kind + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized fractional integrals, derivatives and Mellin identities", "genfrac"};
  app.require_subcommand(1);

  OperatorFlags integ;
  auto* integrate = app.add_subcommand("integrate", "generalized fractional integral");
  integ.attach(*integrate);

  OperatorFlags diff;
  bool closed_form = false;
  auto* differentiate = app.add_subcommand("differentiate", "generalized fractional derivative");
  diff.attach(*differentiate);
  differentiate->add_flag("--closed-form", closed_form, "also evaluate the power-law closed form");

  MellinFlags mel;
  auto* mellin_check = app.add_subcommand("mellin-check", "Mellin transform identity checks");
  mellin_check->add_option("--identity", mel.identity, "MT1 | MT2 | MTD1 | MTD2 | props | MD")
      ->required()
      ->check(CLI::IsMember({"MT1", "MT2", "MTD1", "MTD2", "props", "MD"}));
  mellin_check->add_option("--f", mel.f, "test function")->capture_default_str();
  mellin_check->add_option("--alpha", mel.alpha, "order alpha")->capture_default_str();
  mellin_check->add_option("--rho", mel.rho, "parameter rho")->capture_default_str();
  mellin_check->add_option("--s", mel.s, "Re(s)")->capture_default_str();
  mellin_check->add_option("--t", mel.t, "Im(s)")->capture_default_str();
  mellin_check->add_option("--a", mel.a, "lower limit for MT1 (informational when > 0)")
      ->capture_default_str();
  mellin_check->add_option("--tol", mel.tol, "residual tolerance")->capture_default_str();
  mellin_check->add_option("--nu", mel.nu, "shift for property 2")->capture_default_str();
  mellin_check->add_option("--power", mel.power, "argument power for property 3")
      ->capture_default_str();

  double k = 1.0;
  int rows = 5;
  std::string format = "csv";
  auto* triangle = app.add_subcommand("triangle", "delta_k operator expansion coefficients");
  triangle->add_option("--k", k, "operator exponent k")->required();
  triangle->add_option("--rows", rows, "number of rows (1..50)")->required();
  triangle->add_option("--format", format, "csv or text")
      ->check(CLI::IsMember({"csv", "text"}))
      ->capture_default_str();

  FigureFlags fig;
  auto* figure1 = app.add_subcommand("figure1", "power-function derivative curves as CSV");
  figure1->add_option("--nu", fig.nus, "comma-separated exponents")->capture_default_str();
  figure1->add_option("--alpha", fig.alphas, "comma-separated orders")->capture_default_str();
  figure1->add_option("--rho", fig.rhos, "comma-separated rho values")->capture_default_str();
  figure1->add_option("--x-min", fig.x_min, "first abscissa")->capture_default_str();
  figure1->add_option("--x-max", fig.x_max, "last abscissa")->capture_default_str();
  figure1->add_option("--samples", fig.samples, "number of abscissae")->capture_default_str();
  figure1->add_option("--out", fig.out, "output CSV path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (integrate->parsed()) return cmd_integrate(integ, out);
    if (differentiate->parsed()) return cmd_differentiate(diff, closed_form, out);
    if (mellin_check->parsed()) return cmd_mellin_check(mel, out);
    if (triangle->parsed()) return cmd_triangle(k, rows, format, out, err);
    if (figure1->parsed()) return cmd_figure1(fig, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kUsage;
}

}  // namespace genfrac::cli
