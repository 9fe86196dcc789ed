// etaverify: computes Farhi's constant eta by three independent routes and
// numerically verifies the identities behind the closed form
// eta = (gamma + log 2pi)/pi.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <unistd.h>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "farhi/constants.hpp"
#include "farhi/identities.hpp"
#include "farhi/quadrature.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

std::string fmt15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool color_enabled() {
  if (std::getenv("NO_COLOR") != nullptr) return false;
  return isatty(fileno(stdout)) != 0;
}

struct Report {
  std::string version = kVersion;
  std::string timestamp;
  std::vector<std::pair<const farhi::identities::IdentityRecord*,
                        farhi::identities::CheckResult>>
      checks;
  int passed = 0;
  int failed = 0;
};

Report make_report(
    const std::vector<const farhi::identities::IdentityRecord*>& records,
    double tol_scale) {
  Report rep;
  rep.timestamp = utc_timestamp();
  for (const auto* rec : records) {
    auto res = farhi::identities::run_check(*rec, tol_scale);
    (res.pass ? rep.passed : rep.failed)++;
    rep.checks.emplace_back(rec, std::move(res));
  }
  return rep;
}

std::string render_text(const Report& rep) {
  const bool color = color_enabled();
  const char* green = color ? "\x1b[32m" : "";
  const char* red = color ? "\x1b[31m" : "";
  const char* reset = color ? "\x1b[0m" : "";
  std::ostringstream os;
  for (const auto& [rec, res] : rep.checks) {
    char line[256];
    std::snprintf(line, sizeof(line),
                  "%-22s lhs=% -.12e rhs=% -.12e abs_err=%.3e tol=%.1e ",
                  farhi::identities::to_string(res.id).c_str(), res.lhs_value,
                  res.rhs_value, res.abs_err, res.tol);
    os << line
       << (res.pass ? std::string(green) + "PASS" + reset
                    : std::string(red) + "FAIL" + reset);
    if (!res.diagnostic.empty()) os << "  [" << res.diagnostic << "]";
    os << "\n";
  }
  os << "summary: total=" << rep.checks.size() << " passed=" << rep.passed
     << " failed=" << rep.failed << "\n";
  return os.str();
}

nlohmann::json to_json(const Report& rep) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& [rec, res] : rep.checks) {
    checks.push_back({
        {"id", farhi::identities::to_string(res.id)},
        {"description", rec->description},
        {"paper_ref", rec->paper_ref},
        {"lhs", res.lhs_value},
        {"rhs", res.rhs_value},
        {"abs_err", res.abs_err},
        {"rel_err", res.rel_err},
        {"tol", res.tol},
        {"pass", res.pass},
        {"evals", res.evals},
        {"runtime_ms", res.runtime_ms},
    });
  }
  return {
      {"version", rep.version},
      {"timestamp", rep.timestamp},
      {"checks", checks},
      {"summary",
       {{"total", rep.checks.size()},
        {"passed", rep.passed},
        {"failed", rep.failed}}},
  };
}

std::string render_md(const Report& rep) {
  std::ostringstream os;
  os << "| id | lhs | rhs | abs err | tol | ok |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto& [rec, res] : rep.checks) {
    char row[256];
    std::snprintf(row, sizeof(row),
                  "| %s | %.12g | %.12g | %.3e | %.1e | %s |\n",
                  farhi::identities::to_string(res.id).c_str(), res.lhs_value,
                  res.rhs_value, res.abs_err, res.tol,
                  res.pass ? "✓" : "✗");
    os << row;
  }
  os << "\nsummary: total=" << rep.checks.size() << " passed=" << rep.passed
     << " failed=" << rep.failed << "\n";
  return os.str();
}

int cmd_eta(const std::string& method) {
  const auto& c = farhi::constants::table();
  try {
    if (method == "closed") {
      std::cout << fmt15(c.eta_closed) << "\n";
    } else if (method == "quadrature") {
      std::cout << fmt15(farhi::quadrature::eta_by_direct_quadrature())
                << "\n";
    } else if (method == "malmsten") {
      std::cout << fmt15(farhi::quadrature::eta_by_malmsten()) << "\n";
    } else {  // all
      const double closed = c.eta_closed;
      const double quad = farhi::quadrature::eta_by_direct_quadrature();
      const double malm = farhi::quadrature::eta_by_malmsten();
      std::cout << "closed     = " << fmt15(closed) << "\n"
                << "quadrature = " << fmt15(quad) << "\n"
                << "malmsten   = " << fmt15(malm) << "\n";
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "|closed-quadrature| = %.3e\n"
                    "|closed-malmsten|   = %.3e\n"
                    "|quadrature-malmsten| = %.3e\n",
                    std::abs(closed - quad), std::abs(closed - malm),
                    std::abs(quad - malm));
      std::cout << buf;
    }
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int cmd_check(const std::vector<std::string>& ids, bool all, double tol_scale,
              const std::string& format, const std::string& out_path) {
  std::vector<const farhi::identities::IdentityRecord*> selected;
  if (all) {
    for (const auto& rec : farhi::identities::registry()) {
      selected.push_back(&rec);
    }
  } else {
    for (const auto& name : ids) {
      const auto* rec = farhi::identities::find(name);
      if (rec == nullptr) {
        std::cerr << "unknown identity id: " << name << "\nvalid ids:\n";
        for (const auto& r : farhi::identities::registry()) {
          std::cerr << "  " << farhi::identities::to_string(r.id) << "\n";
        }
        return 2;
      }
      selected.push_back(rec);
    }
  }

  const Report rep = make_report(selected, tol_scale);
  std::string rendered;
  if (format == "json") {
    rendered = to_json(rep).dump(2) + "\n";
  } else if (format == "md") {
    rendered = render_md(rep);
  } else {
    rendered = render_text(rep);
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      return 1;
    }
    out << rendered;
  } else {
    std::cout << rendered;
  }
  return rep.failed == 0 ? 0 : 1;
}

int cmd_constants() {
  const auto& c = farhi::constants::table();
  std::cout << "pi           = " << fmt15(c.pi)
            << "   (standard library)\n"
            << "gamma        = " << fmt15(c.gamma)
            << "   (harmonic sum, Euler-Maclaurin tail, N=1e4)\n"
            << "log_2pi      = " << fmt15(c.log_two_pi) << "   (log(2 pi))\n"
            << "zeta_prime_2 = " << fmt15(c.zeta_prime_2)
            << "  (direct sum to 1e5 + Euler-Maclaurin tail)\n"
            << "log_glaisher = " << fmt15(c.log_glaisher)
            << "   (from zeta'(2), gamma and log 2pi)\n"
            << "ci_2pi       = " << fmt15(c.ci_two_pi)
            << "  (power series)\n"
            << "eta          = " << fmt15(c.eta_closed)
            << "   (closed form (gamma + log 2pi)/pi)\n";
  return 0;
}

int cmd_list() {
  for (const auto& rec : farhi::identities::registry()) {
    char line[512];
    std::snprintf(line, sizeof(line), "%-22s tol=%-8.1e %-12s %s\n",
                  farhi::identities::to_string(rec.id).c_str(), rec.tol,
                  rec.paper_ref.c_str(), rec.description.c_str());
    std::cout << line;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eta verification harness: three routes to Farhi's constant "
               "and numerical checks of the identities behind them"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto* eta = app.add_subcommand("eta", "compute eta by the selected route");
  std::string method = "closed";
  eta->add_option("--method", method, "closed|quadrature|malmsten|all")
      ->check(CLI::IsMember({"closed", "quadrature", "malmsten", "all"}));

  auto* check = app.add_subcommand("check", "run identity checks");
  std::vector<std::string> ids;
  bool all = false;
  double tol_scale = 1.0;
  std::string format = "text";
  std::string out_path;
  check->add_option("ids", ids, "identity ids to run");
  check->add_flag("--all", all, "run every registered check");
  check->add_option("--tol-scale", tol_scale, "tolerance multiplier")
      ->check(CLI::PositiveNumber);
  check->add_option("--format", format, "text|json|md")
      ->check(CLI::IsMember({"text", "json", "md"}));
  check->add_option("--out", out_path, "write the report to a file");

  auto* constants =
      app.add_subcommand("constants", "print the cached constants table");
  auto* list = app.add_subcommand("list", "list the identity registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2
  }

  try {
    if (eta->parsed()) return cmd_eta(method);
    if (check->parsed()) {
      if (!all && ids.empty()) {
        std::cerr << "check: provide identity ids or --all\n";
        return 2;
      }
      return cmd_check(ids, all, tol_scale, format, out_path);
    }
    if (constants->parsed()) return cmd_constants();
    if (list->parsed()) return cmd_list();
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
