#include "chowring/app/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "chowring/app/verify_all.hpp"
#include "chowring/latex.hpp"
#include "chowring/localize.hpp"
#include "chowring/pipeline.hpp"
#include "chowring/serialize.hpp"

namespace chowring::app {

namespace {

constexpr int kDeskMaxN = 6;
constexpr int kDeskMaxK = 5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<OutputFormat> parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::kText;
  if (s == "json") return OutputFormat::kJson;
  if (s == "latex") return OutputFormat::kLatex;
  return std::nullopt;
}

OutputFormat default_format() {
  const char* env = std::getenv(kFormatEnv);
  if (env == nullptr || *env == '\0') return OutputFormat::kText;
  auto f = parse_format(env);
  if (!f) throw UsageError(std::string(kFormatEnv) + " must be text, json or latex, got '" + env + "'");
  return *f;
}

void check_limits(const RunConfig& cfg, bool uses_k, std::ostream& err) {
  if (cfg.n < 2) throw UsageError("--n must be at least 2");
  if (uses_k && cfg.k < 0) throw UsageError("--k must be nonnegative");
  const bool beyond = cfg.n > kDeskMaxN || (uses_k && cfg.k > kDeskMaxK);
  if (!beyond) return;
  if (!cfg.force) {
    throw UsageError("n <= " + std::to_string(kDeskMaxN) + " and k <= " + std::to_string(kDeskMaxK) +
                     " are accepted without --force");
  }
  err << "warning: n=" << cfg.n << ", k=" << cfg.k
      << " is beyond desk scale; the computation may be slow\n";
}

void check_max_degree(const RunConfig& cfg, int generator_degree) {
  if (cfg.max_degree && *cfg.max_degree < generator_degree) {
    throw UsageError("--max-degree " + std::to_string(*cfg.max_degree) +
                     " is below the generator degree " + std::to_string(generator_degree));
  }
}

struct Emitted {
  std::string text;
  bool verified = true;
};

Emitted emit_presentation(const RingPresentation& p, const RunConfig& cfg) {
  Emitted e{"", p.verified()};
  switch (cfg.format) {
    case OutputFormat::kText: e.text = presentation_to_text(p); break;
    case OutputFormat::kLatex: e.text = latex_document(p); break;
    case OutputFormat::kJson: {
      nlohmann::json j = presentation_to_json(p);
      j["kind"] = "presentation";
      j["command"] = cfg.command;
      nlohmann::json params = nlohmann::json::object();
      if (cfg.command != "m01") {
        params["n"] = cfg.n;
        params["k"] = cfg.k;
      }
      params["max_degree"] = cfg.max_degree ? nlohmann::json(*cfg.max_degree) : nlohmann::json(nullptr);
      j["parameters"] = params;
      e.text = j.dump(2) + "\n";
      break;
    }
  }
  return e;
}

Emitted emit_pushforward(const RunConfig& cfg) {
  const Polynomial localized = veronese_pushforward(cfg.n, cfg.r);
  const bool agrees = localized == closed_form_pushforward(cfg.n, cfg.r);
  Emitted e{"", agrees};
  switch (cfg.format) {
    case OutputFormat::kText:
      e.text = "i_*K^" + std::to_string(cfg.r) + " (n = " + std::to_string(cfg.n) + ") = " +
               localized.to_string() + "\nclosed form " + (agrees ? "agrees" : "DISAGREES") + "\n";
      break;
    case OutputFormat::kLatex:
      e.text = "\\documentclass{article}\n\\usepackage{amsmath,amssymb}\n\\begin{document}\n"
               "\\begin{equation*}\ni_*K^{" + std::to_string(cfg.r) + "} = " +
               latex_polynomial(localized) + "\n\\end{equation*}\n\\end{document}\n";
      break;
    case OutputFormat::kJson:
      e.text = nlohmann::json{{"schema_version", kReportSchemaVersion},
                              {"kind", "pushforward"},
                              {"n", cfg.n},
                              {"r", cfg.r},
                              {"class", localized.to_string()},
                              {"terms", polynomial_to_json(localized)},
                              {"closed_form_agrees", agrees}}
                   .dump(2) +
               "\n";
      break;
  }
  return e;
}

Emitted emit_verify_all(const RunConfig& cfg) {
  const VerifyAllReport report = verify_all();
  Emitted e{"", report.passed()};
  switch (cfg.format) {
    case OutputFormat::kText: e.text = report_to_text(report, cfg.timings); break;
    case OutputFormat::kLatex: e.text = report_to_latex(report); break;
    case OutputFormat::kJson: e.text = report_to_json(report, cfg.timings).dump(2) + "\n"; break;
  }
  return e;
}

Emitted execute(const RunConfig& cfg, std::ostream& err) {
  PipelineOptions opts{cfg.max_degree};
  if (cfg.command == "m01") {
    check_max_degree(cfg, 6);
    return emit_presentation(m01(opts), cfg);
  }
  if (cfg.command == "quadrics") {
    check_limits(cfg, true, err);
    check_max_degree(cfg, cfg.n * (cfg.n + 1) / 2);
    return emit_presentation(reduced_quadrics(cfg.n, cfg.k, opts), cfg);
  }
  if (cfg.command == "orthogonal") {
    check_limits(cfg, true, err);
    check_max_degree(cfg, cfg.n);
    return emit_presentation(orthogonal(cfg.n, cfg.k, opts), cfg);
  }
  if (cfg.command == "pushforward") {
    check_limits(cfg, false, err);
    if (cfg.r < 0 || cfg.r >= cfg.n) throw UsageError("--r must satisfy 0 <= r <= n-1");
    if (cfg.max_degree) err << "note: --max-degree does not apply to pushforward\n";
    return emit_pushforward(cfg);
  }
  if (cfg.max_degree) err << "note: verify-all uses the fixed degree bound of each check\n";
  return emit_verify_all(cfg);
}

}  // namespace

std::string usage() {
  return "usage: chowring <command> [options]\n"
         "  m01\n"
         "  quadrics --n <int> --k <int>\n"
         "  orthogonal --n <int> --k <int>\n"
         "  pushforward --n <int> --r <int>\n"
         "  verify-all [--timings]\n"
         "options for every command:\n"
         "  --format text|json|latex   (default from $" + std::string(kFormatEnv) + ", else text)\n"
         "  --max-degree <int>\n"
         "  --out <path>\n"
         "  --force                    allow n > 6 or k > 5\n"
         "exit codes: 0 success, 1 usage error, 2 verification failure\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format_text;
  std::string out_path;
  int max_degree = 0;

  CLI::App app{"Integral Chow ring presentations", "chowring"};
  app.require_subcommand(1);
  app.set_help_flag();

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_text)->check(CLI::IsMember({"text", "json", "latex"}));
    sub->add_option("--max-degree", max_degree);
    sub->add_option("--out", out_path);
    sub->add_flag("--force", cfg.force);
  };
  CLI::App* m01_cmd = app.add_subcommand("m01");
  add_common(m01_cmd);
  CLI::App* quadrics_cmd = app.add_subcommand("quadrics");
  quadrics_cmd->add_option("--n", cfg.n)->required();
  quadrics_cmd->add_option("--k", cfg.k)->required();
  add_common(quadrics_cmd);
  CLI::App* orthogonal_cmd = app.add_subcommand("orthogonal");
  orthogonal_cmd->add_option("--n", cfg.n)->required();
  orthogonal_cmd->add_option("--k", cfg.k)->required();
  add_common(orthogonal_cmd);
  CLI::App* pushforward_cmd = app.add_subcommand("pushforward");
  pushforward_cmd->add_option("--n", cfg.n)->required();
  pushforward_cmd->add_option("--r", cfg.r)->required();
  add_common(pushforward_cmd);
  CLI::App* verify_cmd = app.add_subcommand("verify-all");
  verify_cmd->add_flag("--timings", cfg.timings);
  add_common(verify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    cfg.command = app.get_subcommands().front()->get_name();
    CLI::App* sub = app.get_subcommands().front();
    if (sub->count("--max-degree") > 0) cfg.max_degree = max_degree;
    if (sub->count("--out") > 0) cfg.out_path = out_path;
    cfg.format = format_text.empty() ? default_format() : *parse_format(format_text);

    const Emitted result = execute(cfg, err);
    if (cfg.out_path) {
      std::ofstream file(*cfg.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot write " + *cfg.out_path);
      file << result.text;
    } else {
      out << result.text;
    }
    if (!result.verified) {
      err << "verification failed\n";
      return kExitVerificationFailure;
    }
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << usage();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << usage();
    return kExitUsage;
  }
}

}  // namespace chowring::app
