#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "hocc/error.hpp"
#include "hocc_cli/cli.hpp"

namespace hocc::cli {
namespace {

void add_common(CLI::App& sub, RunConfig& cfg, std::string& snr, std::string& methods,
                std::string& weights, std::string& config) {
  sub.add_option("--model", cfg.model, "fading model spec, e.g. nak:m=2 or egk:m=2,xi=1.5,ms=1.5,xis=0.8");
  sub.add_option("--order", cfg.order, "capacity order n")->check(CLI::PositiveNumber);
  sub.add_option("--snr-db", snr, "mean SNR range START:STOP in dB");
  sub.add_option("--points", cfg.points, "grid points");
  sub.add_option("--methods", methods, "quadrature,mc,high,low,jensen,gap");
  sub.add_option("--samples", cfg.samples, "Monte Carlo samples");
  sub.add_option("--seed", cfg.seed, "Monte Carlo seed");
  sub.add_option("--eps", cfg.eps, "GL stencil step");
  sub.add_option("--weights", weights, "boundary weights w1,w2,w3,w4");
  sub.add_option("--delta-start", cfg.delta_start, "first order in the boundary objective");
  sub.add_option("--out", cfg.out, "output file (default stdout)");
  sub.add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  sub.add_option("--config", config, "key = value file; command-line flags win");
}

// config entries go right after the subcommand so later flags override them
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty() || args.empty()) return args;
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file '" + path + "'");
  std::vector<std::string> extra;
  for (const auto& e : read_config(in)) extra.push_back("--" + e.key + "=" + e.value);
  args.insert(args.begin() + 1, extra.begin(), extra.end());
  return args;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Higher-order capacity statistics over fading channels", "hocc"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  RunConfig cfg;
  std::string snr, methods, weights, config;
  bool all = false;

  auto* curve = app.add_subcommand("curve", "HOCC versus mean SNR");
  auto* boundary = app.add_subcommand("boundary", "low/high regime boundaries");
  auto* validate = app.add_subcommand("validate", "invariant suite");
  for (auto* sub : {curve, boundary, validate}) add_common(*sub, cfg, snr, methods, weights, config);
  validate->add_flag("--all", all, "check every reference model");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = merge_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!snr.empty()) std::tie(cfg.snr_start_db, cfg.snr_stop_db) = parse_snr_range(snr);
    if (!methods.empty()) cfg.methods = parse_list(methods);
    if (!weights.empty()) cfg.weights = parse_weights(weights);

    std::ofstream file;
    if (!cfg.out.empty()) {
      file.open(cfg.out);
      if (!file) throw DomainError("cannot open output file '" + cfg.out + "'");
    }
    std::ostream& sink = cfg.out.empty() ? out : file;

    if (curve->parsed()) {
      cmd_curve(cfg, sink, err);
      return 0;
    }
    if (boundary->parsed()) {
      cmd_boundary(cfg, out, sink, err);
      return 0;
    }
    const bool single = validate->count("--model") > 0 && !all;
    return cmd_validate(cfg, !single, sink) == 0 ? 0 : 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hocc::cli
