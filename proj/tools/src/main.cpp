#include <CLI11.hpp>
#include <iostream>

#include "hypermod/cli/commands.hpp"

using namespace hypermod::cli;

int main(int argc, char** argv) {
  CLI::App app{"hypermod: truncated hypergeometric sums, modular forms and their L-values"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<long> pmax, precision, max_terms;
  std::optional<std::string> cache_dir, config_path;
  std::string format = "text";
  bool offline = false;
  app.add_option("--pmax", pmax, "Largest prime to examine");
  app.add_option("--precision", precision, "Working precision in bits");
  app.add_option("--max-terms", max_terms, "Coefficient budget for conductor searches");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--offline", offline, "Never touch the network");
  app.add_option("--cache-dir", cache_dir, "Directory for cached expansions and traces");
  app.add_option("--config", config_path,
                 std::string("key=value configuration file (default: $") + kConfigEnv + ")");

  std::string case_id, family_id, form_id, m_range, upper, z = "1", eps = "0", angle = "0";
  std::string curve, label, r_text;
  int order = 0, samples = 24;
  bool with_lratio = false;
  std::optional<long> conductor;

  auto* sc = app.add_subcommand("supercongruence", "Check a catalogued congruence or 'all'");
  sc->add_option("case", case_id)->required();
  auto* ev = app.add_subcommand("eigenvalues", "Hecke eigenvalues reconstructed from truncations");
  ev->add_option("family", family_id, "r,t")->required();
  auto* lr = app.add_subcommand("lratio", "Critical L-values against hypergeometric values");
  lr->add_option("form", form_id, "Form id or family r,t")->required();
  lr->add_option("--m", m_range, "1..5, 2,3 or 2");
  auto* fr = app.add_subcommand("frobenius", "Normalized Frobenius basis F_j(z)");
  fr->add_option("upper", upper, "Upper parameters, e.g. 1/2,1/2,1/2,1/2")->required();
  fr->add_option("--z", z, "Rational argument");
  fr->add_option("--order", order, "Number of basis functions");
  auto* tb = app.add_subcommand("table1", "The fourteen Calabi-Yau families");
  auto* ec = app.add_subcommand("ellcurve", "Point counts, trace congruences, weight-2 L-ratio");
  ec->add_option("family", curve, "legendre, w3, w4 or w6")->required();
  ec->add_option("--z", z, "Rational fibre")->required();
  ec->add_flag("--lratio", with_lratio, "Run the L-value pipeline");
  ec->add_option("--conductor", conductor, "Skip the conductor search");
  auto* cl = app.add_subcommand("clausen", "Generalized Clausen residual, tau(z), dz/dtau");
  cl->add_option("r", r_text, "Parameter r")->required();
  cl->add_option("--z", z, "Rational argument");
  cl->add_option("--eps", eps, "Decimal epsilon");
  auto* fo = app.add_subcommand("fourier", "Fourier profile of the bilateral series in epsilon");
  fo->add_option("upper", upper, "Upper parameters")->required();
  fo->add_option("--z", z, "Modulus of the point");
  fo->add_option("--angle", angle, "Argument of the point in units of pi");
  fo->add_option("--samples", samples, "Fit samples per period");
  auto* fe = app.add_subcommand("fetch", "Newform coefficients from the external database");
  fe->add_option("label", label)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunConfig cfg;
  try {
    if (auto path = resolve_config_path(config_path)) cfg = load_config_file(*path);
    if (pmax) cfg.max_prime = *pmax;
    if (precision) cfg.precision_bits = *precision;
    if (max_terms) cfg.max_terms = *max_terms;
    if (cache_dir) cfg.cache_dir = *cache_dir;
    if (offline) cfg.offline = true;
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  hypermod::set_default_precision(cfg.precision_bits);

  Report rep;
  if (*sc) {
    rep = guarded("supercongruence", [&] { return cmd_supercongruence(case_id, cfg); });
  } else if (*ev) {
    rep = guarded("eigenvalues", [&] { return cmd_eigenvalues(family_id, cfg); });
  } else if (*lr) {
    rep = guarded("lratio", [&] { return cmd_lratio(form_id, m_range, cfg); });
  } else if (*fr) {
    rep = guarded("frobenius", [&] { return cmd_frobenius(upper, z, order, cfg); });
  } else if (*tb) {
    rep = guarded("table1", [&] { return cmd_table1(cfg); });
  } else if (*ec) {
    rep = guarded("ellcurve", [&] { return cmd_ellcurve(curve, z, with_lratio, conductor, cfg); });
  } else if (*cl) {
    rep = guarded("clausen", [&] { return cmd_clausen(r_text, z, eps, cfg); });
  } else if (*fo) {
    rep = guarded("fourier", [&] { return cmd_fourier(upper, z, angle, samples, cfg); });
  } else if (*fe) {
    rep = guarded("fetch", [&] { return cmd_fetch(label, cfg); });
  }
  std::cout << render(rep, parse_format(format));
  if (rep.summary.contains("error")) {
    std::cerr << "error: " << rep.summary["error"].get<std::string>() << "\n";
  }
  return rep.exit_code;
}
