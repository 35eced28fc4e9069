// ppcd: construct, plan, verify, extend and export optimal two-level
// partial profile choice designs.
//
// Exit codes: 0 success/pass, 1 usage or input error, 2 not plannable /
// not available, 3 certificate failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ppcd/construct.hpp"
#include "ppcd/io.hpp"
#include "ppcd/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnavailable = 2;
constexpr int kExitCertificate = 3;

std::string plan_summary(const ppcd::ConstructionPlan& plan) {
  std::ostringstream out;
  out << "N=" << plan.N << ", ";
  switch (plan.method) {
    case ppcd::Method::SaturatedW:
      out << "saturated W(" << plan.n << "," << plan.rho << ")";
      break;
    case ppcd::Method::MethodW:
      out << "Method-W with W(" << plan.nu << "," << plan.rho << ")";
      break;
    case ppcd::Method::MethodH:
      out << "Method-H with H" << plan.h;
      break;
  }
  return out.str();
}

void print_plan(const ppcd::ConstructionPlan& plan) {
  std::cout << plan_summary(plan) << "\n";
  if (plan.method == ppcd::Method::SaturatedW) return;
  std::cout << "alternatives considered:\n";
  for (const auto& [nu, k] : plan.candidates)
    std::cout << "  Method-W with W(" << nu << "," << plan.rho << "): K=" << k << "\n";
  if (plan.candidates.empty()) std::cout << "  (no Method-W candidate: no W(nu," << plan.rho
                                         << ") with nu < " << plan.n << ")\n";
  std::cout << "  N1=" << (plan.candidates.empty() ? std::string("-") : std::to_string(plan.N1))
            << " (Method-W), N2=" << plan.N2 << " (Method-H with H" << plan.h << ")\n";
}

ppcd::GeneratorSet generators_for(const ppcd::PartialDesign& base, int m,
                                  const std::vector<std::string>& explicit_gens, bool auto_gens) {
  ppcd::GeneratorSet g;
  g.rho = base.params.rho;
  if (!explicit_gens.empty()) {
    for (const auto& s : explicit_gens) g.generators.push_back(ppcd::generator_from_string(s));
    ppcd::validate_generator_set(g, base.params.n, base.params.rho);
    return g;
  }
  if (!auto_gens)
    throw std::invalid_argument("m > 2 needs --generators or --auto-generators");
  int alpha = (m - 1) / 2;  // smallest alpha with m <= 2*alpha + 2
  auto found = ppcd::auto_generators(base, alpha);
  if (!found)
    throw std::invalid_argument("no suitable generator set found for n=" +
                                std::to_string(base.params.n) +
                                ", rho=" + std::to_string(base.params.rho));
  return *found;
}

void write_out(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write to " + path);
  out << content;
}

int run(int argc, char** argv) {
  CLI::App app{"optimal two-level partial profile choice designs"};
  app.require_subcommand(1);

  ppcd::Catalog catalog = ppcd::Catalog::load_default();

  int n = 0, rho = 0, m = 2, fixed_level = 0;
  std::string model_name = "main", out_path, in_path, format = "csv";
  std::vector<std::string> generator_bits;
  bool auto_gens = false, oracle = false;

  auto* plan_cmd = app.add_subcommand("plan", "minimum-N construction plan for (n, rho)");
  plan_cmd->add_option("--n", n, "number of factors")->required();
  plan_cmd->add_option("--rho", rho, "profile strength")->required();

  auto* construct_cmd = app.add_subcommand("construct", "construct and certify a design");
  construct_cmd->add_option("--n", n, "number of factors")->required();
  construct_cmd->add_option("--rho", rho, "profile strength")->required();
  construct_cmd->add_option("--m", m, "choice set size")->default_val(2);
  construct_cmd->add_option("--model", model_name, "main | broader")->default_val("main");
  construct_cmd->add_option("--fixed-level", fixed_level, "level for inactive positions")
      ->default_val(0);
  construct_cmd->add_option("--out", out_path, "output design file ('-' for stdout)")->required();
  construct_cmd->add_option("--generators", generator_bits, "comma separated generator bit strings")
      ->delimiter(',');
  construct_cmd->add_flag("--auto-generators", auto_gens, "search generators automatically");

  auto* verify_cmd = app.add_subcommand("verify", "verify the certificate of a design file");
  verify_cmd->add_option("path", in_path, "design file")->required();
  verify_cmd->add_option("--model", model_name, "main | broader (default: file header)");
  verify_cmd->add_flag("--oracle", oracle, "cross-check against the brute-force engine (n <= 10)");

  auto* extend_cmd = app.add_subcommand("extend", "extend a paired design file to m options");
  extend_cmd->add_option("path", in_path, "paired design file (m = 2)")->required();
  extend_cmd->add_option("--m", m, "target choice set size")->required();
  extend_cmd->add_option("--out", out_path, "output design file ('-' for stdout)")->required();
  extend_cmd->add_option("--generators", generator_bits, "comma separated generator bit strings")
      ->delimiter(',');
  extend_cmd->add_flag("--auto-generators", auto_gens, "search generators automatically");

  auto* tables_cmd = app.add_subcommand("tables", "reproduce the published N tables");

  auto* export_cmd = app.add_subcommand("export", "export a design file as CSV");
  export_cmd->add_option("path", in_path, "design file")->required();
  export_cmd->add_option("--format", format, "output format")->default_val("csv");
  export_cmd->add_option("--out", out_path, "output path ('-' for stdout)")->default_val("-");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (plan_cmd->parsed()) {
    if (n < 1 || rho < 1 || rho > n) {
      std::cerr << "error: need 1 <= rho <= n\n";
      return kExitUsage;
    }
    auto plan = ppcd::plan_minimum_N(catalog, n, rho);
    if (!plan.plannable) {
      std::cerr << "not plannable: " << plan.reason << "\n";
      return kExitUnavailable;
    }
    print_plan(plan);
    return kExitOk;
  }

  if (construct_cmd->parsed()) {
    if (n < 1 || rho < 1 || rho > n || m < 2 || (fixed_level != 0 && fixed_level != 1)) {
      std::cerr << "error: need 1 <= rho <= n, m >= 2 and fixed level in {0,1}\n";
      return kExitUsage;
    }
    ppcd::Model model;
    if (model_name == "main") model = ppcd::Model::Main;
    else if (model_name == "broader") model = ppcd::Model::Broader;
    else {
      std::cerr << "error: --model must be 'main' or 'broader'\n";
      return kExitUsage;
    }
    auto plan = ppcd::plan_minimum_N(catalog, n, rho);
    if (!plan.plannable) {
      std::cerr << "not plannable: " << plan.reason << "\n";
      return kExitUnavailable;
    }
    ppcd::PartialDesign d = ppcd::construct_from_plan(catalog, plan, fixed_level);
    try {
      if (m > 2) d = ppcd::extend_to_m(d, generators_for(d, m, generator_bits, auto_gens), m);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUnavailable;
    }
    if (model == ppcd::Model::Broader) d = ppcd::construct_broader(d);
    auto cert = ppcd::certify(d, model);
    if (!cert.passed) {
      // constructions are certified by theory; a failure here is a bug
      std::cerr << "internal error: constructed design fails its certificate\n"
                << ppcd::render_certificate(cert);
      return kExitCertificate;
    }
    write_out(out_path, ppcd::write_design_file(d, model, cert));
    std::cerr << plan_summary(plan) << ", m=" << m << ", model=" << model_name << ": certificate PASS\n";
    return kExitOk;
  }

  if (verify_cmd->parsed()) {
    ppcd::Model model;
    ppcd::PartialDesign d;
    try {
      d = ppcd::parse_design_path(in_path, &model);
    } catch (const ppcd::ParseError& e) {
      std::cerr << in_path << ": " << e.what() << "\n";
      return kExitUsage;
    }
    if (verify_cmd->count("--model")) {
      if (model_name == "main") model = ppcd::Model::Main;
      else if (model_name == "broader") model = ppcd::Model::Broader;
      else {
        std::cerr << "error: --model must be 'main' or 'broader'\n";
        return kExitUsage;
      }
    }
    auto cert = ppcd::certify(d, model);
    std::cout << (cert.passed ? "PASS" : "FAIL") << " (" << ppcd::model_name(model) << ")\n"
              << ppcd::render_certificate(cert);
    if (oracle) {
      if (d.params.n > 10) {
        std::cout << "oracle: skipped (n > 10)\n";
      } else {
        auto counting = ppcd::c_matrix_from_counts(ppcd::tally_counts(d), d.params);
        auto brute = ppcd::brute_force_c_matrix(d);
        double max_diff = 0;
        for (int i = 0; i < d.params.n; ++i)
          for (int j = 0; j < d.params.n; ++j)
            max_diff = std::max(max_diff, std::abs(counting.entries[i][j].value() - brute(i, j)));
        std::cout << "oracle: max entrywise discrepancy " << max_diff << "\n";
      }
    }
    return cert.passed ? kExitOk : kExitCertificate;
  }

  if (extend_cmd->parsed()) {
    ppcd::Model model;
    ppcd::PartialDesign d;
    try {
      d = ppcd::parse_design_path(in_path, &model);
    } catch (const ppcd::ParseError& e) {
      std::cerr << in_path << ": " << e.what() << "\n";
      return kExitUsage;
    }
    ppcd::PartialDesign extended;
    try {
      extended = ppcd::extend_to_m(d, generators_for(d, m, generator_bits, auto_gens), m);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUnavailable;
    }
    auto cert = ppcd::certify(extended, model);
    if (!cert.passed) {
      std::cerr << "extended design fails its certificate\n" << ppcd::render_certificate(cert);
      return kExitCertificate;
    }
    write_out(out_path, ppcd::write_design_file(extended, model, cert));
    return kExitOk;
  }

  if (tables_cmd->parsed()) {
    std::cout << ppcd::render_table1(catalog) << "\n" << ppcd::render_table2(catalog);
    return kExitOk;
  }

  if (export_cmd->parsed()) {
    if (format != "csv") {
      std::cerr << "error: only --format csv is supported\n";
      return kExitUsage;
    }
    try {
      auto d = ppcd::parse_design_path(in_path, nullptr);
      write_out(out_path, ppcd::export_csv(d));
    } catch (const ppcd::ParseError& e) {
      std::cerr << in_path << ": " << e.what() << "\n";
      return kExitUsage;
    }
    return kExitOk;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
