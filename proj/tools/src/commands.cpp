#include "k3cli/commands.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "k3/errors.hpp"
#include "k3/hilbert.hpp"
#include "k3/invariants.hpp"
#include "k3/qseries.hpp"

namespace k3cli {

namespace {

bool ends_with_csv(const std::filesystem::path& path) { return path.extension() == ".csv"; }

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

int classify(const RunConfig& cfg, std::ostream& out) {
  const auto report = k3::fiber_profile(read_surface_params(cfg.input));
  write_text(cfg.output, dump(fiber_report_json(report)), out);
  return report.in_U ? kSuccess : kNegative;
}

int verify(const RunConfig& cfg, const InvariantBackend& backend, std::ostream& out, std::ostream& err) {
  const auto report = run_verification(cfg, backend);
  write_text(cfg.output, dump(report.to_json()), out);
  if (!report.ok()) err << report.failures.size() << " failing trial(s)\n";
  return report.ok() ? kSuccess : kNegative;
}

int hilbert(const RunConfig& cfg, bool oracle, bool with_characters, std::ostream& out) {
  const int N = cfg.max_degree;
  if (oracle && N > k3::kOracleDegreeBound) {
    throw InputError("--oracle supports --max-degree up to " + std::to_string(k3::kOracleDegreeBound));
  }
  const auto series = k3::character_series(N);
  std::vector<std::size_t> dims;
  if (oracle) {
    dims = k3::parallel_map(static_cast<std::size_t>(N) + 1,
                            [](std::size_t d) { return k3::invariant_dimension_oracle(static_cast<int>(d)); });
  }
  bool agree = true;
  Json rows = Json::array();
  std::vector<std::vector<std::string>> table;
  for (int d = 0; d <= N; ++d) {
    const std::string dim = series.plain[d].get_str();
    Json row{{"degree", d}, {"dim", dim}};
    std::vector<std::string> cells{std::to_string(d), dim};
    if (oracle) {
      agree = agree && mpz_class(dims[d]) == series.plain[d];
      row["oracle"] = std::to_string(dims[d]);
      cells.push_back(std::to_string(dims[d]));
    }
    if (with_characters) {
      row["dim_with_characters"] = series.with_characters[d].get_str();
      cells.push_back(series.with_characters[d].get_str());
    }
    rows.push_back(std::move(row));
    table.push_back(std::move(cells));
  }
  if (ends_with_csv(cfg.output)) {
    std::vector<std::string> header{"degree", "dim"};
    if (oracle) header.emplace_back("oracle");
    if (with_characters) header.emplace_back("dim_with_characters");
    write_text(cfg.output, csv(header, table), out);
  } else {
    write_text(cfg.output, dump(rows), out);
  }
  return agree ? kSuccess : kNegative;
}

int qseries(const RunConfig& cfg, const std::string& name, int terms, std::ostream& out) {
  if (terms < 1) throw InputError("--terms must be at least 1");
  k3::QSeries s = name == "borcherds" ? k3::borcherds_input(std::max(0, terms - 2)) : k3::eisenstein(name == "e4" ? 4 : 6, terms - 1);
  const int first = name == "borcherds" ? -1 : 0;
  Json coeffs = Json::array();
  std::vector<std::vector<std::string>> table;
  for (int e = first; e < first + terms; ++e) {
    const std::string c = s.coefficient(e).get_str();
    coeffs.push_back(c);
    table.push_back({std::to_string(e), c});
  }
  if (ends_with_csv(cfg.output)) {
    write_text(cfg.output, csv({"exponent", "coefficient"}, table), out);
  } else {
    write_text(cfg.output, dump(Json{{"series", name}, {"first_exponent", first}, {"coefficients", coeffs}}), out);
  }
  return kSuccess;
}

int invariant(const RunConfig& cfg, const std::string& name_text, std::ostream& out) {
  const auto name = k3::parse_invariant_name(name_text);
  if (!name) throw InputError("unknown invariant '" + name_text + "' (expected r96, k552 or delta264)");
  k3::SurfaceParams u = read_surface_params(cfg.input);
  if (cfg.modulus) u = u.reduce_mod(*cfg.modulus);
  const auto value = k3::evaluate_invariant(*name, u);
  Json j{{"name", std::string(k3::to_string(value.name))},
         {"value", value.value.str()},
         {"weight", value.declared_weight},
         {"convention_tag", k3::kConventionTag}};
  if (cfg.modulus) j["modulus"] = std::to_string(*cfg.modulus);
  write_text(cfg.output, dump(j), out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run(args, out, err, InvariantBackend::library());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const InvariantBackend& backend) {
  CLI::App app{"Elliptic K3 Weierstrass models: fibers, invariants, Hilbert and q-series", "k3forms"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::uint64_t modulus = 0;
  bool oracle = false;
  bool with_characters = false;
  int terms = 4;
  std::string series = "borcherds";
  std::string invariant_name;

  auto add_output = [&cfg](CLI::App* sub) { sub->add_option("--output", cfg.output, "Output file (default stdout)"); };

  auto* c_classify = app.add_subcommand("classify", "Singular fibers of a Weierstrass model");
  c_classify->add_option("--input", cfg.input, "SurfaceParams JSON file")->required();
  add_output(c_classify);

  auto* c_verify = app.add_subcommand("verify", "Seeded randomized checks of the invariants");
  c_verify->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  c_verify->add_option("--trials", cfg.trials, "Pointwise trials")->capture_default_str();
  c_verify->add_option("--modulus", modulus, "Prime for the modular checks");
  add_output(c_verify);

  auto* c_hilbert = app.add_subcommand("hilbert", "Hilbert series of the invariant ring");
  c_hilbert->add_option("--max-degree", cfg.max_degree, "Largest t-degree")->capture_default_str();
  c_hilbert->add_flag("--oracle", oracle, "Add the kernel-dimension column");
  c_hilbert->add_flag("--with-characters", with_characters, "Add the character-extended column");
  add_output(c_hilbert);

  auto* c_qseries = app.add_subcommand("qseries", "q-expansion coefficients");
  c_qseries->add_option("--terms", terms, "Number of coefficients")->capture_default_str();
  c_qseries->add_option("--series", series, "borcherds, e4 or e6")
      ->check(CLI::IsMember({"borcherds", "e4", "e6"}))
      ->capture_default_str();
  add_output(c_qseries);

  auto* c_invariant = app.add_subcommand("invariant", "Evaluate r96, k552 or delta264");
  c_invariant->add_option("name", invariant_name, "r96, k552 or delta264")->required();
  c_invariant->add_option("--input", cfg.input, "SurfaceParams JSON file")->required();
  c_invariant->add_option("--modulus", modulus, "Evaluate modulo this prime");
  add_output(c_invariant);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (modulus != 0) cfg.modulus = modulus;
    cfg.validate();
    if (c_classify->parsed()) return classify(cfg, out);
    if (c_verify->parsed()) return verify(cfg, backend, out, err);
    if (c_hilbert->parsed()) return hilbert(cfg, oracle, with_characters, out);
    if (c_qseries->parsed()) return qseries(cfg, series, terms, out);
    return invariant(cfg, invariant_name, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const k3::PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const k3::DegenerateInput& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const k3::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace k3cli
