#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "wbembed/commands.hpp"
#include "wbembed/error.hpp"
#include "wbembed/io.hpp"

namespace {

using namespace wbembed;

Box parse_box(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  return Box{j.at("low").get<Point>(), j.at("high").get<Point>()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial-transport distances and their Hilbert-space embedding"};
  app.require_subcommand(1);

  std::string domain_text;
  std::size_t m = 3;
  double exponent = 2.0;
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  int density = 1;
  std::string out_path;

  auto* distance = app.add_subcommand("distance", "Wb distance between two tuple files");
  std::vector<std::string> tuple_files;
  distance->add_option("files", tuple_files, "two tuple JSON files")->required()->expected(2);
  distance->add_option("--p", exponent, "exponent")->check(CLI::Range(1.0, 1e300));
  distance->add_option("--domain", domain_text, "override descriptor (JSON or file)");

  auto* embed = app.add_subcommand("embed", "zeta embedding of a tuple file");
  std::string embed_file;
  embed->add_option("file", embed_file, "tuple JSON file")->required();
  embed->add_option("--m", m, "maximum number of points")->check(CLI::PositiveNumber);
  embed->add_option("--directions", density, "direction-family density")->check(CLI::NonNegativeNumber);
  embed->add_option("--domain", domain_text, "override descriptor (JSON or file)");
  embed->add_option("--out", out_path, "output file");

  auto* experiment = app.add_subcommand("distortion-experiment", "sampled sandwich and distortion report");
  experiment->add_option("--domain", domain_text, "descriptor (JSON or file)")->required();
  experiment->add_option("--m", m, "maximum number of points")->check(CLI::PositiveNumber);
  experiment->add_option("--p", exponent, "exponent");
  experiment->add_option("--samples", samples, "number of pairs");
  experiment->add_option("--seed", seed, "seed");
  experiment->add_option("--directions", density, "direction-family density")->check(CLI::NonNegativeNumber);
  experiment->add_option("--out", out_path, "CSV report path (default stdout)");

  auto* witness = app.add_subcommand("nondoubling-witness", "points with all pairwise distances eps");
  std::size_t count = 20;
  double epsilon = 0.01;
  witness->add_option("--domain", domain_text, "descriptor (JSON or file)")->required();
  witness->add_option("--count", count, "number of points")->check(CLI::PositiveNumber);
  witness->add_option("--eps", epsilon, "target distance")->check(CLI::PositiveNumber);
  witness->add_option("--out", out_path, "output file");

  auto* barcode = app.add_subcommand("barcode", "distances between persistence diagrams");
  std::vector<std::string> barcode_files;
  cli::BarcodeOptions barcode_options;
  std::size_t barcode_m = 0;
  barcode->add_option("files", barcode_files, "CSV files of birth,death rows")->required();
  barcode->add_option("--p", barcode_options.exponent, "exponent");
  barcode->add_flag("--embed", barcode_options.embed, "also write zeta vectors and ratios");
  barcode->add_option("--m", barcode_m, "padding size for --embed");
  barcode->add_option("--directions", barcode_options.density, "direction-family density");
  barcode->add_option("--out", out_path, "output file");

  auto* verify = app.add_subcommand("verify", "run every invariant suite");
  double c0_scale = 1.0;
  verify->add_option("--seed", seed, "seed");
  verify->add_option("--c0-scale", c0_scale)->group("");

  auto* whitney = app.add_subcommand("whitney", "export Whitney cubes meeting a box as JSON lines");
  std::string box_text;
  int min_generation = -8;
  whitney->add_option("--domain", domain_text, "descriptor (JSON or file)")->required();
  whitney->add_option("--box", box_text, R"({"low":[..],"high":[..]})")->required();
  whitney->add_option("--min-generation", min_generation, "smallest generation explored");
  whitney->add_option("--out", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kUsage;
  }

  std::ofstream file;
  auto sink = [&]() -> std::ostream& {
    if (out_path.empty()) return std::cout;
    file.open(out_path);
    if (!file) throw Error("cannot open " + out_path);
    return file;
  };
  const std::optional<std::string> domain_override =
      domain_text.empty() ? std::nullopt : std::optional<std::string>(domain_text);

  try {
    if (*distance) return cli::cmd_distance(tuple_files[0], tuple_files[1], exponent, domain_override, std::cout);
    if (*embed) return cli::cmd_embed(embed_file, m, density, domain_override, sink());
    if (*experiment) {
      ExperimentConfig config;
      config.domain = std::make_shared<const Domain>(io::parse_domain_argument(domain_text));
      config.m = m;
      config.exponent = exponent;
      config.samples = samples;
      config.seed = seed;
      config.direction_density = density;
      config.output_path = out_path;
      return cli::cmd_distortion_experiment(config, sink(), std::cout);
    }
    if (*witness) {
      return cli::cmd_nondoubling_witness(io::parse_domain_argument(domain_text), count, epsilon, sink());
    }
    if (*barcode) {
      if (barcode_m > 0) barcode_options.m = barcode_m;
      return cli::cmd_barcode(barcode_files, barcode_options, sink());
    }
    if (*verify) return cli::cmd_verify(seed, c0_scale, std::cout);
    if (*whitney) {
      const auto domain = io::parse_domain_argument(domain_text);
      return cli::cmd_whitney(domain, parse_box(box_text), min_generation, sink());
    }
  } catch (const CertificateError& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return cli::kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsage;
  }
  return cli::kUsage;
}
