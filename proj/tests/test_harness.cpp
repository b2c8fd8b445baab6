#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wbembed/barcode.hpp"
#include "wbembed/commands.hpp"
#include "wbembed/error.hpp"
#include "wbembed/io.hpp"
#include "wbembed/witness.hpp"

using namespace wbembed;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& body) {
  const fs::path p = fs::temp_directory_path() / ("wbembed_test_" + name);
  std::ofstream(p) << body;
  return p;
}

const char* kInterval = R"({"type":"open_box","low":[0],"high":[1]})";

std::string tuple_file(const std::string& name, const std::string& points) {
  return write_temp(name, std::string(R"({"domain":)") + kInterval + R"(,"points":)" + points + "}")
      .string();
}

}  // namespace

TEST(Io, DomainRoundTrip) {
  for (const auto& d : {Domain::open_box({0.0}, {1.0}), Domain::upper_diagonal(),
                        Domain::punctured({{0.0, 0.0}, {1.0, 0.5}}),
                        Domain::complement_box({0.0, 0.0}, {1.0, 2.0})}) {
    EXPECT_EQ(io::parse_domain(io::domain_to_json(d)), d);
  }
  EXPECT_THROW(io::parse_domain_argument(R"({"type":"sphere"})"), Error);
  EXPECT_THROW(io::parse_domain_argument("{not json"), Error);
}

TEST(Io, TupleRoundTrip) {
  auto d = std::make_shared<const Domain>(Domain::open_box({0.0, 0.0}, {1.0, 1.0}));
  const auto t = UnorderedTuple::from_coords(d, {{0.1, 0.2}, {0.3, 0.4}}, 2);
  EXPECT_EQ(io::parse_tuple(io::tuple_to_json(t)), t);
}

TEST(Io, CouplingRoundTrip) {
  const DiscreteCoupling c{{ShortcutPoint::at({0.1}), ShortcutPoint::boundary(), 0.5}};
  const auto back = io::parse_coupling(io::coupling_to_json(c));
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].source, c[0].source);
  EXPECT_TRUE(back[0].target.is_boundary());
  EXPECT_EQ(back[0].mass, 0.5);
}

TEST(Io, FormatDoubleRoundTrips) {
  const double x = 0.1 + 0.2;
  EXPECT_EQ(std::stod(io::format_double(x)), x);
  EXPECT_EQ(io::format_double(std::sqrt(0.13), 12), "0.360555127546");
}

TEST(Barcode, Parse) {
  std::istringstream in("# diagram\n0,1\n\n 0.5 , 2.5 # trailing\n");
  const auto d = parse_barcode(in, "x");
  ASSERT_EQ(d.pairs.size(), 2u);
  EXPECT_EQ(d.pairs[1][1], 2.5);
}

TEST(Barcode, RejectsBadRowsWithLineNumbers) {
  std::istringstream in("0,1\n2,1\n3,3\nfoo\n");
  try {
    parse_barcode(in, "bad");
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
    EXPECT_NE(msg.find("line 4"), std::string::npos) << msg;
  }
}

TEST(Barcode, Distances) {
  const std::vector<BarcodeDiagram> ds{{"a", {{0.0, 1.0}}}, {"empty", {}},
                                       {"b", {{0.0, 2.0}, {1.0, 3.0}}}, {"c", {{0.0, 2.0}}}};
  const auto m = barcode_distance_matrix(ds);
  EXPECT_NEAR(m[0][1], 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(m[2][3], std::sqrt(2.0), 1e-12);
  EXPECT_EQ(m[2][2], 0.0);
}

TEST(Witness, SmallInstance) {
  const Domain d = Domain::open_box({0.0, 0.0}, {1.0, 1.0});
  const auto w = nondoubling_witness(d, 3, 0.01);
  ASSERT_EQ(w.points.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(d.dist_to_complement(w.points[i]), 0.005, 1e-12);
    for (std::size_t j = i + 1; j < 3; ++j) {
      EXPECT_NEAR(shortcut_distance(d, ShortcutPoint::at(w.points[i]), ShortcutPoint::at(w.points[j])),
                  0.01, 1e-9);
    }
  }
}

TEST(Witness, UpperDiagonal) {
  const Domain d = Domain::upper_diagonal();
  const auto w = nondoubling_witness(d, 10, 0.02);
  EXPECT_LE(w.max_pair_error, 1e-9);
}

TEST(Witness, RejectsUnsupportedInputs) {
  EXPECT_THROW(nondoubling_witness(Domain::open_box({0.0}, {1.0}), 3, 0.01), Error);
  EXPECT_THROW(nondoubling_witness(Domain::punctured({{0.0, 0.0}}), 3, 0.01), Error);
  EXPECT_THROW(nondoubling_witness(Domain::open_box({0.0, 0.0}, {1.0, 1.0}), 3, 5.0), Error);
}

TEST(Commands, Distance) {
  const auto a = tuple_file("a.json", "[[0.2],[0.8]]");
  const auto b = tuple_file("b.json", "[[0.5]]");
  const auto e = tuple_file("e.json", "[]");
  std::ostringstream out;
  EXPECT_EQ(cli::cmd_distance(a, b, 2.0, std::nullopt, out), cli::kSuccess);
  EXPECT_EQ(out.str(), "0.360555127546\n");
  out.str("");
  cli::cmd_distance(a, a, 2.0, std::nullopt, out);
  EXPECT_EQ(out.str(), "0\n");
  out.str("");
  cli::cmd_distance(e, b, 2.0, std::nullopt, out);
  EXPECT_EQ(out.str(), "0.5\n");
}

TEST(Commands, DistanceDomainMismatch) {
  const auto a = tuple_file("m1.json", "[[0.5]]");
  const auto b = write_temp("m2.json", R"({"domain":{"type":"open_box","low":[0],"high":[2]},"points":[[0.5]]})");
  std::ostringstream out;
  EXPECT_THROW(cli::cmd_distance(a, b.string(), 2.0, std::nullopt, out), Error);
}

TEST(Commands, Embed) {
  const auto a = tuple_file("emb.json", "[[0.375]]");
  std::ostringstream out;
  EXPECT_EQ(cli::cmd_embed(a, 1, 1, std::nullopt, out), cli::kSuccess);
  const auto j = io::json::parse(out.str());
  EXPECT_EQ(j.at("M"), 2);
  EXPECT_TRUE(j.at("entries").contains("-2,1"));
  EXPECT_THROW(cli::cmd_embed(tuple_file("emb2.json", "[[0.1],[0.2]]"), 1, 1, std::nullopt, out), Error);
}

TEST(Commands, ExperimentIsDeterministic) {
  ExperimentConfig c;
  c.domain = std::make_shared<const Domain>(Domain::open_box({0.0, 0.0}, {1.0, 1.0}));
  c.m = 2;
  c.samples = 30;
  c.seed = 42;
  std::ostringstream r1, r2, s1, s2;
  EXPECT_EQ(cli::cmd_distortion_experiment(c, r1, s1), cli::kSuccess);
  EXPECT_EQ(cli::cmd_distortion_experiment(c, r2, s2), cli::kSuccess);
  EXPECT_EQ(r1.str(), r2.str());
  EXPECT_EQ(s1.str(), s2.str());
  EXPECT_NE(r1.str().find("# seed 42"), std::string::npos);
}

TEST(Commands, ExperimentWithSinglePoints) {
  ExperimentConfig c;
  c.domain = std::make_shared<const Domain>(Domain::open_box({0.0, 0.0}, {1.0, 1.0}));
  c.m = 1;
  c.samples = 50;
  std::ostringstream report, summary;
  EXPECT_EQ(cli::cmd_distortion_experiment(c, report, summary), cli::kSuccess);
  EXPECT_NE(summary.str().find("sandwich_violations 0"), std::string::npos);
}

TEST(Commands, Witness) {
  std::ostringstream out;
  EXPECT_EQ(cli::cmd_nondoubling_witness(Domain::open_box({0.0, 0.0}, {1.0, 1.0}), 3, 0.01, out),
            cli::kSuccess);
  const auto j = io::json::parse(out.str());
  EXPECT_EQ(j.at("points").size(), 3u);
  EXPECT_EQ(j.at("epsilon"), 0.01);
  EXPECT_EQ(io::parse_tuple(j).size(), 3u);
}

TEST(Commands, Barcode) {
  const auto a = write_temp("bar_a.csv", "0,1\n").string();
  const auto e = write_temp("bar_e.csv", "# empty\n").string();
  std::ostringstream out;
  cli::BarcodeOptions opt;
  opt.embed = true;
  EXPECT_EQ(cli::cmd_barcode({a, e}, opt, out), cli::kSuccess);
  EXPECT_NE(out.str().find("0.707106781187"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("pair,wb,zeta,ratio"), std::string::npos);
}

TEST(Commands, Whitney) {
  std::ostringstream out;
  cli::cmd_whitney(Domain::open_box({0.0}, {1.0}), Box{{0.3}, {0.4}}, -5, out);
  const auto j = io::json::parse(out.str().substr(0, out.str().find('\n')));
  EXPECT_EQ(j.at("k"), -2);
  EXPECT_EQ(j.at("corner"), io::json::array({1}));
  EXPECT_EQ(j.at("neighbors"), io::json::array({"-3,1", "-2,2"}));
}
