// One line per acceptance criterion; exit status is nonzero if any fails.
#include <cstdio>
#include <string>
#include <vector>

#include "wbembed/suites.hpp"

using namespace wbembed;

namespace {

constexpr std::uint64_t kSeed = 20240601;

void report(int id, const std::string& title, const std::vector<suites::SuiteResult>& parts,
            bool& all_ok) {
  bool ok = true;
  std::string detail;
  std::size_t checks = 0;
  for (const auto& p : parts) {
    ok = ok && p.passed();
    checks += p.checks;
    if (!p.detail.empty()) detail += (detail.empty() ? "" : "; ") + p.name + ": " + p.detail;
  }
  all_ok = all_ok && ok;
  std::printf("%s criterion %d %s (%zu checks)%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(), checks,
              detail.empty() ? "" : " - ", detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  bool ok = true;
  const auto constants = Constants::for_dimension(2);

  report(1, "isometry oracle", {suites::isometry_suite(kSeed)}, ok);
  report(2, "coupling transforms", {suites::coupling_suite(kSeed + 1)}, ok);
  report(3, "whitney decomposition", {suites::whitney_suite(kSeed + 2)}, ok);
  report(4, "localization maps", {suites::local_map_suite(kSeed + 3)}, ok);

  const auto config = suites::default_experiment(kSeed + 4);
  const auto rows = run_embedding_experiment(config, constants);
  report(5, "sandwich", {suites::sandwich_suite(rows)}, ok);
  report(6, "certificate", {suites::certificate_suite(rows)}, ok);
  report(7, "xi and zeta", {suites::xi_suite(kSeed + 5), suites::zeta_suite(config, rows)}, ok);
  report(8, "non-doubling witness", {suites::witness_suite(20, 0.01)}, ok);
  report(9, "barcodes", {suites::barcode_suite(kSeed + 6)}, ok);

  return ok ? 0 : 1;
}
