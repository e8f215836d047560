// Regenerates the golden report files. Run from the repo root:
//   ./build/tests/make_goldens tests/golden
// Outputs are byte-stable, so a diff after regeneration means the report
// format or the computed results changed.

#include <iostream>

#include "permfit/permfit.hpp"

using namespace permfit;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_goldens <output-dir>\n";
    return 2;
  }
  std::string dir = argv[1];

  VerifyConfig defaults = VerifyConfig::defaults();
  write_file(dir + "/empty.json", report_json_text({}, defaults));

  VerifyConfig single_cfg = VerifyConfig::defaults();
  single_cfg.pi_list = {PrimeSet::finite({2})};
  single_cfg.max_order = 24;
  auto catalog = default_catalog();
  const CatalogEntry* s4 = find_entry(catalog, "S4");
  if (!s4) {
    std::cerr << "catalog is missing S4\n";
    return 1;
  }
  std::vector<CatalogEntry> one{*s4};
  write_file(dir + "/single.json",
             report_json_text({run_suite("lem-3.1", one, single_cfg)}, single_cfg));

  write_file(dir + "/full_default.json",
             report_json_text(run_all(default_catalog(), defaults), defaults));

  std::cout << "golden files written to " << dir << "\n";
  return 0;
}
