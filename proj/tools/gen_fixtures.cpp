// Regenerates data/fixtures and docs/worked under the given root.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "gerst/commands.hpp"

namespace fs = std::filesystem;
using namespace gerst;

namespace {

void write(const fs::path& path, const Json& j) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

Json witness_fixture(const std::string& name) {
  auto b = bundled(name);
  HochschildComplex hc(b.category, default_max_degree(problem_from_bundled(b)));
  Json j;
  j["name"] = name;
  j["field"] = b.category.field().name();
  j["max_degree"] = hc.max_degree();
  j["search"] = {{"min_degree", 1}, {"max_degree", 3}};
  auto w = find_bracket_witness(hc, 1, 3);
  j["witness"] = w ? witness_to_json(*w) : Json(nullptr);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_fixtures <output root>\n";
    return 2;
  }
  const fs::path root = argv[1];
  try {
    for (const auto& name : bundled_names()) {
      auto b = bundled(name);
      Json input = bundled_to_json(b);
      write(root / "data/fixtures" / (name + ".json"), input);

      Problem p = problem_from_bundled(b);
      CommandOptions o;
      o.seed = 1;
      o.trials = 50;
      Json worked;
      worked["input"] = input;
      worked["validate"] = run_validate(p).report;
      worked["hh"] = run_hh(p, o).report;
      worked["verify"] = run_verify(p, o).report;
      if (p.hopf) {
        worked["ext"] = run_ext(p, o).report;
        worked["compare"] = run_compare(p, o).report;
      }
      write(root / "docs/worked" / (name + ".json"), worked);
    }

    // hand-broken inputs for the exit-code tests
    Json bad = bundled_to_json(bundled("sweedler_q"));
    bad["name"] = "sweedler_q_bad_antipode";
    bad["description"] = "Sweedler algebra with S(x) = x, which is not an antipode";
    bad["antipode"][1]["value"] = Json::array({Json::array({1, "1"})});  // basis (1, x, g, gx)
    write(root / "data/fixtures/corrupted_antipode.json", bad);
    {
      const std::string full = bundled_to_json(bundled("sweedler_q")).dump(2);
      fs::create_directories(root / "data/fixtures");
      std::ofstream(root / "data/fixtures/truncated.json", std::ios::binary) << full.substr(0, full.size() / 2);
    }

    write(root / "data/fixtures/witness_c2_f2.json", witness_fixture("c2_f2"));
    write(root / "data/fixtures/witness_s3_f3.json", witness_fixture("s3_f3"));

    CommandOptions o;
    auto sweedler = problem_from_bundled(bundled("sweedler_q"));
    write(root / "data/fixtures/ext_table_sweedler_q.json", run_ext(sweedler, o).report);
  } catch (const std::exception& e) {
    std::cerr << "gen_fixtures: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
