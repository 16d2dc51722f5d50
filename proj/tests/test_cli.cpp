// End-to-end tests of the msqc binary: behavior of every subcommand, output
// determinism, error handling, and byte-exact golden files.
//
// Invocation (wired by CMake):
//   test_cli --cli <path-to-msqc> --golden <path-to-golden-dir>
// Set MSQC_REGEN_GOLDEN=1 to rewrite the golden files instead of comparing.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "support/golden_runner.hpp"

namespace fs = std::filesystem;

namespace {

std::string g_cli;
std::string g_golden_dir;

int run(const std::string& args, const std::string& work_dir,
        const std::string& env = "") {
  return golden::run_cli(g_cli, args, work_dir, env);
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') {
        quoted = !quoted;
      } else if (c == ',' && !quoted) {
        fields.push_back(field);
        field.clear();
      } else {
        field += c;
      }
    }
    fields.push_back(field);
    rows.push_back(fields);
  }
  return rows;
}

}  // namespace

TEST_CASE("evolve: Bell-time endpoint reaches unit concurrence") {
  const auto dir = golden::make_scratch_dir("evolve");
  REQUIRE(run("evolve --g 1 --t-max 0.7853981634 --steps 2 --out e.csv",
              dir.string()) == 0);
  const auto rows = csv_rows(golden::slurp(dir / "e.csv"));
  REQUIRE(rows.size() == 3);  // header + 2 rows
  REQUIRE(rows[0].size() == 6);
  const auto& last = rows.back();
  CHECK(std::abs(std::stod(last[5]) - 1.0) < 1e-9);
  CHECK(std::abs(std::stod(last[1])) < 1e-12);        // P++
  CHECK(std::abs(std::stod(last[2]) - 0.5) < 1e-9);   // P+-
  CHECK(std::abs(std::stod(last[3]) - 0.5) < 1e-9);   // P-+
  fs::remove_all(dir);
}

TEST_CASE("evolve: concurrence peaks at 1 near t = pi/4") {
  const auto dir = golden::make_scratch_dir("evolve_peak");
  REQUIRE(run("evolve --g 1 --t-max 3.1416 --steps 5 --out e.csv",
              dir.string()) == 0);
  const auto rows = csv_rows(golden::slurp(dir / "e.csv"));
  REQUIRE(rows.size() == 6);
  double best_c = 0.0, best_t = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double c = std::stod(rows[i][5]);
    if (c > best_c) {
      best_c = c;
      best_t = std::stod(rows[i][0]);
    }
  }
  CHECK(best_c > 1.0 - 1e-6);
  CHECK(std::abs(best_t - 3.1416 / 4.0) < 1e-6);
  fs::remove_all(dir);
}

TEST_CASE("evolve: invalid parameters exit nonzero and leave no file") {
  const auto dir = golden::make_scratch_dir("evolve_err");
  CHECK(run("evolve --g 0 --t-max 1 --steps 5 --out never.csv", dir.string()) !=
        0);
  CHECK_FALSE(fs::exists(dir / "never.csv"));
  CHECK(run("evolve --g 1 --t-max 0 --steps 5 --out never.csv", dir.string()) !=
        0);
  CHECK(run("evolve --g 1 --t-max 1 --steps 1 --out never.csv", dir.string()) !=
        0);
  // Unknown flag is a parse error.
  CHECK(run("evolve --g 1 --t-max 1 --steps 5 --bogus 3 --out never.csv",
            dir.string()) != 0);
  CHECK_FALSE(fs::exists(dir / "never.csv"));
  // A failing run must not clobber an existing file at the target path.
  golden::spit(dir / "keep.csv", "precious\n");
  CHECK(run("evolve --g 0 --t-max 1 --steps 5 --out keep.csv", dir.string()) !=
        0);
  CHECK(golden::slurp(dir / "keep.csv") == "precious\n");
  fs::remove_all(dir);
}

TEST_CASE("outputs are byte-identical across reruns") {
  const auto dir1 = golden::make_scratch_dir("det1");
  const auto dir2 = golden::make_scratch_dir("det2");
  const std::vector<std::string> commands = {
      "evolve --g 2.5 --t-max 2 --steps 40 --out out.dat",
      "platforms --legacy-c --format json --out out.dat",
      "discord-decay --gamma 2.5e7 --steps 8 --out out.dat",
      "synth-map --grid 16 --noise 0.05 --seed 99 --out out.dat",
  };
  for (const auto& cmd : commands) {
    REQUIRE(run(cmd, dir1.string()) == 0);
    REQUIRE(run(cmd, dir2.string()) == 0);
    CHECK(golden::slurp(dir1 / "out.dat") == golden::slurp(dir2 / "out.dat"));
  }
  fs::remove_all(dir1);
  fs::remove_all(dir2);
}

TEST_CASE("platforms: row values, ordering, overrides") {
  const auto dir = golden::make_scratch_dir("platforms");
  REQUIRE(run("platforms --legacy-c --out p.csv", dir.string()) == 0);
  const auto rows = csv_rows(golden::slurp(dir / "p.csv"));
  REQUIRE(rows.size() == 4);
  CHECK(rows[1][0] == "metasurface");
  CHECK(rows[2][0] == "sfwm");
  CHECK(rows[3][0] == "spdc");
  CHECK(std::abs(std::stod(rows[1][1]) - 3.846153846e4) < 1.0);
  CHECK(std::abs(std::stod(rows[2][3]) / 43.94449154672e-9 - 1.0) < 1e-9);
  CHECK(std::abs(std::stod(rows[3][3]) / 329.5836866e-12 - 1.0) < 1e-9);
  // Quoted figures that the formulas do not reproduce ride in annotations.
  CHECK(rows[1][4].find("29.6") != std::string::npos);
  CHECK(rows[3][4].find("220 fs") != std::string::npos);

  REQUIRE(run("platforms --platform sfwm --gamma 2.5e7 --out s.csv",
              dir.string()) == 0);
  const auto sfwm = csv_rows(golden::slurp(dir / "s.csv"));
  REQUIRE(sfwm.size() == 2);
  CHECK(std::abs(std::stod(sfwm[1][3]) / 43.94449154672e-9 - 1.0) < 1e-9);

  REQUIRE(run("platforms --threshold 1 --out t.csv", dir.string()) == 0);
  for (const auto& row : csv_rows(golden::slurp(dir / "t.csv"))) {
    if (row[0] == "platform") continue;
    CHECK(std::stod(row[3]) == 0.0);
  }

  CHECK(run("platforms --preset nonsense --out never.csv", dir.string()) != 0);
  CHECK_FALSE(fs::exists(dir / "never.csv"));
  fs::remove_all(dir);
}

TEST_CASE("discord-decay: separability crossing within one grid step") {
  const auto dir = golden::make_scratch_dir("decay");
  REQUIRE(run("discord-decay --preset spdc --legacy-c --steps 12 --out d.csv",
              dir.string()) == 0);
  const auto rows = csv_rows(golden::slurp(dir / "d.csv"));
  REQUIRE(rows.size() == 13);
  const double t_star = 329.5836866e-12;
  const double step = std::stod(rows[2][0]) - std::stod(rows[1][0]);
  double crossing = -1.0;
  double previous_d = 2.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double z = std::stod(rows[i][1]);
    const double d = std::stod(rows[i][2]);
    CHECK(d <= previous_d + 1e-8);  // monotone nonincreasing
    previous_d = d;
    if (crossing < 0.0 && z <= 1.0 / 3.0) crossing = std::stod(rows[i][0]);
  }
  REQUIRE(crossing > 0.0);
  CHECK(std::abs(crossing - t_star) <= step + 1e-15);

  CHECK(run("discord-decay --preset spdc --t-max 0 --steps 12 --out never.csv",
            dir.string()) != 0);
  CHECK_FALSE(fs::exists(dir / "never.csv"));
  fs::remove_all(dir);
}

TEST_CASE("discord-decay: metasurface preset at the default 200 steps") {
  const auto dir = golden::make_scratch_dir("decay_ms");
  REQUIRE(run("discord-decay --preset metasurface --legacy-c --out d.csv",
              dir.string()) == 0);
  const auto rows = csv_rows(golden::slurp(dir / "d.csv"));
  REQUIRE(rows.size() == 201);  // header + default 200 steps
  double previous = 2.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double d = std::stod(rows[i][2]);
    CHECK(d <= previous + 1e-8);
    previous = d;
  }
  CHECK(std::abs(std::stod(rows[1][2]) - 1.0) < 1e-6);  // starts at 1 bit
  fs::remove_all(dir);
}

TEST_CASE("discord-decay: svg marks the separability threshold") {
  const auto dir = golden::make_scratch_dir("decay_svg");
  REQUIRE(run("discord-decay --preset sfwm --legacy-c --steps 24 --format svg "
              "--out d.svg",
              dir.string()) == 0);
  const std::string svg = golden::slurp(dir / "d.svg");
  CHECK(svg.rfind("<!-- msqc", 0) == 0);  // provenance header leads the file
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);  // marker line
  CHECK(svg.find("discord (bits)") != std::string::npos);
  CHECK(svg.find("3.33333333333e-01") != std::string::npos);  // z = 1/3 label
  fs::remove_all(dir);
}

TEST_CASE("fit-g: json record recovers the sqrt(2) width relation") {
  const auto dir = golden::make_scratch_dir("fitg");
  REQUIRE(run("synth-map --grid 48 --extent 8e-6 --width 2e-6 --amplitude 3 "
              "--seed 5 --out map.csv",
              dir.string()) == 0);
  REQUIRE(run("fit-g --in map.csv --format json --out fit.json",
              dir.string()) == 0);
  const auto doc = nlohmann::json::parse(golden::slurp(dir / "fit.json"));
  CHECK(doc["converged"].get<bool>());
  const double expected_width = std::sqrt(2.0) * 2e-6;
  CHECK(std::abs(doc["s"].get<double>() / expected_width - 1.0) < 0.01);
  CHECK(doc["_meta"]["tool"] == "msqc");

  REQUIRE(run("fit-g --in map.csv --out fit.csv", dir.string()) == 0);
  const auto rows = csv_rows(golden::slurp(dir / "fit.csv"));
  CHECK(rows[0] == std::vector<std::string>{"r", "mean", "std", "count"});
  CHECK(rows.size() > 5);

  CHECK(run("fit-g --in missing.csv --out never.csv", dir.string()) != 0);
  CHECK_FALSE(fs::exists(dir / "never.csv"));
  fs::remove_all(dir);
}

TEST_CASE("concurrence-stats: uniform map gives mean 1, std 0") {
  const auto dir = golden::make_scratch_dir("stats");
  std::string csv = "x,y,p\n";
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      csv += std::to_string(i) + "," + std::to_string(j) + ",2.0\n";
    }
  }
  golden::spit(dir / "uniform.csv", csv);
  REQUIRE(run("concurrence-stats --in uniform.csv --g-peak 1e6 --bin-width 1 "
              "--out s.csv",
              dir.string()) == 0);
  const auto rows = csv_rows(golden::slurp(dir / "s.csv"));
  REQUIRE(rows.size() == 2);
  CHECK(std::stod(rows[1][0]) == 1.0);
  CHECK(std::stod(rows[1][1]) == 0.0);

  CHECK(run("concurrence-stats --in uniform.csv --out never.csv",
            dir.string()) != 0);  // missing --g-peak
  CHECK_FALSE(fs::exists(dir / "never.csv"));
  fs::remove_all(dir);
}

TEST_CASE("compare-materials: peak ordering across three maps") {
  const auto dir = golden::make_scratch_dir("compare");
  REQUIRE(run("synth-map --grid 24 --width 1e-6 --amplitude 5 --seed 11 "
              "--out si.csv",
              dir.string()) == 0);
  REQUIRE(run("synth-map --grid 24 --width 2e-6 --amplitude 3 --seed 12 "
              "--out inp.csv",
              dir.string()) == 0);
  REQUIRE(run("synth-map --grid 24 --width 3e-6 --amplitude 1.5 --seed 13 "
              "--out inas.csv",
              dir.string()) == 0);
  REQUIRE(run("compare-materials --in Si=si.csv --in InP=inp.csv "
              "--in InAs=inas.csv --out c.csv",
              dir.string()) == 0);
  const auto rows = csv_rows(golden::slurp(dir / "c.csv"));
  REQUIRE(rows.size() == 4);
  CHECK(rows[1][0] == "Si");
  CHECK(rows[2][0] == "InP");
  CHECK(rows[3][0] == "InAs");
  CHECK(std::stod(rows[1][1]) > std::stod(rows[2][1]));
  CHECK(std::stod(rows[2][1]) > std::stod(rows[3][1]));

  CHECK(run("compare-materials --in only=si.csv --out never.csv",
            dir.string()) != 0);
  fs::remove_all(dir);
}

TEST_CASE("config file fills unset flags; explicit flags win") {
  const auto dir = golden::make_scratch_dir("config");
  golden::spit(dir / "run.conf",
               "# sample config\ng = 2\nt_max = 1\nsteps = 4\n");
  REQUIRE(run("evolve --config run.conf --out a.csv", dir.string()) == 0);
  const auto a = csv_rows(golden::slurp(dir / "a.csv"));
  REQUIRE(a.size() == 5);  // header + 4 rows from config

  REQUIRE(run("evolve --config run.conf --steps 6 --out b.csv", dir.string()) ==
          0);
  const auto b = csv_rows(golden::slurp(dir / "b.csv"));
  REQUIRE(b.size() == 7);  // flag overrides config

  CHECK(run("evolve --config missing.conf --out never.csv", dir.string()) != 0);
  fs::remove_all(dir);
}

TEST_CASE("MSQC_PRESET_DIR overrides built-in presets") {
  const auto dir = golden::make_scratch_dir("presetdir");
  fs::create_directories(dir / "presets");
  golden::spit(dir / "presets" / "lab.conf",
               "gamma = 1e6\nannotation = bench measurement\n");
  REQUIRE(run("discord-decay --preset lab --steps 4 --out d.csv", dir.string(),
              "MSQC_PRESET_DIR=presets") == 0);
  const std::string text = golden::slurp(dir / "d.csv");
  CHECK(text.find("preset: lab (gamma = 1.00000000000e+06 1/s)") !=
        std::string::npos);
  // Without the env the name is unknown.
  CHECK(run("discord-decay --preset lab --steps 4 --out never.csv",
            dir.string()) != 0);
  fs::remove_all(dir);
}

TEST_CASE("golden files: every subcommand, byte for byte") {
  const bool regen = std::getenv("MSQC_REGEN_GOLDEN") != nullptr;
  const auto dir = golden::make_scratch_dir("golden");
  for (const auto& scenario : golden::scenarios()) {
    CAPTURE(scenario.output);
    REQUIRE(run(scenario.args, dir.string()) == 0);
    const std::string produced = golden::slurp(dir / scenario.output);
    const fs::path reference = fs::path(g_golden_dir) / scenario.output;
    if (regen) {
      golden::spit(reference, produced);
    } else {
      REQUIRE_MESSAGE(fs::exists(reference),
                      "missing golden file; run with MSQC_REGEN_GOLDEN=1");
      CHECK(produced == golden::slurp(reference));
    }
  }
  fs::remove_all(dir);
}

int main(int argc, char** argv) {
  std::vector<char*> doctest_args;
  for (int i = 0; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) {
      g_cli = argv[++i];
    } else if (arg == "--golden" && i + 1 < argc) {
      g_golden_dir = argv[++i];
    } else {
      doctest_args.push_back(argv[i]);
    }
  }
  if (g_cli.empty() || g_golden_dir.empty()) {
    std::fprintf(stderr, "usage: test_cli --cli <msqc> --golden <dir>\n");
    return 2;
  }
  g_cli = fs::absolute(g_cli).string();
  g_golden_dir = fs::absolute(g_golden_dir).string();
  doctest::Context context(static_cast<int>(doctest_args.size()),
                           doctest_args.data());
  return context.run();
}
