#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int         code = -1;
  std::string out;
};

// Runs the CLI with `args` (already shell-quoted), capturing stdout and
// stderr together.
Run cli(std::string const& args) {
  std::string const cmd  = std::string("\"") + TWISTCROSS_CLI + "\" " + args + " 2>&1";
  FILE*             pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run  run;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) {
    run.out.append(buf, n);
  }
  int const status = pclose(pipe);
  run.code         = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

struct Workdir {
  fs::path path;

  Workdir() : path(fs::temp_directory_path() / ("twistcross_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~Workdir() { fs::remove_all(path); }

  std::string write(std::string const& name, std::string const& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

std::string const kZ4 =
    R"({"type":"cayley","size":4,"product":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],"star":[0,3,2,1]})";

}  // namespace

TEST_CASE("gen, section and decompose on the documented inputs") {
  Workdir dir;
  auto    gen = cli(R"x(gen --degree 6 --gens "(1,4,5,0,0,0)" "(0,5,4,0,0,6)")x");
  REQUIRE(gen.code == 0);
  auto const s = nlohmann::json::parse(gen.out);
  CHECK(s["size"] == 19);
  auto const ex19 = dir.write("ex19.json", gen.out);

  std::vector<std::size_t> kernel;
  auto const&              labels = s["labels"];
  auto index = [&](char const* l) { return std::find(labels.begin(), labels.end(), l) - labels.begin(); };
  for (std::size_t a = 0; a < 19; ++a) {
    if (s["product"][a][a] == a) {
      kernel.push_back(a);
    }
  }
  auto const r    = index("(1,4,5,0,0,0)");
  auto const sb   = index("(0,5,4,0,0,6)");
  auto const star = s["star"][sb].get<std::size_t>();
  kernel.push_back(s["product"][star][r].get<std::size_t>());
  kernel.push_back(s["product"][r][star].get<std::size_t>());
  auto const kfile = dir.write("kernel.json", nlohmann::json(kernel).dump());

  auto sec = cli("section --input " + ex19 + " --subsemigroup " + kfile);
  REQUIRE(sec.code == 0);
  auto const sj = nlohmann::json::parse(sec.out);
  CHECK(sj["found"] == false);
  CHECK(sj["classes"] == 15);
  CHECK_FALSE(sj["obstructions"].empty());

  auto const z4  = dir.write("z4.json", kZ4);
  auto const z2  = dir.write("z2.json", "[0, 2]");
  auto       dec = cli("decompose --mode busby --input " + z4 + " --sub " + z2);
  REQUIRE(dec.code == 0);
  auto const dj = nlohmann::json::parse(dec.out);
  CHECK(dj["dims"]["direct"] == 4);
  CHECK(dj["dims"]["iterated"] == 4);
  CHECK(dj["dims"]["iso"] == true);

  CHECK(cli("decompose --mode busby --input " + ex19 + " --sub E").code == 2);
  auto refused = cli("decompose --mode busby --adjoin-unit --input " + ex19 + " --sub " + kfile);
  CHECK(refused.code == 1);
  CHECK(nlohmann::json::parse(refused.out)["refused"] == true);
}

TEST_CASE("exit codes") {
  Workdir dir;
  auto const bad = dir.write("bad.json", "{\n  \"size\": 3,\n  \"star\": [0,,1]\n}");
  auto       run = cli("analyze --input " + bad);
  CHECK(run.code == 2);
  CHECK(run.out.find("line 3, column 14") != std::string::npos);

  CHECK(cli("no-such-subcommand").code == 2);
  CHECK(cli("analyze").code == 2);
  CHECK(cli("exel --group-order 70").code == 2);
  CHECK(cli(R"x(gen --degree 3 --gens "(1,2)")x").code == 2);

  auto const z4 = dir.write("z4.json", kZ4);
  // {0, 1} is not closed under star in Z4.
  CHECK(cli("section --input " + z4 + " --sub '[0,1]'").code == 1);

  auto built = cli("action build --construction cross-section --input " + z4 + " --sub '[0,2]'");
  REQUIRE(built.code == 0);
  auto act = nlohmann::json::parse(built.out);
  auto const good = dir.write("act.json", act.dump());
  CHECK(cli("action verify --input " + good).code == 0);
  CHECK(cli("xprod --covariant --input " + good).code == 0);

  // w_1,1 = 2 is not unitary.
  act["w"][3] = nlohmann::json::array({nlohmann::json::array({2, 0}), nlohmann::json::array({0, 0})});
  auto const broken = dir.write("broken.json", act.dump());
  auto       verify = cli("action verify --format text --input " + broken);
  CHECK(verify.code == 1);
  CHECK(verify.out.find("BAD") != std::string::npos);
}

TEST_CASE("outputs are deterministic and parse back") {
  Workdir    dir;
  auto const z4    = dir.write("z4.json", kZ4);
  auto const built = cli("--scalar complex action build --construction cross-section --input " + z4 + " --sub '[0,2]'");
  REQUIRE(built.code == 0);
  auto const act = dir.write("cact.json", built.out);
  auto const one = cli("--seed 5 action build --construction random-exterior --action " + act);
  auto const two = cli("--seed 5 action build --construction random-exterior --action " + act);
  REQUIRE(one.code == 0);
  CHECK(one.out == two.out);
  CHECK(nlohmann::json::parse(one.out)["scalar"] == "complex-double");
  auto const pert = dir.write("pert.json", one.out);
  CHECK(cli("action verify --input " + pert).code == 0);

  auto gen = cli(R"x(gen --degree 2 --gens "(2,1)" "(1,0)")x");
  REQUIRE(gen.code == 0);
  auto const i2 = dir.write("i2.json", gen.out);
  auto       an = cli("analyze --input " + i2);
  REQUIRE(an.code == 0);
  CHECK(nlohmann::json::parse(an.out)["size"] == 7);
  CHECK(cli("decompose --mode green --input " + i2 + " --sub E").code == 0);
  CHECK(cli("decompose --mode identities --input " + i2 + " --normal E --format text").code == 0);
}
