#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = fj::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

fs::path scratch() {
  const fs::path d = fs::temp_directory_path() / "freejacobi_cli_test";
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"moments", "--bogus", "1"}).code == 1);
  CHECK(run({"moments", "--alpha", "1.5"}).code == 1);
  CHECK(run({"nosuch"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("moments to stdout") {
  const Run r = run({"moments", "--alpha", "0.6", "--t-end", "0.1", "--order", "4"});
  REQUIRE(r.code == 0);
  const std::string header = r.out.substr(0, r.out.find('\n'));
  CHECK(header.rfind("t,", 0) == 0);
  CHECK(header.find("m_4") != std::string::npos);
}

TEST_CASE("file output, manifest and determinism") {
  const fs::path d = scratch();
  const std::string a = (d / "a.csv").string(), b = (d / "b.csv").string();
  const std::vector<std::string> base{"moments", "--alpha", "0.6", "--t-end", "0.5", "--order", "6"};
  auto with_out = [&](const std::string& p) {
    auto v = base;
    v.insert(v.end(), {"--out", p});
    return v;
  };
  REQUIRE(run(with_out(a)).code == 0);
  REQUIRE(run(with_out(b)).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(!slurp(a).empty());

  const auto manifest = nlohmann::json::parse(slurp(a + ".manifest.json"));
  CHECK(manifest["subcommand"] == "moments");
  CHECK(manifest.contains("parameters"));
  CHECK(manifest.contains("version"));
  CHECK(manifest["format"] == "csv");
}

TEST_CASE("json format") {
  const Run r = run({"wachter", "--alpha", "0.7", "--beta", "0.5", "--order", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["columns"].is_array());
  CHECK(j["rows"].size() >= 3);
}

TEST_CASE("identity tables") {
  CHECK(run({"kunisky", "--alpha", "0.7", "--n", "6"}).code == 0);
  CHECK(run({"saddle", "--alpha", "0.7", "--t", "7", "--n", "20"}).code == 0);
}
