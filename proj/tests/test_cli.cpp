#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {
  struct Run {
    int         code;
    std::string out;
  };

  Run run(std::string const& args) {
    std::string cmd = std::string(MBT_CLI_PATH) + " " + args + " 2>&1";
    FILE*       pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string          out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) {
      out.append(buf.data(), n);
    }
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }

  std::string data(std::string const& name) {
    return std::string(MBT_DATA_DIR) + "/" + name;
  }

  bool contains(std::string const& haystack, std::string const& needle) {
    return haystack.find(needle) != std::string::npos;
  }

  std::filesystem::path scratch(std::string const& name, std::string const& body) {
    auto dir = std::filesystem::temp_directory_path() / "mbt_test_cli";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / name) << body;
    return dir / name;
  }
}  // namespace

TEST_CASE("info") {
  auto nt5 = scratch("nt5.json", R"({"type":"nt","t":5})");
  Run  r   = run("info " + nt5.string() + " --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["size"] == 6);
  CHECK(j["zero"] == "0");
  CHECK(j["idempotents"] == nlohmann::json::array({"0", "1"}));

  Run t2 = run("info " + data("t2.json") + " " + data("natural.json") + " --json");
  CHECK(t2.code == 0);
  auto k = nlohmann::json::parse(t2.out);
  CHECK(k["representation"]["faithful"] == true);
  CHECK(k["representation"]["r"] == 3);
  CHECK(k["representation"]["s"] == 3);

  auto bad = scratch("bad.json",
                     R"({"type":"cayley","identity":0,"table":[[0,1,2],[1,2,0],[2,2,2]]})");
  Run  b   = run("info " + bad.string());
  CHECK(b.code == 2);
  CHECK(contains(b.out, "associativity fails at ("));

  CHECK(run("info /nonexistent.json").code == 2);
}

TEST_CASE("verify") {
  Run r = run("verify " + data("nt7.json") + " " + data("nt_paper.json") + " --which all --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["theorem"] == "tensor");
  CHECK(j[0]["r"] == 2);
  CHECK(j[0]["dim_rad"] == 6);
  CHECK(j[0]["dim_ann"] == 5);
  CHECK(j[1]["theorem"] == "symmetric");
  CHECK(j[1]["s"] == 2);
  CHECK(j[1]["r"] == 4);
  for (auto const& report : j) {
    CHECK(report["holds"] == true);
  }

  Run t3 = run("verify " + data("t3.json") + " " + data("natural.json") + " --which tensor --json");
  CHECK(t3.code == 0);
  CHECK(nlohmann::json::parse(t3.out)[0]["r"] == 4);

  Run corrupt = run("verify " + data("nt7.json") + " " + data("nt_paper.json")
                    + " --which tensor --json --debug-corrupt-radical");
  CHECK(corrupt.code == 1);
  auto c = nlohmann::json::parse(corrupt.out);
  CHECK(c[0]["holds"] == false);
  CHECK(c[0]["witness"].is_array());

  auto triv = scratch("triv.json", R"({"mode":"trivial"})");
  CHECK(run("verify " + data("nt7.json") + " " + triv.string() + " --which tensor").code == 2);
  CHECK(run("verify " + data("nt7.json") + " " + data("nt_paper.json") + " --which positive")
            .code
        == 2);
  CHECK(run("verify " + data("s3.json") + " " + data("natural.json") + " --which all").code == 0);
  CHECK(run("verify " + data("nt7.json") + " " + data("nt_paper.json") + " --which nope").code
        == 2);
}

TEST_CASE("verify output is deterministic") {
  std::string args = "verify " + data("t3.json") + " " + data("natural.json") + " --which all --json";
  Run a = run(args);
  Run b = run(args + " --parallel");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::ordered_json::parse(a.out);
  CHECK(j.dump() + "\n" == a.out);
}

TEST_CASE("scan-nt") {
  Run r = run("scan-nt --from 2 --to 8 --mode tensor --json");
  CHECK(r.code == 0);
  auto rows = nlohmann::json::parse(r.out);
  REQUIRE(rows.size() == 7);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t t = i + 2;
    CHECK(rows[i]["t"] == t);
    CHECK(rows[i]["minimal_faithful_k"] == t - 1);
    CHECK(rows[i]["minimal_covering_k"].get<int>() <= 1);
    CHECK(rows[i]["holds"] == true);
  }
  Run nine = run("scan-nt --from 8 --to 9 --json");
  auto n   = nlohmann::json::parse(nine.out);
  CHECK(n[0]["too_small_to_be_faithful"] == false);
  CHECK(n[1]["too_small_to_be_faithful"] == true);

  Run text = run("scan-nt --from 2 --to 3");
  CHECK(text.code == 0);
  CHECK(contains(text.out, "faithful_k"));

  CHECK(run("scan-nt --from 5 --to 2").code == 2);
  CHECK(run("scan-nt --from 0 --to 2").code == 2);
}

TEST_CASE("molien") {
  std::string base = "molien " + data("nt7.json") + " " + data("nt_paper.json") + " --idempotent 1";
  Run one = run(base + " --weights 1:1 -N 4 --json");
  CHECK(one.code == 0);
  auto j = nlohmann::json::parse(one.out);
  CHECK(j["function"]["num"] == nlohmann::json::array({"1"}));
  CHECK(j["function"]["den"] == nlohmann::json::array({"1", "-2", "1"}));
  CHECK(j["series"] == nlohmann::json::array({"1", "2", "3", "4", "5"}));

  Run two = run(base + " --weights 1:1,2:1 -N 2 --json");
  CHECK(two.code == 0);
  auto k = nlohmann::json::parse(two.out);
  CHECK(k["series"] == nlohmann::json::array({"2", "2", "3"}));
  CHECK(k["function"]["num"] == nlohmann::json::array({"2", "-2", "1"}));

  Run outside = run("molien " + data("t2.json") + " " + data("natural.json")
                    + " --idempotent [1,1] --weights [1,2]:1 -N 2");
  CHECK(outside.code == 2);
  CHECK(run(base + " --weights 99:1 -N 2").code == 2);
  CHECK(run(base.substr(0, base.size() - 1) + "2 --weights 2:1 -N 2").code == 2);
}
