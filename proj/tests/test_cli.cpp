#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nsz/cli.hpp"

using namespace nsz;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("nsz_cli_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string file(const std::string& name, const std::string& content) const {
    fs::path p = path / name;
    std::ofstream(p) << content;
    return p.string();
  }
};

struct RunOut {
  int code;
  std::string out;
  std::string err;
  json j() const { return json::parse(out); }
};

RunOut run_cli(std::vector<std::string> args) {
  std::ostringstream o, e;
  int code = cli::run(std::move(args), o, e);
  return {code, o.str(), e.str()};
}

}  // namespace

TEST_CASE("height subcommand") {
  TempDir d;
  std::string f = d.file("f.txt", "3*x1 + 7\n");
  RunOut r = run_cli({"height", f});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.j()["value"].get<double>() == Catch::Approx(std::log(7.0)));
  CHECK(r.j()["place"] == "inf");

  std::string g = d.file("g.txt", "1/4*x1 + 2\n");
  RunOut r2 = run_cli({"height", g, "--place", "2"});
  CHECK(r2.j()["value"].get<double>() == Catch::Approx(2 * std::log(2.0)));

  RunOut r3 = run_cli({"height", d.file("q.txt", "3/2"), "--all-places"});
  CHECK(r3.j()["value"].get<double>() == Catch::Approx(std::log(3.0)));
  CHECK(r3.j()["places"].contains("inf"));
  CHECK(r3.j()["places"].contains("2"));

  RunOut bad = run_cli({"height", d.file("bad.txt", "x1 +")});
  CHECK(bad.code == cli::kParseError);
}

TEST_CASE("mahler subcommand determinism") {
  TempDir d;
  std::string f = d.file("f.txt", "x1^2 - 7*x1 + 1\n");
  RunOut a = run_cli({"mahler", f, "--samples", "5000", "--seed", "9"});
  RunOut b = run_cli({"mahler", f, "--samples", "5000", "--seed", "9"});
  REQUIRE(a.code == cli::kOk);
  CHECK(a.out == b.out);  // byte-identical for identical argv + seed
  CHECK(a.j()["method"] == "torus-MC");
  RunOut s = run_cli({"mahler", f, "--samples", "2000", "--seed", "1", "--spherical", "1:1"});
  CHECK(s.j()["method"] == "sphere-MC");
}

TEST_CASE("volume and bound subcommands") {
  TempDir d;
  std::string f1 = d.file("f1.txt", "x1^2 - 1");
  std::string f2 = d.file("f2.txt", "x2^2 - 1");
  RunOut v = run_cli({"volume", f1, f2, "--frame"});
  REQUIRE(v.code == cli::kOk);
  CHECK(v.j()["volume"] == "4");

  RunOut b = run_cli({"bound", "theorem1", "--n", "2", "--d", "3"});
  REQUIRE(b.code == cli::kOk);
  CHECK(b.j()["values"]["degree"] == "72");

  RunOut bad = run_cli({"bound", "nonsense", "--n", "1"});
  CHECK(bad.code == cli::kParseError);
}

TEST_CASE("divide subcommand") {
  TempDir d;
  std::string ideal = d.file("i.txt", "x1^2 - 2");
  std::string divisor = d.file("f.txt", "x1");
  std::string dividend = d.file("g.txt", "2");
  RunOut r = run_cli({"divide", "--ideal", ideal, "--divisor", divisor, "--dividend", dividend});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.j()["q"] == "x1");
  CHECK(r.j()["checks"]["identity"] == true);
}

TEST_CASE("certify / verify round trip with exit codes") {
  TempDir d;
  std::string f1 = d.file("f1.txt", "x1 - 1");
  std::string f2 = d.file("f2.txt", "x1 + 1");
  std::string cert = (d.path / "cert.json").string();
  RunOut c = run_cli({"certify", f1, f2, "-o", cert});
  REQUIRE(c.code == cli::kOk);
  RunOut v = run_cli({"verify", cert, f1, f2});
  CHECK(v.code == cli::kOk);
  CHECK(v.j()["identity"] == true);

  // tamper
  json tampered = json::parse(read_text_file(cert));
  tampered["a"] = "3";
  write_text_file(cert, tampered.dump());
  RunOut bad = run_cli({"verify", cert, f1, f2});
  CHECK(bad.code == cli::kVerifyFailed);

  // infeasible at a requested bound
  std::string g1 = d.file("g1.txt", "x1^2");
  std::string g2 = d.file("g2.txt", "x1 - 3");
  RunOut inf = run_cli({"certify", g1, g2, "--deg-bound", "0"});
  CHECK(inf.code == cli::kInfeasible);
}

TEST_CASE("fixture subcommand writes systems and certificates") {
  TempDir d;
  RunOut r = run_cli({"fixture", "geo", "--n", "2", "--d", "2", "--H", "5", "-o", d.path.string()});
  REQUIRE(r.code == cli::kOk);
  json rj = r.j();
  REQUIRE(rj.contains("certificate"));
  std::vector<std::string> files;
  for (const auto& f : rj["files"]) files.push_back(f.get<std::string>());
  REQUIRE(files.size() == 3);
  std::vector<std::string> args{"verify", rj["certificate"].get<std::string>()};
  for (const auto& f : files) args.push_back(f);
  RunOut v = run_cli(args);
  CHECK(v.code == cli::kOk);

  RunOut mp = run_cli({"fixture", "mp", "--n", "2", "--d", "2", "--H", "3", "-o", d.path.string()});
  CHECK(mp.code == cli::kOk);
  CHECK_FALSE(mp.j().contains("certificate"));
}

TEST_CASE("bound-report subcommand") {
  TempDir d;
  std::string f1 = d.file("f1.txt", "x1 - 1");
  std::string f2 = d.file("f2.txt", "x1 + 1");
  RunOut r = run_cli({"bound-report", f1, f2});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.j()["reports"].size() >= 3);
}

TEST_CASE("ce-matrix subcommand") {
  TempDir d;
  std::string sup = d.file("support.json", R"({"n":1,"points":[[0],[1],[2]]})");
  RunOut r = run_cli({"ce-matrix", "--support", sup, "--seed", "5"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.j()["order"] == 4);
  std::string spec = d.file("spec.json", R"([
    {"i":0,"alpha":[0],"value":"-1"},{"i":0,"alpha":[1],"value":"0"},{"i":0,"alpha":[2],"value":"1"},
    {"i":1,"alpha":[0],"value":"-4"},{"i":1,"alpha":[1],"value":"0"},{"i":1,"alpha":[2],"value":"1"}])");
  RunOut r2 = run_cli({"ce-matrix", "--support", sup, "--seed", "5", "--specialize", spec});
  REQUIRE(r2.code == cli::kOk);
  CHECK((r2.j()["resultant"] == "9" || r2.j()["resultant"] == "-9"));
  CHECK(r2.j()["quotient_ok"] == true);
}

TEST_CASE("unknown subcommand and help") {
  RunOut r = run_cli({"frobnicate"});
  CHECK(r.code == cli::kParseError);
  RunOut h = run_cli({"--help"});
  CHECK(h.code == cli::kOk);
  CHECK(h.out.find("certify") != std::string::npos);
}
