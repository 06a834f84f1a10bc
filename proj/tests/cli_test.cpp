#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "narayana_lab/cli.hpp"
#include "narayana_lab/json_io.hpp"

using namespace nlab;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "narayana_lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

LaurentPoly m(Exponent et, Exponent eq, long k = 1) { return LaurentPoly::monomial(et, eq, k); }

}  // namespace

TEST_CASE("narayana JSON output") {
  const Outcome r = invoke({"narayana", "--k", "2", "--json"});
  CHECK(r.code == cli::kExitOk);
  const LaurentPoly n2 = m(2, 0) + m(1, 1, 2) + m(1, 3) + m(0, 2) + m(0, 4);
  CHECK(deserialize_laurent(r.out) == n2);
  CHECK(r.out == serialize(n2) + "\n");
  CHECK(invoke({"narayana", "--k", "2", "--json", "--method", "enum"}).out == r.out);
  CHECK(deserialize_laurent(invoke({"narayana", "--k", "-2", "--json"}).out) == m(-2, 0) + m(-3, -1));
  CHECK(invoke({"narayana", "--k", "-2", "--method", "enum"}).code == cli::kExitUsage);
}

TEST_CASE("det exit codes and cross-checks") {
  const Outcome ok = invoke({"det", "--s", "2", "--n", "2", "--json"});
  CHECK(ok.code == cli::kExitOk);
  const Json j = Json::parse(ok.out);
  CHECK(laurent_from_json(j["value"]) == -(m(1, 3) + m(0, 4)));
  CHECK(j["report"].size() >= 3);
  for (const auto& e : j["report"]) CHECK(e["pass"].get<bool>());

  for (const char* method : {"entry", "toeplitz", "closed", "sylvester"}) {
    const Outcome o = invoke({"det", "--s", "1", "--n", "3", "--method", method, "--json"});
    CHECK(o.code == cli::kExitOk);
    CHECK(laurent_from_json(Json::parse(o.out)["value"]) == -m(-3, 3));
  }

  const Outcome far = invoke({"det", "--s", "99", "--n", "2"});
  CHECK(far.code == cli::kExitUsage);
  CHECK_FALSE(far.err.empty());
  CHECK(invoke({"det", "--s", "5", "--n", "2", "--method", "closed"}).code == cli::kExitUsage);
}

TEST_CASE("paths and tuples") {
  const Json p = Json::parse(invoke({"paths", "--k", "2", "--json"}).out);
  CHECK(p["count"] == 6);
  CHECK(p["paths"][0]["steps"] == "UUDD");
  const Outcome t = invoke({"nipaths", "--m", "1", "--n", "2", "--json"});
  CHECK(t.code == cli::kExitOk);
  const Json tj = Json::parse(t.out);
  CHECK(tj["count"] == 8);
  const LaurentPoly tq = m(1, 0) + m(0, 1);
  CHECK(laurent_from_json(tj["genpoly"]) == m(0, 4) * tq * tq * (m(1, 0) + m(0, 3)));
  CHECK(invoke({"nipaths", "--m", "3", "--n", "2", "--json"}).code == cli::kExitOk);
}

TEST_CASE("lbp checks") {
  const Outcome q = invoke({"lbp", "--n", "3", "--json"});
  CHECK(q.code == cli::kExitOk);
  const Json j = Json::parse(q.out);
  CHECK(j["P"].size() == 4);
  CHECK(zpoly_from_json(j["P"][1]) == ZPoly{-m(1, 0), 1});
  CHECK(invoke({"lbp", "--n", "3", "--system", "random", "--seed", "4"}).code == cli::kExitOk);
  CHECK(invoke({"lbp", "--n", "2", "--check", "pade"}).code == cli::kExitOk);
}

TEST_CASE("aztec commands") {
  CHECK(invoke({"aztec", "--n", "3", "--check", "adt"}).code == cli::kExitOk);
  CHECK(invoke({"aztec", "--n", "2", "--check", "stats"}).code == cli::kExitOk);
  CHECK(invoke({"aztec", "--n", "2", "--check", "lemma71"}).code == cli::kExitOk);
  CHECK(invoke({"aztec", "--n", "2", "--variant", "cut2", "--check", "bijection"}).code == cli::kExitOk);
  CHECK(invoke({"aztec", "--n", "2", "--variant", "cut2", "--check", "stats"}).code == cli::kExitUsage);
  const Json j = Json::parse(invoke({"aztec", "--n", "1", "--json"}).out);
  CHECK(j["cells"] == 4);
  CHECK(laurent_from_json(j["genpoly"]) == 1 + m(1, 1));
}

TEST_CASE("SVG files") {
  const auto dir = std::filesystem::temp_directory_path() / "narayana_lab_cli_test";
  std::filesystem::create_directories(dir);
  const auto file = (dir / "tiling.svg").string();
  CHECK(invoke({"aztec", "--n", "2", "--svg", file, "--tiling", "3"}).code == cli::kExitOk);
  std::ifstream in(file);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("<svg") != std::string::npos);
  CHECK(text.find("vertical-") != std::string::npos);
  CHECK(invoke({"aztec", "--n", "2", "--svg", file, "--tiling", "8"}).code == cli::kExitUsage);
  const auto paths_file = (dir / "paths.svg").string();
  CHECK(invoke({"paths", "--k", "3", "--svg", paths_file}).code == cli::kExitOk);
  CHECK(std::filesystem::file_size(paths_file) > 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == cli::kExitUsage);
  CHECK(invoke({"bogus"}).code == cli::kExitUsage);
  CHECK(invoke({"narayana"}).code == cli::kExitUsage);
  CHECK(invoke({"narayana", "--k", "x"}).code == cli::kExitUsage);
  CHECK(invoke({"det", "--s", "1", "--n", "-1"}).code == cli::kExitUsage);
  CHECK(invoke({"verify-all", "--budget", "0"}).code == cli::kExitUsage);
  CHECK(invoke({"--help"}).code == cli::kExitOk);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::string> args{"det", "--s", "-2", "--n", "3", "--json"};
  CHECK(invoke(args).out == invoke(args).out);
}
