#include <array>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

#include "cgt/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cgt::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

// Runs a shell pipeline with $CGT bound to the built binary.
Result shell(const std::string& command) {
  const std::string full = "CGT='" + std::string(CGT_CLI_PATH) + "'; " + command + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

std::string knot(const char* name) { return cgt::testing::data_path(name); }

}  // namespace

TEST_CASE("order") {
  CHECK(run({"order", "<s1,s2 | s1^3, s2^5, (s1 s2)^2>"}).out == "60\n");
  CHECK(run({"order", "<s,t | s^3 t, t^3, s^4>"}).out == "1\n");
  CHECK(run({"order", "-"}, "<a, d | a d a = d^2, d^3 = a^5>\n").out == "120\n");
  const Result over = run({"order", "<a, b | a b a^-1 b^-1>", "--max-cosets", "1000"});
  CHECK(over.code == cgt::cli::kExitDomainError);
  CHECK(over.out.empty());
  CHECK(over.err.find("exceeded 1000 cosets") != std::string::npos);
  const json j = json::parse(run({"order", "<a | a^6>", "--format", "json"}).out);
  CHECK(j["order"] == 6);
}

TEST_CASE("surgery pipeline through the binary") {
  CHECK(shell("\"$CGT\" knot surgery --k 1 '" + knot("trefoil.pd") + "' | \"$CGT\" order -").out == "120\n");
  CHECK(shell("\"$CGT\" knot surgery --k 0 '" + knot("trefoil.pd") + "' | \"$CGT\" order -").out == "1\n");
  CHECK(shell("\"$CGT\" knot surgery --k 2 '" + knot("trefoil.pd") + "' | \"$CGT\" abelianize -").out ==
        "trivial\n");
  CHECK(shell("\"$CGT\" bogus").code == cgt::cli::kExitUsageError);
}

TEST_CASE("word problem") {
  CHECK(run({"wp", "<s1,s2 | s1^3, s2^5, (s1 s2)^2>", "s1^3"}).out == "true\n");
  CHECK(run({"wp", "<s1,s2 | s1^3, s2^5, (s1 s2)^2>", "s1"}).out == "false\n");
  CHECK(run({"wp", "<a, b | >", "a b b^-1 a^-1"}).out == "true\n");
  const Result g2 = run({"wp", "<a1, b1, a2, b2 | a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1>", "a1", "--format", "json"});
  const json j = json::parse(g2.out);
  CHECK(j["trivial"] == false);
  CHECK(j["oracle"] == "dehn");
  CHECK(j["assumption"] == "dehn-presentation");
  CHECK(run({"wp", "u^3 v^-2", "--oracle", "torus-nf", "--torus", "3,2"}).out == "true\n");
  CHECK(run({"wp", "t u t^-1 u^-1 v", "--oracle", "torus-nf", "--torus", "3,2"}).out == "false\n");
  CHECK(run({"wp", "u", "--oracle", "torus-nf"}).code == cgt::cli::kExitUsageError);
  CHECK(run({"wp", "<a | a^3>", "b"}).code == cgt::cli::kExitDomainError);
}

TEST_CASE("reduce") {
  CHECK(run({"reduce", "<a, b | >", "a b b^-1 a^-1 b", "--free"}).out == "b\n");
  const Result r = run({"reduce", "<a | a^3>", "a^4"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(r.out.rfind('\n', r.out.size() - 2) + 1) == "a\n");
  const json j = json::parse(run({"reduce", "<a | a^3>", "a^4", "--format", "json"}).out);
  CHECK(j["output"] == "a");
  CHECK(!j["steps"].empty());
}

TEST_CASE("abelianize") {
  CHECK(run({"abelianize", "<s2, s3 | s2^5, s3^2, (s3 s2)^4>"}).out == "Z/2\n");
  CHECK(run({"abelianize", "<s2, t3 | s2^5, t3^2, (t3 s2^-1 t3 s2)^2>"}).out == "Z/10\n");
  CHECK(run({"abelianize", "<a, b, c | a b = b c = c a>"}).out == "Z^1\n");
  CHECK(run({"abelianize", "<a, b | a^2, b^4>"}).out == "Z/2 x Z/4\n");
  const json j = json::parse(run({"abelianize", "<a, d | a d a = d^2, d^3 = a^5>", "--format", "json"}).out);
  CHECK(j["perfect"] == true);
  CHECK(j["free_rank"] == 0);
}

TEST_CASE("coset-enum") {
  const json j = json::parse(run({"coset-enum", "<s | s^3>"}).out);
  CHECK(j["complete"] == true);
  CHECK(j["cosets"] == 3);
  CHECK(j["permutations"]["s"].size() == 3);
  const json h = json::parse(run({"coset-enum", "<s1,s2 | s1^3, s2^5, (s1 s2)^2>", "--subgroup", "s1"}).out);
  CHECK(h["cosets"] == 20);
  CHECK(run({"coset-enum", "<a, b | >", "--max-cosets", "50"}).code == cgt::cli::kExitDomainError);
}

TEST_CASE("cayley-ball") {
  const json j = json::parse(run({"cayley-ball", "<s1,s2 | s1^3, s2^5, (s1 s2)^2>", "--radius", "10"}).out);
  CHECK(j["vertices"].size() == 60);
  CHECK(j["complete"] == true);
  CHECK(j["oracle"] == "coset");
  const Result dot = run({"cayley-ball", "<s | s^4>", "--format", "dot"});
  CHECK(dot.out.rfind("digraph", 0) == 0);
  CHECK(dot.out.find("v3") != std::string::npos);
  CHECK(run({"cayley-ball", "<s | s^4>", "--format", "tsv"}).code == cgt::cli::kExitUsageError);
}

TEST_CASE("check-diagram") {
  const Result r = run({"check-diagram", cgt::testing::data_path("regular_not_homogeneous.json")});
  CHECK(r.out == "regular: true\nhomogeneous: false\n");
  const std::string cycle =
      R"({"labels":["s"],"vertices":[{"id":"p"},{"id":"q"}],"edges":[{"from":"p","to":"q","label":"s"},{"from":"q","to":"p","label":"s"}]})";
  CHECK(run({"check-diagram", "-"}, cycle).out == "regular: true\nhomogeneous: true\n");
}

TEST_CASE("knot commands") {
  const json p = json::parse(run({"knot", "peripheral", knot("trefoil.pd")}).out);
  CHECK(p["meridian"] == "a");
  CHECK(p["parallel"] == "c^-1 a^-1 b^-1 a^3");
  const Result w = run({"knot", "wirtinger", "PD[]", "--format", "text"});
  CHECK(w.out == "< a | >\n");
  const json d = json::parse(run({"knot", "dehn", knot("trefoil.pd")}).out);
  CHECK(d["generators"].size() == 4);
  CHECK(run({"knot", "surgery", knot("trefoil.pd")}).code == cgt::cli::kExitUsageError);
  CHECK(run({"knot", "wirtinger", "PD[X[1,1,1,2]s+]"}).code == cgt::cli::kExitDomainError);
  CHECK(run({"knot", "wirtinger", "PD[X[1,2]"}).code == cgt::cli::kExitDomainError);
}

TEST_CASE("dehn-fn") {
  const Result r = run({"dehn-fn", "<a | a^3>", "--n", "6"});
  CHECK(r.out == "0\t0\texact\n1\t0\texact\n2\t0\texact\n3\t1\texact\n4\t1\texact\n5\t1\texact\n6\t2\texact\n");
  const Result f = run({"dehn-fn", "<a, b | >", "--n", "3"});
  CHECK(f.out == "0\t0\texact\n1\t0\texact\n2\t0\texact\n3\t0\texact\n");
}

TEST_CASE("family-infinite and usage errors") {
  CHECK(run({"family-infinite", "5", "4"}).out == "true\n");
  CHECK(run({"family-infinite", "3", "2"}).out == "false\n");
  CHECK(run({"family-infinite", "x", "2"}).code == cgt::cli::kExitUsageError);
  CHECK(run({}).code == cgt::cli::kExitUsageError);
  CHECK(run({"order"}).code == cgt::cli::kExitUsageError);
  CHECK(run({"order", "<a | a"}).code == cgt::cli::kExitDomainError);
  CHECK(run({"order", "/nonexistent/file"}).code == cgt::cli::kExitDomainError);
  CHECK(run({"--help"}).code == cgt::cli::kExitOk);
}
