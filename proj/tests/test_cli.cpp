#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "gspec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = gspec::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// last tab-separated field of each line
std::vector<std::string> values(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& l : lines(text)) out.push_back(l.substr(l.rfind('\t') + 1));
  return out;
}

}  // namespace

TEST_CASE("counts") {
  auto r = run({"counts", "E", "--max", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\tisotype\t-\t1\n1\tisotype\t-\t1\n2\tisotype\t-\t1\n3\tisotype\t-\t1\n");
  r = run({"counts", "L", "--kind", "labeled", "--max", "5"});
  CHECK(values(r.out) == std::vector<std::string>{"1", "1", "2", "6", "24", "120"});
  r = run({"counts", "quotient(L_rev)", "--kind", "labeled", "--max", "4"});
  CHECK(values(r.out) == std::vector<std::string>{"1", "1", "1", "3", "12"});
  r = run({"counts", "L_rev", "--quotient", "--kind", "labeled", "--max", "4"});
  CHECK(values(r.out) == std::vector<std::string>{"1", "1", "1", "3", "12"});
  CHECK(lines(r.out)[0] == "0\tlabeled\tquotient\t1");
  r = run({"counts", "graph", "--element", "(1 2)", "--max", "5"});
  CHECK(values(r.out) == std::vector<std::string>{"1", "1", "0", "0", "1", "2"});
  CHECK(lines(r.out)[0] == "0\tisotype\t(1 2)\t1");
}

TEST_CASE("coeffs and expand") {
  auto r = run({"coeffs", "C_rev", "--max", "2", "--element", "(1 2)"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"1\tcoefficient\t[1]\t1", "2\tcoefficient\t[2]\t1/2",
                                                 "2\tcoefficient\t[1,1]\t1/2"});
  r = run({"expand", "E", "--vars", "2", "--max", "2"});
  CHECK(lines(r.out).back() == "2\tprofile\ttotal\t3");
  r = run({"expand", "let R = X + E_2(R) in R", "--vars", "4", "--max", "8"});
  CHECK(lines(r.out).back() == "8\tprofile\ttotal\t366680");
}

TEST_CASE("examples") {
  auto r = run({"example", "rblt"});
  CHECK(r.out == "8\tprofile\ttotal\t366680\n");
  r = run({"example", "digraph-conversity"});
  CHECK(values(r.out) == std::vector<std::string>{"1", "1", "3", "13", "144", "5158", "778084"});
  r = run({"example", "binary-tree-reversal"});
  CHECK(values(r.out) == std::vector<std::string>{"1", "1", "1", "3", "7", "22", "66", "217", "715", "2438"});
  r = run({"example", "self-complementary-graphs"});
  CHECK(values(r.out) == std::vector<std::string>{"1", "1", "0", "0", "1", "2"});
  r = run({"example", "kary-interchange"});
  CHECK(values(r.out) == std::vector<std::string>{"1", "1", "1", "3", "11", "49", "244"});
  r = run({"example", "paths-polygons"});
  CHECK(lines(r.out).size() == 28);
  CHECK(lines(r.out)[4] == "4\tlabeled\tpaths:quotient\t12");
  CHECK(lines(r.out)[20] == "6\tlabeled\tpolygons:quotient\t60");
  CHECK(run({"example", "nope"}).code == 1);
}

TEST_CASE("formats") {
  auto r = run({"--format", "json", "counts", "digraph", "--quotient", "--max", "3"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const auto j = nlohmann::json::parse(ls[i]);
    CHECK(j.at("degree") == i);
    CHECK(j.at("kind") == "isotype");
    CHECK(j.at("key") == "quotient");
  }
  CHECK(nlohmann::json::parse(ls[3]).at("value") == "13");
  r = run({"--format", "csv", "coeffs", "E", "--max", "2"});
  CHECK(lines(r.out) == std::vector<std::string>{"degree,kind,key,value", "0,coefficient,[],1", "1,coefficient,[1],1",
                                                 "2,coefficient,[2],1/2", "2,coefficient,\"[1,1]\",1/2"});
  r = run({"--format", "csv", "coeffs", "0", "--max", "2"});
  CHECK(r.out == "degree,kind,key,value\n");
  CHECK(run({"--format", "xml", "counts", "E"}).code == 1);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  auto r = run({"counts", "E +"});
  CHECK(r.code == 1);
  CHECK(r.err.find("position 3") != std::string::npos);
  CHECK(run({"counts", "Q"}).code == 1);
  CHECK(run({"counts", "L_rev", "--element", "(1 2 3)"}).code == 1);
  CHECK(run({"counts", "L_rev", "--element", "(1 2)", "--quotient"}).code == 1);
  r = run({"counts", "E(1+X)", "--max", "3"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  // virtual species are fine
  r = run({"counts", "quotient(L_rev) - E", "--kind", "labeled", "--max", "3"});
  CHECK(r.code == 0);
  CHECK(values(r.out) == std::vector<std::string>{"0", "0", "0", "2"});
  r = run({"counts", "let A = X + A in A", "--max", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("non-productive") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--max-n", "3"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  CHECK(ls.size() == 11);
  for (const auto& l : ls) CHECK(l.rfind("PASS ", 0) == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"--format", "json", "coeffs", "let T = 1 + X*L_k_interchange:S3(T) in T",
                                         "--max", "5", "--element", "(1 2 3)"};
  const auto first = run(args);
  CHECK(first.code == 0);
  CHECK_FALSE(first.out.empty());
  for (int i = 0; i < 3; ++i) CHECK(run(args).out == first.out);
}
