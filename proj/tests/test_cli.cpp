#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cubefree/cli.hpp"
#include "cubefree/construction.hpp"

using namespace cubefree;
using cli::execute;

namespace {

cli::Outcome run_args(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  return execute(args, in);
}

nlohmann::json json_of(const cli::Outcome& o) { return nlohmann::json::parse(o.out); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse") {
  const auto cmd = cli::parse({"verify", "--level", "--n", "4", "--side", "B", "--cap", "9"});
  CHECK(cmd.subcommand == cli::Subcommand::verify);
  CHECK(cmd.verify == cli::VerifyMode::level);
  CHECK(*cmd.n == 4);
  CHECK(cmd.side == LevelSide::both);
  CHECK(cmd.cap == 9);

  CHECK(cli::parse({"export", "--tree", "--depth", "3", "--format", "json", "ab"}).format ==
        TreeFormat::json);
  CHECK(cli::parse({"tm", "block", "3", "--letter", "b"}).tm_letter == 'b');
  CHECK_THROWS_AS(cli::parse({"frobnicate"}), UsageError);
  CHECK_THROWS_AS(cli::parse({"verify", "--n", "3"}), UsageError);
  CHECK_THROWS_AS(cli::parse({"check"}), UsageError);
  CHECK_THROWS_AS(cli::parse({"check", "ab", "--word-file", "x"}), UsageError);
  CHECK(cli::parse({"--help"}).help);
}

TEST_CASE("check") {
  auto o = run_args({"check", "aabaaba"});
  CHECK(o.exit_code == cli::kOk);
  CHECK(o.out.find("cube-free: true") != std::string::npos);

  o = run_args({"check", "aaa", "--json"});
  CHECK(o.exit_code == cli::kPropertyFails);
  const auto doc = json_of(o);
  CHECK(doc["schema"] == "cubefree/check/1");
  CHECK(doc["cube_free"] == false);
  CHECK(doc["witness"]["start"] == 1);
  CHECK(doc["witness"]["period"] == 1);

  o = run_args({"check", "axb"});
  CHECK(o.exit_code == cli::kUsage);
  CHECK(o.err.find("position 2") != std::string::npos);

  CHECK(run_args({"check", "--word-file", "-"}, "abba\n").exit_code == cli::kOk);
  CHECK(run_args({"check", "--word-file", "/nonexistent/file"}).exit_code == cli::kUsage);

  const auto r1 = run_args({"check", "--random", "40", "--seed", "7", "--json"});
  const auto r2 = run_args({"check", "--random", "40", "--seed", "7", "--json"});
  CHECK(r1.out == r2.out);
  CHECK(json_of(r1)["length"] == 40);
}

TEST_CASE("thue-morse queries") {
  CHECK(run_args({"tm", "block", "3"}).out == "abbabaab");
  CHECK(run_args({"tm", "rev-context", "4"}).out == "babb");
  CHECK(run_args({"tm", "coincides", "2"}).out == "true");
  CHECK(json_of(run_args({"tm", "prefix", "5", "--letter", "b", "--json"}))["value"] == "baaba");
  CHECK(run_args({"tm", "block", "64"}).exit_code == cli::kResource);
  CHECK(run_args({"tm", "spin", "3"}).exit_code == cli::kUsage);
}

TEST_CASE("morphism") {
  CHECK(run_args({"morphism", "--builtin", "psi"}).exit_code == cli::kOk);
  CHECK(run_args({"morphism", "--images", "a=aa,b=bb"}).exit_code == cli::kPropertyFails);
  CHECK(run_args({"morphism", "--builtin", "phi"}).exit_code == cli::kUsage);
  CHECK(run_args({"morphism"}).exit_code == cli::kUsage);
}

TEST_CASE("construct and premax") {
  auto o = run_args({"construct", "--n", "6", "--json", "--word-cap", "100"});
  REQUIRE(o.exit_code == cli::kOk);
  const std::string text = o.out;
  CHECK(expand_word(text, 6) == build_w(6).result());

  const std::string path = "cli_test_premax.txt";
  o = run_args({"premax", "--n", "4", "--output", path});
  CHECK(o.exit_code == cli::kOk);
  o = run_args({"verify", "--level", "--word-file", path, "--cap", "8", "--json"});
  CHECK(o.exit_code == cli::kOk);
  const auto level = json_of(o);
  CHECK(level["schema"] == "cubefree/level/1");
  CHECK(level["left"]["exact"] == true);
  CHECK(level["left"]["value"] == 4);
  std::remove(path.c_str());

  CHECK(run_args({"premax", "--n", "6"}).exit_code == cli::kPropertyFails);
  o = run_args({"twosided", "--n", "3", "--json"});
  CHECK(o.exit_code == cli::kOk);
  CHECK(json_of(o)["m"] == 12);
  CHECK(run_args({"twosided", "--n", "3", "--m", "11"}).exit_code == cli::kUsage);
  CHECK(run_args({"twosided", "--n", "4"}).exit_code == cli::kPropertyFails);
}

TEST_CASE("verify") {
  auto o = run_args({"verify", "--fixed-context", "--word-file", "-"}, "aabaaba");
  CHECK(o.exit_code == cli::kOk);
  CHECK(o.out == "fixed abb");
  CHECK(run_args({"verify", "--fixed-context", "aabaabaa"}).out == "dead at 1");
  o = run_args({"verify", "--lemma3", "--n", "8", "--json"});
  CHECK(o.exit_code == cli::kOk);
  const auto doc = json_of(o);
  CHECK(doc["ok"] == true);
  CHECK(doc["certificates"].size() == 9);
  o = run_args({"verify", "--level", "--n", "3", "--side", "B", "--cap", "6", "--json"});
  CHECK(o.exit_code == cli::kOk);
  CHECK(json_of(o)["left"]["value"] == 3);
  CHECK(json_of(o)["right"]["value"] == 3);
}

TEST_CASE("search and export") {
  auto o = run_args({"search", "--side", "L", "--level", "0", "--max-len", "8"});
  CHECK(o.out.find("aabaabaa") != std::string::npos);
  o = run_args({"search", "--side", "L", "--level", "0", "--max-len", "3", "--json"});
  CHECK(json_of(o)["count"] == 0);
  CHECK(run_args({"search", "--side", "L", "--level", "0", "--max-len", "40"}).exit_code ==
        cli::kResource);

  o = run_args({"export", "--tree", "--depth", "3", "aabaaba"});
  CHECK(o.out.starts_with("digraph context_tree {"));
  o = run_args({"export", "--tree", "--depth", "3", "--format", "json", "aabaaba"});
  CHECK(tree_from_json(o.out).nodes.size() >= 4);
  CHECK(run_args({"export", "--tree", "--depth", "3", "--json", "aabaaba"}).out == o.out);
}

TEST_CASE("resource bound from the environment") {
  CHECK(max_bytes_from_env() >= 1);
  CHECK(run_args({"construct", "--n", "30"}).exit_code == cli::kResource);
}

}  // TEST_SUITE
