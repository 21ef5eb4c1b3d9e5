#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cubefree/explorer.hpp"

namespace cubefree::cli {

enum class Subcommand { check, tm, morphism, construct, premax, twosided, verify, search, export_tree };
enum class VerifyMode { level, fixed_context, lemma3 };

/// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kPropertyFails = 1;
inline constexpr int kUsage = 2;
inline constexpr int kResource = 3;

/// Words longer than this are summarized instead of printed.
inline constexpr std::size_t kEchoLimit = 4096;

struct Command {
  Subcommand subcommand = Subcommand::check;
  bool json = false;

  std::optional<std::string> word;
  std::optional<std::string> word_file;  // "-" reads stdin
  std::optional<std::size_t> random_len;
  std::uint64_t seed = 20240531;

  std::string tm_op;
  std::uint64_t tm_arg = 0;
  char tm_letter = 'a';

  std::optional<std::string> builtin;
  std::optional<std::string> images;

  std::optional<std::size_t> n;
  std::optional<unsigned> m;
  std::optional<std::string> output;
  std::size_t word_cap = kEchoLimit;

  VerifyMode verify = VerifyMode::level;
  std::size_t cap = 64;
  LevelSide side = LevelSide::left;
  std::size_t level = 0;
  std::size_t max_len = 0;

  std::size_t depth = 0;
  TreeFormat format = TreeFormat::dot;

  bool help = false;
  std::string help_text;
};

/// Throws UsageError (naming the offending argument) or ParseError.
Command parse(const std::vector<std::string>& args);

struct Outcome {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Never throws: library errors map to exit codes.
Outcome run(const Command& cmd, std::istream& in);

/// parse followed by run, with parse errors mapped to kUsage.
Outcome execute(const std::vector<std::string>& args, std::istream& in);

}  // namespace cubefree::cli
