#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubefree/word.hpp"

namespace cubefree {

enum class Side { left, right };

/// Default bounds for brute-force exploration.
struct ExplorerLimits {
  std::size_t depth_cap = 64;
  std::size_t exhaustive_max_len = 24;
  std::size_t node_cap = std::size_t{1} << 20;
};

/// All U with |U| = len such that U.w (left) or w.U (right) is cube-free,
/// in lexicographic order. Throws DomainError if w itself is not cube-free.
std::vector<Word> contexts(const Word& w, std::size_t len, Side side);
std::vector<Word> left_contexts(const Word& w, std::size_t len);
std::vector<Word> right_contexts(const Word& w, std::size_t len);

/// Materialized extension tree of one side of a base word. Node 0 is the
/// empty context. Dead children are kept (not expanded) together with the
/// cube that kills them.
struct ContextTree {
  struct Node {
    Word context;
    std::optional<std::size_t> parent;
    bool alive = true;
    std::optional<Repetition> witness;  // in context-composed-with-base coordinates

    friend bool operator==(const Node&, const Node&) = default;
  };

  Word base;
  Side side = Side::left;
  std::size_t depth = 0;
  std::vector<Node> nodes;

  /// Alive nodes at each depth 1..depth.
  std::vector<std::size_t> frontier_sizes() const;
  std::size_t alive_count() const;

  friend bool operator==(const ContextTree&, const ContextTree&) = default;
};

/// Throws ResourceError if depth exceeds limits.depth_cap or the tree grows
/// past limits.node_cap.
ContextTree context_tree(const Word& w, std::size_t depth, Side side,
                         const ExplorerLimits& limits = {});

struct FixedContext {
  enum class Kind { fixed, dead_at, cap_reached };
  Kind kind = Kind::cap_reached;
  Word context;            // for fixed
  std::size_t length = 0;  // context length, death depth, or the cap

  static FixedContext fixed(Word u) {
    const auto n = u.size();
    return {Kind::fixed, std::move(u), n};
  }
  static FixedContext dead_at(std::size_t len) { return {Kind::dead_at, {}, len}; }
  static FixedContext cap_reached(std::size_t cap) { return {Kind::cap_reached, {}, cap}; }

  friend bool operator==(const FixedContext&, const FixedContext&) = default;
};

/// Follows the chain of unique left contexts until it branches (fixed), dies,
/// or runs past the cap.
FixedContext fixed_left_context(const Word& w, std::size_t cap);

/// Whether u is the only left context of its length and exactly two left
/// contexts have length |u|+1. Unlike fixed_left_context this does not require
/// the shorter contexts to be unique.
bool is_fixed_left_context(const Word& w, const Word& u);

enum class LevelSide { left, right, both };

struct SideLevel {
  bool exact = false;         // false: contexts of length `value` (= cap) still exist
  std::size_t value = 0;      // exact level, or the cap
  std::vector<Word> witness;  // longest contexts found

  friend bool operator==(const SideLevel&, const SideLevel&) = default;
};

struct LevelReport {
  LevelSide side = LevelSide::left;
  std::size_t cap = 0;
  std::optional<SideLevel> left;
  std::optional<SideLevel> right;
};

SideLevel side_level(const Word& w, Side side, std::size_t cap);
LevelReport left_level(const Word& w, std::size_t cap);
LevelReport right_level(const Word& w, std::size_t cap);
/// Both one-sided levels, each computed independently.
LevelReport level2(const Word& w, std::size_t cap);

/// Possibly overlapping occurrences. Throws DomainError on an empty pattern.
std::size_t count_occurrences(const Word& pattern, const Word& w);

/// Requested level for enumerate_extremal: `left` for LevelSide::left,
/// `right` for LevelSide::right, both for LevelSide::both.
struct LevelTarget {
  std::size_t left = 0;
  std::size_t right = 0;
};

/// Every cube-free word of length 1..max_len whose level on the requested
/// side(s) equals the target, in length-then-lexicographic order.
std::vector<Word> enumerate_extremal(LevelSide side, LevelTarget target, std::size_t max_len,
                                     const ExplorerLimits& limits = {});

enum class TreeFormat { dot, json };

TreeFormat parse_tree_format(std::string_view name);
std::string export_tree(const ContextTree& tree, TreeFormat format);
ContextTree tree_from_json(std::string_view text);

std::string to_string(Side side);
std::string to_string(LevelSide side);

}  // namespace cubefree
