#include "cubefree/explorer.hpp"

#include <algorithm>
#include <array>

#include <json.hpp>

namespace cubefree {

namespace {

constexpr std::array<Letter, 2> kLetters{Letter::a, Letter::b};

// Shortest period of a cube that is a prefix of s.
std::optional<std::size_t> prefix_cube_period(std::string_view s) {
  const auto z = detail::z_function(s);
  for (std::size_t p = 1; 3 * p <= s.size(); ++p) {
    if (z[p] >= 2 * p) return p;
  }
  return std::nullopt;
}

// Composition of a context with the base word.
std::string compose(const Word& base, std::string_view context, Side side) {
  std::string s;
  s.reserve(base.size() + context.size());
  if (side == Side::left) {
    s.append(context).append(base.view());
  } else {
    s.append(base.view()).append(context);
  }
  return s;
}

std::string extend(std::string_view context, Letter x, Side side) {
  std::string out;
  out.reserve(context.size() + 1);
  if (side == Side::left) {
    out.push_back(to_char(x));
    out.append(context);
  } else {
    out.append(context);
    out.push_back(to_char(x));
  }
  return out;
}

// The only new cube in a one-letter extension of a cube-free composition is a
// prefix (left) or suffix (right) of it. Returns the killing cube, if any, in
// 1-based coordinates of the composed word.
std::optional<Repetition> new_cube(const Word& base, std::string_view context, Side side) {
  std::string s = compose(base, context, side);
  if (side == Side::right) std::reverse(s.begin(), s.end());
  const auto p = prefix_cube_period(s);
  if (!p) return std::nullopt;
  if (side == Side::left) return Repetition{1, *p};
  return Repetition{s.size() - 3 * *p + 1, *p};
}

void require_cube_free(const Word& w) {
  if (const auto report = is_cube_free(w); !report.cube_free) {
    throw DomainError("base word is not cube-free (cube at " +
                      std::to_string(report.witness->start) + ", period " +
                      std::to_string(report.witness->period) + ")");
  }
}

std::vector<std::string> expand_frontier(const Word& w, const std::vector<std::string>& frontier,
                                         Side side) {
  std::vector<std::string> next;
  for (const auto& u : frontier) {
    for (Letter x : kLetters) {
      auto child = extend(u, x, side);
      if (!new_cube(w, child, side)) next.push_back(std::move(child));
    }
  }
  std::sort(next.begin(), next.end());
  return next;
}

std::vector<Word> to_words(std::vector<std::string> raw) {
  std::vector<Word> out;
  out.reserve(raw.size());
  for (auto& s : raw) out.push_back(word_from_trusted(std::move(s)));
  return out;
}

SideLevel side_level_unchecked(const Word& w, Side side, std::size_t cap,
                               std::size_t node_cap) {
  std::vector<std::string> frontier{""};
  for (std::size_t depth = 1; depth <= cap; ++depth) {
    auto next = expand_frontier(w, frontier, side);
    if (next.empty()) return {true, depth - 1, to_words(std::move(frontier))};
    if (next.size() > node_cap) {
      throw ResourceError("context frontier exceeds node cap at depth " + std::to_string(depth),
                          next.size());
    }
    frontier = std::move(next);
  }
  return {false, cap, to_words(std::move(frontier))};
}

}  // namespace

std::vector<Word> contexts(const Word& w, std::size_t len, Side side) {
  require_cube_free(w);
  std::vector<std::string> frontier{""};
  for (std::size_t depth = 1; depth <= len && !frontier.empty(); ++depth) {
    frontier = expand_frontier(w, frontier, side);
  }
  return to_words(std::move(frontier));
}

std::vector<Word> left_contexts(const Word& w, std::size_t len) {
  return contexts(w, len, Side::left);
}

std::vector<Word> right_contexts(const Word& w, std::size_t len) {
  return contexts(w, len, Side::right);
}

std::vector<std::size_t> ContextTree::frontier_sizes() const {
  std::vector<std::size_t> sizes(depth, 0);
  for (const auto& node : nodes) {
    if (node.alive && !node.context.empty() && node.context.size() <= depth) {
      ++sizes[node.context.size() - 1];
    }
  }
  return sizes;
}

std::size_t ContextTree::alive_count() const {
  return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const Node& n) {
    return n.alive && !n.context.empty();
  }));
}

ContextTree context_tree(const Word& w, std::size_t depth, Side side,
                         const ExplorerLimits& limits) {
  if (depth > limits.depth_cap) {
    throw ResourceError("tree depth exceeds the configured cap of " +
                            std::to_string(limits.depth_cap),
                        depth);
  }
  require_cube_free(w);
  ContextTree tree{w, side, depth, {}};
  tree.nodes.push_back({Word{}, std::nullopt, true, std::nullopt});
  std::vector<std::size_t> frontier{0};
  for (std::size_t d = 1; d <= depth && !frontier.empty(); ++d) {
    std::vector<std::size_t> next;
    for (std::size_t parent : frontier) {
      for (Letter x : kLetters) {
        const std::string child = extend(tree.nodes[parent].context.view(), x, side);
        auto cube = new_cube(w, child, side);
        const bool alive = !cube.has_value();
        tree.nodes.push_back({word_from_trusted(child), parent, alive, cube});
        if (alive) next.push_back(tree.nodes.size() - 1);
      }
      if (tree.nodes.size() > limits.node_cap) {
        throw ResourceError("context tree exceeds node cap", tree.nodes.size());
      }
    }
    frontier = std::move(next);
  }
  return tree;
}

FixedContext fixed_left_context(const Word& w, std::size_t cap) {
  require_cube_free(w);
  std::string chain;
  for (std::size_t depth = 0; depth < cap; ++depth) {
    const auto next = expand_frontier(w, {chain}, Side::left);
    if (next.empty()) return FixedContext::dead_at(depth + 1);
    if (next.size() == 2) return FixedContext::fixed(word_from_trusted(chain));
    chain = next.front();
  }
  return FixedContext::cap_reached(cap);
}

bool is_fixed_left_context(const Word& w, const Word& u) {
  const auto at_u = contexts(w, u.size(), Side::left);
  if (at_u.size() != 1 || at_u.front() != u) return false;
  std::vector<std::string> frontier{u.str()};
  return expand_frontier(w, frontier, Side::left).size() == 2;
}

SideLevel side_level(const Word& w, Side side, std::size_t cap) {
  require_cube_free(w);
  return side_level_unchecked(w, side, cap, ExplorerLimits{}.node_cap);
}

LevelReport left_level(const Word& w, std::size_t cap) {
  return {LevelSide::left, cap, side_level(w, Side::left, cap), std::nullopt};
}

LevelReport right_level(const Word& w, std::size_t cap) {
  return {LevelSide::right, cap, std::nullopt, side_level(w, Side::right, cap)};
}

LevelReport level2(const Word& w, std::size_t cap) {
  require_cube_free(w);
  const auto limit = ExplorerLimits{}.node_cap;
  return {LevelSide::both, cap, side_level_unchecked(w, Side::left, cap, limit),
          side_level_unchecked(w, Side::right, cap, limit)};
}

std::size_t count_occurrences(const Word& pattern, const Word& w) {
  if (pattern.empty()) throw DomainError("count_occurrences needs a nonempty pattern");
  std::size_t count = 0;
  for (auto pos = w.view().find(pattern.view()); pos != std::string_view::npos;
       pos = w.view().find(pattern.view(), pos + 1)) {
    ++count;
  }
  return count;
}

std::vector<Word> enumerate_extremal(LevelSide side, LevelTarget target, std::size_t max_len,
                                     const ExplorerLimits& limits) {
  if (max_len > limits.exhaustive_max_len) {
    throw ResourceError("exhaustive search length exceeds the configured bound of " +
                            std::to_string(limits.exhaustive_max_len),
                        max_len);
  }
  auto matches = [&](const Word& w) {
    if (side != LevelSide::right) {
      const auto lv = side_level_unchecked(w, Side::left, target.left + 1, limits.node_cap);
      if (!lv.exact || lv.value != target.left) return false;
    }
    if (side != LevelSide::left) {
      const auto rv = side_level_unchecked(w, Side::right, target.right + 1, limits.node_cap);
      if (!rv.exact || rv.value != target.right) return false;
    }
    return true;
  };

  // Cube-free words are prefix-closed, so grow them letter by letter.
  std::vector<Word> found;
  std::vector<std::string> layer{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& u : layer) {
      for (Letter x : kLetters) {
        std::string v = u + to_char(x);
        if (!detail::has_suffix_repetition(v, Power::cube)) next.push_back(std::move(v));
      }
    }
    for (const auto& v : next) {
      Word w = word_from_trusted(v);
      if (matches(w)) found.push_back(std::move(w));
    }
    layer = std::move(next);
  }
  return found;
}

std::string to_string(Side side) { return side == Side::left ? "left" : "right"; }

std::string to_string(LevelSide side) {
  switch (side) {
    case LevelSide::left:
      return "left";
    case LevelSide::right:
      return "right";
    case LevelSide::both:
      return "both";
  }
  return "both";
}

TreeFormat parse_tree_format(std::string_view name) {
  if (name == "dot") return TreeFormat::dot;
  if (name == "json") return TreeFormat::json;
  throw UsageError("unknown tree format '" + std::string(name) + "' (expected dot or json)");
}

namespace {

std::string dot_label(const Word& context) {
  return context.empty() ? "&lambda;" : context.str();
}

std::string export_dot(const ContextTree& tree) {
  std::string out = "digraph context_tree {\n";
  if (!tree.nodes.empty()) {
    out += "  // " + to_string(tree.side) + " contexts of " +
           (tree.base.size() <= 64 ? tree.base.str()
                                   : "a word of length " + std::to_string(tree.base.size())) +
           ", depth " + std::to_string(tree.depth) + "\n";
    out += tree.side == Side::left ? "  rankdir=RL;\n" : "  rankdir=LR;\n";
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    out += "  n" + std::to_string(i) + " [label=\"" + dot_label(node.context) + "\"";
    if (!node.alive) {
      out += ", style=dashed, color=gray";
      if (node.witness) {
        out += ", xlabel=\"cube at " + std::to_string(node.witness->start) + " period " +
               std::to_string(node.witness->period) + "\"";
      }
    }
    out += "];\n";
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    if (const auto& parent = tree.nodes[i].parent) {
      out += "  n" + std::to_string(*parent) + " -> n" + std::to_string(i) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

std::string export_json(const ContextTree& tree) {
  nlohmann::json doc;
  doc["schema"] = "cubefree/tree/1";
  doc["base"] = tree.base.str();
  doc["side"] = to_string(tree.side);
  doc["depth"] = tree.depth;
  doc["nodes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    nlohmann::json entry;
    entry["id"] = i;
    entry["context"] = node.context.str();
    entry["parent"] = node.parent ? nlohmann::json(*node.parent) : nlohmann::json(nullptr);
    entry["alive"] = node.alive;
    if (node.witness) {
      entry["witness"] = {{"start", node.witness->start}, {"period", node.witness->period}};
    } else {
      entry["witness"] = nullptr;
    }
    doc["nodes"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::string export_tree(const ContextTree& tree, TreeFormat format) {
  return format == TreeFormat::dot ? export_dot(tree) : export_json(tree);
}

ContextTree tree_from_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  ContextTree tree;
  tree.base = Word::parse(doc.at("base").get<std::string>());
  const auto side = doc.at("side").get<std::string>();
  if (side != "left" && side != "right") throw UsageError("unknown side '" + side + "'");
  tree.side = side == "left" ? Side::left : Side::right;
  tree.depth = doc.at("depth").get<std::size_t>();
  for (const auto& entry : doc.at("nodes")) {
    ContextTree::Node node;
    node.context = Word::parse(entry.at("context").get<std::string>());
    if (!entry.at("parent").is_null()) node.parent = entry.at("parent").get<std::size_t>();
    node.alive = entry.at("alive").get<bool>();
    if (!entry.at("witness").is_null()) {
      node.witness = Repetition{entry.at("witness").at("start").get<std::size_t>(),
                                entry.at("witness").at("period").get<std::size_t>()};
    }
    tree.nodes.push_back(std::move(node));
  }
  return tree;
}

}  // namespace cubefree
