#include "cubefree/cli.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubefree/construction.hpp"
#include "cubefree/morphism.hpp"
#include "cubefree/thue_morse.hpp"

namespace cubefree::cli {

using nlohmann::json;

namespace {

LevelSide parse_side(const std::string& s) {
  if (s == "L") return LevelSide::left;
  if (s == "R") return LevelSide::right;
  return LevelSide::both;
}

}  // namespace

Command parse(const std::vector<std::string>& args) {
  Command cmd;
  CLI::App app{"Cube-free premaximal word constructions and brute-force certification",
               "cubefree"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", cmd.json, "JSON output"); };
  auto word_sources = [&](CLI::App* sub) {
    sub->add_option("word", cmd.word, "Word over {a,b}");
    sub->add_option("--word-file", cmd.word_file, "Read the word from a file (- for stdin)");
  };

  auto* check = app.add_subcommand("check", "Cube-freeness of a word");
  word_sources(check);
  check->add_option("--random", cmd.random_len, "Check a random word of this length");
  check->add_option("--seed", cmd.seed, "Seed for --random");
  json_flag(check);

  auto* tm = app.add_subcommand("tm", "Thue-Morse queries");
  tm->add_option("op", cmd.tm_op, "block | prefix | rev-context | coincides")
      ->required()
      ->check(CLI::IsMember({"block", "prefix", "rev-context", "coincides"}));
  tm->add_option("arg", cmd.tm_arg, "Order, length, or position")->required();
  tm->add_option("--letter", cmd.tm_letter, "First letter for block and prefix")
      ->check(CLI::IsMember({'a', 'b'}));
  json_flag(tm);

  auto* morph = app.add_subcommand("morphism", "Cube-free morphism test");
  auto* builtin = morph->add_option("--builtin", cmd.builtin, "theta or psi");
  auto* images = morph->add_option("--images", cmd.images, "a=<word>,b=<word>");
  builtin->excludes(images);
  morph->require_option(1);
  json_flag(morph);

  auto* construct = app.add_subcommand("construct", "Build W_n and its trace");
  construct->add_option("--n", cmd.n, "Iteration")->required();
  construct->add_option("--word-cap", cmd.word_cap, "Longest word stored verbatim in JSON");
  construct->add_option("--output", cmd.output, "Write W_n to this file");
  json_flag(construct);

  auto* premax = app.add_subcommand("premax", "Left premaximal word of level n");
  premax->add_option("--n", cmd.n, "Level")->required();
  premax->add_option("--output", cmd.output, "Write the word to this file");
  json_flag(premax);

  auto* twosided = app.add_subcommand("twosided", "Premaximal word of level (n,n)");
  twosided->add_option("--n", cmd.n, "Level")->required();
  twosided->add_option("--m", cmd.m, "Even order of the central Thue-Morse block");
  twosided->add_option("--output", cmd.output, "Write the word to this file");
  json_flag(twosided);

  auto* verify = app.add_subcommand("verify", "Brute-force certification");
  auto* level = verify->add_flag("--level", "Level of a word (or of the built instance for --n)");
  auto* fixed = verify->add_flag("--fixed-context", "Fixed left context");
  auto* lemma3 = verify->add_flag("--lemma3", "Certify every iteration up to --n");
  level->excludes(fixed)->excludes(lemma3);
  fixed->excludes(lemma3);
  verify->add_option("--n", cmd.n, "Construction index");
  word_sources(verify);
  verify->add_option("--cap", cmd.cap, "Depth cap");
  std::string side = "L";
  verify->add_option("--side", side, "L, R or B")->check(CLI::IsMember({"L", "R", "B"}));
  json_flag(verify);

  auto* search = app.add_subcommand("search", "Exhaustive search for words of a given level");
  search->add_option("--side", side, "L, R or B")->check(CLI::IsMember({"L", "R", "B"}))->required();
  search->add_option("--level", cmd.level, "Target level")->required();
  search->add_option("--max-len", cmd.max_len, "Longest word length")->required();
  json_flag(search);

  auto* exp = app.add_subcommand("export", "Export a context tree");
  exp->add_flag("--tree", "Export the context tree")->required();
  exp->add_option("--depth", cmd.depth, "Tree depth")->required();
  std::string format = "dot";
  exp->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  word_sources(exp);
  exp->add_option("--side", side, "L or R")->check(CLI::IsMember({"L", "R"}));
  json_flag(exp);

  if (!args.empty() && !args.front().starts_with("-")) {
    const auto subs = app.get_subcommands([](CLI::App*) { return true; });
    const bool known = std::any_of(subs.begin(), subs.end(),
                                   [&](const CLI::App* sub) { return sub->check_name(args.front()); });
    if (!known) throw UsageError("unknown subcommand '" + args.front() + "'");
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    cmd.help = true;
    cmd.help_text = app.help();
    return cmd;
  } catch (const CLI::CallForAllHelp&) {
    cmd.help = true;
    cmd.help_text = app.help("", CLI::AppFormatMode::All);
    return cmd;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const std::pair<CLI::App*, Subcommand> table[] = {
      {check, Subcommand::check},         {tm, Subcommand::tm},
      {morph, Subcommand::morphism},      {construct, Subcommand::construct},
      {premax, Subcommand::premax},       {twosided, Subcommand::twosided},
      {verify, Subcommand::verify},       {search, Subcommand::search},
      {exp, Subcommand::export_tree}};
  for (const auto& [sub, kind] : table) {
    if (sub->parsed()) cmd.subcommand = kind;
  }
  cmd.side = parse_side(side);
  cmd.format = cmd.json ? TreeFormat::json : parse_tree_format(format);

  if (cmd.word) Word::parse(*cmd.word);
  if (cmd.word && cmd.word_file) throw UsageError("give either a word or --word-file, not both");
  switch (cmd.subcommand) {
    case Subcommand::check:
      if (static_cast<int>(cmd.word.has_value()) + static_cast<int>(cmd.word_file.has_value()) +
              static_cast<int>(cmd.random_len.has_value()) != 1) {
        throw UsageError("check needs exactly one of <word>, --word-file, --random");
      }
      break;
    case Subcommand::verify:
      if (level->count() + fixed->count() + lemma3->count() != 1) {
        throw UsageError("verify needs one of --level, --fixed-context, --lemma3");
      }
      cmd.verify = fixed->count() ? VerifyMode::fixed_context
                   : lemma3->count() ? VerifyMode::lemma3
                                     : VerifyMode::level;
      if (cmd.verify == VerifyMode::lemma3 && !cmd.n) throw UsageError("--lemma3 needs --n");
      if (cmd.verify != VerifyMode::lemma3 && !cmd.n && !cmd.word && !cmd.word_file) {
        throw UsageError("verify needs --n, a word, or --word-file");
      }
      if (cmd.n && (cmd.word || cmd.word_file)) {
        throw UsageError("--n cannot be combined with a word");
      }
      break;
    case Subcommand::export_tree:
      if (!cmd.word && !cmd.word_file) throw UsageError("export needs a word or --word-file");
      break;
    default:
      break;
  }
  return cmd;
}

namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

Word read_word(const Command& cmd, std::istream& in) {
  if (cmd.word) return Word::parse(*cmd.word);
  std::stringstream buf;
  if (*cmd.word_file == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(*cmd.word_file);
    if (!file) throw UsageError("cannot read --word-file " + *cmd.word_file);
    buf << file.rdbuf();
  }
  return Word::parse(trim(buf.str()));
}

void write_word(const Command& cmd, const Word& w) {
  if (!cmd.output) return;
  std::ofstream file(*cmd.output);
  if (!file) throw UsageError("cannot write --output " + *cmd.output);
  file << w.view() << '\n';
}

std::string echo(const Word& w) {
  if (w.size() <= kEchoLimit) return w.str();
  return "<" + std::to_string(w.size()) + " letters, use --output>";
}

json echo_json(const Word& w) {
  if (w.size() <= kEchoLimit) return w.str();
  return nullptr;
}

json schema(const std::string& name) { return "cubefree/" + name + "/1"; }

json witness_json(const std::optional<Repetition>& r) {
  if (!r) return nullptr;
  return {{"start", r->start}, {"period", r->period}};
}

Outcome run_check(const Command& cmd, std::istream& in) {
  Word w;
  if (cmd.random_len) {
    std::mt19937_64 rng(cmd.seed);
    std::string raw(*cmd.random_len, 'a');
    for (auto& c : raw) c = (rng() & 1) ? 'b' : 'a';
    w = Word::parse(raw);
  } else {
    w = read_word(cmd, in);
  }
  const auto report = is_cube_free(w);
  Outcome o;
  o.exit_code = report.cube_free ? kOk : kPropertyFails;
  if (cmd.json) {
    o.out = json{{"schema", schema("check")},
                 {"length", w.size()},
                 {"word", echo_json(w)},
                 {"cube_free", report.cube_free},
                 {"witness", witness_json(report.witness)}}
                .dump(2);
  } else {
    o.out = "word: " + echo(w) + "\nlength: " + std::to_string(w.size()) +
            "\ncube-free: " + (report.cube_free ? "true" : "false");
    if (report.witness) {
      o.out += "\ncube: start " + std::to_string(report.witness->start) + ", period " +
               std::to_string(report.witness->period);
    }
  }
  return o;
}

Outcome run_tm(const Command& cmd) {
  const Letter x = cmd.tm_letter == 'b' ? Letter::b : Letter::a;
  json value;
  std::string text;
  if (cmd.tm_op == "block") {
    if (cmd.tm_arg > 40) throw ResourceError("block order above 40", cmd.tm_arg);
    const Word w = block(static_cast<unsigned>(cmd.tm_arg), x);
    value = echo_json(w);
    text = echo(w);
  } else if (cmd.tm_op == "prefix") {
    if (cmd.tm_arg > max_bytes_from_env()) throw ResourceError("prefix too long", cmd.tm_arg);
    const Word w = tm_prefix(x, cmd.tm_arg);
    value = echo_json(w);
    text = echo(w);
  } else if (cmd.tm_op == "rev-context") {
    if (cmd.tm_arg > max_bytes_from_env()) throw ResourceError("context too long", cmd.tm_arg);
    const Word w = rev_tm_context(cmd.tm_arg);
    value = echo_json(w);
    text = echo(w);
  } else {
    const bool c = coincides(cmd.tm_arg);
    value = c;
    text = c ? "true" : "false";
  }
  Outcome o;
  o.out = cmd.json ? json{{"schema", schema("tm")}, {"op", cmd.tm_op}, {"arg", cmd.tm_arg},
                          {"value", value}}
                         .dump(2)
                   : text;
  return o;
}

Outcome run_morphism(const Command& cmd) {
  const Morphism m = cmd.builtin ? builtin_morphism(*cmd.builtin) : Morphism::parse(*cmd.images);
  const bool ok = is_cube_free_morphism(m);
  Outcome o;
  o.exit_code = ok ? kOk : kPropertyFails;
  if (cmd.json) {
    o.out = json{{"schema", schema("morphism")},
                 {"morphism", m.to_string()},
                 {"uniform", m.uniform()},
                 {"cube_free", ok}}
                .dump(2);
  } else {
    o.out = "morphism: " + m.to_string() + "\ncube-free morphism: " + (ok ? "true" : "false");
  }
  return o;
}

Outcome run_construct(const Command& cmd) {
  const auto trace = build_w(*cmd.n);
  write_word(cmd, trace.result());
  Outcome o;
  if (cmd.json) {
    o.out = trace_json(trace, cmd.word_cap);
    return o;
  }
  std::ostringstream s;
  s << "n\ttrivial\t|X|\t|S|\t|W|\tx\n";
  for (const auto& r : trace.records) {
    s << r.n << '\t' << (r.trivial ? "yes" : "no") << '\t' << r.X.size() << '\t' << r.S.size()
      << '\t' << r.w_len << '\t' << (r.x ? r.x->str() : "-") << '\n';
  }
  s << "W_" << *cmd.n << ": " << echo(trace.result());
  o.out = s.str();
  return o;
}

Outcome run_premax(const Command& cmd) {
  const auto p = build_premax_left(*cmd.n);
  write_word(cmd, p.word);
  Outcome o;
  if (cmd.json) {
    o.out = json{{"schema", schema("premax")},
                 {"n", p.n},
                 {"length", p.word.size()},
                 {"X", p.X.str()},
                 {"P", p.P.str()},
                 {"final_buffer", p.S_bar.str()},
                 {"final_buffer_source", to_string(p.source)},
                 {"word", echo_json(p.word)}}
                .dump(2);
  } else {
    o.out = "n: " + std::to_string(p.n) + "\nlength: " + std::to_string(p.word.size()) +
            "\nX: " + p.X.str() + "\nP: " + p.P.str() + "\nfinal buffer: " + p.S_bar.str() +
            " (" + to_string(p.source) + ")\nword: " + echo(p.word);
  }
  return o;
}

Outcome run_twosided(const Command& cmd) {
  const auto t = build_premax_two_sided(*cmd.n, cmd.m);
  write_word(cmd, t.word);
  Outcome o;
  if (cmd.json) {
    o.out = json{{"schema", schema("twosided")},
                 {"n", t.n},
                 {"m", t.m},
                 {"x", std::string(1, to_char(t.x))},
                 {"half_length", t.half.size()},
                 {"length", t.word.size()},
                 {"word", echo_json(t.word)}}
                .dump(2);
  } else {
    o.out = "n: " + std::to_string(t.n) + "\nm: " + std::to_string(t.m) + "\nx: " +
            to_char(t.x) + "\nhalf length: " + std::to_string(t.half.size()) +
            "\nlength: " + std::to_string(t.word.size()) + "\nword: " + echo(t.word);
  }
  return o;
}

json side_json(const SideLevel& s) {
  json witness = json::array();
  for (const auto& w : s.witness) witness.push_back(w.str());
  return {{"exact", s.exact}, {"value", s.value}, {"witness", witness}};
}

std::string side_text(const std::string& name, const SideLevel& s) {
  std::string out = name + " level: " + (s.exact ? "" : ">= ") + std::to_string(s.value);
  for (const auto& w : s.witness) out += "\n  " + w.str();
  return out;
}

Outcome run_verify_level(const Command& cmd, std::istream& in) {
  Word w;
  if (cmd.n) {
    switch (cmd.side) {
      case LevelSide::left:
        w = build_premax_left(*cmd.n).word;
        break;
      case LevelSide::right:
        w = reverse(build_premax_left(*cmd.n).word);
        break;
      case LevelSide::both:
        w = build_premax_two_sided(*cmd.n).word;
        break;
    }
  } else {
    w = read_word(cmd, in);
  }
  const LevelReport r = cmd.side == LevelSide::left    ? left_level(w, cmd.cap)
                        : cmd.side == LevelSide::right ? right_level(w, cmd.cap)
                                                       : level2(w, cmd.cap);
  Outcome o;
  const bool exact = (!r.left || r.left->exact) && (!r.right || r.right->exact);
  o.exit_code = exact ? kOk : kPropertyFails;
  if (cmd.json) {
    json doc{{"schema", schema("level")}, {"side", to_string(r.side)}, {"cap", r.cap},
             {"length", w.size()}};
    doc["left"] = r.left ? side_json(*r.left) : json(nullptr);
    doc["right"] = r.right ? side_json(*r.right) : json(nullptr);
    o.out = doc.dump(2);
  } else {
    o.out = "length: " + std::to_string(w.size()) + "\ncap: " + std::to_string(r.cap);
    if (r.left) o.out += "\n" + side_text("left", *r.left);
    if (r.right) o.out += "\n" + side_text("right", *r.right);
  }
  return o;
}

std::string fixed_text(const FixedContext& f) {
  switch (f.kind) {
    case FixedContext::Kind::fixed:
      return "fixed " + (f.context.empty() ? std::string("(empty)") : f.context.str());
    case FixedContext::Kind::dead_at:
      return "dead at " + std::to_string(f.length);
    case FixedContext::Kind::cap_reached:
      break;
  }
  return "cap reached at " + std::to_string(f.length);
}

json fixed_json(const FixedContext& f) {
  static const char* kinds[] = {"fixed", "dead_at", "cap_reached"};
  return {{"kind", kinds[static_cast<int>(f.kind)]},
          {"context", f.context.str()},
          {"length", f.length}};
}

json certificate_json(const IterationCertificate& c) {
  auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
  return {{"n", c.n},
          {"xw_cube_free", c.xw_cube_free},
          {"first_branch", fixed_json(c.first_branch)},
          {"fixed_at_recorded", c.fixed_at_recorded},
          {"x_is_tm_context", c.x_is_tm_context},
          {"long_enough", c.long_enough},
          {"whitelisted", c.whitelisted},
          {"v_proper_cube_free", opt(c.v_proper_cube_free)},
          {"s_prime_occurrences", opt(c.s_prime_occurrences)},
          {"unit_cube_free", opt(c.unit_cube_free)},
          {"s_prime_prefix", c.s_prime_prefix},
          {"ok", c.ok()}};
}

std::string certificate_text(const IterationCertificate& c, std::size_t x_len) {
  auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string("-"); };
  return "n=" + std::to_string(c.n) + " |X|=" + std::to_string(x_len) +
         " XW-cube-free=" + std::to_string(c.xw_cube_free) +
         " first-branch=" + std::to_string(c.first_branch.length) +
         " fixed=" + std::to_string(c.fixed_at_recorded) +
         " V-proper=" + opt(c.v_proper_cube_free) + " s-prime-occurrences=" + opt(c.s_prime_occurrences) +
         " unit-cube-free=" + opt(c.unit_cube_free) + (c.whitelisted ? " whitelisted" : "") +
         (c.ok() ? " ok" : " FAIL");
}

Outcome run_verify_fixed(const Command& cmd, std::istream& in) {
  Outcome o;
  if (cmd.n) {
    const auto trace = build_w(*cmd.n);
    const auto c = certify_iteration(trace, *cmd.n);
    o.exit_code = c.ok() ? kOk : kPropertyFails;
    o.out = cmd.json ? json{{"schema", schema("certificate")}, {"certificates", {certificate_json(c)}}}
                           .dump(2)
                     : certificate_text(c, trace.records[*cmd.n].X.size());
    return o;
  }
  const Word w = read_word(cmd, in);
  const auto f = fixed_left_context(w, cmd.cap);
  o.exit_code = f.kind == FixedContext::Kind::fixed ? kOk : kPropertyFails;
  o.out = cmd.json ? json{{"schema", schema("fixed")}, {"cap", cmd.cap}, {"result", fixed_json(f)}}
                         .dump(2)
                   : fixed_text(f);
  return o;
}

Outcome run_verify_lemma3(const Command& cmd) {
  const auto trace = build_w(*cmd.n);
  Outcome o;
  json all = json::array();
  std::string text;
  bool ok = true;
  for (std::size_t k = 0; k <= *cmd.n; ++k) {
    const auto c = certify_iteration(trace, k);
    ok = ok && c.ok();
    all.push_back(certificate_json(c));
    text += certificate_text(c, trace.records[k].X.size()) + "\n";
  }
  o.exit_code = ok ? kOk : kPropertyFails;
  o.out = cmd.json ? json{{"schema", schema("certificate")}, {"certificates", all}, {"ok", ok}}
                         .dump(2)
                   : text + (ok ? "all certified" : "certification FAILED");
  return o;
}

Outcome run_search(const Command& cmd) {
  const auto words = enumerate_extremal(cmd.side, {cmd.level, cmd.level}, cmd.max_len);
  Outcome o;
  if (cmd.json) {
    json list = json::array();
    for (const auto& w : words) list.push_back(w.str());
    o.out = json{{"schema", schema("search")},
                 {"side", to_string(cmd.side)},
                 {"level", cmd.level},
                 {"max_len", cmd.max_len},
                 {"count", words.size()},
                 {"words", list}}
                .dump(2);
  } else {
    for (const auto& w : words) o.out += w.str() + "\n";
    o.out += "count: " + std::to_string(words.size());
  }
  return o;
}

Outcome run_export(const Command& cmd, std::istream& in) {
  const Word w = read_word(cmd, in);
  const auto side = cmd.side == LevelSide::right ? Side::right : Side::left;
  Outcome o;
  o.out = export_tree(context_tree(w, cmd.depth, side), cmd.format);
  if (!o.out.empty() && o.out.back() == '\n') o.out.pop_back();
  return o;
}

Outcome dispatch(const Command& cmd, std::istream& in) {
  switch (cmd.subcommand) {
    case Subcommand::check:
      return run_check(cmd, in);
    case Subcommand::tm:
      return run_tm(cmd);
    case Subcommand::morphism:
      return run_morphism(cmd);
    case Subcommand::construct:
      return run_construct(cmd);
    case Subcommand::premax:
      return run_premax(cmd);
    case Subcommand::twosided:
      return run_twosided(cmd);
    case Subcommand::verify:
      if (cmd.verify == VerifyMode::level) return run_verify_level(cmd, in);
      if (cmd.verify == VerifyMode::fixed_context) return run_verify_fixed(cmd, in);
      return run_verify_lemma3(cmd);
    case Subcommand::search:
      return run_search(cmd);
    case Subcommand::export_tree:
      return run_export(cmd, in);
  }
  return {kUsage, "", "unknown subcommand"};
}

Outcome failure(int code, const std::string& kind, const std::string& what) {
  return {code, "", kind + ": " + what};
}

}  // namespace

Outcome run(const Command& cmd, std::istream& in) {
  if (cmd.help) return {kOk, cmd.help_text, ""};
  try {
    return dispatch(cmd, in);
  } catch (const UsageError& e) {
    return failure(kUsage, "usage error", e.what());
  } catch (const ParseError& e) {
    return failure(kUsage, "usage error", e.what());
  } catch (const ResourceError& e) {
    return failure(kResource, "resource bound", e.what());
  } catch (const DomainError& e) {
    return failure(kPropertyFails, "error", e.what());
  } catch (const IntegrityError& e) {
    return failure(kPropertyFails, "integrity error", e.what());
  } catch (const std::exception& e) {
    return failure(kPropertyFails, "error", e.what());
  }
}

Outcome execute(const std::vector<std::string>& args, std::istream& in) {
  Command cmd;
  try {
    cmd = parse(args);
  } catch (const UsageError& e) {
    return failure(kUsage, "usage error", e.what());
  } catch (const ParseError& e) {
    return failure(kUsage, "usage error", e.what());
  } catch (const std::exception& e) {
    return failure(kUsage, "usage error", e.what());
  }
  return run(cmd, in);
}

}  // namespace cubefree::cli
