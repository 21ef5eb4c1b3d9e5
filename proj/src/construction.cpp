#include "cubefree/construction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>

#include <json.hpp>

#include "cubefree/morphism.hpp"
#include "cubefree/thue_morse.hpp"

namespace cubefree {

using nlohmann::json;

std::uint64_t max_bytes_from_env() {
  const char* raw = std::getenv("CUBEFREE_MAX_BYTES");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxBytes;
  char* end = nullptr;
  const auto value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) {
    throw UsageError(std::string("CUBEFREE_MAX_BYTES must be a positive integer, got '") + raw +
                     "'");
  }
  return value;
}

const Word& initial_word() {
  static const Word w = Word::parse("aabaaba");
  return w;
}

Word s_stream(std::size_t num_letters) {
  return apply(psi(), tm_prefix(Letter::b, num_letters));
}

Letter block_letter(std::uint64_t j) { return tm_letter(Letter::b, j); }

Branch block_branch(std::uint64_t j) {
  return j > 0 && block_letter(j) == block_letter(j - 1) ? Branch::equal : Branch::not_equal;
}

namespace {

struct Position {
  std::uint64_t block;
  unsigned offset;
};

Position locate(std::uint64_t n) {
  const auto k = n - kSchedulePhase;
  return {k / 32, static_cast<unsigned>(k % 32)};
}

// Start of the first schedule row after iteration n, instantiated: the
// prohibition applied at the nontrivial iteration n.
Word next_prohibition(std::uint64_t n) {
  for (auto m = n + 1;; ++m) {
    if (const auto* row = schedule_row(m)) return instantiate(row->start, block_letter(locate(m).block));
  }
}

void check_size(std::uint64_t projected, const BuildOptions& options, const std::string& what) {
  if (projected > options.max_bytes) {
    throw ResourceError(what + " exceeds the bound of " + std::to_string(options.max_bytes) +
                            " letters",
                        projected);
  }
}

std::size_t with_coincidence(std::size_t len) { return coincides(len) ? len + 1 : len; }

}  // namespace

const ScheduleRow* schedule_row(std::uint64_t n) {
  if (n < kSchedulePhase) return nullptr;
  const auto [j, offset] = locate(n);
  return find_schedule_row(offset, block_branch(j));
}

Word buffer(std::int64_t m) {
  if (m < -1) throw DomainError("buffers start at index -1");
  const auto n = static_cast<std::uint64_t>(m + 1);
  const auto* row = schedule_row(n);
  if (row == nullptr) return {};
  const auto j = locate(n).block;
  const bool long_variant = row->alt_suffix && block_letter(j + 1) == block_letter(j);
  return instantiate(long_variant ? *row->alt_suffix : row->suffix, block_letter(j));
}

std::vector<std::pair<std::int64_t, Word>> segment(std::size_t iterations) {
  std::vector<std::pair<std::int64_t, Word>> out;
  Word joined;
  for (std::int64_t m = -1; m <= static_cast<std::int64_t>(iterations); ++m) {
    out.emplace_back(m, buffer(m));
    joined += out.back().second;
  }
  const auto images = joined.size() / psi().image_a().size() + 1;
  if (s_stream(images).prefix(joined.size()) != joined) {
    throw IntegrityError("schedule buffers diverge from the psi stream");
  }
  return out;
}

const Word& ConstructionTrace::word(std::size_t k) const {
  if (k >= records.size()) throw DomainError("no iteration " + std::to_string(k) + " in trace");
  auto it = words.upper_bound(k);
  --it;
  return it->second;
}

namespace {

// Fills in x, P, P' and p of the record for iteration k-1 when iteration k
// is nontrivial.
void attach_prohibition(IterationRecord& r, std::uint64_t k) {
  if (k < 4 || schedule_row(k) == nullptr) return;
  const Word q = next_prohibition(k);
  if (q.size() == 1 && q.front() != complement(rev_tm_letter(r.X.size() + 1))) {
    throw IntegrityError("prohibition at iteration " + std::to_string(k) +
                         " is a Thue-Morse letter");
  }
  r.x = q;
  r.P_prime = q + r.X;
  r.P = rev_tm_context(r.X.size() + q.size());
  r.p = r.X.size() + r.w_len + r.S.size() + q.size();
}

}  // namespace

ConstructionTrace build_w(std::size_t n, const BuildOptions& options) {
  ConstructionTrace trace;
  const Word& w0 = initial_word();
  trace.words.emplace(0, w0);

  auto push_record = [&](std::size_t k, bool trivial, std::size_t x_len) {
    IterationRecord r;
    r.n = k;
    r.base = k <= 4;
    r.trivial = trivial;
    r.X = rev_tm_context(x_len);
    r.S = buffer(static_cast<std::int64_t>(k));
    r.w_len = trace.words.rbegin()->second.size();
    if (const auto* row = schedule_row(k); row != nullptr && k >= 4) {
      r.row_offset = row->offset;
      r.row_branch = row->branch;
    }
    trace.records.push_back(std::move(r));
  };

  // W_0 = W_1 = W_2 with fixed context abb, and W_3 = W_0 S_{-1} S_1
  // (S_0 and S_2 are empty).
  std::size_t x_len = 3;
  for (std::size_t k = 0; k <= std::min<std::size_t>(n, 2); ++k) push_record(k, k > 0, x_len);
  if (n >= 3) {
    trace.words.emplace(3, w0 + buffer(-1) + buffer(1));
    push_record(3, false, x_len);
  }

  bool trick_open = false;
  for (std::size_t k = 4; k <= n; ++k) {
    IterationRecord& prev = trace.records.back();
    if (schedule_row(k) == nullptr) {
      if (x_len <= k - 1) {
        throw IntegrityError("iteration " + std::to_string(k) + " is trivial but |X| = " +
                             std::to_string(x_len));
      }
      push_record(k, true, x_len);
      continue;
    }
    attach_prohibition(prev, k);
    const Word& w = trace.words.rbegin()->second;
    const std::uint64_t projected = 3 * (w.size() + prev.S.size()) + 2 * prev.P_prime.size();
    check_size(projected, options, "W_" + std::to_string(k));

    Word next;
    next.reserve(projected);
    const Word unit = w + prev.S;
    next += unit;
    next += prev.P_prime;
    next += unit;
    next += prev.P_prime;
    next += unit;
    trace.words.emplace(k, std::move(next));

    const auto q_len = prev.x->size();
    if (q_len == 1) {
      x_len = with_coincidence(x_len + 1);
    } else if (!trick_open) {
      trick_open = true;
    } else {
      trick_open = false;
      x_len = with_coincidence(x_len + 3);
    }
    push_record(k, false, x_len);
  }
  attach_prohibition(trace.records.back(), n + 1);

  for (std::int64_t m = -1; m <= static_cast<std::int64_t>(n); ++m) trace.s_prime += buffer(m);
  return trace;
}

const Word& prohibited_letter(const IterationRecord& record) {
  if (!record.x) {
    throw DomainError("iteration " + std::to_string(record.n + 1) + " prohibits nothing");
  }
  return *record.x;
}

Word v_word(const ConstructionTrace& trace, std::size_t n) {
  const auto& r = trace.records.at(n);
  const Word unit = r.X + trace.word(n) + r.S + prohibited_letter(r);
  return unit + unit + unit;
}

bool IterationCertificate::ok() const {
  return xw_cube_free && fixed_at_recorded && x_is_tm_context && (long_enough || whitelisted) &&
         s_prime_prefix && v_proper_cube_free.value_or(true) && s_prime_occurrences.value_or(3) == 3 &&
         unit_cube_free.value_or(true);
}

IterationCertificate certify_iteration(const ConstructionTrace& trace, std::size_t n) {
  const auto& r = trace.records.at(n);
  const Word& w = trace.word(n);
  IterationCertificate c;
  c.n = n;
  c.xw_cube_free = is_cube_free(r.X + w).cube_free;
  if (!c.xw_cube_free) return c;
  c.first_branch = fixed_left_context(w, r.X.size() + 8);
  c.fixed_at_recorded = is_fixed_left_context(w, r.X);
  c.x_is_tm_context = r.X == rev_tm_context(r.X.size());
  c.long_enough = r.X.size() >= n;
  c.whitelisted = r.X.size() + 1 == n && r.x && r.x->size() == 3;
  const auto images = trace.s_prime.size() / psi().image_a().size() + 1;
  c.s_prime_prefix = s_stream(images).prefix(trace.s_prime.size()) == trace.s_prime;
  if (r.x) {
    const Word v = v_word(trace, n);
    c.v_proper_cube_free = check_proper_cube_free(v);
    Word s_prime;
    for (std::int64_t m = -1; m <= static_cast<std::int64_t>(n); ++m) s_prime += buffer(m);
    c.s_prime_occurrences = count_occurrences(s_prime, v);
    c.unit_cube_free = is_cube_free(r.X + w + r.S + *r.x).cube_free;
  }
  return c;
}

namespace {

EligibilityEntry eligibility_of(const ConstructionTrace& trace, std::size_t n) {
  EligibilityEntry e;
  e.n = n;
  e.x_len = trace.records.at(n).X.size();
  e.next_x_len = trace.records.at(n + 1).X.size();
  if (e.x_len != n) {
    e.reasons.push_back("|X_n| = " + std::to_string(e.x_len) + ", not n");
  }
  if (e.next_x_len < n + 1) {
    e.reasons.push_back("|X_{n+1}| = " + std::to_string(e.next_x_len) + " < n+1");
  }
  e.left = e.reasons.empty();
  const auto sn = static_cast<std::int64_t>(n);
  const Word s1 = buffer(sn + 1);
  const Word s4 = buffer(sn + 4);
  if (!buffer(sn + 3).empty()) e.reasons.emplace_back("S_{n+3} is not empty");
  if (s1.empty() || s4.empty()) {
    e.reasons.emplace_back("S_{n+1} or S_{n+4} is empty");
  } else if (s4.front() == s1.front()) {
    e.reasons.emplace_back("S_{n+4} starts like S_{n+1}");
  }
  e.two_sided = e.reasons.empty();
  return e;
}

Word final_buffer_from_table(std::size_t n) {
  const auto [j, offset] = locate(n + 1);
  const auto* row = find_final_row(offset, block_branch(j));
  if (row == nullptr || !row->final_suffix) return {};
  return instantiate(*row->final_suffix, complement(block_letter(j)));
}

Word premax_word(const Word& w, const Word& s_bar, const Word& p) {
  const Word unit = w + s_bar;
  Word out;
  out.reserve(3 * unit.size() + 2 * p.size());
  out += unit;
  out += p;
  out += unit;
  out += p;
  out += unit;
  return out;
}

constexpr std::size_t kMaxFinalBuffer = 8;

}  // namespace

std::vector<EligibilityEntry> eligibility_scan(const ConstructionTrace& trace) {
  std::vector<EligibilityEntry> out;
  for (std::size_t n = 0; n + 1 < trace.records.size(); ++n) out.push_back(eligibility_of(trace, n));
  return out;
}

std::string eligibility_json(const std::vector<EligibilityEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries) {
    out.push_back({{"n", e.n},
                   {"x_len", e.x_len},
                   {"next_x_len", e.next_x_len},
                   {"left", e.left},
                   {"two_sided", e.two_sided},
                   {"reasons", e.reasons}});
  }
  return out.dump(2);
}

std::string to_string(FinalBufferSource source) {
  return source == FinalBufferSource::table ? "table" : "tm_extension";
}

PremaxLeft build_premax_left(std::size_t n, const BuildOptions& options) {
  const auto trace = build_w(n + 1, options);
  const auto e = eligibility_of(trace, n);
  if (!e.left) {
    throw DomainError("n = " + std::to_string(n) + " is not eligible: |X_n| = " +
                      std::to_string(e.x_len) + ", |X_{n+1}| = " + std::to_string(e.next_x_len));
  }
  PremaxLeft out;
  out.n = n;
  out.X = trace.records[n].X;
  out.P = rev_tm_context(n + 1);
  const Word& w = trace.word(n + 1);
  check_size(3 * (w.size() + kMaxFinalBuffer) + 2 * out.P.size(), options,
             "left premaximal word for n = " + std::to_string(n));

  auto accepts = [&](const Word& s_bar) {
    out.word = premax_word(w, s_bar, out.P);
    return is_cube_free(out.X + out.word).cube_free;
  };
  out.S_bar = final_buffer_from_table(n);
  if (accepts(out.S_bar)) return out;
  out.source = FinalBufferSource::tm_extension;
  for (std::size_t len = 0; len <= kMaxFinalBuffer; ++len) {
    out.S_bar = rev_tm_context(n + 1 + len).prefix(len);
    if (accepts(out.S_bar)) return out;
  }
  throw IntegrityError("no final buffer keeps X_n W-bar_n cube-free for n = " +
                       std::to_string(n));
}

unsigned minimal_block_order(std::size_t x_half_len) {
  unsigned m = 2;
  while ((std::uint64_t{1} << (m - 2)) <= x_half_len) m += 2;
  return m;
}

PremaxTwoSided build_premax_two_sided(std::size_t n, std::optional<unsigned> m,
                                      const BuildOptions& options) {
  if (m && *m % 2 != 0) throw UsageError("m must be even, got " + std::to_string(*m));
  const auto trace = build_w(n + 1, options);
  const auto e = eligibility_of(trace, n);
  if (!e.two_sided) {
    std::string why;
    for (const auto& r : e.reasons) why += (why.empty() ? "" : "; ") + r;
    throw DomainError("n = " + std::to_string(n) + " is not eligible: " + why);
  }
  PremaxTwoSided out;
  out.n = n;
  out.X = trace.records[n].X;
  const auto sn = static_cast<std::int64_t>(n);
  const Word p = rev_tm_context(n + 1);
  const Word core = trace.word(n + 1) + buffer(sn + 1) + buffer(sn + 2);
  out.x = buffer(sn + 1).front();
  if (out.x != p.front()) throw IntegrityError("S_{n+1} does not start with P_n(1)");
  check_size(3 * core.size() + 2 * p.size(), options, "half word for n = " + std::to_string(n));
  out.half = premax_word(core, Word{}, p);

  const unsigned needed = minimal_block_order(out.X.size() + out.half.size());
  out.m = m.value_or(needed);
  if (out.m < needed) {
    throw UsageError("m = " + std::to_string(out.m) + " is too small; need at least " +
                     std::to_string(needed));
  }
  if (out.m >= 63) throw ResourceError("block order too large", out.m);
  const std::uint64_t total = 2 * out.half.size() + (std::uint64_t{1} << out.m);
  check_size(total, options, "two-sided word for n = " + std::to_string(n));
  out.word.reserve(total);
  out.word += out.half;
  out.word += block(out.m, complement(out.x));
  out.word += reverse(out.half);
  return out;
}

double fitted_growth_base(const ConstructionTrace& trace) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0, count = 0;
  for (const auto& r : trace.records) {
    if (r.n < 3) continue;
    const double x = static_cast<double>(r.n);
    const double y = std::log(static_cast<double>(r.w_len));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    count += 1;
  }
  if (count < 2) throw DomainError("growth fit needs at least two iterations from n = 3");
  const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  return std::exp(slope);
}

std::string trace_json(const ConstructionTrace& trace, std::size_t word_cap) {
  json out;
  out["schema"] = "cubefree/trace/1";
  out["n"] = trace.last();
  out["s_prime_len"] = trace.s_prime.size();
  json records = json::array();
  for (const auto& r : trace.records) {
    json row = nullptr;
    if (r.row_offset) {
      row = {{"offset", *r.row_offset},
             {"branch", *r.row_branch == Branch::equal ? "equal" : "not_equal"}};
    }
    records.push_back({{"n", r.n},
                       {"base", r.base},
                       {"trivial", r.trivial},
                       {"x", r.x ? json(r.x->str()) : json(nullptr)},
                       {"X", r.X.str()},
                       {"X_len", r.X.size()},
                       {"S", r.S.str()},
                       {"S_len", r.S.size()},
                       {"P_prime", r.P_prime.str()},
                       {"w_len", r.w_len},
                       {"p", r.x ? json(r.p) : json(nullptr)},
                       {"row", row}});
  }
  out["records"] = std::move(records);
  json words = json::object();
  json recipes = json::array();
  std::optional<std::size_t> previous;
  for (const auto& [k, w] : trace.words) {
    if (k <= 3 || w.size() <= word_cap) {
      words[std::to_string(k)] = w.str();
    } else {
      const auto& r = trace.records[k - 1];
      recipes.push_back({{"n", k}, {"from", *previous}, {"S", r.S.str()}, {"P_prime", r.P_prime.str()}});
    }
    previous = k;
  }
  out["words"] = std::move(words);
  out["recipes"] = std::move(recipes);
  return out.dump();
}

Word expand_word(std::string_view json_text, std::size_t n) {
  const json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.contains("words") || !doc.contains("recipes")) {
    throw UsageError("not a construction trace document");
  }
  if (n > doc.at("n").get<std::size_t>()) {
    throw DomainError("trace stops before iteration " + std::to_string(n));
  }
  std::map<std::size_t, json> recipes;
  for (const auto& r : doc.at("recipes")) recipes[r.at("n").get<std::size_t>()] = r;
  std::map<std::size_t, Word> known;
  for (const auto& [key, value] : doc.at("words").items()) {
    known[std::stoul(key)] = Word::parse(value.get<std::string>());
  }
  std::size_t key = 0;
  for (const auto& [k, w] : known) if (k <= n) key = std::max(key, k);
  for (const auto& [k, r] : recipes) if (k <= n) key = std::max(key, k);

  std::function<Word(std::size_t)> expand = [&](std::size_t k) -> Word {
    if (auto it = known.find(k); it != known.end()) return it->second;
    const auto& r = recipes.at(k);
    const Word from = expand(r.at("from").get<std::size_t>());
    const Word s = Word::parse(r.at("S").get<std::string>());
    const Word p = Word::parse(r.at("P_prime").get<std::string>());
    Word w = premax_word(from + s, Word{}, p);
    known.emplace(k, w);
    return w;
  };
  return expand(key);
}

}  // namespace cubefree
