#include "dset/rank.hpp"

#include "dset/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

namespace dset {

std::string pattern_name(Pattern p) {
  switch (p) {
    case Pattern::A1:
      return "A1";
    case Pattern::A2:
      return "A2";
    case Pattern::A3:
      return "A3";
  }
  return "?";
}

Pattern parse_pattern(const std::string& s) {
  if (s == "A1") return Pattern::A1;
  if (s == "A2") return Pattern::A2;
  if (s == "A3") return Pattern::A3;
  throw DomainError("bad pattern", "expected A1, A2 or A3, got '" + s + "'");
}

Ordinal Ladder::copy_rank(std::uint64_t n) const {
  return base + Ordinal::omega_power(Ordinal(exponent - 1), n) + Ordinal(offset);
}

Ordinal Ladder::limit() const { return base + Ordinal::omega_power(Ordinal(exponent)); }

Attachment Attachment::cycle(std::vector<Compact> shapes) {
  if (shapes.empty()) throw DomainError("bad compact", "a cycle needs at least one shape");
  Attachment a;
  a.shapes = std::move(shapes);
  return a;
}

Attachment Attachment::of_ladder(Ladder l) {
  if (l.exponent < 1 || l.offset < 1) throw DomainError("bad compact", "ladder needs exponent >= 1 and offset >= 1");
  Attachment a;
  a.kind = Kind::Ladder;
  a.ladder = std::move(l);
  return a;
}

Compact Attachment::copy(std::uint64_t n) const {
  if (kind == Kind::Cycle) return shapes[n % shapes.size()];
  Compact c = build_rank_example(ladder.copy_rank(n), ladder.pattern).compact;
  for (std::uint64_t i = 0; i < ladder.derived && c; ++i) c = sep_derivative(c, ladder.da, ladder.db);
  return c;
}

namespace {

// Nodes are immutable and shared, so results are memoised by node address.
// Cached entries keep their node alive, which rules out address reuse.
template <class V>
class NodeMemo {
 public:
  using Key = std::tuple<const CompactNode*, Rational, Rational>;
  std::optional<V> get(const Compact& k, const Rational& a, const Rational& b) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(Key{k.get(), a, b});
    if (it == map_.end()) return std::nullopt;
    return it->second.second;
  }
  void put(const Compact& k, const Rational& a, const Rational& b, V v) {
    std::lock_guard<std::mutex> lock(mu_);
    map_.emplace(Key{k.get(), a, b}, std::make_pair(k, std::move(v)));
  }

 private:
  std::mutex mu_;
  std::map<Key, std::pair<Compact, V>> map_;
};

}  // namespace

Compact leaf(Rational value) { return std::make_shared<CompactNode>(CompactNode{value, {}}); }

Compact apex(Rational value, std::vector<Attachment> attachments) {
  return std::make_shared<CompactNode>(CompactNode{value, std::move(attachments)});
}

namespace {

void check_pair(const Rational& a, const Rational& b) {
  if (!(a < b)) throw DomainError("bad pair", "need a < b, got " + format_rational(a) + " >= " + format_rational(b));
}

// Suprema and "limsups" (least ξ exceeded by only finitely many copies) of
// the copy summaries around one apex.
struct CopyLimits {
  Ordinal sup_alpha, sup_a, sup_b;
  Ordinal ls_a, ls_b;
};

RankSummary summary_of(const Compact& k, const Rational& a, const Rational& b);

// Ladder copies are probed: past a few copies each summary component is either
// constant or grows with the copy rank, in which case it tends to the limit.
void ladder_limits(const Ladder& l, const Rational& a, const Rational& b, CopyLimits& out) {
  const std::uint64_t p = l.derived + 3;
  std::vector<RankSummary> s;
  for (std::uint64_t n = 0; n <= p + 2; ++n) {
    Attachment att = Attachment::of_ladder(l);
    s.push_back(summary_of(att.copy(n), a, b));
  }
  const Ordinal eta = l.limit();
  auto fold = [&](Ordinal RankSummary::*field, Ordinal& sup, Ordinal* ls) {
    const bool constant = s[p].*field == s[p + 1].*field && s[p + 1].*field == s[p + 2].*field;
    Ordinal cs, cl;
    if (constant) {
      cl = s[p].*field;
      for (const auto& r : s) cs = ord_max(cs, r.*field);
    } else {
      cs = cl = eta;
    }
    sup = ord_max(sup, cs);
    if (ls) *ls = ord_max(*ls, cl);
  };
  fold(&RankSummary::alpha, out.sup_alpha, nullptr);
  fold(&RankSummary::alpha_a, out.sup_a, &out.ls_a);
  fold(&RankSummary::alpha_b, out.sup_b, &out.ls_b);
}

CopyLimits copy_limits(const CompactNode& n, const Rational& a, const Rational& b) {
  CopyLimits out;
  for (const auto& att : n.attachments) {
    if (att.kind == Attachment::Kind::Ladder) {
      ladder_limits(att.ladder, a, b, out);
      continue;
    }
    // Every shape of a cycle recurs infinitely often.
    for (const auto& s : att.shapes) {
      RankSummary r = summary_of(s, a, b);
      out.sup_alpha = ord_max(out.sup_alpha, r.alpha);
      out.sup_a = ord_max(out.sup_a, r.alpha_a);
      out.sup_b = ord_max(out.sup_b, r.alpha_b);
      out.ls_a = ord_max(out.ls_a, r.alpha_a);
      out.ls_b = ord_max(out.ls_b, r.alpha_b);
    }
  }
  return out;
}

// The apex lies in F^(ξ) exactly for ξ <= mu.
Ordinal apex_mu(const CompactNode& n, const CopyLimits& c, const Rational& a, const Rational& b) {
  const bool in_a = n.value < a, in_b = n.value > b;
  if (in_a) return c.ls_b;
  if (in_b) return c.ls_a;
  return std::min(c.ls_a, c.ls_b);
}

RankSummary summary_of(const Compact& k, const Rational& a, const Rational& b) {
  if (!k) return {};
  static NodeMemo<RankSummary> memo;
  if (auto hit = memo.get(k, a, b)) return *hit;
  const CopyLimits c = copy_limits(*k, a, b);
  const Ordinal mu1 = apex_mu(*k, c, a, b) + Ordinal(1);
  RankSummary r;
  r.alpha = ord_max(mu1, c.sup_alpha);
  r.alpha_a = ord_max(k->value < a ? mu1 : Ordinal(), c.sup_a);
  r.alpha_b = ord_max(k->value > b ? mu1 : Ordinal(), c.sup_b);
  memo.put(k, a, b, r);
  return r;
}

Compact derive_uncached(const Compact& k, const Rational& a, const Rational& b);

Compact derive(const Compact& k, const Rational& a, const Rational& b) {
  if (!k) return nullptr;
  static NodeMemo<Compact> memo;
  if (auto hit = memo.get(k, a, b)) return *hit;
  Compact out = derive_uncached(k, a, b);
  memo.put(k, a, b, out);
  return out;
}

Compact derive_uncached(const Compact& k, const Rational& a, const Rational& b) {
  if (apex_mu(*k, copy_limits(*k, a, b), a, b).is_zero()) return nullptr;
  std::vector<Attachment> atts;
  bool any = false;
  for (const auto& att : k->attachments) {
    if (att.kind == Attachment::Kind::Ladder) {
      Ladder l = att.ladder;
      if (l.derived > 0 && (l.da != a || l.db != b))
        throw DomainError("mixed pairs", "ladder already derived under another pair");
      l.derived += 1;
      l.da = a;
      l.db = b;
      atts.push_back(Attachment::of_ladder(l));
      any = true;
      continue;
    }
    std::vector<Compact> shapes;
    for (const auto& s : att.shapes) {
      shapes.push_back(derive(s, a, b));
      any = any || shapes.back();
    }
    atts.push_back(Attachment::cycle(std::move(shapes)));
  }
  if (!any) atts.clear();
  return apex(k->value, std::move(atts));
}

struct Located {
  Compact node;
  Word w;
};

std::optional<Located> locate(const Compact& k, const Point& x) {
  Compact cur = k;
  Word w;
  while (cur) {
    if (x == Point::eventually(w, '1')) return Located{cur, w};
    std::size_t ones = 0;
    while (x.bit(w.size() + ones) == '1') ++ones;
    const std::size_t m = cur->attachments.size();
    if (m == 0) return std::nullopt;
    cur = cur->attachments[ones % m].copy(ones / m);
    w += Word(ones, '1') + '0';
  }
  return std::nullopt;
}

std::size_t node_need(const CompactNode& n) {
  std::size_t longest = 1;
  for (const auto& att : n.attachments) {
    if (att.kind == Attachment::Kind::Ladder)
      throw DomainError("precision", "ladders need unbounded replication");
    longest = std::max(longest, att.shapes.size());
  }
  return n.attachments.empty() ? 0 : n.attachments.size() * longest;
}

void instantiate_at(const Compact& k, const Word& w, std::size_t depth, std::size_t precision,
                    std::vector<InstPoint>& out) {
  if (!k) return;
  if (w.size() > precision) throw DomainError("precision", "word length exceeds " + std::to_string(precision));
  const std::size_t need = node_need(*k);
  InstPoint p{Point::eventually(w, '1'), k->value, 0, need > 0};
  if (p.has_nbhd) p.nbhd_len = w.size() + depth - std::min(need, depth);
  out.push_back(p);
  if (need == 0) return;
  const std::size_t m = k->attachments.size();
  for (std::size_t slot = 0; slot < depth; ++slot)
    instantiate_at(k->attachments[slot % m].copy(slot / m), w + Word(slot, '1') + '0', depth, precision, out);
}

void collect_values(const Compact& k, std::set<Rational>& out) {
  if (!k) return;
  out.insert(k->value);
  for (const auto& att : k->attachments) {
    if (att.kind == Attachment::Kind::Ladder) {
      out.insert({Rational(0), Rational(1, 2), Rational(1)});
      continue;
    }
    for (const auto& s : att.shapes) collect_values(s, out);
  }
}

std::optional<Attainment> find_rank(const Compact& k, const Word& w, const Ordinal& target,
                                    const Rational& a, const Rational& b) {
  const std::size_t m = k->attachments.size();
  std::size_t slots = 0;
  for (const auto& att : k->attachments)
    slots = std::max(slots, att.kind == Attachment::Kind::Ladder ? std::size_t{64} : att.shapes.size());
  slots *= m;
  for (std::size_t slot = 0; slot < slots; ++slot) {
    Compact c = k->attachments[slot % m].copy(slot / m);
    if (!c) continue;
    const Ordinal r = alpha_on(c, a, b);
    const Word cw = w + Word(slot, '1') + '0';
    if (r == target) return Attainment{cw, c, r};
    if (r > target)
      if (auto found = find_rank(c, cw, target, a, b)) return found;
  }
  return std::nullopt;
}

}  // namespace

RankSummary rank_summary(const Compact& k, const Rational& a, const Rational& b) {
  check_pair(a, b);
  return summary_of(k, a, b);
}

Ordinal alpha_on(const Compact& k, const Rational& a, const Rational& b) { return rank_summary(k, a, b).alpha; }

Compact sep_derivative(const Compact& k, const Rational& a, const Rational& b) {
  check_pair(a, b);
  return derive(k, a, b);
}

std::vector<Compact> derivation_trace(const Compact& k, const Rational& a, const Rational& b,
                                      std::size_t max_steps) {
  check_pair(a, b);
  std::vector<Compact> out;
  Compact cur = k;
  while (out.size() < max_steps) {
    out.push_back(cur);
    if (!cur) break;
    cur = derive(cur, a, b);
  }
  return out;
}

std::vector<std::pair<Rational, Rational>> crossing_pairs(const Compact& k) {
  std::set<Rational> values;
  collect_values(k, values);
  if (values.empty()) return {{Rational(0), Rational(1)}};
  std::vector<Rational> v(values.begin(), values.end());
  if (v.size() == 1) return {{v[0] + 1, v[0] + 2}};
  std::vector<std::pair<Rational, Rational>> out;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const Rational gap = v[i + 1] - v[i];
    out.emplace_back(v[i] + gap / 2, v[i] + gap * 3 / 4);
    for (std::size_t j = i + 1; j + 1 < v.size(); ++j) out.emplace_back(v[i] + gap / 2, (v[j] + v[j + 1]) / 2);
  }
  return out;
}

Ordinal alpha_full(const Compact& k, const std::vector<std::pair<Rational, Rational>>& pairs) {
  if (pairs.empty()) throw DomainError("no pairs", "alpha_full needs at least one crossing pair");
  Ordinal best;
  for (const auto& [a, b] : pairs) best = ord_max(best, alpha_on(k, a, b));
  return best;
}

bool in_compact(const Compact& k, const Point& x) { return locate(k, x).has_value(); }

bool restrict_ball(const Compact& k, const Rational& a, const Rational& b, const Word& cyl,
                   const Ordinal& xi, const Point& x) {
  check_pair(a, b);
  check_word(cyl);
  if (!x.has_prefix(cyl)) throw DomainError("not in cylinder", x.to_string() + " is outside [" + cyl + "]");
  auto loc = locate(k, x);
  if (!loc) throw DomainError("not in compact", x.to_string() + " is not a point of the compactum");
  // K ∩ [cyl] contains the located node whole, or its apex and all copies
  // from some slot on; in both cases the node is clopen in K ∩ [cyl] and the
  // limsups at the apex ignore finitely many copies.
  const Ordinal mu = apex_mu(*loc->node, copy_limits(*loc->node, a, b), a, b);
  return xi <= mu;
}

RankExample build_rank_example(const Ordinal& xi, Pattern pattern) {
  if (xi.is_zero() || xi.is_limit())
    throw DomainError("not attainable on a compactum", "rank " + xi.to_string() + " is zero or a limit");
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, Compact> cache;
  const auto key = std::make_pair(xi.to_string(), static_cast<int>(pattern));
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return {it->second, Rational(1, 3), Rational(2, 3)};
  }

  const Rational value = pattern == Pattern::A1 ? Rational(0) : pattern == Pattern::A2 ? Rational(1) : Rational(1, 2);
  std::vector<Pattern> copies;
  if (pattern == Pattern::A1) copies = {Pattern::A2};
  if (pattern == Pattern::A2) copies = {Pattern::A1};
  if (pattern == Pattern::A3) copies = {Pattern::A1, Pattern::A2};

  const Ordinal eta = xi.predecessor();
  Compact out;
  if (eta.is_zero()) {
    out = leaf(value);
  } else if (eta.is_successor()) {
    std::vector<Compact> shapes;
    for (Pattern p : copies) shapes.push_back(build_rank_example(eta, p).compact);
    out = apex(value, {Attachment::cycle(std::move(shapes))});
  } else {
    // eta = gamma + ω^e: copies of ranks gamma + ω^(e-1)·n + 1 increase to eta.
    std::vector<OrdinalTerm> terms = eta.terms();
    const Ordinal e = terms.back().exponent;
    if (!e.is_finite() || e.to_finite() > 64)
      throw DomainError("unsupported rank", "ranks reach up to w^{w}; got " + xi.to_string());
    if (terms.back().coefficient == 1)
      terms.pop_back();
    else
      terms.back().coefficient -= 1;
    std::vector<Attachment> atts;
    for (Pattern p : copies) {
      Ladder l;
      l.pattern = p;
      l.base = Ordinal::from_terms(terms);
      l.exponent = static_cast<std::uint32_t>(e.to_finite());
      atts.push_back(Attachment::of_ladder(l));
    }
    out = apex(value, std::move(atts));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, out);
  return {out, Rational(1, 3), Rational(2, 3)};
}

std::size_t replication_need(const Compact& k) {
  if (!k) return 0;
  std::size_t need = node_need(*k);
  for (const auto& att : k->attachments)
    for (const auto& s : att.shapes) need = std::max(need, replication_need(s));
  return need;
}

std::vector<InstPoint> instantiate(const Compact& k, std::size_t depth, std::size_t precision) {
  std::vector<InstPoint> out;
  instantiate_at(k, "", depth, precision, out);
  return out;
}

std::uint64_t brute_force_alpha(const std::vector<InstPoint>& points, const Rational& a, const Rational& b) {
  check_pair(a, b);
  std::set<std::pair<Word, Word>> seen;
  for (const auto& p : points)
    if (!seen.emplace(p.x.prefix(), p.x.period()).second)
      throw DomainError("precision", "two declared points coincide at " + p.x.to_string());

  std::vector<std::size_t> live(points.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  std::uint64_t steps = 0;
  while (!live.empty()) {
    auto near = [&](std::size_t i, bool want_a) {
      const auto& p = points[i];
      if (want_a ? p.value < a : p.value > b) return true;
      if (!p.has_nbhd) return false;
      for (std::size_t j : live) {
        if (j == i) continue;
        const auto& q = points[j];
        if (!(want_a ? q.value < a : q.value > b)) continue;
        if (first_difference(p.x, q.x) >= p.nbhd_len) return true;
      }
      return false;
    };
    std::vector<std::size_t> next;
    for (std::size_t i : live)
      if (near(i, true) && near(i, false)) next.push_back(i);
    live = std::move(next);
    ++steps;
  }
  return steps;
}

std::vector<Attainment> attainment_witness(const Compact& k, const Rational& a, const Rational& b) {
  const Ordinal alpha = alpha_on(k, a, b);
  std::vector<Attainment> out{{"", k, alpha}};
  if (alpha.is_successor()) {
    const Ordinal xi = alpha.predecessor();
    if (xi.is_successor())
      if (auto found = find_rank(k, "", xi, a, b)) out.push_back(*found);
  }
  return out;
}

const Compact& ComponentSpace::component(std::size_t i) const { return i < components.size() ? components[i] : tail; }

Ordinal alpha_space(const ComponentSpace& s, const Rational& a, const Rational& b) {
  Ordinal best = alpha_on(s.tail, a, b);
  for (const auto& c : s.components) best = ord_max(best, alpha_on(c, a, b));
  return best;
}

Ordinal alpha_on_components(const ComponentSpace& s, const std::vector<std::size_t>& which, const Rational& a,
                            const Rational& b) {
  check_pair(a, b);
  Ordinal best;
  for (std::size_t i : which) best = ord_max(best, alpha_on(s.component(i), a, b));
  return best;
}

std::string compact_to_string(const Compact& k) {
  if (!k) return "Empty";
  if (k->attachments.empty()) return "Leaf(" + format_rational(k->value) + ")";
  std::string s = "Apex(" + format_rational(k->value);
  for (const auto& att : k->attachments) {
    s += "; ";
    if (att.kind == Attachment::Kind::Ladder) {
      const Ladder& l = att.ladder;
      s += "Ladder(" + pattern_name(l.pattern) + ", " + l.base.to_string() + ", " + std::to_string(l.exponent) +
           ", " + std::to_string(l.offset) + ", " + std::to_string(l.derived) + ")";
      continue;
    }
    s += "Cycle[";
    for (std::size_t i = 0; i < att.shapes.size(); ++i) s += (i ? ", " : "") + compact_to_string(att.shapes[i]);
    s += "]";
  }
  return s + ")";
}

}  // namespace dset
