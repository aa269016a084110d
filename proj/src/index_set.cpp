#include "dset/index_set.hpp"

#include "dset/error.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace dset {

std::string side_name(Side s) {
  switch (s) {
    case Side::zero:
      return "0";
    case Side::one:
      return "1";
    default:
      return "all";
  }
}

Side parse_side(const std::string& text) {
  if (text == "all") return Side::all;
  if (text == "0") return Side::zero;
  if (text == "1") return Side::one;
  throw DomainError("bad index set", "side must be all, 0 or 1");
}

struct IndexSet::Data {
  Kind kind = Kind::Finite;
  std::vector<std::uint64_t> values;
  SchemaPtr schema;
  Point point;
  Side side = Side::all;
  std::uint64_t a = 1, b = 0, count = 0;
  std::vector<IndexSet> operands;
  bool certified = false;
  // Drop: the smallest surviving element, or none if the inner set is too short.
  std::optional<std::uint64_t> drop_from;
};

namespace {

constexpr std::uint64_t kMaxBound = std::uint64_t{1} << 63;
constexpr std::size_t kMaxWord = 62;

}  // namespace

IndexSet IndexSet::finite(std::vector<std::uint64_t> values) {
  auto d = std::make_shared<Data>();
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  d->values = std::move(values);
  return IndexSet(d);
}

IndexSet IndexSet::all() {
  auto d = std::make_shared<Data>();
  d->kind = Kind::All;
  return IndexSet(d);
}

IndexSet IndexSet::node_set(SchemaPtr schema) {
  if (!schema) throw DomainError("bad index set", "NodeSet needs a schema");
  auto d = std::make_shared<Data>();
  d->kind = Kind::NodeSet;
  d->schema = std::move(schema);
  return IndexSet(d);
}

IndexSet IndexSet::branch_siblings(Point x, Side side) {
  auto d = std::make_shared<Data>();
  d->kind = Kind::BranchSiblings;
  d->point = std::move(x);
  d->side = side;
  return IndexSet(d);
}

IndexSet IndexSet::branch_prefixes(Point x) {
  auto d = std::make_shared<Data>();
  d->kind = Kind::BranchPrefixes;
  d->point = std::move(x);
  return IndexSet(d);
}

IndexSet IndexSet::affine(IndexSet inner, std::uint64_t a, std::uint64_t b) {
  if (a == 0) throw DomainError("bad index set", "Affine needs a >= 1");
  auto d = std::make_shared<Data>();
  d->kind = Kind::Affine;
  d->a = a;
  d->b = b;
  d->operands = {std::move(inner)};
  return IndexSet(d);
}

IndexSet IndexSet::unite(std::vector<IndexSet> parts) {
  if (parts.empty()) throw DomainError("bad index set", "Union needs at least one operand");
  auto d = std::make_shared<Data>();
  d->kind = Kind::Union;
  d->operands = std::move(parts);
  return IndexSet(d);
}

IndexSet IndexSet::drop(IndexSet inner, std::uint64_t k) {
  auto d = std::make_shared<Data>();
  d->kind = Kind::Drop;
  d->count = k;
  if (k == 0) {
    d->drop_from = 0;
  } else {
    auto head = inner.take(static_cast<std::size_t>(k) + 1);
    if (head.size() > k) d->drop_from = head[k];
  }
  d->operands = {std::move(inner)};
  return IndexSet(d);
}

IndexSet IndexSet::at_least(IndexSet inner, std::uint64_t v) {
  auto d = std::make_shared<Data>();
  d->kind = Kind::AtLeast;
  d->count = v;
  d->operands = {std::move(inner)};
  return IndexSet(d);
}

IndexSet IndexSet::intersect(IndexSet a, IndexSet b, bool certified_infinite) {
  auto d = std::make_shared<Data>();
  d->kind = Kind::Intersect;
  d->operands = {std::move(a), std::move(b)};
  d->certified = certified_infinite;
  return IndexSet(d);
}

IndexSet IndexSet::difference(IndexSet a, IndexSet b, bool certified_infinite) {
  auto d = std::make_shared<Data>();
  d->kind = Kind::Difference;
  d->operands = {std::move(a), std::move(b)};
  d->certified = certified_infinite;
  return IndexSet(d);
}

IndexSet::Kind IndexSet::kind() const { return d_->kind; }
const std::vector<std::uint64_t>& IndexSet::values() const { return d_->values; }
const SchemaPtr& IndexSet::schema() const { return d_->schema; }
const Point& IndexSet::point() const { return d_->point; }
Side IndexSet::side() const { return d_->side; }
std::uint64_t IndexSet::a() const { return d_->a; }
std::uint64_t IndexSet::b() const { return d_->b; }
std::uint64_t IndexSet::count() const { return d_->count; }
const std::vector<IndexSet>& IndexSet::operands() const { return d_->operands; }
bool IndexSet::certified() const { return d_->certified; }

namespace {

bool side_matches(Side side, char bit) {
  return side == Side::all || (side == Side::zero && bit == '0') || (side == Side::one && bit == '1');
}

std::optional<Word> word_of(std::uint64_t n) {
  if (n >= (std::uint64_t{1} << (kMaxWord + 1)) - 1) return std::nullopt;
  return h_inv(n);
}

}  // namespace

bool IndexSet::contains(std::uint64_t n) const {
  const Data& d = *d_;
  switch (d.kind) {
    case Kind::Finite:
      return std::binary_search(d.values.begin(), d.values.end(), n);
    case Kind::All:
      return true;
    case Kind::NodeSet: {
      auto w = word_of(n);
      if (!w) return false;
      auto node = decode_node(*w);
      return node && schema_contains(*d.schema, *node);
    }
    case Kind::BranchSiblings: {
      auto w = word_of(n);
      if (!w || w->empty()) return false;
      const std::size_t k = w->size() - 1;
      const char xb = d.point.bit(k);
      return (*w)[k] != xb && side_matches(d.side, xb) && d.point.has_prefix(w->substr(0, k));
    }
    case Kind::BranchPrefixes: {
      auto w = word_of(n);
      return w && d.point.has_prefix(*w);
    }
    case Kind::Affine:
      return n >= d.b && (n - d.b) % d.a == 0 && d.operands[0].contains((n - d.b) / d.a);
    case Kind::Union:
      return std::any_of(d.operands.begin(), d.operands.end(), [n](const IndexSet& s) { return s.contains(n); });
    case Kind::Drop:
      return d.drop_from && n >= *d.drop_from && d.operands[0].contains(n);
    case Kind::AtLeast:
      return n >= d.count && d.operands[0].contains(n);
    case Kind::Intersect:
      return d.operands[0].contains(n) && d.operands[1].contains(n);
    case Kind::Difference:
      return d.operands[0].contains(n) && !d.operands[1].contains(n);
  }
  return false;
}

std::optional<bool> IndexSet::is_infinite() const {
  const Data& d = *d_;
  switch (d.kind) {
    case Kind::Finite:
      return false;
    case Kind::All:
    case Kind::BranchPrefixes:
      return true;
    case Kind::NodeSet:
      return schema_is_infinite(*d.schema);
    case Kind::BranchSiblings: {
      if (d.side == Side::all) return true;
      const char want = d.side == Side::zero ? '0' : '1';
      return d.point.period().find(want) != Word::npos;
    }
    case Kind::Affine:
    case Kind::AtLeast:
      return d.operands[0].is_infinite();
    case Kind::Drop:
      if (!d.drop_from) return false;
      return d.operands[0].is_infinite();
    case Kind::Union: {
      bool unknown = false;
      for (const auto& s : d.operands) {
        auto v = s.is_infinite();
        if (v == true) return true;
        if (!v) unknown = true;
      }
      if (unknown) return std::nullopt;
      return false;
    }
    case Kind::Intersect:
    case Kind::Difference:
      if (d.certified) return true;
      if (d.operands[0].is_infinite() == false) return false;
      if (d.kind == Kind::Intersect && d.operands[1].is_infinite() == false) return false;
      return std::nullopt;
  }
  return std::nullopt;
}

bool IndexSet::sparse() const {
  const Data& d = *d_;
  switch (d.kind) {
    case Kind::All:
      return false;
    case Kind::Affine:
    case Kind::Drop:
    case Kind::AtLeast:
    case Kind::Difference:
      return d.operands[0].sparse();
    case Kind::Union:
      return std::all_of(d.operands.begin(), d.operands.end(), [](const IndexSet& s) { return s.sparse(); });
    case Kind::Intersect:
      return d.operands[0].sparse() || d.operands[1].sparse();
    default:
      return true;
  }
}

std::vector<std::uint64_t> IndexSet::elements_below(std::uint64_t bound) const {
  const Data& d = *d_;
  std::vector<std::uint64_t> out;
  switch (d.kind) {
    case Kind::Finite:
      for (auto v : d.values)
        if (v < bound) out.push_back(v);
      return out;
    case Kind::All:
      if (bound > (std::uint64_t{1} << 26)) throw DomainError("enumeration too large", "All below " + std::to_string(bound));
      for (std::uint64_t v = 0; v < bound; ++v) out.push_back(v);
      return out;
    case Kind::NodeSet: {
      if (bound == 0) return out;
      const std::size_t max_len = std::min<std::size_t>(static_cast<std::size_t>(std::bit_width(bound)) - 1, kMaxWord);
      visit_coded_nodes(*d.schema, max_len, [&](const Node& node) {
        const std::uint64_t h = h_enum(node_code(node));
        if (h < bound) out.push_back(h);
      });
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
    case Kind::BranchSiblings:
      for (std::size_t k = 0; k < kMaxWord; ++k) {
        const char xb = d.point.bit(k);
        const std::uint64_t h = h_enum(d.point.restrict(k) + flip(xb));
        if (h >= bound) break;
        if (side_matches(d.side, xb)) out.push_back(h);
      }
      return out;
    case Kind::BranchPrefixes:
      for (std::size_t k = 0; k <= kMaxWord; ++k) {
        const std::uint64_t h = h_enum(d.point.restrict(k));
        if (h >= bound) break;
        out.push_back(h);
      }
      return out;
    case Kind::Affine: {
      if (bound <= d.b) return out;
      const std::uint64_t inner_bound = (bound - d.b + d.a - 1) / d.a;
      for (auto m : d.operands[0].elements_below(inner_bound)) out.push_back(d.a * m + d.b);
      return out;
    }
    case Kind::Union: {
      for (const auto& s : d.operands) {
        auto part = s.elements_below(bound);
        out.insert(out.end(), part.begin(), part.end());
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
    case Kind::Drop:
      if (!d.drop_from) return out;
      for (auto v : d.operands[0].elements_below(bound))
        if (v >= *d.drop_from) out.push_back(v);
      return out;
    case Kind::AtLeast:
      for (auto v : d.operands[0].elements_below(bound))
        if (v >= d.count) out.push_back(v);
      return out;
    case Kind::Intersect: {
      const bool first = d.operands[0].sparse() || !d.operands[1].sparse();
      const IndexSet& walk = d.operands[first ? 0 : 1];
      const IndexSet& test = d.operands[first ? 1 : 0];
      for (auto v : walk.elements_below(bound))
        if (test.contains(v)) out.push_back(v);
      return out;
    }
    case Kind::Difference:
      for (auto v : d.operands[0].elements_below(bound))
        if (!d.operands[1].contains(v)) out.push_back(v);
      return out;
  }
  return out;
}

std::vector<std::uint64_t> IndexSet::take(std::size_t k) const {
  if (k == 0) return {};
  std::uint64_t bound = 64;
  for (;;) {
    auto elems = elements_below(bound);
    if (elems.size() >= k) {
      elems.resize(k);
      return elems;
    }
    if (bound >= kMaxBound) {
      if (is_infinite() == true)
        throw DomainError("index overflow", "fewer than " + std::to_string(k) + " members below 2^63 in " + to_string());
      return elems;
    }
    bound *= 2;
  }
}

std::string IndexSet::to_string() const {
  const Data& d = *d_;
  auto list = [](const std::vector<IndexSet>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].to_string();
    return s;
  };
  switch (d.kind) {
    case Kind::Finite: {
      std::string s = "Finite[";
      for (std::size_t i = 0; i < d.values.size(); ++i) s += (i ? "," : "") + std::to_string(d.values[i]);
      return s + "]";
    }
    case Kind::All:
      return "All";
    case Kind::NodeSet:
      return "NodeSet";
    case Kind::BranchSiblings:
      return "BranchSiblings(" + d.point.to_string() + (d.side == Side::all ? "" : ", side " + side_name(d.side)) + ")";
    case Kind::BranchPrefixes:
      return "BranchPrefixes(" + d.point.to_string() + ")";
    case Kind::Affine:
      return "Affine(" + d.operands[0].to_string() + ", " + std::to_string(d.a) + ", " + std::to_string(d.b) + ")";
    case Kind::Union:
      return "Union(" + list(d.operands) + ")";
    case Kind::Drop:
      return "Drop(" + d.operands[0].to_string() + ", " + std::to_string(d.count) + ")";
    case Kind::AtLeast:
      return "AtLeast(" + d.operands[0].to_string() + ", " + std::to_string(d.count) + ")";
    case Kind::Intersect:
      return "Intersect(" + list(d.operands) + ")";
    case Kind::Difference:
      return "Difference(" + list(d.operands) + ")";
  }
  return "?";
}

std::uint64_t index_kth(const IndexSet& l, std::size_t k) {
  auto head = l.take(k + 1);
  if (head.size() <= k)
    throw DomainError("exhausted", l.to_string() + " has only " + std::to_string(head.size()) + " elements");
  return head[k];
}

}  // namespace dset
