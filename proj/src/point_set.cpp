#include "dset/point_set.hpp"

#include "dset/error.hpp"

namespace dset {

std::string admissibility_name(Admissibility a) { return a == Admissibility::proven ? "proven" : "refuted"; }

struct PointSet::Data {
  Kind kind = Kind::Everything;
  ClopenSet clopen;
  Interval interval = Interval::whole();
  std::vector<PointSet> operands;
};

namespace {

PointSet::Normal normal_of(PointSet::Kind kind, const ClopenSet& c, const Interval& iv,
                           const std::vector<PointSet>& ops) {
  using K = PointSet::Kind;
  switch (kind) {
    case K::Everything:
      return {Region::whole(), Region::whole()};
    case K::Empty:
      return {};
    case K::Clopen: {
      Region r = c.to_region();
      return {r, r};
    }
    case K::Interval: {
      Region r({iv});
      return {r, r};
    }
    case K::NotEventuallyConstant:
      return {Region(), Region::whole()};
    case K::And:
      return {ops[0].normal().eventually_constant_part.intersect(ops[1].normal().eventually_constant_part),
              ops[0].normal().other_part.intersect(ops[1].normal().other_part)};
    case K::Or:
      return {ops[0].normal().eventually_constant_part.unite(ops[1].normal().eventually_constant_part),
              ops[0].normal().other_part.unite(ops[1].normal().other_part)};
    case K::Not:
      return {ops[0].normal().eventually_constant_part.complement(), ops[0].normal().other_part.complement()};
  }
  return {};
}

}  // namespace

PointSet::PointSet(std::shared_ptr<const Data> d) : d_(std::move(d)) {
  normal_ = normal_of(d_->kind, d_->clopen, d_->interval, d_->operands);
}

PointSet PointSet::everything() { return PointSet(std::make_shared<Data>()); }

PointSet PointSet::nothing() {
  auto d = std::make_shared<Data>();
  d->kind = Kind::Empty;
  return PointSet(d);
}

PointSet PointSet::clopen(ClopenSet c) {
  auto d = std::make_shared<Data>();
  d->kind = Kind::Clopen;
  d->clopen = std::move(c);
  return PointSet(d);
}

PointSet PointSet::interval(Interval iv) {
  auto d = std::make_shared<Data>();
  d->kind = Kind::Interval;
  d->interval = std::move(iv);
  return PointSet(d);
}

PointSet PointSet::not_eventually_constant() {
  auto d = std::make_shared<Data>();
  d->kind = Kind::NotEventuallyConstant;
  return PointSet(d);
}

PointSet PointSet::both(PointSet a, PointSet b) {
  auto d = std::make_shared<Data>();
  d->kind = Kind::And;
  d->operands = {std::move(a), std::move(b)};
  return PointSet(d);
}

PointSet PointSet::either(PointSet a, PointSet b) {
  auto d = std::make_shared<Data>();
  d->kind = Kind::Or;
  d->operands = {std::move(a), std::move(b)};
  return PointSet(d);
}

PointSet PointSet::negate(PointSet a) {
  auto d = std::make_shared<Data>();
  d->kind = Kind::Not;
  d->operands = {std::move(a)};
  return PointSet(d);
}

PointSet::Kind PointSet::kind() const { return d_->kind; }
const ClopenSet& PointSet::clopen_set() const { return d_->clopen; }
const Interval& PointSet::lex_interval() const { return d_->interval; }
const std::vector<PointSet>& PointSet::operands() const { return d_->operands; }

bool PointSet::contains(const Point& p) const {
  switch (d_->kind) {
    case Kind::Everything:
      return true;
    case Kind::Empty:
      return false;
    case Kind::Clopen:
      return d_->clopen.contains(p);
    case Kind::Interval:
      return d_->interval.contains(p);
    case Kind::NotEventuallyConstant:
      return !p.is_eventually_constant();
    case Kind::And:
      return d_->operands[0].contains(p) && d_->operands[1].contains(p);
    case Kind::Or:
      return d_->operands[0].contains(p) || d_->operands[1].contains(p);
    case Kind::Not:
      return !d_->operands[0].contains(p);
  }
  return false;
}

bool PointSet::is_everything() const {
  return normal_.eventually_constant_part == Region::whole() && normal_.other_part == Region::whole();
}

bool PointSet::meets(const Region& r) const { return witness_in(r).has_value(); }

std::optional<Point> PointSet::witness_in(const Region& r) const {
  if (auto p = r.intersect(normal_.other_part).some_point_not_eventually_constant()) return p;
  return r.intersect(normal_.eventually_constant_part).some_point_eventually_constant();
}

Admissibility PointSet::admissibility() const {
  return normal_.eventually_constant_part.some_point_eventually_constant() ? Admissibility::refuted
                                                                          : Admissibility::proven;
}

std::string PointSet::to_string() const {
  switch (d_->kind) {
    case Kind::Everything:
      return "Everything";
    case Kind::Empty:
      return "Empty";
    case Kind::Clopen: {
      std::string s = "Clopen{";
      for (std::size_t i = 0; i < d_->clopen.words().size(); ++i)
        s += (i ? "," : "") + std::string("[") + d_->clopen.words()[i] + "]";
      return s + "}";
    }
    case Kind::Interval:
      return "Interval" + d_->interval.to_string();
    case Kind::NotEventuallyConstant:
      return "NotEventuallyConstant";
    case Kind::And:
      return "And(" + d_->operands[0].to_string() + ", " + d_->operands[1].to_string() + ")";
    case Kind::Or:
      return "Or(" + d_->operands[0].to_string() + ", " + d_->operands[1].to_string() + ")";
    case Kind::Not:
      return "Not(" + d_->operands[0].to_string() + ")";
  }
  return "?";
}

}  // namespace dset
