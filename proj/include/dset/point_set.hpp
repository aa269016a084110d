#ifndef DSET_POINT_SET_HPP
#define DSET_POINT_SET_HPP

#include "dset/cantor.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dset {

enum class Admissibility { proven, refuted };

std::string admissibility_name(Admissibility a);

// A set of points given by a boolean combination of clopen sets, lex
// intervals and the "not eventually constant" predicate. Every such set is
// (R1 ∩ EC) ∪ (R2 ∩ NEC) for regions R1, R2, where EC is the set of eventually
// constant points; that normal form makes membership, emptiness of
// intersections with regions, and admissibility exact.
class PointSet {
 public:
  enum class Kind { Everything, Empty, Clopen, Interval, NotEventuallyConstant, And, Or, Not };

  static PointSet everything();
  static PointSet nothing();
  static PointSet clopen(ClopenSet c);
  static PointSet interval(Interval iv);
  static PointSet not_eventually_constant();
  static PointSet both(PointSet a, PointSet b);
  static PointSet either(PointSet a, PointSet b);
  static PointSet negate(PointSet a);

  Kind kind() const;
  const ClopenSet& clopen_set() const;
  const Interval& lex_interval() const;
  const std::vector<PointSet>& operands() const;

  bool contains(const Point& p) const;
  bool is_everything() const;

  struct Normal {
    Region eventually_constant_part;
    Region other_part;
  };
  const Normal& normal() const { return normal_; }

  bool meets(const Region& r) const;
  // A member of r ∩ this set, preferring points that are not eventually constant.
  std::optional<Point> witness_in(const Region& r) const;
  // Admissible sets contain no eventually constant point.
  Admissibility admissibility() const;

  std::string to_string() const;

 private:
  struct Data;
  explicit PointSet(std::shared_ptr<const Data> d);
  std::shared_ptr<const Data> d_;
  Normal normal_;
};

}  // namespace dset

#endif
