#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "occat/brane.hpp"
#include "occat/permutation.hpp"

namespace occat {

struct Circle {
  friend auto operator<=>(const Circle&, const Circle&) = default;
};

/// An interval entry with the branes labeling its left and right endpoints.
struct Interval {
  Brane left;
  Brane right;

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

using Entry = std::variant<Circle, Interval>;

/// An object of the open-closed category: a sequence of circles and
/// brane-labeled intervals together with an open boundary permutation on
/// the interval positions.
class GeneralObject {
 public:
  /// The empty object over the single-brane set.
  GeneralObject();
  /// Identity permutation on the interval positions.
  GeneralObject(BraneSet branes, std::vector<Entry> entries);
  /// Throws PreconditionError if a brane is outside `branes` or `sigma` is not
  /// a bijection of the interval positions.
  GeneralObject(BraneSet branes, std::vector<Entry> entries, Permutation sigma);

  /// The object (0): one circle.
  static GeneralObject circle(BraneSet branes);
  static GeneralObject empty(BraneSet branes);
  /// Convenience for single-brane examples: 0 is a circle, 1 an interval.
  static GeneralObject from_bits(const std::vector<int>& bits,
                                 BraneSet branes = BraneSet());

  const BraneSet& branes() const { return branes_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const Permutation& sigma() const { return sigma_; }
  std::size_t length() const { return entries_.size(); }

  bool is_circle(Index i) const;
  bool is_interval(Index i) const;
  /// Throws PreconditionError unless position `i` holds an interval.
  const Interval& interval(Index i) const;

  /// Positions holding an interval, ascending (the set I(n)).
  std::vector<Index> interval_indices() const;
  /// Number of intervals, the length of interval_indices().
  std::size_t alpha() const;
  std::vector<Index> circle_indices() const;
  std::size_t circle_count() const;

  GeneralObject with_sigma(Permutation sigma) const;

  /// "(0,1,1,1) sigma=(2 3)(4)"; multi-brane objects show endpoint labels.
  std::string to_string() const;

  friend bool operator==(const GeneralObject&, const GeneralObject&) = default;
  friend auto operator<=>(const GeneralObject&, const GeneralObject&) = default;

 private:
  BraneSet branes_;
  std::vector<Entry> entries_;
  Permutation sigma_;
};

inline std::vector<Index> interval_indices(const GeneralObject& obj) {
  return obj.interval_indices();
}

/// Circles + cycles of sigma + 1: the number of fixed boundary components of
/// any connected cobordism from `obj` to (0).
std::size_t c_number(const GeneralObject& obj);

/// Juxtaposition `a` followed by `b`; b's interval positions shift by
/// a.length(). Throws PreconditionError on different brane sets.
GeneralObject object_tensor(const GeneralObject& a, const GeneralObject& b);

/// True when every cycle of `obj.sigma()` closes up: the right brane of each
/// interval equals the left brane of its successor.
bool is_brane_coherent(const GeneralObject& obj);

}  // namespace occat
