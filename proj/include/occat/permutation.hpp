#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace occat {

/// 1-based position inside a general object.
using Index = std::uint32_t;

/// A bijection of a finite ordered index set onto itself.
///
/// The mapping is stored explicitly over its domain (never as one-line
/// notation on 1..k), so interval indices that skip over circle positions
/// keep their true values.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::vector<Index> domain);

  /// Builds a permutation on `domain` from disjoint cycles. Elements of the
  /// domain that appear in no cycle are fixed. Throws PreconditionError if a
  /// cycle element lies outside the domain or appears twice.
  static Permutation from_cycles(std::vector<Index> domain,
                                 const std::vector<std::vector<Index>>& cycles);

  /// `images[k]` is the image of `domain[k]`. Throws PreconditionError if the
  /// result is not a bijection of the domain.
  static Permutation from_images(std::vector<Index> domain,
                                 std::vector<Index> images);

  const std::vector<Index>& domain() const { return domain_; }
  std::size_t size() const { return domain_.size(); }
  bool contains(Index i) const;

  /// Image of `i`; throws PreconditionError when `i` is outside the domain.
  Index operator()(Index i) const;

  /// Disjoint cycles including fixed points. Each cycle starts at its least
  /// element and cycles are ordered by that element.
  std::vector<std::vector<Index>> cycles() const;
  std::size_t cycle_count() const;
  bool is_identity() const;

  Permutation inverse() const;

  /// Transports the permutation along an injective relabeling of indices:
  /// the result maps f(i) to f(p(i)).
  template <typename F>
  Permutation relabeled(F&& f) const {
    std::vector<Index> dom;
    std::vector<Index> img;
    dom.reserve(domain_.size());
    img.reserve(domain_.size());
    for (std::size_t k = 0; k < domain_.size(); ++k) {
      dom.push_back(f(domain_[k]));
      img.push_back(f(image_[k]));
    }
    return from_images(std::move(dom), std::move(img));
  }

  /// Cycle notation such as "(2 3)(4)"; the empty permutation prints as "id".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Index> domain_;  // sorted ascending
  std::vector<Index> image_;   // image_[k] is the image of domain_[k]
};

inline std::size_t cycle_count(const Permutation& p) { return p.cycle_count(); }

}  // namespace occat
