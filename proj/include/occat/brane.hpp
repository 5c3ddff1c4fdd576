#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace occat {

/// A D-brane label: an index into the declared BraneSet.
struct Brane {
  std::uint32_t id = 0;

  friend auto operator<=>(const Brane&, const Brane&) = default;
};

/// The finite, nonempty set of brane labels shared by every object and
/// cobordism of a computation. Declaration order fixes the brane ids.
class BraneSet {
 public:
  /// The single-brane set {"*"}.
  BraneSet();
  /// Throws PreconditionError on an empty list or duplicate names.
  explicit BraneSet(std::vector<std::string> names);

  static BraneSet single() { return BraneSet(); }

  std::size_t size() const { return names_->size(); }
  const std::vector<std::string>& names() const { return *names_; }
  const std::string& name(Brane b) const;
  std::optional<Brane> find(std::string_view name) const;
  bool contains(Brane b) const { return b.id < names_->size(); }
  std::vector<Brane> all() const;

  /// True for the implicit single-brane set {"*"}.
  bool is_default_single() const;

  friend bool operator==(const BraneSet& a, const BraneSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }
  friend auto operator<=>(const BraneSet& a, const BraneSet& b) {
    return *a.names_ <=> *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Per-brane counts indexed by brane id (window vectors).
using BraneCounts = std::vector<std::size_t>;

/// "{a:1,b:0}" style rendering.
std::string format_counts(const BraneSet& branes, const BraneCounts& counts);

}  // namespace occat
