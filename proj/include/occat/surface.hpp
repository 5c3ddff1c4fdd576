#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "occat/object.hpp"

namespace occat {

enum class Side : std::uint8_t { Incoming, Outgoing };

/// Traversal direction each side gets from the surface orientation:
/// incoming intervals run left to right, outgoing ones right to left.
constexpr bool default_reversed(Side side) { return side == Side::Outgoing; }

/// An interval of the source (Incoming) or target (Outgoing) object as it
/// appears on a mixed boundary circle. `reversed` means the traversal meets
/// the right endpoint first.
struct IntervalRef {
  Side side = Side::Incoming;
  Index index = 0;
  bool reversed = false;

  friend auto operator<=>(const IntervalRef&, const IntervalRef&) = default;
};

inline IntervalRef incoming(Index i) {
  return {Side::Incoming, i, default_reversed(Side::Incoming)};
}
inline IntervalRef outgoing(Index i) {
  return {Side::Outgoing, i, default_reversed(Side::Outgoing)};
}

/// A free-boundary arc joining two interval endpoints.
struct Arc {
  Brane brane;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Variant order makes every IntervalRef sort before every Arc.
using MixedEntry = std::variant<IntervalRef, Arc>;

struct InClosed {
  Index index = 0;
  friend auto operator<=>(const InClosed&, const InClosed&) = default;
};
struct OutClosed {
  Index index = 0;
  friend auto operator<=>(const OutClosed&, const OutClosed&) = default;
};
/// A circle component of the free boundary.
struct Window {
  Brane brane;
  friend auto operator<=>(const Window&, const Window&) = default;
};
/// A boundary circle alternating intervals and free arcs, listed in the
/// order induced by the surface orientation.
struct Mixed {
  std::vector<MixedEntry> cycle;
  friend auto operator<=>(const Mixed&, const Mixed&) = default;
};

using BoundaryCircle = std::variant<InClosed, OutClosed, Window, Mixed>;

/// A connected piece of a cobordism, up to diffeomorphism.
struct Component {
  std::uint32_t genus = 0;
  std::vector<BoundaryCircle> boundary;

  friend auto operator<=>(const Component&, const Component&) = default;
};

struct Cobordism {
  GeneralObject source;
  GeneralObject target;
  std::vector<Component> components;

  friend auto operator<=>(const Cobordism&, const Cobordism&) = default;
};

struct Violation {
  std::optional<std::size_t> component;  // 0-based
  std::optional<std::size_t> circle;     // 0-based within the component
  std::string rule;
  std::string message;
};

std::string to_string(const Violation& v);

/// Empty result means valid.
std::vector<Violation> validate(const Cobordism& c);
inline bool is_valid(const Cobordism& c) { return validate(c).empty(); }

/// 2 - 2g - b.
long euler_char(const Component& comp);
long euler_char_total(const Cobordism& c);

/// Inverse of euler_char. Throws std::logic_error if 2 - chi - b is odd or
/// negative, which only a gluing bug can produce.
std::uint32_t genus_from_euler(long chi, std::size_t boundary_circles);

BraneCounts window_vector(const Component& comp, std::size_t brane_count);
BraneCounts window_vector(const Cobordism& c);

/// The open boundary permutation of a cobordism whose target is (0): each
/// source interval maps to the next interval along its mixed boundary
/// circle. Throws PreconditionError if the target is not (0).
Permutation boundary_permutation(const Cobordism& c);

/// True when every component has some outgoing boundary.
bool has_outgoing_boundary(const Component& comp);
bool in_b_subcategory(const Cobordism& c);

struct BoundaryKinds {
  std::size_t in_closed = 0;
  std::size_t out_closed = 0;
  std::size_t windows = 0;
  std::size_t mixed = 0;

  friend auto operator<=>(const BoundaryKinds&, const BoundaryKinds&) = default;
};

struct ComponentSummary {
  std::uint32_t genus = 0;
  BraneCounts windows;
  BoundaryKinds kinds;
  long euler = 0;
  /// Boundary circles that are not windows.
  std::size_t fixed_boundary = 0;
  bool has_outgoing = false;

  friend auto operator<=>(const ComponentSummary&, const ComponentSummary&) = default;
};

struct InvariantSummary {
  std::vector<ComponentSummary> components;  // sorted
  std::uint64_t total_genus = 0;
  BraneCounts total_windows;
  std::size_t component_count = 0;

  friend bool operator==(const InvariantSummary&, const InvariantSummary&) = default;
};

ComponentSummary summarize(const Component& comp, std::size_t brane_count);
InvariantSummary invariant_summary(const Cobordism& c);

}  // namespace occat
