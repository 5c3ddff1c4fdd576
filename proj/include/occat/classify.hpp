#pragma once

#include <cstdint>
#include <vector>

#include "occat/surface.hpp"

namespace occat {

/// Normal encoding of a cobordism: mixed cycles at their least rotation,
/// boundary circles and components sorted. Equality decides isomorphism.
struct CanonicalForm {
  Cobordism cobordism;
  InvariantSummary summary;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.cobordism == b.cobordism;
  }
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    return a.cobordism <=> b.cobordism;
  }
};

/// Least rotation of a cyclic entry sequence.
std::vector<MixedEntry> least_rotation(const std::vector<MixedEntry>& cycle);

CanonicalForm canonicalize(const Cobordism& c);
/// canonicalize(c).cobordism.
Cobordism canonical(const Cobordism& c);

/// Throws PreconditionError when the sources or targets differ.
bool is_isomorphic(const Cobordism& a, const Cobordism& b);

/// Canonicalizes every element; runs in parallel when built with OpenMP.
std::vector<CanonicalForm> canonicalize_all(const std::vector<Cobordism>& cs);

/// One connected representative per (g, {w_b}) with g <= max_genus and each
/// w_b <= max_windows, sorted canonically. Throws InfeasibleError when obj
/// has no realizer. Parallel over the grid when built with OpenMP.
std::vector<CanonicalForm> enumerate_classes(const GeneralObject& obj,
                                             unsigned max_genus,
                                             unsigned max_windows);

/// The representative with genus `genus` and window vector `windows`, built
/// from realize(obj) by stabilizing and then adding handles and windows.
Cobordism class_representative(const GeneralObject& obj, unsigned genus,
                               const BraneCounts& windows);

struct StrataRow {
  std::uint32_t genus = 0;
  BraneCounts windows;
  std::size_t c = 0;
  bool in_b = false;

  friend auto operator<=>(const StrataRow&, const StrataRow&) = default;
};

std::vector<StrataRow> strata_table(const GeneralObject& obj, unsigned max_genus,
                                    unsigned max_windows);

namespace reference {

// Serial counterparts of the parallel kernels, kept for testing and benchmarks.
std::vector<CanonicalForm> canonicalize_all(const std::vector<Cobordism>& cs);
std::vector<CanonicalForm> enumerate_classes(const GeneralObject& obj,
                                             unsigned max_genus,
                                             unsigned max_windows);

}  // namespace reference

}  // namespace occat
