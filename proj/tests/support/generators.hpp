#pragma once

#include <optional>
#include <random>

#include "occat/surface.hpp"

namespace occat::testing {

struct GenConfig {
  std::size_t max_components = 4;
  std::size_t max_free_circles = 2;
  std::size_t max_free_intervals = 3;
  std::uint32_t max_genus = 3;
  std::size_t max_windows = 2;
  // Every component gets outgoing boundary.
  bool b_only = false;
  // Probability that an empty component stays closed instead of getting a window.
  double closed_prob = 0.15;
};

/// Random valid cobordisms. Either the source is prescribed (to build
/// composable chains) or both ends are generated. Arc labels are chosen so
/// every mixed cycle is brane-coherent; extra free-side intervals are inserted
/// where two prescribed intervals would otherwise clash.
class CobordismGen {
 public:
  CobordismGen(std::uint64_t seed, BraneSet branes, GenConfig config = {});

  std::mt19937_64& rng() { return rng_; }
  const BraneSet& branes() const { return branes_; }

  Cobordism any();
  Cobordism from(const GeneralObject& source);
  /// A cobordism from `source` to (0).
  Cobordism to_circle(const GeneralObject& source);

  /// A random object whose sigma is brane-coherent.
  GeneralObject object(std::size_t max_circles = 2, std::size_t max_intervals = 3);

  /// A uniformly random brane-coherent permutation of obj's intervals, if one
  /// exists.
  std::optional<Permutation> coherent_sigma(const GeneralObject& obj);

  /// Reorders components and boundary lists and rotates mixed cycles.
  Cobordism shuffled(const Cobordism& c);

 private:
  Cobordism generate(const GeneralObject* source, bool target_is_circle);
  Brane random_brane();
  std::size_t uniform(std::size_t lo, std::size_t hi);

  std::mt19937_64 rng_;
  BraneSet branes_;
  GenConfig config_;
};

}  // namespace occat::testing
