#pragma once

#include "occat/surface.hpp"

namespace occat {

/// The cylinder over `obj`: an annulus per circle, a square per interval.
Cobordism identity(const GeneralObject& obj);

/// Glues `first` (n -> m) to `second` (m -> k) along m and returns the
/// composite n -> k. Throws PreconditionError unless first.target equals
/// second.source (entries, branes and sigma).
Cobordism compose(const Cobordism& second, const Cobordism& first);

/// Disjoint union; b's object positions shift past a's.
Cobordism tensor(const Cobordism& a, const Cobordism& b);

/// The symmetry a (x) b -> b (x) a made of identity-shaped cylinders.
Cobordism swap_cobordism(const GeneralObject& a, const GeneralObject& b);

/// The minimal connected cobordism obj -> (0) inducing obj.sigma(): genus 0,
/// no windows, one mixed circle per cycle. Throws InfeasibleError when a
/// cycle is not brane-coherent.
Cobordism realize(const GeneralObject& obj);

/// Pulls `tau` (on the target's intervals) back to the source by gluing a
/// realizer of (target, tau) after `c` and reading the boundary permutation.
Permutation pullback(const Cobordism& c, const Permutation& tau);

/// Same as pullback but glues the given realizer, which must be a
/// connected cobordism from (c.target with sigma tau) to (0).
Permutation pullback_with(const Cobordism& c, const Cobordism& realizer);

/// True iff pullback(c, tgt.sigma()) == src.sigma(). Entries of src/tgt must
/// match c's source/target; an infeasible tgt yields false.
bool is_morphism(const Cobordism& c, const GeneralObject& src,
                 const GeneralObject& tgt);

/// Genus one, (0) -> (0), one window per brane (T, or T_B for several branes).
Cobordism make_T(const BraneSet& branes);
/// Genus one, (0) -> (0), no windows.
Cobordism make_handle(const BraneSet& branes);
/// Genus zero, (0) -> (0), a single window labeled `b`.
Cobordism make_window(const BraneSet& branes, Brane b);

/// Glues make_T onto the outgoing circle `times` times. Throws
/// PreconditionError unless c's target is (0).
Cobordism stabilize(const Cobordism& c, unsigned times = 1);

/// The empty cobordism between empty objects, unit of tensor.
Cobordism empty_cobordism(const BraneSet& branes);

}  // namespace occat
