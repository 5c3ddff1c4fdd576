#include "occat/calculus.hpp"

#include <array>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "occat/error.hpp"

namespace occat {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;  // smallest id stays the root
  }

 private:
  std::vector<std::size_t> parent_;
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// An arc of a mixed cycle together with what follows it along the cycle.
struct ArcNode {
  Brane brane;
  std::size_t piece = 0;
  IntervalRef next_ref;
  bool next_glued = false;
  std::size_t next_arc = kNone;  // arc after next_ref
  std::size_t fuse_next = kNone;
  bool fuse_prev = false;
  bool visited = false;
};

enum Endpoint : int { kLeft = 0, kRight = 1 };

// The arcs meeting a glued interval from one side.
struct GlueEnd {
  std::size_t piece = kNone;
  std::array<std::size_t, 2> arriving{kNone, kNone};   // by endpoint
  std::array<std::size_t, 2> departing{kNone, kNone};  // by endpoint
};

Component cylinder(const GeneralObject& obj, Index from, Index to) {
  Component comp;
  if (const auto* iv = std::get_if<Interval>(&obj.entries()[from - 1])) {
    comp.boundary.push_back(Mixed{{incoming(from), Arc{iv->right}, outgoing(to), Arc{iv->left}}});
  } else {
    comp.boundary.push_back(InClosed{from});
    comp.boundary.push_back(OutClosed{to});
  }
  return comp;
}

bool is_single_circle(const GeneralObject& obj) {
  return obj.length() == 1 && obj.is_circle(1);
}

}  // namespace

Cobordism identity(const GeneralObject& obj) {
  Cobordism c{obj, obj, {}};
  for (Index i = 1; i <= obj.length(); ++i) c.components.push_back(cylinder(obj, i, i));
  return c;
}

Cobordism compose(const Cobordism& second, const Cobordism& first) {
  if (!(first.target == second.source)) {
    throw PreconditionError("cannot compose: first ends at " + first.target.to_string() +
                            " but second starts at " + second.source.to_string());
  }
  const std::size_t first_count = first.components.size();
  const std::size_t pieces = first_count + second.components.size();
  auto piece_of = [&](std::size_t p) -> const Component& {
    return p < first_count ? first.components[p] : second.components[p - first_count];
  };

  UnionFind uf(pieces);
  std::map<Index, std::size_t> closed_out;  // first's OutClosed -> piece
  std::map<Index, std::size_t> closed_in;   // second's InClosed -> piece
  std::map<Index, std::array<GlueEnd, 2>> glued;  // middle interval -> [first, second]
  std::vector<ArcNode> arcs;

  for (std::size_t p = 0; p < pieces; ++p) {
    const bool from_first = p < first_count;
    for (const auto& circle : piece_of(p).boundary) {
      if (from_first) {
        if (const auto* out = std::get_if<OutClosed>(&circle)) closed_out[out->index] = p;
      } else {
        if (const auto* in = std::get_if<InClosed>(&circle)) closed_in[in->index] = p;
      }
      const auto* mixed = std::get_if<Mixed>(&circle);
      if (!mixed) continue;
      const auto& cyc = mixed->cycle;
      const std::size_t n = cyc.size();
      // Arc ids for this cycle: position -> global id.
      std::vector<std::size_t> ids(n, kNone);
      for (std::size_t q = 0; q < n; ++q) {
        if (const auto* arc = std::get_if<Arc>(&cyc[q])) {
          ids[q] = arcs.size();
          ArcNode node;
          node.brane = arc->brane;
          node.piece = p;
          arcs.push_back(node);
        }
      }
      for (std::size_t q = 0; q < n; ++q) {
        const auto* ref = std::get_if<IntervalRef>(&cyc[q]);
        if (!ref) continue;
        const std::size_t before = ids[(q + n - 1) % n];
        const std::size_t after = ids[(q + 1) % n];
        const bool is_glued = (from_first && ref->side == Side::Outgoing) ||
                              (!from_first && ref->side == Side::Incoming);
        arcs[before].next_ref = *ref;
        arcs[before].next_glued = is_glued;
        arcs[before].next_arc = after;
        if (is_glued) {
          GlueEnd& end = glued[ref->index][from_first ? 0 : 1];
          end.piece = p;
          const Endpoint met_first = ref->reversed ? kRight : kLeft;
          const Endpoint met_second = ref->reversed ? kLeft : kRight;
          end.arriving[met_first] = before;
          end.departing[met_second] = after;
        }
      }
    }
  }

  std::map<std::size_t, long> glued_intervals;  // piece -> count, resolved to roots below
  for (const auto& [index, piece] : closed_out) {
    auto it = closed_in.find(index);
    assert(it != closed_in.end());
    uf.unite(piece, it->second);
  }
  for (auto& [index, ends] : glued) {
    assert(ends[0].piece != kNone && ends[1].piece != kNone);
    uf.unite(ends[0].piece, ends[1].piece);
    for (int s = 0; s < 2; ++s) {
      const GlueEnd& here = ends[s];
      const GlueEnd& there = ends[1 - s];
      for (int e = 0; e < 2; ++e) {
        if (here.arriving[e] == kNone) continue;
        const std::size_t next = there.departing[e];
        if (next == kNone) {
          throw std::logic_error("interval " + std::to_string(index) +
                                 " is traversed in the same direction from both sides");
        }
        arcs[here.arriving[e]].fuse_next = next;
        arcs[next].fuse_prev = true;
      }
    }
  }
  for (const auto& [index, ends] : glued) ++glued_intervals[ends[0].piece];

  // Rebuild the boundary: maximal fused chains become single arcs.
  std::vector<std::vector<BoundaryCircle>> boundary(pieces);
  auto walk_chain = [&](std::size_t head) {
    std::size_t a = head;
    const Brane brane = arcs[head].brane;
    while (true) {
      arcs[a].visited = true;
      if (arcs[a].brane != brane) {
        throw std::logic_error("glued arcs carry different branes");
      }
      if (arcs[a].fuse_next == kNone) return a;
      a = arcs[a].fuse_next;
    }
  };
  for (std::size_t start = 0; start < arcs.size(); ++start) {
    if (arcs[start].visited || arcs[start].fuse_prev) continue;
    Mixed mixed;
    std::size_t head = start;
    do {
      const std::size_t tail = walk_chain(head);
      mixed.cycle.emplace_back(Arc{arcs[head].brane});
      mixed.cycle.emplace_back(arcs[tail].next_ref);
      head = arcs[tail].next_arc;
    } while (head != start);
    boundary[uf.find(arcs[start].piece)].emplace_back(std::move(mixed));
  }
  for (std::size_t start = 0; start < arcs.size(); ++start) {
    if (arcs[start].visited) continue;
    std::size_t a = start;
    do {
      arcs[a].visited = true;
      if (arcs[a].brane != arcs[start].brane) {
        throw std::logic_error("glued arcs carry different branes");
      }
      a = arcs[a].fuse_next;
    } while (a != start);
    boundary[uf.find(arcs[start].piece)].emplace_back(Window{arcs[start].brane});
  }
  // Closed circles and windows that survive the gluing.
  for (std::size_t p = 0; p < pieces; ++p) {
    const bool from_first = p < first_count;
    for (const auto& circle : piece_of(p).boundary) {
      const bool keep = std::holds_alternative<Window>(circle) ||
                        (from_first && std::holds_alternative<InClosed>(circle)) ||
                        (!from_first && std::holds_alternative<OutClosed>(circle));
      if (keep) boundary[uf.find(p)].push_back(circle);
    }
  }

  std::vector<long> chi(pieces, 0);
  for (std::size_t p = 0; p < pieces; ++p) chi[uf.find(p)] += euler_char(piece_of(p));
  for (const auto& [piece, count] : glued_intervals) chi[uf.find(piece)] -= count;

  Cobordism result{first.source, second.target, {}};
  for (std::size_t p = 0; p < pieces; ++p) {
    if (uf.find(p) != p) continue;
    Component comp;
    comp.boundary = std::move(boundary[p]);
    comp.genus = genus_from_euler(chi[p], comp.boundary.size());
    result.components.push_back(std::move(comp));
  }
  return result;
}

Cobordism tensor(const Cobordism& a, const Cobordism& b) {
  Cobordism out{object_tensor(a.source, b.source), object_tensor(a.target, b.target),
                a.components};
  const auto in_shift = static_cast<Index>(a.source.length());
  const auto out_shift = static_cast<Index>(a.target.length());
  for (Component comp : b.components) {
    for (auto& circle : comp.boundary) {
      if (auto* in = std::get_if<InClosed>(&circle)) in->index += in_shift;
      if (auto* out_c = std::get_if<OutClosed>(&circle)) out_c->index += out_shift;
      if (auto* mixed = std::get_if<Mixed>(&circle)) {
        for (auto& e : mixed->cycle) {
          if (auto* ref = std::get_if<IntervalRef>(&e)) {
            ref->index += ref->side == Side::Incoming ? in_shift : out_shift;
          }
        }
      }
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

Cobordism swap_cobordism(const GeneralObject& a, const GeneralObject& b) {
  Cobordism c{object_tensor(a, b), object_tensor(b, a), {}};
  const auto la = static_cast<Index>(a.length());
  const auto lb = static_cast<Index>(b.length());
  for (Index i = 1; i <= la; ++i) c.components.push_back(cylinder(c.source, i, lb + i));
  for (Index j = 1; j <= lb; ++j) c.components.push_back(cylinder(c.source, la + j, j));
  return c;
}

Cobordism realize(const GeneralObject& obj) {
  const Permutation& sigma = obj.sigma();
  const BraneSet& branes = obj.branes();
  Component comp;
  for (Index i : obj.circle_indices()) comp.boundary.push_back(InClosed{i});
  for (const auto& cycle : sigma.cycles()) {
    Mixed mixed;
    for (Index i : cycle) {
      const Index next = sigma(i);
      const Brane right = obj.interval(i).right;
      const Brane left = obj.interval(next).left;
      if (right != left) {
        std::ostringstream os;
        os << "cycle (";
        for (std::size_t k = 0; k < cycle.size(); ++k) os << (k ? " " : "") << cycle[k];
        os << ") is not brane-coherent: interval " << i << " ends on brane "
           << branes.name(right) << " but interval " << next << " starts on brane "
           << branes.name(left);
        throw InfeasibleError(os.str());
      }
      mixed.cycle.emplace_back(incoming(i));
      mixed.cycle.emplace_back(Arc{right});
    }
    comp.boundary.emplace_back(std::move(mixed));
  }
  comp.boundary.push_back(OutClosed{1});
  return Cobordism{obj, GeneralObject::circle(branes), {std::move(comp)}};
}

Permutation pullback_with(const Cobordism& c, const Cobordism& realizer) {
  if (!is_single_circle(realizer.target)) {
    throw PreconditionError("a realizer must end at (0)");
  }
  if (realizer.source.entries() != c.target.entries() ||
      !(realizer.source.branes() == c.target.branes())) {
    throw PreconditionError("realizer source " + realizer.source.to_string() +
                            " does not match the cobordism target " + c.target.to_string());
  }
  Cobordism retargeted = c;
  retargeted.target = realizer.source;
  return boundary_permutation(compose(realizer, retargeted));
}

Permutation pullback(const Cobordism& c, const Permutation& tau) {
  return pullback_with(c, realize(c.target.with_sigma(tau)));
}

bool is_morphism(const Cobordism& c, const GeneralObject& src, const GeneralObject& tgt) {
  if (src.entries() != c.source.entries() || tgt.entries() != c.target.entries() ||
      !(src.branes() == c.source.branes()) || !(tgt.branes() == c.target.branes())) {
    throw PreconditionError("objects do not match the cobordism's source and target");
  }
  try {
    return pullback(c, tgt.sigma()) == src.sigma();
  } catch (const InfeasibleError&) {
    return false;
  }
}

namespace {

Cobordism circle_endomorphism(const BraneSet& branes, std::uint32_t genus,
                              const std::vector<Brane>& windows) {
  Component comp;
  comp.genus = genus;
  comp.boundary.push_back(InClosed{1});
  comp.boundary.push_back(OutClosed{1});
  for (Brane b : windows) comp.boundary.push_back(Window{b});
  GeneralObject circle = GeneralObject::circle(branes);
  return Cobordism{circle, circle, {std::move(comp)}};
}

}  // namespace

Cobordism make_T(const BraneSet& branes) {
  return circle_endomorphism(branes, 1, branes.all());
}

Cobordism make_handle(const BraneSet& branes) { return circle_endomorphism(branes, 1, {}); }

Cobordism make_window(const BraneSet& branes, Brane b) {
  if (!branes.contains(b)) throw PreconditionError("window brane outside the brane set");
  return circle_endomorphism(branes, 0, {b});
}

Cobordism stabilize(const Cobordism& c, unsigned times) {
  if (!is_single_circle(c.target)) {
    throw PreconditionError("stabilize needs a cobordism to (0), target is " +
                            c.target.to_string());
  }
  const Cobordism t = make_T(c.target.branes());
  Cobordism out = c;
  for (unsigned k = 0; k < times; ++k) out = compose(t, out);
  return out;
}

Cobordism empty_cobordism(const BraneSet& branes) {
  GeneralObject e = GeneralObject::empty(branes);
  return Cobordism{e, e, {}};
}

}  // namespace occat
