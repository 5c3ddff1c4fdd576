#include "occat/surface.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "occat/error.hpp"

namespace occat {

namespace {

const char* side_name(Side s) { return s == Side::Incoming ? "in" : "out"; }

class Checker {
 public:
  explicit Checker(const Cobordism& c) : c_(c) {}

  std::vector<Violation> run() {
    if (!(c_.source.branes() == c_.target.branes())) {
      add({}, {}, "brane set", "source and target are over different brane sets");
      return std::move(out_);
    }
    for (std::size_t ci = 0; ci < c_.components.size(); ++ci) {
      const auto& comp = c_.components[ci];
      for (std::size_t k = 0; k < comp.boundary.size(); ++k) {
        std::visit([&](const auto& circle) { check(ci, k, circle); }, comp.boundary[k]);
      }
    }
    check_coverage(c_.source, in_circles_, "source circle", "in");
    check_coverage(c_.target, out_circles_, "target circle", "out");
    check_interval_coverage(c_.source, in_intervals_, "source");
    check_interval_coverage(c_.target, out_intervals_, "target");
    return std::move(out_);
  }

 private:
  struct Use {
    std::size_t component;
    std::size_t circle;
  };

  void add(std::optional<std::size_t> comp, std::optional<std::size_t> circle,
           std::string rule, std::string message) {
    out_.push_back({comp, circle, std::move(rule), std::move(message)});
  }

  void check(std::size_t ci, std::size_t k, const InClosed& in) {
    if (!c_.source.is_circle(in.index)) {
      add(ci, k, "bad reference",
          "in " + std::to_string(in.index) + " is not a circle of the source");
      return;
    }
    in_circles_[in.index].push_back({ci, k});
  }

  void check(std::size_t ci, std::size_t k, const OutClosed& out) {
    if (!c_.target.is_circle(out.index)) {
      add(ci, k, "bad reference",
          "out " + std::to_string(out.index) + " is not a circle of the target");
      return;
    }
    out_circles_[out.index].push_back({ci, k});
  }

  void check(std::size_t ci, std::size_t k, const Window& w) {
    if (!c_.source.branes().contains(w.brane)) {
      add(ci, k, "unknown brane", "window brane is outside the brane set");
    }
  }

  void check(std::size_t ci, std::size_t k, const Mixed& m) {
    const auto& cyc = m.cycle;
    const std::size_t n = cyc.size();
    if (n < 2 || n % 2 != 0) {
      add(ci, k, "alternation", "mixed cycle must have even length >= 2");
      return;
    }
    for (std::size_t p = 0; p < n; ++p) {
      if (cyc[p].index() == cyc[(p + 1) % n].index()) {
        add(ci, k, "alternation",
            "mixed cycle entries must alternate intervals and arcs");
        return;
      }
    }
    const BraneSet& branes = c_.source.branes();
    for (std::size_t p = 0; p < n; ++p) {
      if (const auto* arc = std::get_if<Arc>(&cyc[p])) {
        if (!branes.contains(arc->brane)) {
          add(ci, k, "unknown brane", "arc brane is outside the brane set");
          return;
        }
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      const auto* ref = std::get_if<IntervalRef>(&cyc[p]);
      if (!ref) continue;
      const GeneralObject& obj = ref->side == Side::Incoming ? c_.source : c_.target;
      std::string label = std::string(side_name(ref->side)) + " " + std::to_string(ref->index);
      if (!obj.is_interval(ref->index)) {
        add(ci, k, "bad reference", label + " is not an interval of the " +
                                        (ref->side == Side::Incoming ? "source" : "target"));
        continue;
      }
      auto& uses = ref->side == Side::Incoming ? in_intervals_ : out_intervals_;
      uses[ref->index].push_back({ci, k});
      if (ref->reversed != default_reversed(ref->side)) {
        add(ci, k, "orientation",
            label + " is traversed against the orientation its side induces");
      }
      const Interval& iv = obj.interval(ref->index);
      Brane first = ref->reversed ? iv.right : iv.left;
      Brane second = ref->reversed ? iv.left : iv.right;
      Brane before = std::get<Arc>(cyc[(p + n - 1) % n]).brane;
      Brane after = std::get<Arc>(cyc[(p + 1) % n]).brane;
      if (before != first || after != second) {
        add(ci, k, "arc brane",
            "arcs around " + label + " are labeled " + branes.name(before) + "/" +
                branes.name(after) + " but its endpoints are met as " +
                branes.name(first) + "/" + branes.name(second));
      }
    }
  }

  void check_coverage(const GeneralObject& obj, const std::map<Index, std::vector<Use>>& uses,
                      const std::string& what, const std::string& keyword) {
    for (Index i : obj.circle_indices()) {
      auto it = uses.find(i);
      if (it == uses.end()) {
        add({}, {}, "missing circle", what + " " + std::to_string(i) + " (" + keyword +
                                          " " + std::to_string(i) + ") is not used");
      } else if (it->second.size() > 1) {
        add(it->second[1].component, it->second[1].circle, "duplicate circle use",
            what + " " + std::to_string(i) + " is used more than once");
      }
    }
  }

  void check_interval_coverage(const GeneralObject& obj,
                               const std::map<Index, std::vector<Use>>& uses,
                               const std::string& what) {
    for (Index i : obj.interval_indices()) {
      auto it = uses.find(i);
      if (it == uses.end()) {
        add({}, {}, "missing interval",
            what + " interval " + std::to_string(i) + " is not used");
      } else if (it->second.size() > 1) {
        add(it->second[1].component, it->second[1].circle, "duplicate interval use",
            what + " interval " + std::to_string(i) + " is used more than once");
      }
    }
  }

  const Cobordism& c_;
  std::vector<Violation> out_;
  std::map<Index, std::vector<Use>> in_circles_, out_circles_, in_intervals_, out_intervals_;
};

bool is_single_circle(const GeneralObject& obj) {
  return obj.length() == 1 && obj.is_circle(1);
}

}  // namespace

std::string to_string(const Violation& v) {
  std::ostringstream os;
  if (v.component) {
    os << "component " << (*v.component + 1);
    if (v.circle) os << ", boundary line " << (*v.circle + 1);
    os << ": ";
  }
  os << v.rule << ": " << v.message;
  return os.str();
}

std::vector<Violation> validate(const Cobordism& c) { return Checker(c).run(); }

long euler_char(const Component& comp) {
  return 2 - 2 * static_cast<long>(comp.genus) - static_cast<long>(comp.boundary.size());
}

long euler_char_total(const Cobordism& c) {
  long chi = 0;
  for (const auto& comp : c.components) chi += euler_char(comp);
  return chi;
}

std::uint32_t genus_from_euler(long chi, std::size_t boundary_circles) {
  long twice = 2 - chi - static_cast<long>(boundary_circles);
  if (twice < 0 || twice % 2 != 0) {
    throw std::logic_error("Euler characteristic " + std::to_string(chi) + " with " +
                           std::to_string(boundary_circles) +
                           " boundary circles gives no integral genus");
  }
  return static_cast<std::uint32_t>(twice / 2);
}

BraneCounts window_vector(const Component& comp, std::size_t brane_count) {
  BraneCounts w(brane_count, 0);
  for (const auto& circle : comp.boundary) {
    if (const auto* win = std::get_if<Window>(&circle)) ++w.at(win->brane.id);
  }
  return w;
}

BraneCounts window_vector(const Cobordism& c) {
  const std::size_t nb = c.source.branes().size();
  BraneCounts w(nb, 0);
  for (const auto& comp : c.components) {
    BraneCounts part = window_vector(comp, nb);
    for (std::size_t b = 0; b < nb; ++b) w[b] += part[b];
  }
  return w;
}

Permutation boundary_permutation(const Cobordism& c) {
  if (!is_single_circle(c.target)) {
    throw PreconditionError("boundary permutation needs a cobordism to (0), target is " +
                            c.target.to_string());
  }
  std::vector<Index> domain;
  std::vector<Index> images;
  for (const auto& comp : c.components) {
    for (const auto& circle : comp.boundary) {
      const auto* mixed = std::get_if<Mixed>(&circle);
      if (!mixed) continue;
      std::vector<Index> order;
      for (const auto& e : mixed->cycle) {
        if (const auto* ref = std::get_if<IntervalRef>(&e)) order.push_back(ref->index);
      }
      for (std::size_t k = 0; k < order.size(); ++k) {
        domain.push_back(order[k]);
        images.push_back(order[(k + 1) % order.size()]);
      }
    }
  }
  return Permutation::from_images(std::move(domain), std::move(images));
}

bool has_outgoing_boundary(const Component& comp) {
  for (const auto& circle : comp.boundary) {
    if (std::holds_alternative<OutClosed>(circle)) return true;
    if (const auto* mixed = std::get_if<Mixed>(&circle)) {
      for (const auto& e : mixed->cycle) {
        const auto* ref = std::get_if<IntervalRef>(&e);
        if (ref && ref->side == Side::Outgoing) return true;
      }
    }
  }
  return false;
}

bool in_b_subcategory(const Cobordism& c) {
  return std::all_of(c.components.begin(), c.components.end(), has_outgoing_boundary);
}

ComponentSummary summarize(const Component& comp, std::size_t brane_count) {
  ComponentSummary s;
  s.genus = comp.genus;
  s.windows = window_vector(comp, brane_count);
  for (const auto& circle : comp.boundary) {
    switch (circle.index()) {
      case 0: ++s.kinds.in_closed; break;
      case 1: ++s.kinds.out_closed; break;
      case 2: ++s.kinds.windows; break;
      default: ++s.kinds.mixed; break;
    }
  }
  s.euler = euler_char(comp);
  s.fixed_boundary = s.kinds.in_closed + s.kinds.out_closed + s.kinds.mixed;
  s.has_outgoing = has_outgoing_boundary(comp);
  return s;
}

InvariantSummary invariant_summary(const Cobordism& c) {
  const std::size_t nb = c.source.branes().size();
  InvariantSummary out;
  out.total_windows.assign(nb, 0);
  for (const auto& comp : c.components) {
    ComponentSummary s = summarize(comp, nb);
    out.total_genus += s.genus;
    for (std::size_t b = 0; b < nb; ++b) out.total_windows[b] += s.windows[b];
    out.components.push_back(std::move(s));
  }
  std::sort(out.components.begin(), out.components.end());
  out.component_count = out.components.size();
  return out;
}

}  // namespace occat
