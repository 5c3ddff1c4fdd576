#include "occat/classify.hpp"

#include <algorithm>

#include "occat/calculus.hpp"
#include "occat/error.hpp"

namespace occat {

namespace {

struct GridPoint {
  unsigned genus = 0;
  BraneCounts windows;
};

std::size_t grid_size(std::size_t brane_count, unsigned max_genus, unsigned max_windows) {
  std::size_t n = max_genus + 1;
  for (std::size_t b = 0; b < brane_count; ++b) n *= max_windows + 1;
  return n;
}

// Flat index -> (g, w) with the genus as the slowest digit.
GridPoint decode(std::size_t flat, std::size_t brane_count, unsigned max_windows) {
  GridPoint pt;
  pt.windows.assign(brane_count, 0);
  for (std::size_t b = brane_count; b-- > 0;) {
    pt.windows[b] = flat % (max_windows + 1);
    flat /= max_windows + 1;
  }
  pt.genus = static_cast<unsigned>(flat);
  return pt;
}

}  // namespace

std::vector<MixedEntry> least_rotation(const std::vector<MixedEntry>& cycle) {
  std::vector<MixedEntry> best = cycle;
  std::vector<MixedEntry> rotated = cycle;
  for (std::size_t r = 1; r < cycle.size(); ++r) {
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    if (rotated < best) best = rotated;
  }
  return best;
}

Cobordism canonical(const Cobordism& c) {
  Cobordism out = c;
  for (auto& comp : out.components) {
    for (auto& circle : comp.boundary) {
      if (auto* mixed = std::get_if<Mixed>(&circle)) mixed->cycle = least_rotation(mixed->cycle);
    }
    std::sort(comp.boundary.begin(), comp.boundary.end());
  }
  std::sort(out.components.begin(), out.components.end());
  return out;
}

CanonicalForm canonicalize(const Cobordism& c) {
  CanonicalForm form{canonical(c), {}};
  form.summary = invariant_summary(form.cobordism);
  return form;
}

bool is_isomorphic(const Cobordism& a, const Cobordism& b) {
  if (!(a.source == b.source) || !(a.target == b.target)) {
    throw PreconditionError("isomorphism needs equal sources and targets");
  }
  return canonical(a) == canonical(b);
}

std::vector<CanonicalForm> canonicalize_all(const std::vector<Cobordism>& cs) {
  std::vector<CanonicalForm> out(cs.size());
  const auto n = static_cast<long>(cs.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) out[i] = canonicalize(cs[i]);
  return out;
}

Cobordism class_representative(const GeneralObject& obj, unsigned genus,
                               const BraneCounts& windows) {
  const BraneSet& branes = obj.branes();
  if (windows.size() != branes.size()) {
    throw PreconditionError("window vector length differs from the brane count");
  }
  const auto min_w = static_cast<unsigned>(*std::min_element(windows.begin(), windows.end()));
  const unsigned common = std::min(genus, min_w);
  Cobordism c = stabilize(realize(obj), common);
  const Cobordism handle = make_handle(branes);
  for (unsigned k = common; k < genus; ++k) c = compose(handle, c);
  for (Brane b : branes.all()) {
    const Cobordism window = make_window(branes, b);
    for (std::size_t k = common; k < windows[b.id]; ++k) c = compose(window, c);
  }
  return c;
}

std::vector<CanonicalForm> enumerate_classes(const GeneralObject& obj, unsigned max_genus,
                                             unsigned max_windows) {
  realize(obj);  // surfaces infeasibility before the parallel region
  const std::size_t nb = obj.branes().size();
  std::vector<CanonicalForm> out(grid_size(nb, max_genus, max_windows));
  const auto n = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    GridPoint pt = decode(static_cast<std::size_t>(i), nb, max_windows);
    out[i] = canonicalize(class_representative(obj, pt.genus, pt.windows));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StrataRow> strata_table(const GeneralObject& obj, unsigned max_genus,
                                    unsigned max_windows) {
  std::vector<StrataRow> rows;
  for (const auto& form : enumerate_classes(obj, max_genus, max_windows)) {
    const ComponentSummary& s = form.summary.components.at(0);
    rows.push_back({s.genus, s.windows, s.fixed_boundary, in_b_subcategory(form.cobordism)});
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

namespace reference {

std::vector<CanonicalForm> canonicalize_all(const std::vector<Cobordism>& cs) {
  std::vector<CanonicalForm> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(canonicalize(c));
  return out;
}

std::vector<CanonicalForm> enumerate_classes(const GeneralObject& obj, unsigned max_genus,
                                             unsigned max_windows) {
  const std::size_t nb = obj.branes().size();
  std::vector<CanonicalForm> out;
  for (std::size_t i = 0; i < grid_size(nb, max_genus, max_windows); ++i) {
    GridPoint pt = decode(i, nb, max_windows);
    out.push_back(canonicalize(class_representative(obj, pt.genus, pt.windows)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace reference

}  // namespace occat
