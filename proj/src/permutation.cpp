#include "occat/permutation.hpp"

#include <algorithm>
#include <sstream>

#include "occat/error.hpp"

namespace occat {

namespace {

void require_sorted_unique(const std::vector<Index>& domain) {
  for (std::size_t k = 1; k < domain.size(); ++k) {
    if (domain[k - 1] == domain[k]) {
      throw PreconditionError("permutation domain has a repeated index " +
                              std::to_string(domain[k]));
    }
  }
}

std::size_t position(const std::vector<Index>& domain, Index i) {
  auto it = std::lower_bound(domain.begin(), domain.end(), i);
  if (it == domain.end() || *it != i) {
    throw PreconditionError("index " + std::to_string(i) +
                            " is outside the permutation domain");
  }
  return static_cast<std::size_t>(it - domain.begin());
}

}  // namespace

Permutation Permutation::identity(std::vector<Index> domain) {
  std::sort(domain.begin(), domain.end());
  require_sorted_unique(domain);
  Permutation p;
  p.image_ = domain;
  p.domain_ = std::move(domain);
  return p;
}

Permutation Permutation::from_cycles(std::vector<Index> domain,
                                     const std::vector<std::vector<Index>>& cycles) {
  Permutation p = identity(std::move(domain));
  std::vector<bool> seen(p.domain_.size(), false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      std::size_t pos = position(p.domain_, cycle[k]);
      if (seen[pos]) {
        throw PreconditionError("index " + std::to_string(cycle[k]) +
                                " appears in more than one cycle position");
      }
      seen[pos] = true;
      p.image_[pos] = cycle[(k + 1) % cycle.size()];
    }
  }
  return p;
}

Permutation Permutation::from_images(std::vector<Index> domain,
                                     std::vector<Index> images) {
  if (domain.size() != images.size()) {
    throw PreconditionError("permutation domain and image sizes differ");
  }
  std::vector<std::size_t> order(domain.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return domain[a] < domain[b]; });
  Permutation p;
  for (std::size_t k : order) {
    p.domain_.push_back(domain[k]);
    p.image_.push_back(images[k]);
  }
  require_sorted_unique(p.domain_);
  std::vector<Index> sorted_images = p.image_;
  std::sort(sorted_images.begin(), sorted_images.end());
  if (sorted_images != p.domain_) {
    throw PreconditionError("mapping is not a bijection of its domain");
  }
  return p;
}

bool Permutation::contains(Index i) const {
  return std::binary_search(domain_.begin(), domain_.end(), i);
}

Index Permutation::operator()(Index i) const { return image_[position(domain_, i)]; }

std::vector<std::vector<Index>> Permutation::cycles() const {
  std::vector<std::vector<Index>> out;
  std::vector<bool> seen(domain_.size(), false);
  for (std::size_t start = 0; start < domain_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Index> cycle;
    std::size_t k = start;
    while (!seen[k]) {
      seen[k] = true;
      cycle.push_back(domain_[k]);
      k = position(domain_, image_[k]);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::size_t Permutation::cycle_count() const { return cycles().size(); }

bool Permutation::is_identity() const { return domain_ == image_; }

Permutation Permutation::inverse() const { return from_images(image_, domain_); }

std::string Permutation::to_string() const {
  if (domain_.empty()) return "id";
  std::ostringstream os;
  for (const auto& cycle : cycles()) {
    os << '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) os << ' ';
      os << cycle[k];
    }
    os << ')';
  }
  return os.str();
}

}  // namespace occat
