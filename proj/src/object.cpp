#include "occat/object.hpp"

#include <sstream>

#include "occat/error.hpp"

namespace occat {

GeneralObject::GeneralObject() : GeneralObject(BraneSet(), {}) {}

GeneralObject::GeneralObject(BraneSet branes, std::vector<Entry> entries)
    : branes_(std::move(branes)), entries_(std::move(entries)) {
  sigma_ = Permutation::identity(interval_indices());
  for (const auto& e : entries_) {
    if (const auto* iv = std::get_if<Interval>(&e)) {
      if (!branes_.contains(iv->left) || !branes_.contains(iv->right)) {
        throw PreconditionError("interval endpoint brane outside the brane set");
      }
    }
  }
}

GeneralObject::GeneralObject(BraneSet branes, std::vector<Entry> entries,
                             Permutation sigma)
    : GeneralObject(std::move(branes), std::move(entries)) {
  if (sigma.domain() != sigma_.domain()) {
    throw PreconditionError("sigma " + sigma.to_string() +
                            " is not a permutation of the interval positions");
  }
  sigma_ = std::move(sigma);
}

GeneralObject GeneralObject::circle(BraneSet branes) {
  return GeneralObject(std::move(branes), {Circle{}});
}

GeneralObject GeneralObject::empty(BraneSet branes) {
  return GeneralObject(std::move(branes), {});
}

GeneralObject GeneralObject::from_bits(const std::vector<int>& bits, BraneSet branes) {
  std::vector<Entry> entries;
  for (int b : bits) {
    if (b == 0) {
      entries.emplace_back(Circle{});
    } else {
      entries.emplace_back(Interval{});
    }
  }
  return GeneralObject(std::move(branes), std::move(entries));
}

bool GeneralObject::is_circle(Index i) const {
  return i >= 1 && i <= entries_.size() &&
         std::holds_alternative<Circle>(entries_[i - 1]);
}

bool GeneralObject::is_interval(Index i) const {
  return i >= 1 && i <= entries_.size() &&
         std::holds_alternative<Interval>(entries_[i - 1]);
}

const Interval& GeneralObject::interval(Index i) const {
  if (!is_interval(i)) {
    throw PreconditionError("position " + std::to_string(i) + " is not an interval");
  }
  return std::get<Interval>(entries_[i - 1]);
}

std::vector<Index> GeneralObject::interval_indices() const {
  std::vector<Index> out;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (std::holds_alternative<Interval>(entries_[k])) {
      out.push_back(static_cast<Index>(k + 1));
    }
  }
  return out;
}

std::size_t GeneralObject::alpha() const { return interval_indices().size(); }

std::vector<Index> GeneralObject::circle_indices() const {
  std::vector<Index> out;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (std::holds_alternative<Circle>(entries_[k])) {
      out.push_back(static_cast<Index>(k + 1));
    }
  }
  return out;
}

std::size_t GeneralObject::circle_count() const { return circle_indices().size(); }

GeneralObject GeneralObject::with_sigma(Permutation sigma) const {
  return GeneralObject(branes_, entries_, std::move(sigma));
}

std::string GeneralObject::to_string() const {
  std::ostringstream os;
  bool labeled = !branes_.is_default_single();
  os << '(';
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) os << ',';
    if (const auto* iv = std::get_if<Interval>(&entries_[k])) {
      os << '1';
      if (labeled) {
        os << '[' << branes_.name(iv->left) << ',' << branes_.name(iv->right) << ']';
      }
    } else {
      os << '0';
    }
  }
  os << ") sigma=" << sigma_.to_string();
  return os.str();
}

std::size_t c_number(const GeneralObject& obj) {
  return obj.circle_count() + obj.sigma().cycle_count() + 1;
}

GeneralObject object_tensor(const GeneralObject& a, const GeneralObject& b) {
  if (!(a.branes() == b.branes())) {
    throw PreconditionError("cannot tensor objects over different brane sets");
  }
  std::vector<Entry> entries = a.entries();
  entries.insert(entries.end(), b.entries().begin(), b.entries().end());
  const auto shift = static_cast<Index>(a.length());

  std::vector<Index> domain;
  std::vector<Index> images;
  for (Index i : a.sigma().domain()) {
    domain.push_back(i);
    images.push_back(a.sigma()(i));
  }
  for (Index i : b.sigma().domain()) {
    domain.push_back(i + shift);
    images.push_back(b.sigma()(i) + shift);
  }
  return GeneralObject(a.branes(), std::move(entries),
                       Permutation::from_images(std::move(domain), std::move(images)));
}

bool is_brane_coherent(const GeneralObject& obj) {
  for (Index i : obj.sigma().domain()) {
    if (obj.interval(i).right != obj.interval(obj.sigma()(i)).left) return false;
  }
  return true;
}

}  // namespace occat
