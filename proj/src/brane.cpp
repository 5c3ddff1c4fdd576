#include "occat/brane.hpp"

#include <algorithm>
#include <sstream>

#include "occat/error.hpp"

namespace occat {

BraneSet::BraneSet()
    : names_(std::make_shared<const std::vector<std::string>>(
          std::vector<std::string>{"*"})) {}

BraneSet::BraneSet(std::vector<std::string> names) {
  if (names.empty()) throw PreconditionError("brane set must be nonempty");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw PreconditionError("brane names must be nonempty");
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) {
        throw PreconditionError("duplicate brane '" + names[i] + "'");
      }
    }
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

const std::string& BraneSet::name(Brane b) const {
  if (!contains(b)) {
    throw PreconditionError("brane id " + std::to_string(b.id) +
                            " is not in the brane set");
  }
  return (*names_)[b.id];
}

std::optional<Brane> BraneSet::find(std::string_view name) const {
  auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) return std::nullopt;
  return Brane{static_cast<std::uint32_t>(it - names_->begin())};
}

std::vector<Brane> BraneSet::all() const {
  std::vector<Brane> out;
  for (std::uint32_t i = 0; i < names_->size(); ++i) out.push_back(Brane{i});
  return out;
}

bool BraneSet::is_default_single() const {
  return names_->size() == 1 && (*names_)[0] == "*";
}

std::string format_counts(const BraneSet& branes, const BraneCounts& counts) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) os << ',';
    os << branes.name(Brane{static_cast<std::uint32_t>(i)}) << ':' << counts[i];
  }
  os << '}';
  return os.str();
}

}  // namespace occat
