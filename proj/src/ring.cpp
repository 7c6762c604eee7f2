#include "germinv/ring.hpp"

#include <algorithm>
#include <set>

#include "germinv/errors.hpp"
#include "germinv/monomial.hpp"

namespace germinv {

RingPtr Ring::make(std::vector<std::string> names) {
  if (names.size() > Monomial::kMaxVars) {
    throw InvalidArgument("ring has more than " +
                          std::to_string(Monomial::kMaxVars) + " variables");
  }
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) throw InvalidArgument("duplicate variable name");
  return RingPtr(new Ring(std::move(names)));
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Ring::require_index(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw RingMismatch("variable '" + name + "' is not in the ring");
  return *i;
}

namespace rings {

RingPtr source() {
  static const RingPtr r = Ring::make({"x", "y"});
  return r;
}
RingPtr source_param() {
  static const RingPtr r = Ring::make({"x", "y", "t"});
  return r;
}
RingPtr source_pair() {
  static const RingPtr r = Ring::make({"x", "y", "x'", "y'"});
  return r;
}
RingPtr target() {
  static const RingPtr r = Ring::make({"X", "Y", "Z"});
  return r;
}
RingPtr graph() {
  static const RingPtr r = Ring::make({"x", "y", "X", "Y", "Z"});
  return r;
}
RingPtr plane() {
  static const RingPtr r = Ring::make({"X", "Y"});
  return r;
}

}  // namespace rings
}  // namespace germinv
