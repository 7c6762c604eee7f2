#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace germinv {

/// An ordered, immutable list of variable names. Rings are shared by
/// pointer; two rings are compatible iff their name lists are identical.
class Ring {
 public:
  static std::shared_ptr<const Ring> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::size_t require_index(const std::string& name) const;

  bool same_as(const Ring& other) const { return names_ == other.names_; }

 private:
  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Canonical rings used across the engine.
namespace rings {
RingPtr source();         // x, y
RingPtr source_param();   // x, y, t
RingPtr source_pair();    // x, y, x', y'
RingPtr target();         // X, Y, Z
RingPtr graph();          // x, y, X, Y, Z
RingPtr plane();          // X, Y
}  // namespace rings

}  // namespace germinv
