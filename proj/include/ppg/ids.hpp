#pragma once

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <utility>

namespace ppg {

/// Textual identifier tagged by what it names, so edge and vertex ids
/// cannot be mixed up at call sites.
template <class Tag>
class Id {
 public:
  Id() = default;
  explicit Id(std::string value) : value_(std::move(value)) {}
  explicit Id(const char* value) : value_(value) {}

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  friend auto operator<=>(const Id&, const Id&) = default;
  friend bool operator==(const Id&, const Id&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Id& id) {
    return os << id.value_;
  }

 private:
  std::string value_;
};

struct EdgeTag {};
struct VertexTag {};

using EdgeId = Id<EdgeTag>;
using VertexId = Id<VertexTag>;

}  // namespace ppg

template <class Tag>
struct std::hash<ppg::Id<Tag>> {
  std::size_t operator()(const ppg::Id<Tag>& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
