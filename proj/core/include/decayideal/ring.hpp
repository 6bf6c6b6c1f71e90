#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace decayideal {

/// Ordered table of distinct variable names. Copies share the same table.
class Ring {
 public:
  /// Empty ring (no variables).
  Ring();
  /// Throws InvalidArgument on empty or duplicate names.
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const noexcept;
  const std::string& name(std::size_t index) const;
  const std::vector<std::string>& names() const noexcept;
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of but throws InvalidArgument for unknown names.
  std::size_t require(std::string_view name) const;

  friend bool operator==(const Ring& lhs, const Ring& rhs) noexcept;

 private:
  struct Table;
  std::shared_ptr<const Table> table_;
};

/// Throws RingMismatch unless both rings are equal.
void require_same_ring(const Ring& lhs, const Ring& rhs);

}  // namespace decayideal
