#include "decayideal/ring.hpp"

#include <unordered_map>

#include "decayideal/errors.hpp"

namespace decayideal {

struct Ring::Table {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
};

Ring::Ring() : table_(std::make_shared<const Table>()) {}

Ring::Ring(std::vector<std::string> names) {
  auto table = std::make_shared<Table>();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) {
      throw InvalidArgument("variable names must be nonempty");
    }
    if (!table->index.emplace(names[i], i).second) {
      throw InvalidArgument("duplicate variable name '" + names[i] + "'");
    }
  }
  table->names = std::move(names);
  table_ = std::move(table);
}

std::size_t Ring::size() const noexcept { return table_->names.size(); }

const std::string& Ring::name(std::size_t index) const {
  return table_->names.at(index);
}

const std::vector<std::string>& Ring::names() const noexcept {
  return table_->names;
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  auto it = table_->index.find(std::string(name));
  if (it == table_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Ring::require(std::string_view name) const {
  if (auto idx = index_of(name)) return *idx;
  throw InvalidArgument("unknown variable '" + std::string(name) + "'");
}

bool operator==(const Ring& lhs, const Ring& rhs) noexcept {
  return lhs.table_ == rhs.table_ || lhs.table_->names == rhs.table_->names;
}

void require_same_ring(const Ring& lhs, const Ring& rhs) {
  if (!(lhs == rhs)) throw RingMismatch("operands belong to different rings");
}

}  // namespace decayideal
