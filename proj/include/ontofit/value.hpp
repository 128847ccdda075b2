#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ontofit {

// Handle into a process-wide intern table. Equal structure means equal handle.
class Value {
 public:
  enum class Kind : std::uint8_t { Atom, Tuple, Clone, Tagged };

  Value() = default;

  static Value atom(std::string_view name);
  static Value tuple(std::span<const Value> parts);
  static Value tuple(std::initializer_list<Value> parts) {
    return tuple(std::span<const Value>(parts.begin(), parts.size()));
  }
  // index distinguishes several clones of the same original
  static Value clone(Value original, std::uint32_t index);
  // disjoint-union copy of a value from operand `source`
  static Value tagged(Value original, std::uint32_t source);

  Kind kind() const;
  const std::string& name() const;          // Atom only
  const std::vector<Value>& parts() const;  // Tuple only
  Value original() const;                   // Clone / Tagged
  std::uint32_t index() const;              // Clone / Tagged

  std::string to_string() const;
  std::uint32_t id() const { return id_; }

  friend bool operator==(Value a, Value b) { return a.id_ == b.id_; }
  friend bool operator!=(Value a, Value b) { return a.id_ != b.id_; }

 private:
  explicit Value(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

// Structural order: kind, then names / components lexicographically.
bool value_less(Value a, Value b);

std::vector<Value> atoms(std::initializer_list<std::string_view> names);

}  // namespace ontofit

template <>
struct std::hash<ontofit::Value> {
  std::size_t operator()(ontofit::Value v) const noexcept { return std::hash<std::uint32_t>()(v.id()); }
};
