#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>

namespace uamasp {

/// A ground constant: an integer or a symbolic constant. Integers order
/// before symbols; symbols order lexicographically.
class Value {
 public:
  Value() : data_(std::int64_t{0}) {}
  static Value integer(std::int64_t v) { return Value(v); }
  static Value symbol(std::string name) { return Value(std::move(name)); }

  bool is_integer() const { return std::holds_alternative<std::int64_t>(data_); }
  bool is_symbol() const { return std::holds_alternative<std::string>(data_); }
  std::int64_t as_integer() const { return std::get<std::int64_t>(data_); }
  const std::string& as_symbol() const { return std::get<std::string>(data_); }

  std::string to_string() const;

  friend bool operator==(const Value&, const Value&) = default;
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  explicit Value(std::int64_t v) : data_(v) {}
  explicit Value(std::string s) : data_(std::move(s)) {}
  std::variant<std::int64_t, std::string> data_;
};

}  // namespace uamasp

template <>
struct std::hash<uamasp::Value> {
  std::size_t operator()(const uamasp::Value& v) const noexcept {
    if (v.is_integer()) return std::hash<std::int64_t>{}(v.as_integer());
    return std::hash<std::string>{}(v.as_symbol()) ^ 0x9e3779b97f4a7c15ULL;
  }
};
