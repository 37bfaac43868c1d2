#include "uamasp/value.hpp"

namespace uamasp {

std::string Value::to_string() const {
  if (is_integer()) return std::to_string(as_integer());
  return as_symbol();
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.is_integer() != b.is_integer()) {
    return a.is_integer() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.is_integer()) return a.as_integer() <=> b.as_integer();
  const int c = a.as_symbol().compare(b.as_symbol());
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace uamasp
