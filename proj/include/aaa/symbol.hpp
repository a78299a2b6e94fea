#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace aaa {

/// A generator of the algebra. Names match [A-Za-z_][A-Za-z_0-9]*, which keeps
/// every structural character of the text format out of symbol names.
class Symbol {
 public:
  /// Throws Error(InvalidSymbol) if `name` is not a legal symbol.
  explicit Symbol(std::string name);

  static bool is_valid(std::string_view name);

  const std::string& name() const noexcept { return name_; }

  // std::string ordering is byte-wise (char_traits<char> compares as unsigned).
  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
    const int c = a.name_.compare(b.name_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Symbol& s) { return os << s.name_; }

 private:
  std::string name_;
};

}  // namespace aaa
