#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace otcomp {

using SiteId = std::uint32_t;

class Datum;

/// Shape of a replica state. Sets are kept sorted and duplicate-free, so
/// structural equality on states is canonical.
enum class StateKind : std::uint8_t { kCell, kSet, kSeq, kProduct, kOpaque };

/// Immutable replica state. Copies share the underlying node.
class State {
 public:
  static State cell(Datum value);
  static State opaque(Datum value);
  static State set(std::vector<State> items);
  static State seq(std::vector<State> items);
  static State product(std::vector<State> items);

  StateKind kind() const;
  /// Payload of a Cell or Opaque state.
  const Datum& value() const;
  /// Children of a Set, Seq or Product state.
  const std::vector<State>& items() const;

  bool contains(const State& element) const;

  friend bool operator==(const State& a, const State& b);
  friend std::strong_ordering operator<=>(const State& a, const State& b);

 private:
  struct Node;
  explicit State(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// A method value: constructor name, data arguments and an optional issuing
/// site. `nop` is the constructor "nop" with no arguments.
class Method {
 public:
  explicit Method(std::string ctor, std::vector<Datum> args = {},
                  std::optional<SiteId> site = std::nullopt);

  static Method nop();

  bool is_nop() const;
  const std::string& ctor() const;
  const std::vector<Datum>& args() const;
  std::optional<SiteId> site() const;

  Method with_ctor(std::string ctor) const;
  Method with_args(std::vector<Datum> args) const;

  friend bool operator==(const Method& a, const Method& b);
  friend std::strong_ordering operator<=>(const Method& a, const Method& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

using MethodSeq = std::vector<Method>;

struct Bottom {
  friend constexpr auto operator<=>(Bottom, Bottom) = default;
};

struct Char {
  char value;
  friend constexpr auto operator<=>(Char, Char) = default;
};

struct Nat {
  std::int64_t value;
  friend constexpr auto operator<=>(Nat, Nat) = default;
};

enum class Color : std::uint8_t { kRed, kGreen, kBlue };

struct Symbol {
  std::string name;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Data value carried by methods and returned by attributes. Elements of a
/// composition pattern are child states, and Update methods carry a child
/// method, so both may appear as data.
class Datum {
 public:
  using Variant = std::variant<Bottom, bool, Char, Nat, Color, Symbol, State, Method>;

  Datum() = default;
  Datum(Bottom v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Datum(bool v) : v_(v) {}    // NOLINT(google-explicit-constructor)
  Datum(Char v) : v_(v) {}    // NOLINT(google-explicit-constructor)
  Datum(Nat v) : v_(v) {}     // NOLINT(google-explicit-constructor)
  Datum(Color v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  Datum(Symbol v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Datum(State v) : v_(std::move(v)) {}   // NOLINT(google-explicit-constructor)
  Datum(Method v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  const Variant& variant() const { return v_; }

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(v_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(v_);
  }

  bool is_bottom() const { return is<Bottom>(); }

  friend bool operator==(const Datum& a, const Datum& b);
  friend std::strong_ordering operator<=>(const Datum& a, const Datum& b);

 private:
  Variant v_;
};

std::string to_string(Color c);
std::optional<Color> parse_color(std::string_view name);
std::string to_string(const Datum& d);
std::string to_string(const State& s);
std::string to_string(const Method& m);
std::string to_string(const MethodSeq& seq);

}  // namespace otcomp
