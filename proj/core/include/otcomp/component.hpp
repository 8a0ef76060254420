#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "otcomp/bounds.hpp"
#include "otcomp/value.hpp"

namespace otcomp {

using Json = nlohmann::ordered_json;

struct MethodSig {
  std::string name;
  std::vector<std::string> arg_sorts;
};

struct AttributeSig {
  std::string name;
  std::vector<std::string> arg_sorts;
  std::string result_sort;
};

/// One attribute application, without the state argument.
struct Observation {
  std::string attribute;
  std::vector<Datum> args;
};

/// An executable collaborative object.
///
/// The virtual hooks are the raw Do / Poss / IT / attribute functions. They
/// are only ever called with declared, non-nop methods; the free functions
/// in kernel.hpp add the nop rules and the declaration checks, and every
/// caller (including composite components reaching into their children)
/// goes through those.
///
/// Literal codecs map states and methods to the JSON forms used by scenario
/// files and reports. Decoders throw Error(kInvalidLiteral).
class Component {
 public:
  explicit Component(std::string name) : name_(std::move(name)) {}
  virtual ~Component() = default;

  Component(const Component&) = delete;
  Component& operator=(const Component&) = delete;

  /// Composition expression that builds this component.
  const std::string& name() const noexcept { return name_; }

  /// Declared method constructors; `nop` is implicit and never listed.
  const std::vector<MethodSig>& methods() const noexcept { return methods_; }
  const std::vector<AttributeSig>& attributes() const noexcept { return attributes_; }

  bool declares_method(std::string_view ctor) const;
  bool declares_attribute(std::string_view name) const;

  virtual State initial_state() const = 0;

  virtual State do_method(const Method& m, const State& st) const = 0;
  virtual bool poss(const Method& m, const State& st) const = 0;
  virtual Method it(const Method& m1, const Method& m2) const = 0;
  virtual Datum attribute(const std::string& name, const std::vector<Datum>& args,
                          const State& st) const = 0;

  /// Bounded method universe; `nop` comes first.
  virtual std::vector<Method> enum_methods(const Bounds& b) const = 0;
  /// Bounded state universe; always contains initial_state().
  virtual std::vector<State> enum_states(const Bounds& b) const = 0;
  virtual std::vector<Observation> enum_observations(const Bounds& b) const = 0;

  virtual Json encode_state(const State& st) const = 0;
  virtual State decode_state(const Json& j) const = 0;
  virtual Json encode_method(const Method& m) const = 0;
  virtual Method decode_method(const std::string& ctor, const Json& args,
                               std::optional<SiteId> site) const = 0;

 protected:
  void declare_method(MethodSig sig) { methods_.push_back(std::move(sig)); }
  void declare_attribute(AttributeSig sig) { attributes_.push_back(std::move(sig)); }

 private:
  std::string name_;
  std::vector<MethodSig> methods_;
  std::vector<AttributeSig> attributes_;
};

using ComponentPtr = std::shared_ptr<const Component>;

/// Decodes `{"ctor": ..., "args": [...]}` (args optional) against `c`.
Method decode_method(const Component& c, const Json& j, std::optional<SiteId> site = std::nullopt);

}  // namespace otcomp
