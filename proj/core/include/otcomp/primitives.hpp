#pragma once

#include <functional>
#include <string>
#include <vector>

#include "otcomp/component.hpp"

namespace otcomp {

/// Description of a memory-cell component: one method put(v), one attribute
/// get, and transformation IT(put(v1), put(v2)) = put(merge(v1, v2)).
/// `merge` must be commutative, associative and idempotent on `domain`.
struct CellComponentSpec {
  std::string name;
  std::string value_sort;
  std::string put_name;
  std::string get_name;
  std::function<Datum(const Datum&, const Datum&)> merge;
  std::function<std::vector<Datum>(const Bounds&)> domain;
  std::function<Json(const Datum&)> encode_value;
  std::function<Datum(const Json&)> decode_value;
};

class CellComponent final : public Component {
 public:
  explicit CellComponent(CellComponentSpec spec);

  const CellComponentSpec& spec() const noexcept { return spec_; }
  Method put(Datum v) const { return Method(spec_.put_name, {std::move(v)}); }

  State initial_state() const override;
  State do_method(const Method& m, const State& st) const override;
  bool poss(const Method& m, const State& st) const override;
  Method it(const Method& m1, const Method& m2) const override;
  Datum attribute(const std::string& name, const std::vector<Datum>& args,
                  const State& st) const override;
  std::vector<Method> enum_methods(const Bounds& b) const override;
  std::vector<State> enum_states(const Bounds& b) const override;
  std::vector<Observation> enum_observations(const Bounds& b) const override;
  Json encode_state(const State& st) const override;
  State decode_state(const Json& j) const override;
  Json encode_method(const Method& m) const override;
  Method decode_method(const std::string& ctor, const Json& args,
                       std::optional<SiteId> site) const override;

 private:
  CellComponentSpec spec_;
};

/// Builds a cell component after sweeping the merge laws over
/// spec.domain(law_bounds); throws Error(kInvalidSpec) with the violating
/// values otherwise.
std::shared_ptr<const CellComponent> make_cell_component(CellComponentSpec spec,
                                                         const Bounds& law_bounds = {});

Datum maxchar(const Datum& a, const Datum& b);
Datum minnat(const Datum& a, const Datum& b);
/// Minimum under red < green < blue.
Datum mincolor(const Datum& a, const Datum& b);

CellComponentSpec cchar_spec();
CellComponentSpec cnat_spec();
CellComponentSpec ccolor_spec();

std::shared_ptr<const CellComponent> cchar();
std::shared_ptr<const CellComponent> cnat();
std::shared_ptr<const CellComponent> ccolor();

}  // namespace otcomp
