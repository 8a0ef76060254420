#include "otcomp/composition.hpp"

#include <algorithm>
#include <map>

#include "literal.hpp"
#include "otcomp/error.hpp"
#include "otcomp/kernel.hpp"

namespace otcomp {

Method UpdateMethod::to_method() const {
  std::vector<Datum> args = addr;
  args.emplace_back(old_child);
  args.emplace_back(child_method);
  return Method(kUpdateCtor, std::move(args), site);
}

std::optional<UpdateMethod> UpdateMethod::from(const Method& m) {
  if (!is_update(m)) return std::nullopt;
  const auto& args = m.args();
  if (args.size() < 2 || !args[args.size() - 2].is<State>() || !args.back().is<Method>()) {
    return std::nullopt;
  }
  UpdateMethod u{{args.begin(), args.end() - 2},
                 args[args.size() - 2].as<State>(),
                 args.back().as<Method>(),
                 m.site()};
  return u;
}

State UpdateMethod::new_child(const Component& child) const {
  return apply(child, child_method, old_child);
}

// ---- static product ----

namespace {

std::vector<ComponentPtr> flatten(const std::vector<ComponentPtr>& factors) {
  std::vector<ComponentPtr> out;
  for (const auto& f : factors) {
    if (const auto* p = dynamic_cast<const StaticProduct*>(f.get())) {
      out.insert(out.end(), p->factors().begin(), p->factors().end());
    } else {
      out.push_back(f);
    }
  }
  return out;
}

std::string product_name(const std::vector<ComponentPtr>& factors) {
  std::string out;
  for (const auto& f : factors) out += (out.empty() ? "" : " (+) ") + f->name();
  return out;
}

}  // namespace

StaticProduct::StaticProduct(std::vector<ComponentPtr> factors, NamePolicy policy)
    : Component(product_name(flatten(factors))), factors_(flatten(factors)) {
  if (factors_.size() < 2) throw Error(ErrorCode::kInvalidSpec, "a product needs two factors");
  std::map<std::string, int> method_uses;
  std::map<std::string, int> attribute_uses;
  for (const auto& f : factors_) {
    for (const auto& m : f->methods()) ++method_uses[m.name];
    for (const auto& a : f->attributes()) ++attribute_uses[a.name];
  }
  auto qualified = [&](std::size_t i, const std::string& n, const std::map<std::string, int>& uses) {
    if (uses.at(n) == 1) return n;
    if (policy == NamePolicy::kRequireDisjoint) {
      throw Error(ErrorCode::kNameClash, "\"" + n + "\" is declared by more than one factor of " + name());
    }
    return "f" + std::to_string(i) + "." + n;
  };
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    for (const auto& m : factors_[i]->methods()) {
      MethodSig sig = m;
      sig.name = qualified(i, m.name, method_uses);
      method_names_.push_back({sig.name, Name{i, m.name}});
      declare_method(std::move(sig));
    }
    for (const auto& a : factors_[i]->attributes()) {
      AttributeSig sig = a;
      sig.name = qualified(i, a.name, attribute_uses);
      attribute_names_.push_back({sig.name, Name{i, a.name}});
      declare_attribute(std::move(sig));
    }
  }
}

const StaticProduct::Name& StaticProduct::owner_of(const std::string& ctor) const {
  for (const auto& [n, owner] : method_names_) {
    if (n == ctor) return owner;
  }
  throw Error(ErrorCode::kUnknownMethod, ctor + " is not a method of " + name());
}

int StaticProduct::method_owner(const std::string& ctor) const {
  for (const auto& [n, owner] : method_names_) {
    if (n == ctor) return static_cast<int>(owner.factor);
  }
  return -1;
}

int StaticProduct::attribute_owner(const std::string& attr) const {
  for (const auto& [n, owner] : attribute_names_) {
    if (n == attr) return static_cast<int>(owner.factor);
  }
  return -1;
}

Method StaticProduct::lift(std::size_t factor, const Method& m) const {
  if (m.is_nop()) return m;
  for (const auto& [n, owner] : method_names_) {
    if (owner.factor == factor && owner.inner == m.ctor()) return m.with_ctor(n);
  }
  throw Error(ErrorCode::kUnknownMethod, m.ctor() + " is not a method of factor " +
                                             std::to_string(factor) + " of " + name());
}

Method StaticProduct::lower(const Method& m) const {
  if (m.is_nop()) return m;
  return m.with_ctor(owner_of(m.ctor()).inner);
}

State StaticProduct::initial_state() const {
  std::vector<State> items;
  for (const auto& f : factors_) items.push_back(f->initial_state());
  return State::product(std::move(items));
}

State StaticProduct::do_method(const Method& m, const State& st) const {
  const auto& owner = owner_of(m.ctor());
  auto items = st.items();
  items.at(owner.factor) = apply(*factors_[owner.factor], lower(m), items[owner.factor]);
  return State::product(std::move(items));
}

bool StaticProduct::poss(const Method& m, const State& st) const {
  const auto& owner = owner_of(m.ctor());
  return enabled(*factors_[owner.factor], lower(m), st.items().at(owner.factor));
}

Method StaticProduct::it(const Method& m1, const Method& m2) const {
  const auto f1 = owner_of(m1.ctor()).factor;
  const auto f2 = owner_of(m2.ctor()).factor;
  if (f1 != f2) return m1;
  return lift(f1, transform(*factors_[f1], lower(m1), lower(m2)));
}

Datum StaticProduct::attribute(const std::string& attr, const std::vector<Datum>& args,
                               const State& st) const {
  for (const auto& [n, owner] : attribute_names_) {
    if (n == attr) return observe(*factors_[owner.factor], owner.inner, args, st.items().at(owner.factor));
  }
  throw Error(ErrorCode::kUnknownAttribute, attr + " is not an attribute of " + name());
}

std::vector<Method> StaticProduct::enum_methods(const Bounds& b) const {
  std::vector<Method> out{Method::nop()};
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    for (const auto& m : factors_[i]->enum_methods(b)) {
      if (!m.is_nop()) out.push_back(lift(i, m));
    }
  }
  if (static_cast<std::int64_t>(out.size()) > b.max_methods) {
    throw Error(ErrorCode::kBoundsExceeded, name() + ": too many methods");
  }
  return out;
}

std::vector<State> StaticProduct::enum_states(const Bounds& b) const {
  std::vector<std::vector<State>> per;
  double total = 1;
  for (const auto& f : factors_) {
    per.push_back(f->enum_states(b));
    total *= static_cast<double>(per.back().size());
  }
  b.require_within(total, name() + " states");
  std::vector<State> out;
  std::vector<std::size_t> idx(per.size(), 0);
  // Odometer over the factor lists, last factor fastest.
  while (true) {
    std::vector<State> items;
    for (std::size_t i = 0; i < per.size(); ++i) items.push_back(per[i][idx[i]]);
    out.push_back(State::product(std::move(items)));
    std::size_t k = per.size();
    while (k > 0) {
      --k;
      if (++idx[k] < per[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
  }
}

std::vector<Observation> StaticProduct::enum_observations(const Bounds& b) const {
  std::vector<Observation> out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    for (auto o : factors_[i]->enum_observations(b)) {
      for (const auto& [n, owner] : attribute_names_) {
        if (owner.factor == i && owner.inner == o.attribute) o.attribute = n;
      }
      out.push_back(std::move(o));
    }
  }
  return out;
}

Json StaticProduct::encode_state(const State& st) const {
  Json j = Json::array();
  for (std::size_t i = 0; i < factors_.size(); ++i) j.push_back(factors_[i]->encode_state(st.items().at(i)));
  return j;
}

State StaticProduct::decode_state(const Json& j) const {
  if (!j.is_array() || j.size() != factors_.size()) {
    detail::bad_literal(name() + " state must be an array of " + std::to_string(factors_.size()) +
                            " factor states",
                        j);
  }
  std::vector<State> items;
  for (std::size_t i = 0; i < factors_.size(); ++i) items.push_back(factors_[i]->decode_state(j[i]));
  return State::product(std::move(items));
}

Json StaticProduct::encode_method(const Method& m) const {
  if (m.is_nop()) return Json{{"ctor", "nop"}, {"args", Json::array()}};
  const auto& owner = owner_of(m.ctor());
  Json j = factors_[owner.factor]->encode_method(lower(m));
  j["ctor"] = m.ctor();
  return j;
}

Method StaticProduct::decode_method(const std::string& ctor, const Json& args,
                                    std::optional<SiteId> site) const {
  const auto& owner = owner_of(ctor);
  const Json inner{{"ctor", owner.inner}, {"args", args}};
  return lift(owner.factor, otcomp::decode_method(*factors_[owner.factor], inner, site));
}

ComponentPtr static_compose(ComponentPtr c1, ComponentPtr c2, NamePolicy policy) {
  return static_compose(std::vector<ComponentPtr>{std::move(c1), std::move(c2)}, policy);
}

ComponentPtr static_compose(std::vector<ComponentPtr> factors, NamePolicy policy) {
  return std::make_shared<const StaticProduct>(std::move(factors), policy);
}

// ---- dynamic composition ----

DynamicComposition::DynamicComposition(std::string name, std::shared_ptr<const PatternBody> body,
                                       ComponentPtr child)
    : Component(std::move(name)), body_(std::move(body)), child_(std::move(child)) {
  for (const auto& m : body_->methods()) declare_method(m);
  std::vector<std::string> sorts(body_->address_arity(), "Nat");
  sorts.push_back("State");
  sorts.push_back("Method");
  declare_method({kUpdateCtor, std::move(sorts)});
  for (const auto& a : body_->attributes()) declare_attribute(a);
}

Method DynamicComposition::make_update(std::vector<Datum> addr, State old_child, Method child_method,
                                       std::optional<SiteId> site) const {
  return UpdateMethod{std::move(addr), std::move(old_child), std::move(child_method), site}.to_method();
}

UpdateMethod DynamicComposition::require_update(const Method& m) const {
  auto u = UpdateMethod::from(m);
  if (!u || u->addr.size() != body_->address_arity()) {
    throw Error(ErrorCode::kComponentMismatch, to_string(m) + " is not an Update of " + name());
  }
  return *u;
}

State DynamicComposition::initial_state() const { return body_->initial_state(); }

State DynamicComposition::do_method(const Method& m, const State& st) const {
  if (!is_update(m)) return apply(*body_, m, st);
  const auto u = require_update(m);
  return body_->replace_element(u.addr, u.old_child, u.new_child(*child_), st);
}

bool DynamicComposition::poss(const Method& m, const State& st) const {
  if (!is_update(m)) return enabled(*body_, m, st);
  const auto u = require_update(m);
  if (!enabled(*child_, u.child_method, u.old_child)) return false;
  return body_->update_target_enabled(u.addr, u.old_child, u.new_child(*child_), st);
}

Method DynamicComposition::it(const Method& m1, const Method& m2) const {
  const bool u1 = is_update(m1);
  const bool u2 = is_update(m2);
  if (u1 && u2) return transform_update(*this, require_update(m1), require_update(m2));
  if (u1) return transform_update_vs_pattern(*this, require_update(m1), m2);
  if (u2) return transform_pattern_vs_update(*this, m1, require_update(m2));
  return transform(*body_, m1, m2);
}

Datum DynamicComposition::attribute(const std::string& attr, const std::vector<Datum>& args,
                                    const State& st) const {
  return observe(*body_, attr, args, st);
}

std::vector<Method> DynamicComposition::enum_methods(const Bounds& b) const {
  auto out = body_->enum_methods(b);
  const auto addrs = body_->update_addresses(b);
  const auto olds = child_->enum_states(b);
  const auto child_methods = child_->enum_methods(b);
  const double count = static_cast<double>(out.size()) +
                       static_cast<double>(addrs.size() * olds.size() * child_methods.size());
  if (count > static_cast<double>(b.max_methods)) {
    throw Error(ErrorCode::kBoundsExceeded,
                name() + ": about " + std::to_string(static_cast<std::int64_t>(count)) +
                    " methods, above the limit of " + std::to_string(b.max_methods));
  }
  for (const auto& a : addrs) {
    for (const auto& x : olds) {
      for (const auto& m : child_methods) out.push_back(make_update(a, x, m));
    }
  }
  return out;
}

std::vector<State> DynamicComposition::enum_states(const Bounds& b) const { return body_->enum_states(b); }

std::vector<Observation> DynamicComposition::enum_observations(const Bounds& b) const {
  return body_->enum_observations(b);
}

Json DynamicComposition::encode_state(const State& st) const { return body_->encode_state(st); }
State DynamicComposition::decode_state(const Json& j) const { return body_->decode_state(j); }

Json DynamicComposition::encode_method(const Method& m) const {
  if (!is_update(m)) return body_->encode_method(m);
  const auto u = require_update(m);
  Json args = body_->encode_address(u.addr);
  args.push_back(child_->encode_state(u.old_child));
  args.push_back(child_->encode_method(u.child_method));
  Json j;
  j["ctor"] = kUpdateCtor;
  j["args"] = std::move(args);
  if (u.site) j["site"] = *u.site;
  return j;
}

Method DynamicComposition::decode_method(const std::string& ctor, const Json& args,
                                         std::optional<SiteId> site) const {
  if (ctor != kUpdateCtor) return body_->decode_method(ctor, args, site);
  const auto arity = body_->address_arity();
  detail::require_arity(ctor, args, arity + 2);
  const auto addr = body_->decode_address(args, arity);
  auto old_child = child_->decode_state(args[arity]);
  auto child_method = otcomp::decode_method(*child_, args[arity + 1]);
  return make_update(addr, std::move(old_child), std::move(child_method), site);
}

std::shared_ptr<const DynamicComposition> dynamic_compose(const CompositionPattern& p,
                                                          ComponentPtr child, const Morphism& phi,
                                                          const Bounds& b, AdmissibilityReport* report) {
  if (phi.elem_target != child) {
    throw Error(ErrorCode::kComponentMismatch, "the morphism does not target " + child->name());
  }
  auto body = instantiate(p, phi, b, report);
  return std::make_shared<const DynamicComposition>(p.name + "[" + child->name() + "]",
                                                    std::move(body), std::move(child));
}

std::shared_ptr<const DynamicComposition> dynamic_compose(const CompositionPattern& p,
                                                          ComponentPtr child, const Bounds& b,
                                                          AdmissibilityReport* report) {
  auto phi = Morphism::structural(child);
  return dynamic_compose(p, std::move(child), phi, b, report);
}

namespace {

const DynamicComposition& as_dynamic(const Component& comp) {
  const auto* d = dynamic_cast<const DynamicComposition*>(&comp);
  if (!d) throw Error(ErrorCode::kComponentMismatch, comp.name() + " is not a dynamic composition");
  return *d;
}

void require_child_method(const DynamicComposition& d, const Method& m) {
  if (!m.is_nop() && !d.child().declares_method(m.ctor())) {
    throw Error(ErrorCode::kComponentMismatch,
                to_string(m) + " is not a method of " + d.child().name());
  }
}

}  // namespace

Method transform_update(const Component& comp, const UpdateMethod& u1, const UpdateMethod& u2) {
  const auto& d = as_dynamic(comp);
  require_child_method(d, u1.child_method);
  require_child_method(d, u2.child_method);
  if (!u1.same_target(u2)) return u1.to_method();
  UpdateMethod out = u1;
  out.old_child = u2.new_child(d.child());
  out.child_method = transform(d.child(), u1.child_method, u2.child_method);
  return out.to_method();
}

Method transform_update_vs_pattern(const Component& comp, const UpdateMethod& u, const Method& m) {
  const auto& d = as_dynamic(comp);
  const auto* table = d.body().cross_table();
  if (!table || !table->update_vs_pattern) {
    throw Error(ErrorCode::kMissingCrossTable, d.body().name() + " has no cross-transform table");
  }
  return table->update_vs_pattern(u, m, d.child());
}

Method transform_pattern_vs_update(const Component& comp, const Method& m, const UpdateMethod& u) {
  const auto& d = as_dynamic(comp);
  const auto* table = d.body().cross_table();
  if (!table || !table->pattern_vs_update) {
    throw Error(ErrorCode::kMissingCrossTable, d.body().name() + " has no cross-transform table");
  }
  return table->pattern_vs_update(m, u, d.child());
}

}  // namespace otcomp
