#include "otcomp/value.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace otcomp {

struct State::Node {
  StateKind kind;
  Datum value;
  std::vector<State> items;
};

State::State(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

State State::cell(Datum value) {
  return State(std::make_shared<const Node>(Node{StateKind::kCell, std::move(value), {}}));
}

State State::opaque(Datum value) {
  return State(std::make_shared<const Node>(Node{StateKind::kOpaque, std::move(value), {}}));
}

State State::set(std::vector<State> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return State(std::make_shared<const Node>(Node{StateKind::kSet, Datum{}, std::move(items)}));
}

State State::seq(std::vector<State> items) {
  return State(std::make_shared<const Node>(Node{StateKind::kSeq, Datum{}, std::move(items)}));
}

State State::product(std::vector<State> items) {
  return State(std::make_shared<const Node>(Node{StateKind::kProduct, Datum{}, std::move(items)}));
}

StateKind State::kind() const { return node_->kind; }

const Datum& State::value() const {
  if (node_->kind != StateKind::kCell && node_->kind != StateKind::kOpaque) {
    throw std::logic_error("State::value on a container state");
  }
  return node_->value;
}

const std::vector<State>& State::items() const { return node_->items; }

bool State::contains(const State& element) const {
  const auto& xs = node_->items;
  if (node_->kind == StateKind::kSet) return std::binary_search(xs.begin(), xs.end(), element);
  return std::find(xs.begin(), xs.end(), element) != xs.end();
}

bool operator==(const State& a, const State& b) {
  return a.node_ == b.node_ || (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const State& a, const State& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_->kind <=> b.node_->kind; c != 0) return c;
  if (a.node_->kind == StateKind::kCell || a.node_->kind == StateKind::kOpaque) {
    return a.node_->value <=> b.node_->value;
  }
  return std::lexicographical_compare_three_way(a.node_->items.begin(), a.node_->items.end(),
                                                b.node_->items.begin(), b.node_->items.end());
}

struct Method::Node {
  std::string ctor;
  std::vector<Datum> args;
  std::optional<SiteId> site;
};

Method::Method(std::string ctor, std::vector<Datum> args, std::optional<SiteId> site)
    : node_(std::make_shared<const Node>(Node{std::move(ctor), std::move(args), site})) {}

Method Method::nop() {
  static const Method kNop("nop");
  return kNop;
}

bool Method::is_nop() const { return node_->ctor == "nop"; }
const std::string& Method::ctor() const { return node_->ctor; }
const std::vector<Datum>& Method::args() const { return node_->args; }
std::optional<SiteId> Method::site() const { return node_->site; }

Method Method::with_ctor(std::string ctor) const { return Method(std::move(ctor), node_->args, node_->site); }
Method Method::with_args(std::vector<Datum> args) const { return Method(node_->ctor, std::move(args), node_->site); }

bool operator==(const Method& a, const Method& b) {
  return a.node_ == b.node_ || (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Method& a, const Method& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_->ctor <=> b.node_->ctor; c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(a.node_->args.begin(), a.node_->args.end(),
                                                      b.node_->args.begin(), b.node_->args.end());
      c != 0) {
    return c;
  }
  return a.node_->site <=> b.node_->site;
}

bool operator==(const Datum& a, const Datum& b) { return (a <=> b) == std::strong_ordering::equal; }

std::strong_ordering operator<=>(const Datum& a, const Datum& b) {
  if (auto c = a.v_.index() <=> b.v_.index(); c != 0) return c;
  return std::visit(
      [&](const auto& lhs) -> std::strong_ordering {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.v_);
        if constexpr (std::is_same_v<T, Color>) {
          return static_cast<int>(lhs) <=> static_cast<int>(rhs);
        } else {
          return lhs <=> rhs;
        }
      },
      a.v_);
}

std::string to_string(Color c) {
  switch (c) {
    case Color::kRed: return "red";
    case Color::kGreen: return "green";
    case Color::kBlue: return "blue";
  }
  return "?";
}

std::optional<Color> parse_color(std::string_view name) {
  if (name == "red") return Color::kRed;
  if (name == "green") return Color::kGreen;
  if (name == "blue") return Color::kBlue;
  return std::nullopt;
}

std::string to_string(const Datum& d) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Bottom>) {
          return "⊥";
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, Char>) {
          return std::string("'") + v.value + "'";
        } else if constexpr (std::is_same_v<T, Nat>) {
          return std::to_string(v.value);
        } else if constexpr (std::is_same_v<T, Color>) {
          return to_string(v);
        } else if constexpr (std::is_same_v<T, Symbol>) {
          return v.name;
        } else {
          return to_string(v);
        }
      },
      d.variant());
}

namespace {

bool all_char_atoms(const std::vector<State>& xs) {
  return !xs.empty() && std::all_of(xs.begin(), xs.end(), [](const State& s) {
    return s.kind() == StateKind::kOpaque && s.value().is<Char>();
  });
}

template <class Range, class Fn>
std::string join(const Range& r, Fn&& fn) {
  std::string out;
  bool first = true;
  for (const auto& x : r) {
    if (!first) out += ", ";
    first = false;
    out += fn(x);
  }
  return out;
}

}  // namespace

std::string to_string(const State& s) {
  auto render = [](const State& x) { return to_string(x); };
  switch (s.kind()) {
    case StateKind::kCell:
    case StateKind::kOpaque: return to_string(s.value());
    case StateKind::kSet: return "{" + join(s.items(), render) + "}";
    case StateKind::kSeq: {
      if (all_char_atoms(s.items())) {
        std::string out = "\"";
        for (const auto& x : s.items()) out += x.value().as<Char>().value;
        return out + "\"";
      }
      return "[" + join(s.items(), render) + "]";
    }
    case StateKind::kProduct: return "<" + join(s.items(), render) + ">";
  }
  return "?";
}

std::string to_string(const Method& m) {
  if (m.is_nop()) return "nop";
  std::string out = m.ctor();
  out += "(";
  out += join(m.args(), [](const Datum& d) { return to_string(d); });
  if (m.site()) {
    if (!m.args().empty()) out += ", ";
    out += "s" + std::to_string(*m.site());
  }
  return out + ")";
}

std::string to_string(const MethodSeq& seq) {
  return "[" + join(seq, [](const Method& m) { return to_string(m); }) + "]";
}

}  // namespace otcomp
