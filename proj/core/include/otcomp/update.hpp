#pragma once

#include <optional>
#include <vector>

#include "otcomp/component.hpp"

namespace otcomp {

inline constexpr const char* kUpdateCtor = "Update";

/// In-place edit of one child occurrence inside a dynamic composition:
/// replace `old_child` at address `addr` by child_method applied to it.
/// The address is empty for sets (the old child itself is the address) and
/// a single position for strings.
///
/// Encoded as Method("Update", [addr..., old_child, child_method]).
struct UpdateMethod {
  std::vector<Datum> addr;
  State old_child;
  Method child_method;
  std::optional<SiteId> site;

  Method to_method() const;
  static std::optional<UpdateMethod> from(const Method& m);

  /// child_method applied to old_child.
  State new_child(const Component& child) const;

  /// Equal address and equal old child.
  bool same_target(const UpdateMethod& other) const {
    return addr == other.addr && old_child == other.old_child;
  }

  friend bool operator==(const UpdateMethod& a, const UpdateMethod& b) {
    return a.addr == b.addr && a.old_child == b.old_child && a.child_method == b.child_method &&
           a.site == b.site;
  }
};

inline bool is_update(const Method& m) { return m.ctor() == kUpdateCtor; }

}  // namespace otcomp
