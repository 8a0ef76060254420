#pragma once

#include <optional>
#include <string>
#include <vector>

#include "otcomp/checker.hpp"
#include "otcomp/component.hpp"
#include "otcomp/patterns.hpp"
#include "otcomp/simulator.hpp"

namespace otcomp {

// The hierarchical document: characters with a size and a color, strings of
// those, and so on up to pages.
//
//   FCHAR      = cchar (+) cnat (+) ccolor
//   WORD       = string[FCHAR]        FWORD      = WORD (+) cnat (+) ccolor
//   SENTENCE   = string[FWORD]        FSENTENCE  = SENTENCE (+) cnat (+) ccolor
//   PARAGRAPH  = string[FSENTENCE]    FPARAGRAPH = PARAGRAPH (+) cnat (+) ccolor
//   PAGE       = string[FPARAGRAPH]   FPAGE      = PAGE (+) cnat (+) ccolor

struct DocumentLevel {
  std::string label;  // "FCHAR", "WORD", ...
  ComponentPtr component;
  /// Set for the dynamic levels: admissibility of the child at the bounds.
  std::optional<AdmissibilityReport> admissibility;
};

struct DocumentTower {
  Bounds bounds;
  std::vector<DocumentLevel> levels;

  const DocumentLevel& level(const std::string& label) const;
};

/// Bounds small enough that admissibility at PAGE, over every enumerated
/// FPARAGRAPH state, stays within the default case ceiling.
Bounds document_bounds();

DocumentTower build_document_tower(const Bounds& b = document_bounds());

/// Two concurrent edits on an FWORD holding two characters: site 1 inserts
/// a character at position 0 and site 2 recolors the character at
/// position 1.
Json fword_scenario_json();

struct DocumentDemo {
  DocumentTower tower;
  RunReport fword;
  std::optional<CheckReport> fchar_consistency;

  bool ok() const;
};

/// Builds the tower, runs the FWORD scenario under both orders and, with
/// `check`, the consistency sweep of FCHAR at the default bounds.
DocumentDemo run_document_demo(bool check, const Bounds& b = document_bounds());

Json to_json(const DocumentDemo& demo, bool with_elapsed = true);
std::string to_text(const DocumentDemo& demo);

}  // namespace otcomp
