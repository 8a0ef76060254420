#pragma once

// Reference models written directly over std::string and bitmasks, sharing
// no code with the library. Tests compare the library's sweeps against the
// counts these brute-force loops produce.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

struct SweepCounts {
  std::int64_t cp1_cases = 0;
  std::int64_t cp1_failures = 0;
  std::int64_t cp2_triples = 0;
  std::int64_t cp2_discrepancies = 0;
  std::int64_t cp2_realizable = 0;
};

// ---- character-wise string editing ----

struct Op {
  enum Kind { kNop, kIns, kDel } kind = kNop;
  int pos = 0;
  char ch = 0;
  int site = 0;

  friend bool operator==(const Op&, const Op&) = default;
};

inline bool poss(const Op& o, const std::string& s) {
  const int len = static_cast<int>(s.size());
  if (o.kind == Op::kIns) return o.pos >= 0 && o.pos <= len;
  if (o.kind == Op::kDel) return o.pos >= 0 && o.pos < len;
  return true;
}

inline std::string run(const Op& o, std::string s) {
  if (o.kind == Op::kIns) s.insert(s.begin() + o.pos, o.ch);
  if (o.kind == Op::kDel) s.erase(s.begin() + o.pos);
  return s;
}

inline Op it(Op a, const Op& b) {
  if (a.kind == Op::kNop || b.kind == Op::kNop) return a;
  if (a.kind == Op::kIns && b.kind == Op::kIns) {
    if (!(a.pos < b.pos || (a.pos == b.pos && a.site < b.site))) ++a.pos;
  } else if (a.kind == Op::kIns) {
    if (a.pos > b.pos) --a.pos;
  } else if (b.kind == Op::kIns) {
    if (a.pos >= b.pos) ++a.pos;
  } else if (a.pos == b.pos) {
    return Op{};
  } else if (a.pos > b.pos) {
    --a.pos;
  }
  return a;
}

inline std::vector<std::string> strings(const std::string& alphabet, int max_len) {
  std::vector<std::string> out{""};
  std::vector<std::string> layer{""};
  for (int n = 1; n <= max_len; ++n) {
    std::vector<std::string> next;
    for (const auto& p : layer) {
      for (char c : alphabet) next.push_back(p + c);
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = next;
  }
  return out;
}

inline std::vector<Op> string_ops(const std::string& alphabet, int max_len, int sites) {
  std::vector<Op> out{Op{}};
  for (int p = 0; p <= max_len; ++p) {
    for (char c : alphabet) {
      for (int n = 1; n <= sites; ++n) out.push_back({Op::kIns, p, c, n});
    }
  }
  for (int p = 0; p < max_len; ++p) {
    for (int n = 1; n <= sites; ++n) out.push_back({Op::kDel, p, 0, n});
  }
  return out;
}

inline bool same_site(const Op& a, const Op& b) {
  return a.kind != Op::kNop && b.kind != Op::kNop && a.site == b.site;
}

inline SweepCounts string_sweep(const std::string& alphabet, int max_len, int sites) {
  const auto states = strings(alphabet, max_len);
  const auto ops = string_ops(alphabet, max_len, sites);
  SweepCounts c;
  auto legal2 = [](const Op& x, const Op& y, const std::string& s) {
    return poss(x, s) && poss(y, run(x, s));
  };
  for (const auto& s : states) {
    for (const auto& a : ops) {
      for (const auto& b : ops) {
        if (same_site(a, b)) continue;
        const Op b2 = it(b, a);
        const Op a2 = it(a, b);
        if (!legal2(a, b2, s) || !legal2(b, a2, s)) continue;
        ++c.cp1_cases;
        if (run(b2, run(a, s)) != run(a2, run(b, s))) ++c.cp1_failures;
      }
    }
  }
  for (const auto& a : ops) {
    for (const auto& b : ops) {
      if (same_site(a, b)) continue;
      for (const auto& m : ops) {
        ++c.cp2_triples;
        if (it(it(m, a), it(b, a)) == it(it(m, b), it(a, b))) continue;
        ++c.cp2_discrepancies;
        const bool real = std::any_of(states.begin(), states.end(), [&](const std::string& s) {
          return poss(a, s) && poss(b, s) && poss(m, s) && legal2(a, it(b, a), s) &&
                 legal2(b, it(a, b), s);
        });
        if (real) ++c.cp2_realizable;
      }
    }
  }
  return c;
}

// ---- sets of small integers, held as bitmasks ----

struct SetOp {
  enum Kind { kNop, kAdd, kRemove } kind = kNop;
  int x = 0;
  friend bool operator==(const SetOp&, const SetOp&) = default;
};

inline SweepCounts set_sweep(int universe, bool guarded) {
  std::vector<SetOp> ops{SetOp{}};
  for (int x = 0; x < universe; ++x) ops.push_back({SetOp::kAdd, x});
  for (int x = 0; x < universe; ++x) ops.push_back({SetOp::kRemove, x});
  auto has = [](unsigned s, int x) { return (s >> x) & 1U; };
  auto poss_s = [&](const SetOp& o, unsigned s) {
    if (o.kind == SetOp::kAdd) return !guarded || !has(s, o.x);
    if (o.kind == SetOp::kRemove) return static_cast<bool>(has(s, o.x));
    return true;
  };
  auto run_s = [](const SetOp& o, unsigned s) {
    if (o.kind == SetOp::kAdd) return s | (1U << o.x);
    if (o.kind == SetOp::kRemove) return s & ~(1U << o.x);
    return s;
  };
  auto it_s = [](const SetOp& a, const SetOp& b) {
    if (a.kind == SetOp::kNop || b.kind == SetOp::kNop) return a;
    if (a.kind == b.kind && a.x == b.x) return SetOp{};
    return a;
  };
  SweepCounts c;
  for (unsigned s = 0; s < (1U << universe); ++s) {
    for (const auto& a : ops) {
      for (const auto& b : ops) {
        const auto b2 = it_s(b, a);
        const auto a2 = it_s(a, b);
        if (!poss_s(a, s) || !poss_s(b2, run_s(a, s)) || !poss_s(b, s) || !poss_s(a2, run_s(b, s))) continue;
        ++c.cp1_cases;
        if (run_s(b2, run_s(a, s)) != run_s(a2, run_s(b, s))) ++c.cp1_failures;
      }
    }
  }
  for (const auto& a : ops) {
    for (const auto& b : ops) {
      for (const auto& m : ops) {
        ++c.cp2_triples;
        if (!(it_s(it_s(m, a), it_s(b, a)) == it_s(it_s(m, b), it_s(a, b)))) ++c.cp2_discrepancies;
      }
    }
  }
  return c;
}

// ---- sets of character cells with in-place updates ----
//
// Cells are -1 (never written) or 0..chars-1; a set is a bitmask over
// cell + 1. Updates carry the old cell and a put value (-1 for nop).

struct CellSetOp {
  enum Kind { kNop, kAdd, kRemove, kUpdate } kind = kNop;
  int x = 0;    // element, or old cell for Update
  int put = 0;  // Update only: -1 = nop, else the character
  friend bool operator==(const CellSetOp&, const CellSetOp&) = default;
};

inline SweepCounts cell_set_sweep(int chars, bool guarded) {
  const int cells = chars + 1;
  auto bit = [](int cell) { return 1U << (cell + 1); };
  auto has = [&](unsigned s, int cell) { return (s & bit(cell)) != 0; };
  auto after = [](const CellSetOp& u) { return u.put < 0 ? u.x : u.put; };
  std::vector<CellSetOp> ops{CellSetOp{}};
  for (int x = -1; x < chars; ++x) ops.push_back({CellSetOp::kAdd, x, 0});
  for (int x = -1; x < chars; ++x) ops.push_back({CellSetOp::kRemove, x, 0});
  for (int x = -1; x < chars; ++x) {
    for (int p = -1; p < chars; ++p) ops.push_back({CellSetOp::kUpdate, x, p});
  }
  auto poss_c = [&](const CellSetOp& o, unsigned s) {
    switch (o.kind) {
      case CellSetOp::kAdd: return !guarded || !has(s, o.x);
      case CellSetOp::kRemove: return has(s, o.x);
      case CellSetOp::kUpdate:
        return has(s, o.x) && (!guarded || after(o) == o.x || !has(s, after(o)));
      default: return true;
    }
  };
  auto run_c = [&](const CellSetOp& o, unsigned s) {
    switch (o.kind) {
      case CellSetOp::kAdd: return s | bit(o.x);
      case CellSetOp::kRemove: return s & ~bit(o.x);
      case CellSetOp::kUpdate: return (s & ~bit(o.x)) | bit(after(o));
      default: return s;
    }
  };
  auto it_c = [&](const CellSetOp& a, const CellSetOp& b) -> CellSetOp {
    if (a.kind == CellSetOp::kNop || b.kind == CellSetOp::kNop) return a;
    if (a.kind == CellSetOp::kUpdate && b.kind == CellSetOp::kUpdate) {
      if (a.x != b.x) return a;
      // Rebase on the other update's result; concurrent puts keep the max.
      int put = a.put;
      if (a.put >= 0 && b.put >= 0) put = std::max(a.put, b.put);
      return {CellSetOp::kUpdate, after(b), put};
    }
    if (a.kind == CellSetOp::kUpdate) {
      return (b.kind == CellSetOp::kRemove && b.x == a.x) ? CellSetOp{} : a;
    }
    if (b.kind == CellSetOp::kUpdate) {
      if (a.kind == CellSetOp::kRemove && a.x == b.x) return {CellSetOp::kRemove, after(b), 0};
      return a;
    }
    if (a.kind == b.kind && a.x == b.x) return CellSetOp{};
    return a;
  };
  auto legal2 = [&](const CellSetOp& x, const CellSetOp& y, unsigned s) {
    return poss_c(x, s) && poss_c(y, run_c(x, s));
  };
  const unsigned nstates = 1U << cells;
  SweepCounts c;
  for (unsigned s = 0; s < nstates; ++s) {
    for (const auto& a : ops) {
      for (const auto& b : ops) {
        const auto b2 = it_c(b, a);
        const auto a2 = it_c(a, b);
        if (!legal2(a, b2, s) || !legal2(b, a2, s)) continue;
        ++c.cp1_cases;
        if (run_c(b2, run_c(a, s)) != run_c(a2, run_c(b, s))) ++c.cp1_failures;
      }
    }
  }
  for (const auto& a : ops) {
    for (const auto& b : ops) {
      for (const auto& m : ops) {
        ++c.cp2_triples;
        if (it_c(it_c(m, a), it_c(b, a)) == it_c(it_c(m, b), it_c(a, b))) continue;
        ++c.cp2_discrepancies;
        for (unsigned s = 0; s < nstates; ++s) {
          if (poss_c(a, s) && poss_c(b, s) && poss_c(m, s) && legal2(a, it_c(b, a), s) &&
              legal2(b, it_c(a, b), s)) {
            ++c.cp2_realizable;
            break;
          }
        }
      }
    }
  }
  return c;
}

}  // namespace oracle
