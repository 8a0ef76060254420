// Acceptance run: one PASS/FAIL line per criterion, each under a fixed
// wall-clock limit. Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "otcomp/checker.hpp"
#include "otcomp/document.hpp"
#include "otcomp/kernel.hpp"
#include "otcomp/simulator.hpp"

using namespace otcomp;
using namespace testing_util;

namespace {

struct Result {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string scenario(const std::string& name) { return std::string(OTCOMP_SCENARIO_DIR) + "/" + name; }

// ---- 1: scenario with transformation ----
Result fig2() {
  Result o;
  const auto s = load_scenario_file(scenario("fig2.scenario"));
  o.require(transform(*s.component, del(5, 2), ins(1, letter('f'), 1)) == del(6, 2),
            "IT(Del(5), Ins(1,'f')) is not Del(6)");
  const auto r = run_scenario(s);
  o.require(r.runs.size() == 2, "expected two delivery orders");
  for (const auto& run : r.runs) {
    o.require(run.final_state == make_text("effect"), "final " + to_string(run.final_state) + " is not effect");
  }
  o.require(r.converged, "did not converge");
  return o;
}

// ---- 2: the same ops without transformation ----
Result fig1() {
  Result o;
  const auto r = run_scenario(load_scenario_file(scenario("fig1_no_transform.scenario")));
  o.require(!r.converged, "raw delivery converged");
  o.require(r.runs.size() == 2 && r.runs[0].final_state == make_text("effece") &&
                r.runs[1].final_state == make_text("effect"),
            "finals are not effece / effect");
  return o;
}

// ---- 3: cells ----
Result primitives() {
  Result o;
  Bounds b;  // alphabet 3, naturals 0..3, 3 colors
  for (const auto& c : {cchar(), cnat(), ccolor()}) {
    for (const auto& r : {check_cp1(*c, b), check_cp2(*c, b)}) {
      o.require(r.verdict == Verdict::kPass && r.witnesses.empty() && r.cases > 0,
                c->name() + " " + r.label + ": " + to_string(r.verdict));
    }
  }
  return o;
}

// ---- 4: literal vs guarded sets ----
Result set_dichotomy() {
  Result o;
  const auto lit = bare_set(SetVariant::kLiteral);
  Bounds one;
  one.universe = 1;
  const auto r = check_cp1(*lit, one);
  o.require(r.verdict == Verdict::kFail, "literal set CP1 did not fail");
  const auto x = atom("x");
  bool found = false;
  for (const auto& w : r.witnesses) {
    o.require(replay_witness(*lit, w, {}, one), "witness does not replay");
    if (w.state == State::set({x}) && w.methods == MethodSeq{add(x), remove(x)} &&
        std::get<State>(w.left) == State::set({}) && std::get<State>(w.right) == State::set({x})) {
      found = true;
    }
  }
  o.require(found, "witness ({x}, add(x)/remove(x), {} vs {x}) missing");
  Bounds two;
  two.universe = 2;
  const auto grd = bare_set(SetVariant::kGuarded);
  for (const auto& g : {check_cp1(*grd, two), check_cp2(*grd, two)}) {
    o.require(g.verdict == Verdict::kPass && g.cases > 0, "guarded " + g.label + ": " + to_string(g.verdict));
  }
  return o;
}

// ---- 5: the set of character cells ----
Result setchar_theorems() {
  Result o;
  const auto sc = setchar();
  const State sa = State::set({chr('a')});
  const Method ub = sc->make_update({}, chr('a'), putchar_('b'));
  const Method uc = sc->make_update({}, chr('a'), putchar_('c'));
  o.require(observe(*sc, "iselem", {chr('b')}, apply(*sc, ub, sa)) == Datum(true), "iselem after Update");
  o.require(observe(*sc, "iselem", {chr('a')}, apply(*sc, ub, sa)) == Datum(false), "old element kept");
  o.require(!enabled(*sc, ub, State::set({chr('c')})), "Update enabled without its element");
  o.require(transform(*sc, ub, uc) == sc->make_update({}, chr('c'), putchar_('c')), "same-target rebase");
  const Method ud = sc->make_update({}, chr('b'), putchar_('c'));
  o.require(transform(*sc, ub, ud) == ub, "distinct targets changed");
  o.require(transform(*sc, ub, remove(chr('a'))) == Method::nop(), "Update vs removal of its element");
  o.require(transform(*sc, remove(chr('a')), ub) == remove(chr('b')), "removal vs Update");
  o.require(transform(*sc, add(chr('b')), ub) == add(chr('b')), "add vs Update");
  const State both = apply_seq(*sc, {ub, transform(*sc, uc, ub)}, sa);
  o.require(both == State::set({chr('c')}) && both == apply_seq(*sc, {uc, transform(*sc, ub, uc)}, sa),
            "concurrent Updates do not settle on {c}");

  const std::vector<CheckReport> reports{
      check_cp1_within(*sc, update_methods()),
      check_cp2_within(*sc, update_methods()),
      check_cp1_restricted(*sc, update_methods(), pattern_methods()),
      check_cp2_restricted(*sc, update_methods(), pattern_methods()),
      check_consistency(*sc),
  };
  for (const auto& r : reports) {
    o.require(r.verdict == Verdict::kPass && r.cases > 0, r.label + ": " + to_string(r.verdict));
  }
  return o;
}

// ---- 6: distinct-target Updates commute ----
Result commutation() {
  Result o;
  // Words up to length 2 over one-value cells; length 3 is about 6e7 cases,
  // above the default ceiling.
  auto word_bounds = document_bounds();
  word_bounds.max_len = 2;
  const auto word = dynamic_compose(string_pattern(), fchar(), word_bounds);
  const std::vector<std::pair<ComponentPtr, Bounds>> cases{{setchar(), Bounds{}}, {word, word_bounds}};
  for (const auto& [c, b] : cases) {
    const auto r = check_update_commutation(*c, b);
    o.require(r.verdict == Verdict::kPass && r.witnesses.empty() && r.cases > 0,
              c->name() + ": " + to_string(r.verdict));
  }
  return o;
}

// ---- 7: checker against simulator ----
Result oracle_equivalence() {
  Result o;
  const std::vector<ComponentPtr> components{cchar(), cnat(), ccolor(), bare_set(SetVariant::kGuarded), setchar()};
  const std::vector<std::vector<std::size_t>> orders3{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  Bounds b;
  for (const auto& c : components) {
    const auto cp1 = check_cp1(*c, b);
    const auto cp2 = check_cp2(*c, b);
    const auto states = c->enum_states(b);
    const auto methods = c->enum_methods(b);
    std::int64_t diverging = 0;
    std::int64_t legal_pairs = 0;
    for (const auto& s : states) {
      for (const auto& m1 : methods) {
        for (const auto& m2 : methods) {
          const auto l = integrate(*c, s, {m1, m2}, {0, 1});
          const auto r = integrate(*c, s, {m1, m2}, {1, 0});
          if (!l.fully_legal || !r.fully_legal) continue;
          ++legal_pairs;
          if (l.final_state != r.final_state) ++diverging;
        }
      }
    }
    o.require(legal_pairs == cp1.cases, c->name() + ": legal 2-op runs differ from CP1 cases");
    o.require((diverging == 0) == cp1.passed(), c->name() + ": 2-op convergence disagrees with CP1");
    if (!(cp1.passed() && cp2.passed())) continue;
    std::int64_t runs3 = 0;
    for (const auto& s : states) {
      for (const auto& m1 : methods) {
        for (const auto& m2 : methods) {
          for (const auto& m3 : methods) {
            const std::vector<Method> ops{m1, m2, m3};
            std::optional<State> first;
            bool legal_all = true;
            bool same = true;
            for (const auto& order : orders3) {
              const auto run = integrate(*c, s, ops, order);
              if (!run.fully_legal) {
                legal_all = false;
                break;
              }
              if (!first) {
                first = run.final_state;
              } else if (run.final_state != *first) {
                same = false;
              }
            }
            if (!legal_all) continue;
            ++runs3;
            if (!same) {
              o.require(false, c->name() + ": 3-op scenario diverged at " + to_string(s) + " " +
                                   to_string(MethodSeq{m1, m2, m3}));
            }
          }
        }
      }
    }
    o.require(runs3 > 0, c->name() + ": no fully legal 3-op scenario");
  }
  return o;
}

// ---- 8: committed STRING CP2 report ----
Result string_fixture() {
  Result o;
  const std::string path = std::string(OTCOMP_FIXTURE_DIR) + "/string_cp2.json";
  std::ifstream f(path, std::ios::binary);
  o.require(static_cast<bool>(f), "cannot read " + path);
  if (!o.ok) return o;
  std::ostringstream committed;
  committed << f.rdbuf();

  Bounds b;
  b.alphabet = 2;
  b.max_len = 3;
  b.sites = 2;
  const auto s = bare_string();
  const auto fresh = to_json(*s, check_cp2(*s, b), false).dump(2) + "\n";
  o.require(fresh == committed.str(), "fresh report differs from the fixture");
  const auto j = Json::parse(committed.str());
  for (const auto& jw : j["witnesses"]) {
    o.require(replay_witness(*s, witness_from_json(*s, jw), {}, b), "fixture witness does not replay");
  }
  return o;
}

// ---- 9: document tower ----
Result document() {
  Result o;
  const auto d = run_document_demo(false);
  o.require(d.tower.levels.size() == 9, "tower does not have 9 levels");
  for (const auto& l : d.tower.levels) {
    if (l.admissibility) o.require(l.admissibility->passed, l.label + " child not admissible");
  }
  o.require(d.fword.runs.size() == 2 && d.fword.converged && !d.fword.partially_legal,
            "FWORD scenario did not converge under both orders");
  o.require(d.ok(), "demo reported failure");
  return o;
}

struct Criterion {
  int id;
  std::string title;
  double limit_ms;  // 0: no limit
  std::function<Result()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "concurrent Ins/Del with transformation reach \"effect\"", 1'000, fig2},
      {2, "the same ops without transformation diverge", 0, fig1},
      {3, "cells pass CP1 and CP2 non-vacuously", 5'000, primitives},
      {4, "literal set fails CP1 with the add/remove witness, guarded set passes", 5'000, set_dichotomy},
      {5, "set of character cells: Update examples and consistency parts pass", 30'000, setchar_theorems},
      {6, "distinct-target Updates commute on sets and words", 30'000, commutation},
      {7, "simulator convergence agrees with CP1/CP2", 60'000, oracle_equivalence},
      {8, "STRING CP2 report matches the committed fixture and replays", 0, string_fixture},
      {9, "document tower builds and its FWORD scenario converges", 10'000, document},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit_ms > 0 && ms > c.limit_ms) {
      o.ok = false;
      o.detail = "over the " + std::to_string(static_cast<int>(c.limit_ms)) + " ms limit";
    }
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << static_cast<long>(ms)
         << " ms";
    if (c.limit_ms > 0) line << ", limit " << static_cast<long>(c.limit_ms) << " ms";
    line << ")";
    if (!o.ok) line << " -- " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.ok) ++failed;
  }
  return failed;
}
