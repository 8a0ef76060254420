#include "otcomp/simulator.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "otcomp/error.hpp"
#include "otcomp/expression.hpp"
#include "otcomp/kernel.hpp"

namespace otcomp {
namespace {

constexpr std::size_t kMaxPermutedOps = 6;

[[noreturn]] void bad_scenario(const std::string& msg) { throw Error(ErrorCode::kInvalidScenario, msg); }

bool is_index(const Json& j) { return j.is_number_integer() && j.get<std::int64_t>() >= 0; }

}  // namespace

Scenario load_scenario(const Json& j, const Bounds& b) {
  if (!j.is_object()) bad_scenario("scenario must be a JSON object");
  for (const char* key : {"component", "base", "ops"}) {
    if (!j.contains(key)) bad_scenario(std::string("missing \"") + key + "\"");
  }
  if (!j["component"].is_string()) bad_scenario("\"component\" must be an expression string");
  if (!j["ops"].is_array()) bad_scenario("\"ops\" must be an array");

  Scenario s;
  s.expression = j["component"].get<std::string>();
  s.component = build_expression(s.expression, b);
  s.base = s.component->decode_state(j["base"]);

  for (const auto& op : j["ops"]) {
    if (!op.is_object() || !op.contains("site") || !op.contains("method")) {
      bad_scenario("each op needs \"site\" and \"method\"");
    }
    if (!is_index(op["site"])) bad_scenario("op \"site\" must be a nonnegative integer");
    ScenarioOp o;
    o.site = op["site"].get<SiteId>();
    o.method = decode_method(*s.component, op["method"], o.site);
    s.ops.push_back(std::move(o));
  }

  if (j.contains("delivery")) {
    const auto& d = j["delivery"];
    if (d.is_string()) {
      if (d.get<std::string>() != "all") bad_scenario("\"delivery\" must be \"all\" or a list of permutations");
    } else if (d.is_array()) {
      for (const auto& perm : d) {
        if (!perm.is_array()) bad_scenario("each delivery entry must be an array of op indices");
        std::vector<std::size_t> order;
        for (const auto& i : perm) {
          if (!is_index(i)) bad_scenario("delivery indices must be nonnegative integers");
          order.push_back(i.get<std::size_t>());
        }
        s.delivery.push_back(std::move(order));
      }
    } else {
      bad_scenario("\"delivery\" must be \"all\" or a list of permutations");
    }
  }
  if (j.contains("transform")) {
    if (!j["transform"].is_boolean()) bad_scenario("\"transform\" must be a boolean");
    s.transform = j["transform"].get<bool>();
  }
  return s;
}

Scenario load_scenario_file(const std::filesystem::path& path, const Bounds& b) {
  std::ifstream in(path);
  if (!in) bad_scenario("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad_scenario(path.string() + ": " + e.what());
  }
  return load_scenario(j, b);
}

PermutationRun integrate(const Component& c, const State& base, const std::vector<Method>& ops,
                         const std::vector<std::size_t>& order, bool with_transform) {
  PermutationRun run;
  run.order = order;
  State st = base;
  MethodSeq executed;
  for (auto idx : order) {
    Method m = with_transform ? transform_seq(c, ops.at(idx), executed) : ops.at(idx);
    TraceStep step{idx, m, false};
    if (enabled(c, m, st)) {
      st = apply(c, m, st);
      executed.push_back(m);
      step.applied = true;
    } else {
      run.fully_legal = false;
    }
    run.trace.push_back(std::move(step));
  }
  run.final_state = st;
  return run;
}

RunReport run_scenario(const Scenario& s) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!s.component) bad_scenario("scenario has no component");
  std::set<SiteId> sites;
  for (const auto& op : s.ops) {
    if (!sites.insert(op.site).second) {
      bad_scenario("site " + std::to_string(op.site) + " issues more than one op in the batch");
    }
  }

  std::vector<std::vector<std::size_t>> orders = s.delivery;
  if (orders.empty()) {
    if (s.ops.size() > kMaxPermutedOps) {
      throw Error(ErrorCode::kTooManyPermutations,
                  std::to_string(s.ops.size()) + " ops; all-permutation delivery is limited to " +
                      std::to_string(kMaxPermutedOps) + ", list the orders explicitly");
    }
    std::vector<std::size_t> order(s.ops.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      orders.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
  } else {
    for (const auto& order : orders) {
      auto sorted = order;
      std::sort(sorted.begin(), sorted.end());
      bool ok = sorted.size() == s.ops.size();
      for (std::size_t i = 0; ok && i < sorted.size(); ++i) ok = sorted[i] == i;
      if (!ok) bad_scenario("each delivery entry must be a permutation of the " + std::to_string(s.ops.size()) + " op indices");
    }
  }

  std::vector<Method> ops;
  for (const auto& op : s.ops) ops.push_back(op.method);

  RunReport r;
  r.component = s.component->name();
  for (const auto& order : orders) {
    r.runs.push_back(integrate(*s.component, s.base, ops, order, s.transform));
    r.partially_legal = r.partially_legal || !r.runs.back().fully_legal;
  }
  for (std::size_t i = 1; i < r.runs.size() && r.converged; ++i) {
    if (r.runs[i].final_state != r.runs[0].final_state) {
      r.converged = false;
      r.divergence = {0, i};
    }
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Json to_json(const Component& c, const RunReport& r, bool with_elapsed) {
  Json j;
  j["component"] = r.component;
  j["converged"] = r.converged;
  j["partially_legal"] = r.partially_legal;
  j["runs"] = Json::array();
  for (const auto& run : r.runs) {
    Json jr;
    jr["order"] = run.order;
    jr["final"] = c.encode_state(run.final_state);
    jr["fully_legal"] = run.fully_legal;
    jr["trace"] = Json::array();
    for (const auto& step : run.trace) {
      jr["trace"].push_back(
          Json{{"op", step.op}, {"delivered", c.encode_method(step.delivered)}, {"applied", step.applied}});
    }
    j["runs"].push_back(std::move(jr));
  }
  if (r.divergence) {
    j["divergence"] = Json::array({r.divergence->first, r.divergence->second});
  } else {
    j["divergence"] = nullptr;
  }
  if (with_elapsed) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string to_text(const RunReport& r) {
  std::ostringstream out;
  out << r.component << ": " << (r.converged ? "converged" : "diverged") << " over " << r.runs.size()
      << " delivery order(s)";
  if (r.partially_legal) out << ", some delivered ops were skipped";
  out << "\n";
  for (const auto& run : r.runs) {
    out << "  order";
    for (auto i : run.order) out << " " << i;
    out << ": " << to_string(run.final_state) << "\n";
    for (const auto& step : run.trace) {
      out << "    op " << step.op << " as " << to_string(step.delivered) << (step.applied ? "" : " (skipped)")
          << "\n";
    }
  }
  return out.str();
}

}  // namespace otcomp
