#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "../oracle.hpp"
#include "pbz/axioms.hpp"
#include "pbz/error.hpp"
#include "pbz/io/commands.hpp"
#include "pbz/logic_spec.hpp"
#include "pbz/seven_logic.hpp"

namespace {

using namespace pbz;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Sweep {
  std::vector<KnowledgeBase> kbs;
};

// All partitions of universes of size 1..4.
Sweep sweep() {
  Sweep s;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto& kb : enumerate_partitions(Universe::of_size(n))) s.kbs.push_back(std::move(kb));
  }
  return s;
}

template <class Fn>
void each_case(const Sweep& s, Fn&& fn) {
  for (const auto& kb : s.kbs) {
    for_each_orthopair(kb.universe(), [&](const Orthopair& p) { fn(kb, p); });
  }
}

Outcome certification(const Sweep& s) {
  std::size_t violations = 0, reports = 0;
  std::ostringstream first;
  for (const auto& kb : s.kbs) {
    for (const auto& r : check_all(kb)) {
      ++reports;
      if (r.status != AxiomStatus::holds || !r.exhaustive) {
        if (violations++ == 0) first << " first: " << to_string(r.axiom);
      }
    }
  }
  // The sweep itself is checked against independently enumerated partitions.
  std::size_t expected = 0;
  for (std::size_t n = 1; n <= 4; ++n) expected += oracle::all_partitions(n).size();
  const bool count_ok = s.kbs.size() == 23 && expected == 23;
  std::ostringstream d;
  d << s.kbs.size() << " knowledge bases, " << reports << " axiom reports, " << violations
    << " violations" << first.str();
  return {violations == 0 && count_ok && reports == 23 * kAxioms.size(), d.str()};
}

Outcome seven_way(const Sweep& s) {
  std::size_t cases = 0, violations = 0;
  each_case(s, [&](const KnowledgeBase& kb, const Orthopair& p) {
    ++cases;
    const auto sp = seven_partition(kb, p);
    const auto m = oracle::from(kb);
    const auto op = oracle::from(p);
    oracle::Set seen;
    bool ok = true;
    std::size_t total = 0;
    for (auto v : kTruthValues) {
      const auto got = oracle::to_set(sp[v]);
      if (got != oracle::part(m, op, v)) ok = false;
      total += got.size();
      seen.insert(got.begin(), got.end());
    }
    if (!ok || total != m.n || seen != oracle::all(m.n)) ++violations;
  });
  return {violations == 0, std::to_string(cases) + " orthopairs, " + std::to_string(violations) +
                               " violations"};
}

Outcome formulations(const Sweep& s) {
  std::size_t checks = 0, violations = 0;
  each_case(s, [&](const KnowledgeBase& kb, const Orthopair& p) {
    const auto m = oracle::from(kb);
    const auto op = oracle::from(p);
    for (auto v : kTruthValues) {
      const auto expected = oracle::part(m, op, v);
      for (auto f : kFormulations) {
        ++checks;
        if (oracle::to_set(part(kb, p, v, f)) != expected) ++violations;
      }
      for (auto d : {Direction::upward, Direction::downward}) {
        const auto agg = oracle::aggregate(m, op, v, d);
        for (auto f : kFormulations) {
          ++checks;
          if (oracle::to_set(aggregate_part(kb, p, v, d, f)) != agg) ++violations;
        }
      }
    }
  });
  return {violations == 0, "7 parts and 14 aggregations x 3 formulations, " +
                               std::to_string(checks) + " comparisons, " +
                               std::to_string(violations) + " violations"};
}

Outcome belnap(const Sweep& s) {
  const LogicSpec spec = *find_logic("belnap");
  std::size_t cases = 0, violations = 0;
  each_case(s, [&](const KnowledgeBase& kb, const Orthopair& p) {
    ++cases;
    const auto m = oracle::from(kb);
    const auto op = oracle::from(p);
    const auto u = oracle::all(m.n);
    const auto up_a = oracle::upper(m, op.a);
    const auto up_b = oracle::upper(m, op.b);
    const std::array<oracle::Set, 4> closed{
        oracle::inter(up_a, oracle::lower(m, oracle::minus(u, op.b))),
        oracle::minus(oracle::minus(u, up_a), up_b),
        oracle::inter(up_a, up_b),
        oracle::inter(up_b, oracle::lower(m, oracle::minus(u, op.a)))};
    const auto assignment = evaluate_logic(kb, p, spec);
    const auto seven = seven_partition(kb, p);
    for (std::size_t x = 0; x < m.n; ++x) {
      const auto arg = static_cast<std::size_t>(belnap_from_arguments(kb, p, x));
      std::size_t merged = 0;
      switch (seven.value_of(x)) {
        case TruthValue::T: case TruthValue::sT: merged = 0; break;
        case TruthValue::U: merged = 1; break;
        case TruthValue::K: case TruthValue::fK: merged = 2; break;
        case TruthValue::sF: case TruthValue::F: merged = 3; break;
      }
      std::size_t closed_index = 4, hits = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        if (closed[i].count(x)) {
          closed_index = i;
          ++hits;
        }
      }
      const auto label = assignment.label_of(x);
      if (arg != merged || closed_index != merged || hits != 1 ||
          label != to_string(static_cast<BelnapValue>(merged))) {
        ++violations;
      }
    }
  });
  return {violations == 0, std::to_string(cases) + " orthopairs, four routes compared pointwise, " +
                               std::to_string(violations) + " violations"};
}

Outcome treatment(const Sweep& s) {
  std::size_t cases = 0, violations = 0;
  each_case(s, [&](const KnowledgeBase& kb, const Orthopair& p) {
    ++cases;
    const auto m = oracle::from(kb);
    const auto op = oracle::from(p);
    const auto u = oracle::all(m.n);
    const auto sp = seven_partition(kb, p);
    const auto treat = oracle::to_set(sp[TruthValue::T] | sp[TruthValue::sT]);
    const auto rest = oracle::minus(u, treat);
    const auto boundary = oracle::minus(oracle::minus(u, op.a), op.b);
    if (treat != oracle::inter(oracle::lower(m, oracle::minus(u, op.b)), oracle::upper(m, op.a)) ||
        rest != oracle::unite(oracle::upper(m, op.b), oracle::lower(m, boundary)) ||
        treat != oracle::to_set(upward_part(kb, p, TruthValue::sT))) {
      ++violations;
    }
  });
  return {violations == 0, std::to_string(cases) + " orthopairs, " + std::to_string(violations) +
                               " violations"};
}

io::RunConfig demo_config(const std::string& logic) {
  io::RunConfig cfg;
  cfg.input = std::string(PBZ_TEST_DATA_DIR) + "/demo.csv";
  cfg.logic = logic;
  return cfg;
}

Outcome worked_fixture() {
  const auto loaded = io::load_table(std::string(PBZ_TEST_DATA_DIR) + "/demo.csv", {});
  const auto m = oracle::from(loaded.kb);
  const auto op = oracle::from(loaded.target);
  const auto& u = loaded.kb.universe();
  auto ids = [&](const oracle::Set& s) {
    std::vector<std::string> out;
    for (auto i : s) out.push_back(u.id(i));
    return out;
  };
  using V = std::vector<std::string>;
  bool ok = true;
  for (auto v : kTruthValues) {
    V expected;
    if (v == TruthValue::T) expected = {"o1", "o2"};
    if (v == TruthValue::K) expected = {"o3", "o4"};
    if (v == TruthValue::sF) expected = {"o5", "o6"};
    ok = ok && ids(oracle::part(m, op, v)) == expected;
    ok = ok && part(loaded.kb, loaded.target, v).ids() == expected;
  }
  const auto triage = io::classify_command(demo_config("triage"));
  ok = ok && triage.labels == V{"hospitalize", "discharge", "expert"} &&
       triage.derived_counts == std::vector<std::size_t>{2, 2, 2};
  // Oracle triage: hospitalize = sT up, discharge = sF down, expert = the rest.
  const auto hosp = oracle::aggregate(m, op, TruthValue::sT, Direction::upward);
  const auto disc = oracle::aggregate(m, op, TruthValue::sF, Direction::downward);
  for (const auto& o : triage.objects) {
    const auto x = u.index_of(o.id);
    const std::string want = hosp.count(x) ? "hospitalize" : disc.count(x) ? "discharge" : "expert";
    ok = ok && o.derived == want;
  }
  return {ok, "T={o1,o2} K={o3,o4} sF={o5,o6}; triage 2/2/2; matches block oracle"};
}

Outcome mutations() {
  std::size_t detected = 0;
  std::ostringstream d;
  const auto kbs = enumerate_partitions(Universe::of_size(3));
  for (auto mutation : kMutations) {
    bool found = false, witness_ok = true;
    std::string axiom;
    for (const auto& kb : kbs) {
      for (const auto& r : check_all(kb, {}, mutation)) {
        if (r.status != AxiomStatus::counterexample) continue;
        if (!found) axiom = std::string(to_string(r.axiom));
        found = true;
        witness_ok = witness_ok && violates(kb, r.axiom, r.witness, mutation) &&
                     !violates(kb, r.axiom, r.witness, Mutation::none);
      }
    }
    if (found && witness_ok) ++detected;
    d << ' ' << to_string(mutation) << (found && witness_ok ? ":" + axiom : ":SILENT");
  }
  return {detected == kMutations.size(),
          std::to_string(detected) + "/" + std::to_string(kMutations.size()) + " detected," +
              d.str()};
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(PBZ_CLI) + " " + args;
  std::FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + cmd);
  std::string out;
  char buffer[4096];
  std::size_t n;
  while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, n);
  pclose(pipe);
  return out;
}

Outcome cli_round_trip() {
  bool ok = true;
  std::size_t reports = 0;
  const std::string input = std::string(PBZ_TEST_DATA_DIR) + "/demo.csv";
  for (const char* logic : {"seven", "treatment", "triage", "diagnosis", "belnap"}) {
    const auto cfg = demo_config(logic);
    const auto first = io::classify_command(cfg);
    const auto second = io::classify_command(cfg);
    for (auto format : {io::OutputFormat::text, io::OutputFormat::json}) {
      ++reports;
      const auto a = io::render(first, format);
      ok = ok && a == io::render(second, format);
      const std::string flags = std::string("classify -i ") + input + " -l " + logic + " -f " +
                                (format == io::OutputFormat::json ? "json" : "text");
      const auto cli1 = run_cli(flags);
      const auto cli2 = run_cli(flags);
      ok = ok && cli1 == cli2 && cli1 == a;
    }
    const auto parsed =
        io::classification_report_from_json(io::Json::parse(io::render(first, io::OutputFormat::json)));
    ok = ok && parsed == first;
  }
  return {ok, std::to_string(reports) + " renderings byte-identical across runs and processes; "
                                        "JSON re-parse equal"};
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const Sweep s = sweep();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"axiom certification on all partitions, |U| 1-4", [&] { return certification(s); }},
      {"seven-way partition", [&] { return seven_way(s); }},
      {"three-formulation agreement", [&] { return formulations(s); }},
      {"Belnap equivalence", [&] { return belnap(s); }},
      {"treatment identity", [&] { return treatment(s); }},
      {"six-object worked fixture", worked_fixture},
      {"mutation sensitivity on |U|=3", mutations},
      {"CLI determinism and round-trip", cli_round_trip},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
              << " (" << o.detail << ")\n";
  }
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "elapsed " << secs << " s\n";
  return failures == 0 ? 0 : 1;
}
