// Acceptance gate: one PASS/FAIL line per criterion, each checked against its
// tolerance (all exact) and its time limit. Exit status is nonzero if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "occat/calculus.hpp"
#include "occat/classify.hpp"
#include "occat/cli.hpp"
#include "occat/error.hpp"
#include "occat/textio.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace occat;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

const BraneSet kOne;
const BraneSet kAB({"a", "b"});

std::size_t max_alpha(const Cobordism& c) {
  return std::max(c.source.alpha(), c.target.alpha());
}

Outcome realizer_datum() {
  Outcome r;
  GeneralObject n = GeneralObject::from_bits({0, 1, 1, 1})
                        .with_sigma(Permutation::from_cycles({2, 3, 4}, {{2, 3}, {4}}));
  r.require(boundary_permutation(realize(n)) == n.sigma(), "boundary permutation differs");
  r.require(c_number(n) == 4, "c_number != 4");
  r.detail = "sigma=" + boundary_permutation(realize(n)).to_string() +
             " c=" + std::to_string(c_number(n));
  return r;
}

Outcome torus_data() {
  Outcome r;
  for (const BraneSet& b : {kOne, kAB, BraneSet({"x", "y", "z"})}) {
    auto s = invariant_summary(make_T(b));
    r.require(s.component_count == 1 && s.total_genus == 1 &&
                  s.total_windows == BraneCounts(b.size(), 1),
              "make_T invariants wrong for |B|=" + std::to_string(b.size()));
  }
  for (const BraneSet& b : {kOne, kAB}) {
    Cobordism annulus = realize(GeneralObject::circle(b));
    for (unsigned k = 0; k <= 5; ++k) {
      auto s = invariant_summary(stabilize(annulus, k));
      r.require(s.component_count == 1 && s.total_genus == k &&
                    s.total_windows == BraneCounts(b.size(), k),
                "stabilize^" + std::to_string(k) + " wrong");
    }
  }
  if (r.ok) r.detail = "T: g=1 w_b=1; stabilize^k: g=k w_b=k for k<=5";
  return r;
}

Outcome euler_conservation() {
  Outcome r;
  std::size_t pairs = 0;
  for (int round = 0; pairs < 1200; ++round) {
    testing::CobordismGen gen(1000 + round, round % 2 ? kAB : kOne);
    for (int i = 0; i < 100; ++i) {
      Cobordism f = gen.any();
      Cobordism s = gen.from(f.target);
      if (max_alpha(f) > 6 || max_alpha(s) > 6) continue;
      ++pairs;
      Cobordism sf = compose(s, f);
      long expected = euler_char_total(f) + euler_char_total(s) -
                      static_cast<long>(f.target.alpha());
      r.require(euler_char_total(sf) == expected, "chi not conserved");
      r.require(validate(sf).empty(), "composite fails validation");
      for (const auto& comp : sf.components) {
        long chi = euler_char(comp);
        long b = static_cast<long>(comp.boundary.size());
        r.require((2 - chi - b) >= 0 && (2 - chi - b) % 2 == 0 &&
                      (2 - chi - b) / 2 == static_cast<long>(comp.genus),
                  "component genus not a nonnegative integer");
      }
    }
  }
  if (r.ok) r.detail = std::to_string(pairs) + " composable pairs";
  return r;
}

Outcome category_laws() {
  Outcome r;
  const int n = 500;
  std::map<std::string, int> counts;
  auto law = [&](const std::string& name, bool holds) {
    ++counts[name];
    r.require(holds, name + " fails");
  };
  for (int i = 0; i < n; ++i) {
    testing::CobordismGen gen(2000 + i, i % 2 ? kAB : kOne);
    Cobordism f = gen.any();
    Cobordism s = gen.from(f.target);
    Cobordism t = gen.from(s.target);
    Cobordism u = gen.any();
    Cobordism v = gen.from(u.target);
    law("associativity", is_isomorphic(compose(t, compose(s, f)), compose(compose(t, s), f)));
    law("left unit", is_isomorphic(compose(identity(f.target), f), f));
    law("right unit", is_isomorphic(compose(f, identity(f.source)), f));
    law("interchange", is_isomorphic(tensor(compose(s, f), compose(v, u)),
                                     compose(tensor(s, v), tensor(f, u))));
    Cobordism e = empty_cobordism(gen.branes());
    law("tensor unit", is_isomorphic(tensor(e, f), f) && is_isomorphic(tensor(f, e), f));
    law("swap involutive",
        is_isomorphic(compose(swap_cobordism(u.source, f.source), swap_cobordism(f.source, u.source)),
                      identity(object_tensor(f.source, u.source))));
    law("swap naturality",
        is_isomorphic(compose(swap_cobordism(f.target, u.target), tensor(f, u)),
                      compose(tensor(u, f), swap_cobordism(f.source, u.source))));
  }
  if (r.ok) {
    r.detail = std::to_string(counts.size()) + " laws x " + std::to_string(n) + " instances";
  }
  return r;
}

Outcome pullback_contract() {
  Outcome r;
  std::size_t functorial = 0;
  std::size_t independent = 0;
  std::size_t identities = 0;
  for (int i = 0; functorial < 500 || independent < 500 || identities < 500; ++i) {
    testing::CobordismGen gen(3000 + i, i % 2 ? kAB : kOne);
    Cobordism f = gen.any();
    Cobordism s = gen.from(f.target);
    if (auto tau = gen.coherent_sigma(s.target)) {
      ++functorial;
      r.require(pullback(compose(s, f), *tau) == pullback(f, pullback(s, *tau)),
                "functoriality fails");
      Cobordism realizer = realize(s.target.with_sigma(*tau));
      const Permutation direct = pullback(s, *tau);
      for (unsigned k = 1; k <= 3; ++k) {
        r.require(pullback_with(s, stabilize(realizer, k)) == direct,
                  "realizer dependence at k=" + std::to_string(k));
      }
      ++independent;
    }
    GeneralObject obj = gen.object(2, 4);
    if (is_brane_coherent(obj)) {
      ++identities;
      r.require(pullback(identity(obj), obj.sigma()) == obj.sigma(), "pullback(id) != id");
    }
    if (i > 100000) {
      r.fail("could not find enough instances");
      break;
    }
  }
  if (r.ok) {
    r.detail = std::to_string(functorial) + " functoriality, " + std::to_string(independent) +
               " realizer (k=1..3), " + std::to_string(identities) + " identity instances";
  }
  return r;
}

Outcome classification() {
  Outcome r;
  const unsigned G = 2;
  const unsigned W = 2;
  std::size_t objects = 0;
  std::size_t surfaces = 0;
  std::size_t mismatches = 0;
  for (const BraneSet& branes : {kOne, kAB}) {
    for (const auto& obj : testing::all_objects(branes, 3, 1)) {
      ++objects;
      std::map<Cobordism, testing::ClassKey> by_form;
      std::map<testing::ClassKey, Cobordism> by_key;
      for (const auto& lab : testing::brute_force_connected(obj, G, W)) {
        ++surfaces;
        Cobordism form = canonical(lab.cobordism);
        auto [it, fresh] = by_form.emplace(form, lab.key);
        if (!fresh && it->second != lab.key) ++mismatches;
        auto [kt, kfresh] = by_key.emplace(lab.key, form);
        if (!kfresh && kt->second != form) ++mismatches;
      }
      if (!is_brane_coherent(obj)) {
        bool threw = false;
        try {
          enumerate_classes(obj, G, W);
        } catch (const InfeasibleError&) {
          threw = true;
        }
        r.require(threw, "enumerate_classes accepted an incoherent object");
        continue;
      }
      for (unsigned g = 0; g <= G; ++g) {
        for (unsigned w = 0; w <= W; ++w) {
          std::size_t expected = g + 1;
          for (std::size_t b = 0; b < branes.size(); ++b) expected *= w + 1;
          r.require(enumerate_classes(obj, g, w).size() == expected,
                    "enumerate_classes count wrong");
        }
      }
      std::set<Cobordism> brute;
      for (const auto& [form, key] : by_form) {
        if (std::get<2>(key) == obj.sigma()) brute.insert(form);
      }
      std::set<Cobordism> listed;
      for (const auto& cf : enumerate_classes(obj, G, W)) listed.insert(cf.cobordism);
      if (brute != listed) ++mismatches;
    }
  }
  r.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  if (r.ok) {
    r.detail = std::to_string(objects) + " objects, " + std::to_string(surfaces) +
               " surfaces, 0 mismatches";
  }
  return r;
}

Outcome b_condition() {
  Outcome r;
  GeneralObject circle = GeneralObject::circle(kOne);
  GeneralObject none = GeneralObject::empty(kOne);
  Cobordism cap{circle, none, {{0, {InClosed{1}}}}};
  r.require(!in_b_subcategory(cap), "closed cap flagged as b");
  GeneralObject strip = GeneralObject::from_bits({1});
  Cobordism half_disc{strip, none, {{0, {Mixed{{incoming(1), Arc{Brane{0}}}}}}}};
  r.require(!in_b_subcategory(half_disc), "open cap flagged as b");
  r.require(in_b_subcategory(identity(circle)) && in_b_subcategory(make_T(kOne)),
            "cylinder or T not flagged as b");
  r.require(!in_b_subcategory(tensor(cap, identity(circle))), "tensor with cap flagged as b");

  testing::GenConfig cfg;
  cfg.b_only = true;
  std::size_t n = 0;
  for (int i = 0; i < 500; ++i) {
    testing::CobordismGen gen(4000 + i, i % 2 ? kAB : kOne, cfg);
    Cobordism f = gen.any();
    Cobordism s = gen.from(f.target);
    r.require(in_b_subcategory(f) && in_b_subcategory(s), "generator left the subcategory");
    r.require(in_b_subcategory(compose(s, f)), "compose leaves the subcategory");
    r.require(in_b_subcategory(tensor(s, f)), "tensor leaves the subcategory");
    ++n;
  }
  if (r.ok) r.detail = "cap tests + " + std::to_string(n) + " b-member pairs";
  return r;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Outcome round_trip() {
  Outcome r;
  const fs::path root = OCCAT_CORPUS_DIR;
  std::size_t good = 0;
  for (const auto& entry : fs::directory_iterator(root / "good")) {
    ++good;
    const std::string name = entry.path().filename().string();
    ParseResult parsed = parse(read_file(entry.path()));
    if (!parsed.ok()) {
      r.fail(name + " does not parse");
      continue;
    }
    const std::string text = serialize(*parsed.document);
    ParseResult again = parse(text);
    r.require(again.ok() && *again.document == canonical(*parsed.document),
              name + ": reparse differs");
    r.require(again.ok() && serialize(*again.document) == text, name + ": not byte-stable");
  }
  r.require(good >= 50, "only " + std::to_string(good) + " corpus files");

  std::size_t bad = 0;
  const std::regex position(R"(:[0-9]+:[0-9]+: )");
  for (const auto& entry : fs::directory_iterator(root / "bad")) {
    ++bad;
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli({"occat", "check", entry.path().string()}, out, err);
    const std::string name = entry.path().filename().string();
    r.require(code == kExitUsage, name + ": exit " + std::to_string(code));
    r.require(std::regex_search(err.str(), position), name + ": no position");
  }
  r.require(bad >= 20, "only " + std::to_string(bad) + " malformed files");
  if (r.ok) {
    r.detail = std::to_string(good) + " files round-trip, " + std::to_string(bad) +
               " malformed files exit 2";
  }
  return r;
}

struct Criterion {
  int number;
  const char* name;
  double limit_ms;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "realizer datum", 1, realizer_datum},
      {2, "T / T_B data and stabilization", 10, torus_data},
      {3, "Euler conservation", 5000, euler_conservation},
      {4, "category laws", 30000, category_laws},
      {5, "pullback contract", 20000, pullback_contract},
      {6, "classification oracle", 60000, classification},
      {7, "b-condition", 5000, b_condition},
      {8, "DSL round-trip", 5000, round_trip},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (ms >= c.limit_ms) o.fail("over time limit");
    failures += o.ok ? 0 : 1;
    std::printf("[%s] %d. %s (%.3f ms, limit %.0f ms): %s\n", o.ok ? "PASS" : "FAIL", c.number,
                c.name, ms, c.limit_ms, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
