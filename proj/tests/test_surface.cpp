#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "occat/calculus.hpp"
#include "occat/classify.hpp"
#include "occat/error.hpp"
#include "occat/surface.hpp"
#include "support/generators.hpp"

using namespace occat;

namespace {

bool has_rule(const std::vector<Violation>& vs, const std::string& rule) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.rule == rule; });
}

const Arc kArc{Brane{0}};

Cobordism open_pants() {
  // (1,1) -> (1), single component.
  GeneralObject src = GeneralObject::from_bits({1, 1});
  GeneralObject tgt = GeneralObject::from_bits({1});
  Component comp{0, {Mixed{{incoming(1), kArc, incoming(2), kArc, outgoing(1), kArc}}}};
  return Cobordism{src, tgt, {comp}};
}

}  // namespace

TEST_CASE("validate accepts identities and T") {
  CHECK(validate(identity(GeneralObject::circle(BraneSet()))).empty());
  CHECK(validate(identity(GeneralObject::from_bits({1, 0, 1}))).empty());
  CHECK(validate(make_T(BraneSet({"a", "b"}))).empty());
  CHECK(validate(open_pants()).empty());
}

TEST_CASE("validate reports rule violations") {
  const GeneralObject src = GeneralObject::from_bits({1, 1});
  const GeneralObject circle = GeneralObject::circle(BraneSet());

  SUBCASE("alternation") {
    Cobordism c{src, circle, {{0, {Mixed{{incoming(1), incoming(2)}}, OutClosed{1}}}}};
    auto vs = validate(c);
    CHECK(has_rule(vs, "alternation"));
    CHECK(vs.front().component == 0u);
  }
  SUBCASE("odd length") {
    Cobordism c{src, circle, {{0, {Mixed{{incoming(1), kArc, incoming(2)}}, OutClosed{1}}}}};
    CHECK(has_rule(validate(c), "alternation"));
  }
  SUBCASE("duplicate interval use") {
    Cobordism c{src,
                circle,
                {{0, {Mixed{{incoming(1), kArc, incoming(2), kArc}}, OutClosed{1}}},
                 {0, {Mixed{{incoming(2), kArc}}}}}};
    CHECK(has_rule(validate(c), "duplicate interval use"));
  }
  SUBCASE("missing interval and circle") {
    Cobordism c{src, circle, {{0, {Mixed{{incoming(1), kArc}}}}}};
    auto vs = validate(c);
    CHECK(has_rule(vs, "missing interval"));
    CHECK(has_rule(vs, "missing circle"));
  }
  SUBCASE("bad reference") {
    Cobordism c{src, circle, {{0, {InClosed{1}, OutClosed{1}}}}};
    CHECK(has_rule(validate(c), "bad reference"));
  }
  SUBCASE("duplicate circle use") {
    Cobordism c{circle, circle, {{0, {InClosed{1}, OutClosed{1}}}, {0, {InClosed{1}}}}};
    CHECK(has_rule(validate(c), "duplicate circle use"));
  }
  SUBCASE("orientation") {
    Cobordism c{GeneralObject::from_bits({1}), circle,
                {{0, {Mixed{{IntervalRef{Side::Incoming, 1, true}, kArc}}, OutClosed{1}}}}};
    CHECK(has_rule(validate(c), "orientation"));
  }
  SUBCASE("arc brane") {
    const BraneSet ab({"a", "b"});
    GeneralObject one(ab, {Interval{Brane{0}, Brane{1}}});
    Cobordism c{one, GeneralObject::circle(ab),
                {{0, {Mixed{{incoming(1), Arc{Brane{0}}}}, OutClosed{1}}}}};
    CHECK(has_rule(validate(c), "arc brane"));
  }
  SUBCASE("brane set mismatch") {
    Cobordism c{GeneralObject::circle(BraneSet({"a"})), circle, {{0, {InClosed{1}, OutClosed{1}}}}};
    CHECK(has_rule(validate(c), "brane set"));
  }
  SUBCASE("closed components are allowed") {
    Cobordism c = identity(circle);
    c.components.push_back(Component{2, {}});
    CHECK(validate(c).empty());
  }
}

TEST_CASE("euler_char and genus_from_euler") {
  const BraneSet one;
  CHECK(euler_char(make_T(one).components.at(0)) == -3);
  CHECK(euler_char(Component{0, {OutClosed{1}}}) == 1);
  CHECK(euler_char(Component{0, {InClosed{1}, InClosed{2}, OutClosed{1}}}) == -1);

  CHECK(genus_from_euler(-3, 3) == 1);
  CHECK(genus_from_euler(2, 0) == 0);
  CHECK(genus_from_euler(-6, 4) == 2);
  CHECK_THROWS_AS(genus_from_euler(-2, 3), std::logic_error);
  CHECK_THROWS_AS(genus_from_euler(2, 2), std::logic_error);
}

TEST_CASE("window_vector") {
  CHECK(window_vector(make_T(BraneSet())) == BraneCounts{1});
  CHECK(window_vector(make_T(BraneSet({"a", "b"}))) == BraneCounts{1, 1});
  CHECK(window_vector(identity(GeneralObject::from_bits({0, 1}))) == BraneCounts{0});
}

TEST_CASE("boundary_permutation") {
  GeneralObject n = GeneralObject::from_bits({0, 1, 1, 1});
  n = n.with_sigma(Permutation::from_cycles({2, 3, 4}, {{2, 3}, {4}}));
  CHECK(boundary_permutation(realize(n)) == n.sigma());
  CHECK(boundary_permutation(realize(n)).to_string() == "(2 3)(4)");

  const GeneralObject circle = GeneralObject::circle(BraneSet());
  Cobordism single{GeneralObject::from_bits({1}), circle,
                   {{0, {Mixed{{incoming(1), kArc}}, OutClosed{1}}}}};
  CHECK(boundary_permutation(single) == Permutation::identity({1}));

  Cobordism pair{GeneralObject::from_bits({1, 1}), circle,
                 {{0, {Mixed{{incoming(1), kArc, incoming(2), kArc}}, OutClosed{1}}}}};
  CHECK(boundary_permutation(pair) == Permutation::from_cycles({1, 2}, {{1, 2}}));

  // Disconnected: traced per circle.
  Cobordism split{GeneralObject::from_bits({1, 1}), circle,
                  {{0, {Mixed{{incoming(2), kArc}}, OutClosed{1}}}, {0, {Mixed{{incoming(1), kArc}}}}}};
  CHECK(boundary_permutation(split) == Permutation::identity({1, 2}));

  CHECK_THROWS_AS(boundary_permutation(identity(GeneralObject::from_bits({1}))),
                  PreconditionError);
}

TEST_CASE("in_b_subcategory") {
  const GeneralObject circle = GeneralObject::circle(BraneSet());
  CHECK(in_b_subcategory(make_T(BraneSet())));

  // Identity cylinder next to a cap: the cap has no outgoing boundary.
  GeneralObject two = GeneralObject::from_bits({0, 0});
  Cobordism with_cap{two, circle, {{0, {InClosed{1}, OutClosed{1}}}, {0, {InClosed{2}}}}};
  REQUIRE(validate(with_cap).empty());
  CHECK_FALSE(in_b_subcategory(with_cap));

  Cobordism pants{two, circle, {{0, {InClosed{1}, InClosed{2}, OutClosed{1}}}}};
  CHECK(in_b_subcategory(pants));
  CHECK(in_b_subcategory(open_pants()));
}

TEST_CASE("invariant_summary") {
  auto t = invariant_summary(make_T(BraneSet()));
  REQUIRE(t.components.size() == 1);
  CHECK(t.components[0].genus == 1);
  CHECK(t.components[0].windows == BraneCounts{1});
  CHECK(t.total_genus == 1);
  CHECK(t.total_windows == BraneCounts{1});

  auto id = invariant_summary(identity(GeneralObject::from_bits({0, 0})));
  CHECK(id.component_count == 2);
  for (const auto& c : id.components) {
    CHECK(c.genus == 0);
    CHECK(c.windows == BraneCounts{0});
  }

  auto tt = invariant_summary(compose(make_T(BraneSet()), make_T(BraneSet())));
  REQUIRE(tt.components.size() == 1);
  CHECK(tt.components[0].genus == 2);
  CHECK(tt.components[0].windows == BraneCounts{2});
}

TEST_CASE("surface invariants over random cobordisms") {
  testing::CobordismGen gen(11, BraneSet({"a", "b"}));
  testing::CobordismGen gen1(12, BraneSet());
  for (int trial = 0; trial < 400; ++trial) {
    auto& g = trial % 2 ? gen : gen1;
    Cobordism c = g.any();
    REQUIRE(validate(c).empty());
    for (const auto& comp : c.components) {
      const long twice = 2 - euler_char(comp) - static_cast<long>(comp.boundary.size());
      CHECK(twice >= 0);
      CHECK(twice % 2 == 0);
    }
    Cobordism s = g.shuffled(c);
    CHECK(window_vector(s) == window_vector(c));
    CHECK(invariant_summary(s) == invariant_summary(c));

    if (!g.coherent_sigma(c.source)) continue;
    Cobordism r = g.to_circle(c.source);
    REQUIRE(validate(r).empty());
    Permutation p = boundary_permutation(r);
    CHECK(p.domain() == c.source.interval_indices());
  }
}
