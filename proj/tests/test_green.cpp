#include <doctest.h>

#include "cellalg/errors.hpp"
#include "cellalg/green.hpp"
#include "structural.hpp"

using namespace cellalg;

namespace {

  FiniteMonoid trivial_monoid() {
    return FiniteMonoid::from_cayley_table(1, 0, {{0}}, {});
  }

  std::vector<FiniteMonoid> test_monoids() {
    std::vector<FiniteMonoid> out{trivial_monoid(), null_extension_monoid()};
    for (auto [f, n] : std::vector<std::pair<Family, unsigned>>{
             {Family::tfull, 2}, {Family::tfull, 3}, {Family::tpartial, 2}, {Family::tpartial, 3},
             {Family::syminv, 2}, {Family::syminv, 3}, {Family::jones, 3}, {Family::jones, 4}}) {
      out.push_back(family(f, n).monoid);
    }
    return out;
  }

}  // namespace

TEST_CASE("trivial monoid has one class of everything") {
  auto m = trivial_monoid();
  auto g = compute_green(m);
  CHECK(g.num_dclasses() == 1);
  CHECK(g.hmembers.size() == 1);
  auto box = build_eggbox(m, g, 0);
  CHECK(box.gamma == 0);
  auto grp = schutzenberger(m, box);
  CHECK(grp.order() == 1);
  auto w = right_action(m, box, grp, 0, 0, 0);
  REQUIRE(w);
  CHECK(w->k == 0);
  CHECK(w->g == grp.identity);
}

TEST_CASE("Green structure of T_2 and T_3") {
  auto t2 = family(Family::tfull, 2).monoid;
  auto g2 = compute_green(t2);
  CHECK(g2.num_dclasses() == 2);
  auto t3 = family(Family::tfull, 3).monoid;
  auto g3 = compute_green(t3);
  REQUIRE(g3.num_dclasses() == 3);
  // Classes by rank: 6 permutations, 18 of rank 2 (3 x 3 x S_2), 3 constants.
  std::multiset<std::tuple<std::size_t, std::size_t, std::size_t>> shapes;
  for (std::size_t d = 0; d < 3; ++d) {
    auto box = build_eggbox(t3, g3, d);
    shapes.insert({box.num_rows(), box.num_cols(), box.h_size()});
  }
  CHECK(shapes == std::multiset<std::tuple<std::size_t, std::size_t, std::size_t>>{
                      {1, 1, 6}, {3, 3, 2}, {1, 3, 1}});
}

TEST_CASE("identity D-class uses the identity as base") {
  for (auto const& m : test_monoids()) {
    auto g   = compute_green(m);
    auto box = build_eggbox(m, g, g.dclass[m.identity()]);
    CHECK(box.gamma == m.identity());
    CHECK(box.a[0] == m.identity());
    CHECK(box.b[0] == m.identity());
    auto grp = schutzenberger(m, box);
    auto id  = matched(m, box, grp, 0, 0);
    REQUIRE(id);
    CHECK(*id == grp.identity);
  }
}

TEST_CASE("structural invariants on every test monoid") {
  for (auto const& m : test_monoids()) {
    CAPTURE(m.size());
    CHECK(structural::all_checks(m) == "");
  }
}

TEST_CASE("null D-class of the nonregular monoid") {
  auto m = null_extension_monoid();
  auto g = compute_green(m);
  REQUIRE(g.num_dclasses() == 3);
  auto box = build_eggbox(m, g, g.dclass[1]);
  auto grp = schutzenberger(m, box);
  CHECK_FALSE(matched(m, box, grp, 0, 0));
  CHECK_FALSE(bijection_condition(m, box, grp));
}

TEST_CASE("bijection condition holds for inverse monoids") {
  auto m = family(Family::syminv, 3).monoid;
  auto g = compute_green(m);
  for (std::size_t d = 0; d < g.num_dclasses(); ++d) {
    auto box = build_eggbox(m, g, d);
    auto grp = schutzenberger(m, box);
    auto f   = bijection_condition(m, box, grp);
    REQUIRE(f);
    for (std::size_t j = 0; j < box.num_cols(); ++j) {
      CHECK(matched(m, box, grp, (*f)[j], j));
    }
  }
}

TEST_CASE("property: D-classes sharing a regular element have a matched pair") {
  for (auto const& m : test_monoids()) {
    auto g    = compute_green(m);
    auto idem = idempotents(m);
    for (std::size_t d = 0; d < g.num_dclasses(); ++d) {
      auto box = build_eggbox(m, g, d);
      auto grp = schutzenberger(m, box);
      bool has_idempotent = std::any_of(idem.begin(), idem.end(),
                                        [&box](element_index e) { return box.contains(e); });
      bool has_match      = false;
      for (std::size_t i = 0; i < box.num_rows(); ++i) {
        for (std::size_t j = 0; j < box.num_cols(); ++j) {
          has_match |= matched(m, box, grp, i, j).has_value();
        }
      }
      CHECK(has_idempotent == has_match);
    }
  }
}

TEST_CASE("greatest section also satisfies the group laws") {
  auto m = family(Family::tfull, 3).monoid;
  auto g = compute_green(m);
  for (std::size_t d = 0; d < g.num_dclasses(); ++d) {
    auto box = build_eggbox(m, g, d);
    auto grp = schutzenberger(m, box, SectionChoice::greatest);
    CHECK(structural::group_laws(m, box, grp) == "");
    CHECK(structural::action_maps(m, box, grp) == "");
  }
}

TEST_CASE("action queries outside the egg-box are rejected") {
  auto m   = family(Family::tfull, 2).monoid;
  auto g   = compute_green(m);
  auto box = build_eggbox(m, g, 0);
  auto grp = schutzenberger(m, box);
  CHECK_THROWS_AS(right_action(m, box, grp, 5, 0, 0), InvalidCell);
  CHECK_THROWS_AS(left_action(m, box, grp, 0, 5, 0), InvalidCell);
}
