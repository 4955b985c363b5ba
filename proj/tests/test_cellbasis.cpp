#include <doctest.h>

#include <random>
#include <set>

#include "cellalg/cellbasis.hpp"
#include "cellalg/crosscheck.hpp"
#include "cellalg/errors.hpp"
#include "cellalg/verify.hpp"

using namespace cellalg;

namespace {

  FiniteMonoid trivial_monoid() {
    return FiniteMonoid::from_cayley_table(1, 0, {{0}}, {});
  }

  FiniteMonoid named(std::string const& name, unsigned n) {
    return family(parse_family(name), n).monoid;
  }

  // The node of D-class with |D| = dsize and group node gname.
  std::size_t find_node(MonoidCellDatum const& d, std::size_t dsize, std::string const& gname) {
    for (std::size_t k = 0; k < d.num_nodes(); ++k) {
      auto [dc, lambda] = d.source[k];
      if (d.green.dmembers[dc].size() == dsize && d.dclasses[dc].gdata.datum.node(lambda).name == gname) {
        return k;
      }
    }
    FAIL("node not found");
    return 0;
  }

  using Ints = std::vector<std::vector<long long>>;

  Analysis run(MonoidCellDatum const& d) {
    return analyze(d, MultiplicationOracle::monoid(d.monoid, d.field));
  }

  std::vector<std::pair<std::string, unsigned>> const kSmall{
      {"tfull", 2}, {"tfull", 3}, {"tpartial", 2}, {"tpartial", 3},
      {"syminv", 2}, {"syminv", 3}, {"jones", 3}, {"jones", 4}};

}  // namespace

TEST_CASE("datum of the trivial monoid") {
  auto d = build_standard_structure(trivial_monoid(), FieldSpec::rationals());
  REQUIRE(d.num_nodes() == 1);
  CHECK(d.datum.basis(0) == AlgebraElement::unit(d.field, 0));
  auto a = run(d);
  CHECK(a.lambda0.size() == 1);
  CHECK(a.quasi_hereditary);
  CHECK(a.semisimple);
  CHECK(irreducible_dims(a) == std::map<std::size_t, std::size_t>{{0, 1}});
}

TEST_CASE("datum and Grams of T_2") {
  auto d = build_standard_structure(named("tfull", 2), FieldSpec::rationals());
  REQUIRE(d.num_nodes() == 3);
  auto top = find_node(d, 2, "(2)"), sign = find_node(d, 2, "(1,1)"), low = find_node(d, 2, "*");
  CHECK(d.datum.node(low).lsize * d.datum.node(low).rsize == 2);
  CHECK(d.datum.greater(top, sign));
  CHECK(d.datum.greater(low, top));
  auto mult = MultiplicationOracle::monoid(d.monoid, d.field);
  CHECK(gram_definition(mult, d, top) == DenseMatrix::from_rows(d.field, Ints{{2}}));
  CHECK(gram_definition(mult, d, sign) == DenseMatrix::from_rows(d.field, Ints{{1}}));
  CHECK(gram_definition(mult, d, low) == DenseMatrix::from_rows(d.field, Ints{{1}, {1}}));
  auto a = run(d);
  CHECK(a.quasi_hereditary);
  CHECK_FALSE(a.semisimple);
  CHECK(a.sum_dims_squared == 3);
  REQUIRE(a.semisimple_failing);
  CHECK(a.nodes[*a.semisimple_failing].node == low);
}

TEST_CASE("I_2 has irreducible dimensions 1, 1, 2, 1") {
  auto d = build_standard_structure(named("syminv", 2), FieldSpec::rationals());
  CHECK(d.num_nodes() == 4);
  auto a = run(d);
  std::multiset<std::size_t> dims;
  for (auto [k, dim] : irreducible_dims(a)) {
    dims.insert(dim);
  }
  CHECK(dims == std::multiset<std::size_t>{1, 1, 1, 2});
  CHECK(a.sum_dims_squared == 7);
  CHECK(a.semisimple);
  auto mid = find_node(d, 4, "*");
  auto g   = a.nodes[mid].gram;
  CHECK(g.rows() == 2);
  CHECK(rank(g) == 2);
}

TEST_CASE("null D-class drops out of Lambda_0") {
  auto d = build_standard_structure(null_extension_monoid(), FieldSpec::rationals());
  auto a = run(d);
  CHECK(d.num_nodes() == 3);
  CHECK(a.lambda0.size() == 2);
  CHECK_FALSE(a.quasi_hereditary);
  REQUIRE(a.qh_failing.size() == 1);
  auto [dc, lambda] = d.source[a.qh_failing[0]];
  CHECK(d.green.dmembers[dc] == std::vector<element_index>{1});
  CHECK_FALSE(d.dclasses[dc].has_matched);
  CHECK(gram_fast(d, a.qh_failing[0]).is_zero());
  CHECK(all_passed(cross_check(d, a)));
}

TEST_CASE("cell coordinates") {
  auto d = build_standard_structure(named("tfull", 3), FieldSpec::rationals());
  CHECK(to_cell_coordinates(d, AlgebraElement(d.field)).empty());
  for (std::size_t k = 0; k < d.datum.size(); ++k) {
    auto c = to_cell_coordinates(d, d.datum.basis(k));
    REQUIRE(c.size() == 1);
    CHECK(c.begin()->first == k);
    CHECK(c.begin()->second.is_one());
  }
}

TEST_CASE("property: coordinates reconstruct random elements") {
  std::mt19937_64                           rng(7);
  std::uniform_int_distribution<long long> coef(-5, 5);
  for (auto f : {FieldSpec::rationals(), FieldSpec::prime(3)}) {
    auto d = build_standard_structure(named("tpartial", 2), f);
    for (int trial = 0; trial < 30; ++trial) {
      AlgebraElement x(f);
      for (std::size_t e = 0; e < d.monoid.size(); ++e) {
        if (rng() % 2) {
          x.add(e, Scalar(f, coef(rng)));
        }
      }
      AlgebraElement back(f);
      for (auto const& [k, c] : to_cell_coordinates(d, x)) {
        auto term = d.datum.basis(k);
        term *= c;
        back += term;
      }
      CHECK(back == x);
    }
  }
}

TEST_CASE("fast Gram matrices equal the definition") {
  for (auto f : {FieldSpec::rationals(), FieldSpec::prime(3), FieldSpec::prime(5)}) {
    for (auto const& [name, n] : kSmall) {
      CAPTURE(name);
      CAPTURE(n);
      auto d    = build_standard_structure(named(name, n), f);
      auto mult = MultiplicationOracle::monoid(d.monoid, f);
      for (std::size_t k = 0; k < d.num_nodes(); ++k) {
        CHECK(gram_fast(d, k) == gram_definition(mult, d, k));
      }
    }
  }
}

TEST_CASE("property: analysis invariants on every test monoid") {
  for (auto f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)}) {
    for (auto const& [name, n] : kSmall) {
      CAPTURE(name);
      CAPTURE(n);
      auto d = build_standard_structure(named(name, n), f);
      auto a = run(d);
      std::size_t count = 0;
      for (auto const& node : d.datum.nodes()) {
        count += node.lsize * node.rsize;
      }
      CHECK(count == d.monoid.size());
      CHECK(lambda0_via_groups(d) == a.lambda0);
      CHECK((!a.semisimple || a.quasi_hereditary));
      CHECK(a.semisimple == (a.sum_dims_squared == d.monoid.size()));
      auto checks = cross_check(d, a);
      for (auto const& c : checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.status != CheckStatus::fail);
      }
    }
  }
}

TEST_CASE("results do not depend on the choice of section") {
  for (auto const& [name, n] : kSmall) {
    CAPTURE(name);
    StructureOptions greatest;
    greatest.section = SectionChoice::greatest;
    auto d1 = build_standard_structure(named(name, n), FieldSpec::rationals());
    auto d2 = build_standard_structure(named(name, n), FieldSpec::rationals(), greatest);
    auto a1 = run(d1), a2 = run(d2);
    CHECK(a1.lambda0 == a2.lambda0);
    CHECK(a1.semisimple == a2.semisimple);
    REQUIRE(a1.nodes.size() == a2.nodes.size());
    for (std::size_t k = 0; k < a1.nodes.size(); ++k) {
      CHECK(a1.nodes[k].rank == a2.nodes[k].rank);
    }
  }
}

TEST_CASE("semisimplicity verdicts over Q agree with the trace form") {
  std::vector<std::tuple<std::string, unsigned, bool>> const cases{
      {"syminv", 1, true},   {"syminv", 2, true},    {"syminv", 3, true},  {"tfull", 2, false},
      {"tfull", 3, false},   {"tpartial", 2, false}, {"tpartial", 3, false}};
  for (auto const& [name, n, expected] : cases) {
    CAPTURE(name);
    CAPTURE(n);
    auto d = build_standard_structure(named(name, n), FieldSpec::rationals());
    auto a = run(d);
    CHECK(a.semisimple == expected);
    CHECK(trace_form_semisimple(MultiplicationOracle::monoid(d.monoid, d.field)) == expected);
  }
  auto t = build_standard_structure(trivial_monoid(), FieldSpec::rationals());
  CHECK(run(t).semisimple);
}

TEST_CASE("I_3 in positive characteristic") {
  for (auto [p, expected] : std::vector<std::pair<unsigned, bool>>{{2, false}, {3, false}, {5, true}, {7, true}}) {
    CAPTURE(p);
    auto d = build_standard_structure(named("syminv", 3), FieldSpec::prime(p));
    auto a = run(d);
    CHECK(a.semisimple == expected);
    bool groups = true;
    for (auto const& dc : d.dclasses) {
      groups = groups && dc.group_semisimple;
    }
    CHECK(groups == expected);
  }
}

TEST_CASE("T_3 over Q is quasi-hereditary") {
  auto d = build_standard_structure(named("tfull", 3), FieldSpec::rationals());
  auto a = run(d);
  CHECK(a.quasi_hereditary);
  CHECK_FALSE(a.semisimple);
}

TEST_CASE("groups beyond the automatic data need a custom datum") {
  // Z/3 acting on three points as a cyclic group has no automatic datum.
  auto m = generate_from_maps(3, {PartialMap{1u, 2u, 0u}});
  CHECK(m.size() == 3);
  CHECK_THROWS_AS(build_standard_structure(m, FieldSpec::rationals()), UnsupportedGroup);
  // Over F_3 the powers of (x - 1) give a chain of one-dimensional layers.
  StructureOptions opts;
  opts.custom[0] = nlohmann::json::parse(R"({
    "nodes": ["a", "b", "c"], "poset": [["a", "b"], ["b", "c"]],
    "L": {"a": 1, "b": 1, "c": 1}, "R": {"a": 1, "b": 1, "c": 1},
    "basis": {"a/0/0": [[0, "1"], [1, "1"], [2, "1"]],
              "b/0/0": [[0, "-1"], [1, "1"]],
              "c/0/0": [[0, "1"]]}})");
  auto d = build_standard_structure(m, FieldSpec::prime(3), opts);
  CHECK(d.dclasses[0].gdata.kind == GroupKind::custom);
  auto a = run(d);
  CHECK(a.lambda0.size() == 1);
  CHECK_FALSE(a.semisimple);
  CHECK(all_passed(cross_check(d, a)));
}
