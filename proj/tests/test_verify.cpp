#include <doctest.h>

#include "cellalg/cellbasis.hpp"
#include "cellalg/errors.hpp"
#include "cellalg/verify.hpp"

using namespace cellalg;

namespace {

  auto const q = FieldSpec::rationals();

}  // namespace

TEST_CASE("standard data satisfy the cell axioms") {
  for (auto [fam, n] : std::vector<std::pair<Family, unsigned>>{
           {Family::tfull, 2}, {Family::tfull, 3}, {Family::tpartial, 2}, {Family::syminv, 2},
           {Family::syminv, 3}, {Family::jones, 4}}) {
    CAPTURE(family_name(fam));
    CAPTURE(n);
    auto d    = build_standard_structure(family(fam, n).monoid, q);
    auto mult = MultiplicationOracle::monoid(d.monoid, q);
    auto full = verify_cell_axioms(mult, d.datum, all_elements(d.monoid.size()), VerifyMode::full);
    CHECK(full.ok);
    CHECK(full.checked == d.monoid.size());
    auto gens = greedy_generators(d.monoid);
    CHECK(verify_cell_axioms(mult, d.datum, gens, VerifyMode::generators).ok);
  }
  auto nulls = build_standard_structure(null_extension_monoid(), q);
  CHECK(verify_cell_axioms(MultiplicationOracle::monoid(nulls.monoid, q), nulls.datum,
                           all_elements(3), VerifyMode::full)
            .ok);
}

TEST_CASE("greedy generators generate") {
  for (auto fam : {Family::tfull, Family::tpartial, Family::syminv, Family::jones}) {
    auto m    = family(fam, 3).monoid;
    auto gens = greedy_generators(m);
    std::vector<bool>          seen(m.size(), false);
    std::vector<element_index> frontier{m.identity()};
    seen[m.identity()] = true;
    while (!frontier.empty()) {
      auto x = frontier.back();
      frontier.pop_back();
      for (auto g : gens) {
        auto y = m.product(x, static_cast<element_index>(g));
        if (!seen[y]) {
          seen[y] = true;
          frontier.push_back(y);
        }
      }
    }
    CHECK(std::count(seen.begin(), seen.end(), true) == static_cast<long>(m.size()));
  }
  CHECK(greedy_generators(family(Family::tfull, 3).monoid).size() == 3);
}

TEST_CASE("a datum with the order reversed is caught") {
  auto d    = build_standard_structure(family(Family::tfull, 2).monoid, q);
  auto mult = MultiplicationOracle::monoid(d.monoid, q);
  std::vector<std::pair<std::size_t, std::size_t>> reversed;
  for (auto [a, b] : d.datum.order_pairs()) {
    reversed.emplace_back(b, a);
  }
  CellDatum broken(q, d.datum.dim(), d.datum.nodes(), reversed, d.datum.basis_vectors());
  auto      r = verify_cell_axioms(mult, broken, all_elements(d.monoid.size()), VerifyMode::full);
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness);
  CHECK((r.witness->side == "left" || r.witness->side == "right"));
}

TEST_CASE("trace form oracle") {
  auto trivial = FiniteMonoid::from_cayley_table(1, 0, {{0}}, {});
  CHECK(trace_form_semisimple(MultiplicationOracle::monoid(trivial, q)));
  CHECK(trace_form_semisimple(MultiplicationOracle::monoid(family(Family::syminv, 3).monoid, q)));
  CHECK_FALSE(trace_form_semisimple(MultiplicationOracle::monoid(null_extension_monoid(), q)));
  CHECK_THROWS_AS(trace_form_semisimple(MultiplicationOracle::monoid(trivial, FieldSpec::prime(5))),
                  WrongCharacteristic);
}

TEST_CASE("cell data reject non-bases") {
  std::vector<CellNode> nodes{{"a", 1, 1}, {"b", 1, 1}};
  std::vector<AlgebraElement> same{AlgebraElement::unit(q, 0), AlgebraElement::unit(q, 0)};
  CHECK_THROWS_AS(CellDatum(q, 2, nodes, {{0, 1}}, same), NotABasis);
  std::vector<AlgebraElement> ok{AlgebraElement::unit(q, 0), AlgebraElement::unit(q, 1)};
  CHECK_THROWS_AS(CellDatum(q, 2, nodes, {{0, 1}, {1, 0}}, ok), std::invalid_argument);
  CHECK_THROWS_AS(CellDatum(q, 3, nodes, {{0, 1}}, ok), NotABasis);
}
