#include <doctest.h>

#include <random>

#include "cellalg/errors.hpp"
#include "cellalg/exact.hpp"
#include "oracles.hpp"

using namespace cellalg;

namespace {

  Scalar random_scalar(std::mt19937_64& rng, FieldSpec f) {
    std::uniform_int_distribution<long long> num(-20, 20), den(1, 9);
    if (f.is_rationals()) {
      return Scalar(f, mpq_class(static_cast<long>(num(rng)), static_cast<long>(den(rng))));
    }
    return Scalar(f, num(rng));
  }

  DenseMatrix random_matrix(std::mt19937_64& rng, FieldSpec f, std::size_t r, std::size_t c,
                            int zero_bias) {
    DenseMatrix                     m(f, r, c);
    std::uniform_int_distribution<> coin(0, 9);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        if (coin(rng) >= zero_bias) {
          m(i, j) = random_scalar(rng, f);
        } else {
          m(i, j) = Scalar::zero(f);
        }
      }
    }
    return m;
  }

}  // namespace

TEST_CASE("field specs parse and print") {
  CHECK(FieldSpec::parse("q").is_rationals());
  CHECK(FieldSpec::parse("fp:7").characteristic() == 7);
  CHECK(FieldSpec::parse("fp:7").to_string() == "fp:7");
  CHECK_THROWS_AS(FieldSpec::parse("fp:8"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("fp:1"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("r"), Error);
}

TEST_CASE("scalars are canonical") {
  auto q = FieldSpec::rationals();
  CHECK(Scalar::parse("6/-4", q).to_string() == "-3/2");
  CHECK(Scalar::parse("4/2", q).to_string() == "2");
  auto f5 = FieldSpec::prime(5);
  CHECK(Scalar(f5, -1).to_string() == "4");
  CHECK(Scalar::parse("1/2", f5).to_string() == "3");
  CHECK_THROWS_AS(Scalar::parse("1/5", f5), FormatError);
  CHECK_THROWS_AS(Scalar::parse("x", f5), FormatError);
  CHECK((Scalar(f5, 2) * Scalar(f5, 3)).is_one());
  CHECK_THROWS_AS(Scalar(q, 1) + Scalar(f5, 1), FieldMismatch);
  CHECK_THROWS(Scalar::zero(q).inverse());
  CHECK(Scalar(f5, 0).pow(0).is_one());
}

TEST_CASE("scalar string round trip") {
  std::mt19937_64 rng(11);
  for (auto f : {FieldSpec::rationals(), FieldSpec::prime(7), FieldSpec::prime(101)}) {
    for (int k = 0; k < 200; ++k) {
      Scalar x = random_scalar(rng, f);
      CHECK(Scalar::parse(x.to_string(), f) == x);
    }
  }
}

TEST_CASE("property: field axioms on random scalars") {
  std::mt19937_64 rng(1);
  for (auto f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3),
                 FieldSpec::prime(4294967291ULL)}) {
    for (int k = 0; k < 300; ++k) {
      Scalar a = random_scalar(rng, f), b = random_scalar(rng, f), c = random_scalar(rng, f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      CHECK(a + Scalar::zero(f) == a);
      CHECK(a * Scalar::one(f) == a);
      if (!a.is_zero()) {
        CHECK((a * a.inverse()).is_one());
        CHECK((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("small linear algebra examples") {
  auto q  = FieldSpec::rationals();
  auto id = DenseMatrix::identity(q, 3);
  CHECK(nullspace(id).empty());
  CHECK(rank(id) == 3);
  Vector b{Scalar(q, 5), Scalar(q, -1)};
  auto   x = solve(DenseMatrix::identity(q, 2), b);
  REQUIRE(x);
  CHECK(*x == b);
  auto half = solve(DenseMatrix::from_rows(q, std::vector<std::vector<long long>>{{2}}), Vector{Scalar(q, 1)});
  REQUIRE(half);
  CHECK((*half)[0].to_string() == "1/2");
  CHECK_FALSE(solve(DenseMatrix::from_rows(q, {{1, 1}, {1, 1}}), Vector{Scalar(q, 0), Scalar(q, 1)}));
  CHECK(rank(DenseMatrix::from_rows(FieldSpec::prime(2), {{1, 1}, {1, 1}})) == 1);
  CHECK(rank(DenseMatrix::from_rows(FieldSpec::prime(3), {{1, 2}, {2, 1}})) == 1);
  CHECK(rank(DenseMatrix::from_rows(q, {{1, 2}, {2, 1}})) == 2);
  CHECK_FALSE(inverse(DenseMatrix::from_rows(q, {{1, 2}, {2, 4}})));
}

TEST_CASE("property: rank plus nullity and nullspace annihilation") {
  std::mt19937_64 rng(2);
  for (auto f : {FieldSpec::rationals(), FieldSpec::prime(3), FieldSpec::prime(5)}) {
    for (int k = 0; k < 60; ++k) {
      std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      auto        m  = random_matrix(rng, f, r, c, 5);
      auto        ns = nullspace(m);
      CHECK(rank(m) + ns.size() == c);
      CHECK(rank(m) == rank(m.transpose()));
      for (auto const& v : ns) {
        for (auto const& e : m.apply(v)) {
          CHECK(e.is_zero());
        }
      }
    }
  }
}

TEST_CASE("property: rank agrees with independent eliminations") {
  std::mt19937_64                           rng(3);
  std::uniform_int_distribution<long long> entry(-3, 3);
  for (int k = 0; k < 80; ++k) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    std::vector<std::vector<long long>>    rows(r, std::vector<long long>(c));
    std::vector<std::vector<mpz_class>>    z(r, std::vector<mpz_class>(c));
    std::vector<std::vector<std::int64_t>> z3(r, std::vector<std::int64_t>(c));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        rows[i][j] = (rng() % 3 == 0) ? 0 : entry(rng);
        z[i][j]    = static_cast<long>(rows[i][j]);
        z3[i][j]   = rows[i][j];
      }
    }
    CHECK(rank(DenseMatrix::from_rows(FieldSpec::rationals(), rows)) == oracle::integer_rank(z));
    CHECK(rank(DenseMatrix::from_rows(FieldSpec::prime(3), rows)) == oracle::modular_rank(z3, 3));
  }
}

TEST_CASE("property: solve and inverse") {
  std::mt19937_64 rng(4);
  for (auto f : {FieldSpec::rationals(), FieldSpec::prime(7)}) {
    for (int k = 0; k < 60; ++k) {
      std::size_t n  = 1 + rng() % 5;
      auto        a  = random_matrix(rng, f, n, n, 3);
      Vector      x0 = zero_vector(f, n);
      for (auto& e : x0) {
        e = random_scalar(rng, f);
      }
      auto b = a.apply(x0);
      auto x = solve(a, b);
      REQUIRE(x);
      CHECK(a.apply(*x) == b);
      auto inv = inverse(a);
      CHECK(inv.has_value() == (rank(a) == n));
      if (inv) {
        CHECK(a * *inv == DenseMatrix::identity(f, n));
      }
    }
  }
}

TEST_CASE("row reduction is reduced echelon") {
  std::mt19937_64 rng(5);
  auto            q = FieldSpec::rationals();
  for (int k = 0; k < 40; ++k) {
    auto                     m = random_matrix(rng, q, 4, 5, 4);
    std::vector<std::size_t> piv;
    auto                     r = row_reduce(m, &piv);
    CHECK(piv.size() == rank(m));
    for (std::size_t i = 0; i < piv.size(); ++i) {
      CHECK(r(i, piv[i]).is_one());
      for (std::size_t j = 0; j < r.rows(); ++j) {
        if (j != i) {
          CHECK(r(j, piv[i]).is_zero());
        }
      }
    }
  }
}
