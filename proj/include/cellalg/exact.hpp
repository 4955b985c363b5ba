// Exact scalars over Q and F_p, and dense linear algebra over them.

#ifndef CELLALG_EXACT_HPP_
#define CELLALG_EXACT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace cellalg {

  enum class FieldKind { rationals, prime_field };

  // The coefficient field: Q, or F_p for a prime p < 2^32.
  class FieldSpec {
   public:
    FieldSpec() = default;

    static FieldSpec rationals() {
      return FieldSpec();
    }
    static FieldSpec prime(std::uint64_t p);
    // Accepts "q" or "fp:<p>".
    static FieldSpec parse(std::string_view text);

    FieldKind kind() const noexcept {
      return _kind;
    }
    bool is_rationals() const noexcept {
      return _kind == FieldKind::rationals;
    }
    // 0 for Q.
    std::uint64_t characteristic() const noexcept {
      return _p;
    }
    std::string to_string() const;

    friend bool operator==(FieldSpec const&, FieldSpec const&) = default;

   private:
    FieldKind     _kind = FieldKind::rationals;
    std::uint64_t _p    = 0;
  };

  bool is_prime(std::uint64_t n);

  // An element of a FieldSpec. Rationals are kept in lowest terms with a
  // positive denominator (mpq canonical form); residues lie in [0, p).
  class Scalar {
   public:
    Scalar() : Scalar(FieldSpec(), 0) {}
    Scalar(FieldSpec field, long long value);
    Scalar(FieldSpec field, mpq_class const& value);

    static Scalar zero(FieldSpec field) {
      return Scalar(field, 0);
    }
    static Scalar one(FieldSpec field) {
      return Scalar(field, 1);
    }
    // "n", "n/d", or (over F_p) any such value reduced mod p.
    static Scalar parse(std::string_view text, FieldSpec field);

    FieldSpec field() const noexcept {
      return _field;
    }
    bool is_zero() const;
    bool is_one() const;

    Scalar inverse() const;
    Scalar pow(unsigned exponent) const;

    std::string to_string() const;

    Scalar& operator+=(Scalar const& other);
    Scalar& operator-=(Scalar const& other);
    Scalar& operator*=(Scalar const& other);
    Scalar& operator/=(Scalar const& other);
    Scalar  operator-() const;

    friend Scalar operator+(Scalar a, Scalar const& b) {
      return a += b;
    }
    friend Scalar operator-(Scalar a, Scalar const& b) {
      return a -= b;
    }
    friend Scalar operator*(Scalar a, Scalar const& b) {
      return a *= b;
    }
    friend Scalar operator/(Scalar a, Scalar const& b) {
      return a /= b;
    }
    friend bool operator==(Scalar const& a, Scalar const& b);

   private:
    void check_same_field(Scalar const& other) const;
    std::uint64_t residue() const {
      return std::get<std::uint64_t>(_value);
    }
    mpq_class const& rational() const {
      return std::get<mpq_class>(_value);
    }

    FieldSpec                               _field;
    std::variant<std::uint64_t, mpq_class> _value;
  };

  using Vector = std::vector<Scalar>;

  Vector zero_vector(FieldSpec field, std::size_t n);

  class DenseMatrix {
   public:
    DenseMatrix() = default;
    DenseMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

    static DenseMatrix identity(FieldSpec field, std::size_t n);
    static DenseMatrix from_rows(FieldSpec                                  field,
                                 std::vector<std::vector<long long>> const& rows);
    static DenseMatrix from_rows(FieldSpec field, std::vector<Vector> const& rows);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    FieldSpec field() const noexcept {
      return _field;
    }

    Scalar& operator()(std::size_t r, std::size_t c) {
      return _entries[r * _cols + c];
    }
    Scalar const& operator()(std::size_t r, std::size_t c) const {
      return _entries[r * _cols + c];
    }

    bool        is_zero() const;
    DenseMatrix transpose() const;
    Vector      apply(std::span<Scalar const> v) const;

    friend DenseMatrix operator*(DenseMatrix const& a, DenseMatrix const& b);
    friend bool        operator==(DenseMatrix const& a, DenseMatrix const& b);

   private:
    FieldSpec   _field;
    std::size_t _rows = 0;
    std::size_t _cols = 0;
    Vector      _entries;
  };

  // Reduced row echelon form. Pivots are chosen column by column, taking
  // the first nonzero entry at or below the current row.
  DenseMatrix row_reduce(DenseMatrix m, std::vector<std::size_t>* pivot_cols = nullptr);

  std::size_t rank(DenseMatrix const& m);

  // Basis of {v : m v = 0}, one vector per free column, with a 1 in that
  // column.
  std::vector<Vector> nullspace(DenseMatrix const& m);

  // Some x with a x = b, or nullopt when b is outside the column space.
  std::optional<Vector> solve(DenseMatrix const& a, std::span<Scalar const> b);

  std::optional<DenseMatrix> inverse(DenseMatrix const& m);

}  // namespace cellalg

#endif  // CELLALG_EXACT_HPP_
