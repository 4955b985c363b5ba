#include "cellalg/exact.hpp"

#include <charconv>
#include <stdexcept>

#include "cellalg/errors.hpp"

namespace cellalg {

  bool is_prime(std::uint64_t n) {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (std::uint64_t(1) << 32) || !is_prime(p)) {
      throw std::invalid_argument("field modulus must be a prime below 2^32, got "
                                  + std::to_string(p));
    }
    FieldSpec f;
    f._kind = FieldKind::prime_field;
    f._p    = p;
    return f;
  }

  FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "q" || text == "Q") {
      return rationals();
    }
    if (text.starts_with("fp:")) {
      auto          digits = text.substr(3);
      std::uint64_t p      = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw FormatError("bad field modulus in \"" + std::string(text) + "\"");
      }
      if (p >= (std::uint64_t(1) << 32) || !is_prime(p)) {
        throw FormatError("field modulus must be a prime below 2^32, got " + std::to_string(p));
      }
      return prime(p);
    }
    throw FormatError("unknown field \"" + std::string(text) + "\" (expected q or fp:<p>)");
  }

  std::string FieldSpec::to_string() const {
    return is_rationals() ? "q" : "fp:" + std::to_string(_p);
  }

  ////////////////////////////////////////////////////////////////////////
  // Scalar
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::uint64_t reduce(mpz_class const& z, std::uint64_t p) {
      mpz_class r = z % static_cast<unsigned long>(p);
      if (r < 0) {
        r += static_cast<unsigned long>(p);
      }
      return r.get_ui();
    }

    std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
      std::uint64_t result = 1 % p;
      base %= p;
      while (e > 0) {
        if (e & 1) {
          result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
      }
      return result;
    }
  }  // namespace

  Scalar::Scalar(FieldSpec field, long long value) : _field(field) {
    if (field.is_rationals()) {
      _value = mpq_class(static_cast<long>(value));
    } else {
      auto p = static_cast<long long>(field.characteristic());
      auto r = value % p;
      if (r < 0) {
        r += p;
      }
      _value = static_cast<std::uint64_t>(r);
    }
  }

  Scalar::Scalar(FieldSpec field, mpq_class const& value) : _field(field) {
    if (field.is_rationals()) {
      mpq_class v = value;
      v.canonicalize();
      _value = std::move(v);
    } else {
      auto p   = field.characteristic();
      auto den = reduce(value.get_den(), p);
      if (den == 0) {
        throw std::domain_error("denominator vanishes in " + field.to_string());
      }
      auto num = reduce(value.get_num(), p);
      _value   = num * mod_pow(den, p - 2, p) % p;
    }
  }

  Scalar Scalar::parse(std::string_view text, FieldSpec field) {
    mpq_class q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0) {
      throw FormatError("bad scalar \"" + std::string(text) + "\"");
    }
    if (q.get_den() == 0) {
      throw FormatError("zero denominator in scalar \"" + std::string(text) + "\"");
    }
    q.canonicalize();
    if (!field.is_rationals()
        && mpz_divisible_ui_p(q.get_den_mpz_t(), static_cast<unsigned long>(field.characteristic()))) {
      throw FormatError("scalar \"" + std::string(text) + "\" has no value in " + field.to_string());
    }
    return Scalar(field, q);
  }

  bool Scalar::is_zero() const {
    return _field.is_rationals() ? sgn(rational()) == 0 : residue() == 0;
  }

  bool Scalar::is_one() const {
    return _field.is_rationals() ? rational() == 1 : residue() == 1;
  }

  void Scalar::check_same_field(Scalar const& other) const {
    if (!(_field == other._field)) {
      throw FieldMismatch("scalar arithmetic across fields " + _field.to_string()
                          + " and " + other._field.to_string());
    }
  }

  Scalar& Scalar::operator+=(Scalar const& other) {
    check_same_field(other);
    if (_field.is_rationals()) {
      std::get<mpq_class>(_value) += other.rational();
    } else {
      _value = (residue() + other.residue()) % _field.characteristic();
    }
    return *this;
  }

  Scalar& Scalar::operator-=(Scalar const& other) {
    check_same_field(other);
    if (_field.is_rationals()) {
      std::get<mpq_class>(_value) -= other.rational();
    } else {
      auto p = _field.characteristic();
      _value = (residue() + p - other.residue()) % p;
    }
    return *this;
  }

  Scalar& Scalar::operator*=(Scalar const& other) {
    check_same_field(other);
    if (_field.is_rationals()) {
      std::get<mpq_class>(_value) *= other.rational();
    } else {
      _value = residue() * other.residue() % _field.characteristic();
    }
    return *this;
  }

  Scalar& Scalar::operator/=(Scalar const& other) {
    return *this *= other.inverse();
  }

  Scalar Scalar::operator-() const {
    return Scalar::zero(_field) - *this;
  }

  Scalar Scalar::inverse() const {
    if (is_zero()) {
      throw std::domain_error("division by zero");
    }
    if (_field.is_rationals()) {
      return Scalar(_field, mpq_class(1) / rational());
    }
    Scalar result = *this;
    auto   p      = _field.characteristic();
    result._value = mod_pow(residue(), p - 2, p);
    return result;
  }

  Scalar Scalar::pow(unsigned exponent) const {
    Scalar result = Scalar::one(_field);
    Scalar base   = *this;
    while (exponent > 0) {
      if (exponent & 1) {
        result *= base;
      }
      base *= base;
      exponent >>= 1;
    }
    return result;
  }

  std::string Scalar::to_string() const {
    return _field.is_rationals() ? rational().get_str() : std::to_string(residue());
  }

  bool operator==(Scalar const& a, Scalar const& b) {
    if (!(a._field == b._field)) {
      return false;
    }
    return a._field.is_rationals() ? a.rational() == b.rational()
                                   : a.residue() == b.residue();
  }

  Vector zero_vector(FieldSpec field, std::size_t n) {
    return Vector(n, Scalar::zero(field));
  }

  ////////////////////////////////////////////////////////////////////////
  // DenseMatrix
  ////////////////////////////////////////////////////////////////////////

  DenseMatrix::DenseMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
      : _field(field), _rows(rows), _cols(cols), _entries(rows * cols, Scalar::zero(field)) {}

  DenseMatrix DenseMatrix::identity(FieldSpec field, std::size_t n) {
    DenseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = Scalar::one(field);
    }
    return m;
  }

  DenseMatrix DenseMatrix::from_rows(FieldSpec                                  field,
                                     std::vector<std::vector<long long>> const& rows) {
    std::vector<Vector> converted;
    for (auto const& row : rows) {
      Vector v;
      for (auto x : row) {
        v.emplace_back(field, x);
      }
      converted.push_back(std::move(v));
    }
    return from_rows(field, converted);
  }

  DenseMatrix DenseMatrix::from_rows(FieldSpec field, std::vector<Vector> const& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    DenseMatrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) {
        throw std::invalid_argument("ragged matrix rows");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        if (!(rows[r][c].field() == field)) {
          throw FieldMismatch("matrix entry from a different field");
        }
        m(r, c) = rows[r][c];
      }
    }
    return m;
  }

  bool DenseMatrix::is_zero() const {
    for (auto const& x : _entries) {
      if (!x.is_zero()) {
        return false;
      }
    }
    return true;
  }

  DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(_field, _cols, _rows);
    for (std::size_t r = 0; r < _rows; ++r) {
      for (std::size_t c = 0; c < _cols; ++c) {
        t(c, r) = (*this)(r, c);
      }
    }
    return t;
  }

  Vector DenseMatrix::apply(std::span<Scalar const> v) const {
    if (v.size() != _cols) {
      throw std::invalid_argument("matrix-vector size mismatch");
    }
    Vector out = zero_vector(_field, _rows);
    for (std::size_t r = 0; r < _rows; ++r) {
      for (std::size_t c = 0; c < _cols; ++c) {
        auto const& a = (*this)(r, c);
        if (!a.is_zero() && !v[c].is_zero()) {
          out[r] += a * v[c];
        }
      }
    }
    return out;
  }

  DenseMatrix operator*(DenseMatrix const& a, DenseMatrix const& b) {
    if (a._cols != b._rows) {
      throw std::invalid_argument("matrix product size mismatch");
    }
    DenseMatrix out(a._field, a._rows, b._cols);
    for (std::size_t i = 0; i < a._rows; ++i) {
      for (std::size_t k = 0; k < a._cols; ++k) {
        auto const& x = a(i, k);
        if (x.is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < b._cols; ++j) {
          if (!b(k, j).is_zero()) {
            out(i, j) += x * b(k, j);
          }
        }
      }
    }
    return out;
  }

  bool operator==(DenseMatrix const& a, DenseMatrix const& b) {
    return a._field == b._field && a._rows == b._rows && a._cols == b._cols
           && a._entries == b._entries;
  }

  DenseMatrix row_reduce(DenseMatrix m, std::vector<std::size_t>* pivot_cols) {
    std::size_t const rows = m.rows();
    std::size_t const cols = m.cols();
    std::size_t       row  = 0;
    if (pivot_cols != nullptr) {
      pivot_cols->clear();
    }
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
      std::size_t pivot = row;
      while (pivot < rows && m(pivot, col).is_zero()) {
        ++pivot;
      }
      if (pivot == rows) {
        continue;
      }
      if (pivot != row) {
        for (std::size_t c = 0; c < cols; ++c) {
          std::swap(m(pivot, c), m(row, c));
        }
      }
      Scalar inv = m(row, col).inverse();
      for (std::size_t c = col; c < cols; ++c) {
        m(row, c) *= inv;
      }
      for (std::size_t r = 0; r < rows; ++r) {
        if (r == row || m(r, col).is_zero()) {
          continue;
        }
        Scalar factor = m(r, col);
        for (std::size_t c = col; c < cols; ++c) {
          if (!m(row, c).is_zero()) {
            m(r, c) -= factor * m(row, c);
          }
        }
      }
      if (pivot_cols != nullptr) {
        pivot_cols->push_back(col);
      }
      ++row;
    }
    return m;
  }

  std::size_t rank(DenseMatrix const& m) {
    std::vector<std::size_t> pivots;
    row_reduce(m, &pivots);
    return pivots.size();
  }

  std::vector<Vector> nullspace(DenseMatrix const& m) {
    std::vector<std::size_t> pivots;
    DenseMatrix              r = row_reduce(m, &pivots);
    std::vector<bool>        is_pivot(m.cols(), false);
    for (auto c : pivots) {
      is_pivot[c] = true;
    }
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
      if (is_pivot[free]) {
        continue;
      }
      Vector v  = zero_vector(m.field(), m.cols());
      v[free]   = Scalar::one(m.field());
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        v[pivots[i]] = -r(i, free);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  std::optional<Vector> solve(DenseMatrix const& a, std::span<Scalar const> b) {
    if (b.size() != a.rows()) {
      throw std::invalid_argument("solve: right-hand side has wrong length");
    }
    DenseMatrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        aug(r, c) = a(r, c);
      }
      aug(r, a.cols()) = b[r];
    }
    std::vector<std::size_t> pivots;
    DenseMatrix              red = row_reduce(std::move(aug), &pivots);
    if (!pivots.empty() && pivots.back() == a.cols()) {
      return std::nullopt;
    }
    Vector x = zero_vector(a.field(), a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      x[pivots[i]] = red(i, a.cols());
    }
    return x;
  }

  std::optional<DenseMatrix> inverse(DenseMatrix const& m) {
    if (m.rows() != m.cols()) {
      return std::nullopt;
    }
    std::size_t const n = m.rows();
    DenseMatrix       aug(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        aug(r, c) = m(r, c);
      }
      aug(r, n + r) = Scalar::one(m.field());
    }
    std::vector<std::size_t> pivots;
    DenseMatrix              red = row_reduce(std::move(aug), &pivots);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
      return std::nullopt;
    }
    DenseMatrix inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        inv(r, c) = red(r, n + c);
      }
    }
    return inv;
  }

}  // namespace cellalg
