#pragma once

// Exact coefficient arithmetic (Z and Z/n) and prime-field linear algebra.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace superschur {

/// Raised when a construction would exceed a configured size cap.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caps shared by every expansion-based construction.
struct Limits {
  std::size_t max_algebra_dim = 5000;
  std::size_t max_tensor_words = 1'000'000;
};

namespace coeff {

using Integer = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultPrime = 10007;

class Ring {
 public:
  enum class Kind { Integers, IntegersMod };

  static Ring integers() { return Ring{}; }
  static Ring integers_mod(const Integer& modulus);

  Kind kind() const { return kind_; }
  const Integer& modulus() const { return modulus_; }
  bool is_integers() const { return kind_ == Kind::Integers; }

  /// True for Z/p with p prime.
  bool is_field() const;

  Integer reduce(const Integer& a) const;
  Integer add(const Integer& a, const Integer& b) const { return reduce(a + b); }
  Integer sub(const Integer& a, const Integer& b) const { return reduce(a - b); }
  Integer mul(const Integer& a, const Integer& b) const { return reduce(a * b); }
  Integer neg(const Integer& a) const { return reduce(-a); }
  bool is_zero(const Integer& a) const { return reduce(a) == 0; }
  bool is_unit(const Integer& a) const;

  /// "Z" or "Z/<n>".
  std::string to_string() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring() = default;
  Kind kind_ = Kind::Integers;
  Integer modulus_ = 0;
};

/// Parses "Z" or "Z/<n>" with n >= 2.
Ring make_ring(std::string_view descriptor);

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n);

/// One nonzero coefficient of a sparse vector.
struct SparseEntry {
  std::uint32_t index;
  Integer value;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sorted by index, no zero values.
using SparseVector = std::vector<SparseEntry>;

/// Dense row-major matrix with entries kept reduced in its ring.
class Matrix {
 public:
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static Matrix identity(Ring ring, std::size_t n);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Integer& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const Integer& value) {
    entries_[r * cols_ + c] = ring_.reduce(value);
  }
  void add_to(std::size_t r, std::size_t c, const Integer& value) {
    auto& e = entries_[r * cols_ + c];
    e = ring_.reduce(e + value);
  }
  const std::vector<Integer>& entries() const { return entries_; }

  bool is_zero() const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix scaled(const Integer& s) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> entries_;
};

/// Reduces an integer into [0, p).
std::uint64_t reduce_mod(const Integer& a, std::uint64_t p);

/// Dense matrix over the prime field F_p, p < 2^32.
class FpMatrix {
 public:
  FpMatrix(std::uint64_t prime, std::size_t rows, std::size_t cols);

  std::uint64_t prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint64_t v) { data_[r * cols_ + c] = v % p_; }
  void set(std::size_t r, std::size_t c, const Integer& v) { data_[r * cols_ + c] = reduce_mod(v, p_); }
  std::span<const std::uint64_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void append_row(std::span<const std::uint64_t> row);

  /// In-place reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  /// Basis of {x : A x = 0}, one basis vector per row of the result.
  FpMatrix nullspace() const;

  FpMatrix transpose() const;

 private:
  std::uint64_t p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> data_;
};

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

/// Incrementally maintained row space over F_p (semi-echelon, pivots normalised to 1).
class FpSpan {
 public:
  FpSpan(std::uint64_t prime, std::size_t cols) : p_(prime), cols_(cols) {}

  /// Adds `row` to the span; returns true when it was independent.
  bool insert(std::vector<std::uint64_t> row);
  /// True when `row` lies in the current span.
  bool contains(std::vector<std::uint64_t> row) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  void reduce(std::vector<std::uint64_t>& row) const;
  std::uint64_t p_;
  std::size_t cols_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Throws unless `prime` is prime and compatible with `ring` (Z, or Z/n with p | n).
void require_reduction_prime(const Ring& ring, std::uint64_t prime);

/// Dense F_p copy of a sparse vector of the given width.
std::vector<std::uint64_t> to_prime_field(const SparseVector& v, std::size_t width,
                                          std::uint64_t prime);

/// Column-sparse matrix; columns[c] is the image of basis vector c.
struct SparseMatrix {
  Ring ring;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVector> columns;

  static SparseMatrix identity(const Ring& ring, std::size_t n);
  SparseVector apply(const SparseVector& v) const;
  bool is_zero() const;
  /// Entries in row-major order, reduced into F_p.
  std::vector<std::uint64_t> flatten(std::uint64_t prime) const;

  /// Composition a o b.
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
};

/// Reduces `m` into F_p. The prime is taken from the ring when it is Z/p;
/// otherwise `reduction_prime` must be given (and must divide the modulus
/// when the ring is Z/n).
FpMatrix to_prime_field(const Matrix& m, std::optional<std::uint64_t> reduction_prime);

/// Rank by exact elimination over Z/p, or over Z reduced mod a caller prime.
std::size_t rank(const Matrix& m, std::optional<std::uint64_t> reduction_prime = std::nullopt);

/// Binomial coefficient C(n, k), zero when k > n.
Integer binomial(std::int64_t n, std::int64_t k);

std::string to_decimal(const Integer& a);
Integer from_decimal(std::string_view text);

/// Adds `scale * v` into the dense accumulator `acc` reduced in `ring`.
void axpy(const Ring& ring, std::vector<Integer>& acc, const Integer& scale, const SparseVector& v);

SparseVector to_sparse(const Ring& ring, std::span<const Integer> dense);

}  // namespace coeff
}  // namespace superschur
