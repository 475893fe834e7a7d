#include "superschur/coeff.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace superschur::coeff {

Ring Ring::integers_mod(const Integer& modulus) {
  if (modulus < 2) {
    throw std::invalid_argument("ring modulus must be at least 2, got " + modulus.str());
  }
  Ring r;
  r.kind_ = Kind::IntegersMod;
  r.modulus_ = modulus;
  return r;
}

bool Ring::is_field() const {
  if (kind_ != Kind::IntegersMod) return false;
  if (modulus_ > std::numeric_limits<std::uint64_t>::max()) return false;
  return is_prime(static_cast<std::uint64_t>(modulus_));
}

Integer Ring::reduce(const Integer& a) const {
  if (kind_ == Kind::Integers) return a;
  Integer r = a % modulus_;
  if (r < 0) r += modulus_;
  return r;
}

bool Ring::is_unit(const Integer& a) const {
  if (kind_ == Kind::Integers) return a == 1 || a == -1;
  return boost::multiprecision::gcd(reduce(a), modulus_) == 1;
}

std::string Ring::to_string() const {
  if (kind_ == Kind::Integers) return "Z";
  return "Z/" + modulus_.str();
}

Ring make_ring(std::string_view descriptor) {
  if (descriptor == "Z") return Ring::integers();
  if (descriptor.size() > 2 && descriptor.substr(0, 2) == "Z/") {
    auto digits = descriptor.substr(2);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("malformed ring descriptor: " + std::string(descriptor));
    }
    return Ring::integers_mod(Integer(std::string(digits)));
  }
  throw std::invalid_argument("malformed ring descriptor: " + std::string(descriptor));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

// --- Matrix ---------------------------------------------------------------

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix entry count does not match its shape");
  }
  for (auto& e : entries_) e = ring_.reduce(e);
}

Matrix Matrix::identity(Ring ring, std::size_t n) {
  Matrix m(std::move(ring), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& e) { return e == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = at(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.ring_ != b.ring_) throw std::invalid_argument("matrix product: ring mismatch");
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix out(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Integer& bkj = b.at(k, j);
        if (bkj != 0) out.entries_[i * out.cols_ + j] += aik * bkj;
      }
    }
  }
  for (auto& e : out.entries_) e = out.ring_.reduce(e);
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.ring_ != b.ring_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("matrix sum: shape or ring mismatch");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] = out.ring_.add(a.entries_[i], b.entries_[i]);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + b.scaled(-1); }

Matrix Matrix::scaled(const Integer& s) const {
  Matrix out = *this;
  for (auto& e : out.entries_) e = ring_.mul(e, s);
  return out;
}

// --- prime field ----------------------------------------------------------

std::uint64_t reduce_mod(const Integer& a, std::uint64_t p) {
  Integer r = a % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

FpMatrix::FpMatrix(std::uint64_t prime, std::size_t rows, std::size_t cols)
    : p_(prime), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!is_prime(prime) || prime >= (std::uint64_t{1} << 32)) {
    throw std::invalid_argument("F_p requires a prime below 2^32, got " + std::to_string(prime));
  }
}

void FpMatrix::append_row(std::span<const std::uint64_t> row) {
  if (row.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  for (auto v : row) data_.push_back(v % p_);
  ++rows_;
}

std::vector<std::size_t> FpMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pivot = r;
    while (pivot < rows_ && data_[pivot * cols_ + c] == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != r) {
      std::swap_ranges(data_.begin() + pivot * cols_, data_.begin() + (pivot + 1) * cols_,
                       data_.begin() + r * cols_);
    }
    std::uint64_t* prow = data_.data() + r * cols_;
    const std::uint64_t inv = inverse_mod(prow[c], p_);
    for (std::size_t j = c; j < cols_; ++j) prow[j] = prow[j] * inv % p_;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      std::uint64_t* row = data_.data() + i * cols_;
      const std::uint64_t f = row[c];
      if (f == 0) continue;
      const std::uint64_t nf = p_ - f;
      for (std::size_t j = c; j < cols_; ++j) {
        if (prow[j] != 0) row[j] = (row[j] + nf * prow[j]) % p_;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t FpMatrix::rank() const {
  FpMatrix copy = *this;
  return copy.rref().size();
}

FpMatrix FpMatrix::nullspace() const {
  FpMatrix reduced = *this;
  auto pivots = reduced.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  FpMatrix basis(p_, 0, cols_);
  std::vector<std::uint64_t> v(cols_);
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      const std::uint64_t a = reduced.at(k, free);
      v[pivots[k]] = a == 0 ? 0 : p_ - a;
    }
    basis.append_row(v);
  }
  return basis;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = at(r, c);
  return t;
}

FpMatrix to_prime_field(const Matrix& m, std::optional<std::uint64_t> reduction_prime) {
  std::uint64_t p = 0;
  const Ring& ring = m.ring();
  if (ring.is_field()) {
    p = static_cast<std::uint64_t>(ring.modulus());
    if (reduction_prime && *reduction_prime != p) {
      throw std::invalid_argument("reduction prime differs from the field characteristic");
    }
  } else if (reduction_prime) {
    p = *reduction_prime;
    if (!ring.is_integers() && ring.modulus() % p != 0) {
      throw std::invalid_argument("reduction prime must divide the ring modulus");
    }
  } else {
    throw std::invalid_argument("rank over " + ring.to_string() +
                                " requires a reduction prime");
  }
  FpMatrix out(p, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m.at(r, c));
  return out;
}

std::size_t rank(const Matrix& m, std::optional<std::uint64_t> reduction_prime) {
  return to_prime_field(m, reduction_prime).rank();
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

std::string to_decimal(const Integer& a) { return a.str(); }

Integer from_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a decimal integer: " + std::string(text));
  }
  return Integer(std::string(text));
}

void axpy(const Ring& ring, std::vector<Integer>& acc, const Integer& scale, const SparseVector& v) {
  for (const auto& [idx, val] : v) acc[idx] = ring.reduce(acc[idx] + scale * val);
}

SparseVector to_sparse(const Ring& ring, std::span<const Integer> dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    Integer v = ring.reduce(dense[i]);
    if (v != 0) out.push_back({static_cast<std::uint32_t>(i), std::move(v)});
  }
  return out;
}

void FpSpan::reduce(std::vector<std::uint64_t>& row) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint64_t f = row[pivots_[k]];
    if (f == 0) continue;
    const auto& r = rows_[k];
    for (std::size_t c = pivots_[k]; c < cols_; ++c)
      if (r[c] != 0) row[c] = (row[c] + (p_ - f) * r[c]) % p_;
  }
}

bool FpSpan::insert(std::vector<std::uint64_t> row) {
  if (row.size() != cols_) throw std::invalid_argument("FpSpan: width mismatch");
  for (auto& v : row) v %= p_;
  reduce(row);
  std::size_t pivot = 0;
  while (pivot < cols_ && row[pivot] == 0) ++pivot;
  if (pivot == cols_) return false;
  const std::uint64_t inv = inverse_mod(row[pivot], p_);
  for (std::size_t c = pivot; c < cols_; ++c) row[c] = row[c] * inv % p_;
  rows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

bool FpSpan::contains(std::vector<std::uint64_t> row) const {
  if (row.size() != cols_) throw std::invalid_argument("FpSpan: width mismatch");
  for (auto& v : row) v %= p_;
  reduce(row);
  for (auto v : row)
    if (v != 0) return false;
  return true;
}

void require_reduction_prime(const Ring& ring, std::uint64_t prime) {
  if (!is_prime(prime) || prime >= (1ull << 32)) {
    throw std::invalid_argument(std::to_string(prime) + " is not a usable prime");
  }
  if (!ring.is_integers() && ring.modulus() % prime != 0) {
    throw std::invalid_argument("prime " + std::to_string(prime) +
                                " does not divide the modulus of " + ring.to_string());
  }
}

std::vector<std::uint64_t> to_prime_field(const SparseVector& v, std::size_t width,
                                          std::uint64_t prime) {
  std::vector<std::uint64_t> out(width, 0);
  for (const auto& [i, c] : v) out.at(i) = reduce_mod(c, prime);
  return out;
}

SparseMatrix SparseMatrix::identity(const Ring& ring, std::size_t n) {
  SparseMatrix m{ring, n, n, std::vector<SparseVector>(n)};
  for (std::size_t i = 0; i < n; ++i) m.columns[i] = {{static_cast<std::uint32_t>(i), Integer(1)}};
  return m;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  std::vector<Integer> acc(rows);
  std::vector<bool> touched(rows, false);
  for (const auto& [c, x] : v) {
    for (const auto& [r, y] : columns.at(c)) {
      acc[r] += x * y;
      touched[r] = true;
    }
  }
  SparseVector out;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!touched[r]) continue;
    Integer value = ring.reduce(acc[r]);
    if (value != 0) out.push_back({static_cast<std::uint32_t>(r), std::move(value)});
  }
  return out;
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : columns)
    if (!c.empty()) return false;
  return true;
}

std::vector<std::uint64_t> SparseMatrix::flatten(std::uint64_t prime) const {
  std::vector<std::uint64_t> out(rows * cols, 0);
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [r, v] : columns[c]) out[r * cols + c] = reduce_mod(v, prime);
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("SparseMatrix: shape mismatch");
  SparseMatrix out{a.ring, a.rows, b.cols, std::vector<SparseVector>(b.cols)};
  for (std::size_t c = 0; c < b.cols; ++c) out.columns[c] = a.apply(b.columns[c]);
  return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("SparseMatrix: shape mismatch");
  SparseMatrix out{a.ring, a.rows, a.cols, std::vector<SparseVector>(a.cols)};
  std::vector<Integer> acc(a.rows);
  for (std::size_t c = 0; c < a.cols; ++c) {
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& [r, v] : a.columns[c]) acc[r] += v;
    for (const auto& [r, v] : b.columns[c]) acc[r] -= v;
    out.columns[c] = to_sparse(a.ring, acc);
  }
  return out;
}

}  // namespace superschur::coeff
