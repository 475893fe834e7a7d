#pragma once

// Superalgebras given by exact structure constants on a homogeneous basis.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "superschur/coeff.hpp"
#include "superschur/supermod.hpp"

namespace superschur::salg {

using coeff::Integer;
using coeff::Ring;
using coeff::SparseVector;
using supermod::Parity;
using supermod::SuperModule;

/// Structure constants c_{ij}^k stored sparsely: product(i, j) lists the
/// nonzero (k, c_{ij}^k) in increasing k. Copies share storage.
class SuperAlgebra {
 public:
  SuperAlgebra(SuperModule carrier, std::vector<Integer> unit, std::vector<SparseVector> table);

  const SuperModule& carrier() const { return data_->carrier; }
  const Ring& ring() const { return data_->carrier.ring(); }
  std::size_t dim() const { return data_->carrier.dim(); }
  const std::vector<Integer>& unit() const { return data_->unit; }
  const SparseVector& product(std::size_t i, std::size_t j) const {
    return data_->table[i * dim() + j];
  }
  const std::vector<SparseVector>& table() const { return data_->table; }

  std::vector<Integer> multiply(std::span<const Integer> x, std::span<const Integer> y) const;
  std::vector<Integer> basis_vector(std::size_t i) const;

  friend bool operator==(const SuperAlgebra& a, const SuperAlgebra& b);

 private:
  struct Data {
    SuperModule carrier;
    std::vector<Integer> unit;
    std::vector<SparseVector> table;
  };
  std::shared_ptr<const Data> data_;
};

/// The ground ring k as a one-dimensional even algebra.
SuperAlgebra ground(const Ring& ring);

/// (a1 (x) b1)(a2 (x) b2) = (-1)^{|b1||a2|} a1a2 (x) b1b2, unit 1_A (x) 1_B.
SuperAlgebra tensor_algebra(const SuperAlgebra& a, const SuperAlgebra& b);

/// End(k^{n|m}) on the matrix units e(j,i).
SuperAlgebra endomorphism_algebra(const Ring& ring, std::size_t n, std::size_t m);

/// M_{n|m}(A) realised as A (x) End(k^{n|m}); basis a_r (x) e(j,i).
SuperAlgebra matrix_superalgebra(const SuperAlgebra& a, std::size_t n, std::size_t m);

/// Carrier index of a_r (x) e(j,i) in matrix_superalgebra(A, n, m); 0-based.
class MatrixLayout {
 public:
  MatrixLayout(const SuperAlgebra& a, std::size_t n, std::size_t m);
  std::uint32_t index(std::size_t r, std::size_t j, std::size_t i) const;
  std::size_t size() const { return n_ + m_; }

 private:
  std::size_t n_, m_;
  supermod::TensorModule layout_;
  supermod::HomModule units_;
};

enum class CliffordSign { Plus, Minus };

/// Rank-one Clifford superalgebra: even 1, odd c, c^2 = +1 (or -1).
SuperAlgebra clifford1(const Ring& ring, CliffordSign sign = CliffordSign::Plus);

/// k S_d concentrated in degree zero, basis in lexicographic one-line order.
SuperAlgebra group_algebra_sym(std::size_t d, const Ring& ring, const Limits& limits = {});

struct AxiomViolation {
  enum class Kind { UnitParity, LeftUnit, RightUnit, Grading, Associativity };
  Kind kind;
  std::size_t i = 0, j = 0, k = 0;
  std::string describe() const;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  std::size_t triples_checked = 0;
  bool passed() const { return violations.empty(); }
};

/// Exhaustive check of unit laws, grading of the structure constants and
/// associativity on every basis triple.
AxiomReport check_superalgebra(const SuperAlgebra& a);

}  // namespace superschur::salg
