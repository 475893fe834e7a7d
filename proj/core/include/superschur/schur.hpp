#pragma once

// Generalized Schur superalgebras S^A(n,d) = Gamma^d M_n(A) and
// S^A(m|n,d) = Gamma^d M_{m|n}(A), weight idempotents and the surjectivity of
// divided-power composition.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "superschur/divpow.hpp"
#include "superschur/salg.hpp"

namespace superschur::schur {

using coeff::Integer;
using divpow::DividedBasis;
using divpow::DividedPowerAlgebra;
using salg::SuperAlgebra;

/// A composition of d into n nonnegative parts.
using Weight = std::vector<std::size_t>;

/// Lambda(n,d) in descending lexicographic order, e.g. (2,0), (1,1), (0,2).
std::vector<Weight> weights(std::size_t n, std::size_t d);

/// Gamma^d M_{even|odd}(A). The first block of the matrix algebra is even.
class SchurAlgebra {
 public:
  SchurAlgebra(SuperAlgebra base, std::size_t even, std::size_t odd, std::size_t d,
               const Limits& limits = {});

  const SuperAlgebra& base_algebra() const { return data_->base; }
  std::size_t even_block() const { return data_->even; }
  std::size_t odd_block() const { return data_->odd; }
  std::size_t degree() const { return data_->divided.degree(); }
  const SuperAlgebra& matrix_algebra() const { return data_->divided.base(); }
  const salg::MatrixLayout& layout() const { return data_->layout; }
  const DividedPowerAlgebra& divided() const { return data_->divided; }
  const DividedBasis& labels() const { return data_->divided.basis(); }
  std::size_t dim() const { return data_->divided.dim(); }
  const std::vector<Integer>& unit() const { return data_->divided.unit(); }

  std::vector<Integer> multiply(std::span<const Integer> x, std::span<const Integer> y) const {
    return data_->divided.multiply(x, y);
  }

  /// The full structure-constant table, built once on first use.
  const SuperAlgebra& algebra() const;

 private:
  struct Data {
    Data(SuperAlgebra b, std::size_t e, std::size_t o, salg::MatrixLayout l, DividedPowerAlgebra g)
        : base(std::move(b)), even(e), odd(o), layout(std::move(l)), divided(std::move(g)) {}
    SuperAlgebra base;
    std::size_t even, odd;
    salg::MatrixLayout layout;
    DividedPowerAlgebra divided;
    mutable std::once_flag once;
    mutable std::optional<SuperAlgebra> table;
  };
  std::shared_ptr<const Data> data_;
};

/// S^A(n,d), n,d >= 1.
SchurAlgebra schur_algebra(const SuperAlgebra& a, std::size_t n, std::size_t d,
                           const Limits& limits = {});

/// S^A(m|n,d) with m even and n odd generators, m+n >= 1, d >= 1.
SchurAlgebra schur_algebra_super(const SuperAlgebra& a, std::size_t m, std::size_t n,
                                 std::size_t d, const Limits& limits = {});

/// xi_lambda: the divided product of the diagonal idempotents 1_A (x) e(i,i)
/// taken lambda_i times. Requires a purely even block structure.
std::vector<Integer> weight_idempotent(const SchurAlgebra& s, const Weight& lambda);

struct SurjectivityReport {
  std::size_t dim_outer = 0;   // dim Gamma^d Hom_A(A^{m|n}, A^{s|t})
  std::size_t dim_inner = 0;   // dim Gamma^d Hom(k^{p|q}, k^{m|n})
  std::size_t target_dim = 0;  // dim Gamma^d Hom_A(A^{p|q}, A^{s|t})
  std::size_t rank = 0;
  std::uint64_t prime = 0;
  bool full_rank() const { return rank == target_dim; }
};

/// Rank over F_p of the composition
/// Gamma^d Hom_A(A^{m|n}, A^{s|t}) (x) Gamma^d Hom(k^{p|q}, k^{m|n}) -> Gamma^d Hom_A(A^{p|q}, A^{s|t}).
SurjectivityReport composition_surjectivity_check(const SuperAlgebra& a, std::size_t d,
                                                  std::size_t m, std::size_t n,
                                                  std::pair<std::size_t, std::size_t> source,
                                                  std::pair<std::size_t, std::size_t> target,
                                                  std::uint64_t prime,
                                                  const Limits& limits = {});

}  // namespace superschur::schur
