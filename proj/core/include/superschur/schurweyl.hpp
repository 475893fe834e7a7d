#pragma once

// Wreath products A wr S_d, the (S^A(n,d), A wr S_d)-bimodule V^{(x)d} with
// V = A^n, commutants, and the rank checks behind Schur-Weyl duality.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "superschur/coeff.hpp"
#include "superschur/salg.hpp"
#include "superschur/schur.hpp"
#include "superschur/symact.hpp"

namespace superschur::schurweyl {

using coeff::Integer;
using coeff::SparseMatrix;
using salg::SuperAlgebra;
using schur::SchurAlgebra;
using supermod::Parity;
using supermod::SuperModule;
using symact::Permutation;
using symact::TensorVector;
using symact::Word;

/// A^{(x)d} (x) kS_d with (x (x) rho)(y (x) sigma) = x (y.rho^{-1}) (x) rho sigma.
/// Basis labels (word, permutation), even labels first, otherwise ordered by
/// word then permutation.
class WreathAlgebra {
 public:
  WreathAlgebra(SuperAlgebra base, std::size_t d, const Limits& limits = {});

  const SuperAlgebra& base() const { return data_->base; }
  std::size_t degree() const { return data_->degree; }
  const SuperAlgebra& algebra() const { return data_->algebra; }
  std::size_t dim() const { return data_->algebra.dim(); }
  const Word& word(std::size_t i) const { return data_->labels[i].first; }
  const Permutation& perm(std::size_t i) const { return data_->perms[data_->labels[i].second]; }
  std::size_t index(const Word& w, const Permutation& p) const;

 private:
  struct Data {
    SuperAlgebra base;
    std::size_t degree;
    std::vector<Permutation> perms;
    std::vector<std::pair<Word, std::size_t>> labels;
    std::vector<std::size_t> position;  // word_index * d! + perm_index -> label
    SuperAlgebra algebra;
  };
  std::shared_ptr<const Data> data_;
};

WreathAlgebra wreath(const SuperAlgebra& a, std::size_t d, const Limits& limits = {});

struct BimoduleChecks {
  std::size_t left_pairs = 0;
  std::size_t right_pairs = 0;
  std::size_t commuting_pairs = 0;
  /// False when the Schur side was sampled because dim(S)^2 * dim V^{(x)d}
  /// exceeds the verification budget.
  bool exhaustive = true;
};

/// V^{(x)d} for V = A (x) k^n, with S^A(n,d) acting on the left through
/// M_n(A)^{(x)d} and A wr S_d on the right. Operators are stored column-wise
/// in the lexicographic word basis of V^{(x)d}. The constructor verifies both
/// module axioms, the unit laws and the commutation of the two actions on
/// basis elements (see BimoduleChecks) and throws std::logic_error on any
/// failure.
class Bimodule {
 public:
  Bimodule(SuperAlgebra base, std::size_t n, std::size_t d, const Limits& limits = {});

  const SchurAlgebra& schur() const { return data_->schur; }
  const WreathAlgebra& wreath() const { return data_->wreath; }
  /// V = A (x) k^n.
  const SuperModule& space() const { return data_->space; }
  const symact::TensorPower& tensor_space() const { return data_->power; }
  std::size_t n() const { return data_->n; }
  std::size_t degree() const { return data_->power.degree(); }
  std::size_t dim() const { return data_->power.dim(); }
  const coeff::Ring& ring() const { return data_->schur.base_algebra().ring(); }

  /// Operator of the Schur basis element i.
  const SparseMatrix& left(std::size_t i) const { return data_->left[i]; }
  /// Operator x -> x . w of the wreath basis element i.
  const SparseMatrix& right(std::size_t i) const { return data_->right[i]; }
  /// Operator of an arbitrary element of S^A(n,d).
  SparseMatrix left_operator(std::span<const Integer> s) const;
  /// Parity of the word with the given index.
  Parity parity(std::size_t word_index) const { return data_->parities[word_index]; }
  const BimoduleChecks& checks() const { return data_->checks; }

 private:
  struct Data {
    SchurAlgebra schur;
    WreathAlgebra wreath;
    SuperModule space;
    symact::TensorPower power;
    std::size_t n;
    std::vector<Parity> parities;
    std::vector<SparseMatrix> left;
    std::vector<SparseMatrix> right;
    BimoduleChecks checks;
  };
  std::shared_ptr<const Data> data_;
};

Bimodule tensor_space(const SuperAlgebra& a, std::size_t n, std::size_t d,
                      const Limits& limits = {});

enum class Side { Left, Right };

/// Endomorphisms of V^{(x)d} commuting with every operator of one side,
/// over F_p. Rows of `basis` are flattened dim x dim matrices (row-major) in
/// reduced echelon form; the first `even_dim` rows are even maps.
struct CommutantBasis {
  coeff::FpMatrix basis;
  std::vector<std::size_t> pivots;
  std::size_t even_dim = 0;
  std::size_t dim() const { return basis.rows(); }
};

CommutantBasis commutant_basis(const Bimodule& b, Side side, std::uint64_t prime);

/// The commutant as a superalgebra over Z/p with multiplication X*Y = X o Y.
struct Commutant {
  SuperAlgebra algebra;
  CommutantBasis basis;
};

Commutant commutant(const Bimodule& b, Side side, std::uint64_t prime);

struct WreathToEndReport {
  std::uint64_t prime = 0;
  std::size_t wreath_dim = 0;
  std::size_t image_rank = 0;
  std::size_t commutant_dim = 0;
  /// R(w w') = R(w') o R(w) exactly on all basis pairs (End acting on the right).
  bool is_homomorphism = false;
  bool image_in_commutant = false;
  bool injective() const { return image_rank == wreath_dim; }
  bool surjective_onto_commutant() const {
    return image_in_commutant && image_rank == commutant_dim;
  }
};

/// With `with_commutant` false only multiplicativity and the image rank are
/// computed; commutant_dim stays 0 and image_in_commutant false.
WreathToEndReport wreath_to_end(const Bimodule& b, std::uint64_t prime, bool with_commutant = true);

struct XiOmegaReport {
  std::uint64_t prime = 0;
  bool even = false;
  bool idempotent = false;
  std::size_t tensor_dim = 0;        // dim V^{(x)d}
  std::size_t left_rank = 0;         // dim S xi
  std::size_t intertwiner_rank = 0;  // rank of S xi -> V^{(x)d}, x -> x . v_omega
  std::size_t wreath_dim = 0;
  std::size_t corner_rank = 0;       // dim xi S xi
  bool passed() const {
    return even && idempotent && left_rank == tensor_dim && intertwiner_rank == tensor_dim &&
           corner_rank == wreath_dim;
  }
};

/// Requires n >= d.
XiOmegaReport xi_omega_check(const Bimodule& b, std::uint64_t prime);

}  // namespace superschur::schurweyl
