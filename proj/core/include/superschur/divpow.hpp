#pragma once

// Divided powers Gamma^d M = (M^{(x)d})^{S_d} of free supermodules, their
// canonical basis, and the algebra structure on Gamma^d A.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superschur/coeff.hpp"
#include "superschur/salg.hpp"
#include "superschur/supermod.hpp"
#include "superschur/symact.hpp"

namespace superschur::divpow {

using coeff::Integer;
using coeff::Ring;
using salg::SuperAlgebra;
using supermod::LinearMap;
using supermod::Parity;
using supermod::SuperModule;
using symact::TensorVector;
using symact::Word;

/// Even basis indices with multiplicities plus a set of distinct odd indices.
struct DividedBasisElement {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> even_part;  // (index, multiplicity >= 1)
  std::vector<std::uint32_t> odd_part;                             // strictly increasing

  std::size_t degree() const;
  Parity parity() const { return supermod::parity_of(static_cast<int>(odd_part.size())); }
  /// Even letters ascending with multiplicity, then odd letters ascending.
  Word canonical_word() const;
  std::string name(const SuperModule& base) const;

  static DividedBasisElement from_canonical_word(const Word& w, const SuperModule& base);

  friend bool operator==(const DividedBasisElement&, const DividedBasisElement&) = default;
};

/// The basis of Gamma^d M. Even elements come first; within a parity the
/// order is lexicographic in the canonical word. Copies share storage.
class DividedBasis {
 public:
  /// Throws SizeLimitError when (dim M)^d exceeds limits.max_tensor_words.
  DividedBasis(SuperModule base, std::size_t degree, const Limits& limits = {});

  const SuperModule& base() const { return data_->base; }
  std::size_t degree() const { return data_->degree; }
  std::size_t size() const { return data_->elements.size(); }
  const DividedBasisElement& operator[](std::size_t i) const { return data_->elements[i]; }
  const std::vector<DividedBasisElement>& elements() const { return data_->elements; }
  /// Gamma^d M as a supermodule on this basis.
  const SuperModule& module() const { return data_->module; }
  const Word& canonical_word(std::size_t i) const { return data_->words[i]; }
  std::optional<std::size_t> find(const Word& canonical) const;

 private:
  struct Data {
    SuperModule base;
    std::size_t degree;
    std::vector<DividedBasisElement> elements;
    std::vector<Word> words;
    std::vector<std::size_t> by_word;  // element indices sorted by canonical word
    SuperModule module;
  };
  std::shared_ptr<const Data> data_;
};

DividedBasis divided_basis(const SuperModule& m, std::size_t d, const Limits& limits = {});

/// sum_{k+l=d} C(mu+k-1, k) C(nu, l).
Integer dim_formula(std::size_t mu, std::size_t nu, std::size_t d);

/// Orbit sum of the canonical word; the canonical word has coefficient +1.
TensorVector expand(const DividedBasisElement& e, const SuperModule& base);
TensorVector expand(const DividedBasis& basis, std::span<const Integer> coeffs);

/// Reads the coefficient of every canonical word. With `verify`, throws
/// std::invalid_argument unless x is S_d-invariant.
std::vector<Integer> contract(const DividedBasis& basis, const TensorVector& x,
                              bool verify = true);

/// psi^d : Gamma^d M (x) Gamma^d N -> Gamma^d (M (x) N). The source is
/// tensor(divided_basis(M,d).module(), divided_basis(N,d).module()) and the
/// target divided_basis(tensor(M,N).module, d).module().
LinearMap psi_d(const SuperModule& m, const SuperModule& n, std::size_t d,
                const Limits& limits = {});

/// Gamma^d(phi), the restriction of phi^{(x)d}, for a homogeneous phi.
LinearMap divided_map(const LinearMap& phi, std::size_t d, const Limits& limits = {});

/// x . y = sum over shuffles of (x (x) y).sigma, landing in
/// Gamma^{d+e}(M (+) N) on divided_basis(direct_sum(M,N).module, d+e).
std::vector<Integer> outer_product(const DividedBasis& bm, std::span<const Integer> x,
                                   const DividedBasis& bn, std::span<const Integer> y,
                                   const Limits& limits = {});

/// Gamma^{d+e} M -> Gamma^d M (x) Gamma^e M, coordinates on
/// tensor(divided_basis(M,d).module(), divided_basis(M,e).module()).
std::vector<Integer> comultiply(const DividedBasis& basis, std::span<const Integer> x,
                                std::size_t d, std::size_t e, const Limits& limits = {});

/// Gamma^d A with products computed on demand from cached expansions.
class DividedPowerAlgebra {
 public:
  DividedPowerAlgebra(SuperAlgebra base, std::size_t d, const Limits& limits = {});

  const SuperAlgebra& base() const { return data_->base; }
  std::size_t degree() const { return data_->basis.degree(); }
  const DividedBasis& basis() const { return data_->basis; }
  std::size_t dim() const { return data_->basis.size(); }
  const Ring& ring() const { return data_->base.ring(); }
  const std::vector<Integer>& unit() const { return data_->unit; }
  const TensorVector& expansion(std::size_t i) const { return data_->expansions[i]; }

  std::vector<Integer> multiply(std::span<const Integer> x, std::span<const Integer> y) const;
  std::vector<Integer> product(std::size_t i, std::size_t j) const;
  TensorVector embed(std::span<const Integer> x) const;

  /// Full structure-constant table. Throws SizeLimitError past max_algebra_dim.
  SuperAlgebra structure() const;

 private:
  struct Data {
    SuperAlgebra base;
    DividedBasis basis;
    Limits limits;
    std::vector<TensorVector> expansions;
    std::vector<Integer> unit;
  };
  std::shared_ptr<const Data> data_;
};

SuperAlgebra divided_power_algebra(const SuperAlgebra& a, std::size_t d,
                                   const Limits& limits = {});

}  // namespace superschur::divpow
