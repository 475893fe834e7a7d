#pragma once

// Symmetric groups acting on tensor powers of supermodules by signed place
// permutations.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "superschur/coeff.hpp"
#include "superschur/supermod.hpp"

namespace superschur::symact {

using coeff::Integer;
using coeff::Ring;
using supermod::Parity;
using supermod::SuperModule;

/// An element of S_d. Composition is functional: (a * b)(k) = a(b(k)).
class Permutation {
 public:
  static Permutation identity(std::size_t d);
  /// Validates that `images` (1-based) is a bijection of {1..d}.
  static Permutation from_images(std::span<const std::uint32_t> images);
  /// The transposition (i j), 1-based.
  static Permutation transposition(std::size_t d, std::size_t i, std::size_t j);

  std::size_t degree() const { return images_.size(); }
  /// Image of the 0-based point k, 0-based.
  std::uint32_t operator()(std::size_t k) const { return images_[k]; }
  /// 1-based images.
  std::vector<std::uint32_t> images() const;
  Permutation inverse() const;
  bool is_identity() const;
  /// One-line notation, e.g. "[2,1,3]".
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::uint32_t> zero_based) : images_(std::move(zero_based)) {}
  std::vector<std::uint32_t> images_;
};

/// All d! permutations in lexicographic order of their one-line notation.
std::vector<Permutation> all_permutations(std::size_t d);

std::uint64_t factorial(std::size_t d);

/// A basis word of M^{(x)d}: one basis index of M per tensor position.
using Word = std::vector<std::uint32_t>;

/// Sparse element of a tensor power, keyed by basis word.
using TensorVector = std::map<Word, Integer>;

void add_term(TensorVector& x, const Word& w, const Integer& c, const Ring& ring);
TensorVector scaled(const TensorVector& x, const Integer& c, const Ring& ring);
TensorVector sum(const TensorVector& x, const TensorVector& y, const Ring& ring);

/// M^{(x)d} with words indexed lexicographically (first letter most significant).
class TensorPower {
 public:
  TensorPower(SuperModule base, std::size_t degree, const Limits& limits = {});

  const SuperModule& base() const { return base_; }
  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return dim_; }
  std::size_t index(const Word& w) const;
  Word word(std::size_t index) const;
  Parity parity(const Word& w) const;

  std::vector<Integer> to_dense(const TensorVector& x) const;
  TensorVector from_dense(std::span<const Integer> coeffs) const;

 private:
  SuperModule base_;
  std::size_t degree_;
  std::size_t dim_;
};

/// Letter at position k of w.sigma is w[sigma(k)].
Word permute_word(const Word& w, const Permutation& sigma);

/// Sign of w.sigma: (-1)^(number of odd-odd pairs whose order sigma reverses).
int act_sign(const Word& w, const SuperModule& base, const Permutation& sigma);

/// Sign that sorts the odd letters of w into ascending order (odd letters distinct).
int odd_inversion_sign(const Word& w, const SuperModule& base);

/// The signed right place action x.sigma. Satisfies (x.rho).sigma = x.(rho*sigma).
TensorVector act(const TensorVector& x, const SuperModule& base, const Permutation& sigma);

/// True when x is fixed by every adjacent transposition.
bool is_invariant(const TensorVector& x, const SuperModule& base);

/// Basis (rows) of (M^{(x)d})^{S_d} over F_p, as the joint kernel of
/// act(-, s_i) - id for the adjacent transpositions. Brute force.
coeff::FpMatrix invariants(const SuperModule& m, std::size_t d, std::uint64_t prime,
                           const Limits& limits = {});

/// Matrix of act(-, sigma) on M^{(x)d} in the lexicographic word basis.
coeff::Matrix action_matrix(const TensorPower& power, const Permutation& sigma);

/// Minimal-length shuffles tau with tau increasing on each block of sizes
/// `blocks`, one per coset of the Young subgroup. Blocks of size (d, e) give
/// C(d+e, d) shuffles; subsets are enumerated in colex order. The shuffle
/// tau moves block letters to positions tau(k), i.e. x.tau^{-1}.
std::vector<Permutation> multi_shuffles(std::span<const std::size_t> blocks);
std::vector<Permutation> coset_reps(std::size_t d, std::size_t e);

/// Letterwise bilinear map: f(i, j) is the image of (left letter i, right letter j).
using LetterProduct = std::function<const coeff::SparseVector&(std::uint32_t, std::uint32_t)>;

/// Applies (x_1..x_d) (x) (y_1..y_d) -> sign * f(x_1,y_1) (x) ... (x) f(x_d,y_d)
/// where sign = (-1)^{sum_{i<j} |y_i||x_j|}: the Koszul sign of moving every
/// right letter past the later left letters.
TensorVector interleave_apply(const TensorVector& x, const SuperModule& left,
                              const TensorVector& y, const SuperModule& right,
                              const LetterProduct& f, const Ring& ring);

/// Letterwise linear map: f(i) is the image of letter i. `map_parity` is the
/// parity of the homogeneous map applied in every slot; the k-th copy passes
/// the first k-1 letters.
TensorVector apply_letterwise(const TensorVector& x, const SuperModule& base, Parity map_parity,
                              const std::function<const coeff::SparseVector&(std::uint32_t)>& f,
                              const Ring& ring);

}  // namespace superschur::symact
