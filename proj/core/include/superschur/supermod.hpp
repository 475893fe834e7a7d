#pragma once

// Free k-supermodules with ordered parity-tagged bases and sign-correct
// linear maps between them.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superschur/coeff.hpp"

namespace superschur::supermod {

using coeff::Integer;
using coeff::Matrix;
using coeff::Ring;

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr int bit(Parity p) { return static_cast<int>(p); }
constexpr Parity parity_of(int bit) { return (bit & 1) ? Parity::Odd : Parity::Even; }
/// (-1)^(a*b) as +1/-1.
constexpr int koszul_sign(Parity a, Parity b) { return (bit(a) & bit(b)) ? -1 : 1; }

/// A free module with a basis ordered even-first. Copies share storage.
class SuperModule {
 public:
  /// Throws unless names are distinct, lengths agree and evens precede odds.
  SuperModule(Ring ring, std::vector<std::string> names, std::vector<Parity> parities);

  /// k^{even|odd} with basis prefix1..prefix(even+odd).
  static SuperModule standard(Ring ring, std::size_t even, std::size_t odd,
                              std::string_view prefix = "v");

  /// Stable even-first reordering of an arbitrary basis. `position[i]` is the
  /// canonical index of original basis vector i.
  struct Canonical;
  static Canonical canonicalize(Ring ring, std::vector<std::string> names,
                                std::vector<Parity> parities);

  const Ring& ring() const { return data_->ring; }
  std::size_t dim() const { return data_->names.size(); }
  std::size_t even_dim() const { return data_->even_dim; }
  std::size_t odd_dim() const { return dim() - even_dim(); }
  const std::string& name(std::size_t i) const { return data_->names[i]; }
  Parity parity(std::size_t i) const { return i < data_->even_dim ? Parity::Even : Parity::Odd; }
  const std::vector<std::string>& names() const { return data_->names; }
  std::vector<Parity> parities() const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const SuperModule& a, const SuperModule& b);

 private:
  struct Data {
    Ring ring;
    std::vector<std::string> names;
    std::size_t even_dim;
  };
  std::shared_ptr<const Data> data_;
};

struct SuperModule::Canonical {
  SuperModule module;
  std::vector<std::size_t> position;
};

struct Vector {
  SuperModule module;
  std::vector<Integer> coeffs;

  static Vector zero(const SuperModule& m) { return {m, std::vector<Integer>(m.dim())}; }
  static Vector basis(const SuperModule& m, std::size_t i);
  friend bool operator==(const Vector&, const Vector&) = default;
};

/// M (x) N with the lexicographic pair basis reordered even-first.
struct TensorModule {
  SuperModule module;
  std::size_t left_dim;
  std::size_t right_dim;
  std::vector<std::uint32_t> position;                           // i*right_dim + j -> canonical
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // canonical -> (i, j)

  std::uint32_t index(std::size_t i, std::size_t j) const { return position[i * right_dim + j]; }
};

/// Hom(M, N) with matrix-unit basis e(j,i): source index i, target index j.
struct HomModule {
  SuperModule module;
  std::size_t source_dim;
  std::size_t target_dim;
  std::vector<std::uint32_t> position;                           // j*source_dim + i -> canonical
  std::vector<std::pair<std::uint32_t, std::uint32_t>> units;    // canonical -> (j, i)

  std::uint32_t index(std::size_t j, std::size_t i) const { return position[j * source_dim + i]; }
};

/// M (+) N; M's basis precedes N's within each parity block.
struct DirectSum {
  SuperModule module;
  std::vector<std::uint32_t> left_position;
  std::vector<std::uint32_t> right_position;
};

TensorModule tensor(const SuperModule& m, const SuperModule& n);
HomModule hom_module(const SuperModule& m, const SuperModule& n);
DirectSum direct_sum(const SuperModule& m, const SuperModule& n);

/// Parity of e(j,i) in Hom(M,N): even iff both indices lie in blocks of equal parity.
Parity matrix_unit_parity(const SuperModule& source, std::size_t i, const SuperModule& target,
                          std::size_t j);

/// A k-linear map stored as its even and odd homogeneous parts. Matrices
/// are target.dim x source.dim; column i is the image of source basis i.
class LinearMap {
 public:
  LinearMap(SuperModule source, SuperModule target, Matrix even_part, Matrix odd_part);

  /// Splits an arbitrary matrix into its homogeneous parts.
  static LinearMap from_matrix(SuperModule source, SuperModule target, const Matrix& m);
  static LinearMap identity(const SuperModule& m);
  static LinearMap zero(SuperModule source, SuperModule target);

  const SuperModule& source() const { return source_; }
  const SuperModule& target() const { return target_; }
  const Matrix& even_part() const { return even_; }
  const Matrix& odd_part() const { return odd_; }
  const Matrix& part(Parity p) const { return p == Parity::Even ? even_ : odd_; }
  Matrix matrix() const { return even_ + odd_; }

  bool is_even() const { return odd_.is_zero(); }
  bool is_odd() const { return even_.is_zero(); }
  /// Parity of a nonzero homogeneous map; throws otherwise.
  Parity parity() const;

  Vector apply(const Vector& v) const;
  LinearMap scaled(const Integer& s) const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  SuperModule source_;
  SuperModule target_;
  Matrix even_;
  Matrix odd_;
};

/// Ordinary composition f o g (apply g first).
LinearMap compose(const LinearMap& f, const LinearMap& g);
LinearMap operator+(const LinearMap& a, const LinearMap& b);

SuperModule parity_change(const SuperModule& m);
/// Pi(phi) = (-1)^{|phi|} phi per homogeneous part, between the parity-changed modules.
LinearMap parity_change_map(const LinearMap& phi);

/// (phi [x] psi)(v (x) w) = (-1)^{|psi||v|} phi(v) (x) psi(w).
LinearMap boxtimes(const LinearMap& phi, const LinearMap& psi);

/// v (x) w -> (-1)^{|v||w|} w (x) v.
LinearMap supertwist(const SuperModule& m, const SuperModule& n);

}  // namespace superschur::supermod
