#pragma once

// Text descriptors for algebras:
//   k | c1 | mat:<n>[|<m>]:(<base>) | schur:<n>:<d>:(<base>)
//   | schur:<m>|<n>:<d>:(<base>) | wreath:<d>:(<base>) | gamma:<d>:(<base>)

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "superschur/coeff.hpp"
#include "superschur/salg.hpp"

namespace superschur::cli {

using coeff::Integer;

struct AlgebraSpec {
  enum class Kind { Ground, Clifford, Matrix, Schur, Wreath, Gamma };
  Kind kind = Kind::Ground;
  std::size_t even = 0;  // even block size for mat / schur
  std::size_t odd = 0;   // odd block size for mat / schur
  std::size_t degree = 0;
  std::shared_ptr<const AlgebraSpec> inner;

  /// Canonical descriptor; parse_spec(to_string()) gives back an equal value.
  std::string to_string() const;
};

/// Throws std::invalid_argument with the offending position on malformed input.
AlgebraSpec parse_spec(std::string_view text);

struct BuildOptions {
  coeff::Ring ring = coeff::Ring::integers();
  salg::CliffordSign clifford = salg::CliffordSign::Plus;
  Limits limits{};
};

struct SuperDims {
  Integer even = 0;
  Integer odd = 0;
  Integer total() const { return even + odd; }
};

/// Dimensions from closed formulas; nothing is constructed.
SuperDims spec_dims(const AlgebraSpec& spec);

/// One summand of dim Gamma^d(k^{mu|nu}) = sum_j C(mu+d-j-1, d-j) C(nu, j).
struct GammaTerm {
  std::size_t odd_letters;
  Integer even_choices;
  Integer odd_choices;
  Integer value() const { return even_choices * odd_choices; }
};

/// Breakdown for gamma and schur specs over the dimensions of the inner
/// module; empty for other kinds.
std::vector<GammaTerm> gamma_breakdown(const AlgebraSpec& spec);

/// Constructs the algebra. Checks spec_dims against limits.max_algebra_dim at
/// every node before building it and throws SizeLimitError when exceeded.
salg::SuperAlgebra build(const AlgebraSpec& spec, const BuildOptions& options);

}  // namespace superschur::cli
