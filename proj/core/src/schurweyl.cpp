#include "superschur/schurweyl.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace superschur::schurweyl {

namespace {

using coeff::FpMatrix;
using coeff::SparseVector;

std::string word_name(const SuperModule& base, const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) out += "⊗";
    out += base.name(w[k]);
  }
  return w.empty() ? "1" : out;
}

SparseVector to_sparse(const symact::TensorPower& power, const TensorVector& x) {
  SparseVector out;
  for (const auto& [w, c] : x)
    if (c != 0) out.push_back({static_cast<std::uint32_t>(power.index(w)), c});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  return out;
}

TensorVector single(const Word& w) { return TensorVector{{w, Integer(1)}}; }

/// sum_k coeffs[k] * ops[k], column by column.
SparseMatrix combination(const coeff::Ring& ring, std::size_t dim,
                         const std::vector<SparseMatrix>& ops,
                         const std::vector<std::pair<std::size_t, Integer>>& terms) {
  SparseMatrix out{ring, dim, dim, std::vector<SparseVector>(dim)};
  std::vector<Integer> acc(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& [k, v] : terms)
      for (const auto& [r, x] : ops[k].columns[c]) acc[r] += v * x;
    out.columns[c] = coeff::to_sparse(ring, acc);
  }
  return out;
}

std::vector<std::pair<std::size_t, Integer>> nonzero_terms(std::span<const Integer> v) {
  std::vector<std::pair<std::size_t, Integer>> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(i, v[i]);
  return out;
}

std::vector<std::pair<std::size_t, Integer>> nonzero_terms(const SparseVector& v) {
  std::vector<std::pair<std::size_t, Integer>> out;
  for (const auto& [i, c] : v) out.emplace_back(i, c);
  return out;
}

// Operators reduced into F_p, column-wise.
using FpColumns = std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>>;

FpColumns reduce_columns(const SparseMatrix& m, std::uint64_t p) {
  FpColumns out(m.cols);
  for (std::size_t c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.columns[c]) {
      const auto x = coeff::reduce_mod(v, p);
      if (x != 0) out[c].emplace_back(r, x);
    }
  return out;
}

bool is_diagonal(const FpColumns& cols) {
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c])
      if (r != c) return false;
  return true;
}

std::uint64_t diagonal_entry(const FpColumns& cols, std::size_t c) {
  return cols[c].empty() ? 0 : cols[c].front().second;
}

// Solution space of X L = L X inside the span of the matrix units listed in
// `unknowns` (flattened r*dim + c), for every operator in `ops`.
FpMatrix solve_block(const std::vector<std::size_t>& unknowns, const std::vector<FpColumns>& ops,
                     std::size_t dim, std::uint64_t p) {
  const std::size_t u = unknowns.size();
  FpMatrix basis(p, u, u);
  for (std::size_t i = 0; i < u; ++i) basis.set(i, i, std::uint64_t{1});

  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> xcols(dim);
  std::vector<std::uint64_t> image(dim * dim);
  for (const auto& op : ops) {
    if (basis.rows() == 0) break;
    const std::size_t k = basis.rows();
    FpMatrix eq(p, dim * dim, k);
    for (std::size_t b = 0; b < k; ++b) {
      for (auto& col : xcols) col.clear();
      for (std::size_t i = 0; i < u; ++i) {
        const auto v = basis.at(b, i);
        if (v == 0) continue;
        xcols[unknowns[i] % dim].emplace_back(static_cast<std::uint32_t>(unknowns[i] / dim), v);
      }
      std::fill(image.begin(), image.end(), 0);
      for (std::size_t c = 0; c < dim; ++c) {
        // (X L)[:, c] = sum_t L[t][c] X[:, t]
        for (const auto& [t, lv] : op[c])
          for (const auto& [r, xv] : xcols[t]) image[r * dim + c] = (image[r * dim + c] + lv * xv) % p;
        // (L X)[:, c] = sum_t X[t][c] L[:, t]
        for (const auto& [t, xv] : xcols[c])
          for (const auto& [r, lv] : op[t])
            image[r * dim + c] = (image[r * dim + c] + (p - lv) * xv % p) % p;
      }
      for (std::size_t e = 0; e < dim * dim; ++e)
        if (image[e] != 0) eq.set(e, b, image[e]);
    }
    const FpMatrix kernel = eq.nullspace();
    if (kernel.rows() == k) continue;
    FpMatrix next(p, kernel.rows(), u);
    for (std::size_t r = 0; r < kernel.rows(); ++r)
      for (std::size_t j = 0; j < k; ++j) {
        const auto y = kernel.at(r, j);
        if (y == 0) continue;
        for (std::size_t i = 0; i < u; ++i) {
          const auto x = basis.at(j, i);
          if (x != 0) next.set(r, i, (next.at(r, i) + y * x) % p);
        }
      }
    basis = std::move(next);
  }
  return basis;
}

std::vector<std::uint64_t> dense_product(const std::vector<std::uint64_t>& x,
                                         const std::vector<std::uint64_t>& y, std::size_t dim,
                                         std::uint64_t p) {
  std::vector<std::uint64_t> out(dim * dim, 0);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t t = 0; t < dim; ++t) {
      const auto a = x[r * dim + t];
      if (a == 0) continue;
      for (std::size_t c = 0; c < dim; ++c) {
        const auto b = y[t * dim + c];
        if (b != 0) out[r * dim + c] = (out[r * dim + c] + a * b) % p;
      }
    }
  return out;
}

// Coordinates of `target` in the echelon basis; throws if it is not in the span.
std::vector<Integer> coordinates(const CommutantBasis& cb, const std::vector<std::uint64_t>& target,
                                 std::uint64_t p) {
  const auto& basis = cb.basis;
  std::vector<Integer> coords(basis.rows());
  std::vector<std::uint64_t> rebuilt(target.size(), 0);
  for (std::size_t a = 0; a < basis.rows(); ++a) {
    const auto c = target[cb.pivots[a]];
    coords[a] = c;
    if (c == 0) continue;
    for (std::size_t e = 0; e < target.size(); ++e)
      rebuilt[e] = (rebuilt[e] + c * basis.at(a, e)) % p;
  }
  if (rebuilt != target) throw std::logic_error("commutant is not closed under composition");
  return coords;
}

constexpr std::size_t kExhaustiveWork = 5'000'000;
constexpr std::size_t kSampleSize = 8;

}  // namespace

// --- wreath products -------------------------------------------------------

WreathAlgebra::WreathAlgebra(SuperAlgebra base, std::size_t d, const Limits& limits) {
  if (d == 0) throw std::invalid_argument("wreath product needs d >= 1");
  const symact::TensorPower words(base.carrier(), d, limits);
  if (d > 12 || words.dim() * symact::factorial(d) > limits.max_algebra_dim) {
    throw SizeLimitError("wreath product exceeds the dimension cap of " +
                         std::to_string(limits.max_algebra_dim));
  }
  auto perms = symact::all_permutations(d);
  const std::size_t nperm = perms.size();
  const coeff::Ring& ring = base.ring();

  std::vector<std::pair<Word, std::size_t>> labels;
  for (std::size_t w = 0; w < words.dim(); ++w)
    for (std::size_t p = 0; p < nperm; ++p) labels.emplace_back(words.word(w), p);
  std::stable_partition(labels.begin(), labels.end(), [&](const auto& l) {
    return words.parity(l.first) == Parity::Even;
  });
  std::vector<std::size_t> position(labels.size());
  std::vector<std::string> names;
  std::vector<Parity> parities;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    position[words.index(labels[i].first) * nperm + labels[i].second] = i;
    names.push_back(word_name(base.carrier(), labels[i].first) + "·" +
                    perms[labels[i].second].to_string());
    parities.push_back(words.parity(labels[i].first));
  }
  SuperModule carrier(ring, std::move(names), std::move(parities));

  const symact::LetterProduct f = [&](std::uint32_t i, std::uint32_t j) -> const SparseVector& {
    return base.product(i, j);
  };
  auto perm_index = [&](const Permutation& p) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };

  const std::size_t n = labels.size();
  std::vector<SparseVector> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& [wx, px] = labels[x];
    const auto rho_inv = perms[px].inverse();
    for (std::size_t y = 0; y < n; ++y) {
      const auto& [wy, py] = labels[y];
      const auto shifted = symact::act(single(wy), base.carrier(), rho_inv);
      const auto z = symact::interleave_apply(single(wx), base.carrier(), shifted, base.carrier(), f, ring);
      const std::size_t prod = perm_index(perms[px] * perms[py]);
      SparseVector cell;
      for (const auto& [w, c] : z)
        cell.push_back({static_cast<std::uint32_t>(position[words.index(w) * nperm + prod]), c});
      table[x * n + y] = std::move(cell);
    }
  }

  // 1_A^{(x)d} (x) id.
  std::vector<Integer> unit(n);
  for (std::size_t w = 0; w < words.dim(); ++w) {
    Integer c = 1;
    for (auto letter : words.word(w)) c *= base.unit()[letter];
    if (c != 0) unit[position[w * nperm + 0]] = ring.reduce(c);
  }

  SuperAlgebra algebra(std::move(carrier), std::move(unit), std::move(table));
  data_ = std::make_shared<const Data>(Data{std::move(base), d, std::move(perms), std::move(labels),
                                            std::move(position), std::move(algebra)});
}

std::size_t WreathAlgebra::index(const Word& w, const Permutation& p) const {
  const symact::TensorPower words(base().carrier(), degree());
  const auto it = std::lower_bound(data_->perms.begin(), data_->perms.end(), p);
  if (it == data_->perms.end() || *it != p) throw std::invalid_argument("permutation degree mismatch");
  return data_->position[words.index(w) * data_->perms.size() +
                         static_cast<std::size_t>(it - data_->perms.begin())];
}

WreathAlgebra wreath(const SuperAlgebra& a, std::size_t d, const Limits& limits) {
  return WreathAlgebra(a, d, limits);
}

// --- the bimodule ----------------------------------------------------------

Bimodule::Bimodule(SuperAlgebra base, std::size_t n, std::size_t d, const Limits& limits) {
  if (n == 0 || d == 0) throw std::invalid_argument("tensor space needs n, d >= 1");
  SchurAlgebra s = schur::schur_algebra(base, n, d, limits);
  WreathAlgebra w(base, d, limits);
  const coeff::Ring& ring = base.ring();
  const auto v = supermod::tensor(base.carrier(), SuperModule::standard(ring, n, 0, "u"));
  symact::TensorPower power(v.module, d, limits);
  const std::size_t dim = power.dim();
  if (dim > 4096) throw SizeLimitError("tensor space has more than 4096 words");

  // (a_r (x) e(j,i)) . (c_q (x) u_l) = delta_{il} a_r c_q (x) u_j; the matrix unit is even.
  const auto& ma = s.matrix_algebra();
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> units(ma.dim());
  for (std::size_t r = 0; r < base.dim(); ++r)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) units[s.layout().index(r, j, i)] = {r, j, i};
  std::vector<SparseVector> left_table(ma.dim() * v.module.dim());
  for (std::size_t phi = 0; phi < ma.dim(); ++phi) {
    const auto [r, j, i] = units[phi];
    for (std::size_t x = 0; x < v.module.dim(); ++x) {
      const auto [q, l] = v.factors[x];
      if (l != i) continue;
      SparseVector cell;
      for (const auto& [t, c] : base.product(r, q)) cell.push_back({v.index(t, j), c});
      std::sort(cell.begin(), cell.end(), [](auto& a, auto& b) { return a.index < b.index; });
      left_table[phi * v.module.dim() + x] = std::move(cell);
    }
  }
  // (c_q (x) u_l) . a = c_q a (x) u_l.
  std::vector<SparseVector> right_table(v.module.dim() * base.dim());
  for (std::size_t x = 0; x < v.module.dim(); ++x) {
    const auto [q, l] = v.factors[x];
    for (std::size_t a = 0; a < base.dim(); ++a) {
      SparseVector cell;
      for (const auto& [t, c] : base.product(q, a)) cell.push_back({v.index(t, l), c});
      std::sort(cell.begin(), cell.end(), [](auto& a2, auto& b2) { return a2.index < b2.index; });
      right_table[x * base.dim() + a] = std::move(cell);
    }
  }
  const std::size_t vdim = v.module.dim();
  const symact::LetterProduct act_left = [&](std::uint32_t phi, std::uint32_t x) -> const SparseVector& {
    return left_table[phi * vdim + x];
  };
  const symact::LetterProduct act_right = [&](std::uint32_t x, std::uint32_t a) -> const SparseVector& {
    return right_table[x * base.dim() + a];
  };

  std::vector<SparseMatrix> left(s.dim(), SparseMatrix{ring, dim, dim, std::vector<SparseVector>(dim)});
  for (std::size_t k = 0; k < s.dim(); ++k) {
    const auto& xs = s.divided().expansion(k);
    for (std::size_t c = 0; c < dim; ++c) {
      const auto image = symact::interleave_apply(xs, ma.carrier(), single(power.word(c)), v.module,
                                                  act_left, ring);
      left[k].columns[c] = to_sparse(power, image);
    }
  }
  std::vector<SparseMatrix> right(w.dim(), SparseMatrix{ring, dim, dim, std::vector<SparseVector>(dim)});
  for (std::size_t k = 0; k < w.dim(); ++k) {
    for (std::size_t c = 0; c < dim; ++c) {
      const auto xa = symact::interleave_apply(single(power.word(c)), v.module, single(w.word(k)),
                                               base.carrier(), act_right, ring);
      right[k].columns[c] = to_sparse(power, symact::act(xa, v.module, w.perm(k)));
    }
  }

  std::vector<Parity> parities(dim);
  for (std::size_t c = 0; c < dim; ++c) parities[c] = power.parity(power.word(c));

  // Module axioms, units and commutation on basis elements. Past the work cap
  // the left-hand factor runs over an evenly spaced sample of the Schur basis.
  BimoduleChecks checks;
  checks.exhaustive = s.dim() * s.dim() * dim <= kExhaustiveWork;
  std::vector<std::size_t> sample;
  const std::size_t step = checks.exhaustive ? 1 : (s.dim() + kSampleSize - 1) / kSampleSize;
  for (std::size_t i = 0; i < s.dim(); i += step) sample.push_back(i);

  const auto id = SparseMatrix::identity(ring, dim);
  if (combination(ring, dim, left, nonzero_terms(s.unit())) != id)
    throw std::logic_error("tensor space: unit of S^A(n,d) does not act as the identity");
  for (std::size_t i : sample)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const auto prod = s.divided().product(i, j);
      if (left[i] * left[j] != combination(ring, dim, left, nonzero_terms(prod)))
        throw std::logic_error("tensor space: left action is not multiplicative");
      ++checks.left_pairs;
    }
  const auto& wa = w.algebra();
  if (combination(ring, dim, right, nonzero_terms(wa.unit())) != id)
    throw std::logic_error("tensor space: unit of the wreath product does not act as the identity");
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j) {
      if (right[j] * right[i] != combination(ring, dim, right, nonzero_terms(wa.product(i, j))))
        throw std::logic_error("tensor space: right action is not multiplicative");
      ++checks.right_pairs;
    }
  for (std::size_t i : sample)
    for (std::size_t j = 0; j < w.dim(); ++j) {
      if (left[i] * right[j] != right[j] * left[i])
        throw std::logic_error("tensor space: left and right actions do not commute");
      ++checks.commuting_pairs;
    }

  data_ = std::make_shared<const Data>(Data{std::move(s), std::move(w), v.module, std::move(power), n,
                                            std::move(parities), std::move(left), std::move(right),
                                            checks});
}

SparseMatrix Bimodule::left_operator(std::span<const Integer> s) const {
  if (s.size() != data_->left.size()) throw std::invalid_argument("left_operator: length mismatch");
  return combination(ring(), dim(), data_->left, nonzero_terms(s));
}

Bimodule tensor_space(const SuperAlgebra& a, std::size_t n, std::size_t d, const Limits& limits) {
  return Bimodule(a, n, d, limits);
}

// --- commutants ------------------------------------------------------------

CommutantBasis commutant_basis(const Bimodule& b, Side side, std::uint64_t prime) {
  coeff::require_reduction_prime(b.ring(), prime);
  const std::size_t dim = b.dim();
  const std::size_t count = side == Side::Left ? b.schur().dim() : b.wreath().dim();
  std::vector<FpColumns> diagonal, general;
  for (std::size_t k = 0; k < count; ++k) {
    auto cols = reduce_columns(side == Side::Left ? b.left(k) : b.right(k), prime);
    (is_diagonal(cols) ? diagonal : general).push_back(std::move(cols));
  }

  // Diagonal operators only allow X[r][c] when r and c carry the same eigenvalues.
  auto same_signature = [&](std::size_t r, std::size_t c) {
    for (const auto& op : diagonal)
      if (diagonal_entry(op, r) != diagonal_entry(op, c)) return false;
    return true;
  };

  CommutantBasis out{FpMatrix(prime, 0, dim * dim), {}, 0};
  for (Parity part : {Parity::Even, Parity::Odd}) {
    std::vector<std::size_t> unknowns;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        if (b.parity(r) + b.parity(c) == part && same_signature(r, c)) unknowns.push_back(r * dim + c);
    if (unknowns.size() * dim * dim > 200'000'000ull)
      throw SizeLimitError("commutant system is too large");
    FpMatrix block = solve_block(unknowns, general, dim, prime);
    block.rref();
    std::vector<std::uint64_t> row(dim * dim);
    for (std::size_t r = 0; r < block.rows(); ++r) {
      std::fill(row.begin(), row.end(), 0);
      bool any = false;
      for (std::size_t i = 0; i < unknowns.size(); ++i) {
        row[unknowns[i]] = block.at(r, i);
        any |= block.at(r, i) != 0;
      }
      if (!any) continue;
      out.basis.append_row(row);
    }
    if (part == Parity::Even) out.even_dim = out.basis.rows();
  }
  for (std::size_t r = 0; r < out.basis.rows(); ++r) {
    std::size_t c = 0;
    while (out.basis.at(r, c) == 0) ++c;
    out.pivots.push_back(c);
  }
  return out;
}

Commutant commutant(const Bimodule& b, Side side, std::uint64_t prime) {
  CommutantBasis cb = commutant_basis(b, side, prime);
  const std::size_t k = cb.dim(), dim = b.dim();
  const auto ring = coeff::Ring::integers_mod(prime);
  std::vector<std::vector<std::uint64_t>> mats(k);
  for (std::size_t a = 0; a < k; ++a) {
    const auto r = cb.basis.row(a);
    mats[a].assign(r.begin(), r.end());
  }
  std::vector<SparseVector> table(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t c = 0; c < k; ++c)
      table[a * k + c] = coeff::to_sparse(ring, coordinates(cb, dense_product(mats[a], mats[c], dim, prime), prime));
  std::vector<std::uint64_t> id(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) id[i * dim + i] = 1;
  auto unit = coordinates(cb, id, prime);

  std::vector<std::string> names;
  std::vector<Parity> parities;
  for (std::size_t a = 0; a < k; ++a) {
    names.push_back("X" + std::to_string(a + 1));
    parities.push_back(a < cb.even_dim ? Parity::Even : Parity::Odd);
  }
  SuperAlgebra algebra(SuperModule(ring, std::move(names), std::move(parities)), std::move(unit),
                       std::move(table));
  return Commutant{std::move(algebra), std::move(cb)};
}

// --- Schur-Weyl checks -------------------------------------------------------

WreathToEndReport wreath_to_end(const Bimodule& b, std::uint64_t prime, bool with_commutant) {
  coeff::require_reduction_prime(b.ring(), prime);
  WreathToEndReport report;
  report.prime = prime;
  const auto& w = b.wreath();
  report.wreath_dim = w.dim();
  const std::size_t dim = b.dim();

  std::vector<SparseMatrix> ops;
  for (std::size_t i = 0; i < w.dim(); ++i) ops.push_back(b.right(i));
  report.is_homomorphism = true;
  for (std::size_t i = 0; i < w.dim() && report.is_homomorphism; ++i)
    for (std::size_t j = 0; j < w.dim(); ++j)
      if (ops[j] * ops[i] != combination(b.ring(), dim, ops, nonzero_terms(w.algebra().product(i, j)))) {
        report.is_homomorphism = false;
        break;
      }

  coeff::FpSpan image(prime, dim * dim);
  for (const auto& op : ops) image.insert(op.flatten(prime));
  report.image_rank = image.rank();
  if (!with_commutant) return report;

  const auto cb = commutant_basis(b, Side::Left, prime);
  report.commutant_dim = cb.dim();
  coeff::FpSpan comm(prime, dim * dim);
  for (std::size_t r = 0; r < cb.dim(); ++r) {
    const auto row = cb.basis.row(r);
    comm.insert(std::vector<std::uint64_t>(row.begin(), row.end()));
  }
  report.image_in_commutant = true;
  for (const auto& op : ops)
    if (!comm.contains(op.flatten(prime))) report.image_in_commutant = false;
  return report;
}

XiOmegaReport xi_omega_check(const Bimodule& b, std::uint64_t prime) {
  coeff::require_reduction_prime(b.ring(), prime);
  const std::size_t n = b.n(), d = b.degree();
  if (n < d) throw std::invalid_argument("xi_omega_check needs n >= d");
  const auto& s = b.schur();
  const auto& ring = b.ring();

  schur::Weight omega(n, 0);
  std::fill(omega.begin(), omega.begin() + static_cast<std::ptrdiff_t>(d), 1);
  const auto xi = schur::weight_idempotent(s, omega);

  XiOmegaReport report;
  report.prime = prime;
  report.tensor_dim = b.dim();
  report.wreath_dim = b.wreath().dim();
  report.even = true;
  for (std::size_t i = s.labels().module().even_dim(); i < xi.size(); ++i)
    if (xi[i] != 0) report.even = false;
  report.idempotent = s.multiply(xi, xi) == xi;

  // v_omega = (1_A (x) u_1) (x) ... (x) (1_A (x) u_d).
  const auto& a = s.base_algebra();
  const auto v = supermod::tensor(a.carrier(), SuperModule::standard(ring, n, 0, "u"));
  TensorVector v_omega{{Word{}, Integer(1)}};
  for (std::size_t i = 0; i < d; ++i) {
    TensorVector next;
    for (const auto& [w, c] : v_omega)
      for (std::size_t r = 0; r < a.dim(); ++r) {
        if (a.unit()[r] == 0) continue;
        auto grown = w;
        grown.push_back(v.index(r, i));
        symact::add_term(next, grown, c * a.unit()[r], ring);
      }
    v_omega = std::move(next);
  }
  const auto v_sparse = to_sparse(b.tensor_space(), v_omega);
  std::vector<SparseVector> images(s.dim());
  for (std::size_t k = 0; k < s.dim(); ++k) images[k] = b.left(k).apply(v_sparse);

  coeff::FpSpan left(prime, s.dim()), corner(prime, s.dim()), inter(prime, b.dim());
  std::vector<Integer> acc(b.dim());
  for (std::size_t k = 0; k < s.dim(); ++k) {
    std::vector<Integer> e(s.dim());
    e[k] = 1;
    const auto sx = s.multiply(e, xi);
    std::vector<std::uint64_t> row(sx.size());
    for (std::size_t i = 0; i < sx.size(); ++i) row[i] = coeff::reduce_mod(sx[i], prime);
    left.insert(row);

    const auto xsx = s.multiply(xi, sx);
    for (std::size_t i = 0; i < xsx.size(); ++i) row[i] = coeff::reduce_mod(xsx[i], prime);
    corner.insert(row);

    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t t = 0; t < sx.size(); ++t) {
      if (sx[t] == 0) continue;
      for (const auto& [r, c] : images[t]) acc[r] += sx[t] * c;
    }
    std::vector<std::uint64_t> irow(b.dim());
    for (std::size_t r = 0; r < acc.size(); ++r) irow[r] = coeff::reduce_mod(acc[r], prime);
    inter.insert(irow);
  }
  report.left_rank = left.rank();
  report.corner_rank = corner.rank();
  report.intertwiner_rank = inter.rank();
  return report;
}

}  // namespace superschur::schurweyl
