#include "superschur/divpow.hpp"

#include <algorithm>
#include <stdexcept>

namespace superschur::divpow {

namespace {

std::string wrapped(const std::string& name) {
  const bool compound = name.find("⊗") != std::string::npos ||
                        name.find("·") != std::string::npos ||
                        name.find('^') != std::string::npos;
  return compound ? "(" + name + ")" : name;
}

// Canonical words in lexicographic order: nondecreasing, odd letters distinct.
void enumerate_words(const SuperModule& m, std::size_t d, Word& prefix,
                     std::vector<Word>& out) {
  if (prefix.size() == d) {
    out.push_back(prefix);
    return;
  }
  std::uint32_t start = 0;
  if (!prefix.empty()) {
    start = prefix.back();
    if (m.parity(start) == Parity::Odd) ++start;
  }
  for (std::uint32_t letter = start; letter < m.dim(); ++letter) {
    prefix.push_back(letter);
    enumerate_words(m, d, prefix, out);
    prefix.pop_back();
  }
}

void check_tensor_size(const SuperModule& m, std::size_t d, const Limits& limits) {
  std::size_t words = 1;
  for (std::size_t k = 0; k < d; ++k) {
    if (m.dim() != 0 && words > limits.max_tensor_words / m.dim()) {
      throw SizeLimitError("divided power needs more than " +
                           std::to_string(limits.max_tensor_words) + " tensor words");
    }
    words *= m.dim();
  }
}

TensorVector shift_letters(const TensorVector& x, const std::vector<std::uint32_t>& position,
                           const Ring& ring) {
  TensorVector out;
  for (const auto& [w, c] : x) {
    Word shifted(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) shifted[k] = position[w[k]];
    symact::add_term(out, shifted, c, ring);
  }
  return out;
}

std::vector<coeff::SparseVector> matrix_columns(const coeff::Matrix& m) {
  std::vector<coeff::SparseVector> cols(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m.at(r, c) != 0) cols[c].push_back({static_cast<std::uint32_t>(r), m.at(r, c)});
  return cols;
}

}  // namespace

std::size_t DividedBasisElement::degree() const {
  std::size_t d = odd_part.size();
  for (const auto& [i, k] : even_part) d += k;
  return d;
}

Word DividedBasisElement::canonical_word() const {
  Word w;
  for (const auto& [i, k] : even_part) w.insert(w.end(), k, i);
  w.insert(w.end(), odd_part.begin(), odd_part.end());
  return w;
}

std::string DividedBasisElement::name(const SuperModule& base) const {
  if (even_part.empty() && odd_part.empty()) return "1";
  std::string out;
  auto append = [&](const std::string& factor) {
    if (!out.empty()) out += "·";
    out += factor;
  };
  for (const auto& [i, k] : even_part) {
    std::string factor = wrapped(base.name(i));
    if (k > 1) factor += "^" + std::to_string(k);
    append(factor);
  }
  for (auto j : odd_part) append(wrapped(base.name(j)));
  return out;
}

DividedBasisElement DividedBasisElement::from_canonical_word(const Word& w,
                                                             const SuperModule& base) {
  DividedBasisElement e;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0 && w[k] < w[k - 1]) throw std::invalid_argument("word is not canonical");
    if (base.parity(w[k]) == Parity::Even) {
      if (!e.even_part.empty() && e.even_part.back().first == w[k]) {
        ++e.even_part.back().second;
      } else {
        e.even_part.emplace_back(w[k], 1);
      }
    } else {
      if (!e.odd_part.empty() && e.odd_part.back() == w[k])
        throw std::invalid_argument("odd letter repeated in a divided basis word");
      e.odd_part.push_back(w[k]);
    }
  }
  return e;
}

DividedBasis::DividedBasis(SuperModule base, std::size_t degree, const Limits& limits) {
  check_tensor_size(base, degree, limits);
  std::vector<Word> words;
  Word prefix;
  enumerate_words(base, degree, prefix, words);
  std::stable_partition(words.begin(), words.end(), [&](const Word& w) {
    return DividedBasisElement::from_canonical_word(w, base).parity() == Parity::Even;
  });

  std::vector<DividedBasisElement> elements;
  std::vector<std::string> names;
  std::vector<Parity> parities;
  for (const auto& w : words) {
    auto e = DividedBasisElement::from_canonical_word(w, base);
    names.push_back(e.name(base));
    parities.push_back(e.parity());
    elements.push_back(std::move(e));
  }
  std::vector<std::size_t> by_word(words.size());
  for (std::size_t i = 0; i < by_word.size(); ++i) by_word[i] = i;
  std::sort(by_word.begin(), by_word.end(),
            [&](std::size_t a, std::size_t b) { return words[a] < words[b]; });

  SuperModule module(base.ring(), std::move(names), std::move(parities));
  data_ = std::make_shared<const Data>(Data{std::move(base), degree, std::move(elements),
                                            std::move(words), std::move(by_word),
                                            std::move(module)});
}

std::optional<std::size_t> DividedBasis::find(const Word& canonical) const {
  const auto& d = *data_;
  auto it = std::lower_bound(d.by_word.begin(), d.by_word.end(), canonical,
                             [&](std::size_t i, const Word& w) { return d.words[i] < w; });
  if (it == d.by_word.end() || d.words[*it] != canonical) return std::nullopt;
  return *it;
}

DividedBasis divided_basis(const SuperModule& m, std::size_t d, const Limits& limits) {
  return DividedBasis(m, d, limits);
}

Integer dim_formula(std::size_t mu, std::size_t nu, std::size_t d) {
  Integer total = 0;
  for (std::size_t k = 0; k <= d; ++k) {
    const std::size_t l = d - k;
    const Integer even = mu == 0 ? Integer(k == 0 ? 1 : 0)
                                 : coeff::binomial(static_cast<std::int64_t>(mu + k - 1),
                                                   static_cast<std::int64_t>(k));
    total += even * coeff::binomial(static_cast<std::int64_t>(nu), static_cast<std::int64_t>(l));
  }
  return total;
}

TensorVector expand(const DividedBasisElement& e, const SuperModule& base) {
  // Distinct rearrangements u of the sorted word; the sign of u is the sign
  // that sorts its (distinct) odd letters.
  Word w = e.canonical_word();
  TensorVector out;
  do {
    out.emplace(w, symact::odd_inversion_sign(w, base));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

TensorVector expand(const DividedBasis& basis, std::span<const Integer> coeffs) {
  if (coeffs.size() != basis.size()) throw std::invalid_argument("expand: length mismatch");
  const Ring& ring = basis.base().ring();
  TensorVector out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (ring.is_zero(coeffs[i])) continue;
    for (const auto& [w, c] : expand(basis[i], basis.base())) symact::add_term(out, w, coeffs[i] * c, ring);
  }
  return out;
}

std::vector<Integer> contract(const DividedBasis& basis, const TensorVector& x, bool verify) {
  if (verify && !symact::is_invariant(x, basis.base()))
    throw std::invalid_argument("contract: input is not S_d-invariant");
  const Ring& ring = basis.base().ring();
  std::vector<Integer> out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto it = x.find(basis.canonical_word(i));
    if (it != x.end()) out[i] = ring.reduce(it->second);
  }
  return out;
}

LinearMap psi_d(const SuperModule& m, const SuperModule& n, std::size_t d, const Limits& limits) {
  if (m.ring() != n.ring()) throw std::invalid_argument("psi_d: ring mismatch");
  const Ring& ring = m.ring();
  const DividedBasis bm(m, d, limits), bn(n, d, limits);
  const auto mn = supermod::tensor(m, n);
  const DividedBasis bt(mn.module, d, limits);
  const auto source = supermod::tensor(bm.module(), bn.module());

  std::vector<coeff::SparseVector> pair(m.dim() * n.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < n.dim(); ++j) pair[i * n.dim() + j] = {{mn.index(i, j), 1}};
  const symact::LetterProduct f = [&](std::uint32_t i, std::uint32_t j) -> const coeff::SparseVector& {
    return pair[i * n.dim() + j];
  };

  std::vector<TensorVector> xn(bn.size());
  for (std::size_t b = 0; b < bn.size(); ++b) xn[b] = expand(bn[b], n);
  coeff::Matrix mat(ring, bt.size(), source.module.dim());
  for (std::size_t a = 0; a < bm.size(); ++a) {
    const auto xa = expand(bm[a], m);
    for (std::size_t b = 0; b < bn.size(); ++b) {
      const auto z = symact::interleave_apply(xa, m, xn[b], n, f, ring);
      const auto col = contract(bt, z, true);
      const std::size_t c = source.index(a, b);
      for (std::size_t r = 0; r < col.size(); ++r)
        if (col[r] != 0) mat.set(r, c, col[r]);
    }
  }
  return LinearMap::from_matrix(source.module, bt.module(), mat);
}

LinearMap divided_map(const LinearMap& phi, std::size_t d, const Limits& limits) {
  const Parity p = phi.is_even() ? Parity::Even : phi.parity();
  const DividedBasis bs(phi.source(), d, limits), bt(phi.target(), d, limits);
  const auto cols = matrix_columns(phi.matrix());
  const auto f = [&](std::uint32_t i) -> const coeff::SparseVector& { return cols[i]; };
  const Ring& ring = phi.source().ring();
  coeff::Matrix mat(ring, bt.size(), bs.size());
  for (std::size_t a = 0; a < bs.size(); ++a) {
    const auto image = symact::apply_letterwise(expand(bs[a], phi.source()), phi.source(), p, f, ring);
    const auto col = contract(bt, image, true);
    for (std::size_t r = 0; r < col.size(); ++r)
      if (col[r] != 0) mat.set(r, a, col[r]);
  }
  return LinearMap::from_matrix(bs.module(), bt.module(), mat);
}

std::vector<Integer> outer_product(const DividedBasis& bm, std::span<const Integer> x,
                                   const DividedBasis& bn, std::span<const Integer> y,
                                   const Limits& limits) {
  const Ring& ring = bm.base().ring();
  if (ring != bn.base().ring()) throw std::invalid_argument("outer_product: ring mismatch");
  const auto sum = supermod::direct_sum(bm.base(), bn.base());
  const std::size_t d = bm.degree(), e = bn.degree();
  const DividedBasis target(sum.module, d + e, limits);

  const auto xs = shift_letters(expand(bm, x), sum.left_position, ring);
  const auto ys = shift_letters(expand(bn, y), sum.right_position, ring);
  TensorVector joined;
  for (const auto& [wx, cx] : xs) {
    for (const auto& [wy, cy] : ys) {
      Word w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      symact::add_term(joined, w, cx * cy, ring);
    }
  }
  TensorVector total;
  for (const auto& tau : symact::coset_reps(d, e))
    total = symact::sum(total, symact::act(joined, sum.module, tau.inverse()), ring);
  return contract(target, total, true);
}

std::vector<Integer> comultiply(const DividedBasis& basis, std::span<const Integer> x,
                                std::size_t d, std::size_t e, const Limits& limits) {
  if (basis.degree() != d + e) throw std::invalid_argument("comultiply: degree mismatch");
  const SuperModule& m = basis.base();
  const Ring& ring = m.ring();
  const DividedBasis left(m, d, limits), right(m, e, limits);
  const auto pair = supermod::tensor(left.module(), right.module());
  const auto full = expand(basis, x);

  std::vector<Integer> out(pair.module.dim());
  for (std::size_t a = 0; a < left.size(); ++a) {
    for (std::size_t b = 0; b < right.size(); ++b) {
      Word w = left.canonical_word(a);
      const auto& tail = right.canonical_word(b);
      w.insert(w.end(), tail.begin(), tail.end());
      auto it = full.find(w);
      if (it != full.end()) out[pair.index(a, b)] = ring.reduce(it->second);
    }
  }

  // The block-restricted expansion must reproduce x exactly.
  TensorVector rebuilt;
  for (std::size_t a = 0; a < left.size(); ++a) {
    for (std::size_t b = 0; b < right.size(); ++b) {
      const Integer& c = out[pair.index(a, b)];
      if (c == 0) continue;
      const auto xa = expand(left[a], m);
      const auto xb = expand(right[b], m);
      for (const auto& [wa, ca] : xa) {
        for (const auto& [wb, cb] : xb) {
          Word w = wa;
          w.insert(w.end(), wb.begin(), wb.end());
          symact::add_term(rebuilt, w, c * ca * cb, ring);
        }
      }
    }
  }
  if (rebuilt != full) throw std::logic_error("comultiply: block decomposition failed");
  return out;
}

DividedPowerAlgebra::DividedPowerAlgebra(SuperAlgebra base, std::size_t d, const Limits& limits)
    : data_(nullptr) {
  DividedBasis basis(base.carrier(), d, limits);
  const Ring& ring = base.ring();
  std::vector<TensorVector> expansions(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) expansions[i] = expand(basis[i], base.carrier());

  TensorVector power{{Word{}, Integer(1)}};
  for (std::size_t k = 0; k < d; ++k) {
    TensorVector next;
    for (const auto& [w, c] : power) {
      for (std::size_t i = 0; i < base.dim(); ++i) {
        if (base.unit()[i] == 0) continue;
        Word grown = w;
        grown.push_back(static_cast<std::uint32_t>(i));
        symact::add_term(next, grown, c * base.unit()[i], ring);
      }
    }
    power = std::move(next);
  }
  auto unit = contract(basis, power, true);
  data_ = std::make_shared<const Data>(
      Data{std::move(base), std::move(basis), limits, std::move(expansions), std::move(unit)});
}

TensorVector DividedPowerAlgebra::embed(std::span<const Integer> x) const {
  if (x.size() != dim()) throw std::invalid_argument("embed: length mismatch");
  TensorVector out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (ring().is_zero(x[i])) continue;
    for (const auto& [w, c] : expansion(i)) symact::add_term(out, w, x[i] * c, ring());
  }
  return out;
}

std::vector<Integer> DividedPowerAlgebra::multiply(std::span<const Integer> x,
                                                   std::span<const Integer> y) const {
  const auto& a = data_->base;
  const symact::LetterProduct f = [&](std::uint32_t i, std::uint32_t j) -> const coeff::SparseVector& {
    return a.product(i, j);
  };
  const auto z = symact::interleave_apply(embed(x), a.carrier(), embed(y), a.carrier(), f, ring());
  return contract(basis(), z, false);
}

std::vector<Integer> DividedPowerAlgebra::product(std::size_t i, std::size_t j) const {
  const auto& a = data_->base;
  const symact::LetterProduct f = [&](std::uint32_t p, std::uint32_t q) -> const coeff::SparseVector& {
    return a.product(p, q);
  };
  const auto z = symact::interleave_apply(expansion(i), a.carrier(), expansion(j), a.carrier(), f,
                                          ring());
  return contract(basis(), z, false);
}

SuperAlgebra DividedPowerAlgebra::structure() const {
  const std::size_t n = dim();
  if (n > data_->limits.max_algebra_dim) {
    throw SizeLimitError("divided power algebra of dimension " + std::to_string(n) +
                         " exceeds the cap of " + std::to_string(data_->limits.max_algebra_dim));
  }
  std::vector<coeff::SparseVector> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = coeff::to_sparse(ring(), product(i, j));
  return SuperAlgebra(basis().module(), unit(), std::move(table));
}

SuperAlgebra divided_power_algebra(const SuperAlgebra& a, std::size_t d, const Limits& limits) {
  return DividedPowerAlgebra(a, d, limits).structure();
}

}  // namespace superschur::divpow
