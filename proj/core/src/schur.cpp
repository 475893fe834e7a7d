#include "superschur/schur.hpp"

#include <stdexcept>

#include "superschur/symact.hpp"

namespace superschur::schur {

namespace {

void fill_weights(std::size_t n, std::size_t remaining, Weight& prefix, std::vector<Weight>& out) {
  if (prefix.size() + 1 == n) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::size_t k = remaining + 1; k-- > 0;) {
    prefix.push_back(k);
    fill_weights(n, remaining - k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Weight> weights(std::size_t n, std::size_t d) {
  std::vector<Weight> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Weight prefix;
  fill_weights(n, d, prefix, out);
  return out;
}

SchurAlgebra::SchurAlgebra(SuperAlgebra base, std::size_t even, std::size_t odd, std::size_t d,
                           const Limits& limits) {
  if (even + odd == 0) throw std::invalid_argument("Schur algebra needs a nonempty block structure");
  if (d == 0) throw std::invalid_argument("Schur algebra needs d >= 1");
  salg::MatrixLayout layout(base, even, odd);
  DividedPowerAlgebra divided(salg::matrix_superalgebra(base, even, odd), d, limits);
  data_ = std::make_shared<const Data>(std::move(base), even, odd, std::move(layout),
                                      std::move(divided));
}

const SuperAlgebra& SchurAlgebra::algebra() const {
  std::call_once(data_->once, [&] { data_->table = data_->divided.structure(); });
  return *data_->table;
}

SchurAlgebra schur_algebra(const SuperAlgebra& a, std::size_t n, std::size_t d,
                           const Limits& limits) {
  if (n == 0) throw std::invalid_argument("schur_algebra needs n >= 1");
  return SchurAlgebra(a, n, 0, d, limits);
}

SchurAlgebra schur_algebra_super(const SuperAlgebra& a, std::size_t m, std::size_t n,
                                 std::size_t d, const Limits& limits) {
  return SchurAlgebra(a, m, n, d, limits);
}

std::vector<Integer> weight_idempotent(const SchurAlgebra& s, const Weight& lambda) {
  if (s.odd_block() != 0) throw std::invalid_argument("weight idempotents need m = 0");
  const std::size_t n = s.even_block();
  std::size_t total = 0;
  for (auto l : lambda) total += l;
  if (lambda.size() != n || total != s.degree())
    throw std::invalid_argument("not a weight for (n, d)");

  const auto& a = s.base_algebra();
  const auto& m = s.matrix_algebra();
  const coeff::Ring& ring = a.ring();

  // u_1^{(x)lambda_1} (x) ... (x) u_n^{(x)lambda_n}, u_i = 1_A (x) e(i,i).
  symact::TensorVector w{{symact::Word{}, Integer(1)}};
  std::vector<std::size_t> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    if (lambda[i] == 0) continue;
    blocks.push_back(lambda[i]);
    for (std::size_t k = 0; k < lambda[i]; ++k) {
      symact::TensorVector next;
      for (const auto& [word, c] : w) {
        for (std::size_t r = 0; r < a.dim(); ++r) {
          if (a.unit()[r] == 0) continue;
          auto grown = word;
          grown.push_back(s.layout().index(r, i, i));
          symact::add_term(next, grown, c * a.unit()[r], ring);
        }
      }
      w = std::move(next);
    }
  }
  symact::TensorVector orbit;
  for (const auto& tau : symact::multi_shuffles(blocks))
    orbit = symact::sum(orbit, symact::act(w, m.carrier(), tau.inverse()), ring);
  return divpow::contract(s.labels(), orbit, true);
}

SurjectivityReport composition_surjectivity_check(const SuperAlgebra& a, std::size_t d,
                                                  std::size_t m, std::size_t n,
                                                  std::pair<std::size_t, std::size_t> source,
                                                  std::pair<std::size_t, std::size_t> target,
                                                  std::uint64_t prime, const Limits& limits) {
  const coeff::Ring& ring = a.ring();
  coeff::require_reduction_prime(ring, prime);
  using supermod::SuperModule;
  const auto mid = SuperModule::standard(ring, m, n);
  const auto src = SuperModule::standard(ring, source.first, source.second);
  const auto tgt = SuperModule::standard(ring, target.first, target.second);

  const auto hom_outer = supermod::hom_module(mid, tgt);
  const auto hom_inner = supermod::hom_module(src, mid);
  const auto hom_result = supermod::hom_module(src, tgt);
  const auto outer = supermod::tensor(a.carrier(), hom_outer.module);
  const auto result = supermod::tensor(a.carrier(), hom_result.module);

  // e^{(r)}(k, j1) o e(j2, i) = delta_{j1 j2} e^{(r)}(k, i).
  const std::size_t inner_dim = hom_inner.module.dim();
  std::vector<coeff::SparseVector> table(outer.module.dim() * inner_dim);
  for (std::size_t x = 0; x < outer.module.dim(); ++x) {
    const auto [r, unit] = outer.factors[x];
    const auto [k, j1] = hom_outer.units[unit];
    for (std::size_t y = 0; y < inner_dim; ++y) {
      const auto [j2, i] = hom_inner.units[y];
      if (j1 == j2) table[x * inner_dim + y] = {{result.index(r, hom_result.index(k, i)), 1}};
    }
  }
  const symact::LetterProduct f = [&](std::uint32_t x, std::uint32_t y) -> const coeff::SparseVector& {
    return table[x * inner_dim + y];
  };

  const DividedBasis b_outer(outer.module, d, limits);
  const DividedBasis b_inner(hom_inner.module, d, limits);
  const DividedBasis b_result(result.module, d, limits);

  SurjectivityReport report;
  report.dim_outer = b_outer.size();
  report.dim_inner = b_inner.size();
  report.target_dim = b_result.size();
  report.prime = prime;

  std::vector<symact::TensorVector> inner_expanded(b_inner.size());
  for (std::size_t j = 0; j < b_inner.size(); ++j)
    inner_expanded[j] = divpow::expand(b_inner[j], hom_inner.module);

  coeff::FpSpan span(prime, b_result.size());
  for (std::size_t i = 0; i < b_outer.size() && span.rank() < b_result.size(); ++i) {
    const auto xi = divpow::expand(b_outer[i], outer.module);
    for (std::size_t j = 0; j < b_inner.size() && span.rank() < b_result.size(); ++j) {
      const auto z = symact::interleave_apply(xi, outer.module, inner_expanded[j],
                                              hom_inner.module, f, ring);
      const auto image = divpow::contract(b_result, z, true);
      std::vector<std::uint64_t> row(image.size());
      for (std::size_t c = 0; c < image.size(); ++c) row[c] = coeff::reduce_mod(image[c], prime);
      span.insert(std::move(row));
    }
  }
  report.rank = span.rank();
  return report;
}

}  // namespace superschur::schur
