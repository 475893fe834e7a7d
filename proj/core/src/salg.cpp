#include "superschur/salg.hpp"

#include <algorithm>
#include <stdexcept>

#include "superschur/symact.hpp"

namespace superschur::salg {

namespace {

SparseVector normalized(const Ring& ring, SparseVector v, std::size_t dim) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  SparseVector out;
  for (auto& e : v) {
    if (e.index >= dim) throw std::invalid_argument("structure constant index out of range");
    Integer value = ring.reduce(e.value);
    if (!out.empty() && out.back().index == e.index) {
      out.back().value = ring.reduce(out.back().value + value);
      if (out.back().value == 0) out.pop_back();
    } else if (value != 0) {
      out.push_back({e.index, std::move(value)});
    }
  }
  return out;
}

}  // namespace

SuperAlgebra::SuperAlgebra(SuperModule carrier, std::vector<Integer> unit,
                           std::vector<SparseVector> table) {
  const std::size_t n = carrier.dim();
  if (unit.size() != n) throw std::invalid_argument("superalgebra: unit has the wrong length");
  if (table.size() != n * n) throw std::invalid_argument("superalgebra: table has the wrong size");
  const Ring& ring = carrier.ring();
  for (auto& u : unit) u = ring.reduce(u);
  for (auto& cell : table) cell = normalized(ring, std::move(cell), n);
  data_ = std::make_shared<const Data>(Data{std::move(carrier), std::move(unit), std::move(table)});
}

std::vector<Integer> SuperAlgebra::multiply(std::span<const Integer> x,
                                            std::span<const Integer> y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("multiply: length mismatch");
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const Integer s = x[i] * y[j];
      for (const auto& [k, c] : product(i, j)) out[k] += s * c;
    }
  }
  for (auto& v : out) v = ring().reduce(v);
  return out;
}

std::vector<Integer> SuperAlgebra::basis_vector(std::size_t i) const {
  std::vector<Integer> v(dim());
  v.at(i) = 1;
  return v;
}

bool operator==(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (a.data_ == b.data_) return true;
  return a.carrier() == b.carrier() && a.unit() == b.unit() && a.table() == b.table();
}

SuperAlgebra ground(const Ring& ring) {
  SuperModule k(ring, {"1"}, {Parity::Even});
  return SuperAlgebra(k, {1}, {SparseVector{{0, 1}}});
}

SuperAlgebra tensor_algebra(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("tensor_algebra: ring mismatch");
  const auto t = supermod::tensor(a.carrier(), b.carrier());
  const std::size_t n = t.module.dim();
  const Ring& ring = a.ring();
  std::vector<SparseVector> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto [a1, b1] = t.factors[x];
    for (std::size_t y = 0; y < n; ++y) {
      const auto [a2, b2] = t.factors[y];
      const int sign = supermod::koszul_sign(b.carrier().parity(b1), a.carrier().parity(a2));
      SparseVector cell;
      for (const auto& [ka, ca] : a.product(a1, a2))
        for (const auto& [kb, cb] : b.product(b1, b2))
          cell.push_back({t.index(ka, kb), sign * ca * cb});
      table[x * n + y] = std::move(cell);
    }
  }
  std::vector<Integer> unit(n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) unit[t.index(i, j)] = ring.mul(a.unit()[i], b.unit()[j]);
  return SuperAlgebra(t.module, std::move(unit), std::move(table));
}

SuperAlgebra endomorphism_algebra(const Ring& ring, std::size_t n, std::size_t m) {
  const auto base = SuperModule::standard(ring, n, m);
  const auto h = supermod::hom_module(base, base);
  const std::size_t dim = h.module.dim();
  std::vector<SparseVector> table(dim * dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const auto [j1, i1] = h.units[x];
    for (std::size_t y = 0; y < dim; ++y) {
      const auto [j2, i2] = h.units[y];
      if (i1 == j2) table[x * dim + y] = SparseVector{{h.index(j1, i2), 1}};
    }
  }
  std::vector<Integer> unit(dim);
  for (std::size_t i = 0; i < n + m; ++i) unit[h.index(i, i)] = 1;
  return SuperAlgebra(h.module, std::move(unit), std::move(table));
}

SuperAlgebra matrix_superalgebra(const SuperAlgebra& a, std::size_t n, std::size_t m) {
  return tensor_algebra(a, endomorphism_algebra(a.ring(), n, m));
}

MatrixLayout::MatrixLayout(const SuperAlgebra& a, std::size_t n, std::size_t m)
    : n_(n),
      m_(m),
      layout_([&] {
        const auto base = SuperModule::standard(a.ring(), n, m);
        return supermod::tensor(a.carrier(), supermod::hom_module(base, base).module);
      }()),
      units_([&] {
        const auto base = SuperModule::standard(a.ring(), n, m);
        return supermod::hom_module(base, base);
      }()) {}

std::uint32_t MatrixLayout::index(std::size_t r, std::size_t j, std::size_t i) const {
  return layout_.index(r, units_.index(j, i));
}

SuperAlgebra clifford1(const Ring& ring, CliffordSign sign) {
  SuperModule carrier(ring, {"1", "c"}, {Parity::Even, Parity::Odd});
  const Integer c2 = sign == CliffordSign::Plus ? 1 : -1;
  std::vector<SparseVector> table = {
      SparseVector{{0, 1}},   // 1*1
      SparseVector{{1, 1}},   // 1*c
      SparseVector{{1, 1}},   // c*1
      SparseVector{{0, c2}},  // c*c
  };
  return SuperAlgebra(carrier, {1, 0}, std::move(table));
}

SuperAlgebra group_algebra_sym(std::size_t d, const Ring& ring, const Limits& limits) {
  if (d < 1) throw std::invalid_argument("group_algebra_sym requires d >= 1");
  if (d > 12 || symact::factorial(d) > limits.max_algebra_dim) {
    throw SizeLimitError("group algebra of S_" + std::to_string(d) + " exceeds the dimension cap");
  }
  const auto perms = symact::all_permutations(d);
  std::vector<std::string> names;
  for (const auto& p : perms) names.push_back(p.to_string());
  SuperModule carrier(ring, std::move(names), std::vector<Parity>(perms.size(), Parity::Even));
  const std::size_t n = perms.size();
  std::vector<SparseVector> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto prod = perms[x] * perms[y];
      const auto k = static_cast<std::uint32_t>(
          std::lower_bound(perms.begin(), perms.end(), prod) - perms.begin());
      table[x * n + y] = SparseVector{{k, 1}};
    }
  }
  std::vector<Integer> unit(n);
  unit[0] = 1;
  return SuperAlgebra(carrier, std::move(unit), std::move(table));
}

std::string AxiomViolation::describe() const {
  auto idx = [](std::size_t v) { return std::to_string(v); };
  switch (kind) {
    case Kind::UnitParity:
      return "unit has an odd component at basis " + idx(i);
    case Kind::LeftUnit:
      return "1*e" + idx(i) + " != e" + idx(i);
    case Kind::RightUnit:
      return "e" + idx(i) + "*1 != e" + idx(i);
    case Kind::Grading:
      return "c(" + idx(i) + "," + idx(j) + ")^" + idx(k) + " violates the grading";
    case Kind::Associativity:
      return "(e" + idx(i) + " e" + idx(j) + ") e" + idx(k) + " != e" + idx(i) + " (e" + idx(j) +
             " e" + idx(k) + ")";
  }
  return "unknown violation";
}

AxiomReport check_superalgebra(const SuperAlgebra& a) {
  AxiomReport report;
  const std::size_t n = a.dim();
  const auto& carrier = a.carrier();
  const Ring& ring = a.ring();
  using Kind = AxiomViolation::Kind;

  for (std::size_t i = carrier.even_dim(); i < n; ++i)
    if (a.unit()[i] != 0) report.violations.push_back({Kind::UnitParity, i});

  for (std::size_t i = 0; i < n; ++i) {
    const auto e = a.basis_vector(i);
    if (a.multiply(a.unit(), e) != e) report.violations.push_back({Kind::LeftUnit, i});
    if (a.multiply(e, a.unit()) != e) report.violations.push_back({Kind::RightUnit, i});
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : a.product(i, j))
        if (carrier.parity(k) != carrier.parity(i) + carrier.parity(j))
          report.violations.push_back({Kind::Grading, i, j, k});

  std::vector<Integer> left(n), right(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        std::fill(left.begin(), left.end(), 0);
        std::fill(right.begin(), right.end(), 0);
        for (const auto& [l, c] : ij) coeff::axpy(ring, left, c, a.product(l, k));
        for (const auto& [l, c] : a.product(j, k)) coeff::axpy(ring, right, c, a.product(i, l));
        ++report.triples_checked;
        if (left != right) report.violations.push_back({Kind::Associativity, i, j, k});
      }
    }
  }
  return report;
}

}  // namespace superschur::salg
