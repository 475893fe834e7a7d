#include "superschur/supermod.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace superschur::supermod {

SuperModule::SuperModule(Ring ring, std::vector<std::string> names, std::vector<Parity> parities) {
  if (names.size() != parities.size()) {
    throw std::invalid_argument("supermodule: names and parities differ in length");
  }
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw std::invalid_argument("supermodule: duplicate basis name " + n);
  }
  std::size_t even = 0;
  while (even < parities.size() && parities[even] == Parity::Even) ++even;
  for (std::size_t i = even; i < parities.size(); ++i) {
    if (parities[i] != Parity::Odd) {
      throw std::invalid_argument("supermodule: even basis vectors must precede odd ones");
    }
  }
  data_ = std::make_shared<const Data>(Data{std::move(ring), std::move(names), even});
}

SuperModule SuperModule::standard(Ring ring, std::size_t even, std::size_t odd,
                                  std::string_view prefix) {
  std::vector<std::string> names;
  std::vector<Parity> parities;
  for (std::size_t i = 0; i < even + odd; ++i) {
    names.push_back(std::string(prefix) + std::to_string(i + 1));
    parities.push_back(i < even ? Parity::Even : Parity::Odd);
  }
  return SuperModule(std::move(ring), std::move(names), std::move(parities));
}

SuperModule::Canonical SuperModule::canonicalize(Ring ring, std::vector<std::string> names,
                                                 std::vector<Parity> parities) {
  if (names.size() != parities.size()) {
    throw std::invalid_argument("supermodule: names and parities differ in length");
  }
  std::vector<std::size_t> order(names.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_partition(order.begin(), order.end(),
                        [&](std::size_t i) { return parities[i] == Parity::Even; });
  std::vector<std::size_t> position(names.size());
  std::vector<std::string> sorted_names;
  std::vector<Parity> sorted_parities;
  sorted_names.reserve(names.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    position[order[k]] = k;
    sorted_names.push_back(std::move(names[order[k]]));
    sorted_parities.push_back(parities[order[k]]);
  }
  return {SuperModule(std::move(ring), std::move(sorted_names), std::move(sorted_parities)),
          std::move(position)};
}

std::vector<Parity> SuperModule::parities() const {
  std::vector<Parity> out(dim(), Parity::Odd);
  std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(even_dim()), Parity::Even);
  return out;
}

std::optional<std::size_t> SuperModule::index_of(std::string_view name) const {
  const auto& names = data_->names;
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

bool operator==(const SuperModule& a, const SuperModule& b) {
  if (a.data_ == b.data_) return true;
  return a.ring() == b.ring() && a.even_dim() == b.even_dim() && a.names() == b.names();
}

Vector Vector::basis(const SuperModule& m, std::size_t i) {
  Vector v = zero(m);
  v.coeffs.at(i) = 1;
  return v;
}

namespace {

void require_same_ring(const SuperModule& a, const SuperModule& b, const char* what) {
  if (a.ring() != b.ring()) throw std::invalid_argument(std::string(what) + ": ring mismatch");
}

}  // namespace

TensorModule tensor(const SuperModule& m, const SuperModule& n) {
  require_same_ring(m, n, "tensor");
  std::vector<std::string> names;
  std::vector<Parity> parities;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < n.dim(); ++j) {
      names.push_back(m.name(i) + "⊗" + n.name(j));
      parities.push_back(m.parity(i) + n.parity(j));
    }
  }
  auto canon = SuperModule::canonicalize(m.ring(), std::move(names), std::move(parities));
  TensorModule t{std::move(canon.module), m.dim(), n.dim(), {}, {}};
  t.position.resize(m.dim() * n.dim());
  t.factors.resize(m.dim() * n.dim());
  for (std::size_t lex = 0; lex < t.position.size(); ++lex) {
    const auto c = static_cast<std::uint32_t>(canon.position[lex]);
    t.position[lex] = c;
    t.factors[c] = {static_cast<std::uint32_t>(lex / n.dim()),
                    static_cast<std::uint32_t>(lex % n.dim())};
  }
  return t;
}

Parity matrix_unit_parity(const SuperModule& source, std::size_t i, const SuperModule& target,
                          std::size_t j) {
  return source.parity(i) + target.parity(j);
}

HomModule hom_module(const SuperModule& m, const SuperModule& n) {
  require_same_ring(m, n, "hom_module");
  std::vector<std::string> names;
  std::vector<Parity> parities;
  for (std::size_t j = 0; j < n.dim(); ++j) {
    for (std::size_t i = 0; i < m.dim(); ++i) {
      names.push_back("e(" + std::to_string(j + 1) + "," + std::to_string(i + 1) + ")");
      parities.push_back(matrix_unit_parity(m, i, n, j));
    }
  }
  auto canon = SuperModule::canonicalize(m.ring(), std::move(names), std::move(parities));
  HomModule h{std::move(canon.module), m.dim(), n.dim(), {}, {}};
  h.position.resize(m.dim() * n.dim());
  h.units.resize(m.dim() * n.dim());
  for (std::size_t lex = 0; lex < h.position.size(); ++lex) {
    const auto c = static_cast<std::uint32_t>(canon.position[lex]);
    h.position[lex] = c;
    h.units[c] = {static_cast<std::uint32_t>(lex / m.dim()),
                  static_cast<std::uint32_t>(lex % m.dim())};
  }
  return h;
}

DirectSum direct_sum(const SuperModule& m, const SuperModule& n) {
  require_same_ring(m, n, "direct_sum");
  std::vector<std::string> names;
  std::vector<Parity> parities;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    names.push_back(m.name(i));
    parities.push_back(m.parity(i));
  }
  for (std::size_t j = 0; j < n.dim(); ++j) {
    std::string name = n.name(j);
    if (m.index_of(name)) name += "'";
    names.push_back(std::move(name));
    parities.push_back(n.parity(j));
  }
  auto canon = SuperModule::canonicalize(m.ring(), std::move(names), std::move(parities));
  DirectSum s{std::move(canon.module), {}, {}};
  for (std::size_t i = 0; i < m.dim(); ++i)
    s.left_position.push_back(static_cast<std::uint32_t>(canon.position[i]));
  for (std::size_t j = 0; j < n.dim(); ++j)
    s.right_position.push_back(static_cast<std::uint32_t>(canon.position[m.dim() + j]));
  return s;
}

// --- LinearMap ------------------------------------------------------------

LinearMap::LinearMap(SuperModule source, SuperModule target, Matrix even_part, Matrix odd_part)
    : source_(std::move(source)),
      target_(std::move(target)),
      even_(std::move(even_part)),
      odd_(std::move(odd_part)) {
  require_same_ring(source_, target_, "linear map");
  for (const Matrix* m : {&even_, &odd_}) {
    if (m->rows() != target_.dim() || m->cols() != source_.dim() || m->ring() != source_.ring()) {
      throw std::invalid_argument("linear map: part has the wrong shape or ring");
    }
  }
  for (std::size_t r = 0; r < target_.dim(); ++r) {
    for (std::size_t c = 0; c < source_.dim(); ++c) {
      const bool odd_entry = target_.parity(r) != source_.parity(c);
      if (odd_entry && even_.at(r, c) != 0) {
        throw std::invalid_argument("linear map: even part leaves its parity blocks");
      }
      if (!odd_entry && odd_.at(r, c) != 0) {
        throw std::invalid_argument("linear map: odd part leaves its parity blocks");
      }
    }
  }
}

LinearMap LinearMap::from_matrix(SuperModule source, SuperModule target, const Matrix& m) {
  if (m.rows() != target.dim() || m.cols() != source.dim()) {
    throw std::invalid_argument("linear map: matrix shape does not match the modules");
  }
  Matrix even(m.ring(), m.rows(), m.cols());
  Matrix odd(m.ring(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c) == 0) continue;
      (target.parity(r) == source.parity(c) ? even : odd).set(r, c, m.at(r, c));
    }
  }
  return LinearMap(std::move(source), std::move(target), std::move(even), std::move(odd));
}

LinearMap LinearMap::identity(const SuperModule& m) {
  return LinearMap(m, m, Matrix::identity(m.ring(), m.dim()), Matrix(m.ring(), m.dim(), m.dim()));
}

LinearMap LinearMap::zero(SuperModule source, SuperModule target) {
  Matrix z(source.ring(), target.dim(), source.dim());
  return LinearMap(std::move(source), std::move(target), z, z);
}

Parity LinearMap::parity() const {
  const bool e = !even_.is_zero();
  const bool o = !odd_.is_zero();
  if (e && o) throw std::logic_error("linear map is not homogeneous");
  if (!e && !o) throw std::logic_error("the zero map has no parity");
  return e ? Parity::Even : Parity::Odd;
}

Vector LinearMap::apply(const Vector& v) const {
  if (!(v.module == source_)) throw std::invalid_argument("apply: vector is not in the source");
  Vector out = Vector::zero(target_);
  const Matrix full = matrix();
  for (std::size_t r = 0; r < target_.dim(); ++r) {
    Integer acc = 0;
    for (std::size_t c = 0; c < source_.dim(); ++c) acc += full.at(r, c) * v.coeffs[c];
    out.coeffs[r] = target_.ring().reduce(acc);
  }
  return out;
}

LinearMap LinearMap::scaled(const Integer& s) const {
  return LinearMap(source_, target_, even_.scaled(s), odd_.scaled(s));
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (!(g.target() == f.source())) throw std::invalid_argument("compose: modules do not match");
  const Matrix fe = f.even_part() * g.even_part() + f.odd_part() * g.odd_part();
  const Matrix fo = f.even_part() * g.odd_part() + f.odd_part() * g.even_part();
  return LinearMap(g.source(), f.target(), fe, fo);
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) {
    throw std::invalid_argument("map sum: modules do not match");
  }
  return LinearMap(a.source(), a.target(), a.even_part() + b.even_part(),
                   a.odd_part() + b.odd_part());
}

namespace {

SuperModule::Canonical flipped(const SuperModule& m) {
  std::vector<Parity> parities;
  for (std::size_t i = 0; i < m.dim(); ++i) parities.push_back(m.parity(i) + Parity::Odd);
  return SuperModule::canonicalize(m.ring(), m.names(), std::move(parities));
}

}  // namespace

SuperModule parity_change(const SuperModule& m) { return flipped(m).module; }

LinearMap parity_change_map(const LinearMap& phi) {
  const auto src = flipped(phi.source());
  const auto tgt = flipped(phi.target());
  const Ring& ring = phi.source().ring();
  Matrix even(ring, tgt.module.dim(), src.module.dim());
  Matrix odd(ring, tgt.module.dim(), src.module.dim());
  for (std::size_t r = 0; r < phi.target().dim(); ++r) {
    for (std::size_t c = 0; c < phi.source().dim(); ++c) {
      even.set(tgt.position[r], src.position[c], phi.even_part().at(r, c));
      odd.set(tgt.position[r], src.position[c], -phi.odd_part().at(r, c));
    }
  }
  return LinearMap(src.module, tgt.module, std::move(even), std::move(odd));
}

LinearMap boxtimes(const LinearMap& phi, const LinearMap& psi) {
  require_same_ring(phi.source(), psi.source(), "boxtimes");
  const auto src = tensor(phi.source(), psi.source());
  const auto tgt = tensor(phi.target(), psi.target());
  const Ring& ring = phi.source().ring();
  const Matrix phi_full = phi.matrix();
  Matrix out(ring, tgt.module.dim(), src.module.dim());
  for (Parity part : {Parity::Even, Parity::Odd}) {
    const Matrix& psi_part = psi.part(part);
    for (std::size_t v = 0; v < phi.source().dim(); ++v) {
      const int sign = koszul_sign(part, phi.source().parity(v));
      for (std::size_t w = 0; w < psi.source().dim(); ++w) {
        const auto col = src.index(v, w);
        for (std::size_t v2 = 0; v2 < phi.target().dim(); ++v2) {
          const Integer& a = phi_full.at(v2, v);
          if (a == 0) continue;
          for (std::size_t w2 = 0; w2 < psi.target().dim(); ++w2) {
            const Integer& b = psi_part.at(w2, w);
            if (b == 0) continue;
            out.add_to(tgt.index(v2, w2), col, sign * a * b);
          }
        }
      }
    }
  }
  return LinearMap::from_matrix(src.module, tgt.module, out);
}

LinearMap supertwist(const SuperModule& m, const SuperModule& n) {
  const auto src = tensor(m, n);
  const auto tgt = tensor(n, m);
  Matrix out(m.ring(), tgt.module.dim(), src.module.dim());
  for (std::size_t v = 0; v < m.dim(); ++v)
    for (std::size_t w = 0; w < n.dim(); ++w)
      out.set(tgt.index(w, v), src.index(v, w), koszul_sign(m.parity(v), n.parity(w)));
  return LinearMap::from_matrix(src.module, tgt.module, out);
}

}  // namespace superschur::supermod
