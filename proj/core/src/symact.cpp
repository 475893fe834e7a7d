#include "superschur/symact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace superschur::symact {

// --- Permutation ----------------------------------------------------------

Permutation Permutation::identity(std::size_t d) {
  std::vector<std::uint32_t> img(d);
  std::iota(img.begin(), img.end(), 0u);
  return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::span<const std::uint32_t> images) {
  const std::size_t d = images.size();
  std::vector<bool> seen(d, false);
  std::vector<std::uint32_t> img(d);
  for (std::size_t k = 0; k < d; ++k) {
    const std::uint32_t v = images[k];
    if (v < 1 || v > d || seen[v - 1]) {
      throw std::invalid_argument("permutation images must be a bijection of {1..d}");
    }
    seen[v - 1] = true;
    img[k] = v - 1;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(std::size_t d, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > d || j > d) throw std::invalid_argument("transposition out of range");
  auto p = identity(d);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

std::vector<std::uint32_t> Permutation::images() const {
  std::vector<std::uint32_t> out(images_);
  for (auto& v : out) ++v;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) inv[images_[k]] = static_cast<std::uint32_t>(k);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k] != k) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(images_[k] + 1);
  }
  return s + "]";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("permutation product: degree mismatch");
  std::vector<std::uint32_t> img(a.degree());
  for (std::size_t k = 0; k < img.size(); ++k) img[k] = a.images_[b.images_[k]];
  return Permutation(std::move(img));
}

std::vector<Permutation> all_permutations(std::size_t d) {
  std::vector<std::uint32_t> img(d);
  std::iota(img.begin(), img.end(), 1u);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::uint64_t factorial(std::size_t d) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= d; ++k) f *= k;
  return f;
}

// --- tensor vectors -------------------------------------------------------

void add_term(TensorVector& x, const Word& w, const Integer& c, const Ring& ring) {
  if (c == 0) return;
  auto [it, inserted] = x.try_emplace(w, 0);
  it->second = ring.reduce(it->second + c);
  if (it->second == 0) x.erase(it);
}

TensorVector scaled(const TensorVector& x, const Integer& c, const Ring& ring) {
  TensorVector out;
  for (const auto& [w, v] : x) add_term(out, w, v * c, ring);
  return out;
}

TensorVector sum(const TensorVector& x, const TensorVector& y, const Ring& ring) {
  TensorVector out = x;
  for (const auto& [w, v] : y) add_term(out, w, v, ring);
  return out;
}

TensorPower::TensorPower(SuperModule base, std::size_t degree, const Limits& limits)
    : base_(std::move(base)), degree_(degree), dim_(1) {
  for (std::size_t k = 0; k < degree_; ++k) {
    if (base_.dim() != 0 && dim_ > limits.max_tensor_words / base_.dim()) {
      throw SizeLimitError("tensor power has more than " + std::to_string(limits.max_tensor_words) +
                           " words");
    }
    dim_ *= base_.dim();
  }
}

std::size_t TensorPower::index(const Word& w) const {
  if (w.size() != degree_) throw std::invalid_argument("word has the wrong length");
  std::size_t idx = 0;
  for (auto letter : w) idx = idx * base_.dim() + letter;
  return idx;
}

Word TensorPower::word(std::size_t index) const {
  Word w(degree_);
  for (std::size_t k = degree_; k-- > 0;) {
    w[k] = static_cast<std::uint32_t>(index % base_.dim());
    index /= base_.dim();
  }
  return w;
}

Parity TensorPower::parity(const Word& w) const {
  Parity p = Parity::Even;
  for (auto letter : w) p = p + base_.parity(letter);
  return p;
}

std::vector<Integer> TensorPower::to_dense(const TensorVector& x) const {
  std::vector<Integer> out(dim_);
  for (const auto& [w, c] : x) out[index(w)] = c;
  return out;
}

TensorVector TensorPower::from_dense(std::span<const Integer> coeffs) const {
  TensorVector out;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) out.emplace(word(i), coeffs[i]);
  return out;
}

// --- action ---------------------------------------------------------------

Word permute_word(const Word& w, const Permutation& sigma) {
  if (w.size() != sigma.degree()) throw std::invalid_argument("act: degree mismatch");
  Word out(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out[k] = w[sigma(k)];
  return out;
}

int act_sign(const Word& w, const SuperModule& base, const Permutation& sigma) {
  if (w.size() != sigma.degree()) throw std::invalid_argument("act: degree mismatch");
  // Letter at original position i lands at position sigma^{-1}(i).
  const Permutation inv = sigma.inverse();
  int inversions = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (base.parity(w[i]) != Parity::Odd) continue;
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (base.parity(w[j]) == Parity::Odd && inv(j) < inv(i)) ++inversions;
    }
  }
  return (inversions & 1) ? -1 : 1;
}

int odd_inversion_sign(const Word& w, const SuperModule& base) {
  int inversions = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (base.parity(w[i]) != Parity::Odd) continue;
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (base.parity(w[j]) == Parity::Odd && w[j] < w[i]) ++inversions;
    }
  }
  return (inversions & 1) ? -1 : 1;
}

TensorVector act(const TensorVector& x, const SuperModule& base, const Permutation& sigma) {
  TensorVector out;
  for (const auto& [w, c] : x) {
    const int s = act_sign(w, base, sigma);
    add_term(out, permute_word(w, sigma), s * c, base.ring());
  }
  return out;
}

bool is_invariant(const TensorVector& x, const SuperModule& base) {
  const Ring& ring = base.ring();
  for (const auto& [w, c] : x) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      Word swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      const int s = supermod::koszul_sign(base.parity(w[i]), base.parity(w[i + 1]));
      // x.s_i has coefficient s*c at `swapped`; invariance needs x[swapped] == s*c.
      auto it = x.find(swapped);
      const Integer have = it == x.end() ? Integer(0) : it->second;
      if (!ring.is_zero(have - s * c)) return false;
    }
  }
  return true;
}

coeff::Matrix action_matrix(const TensorPower& power, const Permutation& sigma) {
  coeff::Matrix m(power.base().ring(), power.dim(), power.dim());
  for (std::size_t col = 0; col < power.dim(); ++col) {
    const Word w = power.word(col);
    m.set(power.index(permute_word(w, sigma)), col, act_sign(w, power.base(), sigma));
  }
  return m;
}

coeff::FpMatrix invariants(const SuperModule& m, std::size_t d, std::uint64_t prime,
                           const Limits& limits) {
  const TensorPower power(m, d, limits);
  const std::size_t n = power.dim();
  coeff::FpMatrix system(prime, 0, n);
  std::vector<std::uint64_t> row(n);
  for (std::size_t i = 1; i < d; ++i) {
    const auto s = Permutation::transposition(d, i, i + 1);
    // P is a signed permutation matrix, so row r of (P - I) has at most two
    // entries: the preimage column of r and the diagonal.
    for (std::size_t r = 0; r < n; ++r) {
      std::fill(row.begin(), row.end(), 0);
      const Word w = power.word(r);
      const Word pre = permute_word(w, s);  // s is an involution
      const std::size_t c = power.index(pre);
      const int sign = act_sign(pre, m, s);
      row[c] = (row[c] + (sign > 0 ? 1 : prime - 1)) % prime;
      row[r] = (row[r] + prime - 1) % prime;
      system.append_row(row);
    }
  }
  return system.nullspace();
}

// --- shuffles -------------------------------------------------------------

std::vector<Permutation> multi_shuffles(std::span<const std::size_t> blocks) {
  // Block labels in block order; every distinct arrangement gives one shuffle.
  Word labels;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    labels.insert(labels.end(), blocks[b], static_cast<std::uint32_t>(b));
  const std::size_t total = labels.size();
  std::vector<Permutation> out;
  // Colex order on the position sets of the earlier blocks: later positions
  // vary slowest, and a position holding an earlier block sorts first.
  std::vector<Word> arrangements;
  Word arr = labels;
  do {
    arrangements.push_back(arr);
  } while (std::next_permutation(arr.begin(), arr.end()));
  std::sort(arrangements.begin(), arrangements.end(), [](const Word& a, const Word& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend(),
                                        std::greater<>());
  });
  for (const Word& arrangement : arrangements) {
    // tau sends the k-th slot of block b to the k-th position labelled b.
    std::vector<std::uint32_t> images(total);
    std::vector<std::size_t> next(blocks.size(), 0);
    std::vector<std::size_t> start(blocks.size(), 0);
    for (std::size_t b = 1; b < blocks.size(); ++b) start[b] = start[b - 1] + blocks[b - 1];
    for (std::size_t pos = 0; pos < total; ++pos) {
      const auto b = arrangement[pos];
      images[start[b] + next[b]++] = static_cast<std::uint32_t>(pos + 1);
    }
    out.push_back(Permutation::from_images(images));
  }
  return out;
}

std::vector<Permutation> coset_reps(std::size_t d, std::size_t e) {
  const std::size_t blocks[] = {d, e};
  return multi_shuffles(blocks);
}

// --- letterwise maps ------------------------------------------------------

namespace {

// Expands the product of per-slot sparse vectors into words.
void expand_slots(const std::vector<const coeff::SparseVector*>& slots, const Integer& scale,
                  TensorVector& out, const Ring& ring) {
  const std::size_t d = slots.size();
  for (auto* s : slots)
    if (s->empty()) return;
  std::vector<std::size_t> choice(d, 0);
  Word w(d);
  while (true) {
    Integer c = scale;
    for (std::size_t k = 0; k < d; ++k) {
      const auto& entry = (*slots[k])[choice[k]];
      w[k] = entry.index;
      c *= entry.value;
    }
    add_term(out, w, c, ring);
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (++choice[k] < slots[k]->size()) break;
      choice[k] = 0;
      if (k == 0) return;
    }
    if (d == 0) return;
  }
}

}  // namespace

TensorVector interleave_apply(const TensorVector& x, const SuperModule& left,
                              const TensorVector& y, const SuperModule& right,
                              const LetterProduct& f, const Ring& ring) {
  TensorVector out;
  std::vector<const coeff::SparseVector*> slots;
  for (const auto& [wx, cx] : x) {
    for (const auto& [wy, cy] : y) {
      if (wx.size() != wy.size()) throw std::invalid_argument("interleave: degree mismatch");
      const std::size_t d = wx.size();
      int exponent = 0;
      int odd_right_so_far = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (left.parity(wx[j]) == Parity::Odd) exponent += odd_right_so_far;
        if (right.parity(wy[j]) == Parity::Odd) ++odd_right_so_far;
      }
      slots.resize(d);
      for (std::size_t k = 0; k < d; ++k) slots[k] = &f(wx[k], wy[k]);
      const Integer scale = (exponent & 1) ? Integer(-(cx * cy)) : Integer(cx * cy);
      if (d == 0) {
        add_term(out, Word{}, scale, ring);
      } else {
        expand_slots(slots, scale, out, ring);
      }
    }
  }
  return out;
}

TensorVector apply_letterwise(const TensorVector& x, const SuperModule& base, Parity map_parity,
                              const std::function<const coeff::SparseVector&(std::uint32_t)>& f,
                              const Ring& ring) {
  TensorVector out;
  std::vector<const coeff::SparseVector*> slots;
  for (const auto& [w, c] : x) {
    int exponent = 0;
    if (map_parity == Parity::Odd) {
      int odd_so_far = 0;
      for (auto letter : w) {
        exponent += odd_so_far;
        if (base.parity(letter) == Parity::Odd) ++odd_so_far;
      }
    }
    slots.resize(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) slots[k] = &f(w[k]);
    const Integer scale = (exponent & 1) ? Integer(-c) : c;
    if (w.empty()) {
      add_term(out, Word{}, scale, ring);
    } else {
      expand_slots(slots, scale, out, ring);
    }
  }
  return out;
}

}  // namespace superschur::symact
