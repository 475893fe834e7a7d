#include "superschur/cli/spec.hpp"

#include <stdexcept>

#include "superschur/divpow.hpp"
#include "superschur/schur.hpp"
#include "superschur/schurweyl.hpp"
#include "superschur/symact.hpp"

namespace superschur::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  AlgebraSpec parse() {
    AlgebraSpec spec = base();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("algebra spec '" + std::string(text_) + "': " + what + " at offset " +
                                std::to_string(pos_));
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
                                   (text_[pos_] >= '0' && text_[pos_] <= '9')))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t number() {
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1'000'000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  std::shared_ptr<const AlgebraSpec> nested() {
    expect(':');
    expect('(');
    auto inner = std::make_shared<const AlgebraSpec>(base());
    expect(')');
    return inner;
  }

  AlgebraSpec base() {
    const std::size_t start = pos_;
    const std::string head = word();
    AlgebraSpec spec;
    if (head == "k") {
      spec.kind = AlgebraSpec::Kind::Ground;
    } else if (head == "c1") {
      spec.kind = AlgebraSpec::Kind::Clifford;
    } else if (head == "mat") {
      spec.kind = AlgebraSpec::Kind::Matrix;
      expect(':');
      spec.even = number();
      if (peek('|')) {
        ++pos_;
        spec.odd = number();
      }
      if (spec.even + spec.odd == 0) fail("matrix size must be positive");
      spec.inner = nested();
    } else if (head == "schur") {
      spec.kind = AlgebraSpec::Kind::Schur;
      expect(':');
      spec.even = number();
      if (peek('|')) {
        ++pos_;
        spec.odd = number();
      } else if (spec.even == 0) {
        fail("schur:<n>:<d> needs n >= 1");
      }
      if (spec.even + spec.odd == 0) fail("block sizes must not both be zero");
      expect(':');
      spec.degree = number();
      if (spec.degree == 0) fail("degree must be positive");
      spec.inner = nested();
    } else if (head == "wreath" || head == "gamma") {
      spec.kind = head == "wreath" ? AlgebraSpec::Kind::Wreath : AlgebraSpec::Kind::Gamma;
      expect(':');
      spec.degree = number();
      if (spec.degree == 0) fail("degree must be positive");
      spec.inner = nested();
    } else {
      pos_ = start;
      fail("unknown algebra '" + head + "'");
    }
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Integer multisets(const Integer& mu, std::size_t k) {
  if (k == 0) return 1;
  return coeff::binomial((mu + k - 1).convert_to<std::int64_t>(), static_cast<std::int64_t>(k));
}

std::vector<GammaTerm> breakdown(const SuperDims& m, std::size_t d) {
  std::vector<GammaTerm> out;
  for (std::size_t j = 0; j <= d && Integer(j) <= m.odd; ++j)
    out.push_back({j, multisets(m.even, d - j), coeff::binomial(m.odd.convert_to<std::int64_t>(),
                                                                static_cast<std::int64_t>(j))});
  return out;
}

SuperDims tensor_dims(const SuperDims& a, const SuperDims& b) {
  return {a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even};
}

SuperDims matrix_dims(const SuperDims& a, std::size_t n, std::size_t m) {
  return tensor_dims(a, {Integer(n * n + m * m), Integer(2 * n * m)});
}

SuperDims gamma_dims(const SuperDims& m, std::size_t d) {
  SuperDims out;
  for (const auto& t : breakdown(m, d)) (t.odd_letters % 2 == 0 ? out.even : out.odd) += t.value();
  return out;
}

}  // namespace

std::string AlgebraSpec::to_string() const {
  switch (kind) {
    case Kind::Ground: return "k";
    case Kind::Clifford: return "c1";
    case Kind::Matrix:
      return "mat:" + std::to_string(even) + (odd > 0 ? "|" + std::to_string(odd) : "") + ":(" +
             inner->to_string() + ")";
    case Kind::Schur:
      return "schur:" + std::to_string(even) + (odd > 0 ? "|" + std::to_string(odd) : "") + ":" +
             std::to_string(degree) + ":(" + inner->to_string() + ")";
    case Kind::Wreath: return "wreath:" + std::to_string(degree) + ":(" + inner->to_string() + ")";
    case Kind::Gamma: return "gamma:" + std::to_string(degree) + ":(" + inner->to_string() + ")";
  }
  return {};
}

AlgebraSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

SuperDims spec_dims(const AlgebraSpec& spec) {
  switch (spec.kind) {
    case AlgebraSpec::Kind::Ground: return {1, 0};
    case AlgebraSpec::Kind::Clifford: return {1, 1};
    case AlgebraSpec::Kind::Matrix: return matrix_dims(spec_dims(*spec.inner), spec.even, spec.odd);
    case AlgebraSpec::Kind::Schur:
      return gamma_dims(matrix_dims(spec_dims(*spec.inner), spec.even, spec.odd), spec.degree);
    case AlgebraSpec::Kind::Gamma: return gamma_dims(spec_dims(*spec.inner), spec.degree);
    case AlgebraSpec::Kind::Wreath: {
      const SuperDims a = spec_dims(*spec.inner);
      SuperDims words{1, 0};
      for (std::size_t k = 0; k < spec.degree; ++k) words = tensor_dims(words, a);
      const Integer perms = symact::factorial(spec.degree);
      return {words.even * perms, words.odd * perms};
    }
  }
  return {};
}

std::vector<GammaTerm> gamma_breakdown(const AlgebraSpec& spec) {
  if (spec.kind == AlgebraSpec::Kind::Gamma) return breakdown(spec_dims(*spec.inner), spec.degree);
  if (spec.kind == AlgebraSpec::Kind::Schur)
    return breakdown(matrix_dims(spec_dims(*spec.inner), spec.even, spec.odd), spec.degree);
  return {};
}

salg::SuperAlgebra build(const AlgebraSpec& spec, const BuildOptions& options) {
  const Integer total = spec_dims(spec).total();
  if (total > options.limits.max_algebra_dim) {
    throw SizeLimitError(spec.to_string() + " has dimension " + total.str() + ", above the cap of " +
                         std::to_string(options.limits.max_algebra_dim));
  }
  switch (spec.kind) {
    case AlgebraSpec::Kind::Ground: return salg::ground(options.ring);
    case AlgebraSpec::Kind::Clifford: return salg::clifford1(options.ring, options.clifford);
    case AlgebraSpec::Kind::Matrix:
      return salg::matrix_superalgebra(build(*spec.inner, options), spec.even, spec.odd);
    case AlgebraSpec::Kind::Schur:
      return schur::SchurAlgebra(build(*spec.inner, options), spec.even, spec.odd, spec.degree,
                                 options.limits)
          .algebra();
    case AlgebraSpec::Kind::Wreath:
      return schurweyl::WreathAlgebra(build(*spec.inner, options), spec.degree, options.limits).algebra();
    case AlgebraSpec::Kind::Gamma:
      return divpow::divided_power_algebra(build(*spec.inner, options), spec.degree, options.limits);
  }
  throw std::logic_error("unhandled algebra kind");
}

}  // namespace superschur::cli
