#include "langfilter/boolmat.hpp"

#include <bit>
#include <limits>
#include <unordered_map>

#include "langfilter/errors.hpp"

namespace langfilter {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

std::size_t mix(std::size_t seed, std::uint64_t value) {
  value *= 0x9E3779B97F4A7C15ULL;
  value ^= value >> 29;
  return seed ^ (value + 0x9E3779B97F4A7C15ULL + (seed << 6) + (seed >> 2));
}

void require_dims(std::size_t a, std::size_t b) {
  if (a != b)
    throw InputError("dimension mismatch: " + std::to_string(a) + " vs " +
                     std::to_string(b));
}

}  // namespace

BoolVector::BoolVector(std::size_t dim) : dim_(dim), words_(words_for(dim), 0) {}

BoolVector BoolVector::unit(std::size_t dim, std::size_t index) {
  BoolVector v(dim);
  v.set(index);
  return v;
}

void BoolVector::set(std::size_t i, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value)
    words_[i / 64] |= bit;
  else
    words_[i / 64] &= ~bit;
}

bool BoolVector::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t BoolVector::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

BoolVector& BoolVector::operator|=(const BoolVector& other) {
  require_dims(dim_, other.dim_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::size_t BoolVector::hash() const {
  std::size_t seed = dim_;
  for (auto w : words_) seed = mix(seed, w);
  return seed;
}

std::string BoolVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < dim_; ++i) out += test(i) ? '1' : '0';
  return out;
}

BoolMatrix::BoolMatrix(std::size_t dim)
    : dim_(dim), stride_(words_for(dim)), data_(dim * words_for(dim), 0) {}

BoolMatrix BoolMatrix::identity(std::size_t dim) {
  BoolMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i);
  return m;
}

void BoolMatrix::set(std::size_t i, std::size_t j, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (j % 64);
  if (value)
    data_[i * stride_ + j / 64] |= bit;
  else
    data_[i * stride_ + j / 64] &= ~bit;
}

BoolVector BoolMatrix::row(std::size_t i) const {
  BoolVector v(dim_);
  or_row_into(i, v);
  return v;
}

void BoolMatrix::or_row_into(std::size_t i, BoolVector& acc) const {
  const auto words = row_words(i);
  for (std::size_t w = 0; w < stride_; ++w) acc.words_[w] |= words[w];
}

BoolMatrix& BoolMatrix::operator|=(const BoolMatrix& other) {
  require_dims(dim_, other.dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] |= other.data_[i];
  return *this;
}

std::size_t BoolMatrix::hash() const {
  std::size_t seed = dim_;
  for (auto w : data_) seed = mix(seed, w);
  return seed;
}

std::string BoolMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out += test(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

BoolMatrix mat_mul(const BoolMatrix& a, const BoolMatrix& b) {
  require_dims(a.dim(), b.dim());
  const std::size_t n = a.dim();
  BoolMatrix out(n);
  // Row i of the product is the OR of the rows of b selected by row i of a.
  for (std::size_t i = 0; i < n; ++i) {
    auto acc = out.row_words(i);
    const auto selector = a.row_words(i);
    for (std::size_t w = 0; w < selector.size(); ++w) {
      std::uint64_t bits = selector[w];
      while (bits) {
        const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const auto source = b.row_words(k);
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] |= source[j];
      }
    }
  }
  return out;
}

BoolVector vec_mat_mul(const BoolVector& v, const BoolMatrix& a) {
  require_dims(v.dim(), a.dim());
  BoolVector out(a.dim());
  for (std::size_t k = 0; k < v.dim(); ++k)
    if (v.test(k)) a.or_row_into(k, out);
  return out;
}

BoolVector mat_vec_mul(const BoolMatrix& a, const BoolVector& v) {
  require_dims(v.dim(), a.dim());
  BoolVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.test(i, j) && v.test(j)) {
        out.set(i);
        break;
      }
  return out;
}

bool dot(const BoolVector& v, const BoolVector& w) {
  require_dims(v.dim(), w.dim());
  for (std::size_t i = 0; i < v.words().size(); ++i)
    if (v.words()[i] & w.words()[i]) return true;
  return false;
}

PowerOrbit::PowerOrbit(const BoolMatrix& base) {
  std::unordered_map<BoolMatrix, std::size_t, BoolMatrixHash> seen;
  BoolMatrix current = BoolMatrix::identity(base.dim());
  while (true) {
    auto [it, inserted] = seen.try_emplace(current, powers_.size());
    if (!inserted) {
      index_ = it->second;
      period_ = powers_.size() - index_;
      return;
    }
    powers_.push_back(current);
    current = mat_mul(current, base);
  }
}

std::size_t PowerOrbit::reduce(const Natural& k) const {
  if (k < powers_.size()) return static_cast<std::size_t>(k);
  const Natural offset = (k - index_) % period_;
  return index_ + static_cast<std::size_t>(offset);
}

PowerOrbit power_orbit(const BoolMatrix& a) { return PowerOrbit(a); }

BoolMatrix mat_pow(const BoolMatrix& a, const Natural& k) {
  if (k < 0) throw InputError("negative matrix exponent");
  if (k > std::numeric_limits<std::uint64_t>::max()) return power_orbit(a).power(k);
  auto e = static_cast<std::uint64_t>(k);
  BoolMatrix result = BoolMatrix::identity(a.dim());
  BoolMatrix base = a;
  while (e) {
    if (e & 1U) result = mat_mul(result, base);
    e >>= 1;
    if (e) base = mat_mul(base, base);
  }
  return result;
}

IncidenceMatrices incidence_matrices(const Dfa& d) {
  const std::size_t n = d.num_states();
  std::vector<BoolMatrix> letters(d.alphabet().size(), BoolMatrix(n));
  BoolMatrix any(n);
  for (State q = 0; q < n; ++q)
    for (Symbol c = 0; c < d.alphabet().size(); ++c) {
      letters[c].set(q, d.next(q, c));
      any.set(q, d.next(q, c));
    }
  PowerOrbit orbit(any);
  return {std::move(letters), std::move(any), std::move(orbit)};
}

BoolVector final_vector(const Dfa& d) {
  BoolVector f(d.num_states());
  for (State q = 0; q < d.num_states(); ++q)
    if (d.is_accepting(q)) f.set(q);
  return f;
}

BoolVector start_vector(const Dfa& d) {
  return BoolVector::unit(d.num_states(), d.start());
}

}  // namespace langfilter
