#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "langfilter/automata.hpp"
#include "langfilter/natural.hpp"

namespace langfilter {

// Bit-packed boolean row vector.
class BoolVector {
 public:
  BoolVector() = default;
  explicit BoolVector(std::size_t dim);

  static BoolVector unit(std::size_t dim, std::size_t index);

  std::size_t dim() const { return dim_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value = true);
  bool any() const;
  std::size_t count() const;

  BoolVector& operator|=(const BoolVector& other);

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const BoolVector&, const BoolVector&) = default;

 private:
  friend class BoolMatrix;

  std::size_t dim_ = 0;
  std::vector<std::uint64_t> words_;
};

// Square boolean matrix with bit-packed rows.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t dim);

  static BoolMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  bool test(std::size_t i, std::size_t j) const {
    return (data_[i * stride_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value = true);

  std::span<const std::uint64_t> row_words(std::size_t i) const {
    return {data_.data() + i * stride_, stride_};
  }
  std::span<std::uint64_t> row_words(std::size_t i) {
    return {data_.data() + i * stride_, stride_};
  }

  BoolVector row(std::size_t i) const;
  // ORs row i of this matrix into `acc`.
  void or_row_into(std::size_t i, BoolVector& acc) const;

  BoolMatrix& operator|=(const BoolMatrix& other);

  std::size_t hash() const;
  // One line of '0'/'1' characters per row.
  std::string to_string() const;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

struct BoolVectorHash {
  std::size_t operator()(const BoolVector& v) const { return v.hash(); }
};
struct BoolMatrixHash {
  std::size_t operator()(const BoolMatrix& m) const { return m.hash(); }
};

BoolMatrix mat_mul(const BoolMatrix& a, const BoolMatrix& b);
BoolVector vec_mat_mul(const BoolVector& v, const BoolMatrix& a);
// Column product: result_i = OR_j a(i,j) & v_j.
BoolVector mat_vec_mul(const BoolMatrix& a, const BoolVector& v);
bool dot(const BoolVector& v, const BoolVector& w);

// Eventually periodic sequence of powers A^0, A^1, ...: the smallest index and
// period with A^(index + period) == A^index, and every distinct power.
class PowerOrbit {
 public:
  explicit PowerOrbit(const BoolMatrix& base);

  std::size_t index() const { return index_; }
  std::size_t period() const { return period_; }
  // A^0 .. A^(index + period - 1), pairwise distinct.
  const std::vector<BoolMatrix>& powers() const { return powers_; }

  // Position of A^k inside powers().
  std::size_t reduce(const Natural& k) const;
  const BoolMatrix& power(const Natural& k) const { return powers_[reduce(k)]; }

 private:
  std::size_t index_ = 0;
  std::size_t period_ = 1;
  std::vector<BoolMatrix> powers_;
};

PowerOrbit power_orbit(const BoolMatrix& a);

// A^k with A^0 = I. Exponents beyond 64 bits are reduced through the orbit.
BoolMatrix mat_pow(const BoolMatrix& a, const Natural& k);

// Per-letter incidence matrices of a complete DFA, their union M, and the
// power orbit of M.
struct IncidenceMatrices {
  std::vector<BoolMatrix> letters;
  BoolMatrix any;
  PowerOrbit orbit;
};

IncidenceMatrices incidence_matrices(const Dfa& d);

// Indicator vectors of the accepting states and of the start state.
BoolVector final_vector(const Dfa& d);
BoolVector start_vector(const Dfa& d);

}  // namespace langfilter
