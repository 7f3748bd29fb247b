#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fpg/presentation.hpp"

namespace fpg {

using Integer = mpz_class;

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Integer const& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void append_row(std::vector<Integer> const& row);
  Integer determinant() const;  // square only; fraction-free elimination

  friend IntegerMatrix operator*(IntegerMatrix const& a, IntegerMatrix const& b);
  friend bool operator==(IntegerMatrix const& a, IntegerMatrix const& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithForm {
  // min(rows, cols) entries, d1 | d2 | ..., zeros last
  std::vector<Integer> diagonal;
  std::optional<IntegerMatrix> left;   // U
  std::optional<IntegerMatrix> right;  // V, with U * M * V = D
};

SmithForm smith_normal_form(IntegerMatrix const& m, bool witnesses = false);

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // each >= 2, divisibility chain

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }
  Integer order() const;  // finite only
  // "(0,[2,2])"
  std::string str() const;
  static AbelianInvariants from_diagonal(std::vector<Integer> const& diagonal,
                                         std::size_t generators);
  friend bool operator==(AbelianInvariants const&, AbelianInvariants const&) = default;
};

IntegerMatrix abelianized_relation_matrix(Presentation const& p);
AbelianInvariants invariants_of_relation_matrix(IntegerMatrix const& m);
AbelianInvariants abelian_invariants(Presentation const& p);
AbelianInvariants quotient_with_extra_rows(Presentation const& p,
                                           std::vector<Word> const& extra);

// Map of generators onto Z_{d1} + ... + Z_{dk} + Z^r.
struct AbelianizationMap {
  AbelianInvariants invariants;
  std::vector<std::vector<Integer>> coordinates;  // per generator

  std::vector<Integer> evaluate(Word const& w) const;
  // Regular representation of the (finite) image; throws
  // InfiniteAbelianization when the free rank is positive.
  PermHom regular_hom(Presentation const& p) const;
};

AbelianizationMap abelianization_map(Presentation const& p);

}  // namespace fpg
