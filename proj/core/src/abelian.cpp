#include "fpg/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fpg/errors.hpp"

namespace fpg {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (auto const& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
    for (long x : r) data_.emplace_back(x);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void IntegerMatrix::append_row(std::vector<Integer> const& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Integer IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  auto a = data_;
  auto A = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && A(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(A(k, j), A(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = A(i, j) * A(k, k) - A(i, k) * A(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        A(i, j) = v;
      }
    }
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

IntegerMatrix operator*(IntegerMatrix const& a, IntegerMatrix const& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  }
  return c;
}

namespace {

// Dense Smith normal form in place. U accumulates row operations, V column
// operations, so that U * M * V = result.
void smith_in_place(IntegerMatrix& a, IntegerMatrix* u, IntegerMatrix* v) {
  std::size_t m = a.rows(), n = a.cols();
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a.at(i, c), a.at(j, c));
    if (u) {
      for (std::size_t c = 0; c < m; ++c) std::swap(u->at(i, c), u->at(j, c));
    }
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(a.at(r, i), a.at(r, j));
    if (v) {
      for (std::size_t r = 0; r < n; ++r) std::swap(v->at(r, i), v->at(r, j));
    }
  };
  // row i -= q * row j
  auto sub_row = [&](std::size_t i, std::size_t j, Integer const& q, std::size_t from) {
    for (std::size_t c = from; c < n; ++c) {
      if (a.at(j, c) != 0) a.at(i, c) -= q * a.at(j, c);
    }
    if (u) {
      for (std::size_t c = 0; c < m; ++c) {
        if (u->at(j, c) != 0) u->at(i, c) -= q * u->at(j, c);
      }
    }
  };
  auto sub_col = [&](std::size_t i, std::size_t j, Integer const& q, std::size_t from) {
    for (std::size_t r = from; r < m; ++r) {
      if (a.at(r, j) != 0) a.at(r, i) -= q * a.at(r, j);
    }
    if (v) {
      for (std::size_t r = 0; r < n; ++r) {
        if (v->at(r, j) != 0) v->at(r, i) -= q * v->at(r, j);
      }
    }
  };

  std::size_t lim = std::min(m, n);
  for (std::size_t t = 0; t < lim; ++t) {
    // smallest nonzero entry in the trailing block
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (a.at(i, j) == 0) continue;
        if (pi == m || abs(a.at(i, j)) < abs(a.at(pi, pj))) {
          pi = i;
          pj = j;
          if (abs(a.at(pi, pj)) == 1) break;
        }
      }
      if (pi != m && abs(a.at(pi, pj)) == 1) break;
    }
    if (pi == m) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    while (true) {
      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a.at(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
        sub_row(i, t, q, t);
        if (a.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a.at(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
        sub_col(j, t, q, t);
        if (a.at(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a.at(i, t) != 0 && abs(a.at(i, t)) < abs(a.at(bi, bj))) {
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a.at(t, j) != 0 && abs(a.at(t, j)) < abs(a.at(bi, bj))) {
            bi = t;
            bj = j;
          }
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // enforce divisibility of the trailing block
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a.at(i, j) != 0 && !mpz_divisible_p(a.at(i, j).get_mpz_t(),
                                                  a.at(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (bad == m) break;
      sub_row(t, bad, -1, t);
    }
    if (a.at(t, t) < 0) {
      for (std::size_t c = t; c < n; ++c) a.at(t, c) = -a.at(t, c);
      if (u) {
        for (std::size_t c = 0; c < m; ++c) u->at(t, c) = -u->at(t, c);
      }
    }
  }
}

using SparseRow = std::vector<std::pair<std::uint32_t, Integer>>;

// r - f * p for sorted sparse rows
SparseRow axpy(SparseRow const& r, Integer const& f, SparseRow const& p,
               std::vector<std::uint32_t>& fresh) {
  SparseRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || p[j].first < r[i].first) {
      fresh.push_back(p[j].first);
      out.emplace_back(p[j].first, -f * p[j].second);
      ++j;
    } else {
      Integer v = r[i].second - f * p[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

struct Reduction {
  std::size_t ncols = 0;
  std::vector<SparseRow> rows;
  std::vector<bool> col_alive;
  std::vector<std::pair<std::uint32_t, SparseRow>> elims;
};

// Eliminates generators with a unit coefficient in some relation.
void unit_pivots(Reduction& red) {
  auto& rows = red.rows;
  std::vector<bool> active(rows.size(), true);
  std::vector<std::vector<std::uint32_t>> col_rows(red.ncols);
  for (std::uint32_t i = 0; i < rows.size(); ++i) {
    for (auto const& e : rows[i]) col_rows[e.first].push_back(i);
  }
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<std::uint32_t> order;
    for (std::uint32_t i = 0; i < rows.size(); ++i) {
      if (active[i] && !rows[i].empty()) order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
      return rows[x].size() < rows[y].size();
    });
    for (auto i : order) {
      if (!active[i] || rows[i].empty()) continue;
      std::int64_t best = -1;
      std::size_t best_count = 0;
      for (auto const& e : rows[i]) {
        if (abs(e.second) != 1) continue;
        if (best < 0 || col_rows[e.first].size() < best_count) {
          best = e.first;
          best_count = col_rows[e.first].size();
        }
      }
      if (best < 0) continue;
      auto j = static_cast<std::uint32_t>(best);
      SparseRow p = rows[i];
      Integer s = std::find_if(p.begin(), p.end(), [&](auto const& e) {
                    return e.first == j;
                  })->second;
      auto users = std::move(col_rows[j]);
      col_rows[j].clear();
      std::sort(users.begin(), users.end());
      users.erase(std::unique(users.begin(), users.end()), users.end());
      for (auto r : users) {
        if (r == i || !active[r]) continue;
        auto it = std::lower_bound(rows[r].begin(), rows[r].end(), j,
                                   [](auto const& e, std::uint32_t c) { return e.first < c; });
        if (it == rows[r].end() || it->first != j) continue;
        Integer f = it->second * s;
        std::vector<std::uint32_t> fresh;
        rows[r] = axpy(rows[r], f, p, fresh);
        for (auto c : fresh) col_rows[c].push_back(r);
        if (rows[r].empty()) active[r] = false;
      }
      active[i] = false;
      red.col_alive[j] = false;
      red.elims.push_back({j, std::move(p)});
      rows[i].clear();
      progress = true;
    }
  }
  std::vector<SparseRow> left;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (active[i] && !rows[i].empty()) left.push_back(std::move(rows[i]));
  }
  rows = std::move(left);
}

Reduction sparse_relations(Presentation const& p, std::vector<Word> const& extra) {
  Reduction red;
  red.ncols = p.generator_count();
  red.col_alive.assign(red.ncols, true);
  auto add = [&](Word const& w) {
    std::map<std::uint32_t, long long> sums;
    for (auto l : w.letters()) sums[l.gen()] += l.sign();
    SparseRow row;
    for (auto [c, v] : sums) {
      if (v != 0) row.emplace_back(c, Integer(static_cast<long>(v)));
    }
    if (!row.empty()) red.rows.push_back(std::move(row));
  };
  for (auto const& r : p.relators()) add(r);
  for (auto const& w : extra) {
    require_compatible(w.alphabet(), p.alphabet());
    add(w);
  }
  return red;
}

struct Remainder {
  std::vector<std::uint32_t> cols;  // surviving generators
  IntegerMatrix matrix;
};

Remainder densify(Reduction const& red) {
  Remainder rem;
  std::vector<std::int64_t> pos(red.ncols, -1);
  for (std::uint32_t c = 0; c < red.ncols; ++c) {
    if (red.col_alive[c]) {
      pos[c] = static_cast<std::int64_t>(rem.cols.size());
      rem.cols.push_back(c);
    }
  }
  rem.matrix = IntegerMatrix(red.rows.size(), rem.cols.size());
  for (std::size_t i = 0; i < red.rows.size(); ++i) {
    for (auto const& e : red.rows[i]) {
      rem.matrix.at(i, static_cast<std::size_t>(pos[e.first])) = e.second;
    }
  }
  return rem;
}

AbelianInvariants invariants_of_reduction(Reduction red) {
  unit_pivots(red);
  auto rem = densify(red);
  auto snf = smith_normal_form(rem.matrix);
  return AbelianInvariants::from_diagonal(snf.diagonal, rem.cols.size());
}

}  // namespace

SmithForm smith_normal_form(IntegerMatrix const& m, bool witnesses) {
  SmithForm out;
  IntegerMatrix a = m;
  if (witnesses) {
    out.left = IntegerMatrix::identity(m.rows());
    out.right = IntegerMatrix::identity(m.cols());
    smith_in_place(a, &*out.left, &*out.right);
  } else {
    smith_in_place(a, nullptr, nullptr);
  }
  for (std::size_t t = 0; t < std::min(m.rows(), m.cols()); ++t) {
    out.diagonal.push_back(a.at(t, t));
  }
  return out;
}

Integer AbelianInvariants::order() const {
  if (free_rank > 0) throw InfiniteAbelianization("order of an infinite group");
  Integer o = 1;
  for (auto const& d : torsion) o *= d;
  return o;
}

std::string AbelianInvariants::str() const {
  std::string s = "(" + std::to_string(free_rank) + ",[";
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (i) s += ",";
    s += torsion[i].get_str();
  }
  return s + "])";
}

AbelianInvariants AbelianInvariants::from_diagonal(std::vector<Integer> const& diagonal,
                                                   std::size_t generators) {
  AbelianInvariants inv;
  std::size_t rank = 0;
  for (auto const& d : diagonal) {
    if (d == 0) continue;
    ++rank;
    if (abs(d) != 1) inv.torsion.push_back(abs(d));
  }
  std::sort(inv.torsion.begin(), inv.torsion.end());
  inv.free_rank = generators - rank;
  return inv;
}

IntegerMatrix abelianized_relation_matrix(Presentation const& p) {
  IntegerMatrix m(p.relators().size(), p.generator_count());
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    for (auto l : p.relators()[i].letters()) m.at(i, l.gen()) += l.sign();
  }
  return m;
}

AbelianInvariants invariants_of_relation_matrix(IntegerMatrix const& m) {
  Reduction red;
  red.ncols = m.cols();
  red.col_alive.assign(m.cols(), true);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseRow row;
    for (std::uint32_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j) != 0) row.emplace_back(j, m.at(i, j));
    }
    if (!row.empty()) red.rows.push_back(std::move(row));
  }
  return invariants_of_reduction(std::move(red));
}

AbelianInvariants abelian_invariants(Presentation const& p) {
  return invariants_of_reduction(sparse_relations(p, {}));
}

AbelianInvariants quotient_with_extra_rows(Presentation const& p,
                                           std::vector<Word> const& extra) {
  return invariants_of_reduction(sparse_relations(p, extra));
}

std::vector<Integer> AbelianizationMap::evaluate(Word const& w) const {
  std::size_t k = invariants.torsion.size() + invariants.free_rank;
  std::vector<Integer> v(k, 0);
  for (auto l : w.letters()) {
    auto const& c = coordinates.at(l.gen());
    for (std::size_t i = 0; i < k; ++i) {
      if (l.is_inverse()) {
        v[i] -= c[i];
      } else {
        v[i] += c[i];
      }
    }
  }
  for (std::size_t i = 0; i < invariants.torsion.size(); ++i) {
    mpz_fdiv_r(v[i].get_mpz_t(), v[i].get_mpz_t(), invariants.torsion[i].get_mpz_t());
  }
  return v;
}

PermHom AbelianizationMap::regular_hom(Presentation const& p) const {
  if (!invariants.is_finite()) {
    throw InfiniteAbelianization("abelianization " + invariants.str() + " is infinite");
  }
  Integer ord = invariants.order();
  if (ord > 10'000'000) throw TooLarge("abelianization of order " + ord.get_str());
  std::size_t n = ord.get_ui();
  auto const& tors = invariants.torsion;
  std::vector<std::size_t> radix;
  for (auto const& d : tors) radix.push_back(d.get_ui());
  PermHom h{p, {}};
  for (auto const& c : coordinates) {
    std::vector<std::size_t> shift;
    for (std::size_t i = 0; i < tors.size(); ++i) shift.push_back(c[i].get_ui());
    std::vector<Point> img(n);
    std::vector<std::size_t> digits(radix.size(), 0);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t rest = x;
      for (std::size_t i = 0; i < radix.size(); ++i) {
        digits[i] = rest % radix[i];
        rest /= radix[i];
      }
      std::size_t y = 0;
      for (std::size_t i = radix.size(); i-- > 0;) {
        y = y * radix[i] + (digits[i] + shift[i]) % radix[i];
      }
      img[x] = static_cast<Point>(y);
    }
    h.images.emplace_back(std::move(img));
  }
  return h;
}

AbelianizationMap abelianization_map(Presentation const& p) {
  auto red = sparse_relations(p, {});
  unit_pivots(red);
  auto rem = densify(red);
  auto snf = smith_normal_form(rem.matrix, true);
  std::size_t nc = rem.cols.size();
  // factor t of the remainder: d_t for t < rank, 0 after
  std::vector<Integer> d(nc, 0);
  for (std::size_t t = 0; t < snf.diagonal.size(); ++t) d[t] = snf.diagonal[t];
  std::vector<std::size_t> kept_torsion, kept_free;
  for (std::size_t t = 0; t < nc; ++t) {
    if (d[t] == 0) {
      kept_free.push_back(t);
    } else if (d[t] != 1) {
      kept_torsion.push_back(t);
    }
  }
  AbelianizationMap out;
  for (auto t : kept_torsion) out.invariants.torsion.push_back(d[t]);
  out.invariants.free_rank = kept_free.size();
  std::size_t k = kept_torsion.size() + kept_free.size();
  auto reduce = [&](std::vector<Integer>& v) {
    for (std::size_t i = 0; i < kept_torsion.size(); ++i) {
      mpz_fdiv_r(v[i].get_mpz_t(), v[i].get_mpz_t(), out.invariants.torsion[i].get_mpz_t());
    }
  };
  out.coordinates.assign(p.generator_count(), std::vector<Integer>(k, 0));
  auto const& V = *snf.right;
  for (std::size_t pos = 0; pos < nc; ++pos) {
    auto& c = out.coordinates[rem.cols[pos]];
    std::size_t i = 0;
    for (auto t : kept_torsion) c[i++] = V.at(pos, t);
    for (auto t : kept_free) c[i++] = V.at(pos, t);
    reduce(c);
  }
  for (auto it = red.elims.rbegin(); it != red.elims.rend(); ++it) {
    auto j = it->first;
    auto const& row = it->second;
    Integer s = 0;
    for (auto const& e : row) {
      if (e.first == j) s = e.second;
    }
    std::vector<Integer> c(k, 0);
    for (auto const& e : row) {
      if (e.first == j) continue;
      auto const& o = out.coordinates[e.first];
      for (std::size_t i = 0; i < k; ++i) c[i] -= s * e.second * o[i];
    }
    reduce(c);
    out.coordinates[j] = std::move(c);
  }
  return out;
}

}  // namespace fpg
