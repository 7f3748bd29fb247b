#include "fpg/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace fpg {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Permutation Permutation::cycle(std::size_t degree, std::span<Point const> pts) {
  auto p = identity(degree);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    p.images_.at(pts[i]) = pts[(i + 1) % pts.size()];
  }
  return Permutation(std::move(p.images_));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    p.images_[images_[i]] = static_cast<Point>(i);
  }
  return p;
}

std::size_t Permutation::order() const {
  std::size_t ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::str() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (out.back() != '(') out += ',';
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(Permutation const& a, Permutation const& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  Permutation p;
  p.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) p.images_[i] = b.images_[a.images_[i]];
  return p;
}

std::size_t PermutationHash::operator()(std::vector<Point> const& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : v) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

std::size_t PermutationHash::operator()(Permutation const& p) const noexcept {
  return (*this)(p.images());
}

}  // namespace fpg
