#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace fpg {

using Point = std::uint32_t;

// Permutations act on the right: (a * b)(x) = b(a(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(std::size_t degree);
  static Permutation cycle(std::size_t degree, std::span<Point const> points);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::vector<Point> const& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::size_t order() const;
  std::string str() const;

  friend Permutation operator*(Permutation const& a, Permutation const& b);
  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const&, Permutation const&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(Permutation const& p) const noexcept;
  std::size_t operator()(std::vector<Point> const& v) const noexcept;
};

}  // namespace fpg
