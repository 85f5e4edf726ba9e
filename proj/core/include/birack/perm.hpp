#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace birack {

// Elements of a switch carrier are labelled 1..n.
using Label = int;

inline constexpr int kMaxLabels = 16;

class Perm {
 public:
  Perm() = default;

  // images[x-1] is the image of x. Throws Error unless this is a bijection of 1..n.
  explicit Perm(const std::vector<Label>& images);

  static Perm identity(int n);

  int size() const { return static_cast<int>(img_.size()); }
  Label operator()(Label x) const;

  Perm inverse() const;
  bool is_identity() const;
  std::vector<Label> images() const;
  // lcm of the cycle lengths
  std::uint64_t order() const;

  // 0-based images, for the numeric kernels.
  std::span<const std::uint8_t> raw() const { return img_; }
  static Perm from_raw(std::vector<std::uint8_t> img);

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint8_t> img_;
};

// outer∘inner: x -> outer(inner(x)).
Perm compose(const Perm& outer, const Perm& inner);

}  // namespace birack
