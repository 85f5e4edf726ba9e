#include "birack/perm.hpp"

#include <numeric>
#include <string>

#include "birack/error.hpp"

namespace birack {

namespace {

void check_bijection(const std::vector<std::uint8_t>& img) {
  const int n = static_cast<int>(img.size());
  if (n == 0 || n > kMaxLabels) {
    throw Error("permutation size " + std::to_string(n) + " out of range");
  }
  std::uint32_t seen = 0;
  for (auto v : img) {
    if (v >= n || (seen >> v & 1U)) throw Error("not a permutation of 1.." + std::to_string(n));
    seen |= 1U << v;
  }
}

}  // namespace

Perm::Perm(const std::vector<Label>& images) {
  img_.reserve(images.size());
  for (Label v : images) {
    if (v < 1 || v > static_cast<Label>(images.size())) {
      throw Error("label " + std::to_string(v) + " out of range 1.." +
                  std::to_string(images.size()));
    }
    img_.push_back(static_cast<std::uint8_t>(v - 1));
  }
  check_bijection(img_);
}

Perm Perm::identity(int n) {
  std::vector<std::uint8_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  return from_raw(std::move(img));
}

Perm Perm::from_raw(std::vector<std::uint8_t> img) {
  check_bijection(img);
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Label Perm::operator()(Label x) const {
  if (x < 1 || x > size()) throw Error("label " + std::to_string(x) + " out of range");
  return img_[x - 1] + 1;
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<std::uint8_t>(i);
  Perm p;
  p.img_ = std::move(inv);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

std::vector<Label> Perm::images() const {
  std::vector<Label> out;
  out.reserve(img_.size());
  for (auto v : img_) out.push_back(v + 1);
  return out;
}

std::uint64_t Perm::order() const {
  std::uint64_t ord = 1;
  std::vector<bool> seen(img_.size());
  for (std::size_t s = 0; s < img_.size(); ++s) {
    if (seen[s]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = s; !seen[x]; x = img_[x]) {
      seen[x] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm compose(const Perm& outer, const Perm& inner) {
  if (outer.size() != inner.size()) throw Error("composing permutations of different sizes");
  std::vector<std::uint8_t> img(inner.size());
  auto o = outer.raw();
  auto in = inner.raw();
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = o[in[i]];
  return Perm::from_raw(std::move(img));
}

}  // namespace birack
