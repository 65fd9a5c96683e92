#include "homext/bitset.hpp"

#include <bit>

namespace homext {

Bitset Bitset::full(std::size_t size) {
  Bitset b(size);
  for (auto& w : b.words_) w = ~std::uint64_t{0};
  b.trim();
  return b;
}

void Bitset::trim() noexcept {
  if (size_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }
}

std::size_t Bitset::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::none() const noexcept {
  for (auto w : words_)
    if (w) return false;
  return true;
}

std::size_t Bitset::find_next(std::size_t from) const noexcept {
  if (from >= size_) return npos;
  std::size_t wi = from >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi >= words_.size()) return npos;
    w = words_[wi];
  }
}

Bitset& Bitset::operator&=(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.word(i);
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.word(i);
  trim();
  return *this;
}

Bitset& Bitset::and_not(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.word(i);
  return *this;
}

void Bitset::flip() noexcept {
  for (auto& w : words_) w = ~w;
  trim();
}

bool Bitset::intersects(const Bitset& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.word(i)) return true;
  return false;
}

bool Bitset::is_subset_of(const Bitset& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.word(i)) return false;
  return true;
}

std::vector<std::uint32_t> Bitset::indices() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = find_first(); i != npos; i = find_next(i + 1))
    out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

}  // namespace homext
