#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace homext {

/// Fixed-length dynamic bitset over {0..size-1}; the storage behind adjacency rows.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static Bitset full(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::uint64_t word(std::size_t i) const noexcept { return i < words_.size() ? words_[i] : 0; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool any() const noexcept { return !none(); }

  /// Least set index at or after `from`, or npos.
  std::size_t find_next(std::size_t from) const noexcept;
  std::size_t find_first() const noexcept { return find_next(0); }

  Bitset& operator&=(const Bitset& other) noexcept;
  Bitset& operator|=(const Bitset& other) noexcept;
  Bitset& and_not(const Bitset& other) noexcept;
  void flip() noexcept;

  bool intersects(const Bitset& other) const noexcept;
  bool is_subset_of(const Bitset& other) const noexcept;

  std::vector<std::uint32_t> indices() const;

  bool operator==(const Bitset&) const = default;

 private:
  void trim() noexcept;

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace homext
