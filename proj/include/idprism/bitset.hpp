#ifndef IDPRISM_BITSET_HPP
#define IDPRISM_BITSET_HPP

/**
 * Dynamically sized bitset with word-level kernels. Used for adjacency rows,
 * distance balls and hitting-set constraints.
 */

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace idprism {

class Bitset
{
public:
  using Word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  Bitset() = default;

  explicit Bitset(std::size_t size) : _size(size), _words(words_for(size), 0) {}

  static auto words_for(std::size_t bits) -> std::size_t {
    return (bits + word_bits - 1) / word_bits;
  }

  static auto from_indices(std::size_t size, std::span<const int> indices) -> Bitset {
    Bitset b(size);
    for (int i : indices)
      b.set(static_cast<std::size_t>(i));
    return b;
  }

  auto size() const -> std::size_t { return _size; }
  auto words() const -> std::span<const Word> { return _words; }
  auto words() -> std::span<Word> { return _words; }

  auto test(std::size_t i) const -> bool {
    return (_words[i / word_bits] >> (i % word_bits)) & 1U;
  }

  auto set(std::size_t i) -> void {
    if (i >= _size)
      throw std::out_of_range("Bitset::set index out of range");
    _words[i / word_bits] |= Word{1} << (i % word_bits);
  }

  auto reset(std::size_t i) -> void {
    if (i >= _size)
      throw std::out_of_range("Bitset::reset index out of range");
    _words[i / word_bits] &= ~(Word{1} << (i % word_bits));
  }

  auto assign(std::size_t i, bool value) -> void {
    if (value)
      set(i);
    else
      reset(i);
  }

  auto set_all() -> void {
    std::fill(_words.begin(), _words.end(), ~Word{0});
    trim();
  }

  auto count() const -> std::size_t {
    std::size_t c = 0;
    for (Word w : _words)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  auto none() const -> bool {
    return std::all_of(_words.begin(), _words.end(), [](Word w) { return w == 0; });
  }

  auto any() const -> bool { return !none(); }

  auto intersects(const Bitset & other) const -> bool {
    for (std::size_t k = 0; k < _words.size(); ++k)
      if (_words[k] & other._words[k])
        return true;
    return false;
  }

  auto is_subset_of(const Bitset & other) const -> bool {
    for (std::size_t k = 0; k < _words.size(); ++k)
      if (_words[k] & ~other._words[k])
        return false;
    return true;
  }

  auto operator|=(const Bitset & o) -> Bitset & {
    for (std::size_t k = 0; k < _words.size(); ++k)
      _words[k] |= o._words[k];
    return *this;
  }

  auto operator&=(const Bitset & o) -> Bitset & {
    for (std::size_t k = 0; k < _words.size(); ++k)
      _words[k] &= o._words[k];
    return *this;
  }

  auto operator^=(const Bitset & o) -> Bitset & {
    for (std::size_t k = 0; k < _words.size(); ++k)
      _words[k] ^= o._words[k];
    return *this;
  }

  /// Removes every element of `o`.
  auto subtract(const Bitset & o) -> Bitset & {
    for (std::size_t k = 0; k < _words.size(); ++k)
      _words[k] &= ~o._words[k];
    return *this;
  }

  auto flip_all() -> void {
    for (Word & w : _words)
      w = ~w;
    trim();
  }

  friend auto operator|(Bitset a, const Bitset & b) -> Bitset { return a |= b; }
  friend auto operator&(Bitset a, const Bitset & b) -> Bitset { return a &= b; }
  friend auto operator^(Bitset a, const Bitset & b) -> Bitset { return a ^= b; }

  friend auto operator==(const Bitset &, const Bitset &) -> bool = default;

  /// Orders by word content, lowest word first; only meaningful between equal sizes.
  friend auto operator<=>(const Bitset & a, const Bitset & b) -> std::strong_ordering {
    if (auto c = a._size <=> b._size; c != 0)
      return c;
    return a._words <=> b._words;
  }

  /// Smallest set index at or after `from`, or size() if there is none.
  auto find_next(std::size_t from) const -> std::size_t {
    if (from >= _size)
      return _size;
    std::size_t k = from / word_bits;
    Word w = _words[k] & (~Word{0} << (from % word_bits));
    while (true) {
      if (w)
        return k * word_bits + static_cast<std::size_t>(std::countr_zero(w));
      if (++k == _words.size())
        return _size;
      w = _words[k];
    }
  }

  auto find_first() const -> std::size_t { return find_next(0); }

  template <typename F>
  auto for_each(F && f) const -> void {
    for (std::size_t k = 0; k < _words.size(); ++k) {
      Word w = _words[k];
      while (w) {
        f(k * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  auto to_indices() const -> std::vector<int> {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
    return out;
  }

private:
  auto trim() -> void {
    if (_size % word_bits && !_words.empty())
      _words.back() &= (Word{1} << (_size % word_bits)) - 1;
  }

  std::size_t _size = 0;
  std::vector<Word> _words;
};

} // namespace idprism

#endif
