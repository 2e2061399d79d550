#ifndef PARAKERNEL_ATOM_SET_HPP
#define PARAKERNEL_ATOM_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace parakernel {

/// Dense index of an atom inside its universe. Indices follow the
/// lexicographic order of atom names.
using AtomId = std::uint32_t;

/// A subset of a fixed universe {0, ..., n-1}, stored as a bitset.
///
/// Every set remembers the size of the universe it was built for; binary
/// operations require both operands to come from the same universe.
class AtomSet {
 public:
  AtomSet() = default;
  explicit AtomSet(std::size_t universe_size)
      : size_(universe_size), words_((universe_size + 63) / 64, 0) {}

  static AtomSet full(std::size_t universe_size);
  static AtomSet of(std::size_t universe_size, std::initializer_list<AtomId> members);

  std::size_t universe_size() const noexcept { return size_; }

  bool contains(AtomId a) const noexcept {
    return a < size_ && ((words_[a / 64] >> (a % 64)) & 1u) != 0;
  }
  void insert(AtomId a) { words_[a / 64] |= std::uint64_t{1} << (a % 64); }
  void erase(AtomId a) { words_[a / 64] &= ~(std::uint64_t{1} << (a % 64)); }

  bool empty() const noexcept;
  std::size_t count() const noexcept;

  bool is_subset_of(const AtomSet& other) const;
  bool is_proper_subset_of(const AtomSet& other) const {
    return is_subset_of(other) && !(*this == other);
  }
  bool intersects(const AtomSet& other) const;

  AtomSet& operator|=(const AtomSet& other);
  AtomSet& operator&=(const AtomSet& other);
  AtomSet& operator-=(const AtomSet& other);
  AtomSet complement() const;

  friend AtomSet operator|(AtomSet a, const AtomSet& b) { return a |= b; }
  friend AtomSet operator&(AtomSet a, const AtomSet& b) { return a &= b; }
  friend AtomSet operator-(AtomSet a, const AtomSet& b) { return a -= b; }

  friend bool operator==(const AtomSet& a, const AtomSet& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

  /// Members in increasing index order.
  std::vector<AtomId> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        f(static_cast<AtomId>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;

 private:
  void require_same_universe(const AtomSet& other) const;

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Deterministic listing order used for every enumeration result:
/// smaller sets first, ties broken by lexicographic comparison of the
/// sorted member sequences.
bool canonical_less(const AtomSet& a, const AtomSet& b);

void sort_canonical(std::vector<AtomSet>& sets);

}  // namespace parakernel

template <>
struct std::hash<parakernel::AtomSet> {
  std::size_t operator()(const parakernel::AtomSet& s) const noexcept { return s.hash(); }
};

#endif
