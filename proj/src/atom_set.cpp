#include "parakernel/atom_set.hpp"

#include <algorithm>
#include <string>

#include "parakernel/error.hpp"

namespace parakernel {

AtomSet AtomSet::full(std::size_t universe_size) {
  AtomSet s(universe_size);
  for (std::size_t i = 0; i < universe_size; ++i) s.insert(static_cast<AtomId>(i));
  return s;
}

AtomSet AtomSet::of(std::size_t universe_size, std::initializer_list<AtomId> members) {
  AtomSet s(universe_size);
  for (AtomId a : members) {
    if (a >= universe_size) throw Error(ErrorKind::UnknownAtom, "atom index out of range");
    s.insert(a);
  }
  return s;
}

bool AtomSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t AtomSet::count() const noexcept {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

void AtomSet::require_same_universe(const AtomSet& other) const {
  if (size_ != other.size_) {
    throw Error(ErrorKind::Precondition,
                "atom sets over different universes (" + std::to_string(size_) + " vs " +
                    std::to_string(other.size_) + " atoms)");
  }
}

bool AtomSet::is_subset_of(const AtomSet& other) const {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool AtomSet::intersects(const AtomSet& other) const {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

AtomSet& AtomSet::operator|=(const AtomSet& other) {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

AtomSet& AtomSet::operator&=(const AtomSet& other) {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

AtomSet& AtomSet::operator-=(const AtomSet& other) {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

AtomSet AtomSet::complement() const { return full(size_) - *this; }

std::vector<AtomId> AtomSet::members() const {
  std::vector<AtomId> out;
  out.reserve(count());
  for_each([&](AtomId a) { out.push_back(a); });
  return out;
}

std::size_t AtomSet::hash() const noexcept {
  std::size_t h = size_ * 0x9e3779b97f4a7c15ull;
  for (std::uint64_t w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

bool canonical_less(const AtomSet& a, const AtomSet& b) {
  const std::size_t ca = a.count();
  const std::size_t cb = b.count();
  if (ca != cb) return ca < cb;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

void sort_canonical(std::vector<AtomSet>& sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
}

}  // namespace parakernel
