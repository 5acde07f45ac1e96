#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace tgames {

using Vertex = std::uint32_t;

/// Subset of a fixed vertex universe {0, ..., n-1}, stored as a bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : words_((universe + 63) / 64, 0), universe_(universe) {}

  static VertexSet full(std::size_t universe);
  static VertexSet of(std::size_t universe, std::span<const Vertex> members);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
  }
  void insert(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;

  VertexSet& operator|=(const VertexSet& other) noexcept;
  VertexSet& operator&=(const VertexSet& other) noexcept;
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other) noexcept;
  VertexSet complement() const;

  std::vector<Vertex> members() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void clear_tail() noexcept;

  std::vector<std::uint64_t> words_;
  std::size_t universe_ = 0;
};

inline VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
inline VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
inline VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

}  // namespace tgames

template <>
struct std::hash<tgames::VertexSet> {
  std::size_t operator()(const tgames::VertexSet& s) const noexcept { return s.hash(); }
};
