#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pbz {

/// Ordered finite set of distinct object identifiers.
///
/// A Universe is a cheap-to-copy handle onto immutable shared data. Object
/// indices are positions in the identifier list and never change.
class Universe {
public:
  /// Throws Error when `ids` is empty or contains duplicates.
  explicit Universe(std::vector<std::string> ids);

  /// Universe of `n` objects named `<prefix>1 .. <prefix>n`.
  static Universe of_size(std::size_t n, std::string_view prefix = "o");

  std::size_t size() const noexcept { return data_->ids.size(); }
  const std::string& id(std::size_t index) const { return data_->ids.at(index); }
  std::span<const std::string> ids() const noexcept { return data_->ids; }

  std::optional<std::size_t> find(std::string_view id) const;
  /// Throws UnknownObjectError.
  std::size_t index_of(std::string_view id) const;

  /// Same handle, or same identifiers in the same order.
  friend bool operator==(const Universe& a, const Universe& b) noexcept;

private:
  struct Data {
    std::vector<std::string> ids;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

/// Subset of a Universe, stored as a bit vector indexed by object position.
///
/// All binary operations require both operands to share a universe and
/// throw UniverseMismatchError otherwise.
class ObjectSet {
public:
  /// The empty set over `universe`.
  explicit ObjectSet(Universe universe);

  static ObjectSet full(Universe universe);
  static ObjectSet of(Universe universe, std::initializer_list<std::string_view> ids);
  static ObjectSet of(Universe universe, std::span<const std::string> ids);
  static ObjectSet from_indices(Universe universe, std::span<const std::size_t> indices);
  /// Bit i of `mask` selects object i. Requires universe size <= 64.
  static ObjectSet from_mask(Universe universe, std::uint64_t mask);

  const Universe& universe() const noexcept { return universe_; }
  std::size_t universe_size() const noexcept { return size_; }

  bool contains(std::size_t index) const;
  bool contains(std::string_view id) const;
  std::size_t count() const noexcept;
  bool empty() const noexcept;

  ObjectSet& insert(std::size_t index);
  ObjectSet& insert(std::string_view id);
  ObjectSet& erase(std::size_t index);

  ObjectSet& operator|=(const ObjectSet& other);
  ObjectSet& operator&=(const ObjectSet& other);
  /// Set difference.
  ObjectSet& operator-=(const ObjectSet& other);

  friend ObjectSet operator|(ObjectSet a, const ObjectSet& b) { return a |= b; }
  friend ObjectSet operator&(ObjectSet a, const ObjectSet& b) { return a &= b; }
  friend ObjectSet operator-(ObjectSet a, const ObjectSet& b) { return a -= b; }
  /// Complement relative to the universe.
  ObjectSet operator~() const;

  bool is_subset_of(const ObjectSet& other) const;
  bool intersects(const ObjectSet& other) const;

  friend bool operator==(const ObjectSet& a, const ObjectSet& b);

  std::vector<std::size_t> indices() const;
  std::vector<std::string> ids() const;
  /// Low 64 bits of the membership vector.
  std::uint64_t mask() const noexcept { return words()[0]; }

  /// "{o1,o3}" in universe order.
  std::string to_string() const;

private:
  static constexpr std::size_t kInlineWords = 2;

  std::uint64_t* words() noexcept {
    return heap_.empty() ? inline_.data() : heap_.data();
  }
  const std::uint64_t* words() const noexcept {
    return heap_.empty() ? inline_.data() : heap_.data();
  }
  std::size_t word_count() const noexcept { return (size_ + 63) / 64; }
  void require_same_universe(const ObjectSet& other) const;
  void clear_padding() noexcept;

  Universe universe_;
  std::size_t size_;
  std::array<std::uint64_t, kInlineWords> inline_{};
  std::vector<std::uint64_t> heap_;
};

}  // namespace pbz
