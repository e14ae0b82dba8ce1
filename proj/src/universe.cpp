#include "pbz/universe.hpp"

#include <bit>

#include "pbz/error.hpp"

namespace pbz {

Universe::Universe(std::vector<std::string> ids) {
  if (ids.empty()) throw Error("universe must contain at least one object");
  auto data = std::make_shared<Data>();
  data->index.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!data->index.emplace(ids[i], i).second) {
      throw Error("duplicate object identifier '" + ids[i] + "'");
    }
  }
  data->ids = std::move(ids);
  data_ = std::move(data);
}

Universe Universe::of_size(std::size_t n, std::string_view prefix) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) ids.push_back(std::string(prefix) + std::to_string(i));
  return Universe(std::move(ids));
}

std::optional<std::size_t> Universe::find(std::string_view id) const {
  auto it = data_->index.find(std::string(id));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw UnknownObjectError(std::string(id));
}

bool operator==(const Universe& a, const Universe& b) noexcept {
  return a.data_ == b.data_ || a.data_->ids == b.data_->ids;
}

// ---------------------------------------------------------------------------

ObjectSet::ObjectSet(Universe universe)
    : universe_(std::move(universe)), size_(universe_.size()) {
  if (word_count() > kInlineWords) heap_.assign(word_count(), 0);
}

ObjectSet ObjectSet::full(Universe universe) {
  ObjectSet s(std::move(universe));
  std::uint64_t* w = s.words();
  for (std::size_t i = 0; i < s.word_count(); ++i) w[i] = ~std::uint64_t{0};
  s.clear_padding();
  return s;
}

ObjectSet ObjectSet::of(Universe universe, std::initializer_list<std::string_view> ids) {
  ObjectSet s(std::move(universe));
  for (auto id : ids) s.insert(id);
  return s;
}

ObjectSet ObjectSet::of(Universe universe, std::span<const std::string> ids) {
  ObjectSet s(std::move(universe));
  for (const auto& id : ids) s.insert(id);
  return s;
}

ObjectSet ObjectSet::from_indices(Universe universe, std::span<const std::size_t> indices) {
  ObjectSet s(std::move(universe));
  for (auto i : indices) s.insert(i);
  return s;
}

ObjectSet ObjectSet::from_mask(Universe universe, std::uint64_t mask) {
  ObjectSet s(std::move(universe));
  if (s.size_ > 64) throw Error("from_mask requires a universe of at most 64 objects");
  s.words()[0] = mask;
  s.clear_padding();
  if (s.words()[0] != mask) throw Error("mask selects objects outside the universe");
  return s;
}

bool ObjectSet::contains(std::size_t index) const {
  if (index >= size_) throw Error("object index " + std::to_string(index) + " out of range");
  return (words()[index / 64] >> (index % 64)) & 1U;
}

bool ObjectSet::contains(std::string_view id) const {
  return contains(universe_.index_of(id));
}

std::size_t ObjectSet::count() const noexcept {
  std::size_t n = 0;
  const std::uint64_t* w = words();
  for (std::size_t i = 0; i < word_count(); ++i) n += std::popcount(w[i]);
  return n;
}

bool ObjectSet::empty() const noexcept {
  const std::uint64_t* w = words();
  for (std::size_t i = 0; i < word_count(); ++i) {
    if (w[i] != 0) return false;
  }
  return true;
}

ObjectSet& ObjectSet::insert(std::size_t index) {
  if (index >= size_) throw Error("object index " + std::to_string(index) + " out of range");
  words()[index / 64] |= std::uint64_t{1} << (index % 64);
  return *this;
}

ObjectSet& ObjectSet::insert(std::string_view id) { return insert(universe_.index_of(id)); }

ObjectSet& ObjectSet::erase(std::size_t index) {
  if (index >= size_) throw Error("object index " + std::to_string(index) + " out of range");
  words()[index / 64] &= ~(std::uint64_t{1} << (index % 64));
  return *this;
}

ObjectSet& ObjectSet::operator|=(const ObjectSet& other) {
  require_same_universe(other);
  std::uint64_t* w = words();
  const std::uint64_t* o = other.words();
  for (std::size_t i = 0; i < word_count(); ++i) w[i] |= o[i];
  return *this;
}

ObjectSet& ObjectSet::operator&=(const ObjectSet& other) {
  require_same_universe(other);
  std::uint64_t* w = words();
  const std::uint64_t* o = other.words();
  for (std::size_t i = 0; i < word_count(); ++i) w[i] &= o[i];
  return *this;
}

ObjectSet& ObjectSet::operator-=(const ObjectSet& other) {
  require_same_universe(other);
  std::uint64_t* w = words();
  const std::uint64_t* o = other.words();
  for (std::size_t i = 0; i < word_count(); ++i) w[i] &= ~o[i];
  return *this;
}

ObjectSet ObjectSet::operator~() const {
  ObjectSet out(*this);
  std::uint64_t* w = out.words();
  for (std::size_t i = 0; i < word_count(); ++i) w[i] = ~w[i];
  out.clear_padding();
  return out;
}

bool ObjectSet::is_subset_of(const ObjectSet& other) const {
  require_same_universe(other);
  const std::uint64_t* w = words();
  const std::uint64_t* o = other.words();
  for (std::size_t i = 0; i < word_count(); ++i) {
    if (w[i] & ~o[i]) return false;
  }
  return true;
}

bool ObjectSet::intersects(const ObjectSet& other) const {
  require_same_universe(other);
  const std::uint64_t* w = words();
  const std::uint64_t* o = other.words();
  for (std::size_t i = 0; i < word_count(); ++i) {
    if (w[i] & o[i]) return true;
  }
  return false;
}

bool operator==(const ObjectSet& a, const ObjectSet& b) {
  a.require_same_universe(b);
  const std::uint64_t* x = a.words();
  const std::uint64_t* y = b.words();
  for (std::size_t i = 0; i < a.word_count(); ++i) {
    if (x[i] != y[i]) return false;
  }
  return true;
}

std::vector<std::size_t> ObjectSet::indices() const {
  std::vector<std::size_t> out;
  const std::uint64_t* w = words();
  for (std::size_t i = 0; i < word_count(); ++i) {
    std::uint64_t bits = w[i];
    while (bits != 0) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::string> ObjectSet::ids() const {
  std::vector<std::string> out;
  for (auto i : indices()) out.push_back(universe_.id(i));
  return out;
}

std::string ObjectSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto i : indices()) {
    if (!first) out += ',';
    out += universe_.id(i);
    first = false;
  }
  return out + "}";
}

void ObjectSet::require_same_universe(const ObjectSet& other) const {
  if (!(universe_ == other.universe_)) throw UniverseMismatchError();
}

void ObjectSet::clear_padding() noexcept {
  if (size_ % 64 != 0) words()[word_count() - 1] &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

}  // namespace pbz
