#include "pbz/knowledge_base.hpp"

#include <limits>
#include <map>

#include "pbz/error.hpp"

namespace pbz {

namespace {
constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();
}

KnowledgeBase::KnowledgeBase(Universe universe, std::vector<ObjectSet> blocks)
    : universe_(std::move(universe)),
      blocks_(std::move(blocks)),
      block_of_(universe_.size(), kUnassigned) {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (!(blocks_[b].universe() == universe_)) throw UniverseMismatchError();
    if (blocks_[b].empty()) throw PartitionError("block " + std::to_string(b) + " is empty");
    for (auto x : blocks_[b].indices()) {
      if (block_of_[x] != kUnassigned) {
        throw PartitionError("object '" + universe_.id(x) + "' appears in blocks " +
                             std::to_string(block_of_[x]) + " and " + std::to_string(b));
      }
      block_of_[x] = b;
    }
  }
  for (std::size_t x = 0; x < block_of_.size(); ++x) {
    if (block_of_[x] == kUnassigned) {
      throw PartitionError("object '" + universe_.id(x) + "' is not covered by any block");
    }
  }
}

std::size_t KnowledgeBase::block_index_of(std::size_t object) const {
  if (object >= block_of_.size()) {
    throw Error("object index " + std::to_string(object) + " out of range");
  }
  return block_of_[object];
}

const ObjectSet& KnowledgeBase::block_of(std::size_t object) const {
  return blocks_[block_index_of(object)];
}

const ObjectSet& KnowledgeBase::block_of(std::string_view id) const {
  return block_of(universe_.index_of(id));
}

KnowledgeBase build_from_partition(Universe universe, std::vector<ObjectSet> blocks) {
  return KnowledgeBase(std::move(universe), std::move(blocks));
}

KnowledgeBase build_from_attributes(Universe universe, std::span<const AttributeRow> rows) {
  const std::size_t n = universe.size();
  std::vector<const std::vector<std::string>*> by_object(n, nullptr);
  std::size_t arity = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::size_t x = universe.index_of(row.id);
    if (r == 0) {
      arity = row.values.size();
    } else if (row.values.size() != arity) {
      throw Error("attribute vector of '" + row.id + "' has arity " +
                  std::to_string(row.values.size()) + ", expected " + std::to_string(arity));
    }
    if (by_object[x] != nullptr) throw Error("duplicate attribute row for '" + row.id + "'");
    by_object[x] = &row.values;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (by_object[x] == nullptr) throw Error("no attribute row for '" + universe.id(x) + "'");
  }

  // Group by vector; first occurrence fixes block order.
  std::map<std::vector<std::string>, std::size_t> block_index;
  std::vector<ObjectSet> blocks;
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, inserted] = block_index.emplace(*by_object[x], blocks.size());
    if (inserted) blocks.emplace_back(universe);
    blocks[it->second].insert(x);
  }
  return KnowledgeBase(std::move(universe), std::move(blocks));
}

KnowledgeBase identity_partition(Universe universe) {
  std::vector<ObjectSet> blocks;
  blocks.reserve(universe.size());
  for (std::size_t x = 0; x < universe.size(); ++x) blocks.push_back(ObjectSet(universe).insert(x));
  return KnowledgeBase(std::move(universe), std::move(blocks));
}

KnowledgeBase coarsest_partition(Universe universe) {
  std::vector<ObjectSet> blocks{ObjectSet::full(universe)};
  return KnowledgeBase(std::move(universe), std::move(blocks));
}

std::vector<KnowledgeBase> enumerate_partitions(const Universe& universe) {
  const std::size_t n = universe.size();
  std::vector<KnowledgeBase> out;
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    std::size_t nblocks = prefix_max[n - 1] + 1;
    std::vector<ObjectSet> blocks(nblocks, ObjectSet(universe));
    for (std::size_t x = 0; x < n; ++x) blocks[rgs[x]].insert(x);
    out.emplace_back(universe, std::move(blocks));

    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

ObjectSet lower_approx(const KnowledgeBase& kb, const ObjectSet& x) {
  if (!(x.universe() == kb.universe())) throw UniverseMismatchError();
  ObjectSet out(kb.universe());
  for (const auto& block : kb.blocks()) {
    if (block.is_subset_of(x)) out |= block;
  }
  return out;
}

ObjectSet upper_approx(const KnowledgeBase& kb, const ObjectSet& x) {
  if (!(x.universe() == kb.universe())) throw UniverseMismatchError();
  ObjectSet out(kb.universe());
  for (const auto& block : kb.blocks()) {
    if (block.intersects(x)) out |= block;
  }
  return out;
}

}  // namespace pbz
