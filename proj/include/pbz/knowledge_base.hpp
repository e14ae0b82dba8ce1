#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbz/universe.hpp"

namespace pbz {

/// A universe together with an indiscernibility relation, held as the
/// partition of the universe into equivalence classes.
class KnowledgeBase {
public:
  /// Throws PartitionError unless `blocks` are nonempty, pairwise disjoint
  /// and cover `universe`; UniverseMismatchError if a block lives elsewhere.
  KnowledgeBase(Universe universe, std::vector<ObjectSet> blocks);

  const Universe& universe() const noexcept { return universe_; }
  std::span<const ObjectSet> blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }

  std::size_t block_index_of(std::size_t object) const;
  /// The equivalence class [x]_R.
  const ObjectSet& block_of(std::size_t object) const;
  const ObjectSet& block_of(std::string_view id) const;

private:
  Universe universe_;
  std::vector<ObjectSet> blocks_;
  std::vector<std::size_t> block_of_;
};

/// One attribute vector keyed by object identifier.
struct AttributeRow {
  std::string id;
  std::vector<std::string> values;
};

KnowledgeBase build_from_partition(Universe universe, std::vector<ObjectSet> blocks);

/// Objects share a block iff their attribute vectors are equal token by
/// token. Blocks are ordered by their smallest member.
///
/// Throws Error on arity mismatch, duplicate or missing rows, and
/// UnknownObjectError for identifiers outside the universe.
KnowledgeBase build_from_attributes(Universe universe, std::span<const AttributeRow> rows);

/// Every object forms its own block.
KnowledgeBase identity_partition(Universe universe);
/// A single block holding the whole universe.
KnowledgeBase coarsest_partition(Universe universe);

/// All set partitions of `universe`, in restricted-growth-string order.
std::vector<KnowledgeBase> enumerate_partitions(const Universe& universe);

/// {x : [x]_R ⊆ X}
ObjectSet lower_approx(const KnowledgeBase& kb, const ObjectSet& x);
/// {x : [x]_R ∩ X ≠ ∅}
ObjectSet upper_approx(const KnowledgeBase& kb, const ObjectSet& x);

}  // namespace pbz
