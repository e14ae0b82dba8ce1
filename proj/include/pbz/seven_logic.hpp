#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "pbz/knowledge_base.hpp"
#include "pbz/orthopair.hpp"
#include "pbz/truth_value.hpp"

namespace pbz {

/// Three independent ways of computing a truth part.
enum class Formulation : std::uint8_t {
  classwise,      ///< quantifiers over each equivalence class
  approximation,  ///< closed forms in lower/upper approximations
  lattice,        ///< lattice terms in ⊓, ⊔, ⁻, ≈, ^L evaluated on ⟨A,B⟩
};

inline constexpr std::array<Formulation, 3> kFormulations{
    Formulation::classwise, Formulation::approximation, Formulation::lattice};

std::string_view to_string(Formulation f) noexcept;

/// The objects at which ⟨A,B⟩ takes value `v`.
ObjectSet part(const KnowledgeBase& kb, const Orthopair& p, TruthValue v,
               Formulation formulation = Formulation::approximation);

/// Value at object x, read off the triple (x∈R̄A, x∈R̄B, x∈R̄(U−A−B)).
TruthValue classify(const KnowledgeBase& kb, const Orthopair& p, std::size_t x);
TruthValue classify(const KnowledgeBase& kb, const Orthopair& p, std::string_view id);

/// Value selected by an upper-approximation membership triple. The triple
/// (false, false, false) cannot occur and raises InternalError.
TruthValue truth_value_from_triple(bool in_upper_a, bool in_upper_b, bool in_upper_boundary);

/// The seven parts of an orthopair; pairwise disjoint and covering U.
class SevenPartition {
public:
  explicit SevenPartition(std::array<ObjectSet, 7> parts) : parts_(std::move(parts)) {}

  const ObjectSet& operator[](TruthValue v) const noexcept { return parts_[index_of(v)]; }
  /// Throws Error for an index outside the universe.
  TruthValue value_of(std::size_t x) const;
  std::array<std::size_t, 7> counts() const;

private:
  std::array<ObjectSet, 7> parts_;
};

SevenPartition seven_partition(const KnowledgeBase& kb, const Orthopair& p);

/// v↑: union of the parts at or above v in the truth order.
ObjectSet upward_part(const KnowledgeBase& kb, const Orthopair& p, TruthValue v,
                      Formulation formulation = Formulation::approximation);
/// v↓: union of the parts at or below v in the truth order.
ObjectSet downward_part(const KnowledgeBase& kb, const Orthopair& p, TruthValue v,
                        Formulation formulation = Formulation::approximation);
ObjectSet aggregate_part(const KnowledgeBase& kb, const Orthopair& p, TruthValue v, Direction d,
                         Formulation formulation = Formulation::approximation);

/// Lattice term whose positive region is the part of `v`.
std::string_view lattice_term(TruthValue v) noexcept;
/// Lattice term whose positive region is the aggregation v↑ or v↓.
std::string_view lattice_term(TruthValue v, Direction d) noexcept;

}  // namespace pbz
