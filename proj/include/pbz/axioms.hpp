#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbz/knowledge_base.hpp"
#include "pbz/orthopair.hpp"

namespace pbz {

/// Laws certified for ⟨3^U, ⊓, ⊔, ⁻, ≈, ^L, ⟨∅,U⟩, ⟨U,∅⟩⟩.
enum class AxiomId : std::uint8_t {
  distributivity,  // a⊓(b⊔c) = (a⊓b)⊔(a⊓c) and a⊔(b⊓c) = (a⊔b)⊓(a⊔c)
  bounds,          // 0 ≤ a ≤ 1
  K1,              // a⁻⁻ = a
  K2,              // (a⊔b)⁻ = a⁻⊓b⁻
  K3,              // a⊓a⁻ ≤ b⊔b⁻
  B1,              // a ⊓ a^≈≈ = a
  B2,              // (a⊔b)^≈ = a^≈⊓b^≈
  B3,              // a ⊓ a^≈ = 0
  in,              // a^≈ ≤ a⁻
  s_in,            // a^≈≈ = a^≈⁻
  B2a,             // (a⊓b)^≈ = a^≈ ⊔ b^≈
  A1,              // a^{L⁻} = a^{⁻L}
  A2,              // a ≤ b implies b^{L≈} ≤ a^{L≈}
  A3,              // a^{L≈} ≤ a^≈
  A4,              // 0^L = 0
  A5,              // a^≈ = b^≈ implies a^L ⊓ b^L = (a⊓b)^L
  A6,              // a^L ⊔ b^L ≤ (a⊔b)^L
  A7,              // a^{LL} = a^L
  A8,              // a^{L≈L} = a^{L≈}
  A9,              // (a^L ⊓ b^L)^L = a^L ⊓ b^L
};

inline constexpr std::array<AxiomId, 20> kAxioms{
    AxiomId::distributivity, AxiomId::bounds, AxiomId::K1, AxiomId::K2, AxiomId::K3,
    AxiomId::B1, AxiomId::B2, AxiomId::B3, AxiomId::in, AxiomId::s_in, AxiomId::B2a,
    AxiomId::A1, AxiomId::A2, AxiomId::A3, AxiomId::A4, AxiomId::A5, AxiomId::A6,
    AxiomId::A7, AxiomId::A8, AxiomId::A9};

std::string_view to_string(AxiomId id) noexcept;
std::optional<AxiomId> parse_axiom_id(std::string_view text) noexcept;
/// Number of universally quantified orthopairs.
std::size_t arity(AxiomId id) noexcept;

enum class AxiomStatus : std::uint8_t { holds, counterexample, undecided };
std::string_view to_string(AxiomStatus s) noexcept;

/// Limits are counted in evaluated tuples of orthopairs.
struct AxiomBudget {
  /// Quantify exhaustively when (3^|U|)^arity does not exceed this.
  std::uint64_t max_tuples = 500'000'000;
  /// Otherwise evaluate this many random tuples.
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0x5eed;
};

struct AxiomReport {
  AxiomId axiom = AxiomId::K1;
  AxiomStatus status = AxiomStatus::undecided;
  bool exhaustive = false;
  /// Tuples evaluated; for a counterexample, tuples up to and including it.
  std::uint64_t cases_checked = 0;
  std::vector<Orthopair> witness;
  /// Set when an operation left 3^U while evaluating the witness.
  std::string detail;
};

/// Single-operator faults used to test that the checker has teeth.
enum class Mutation : std::uint8_t {
  none,
  pawlak_upper_both,           // ^L = ⟨R̄A, R̄B⟩
  pawlak_upper_second,         // ^L = ⟨R̲A, R̄B⟩
  brouwer_as_kleene,           // ^≈ = ⟨B, A⟩
  brouwer_without_complement,  // ^≈ = ⟨B, U⟩, not disjoint
  kleene_as_brouwer,           // ⁻ = ⟨B, U−B⟩
  meet_intersects_negatives,   // ⊓ = ⟨A∩C, B∩D⟩
};

inline constexpr std::array<Mutation, 6> kMutations{
    Mutation::pawlak_upper_both,         Mutation::pawlak_upper_second,
    Mutation::brouwer_as_kleene,         Mutation::brouwer_without_complement,
    Mutation::kleene_as_brouwer,         Mutation::meet_intersects_negatives};

std::string_view to_string(Mutation m) noexcept;
std::optional<Mutation> parse_mutation(std::string_view text) noexcept;

/// The operations under test; `standard()` is the concrete structure.
struct Operations {
  Orthopair (*meet)(const Orthopair&, const Orthopair&);
  Orthopair (*join)(const Orthopair&, const Orthopair&);
  Orthopair (*kleene)(const Orthopair&);
  Orthopair (*brouwer)(const Orthopair&);
  Orthopair (*pawlak)(const KnowledgeBase&, const Orthopair&);

  static Operations standard();
  static Operations mutated(Mutation m);
};

AxiomReport check_axiom(const KnowledgeBase& kb, AxiomId id, const AxiomBudget& budget = {},
                        Mutation mutation = Mutation::none);

/// Every axiom in kAxioms order.
std::vector<AxiomReport> check_all(const KnowledgeBase& kb, const AxiomBudget& budget = {},
                                   Mutation mutation = Mutation::none);

/// True iff every report holds and was decided exhaustively.
bool pbz_certified(std::span<const AxiomReport> reports) noexcept;

/// Re-evaluates `id` on one tuple by direct computation on orthopairs.
/// An operation that leaves 3^U counts as a violation.
bool violates(const KnowledgeBase& kb, AxiomId id, std::span<const Orthopair> tuple,
              Mutation mutation = Mutation::none);

}  // namespace pbz
