#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbz/knowledge_base.hpp"
#include "pbz/orthopair.hpp"
#include "pbz/truth_value.hpp"

namespace pbz {

/// One derived truth value. Its extension is
///   ⋃ upward          when only `upward` is given,
///   ⋃ downward        when only `downward` is given,
///   (⋃ upward) ∩ (⋃ downward) when both are given,
/// where each member v stands for the aggregation v↑ or v↓.
struct ValueDefinition {
  std::string label;
  std::vector<TruthValue> upward;
  std::vector<TruthValue> downward;

  friend bool operator==(const ValueDefinition&, const ValueDefinition&) = default;
};

/// A named n-valued logic built from upward/downward aggregations.
/// Holds no universe-specific data.
class LogicSpec {
public:
  /// Throws LogicSpecError when the name is empty, there are no values,
  /// a label is empty or repeated, a definition has no members, or a
  /// member repeats within one union.
  LogicSpec(std::string name, std::vector<ValueDefinition> values);

  const std::string& name() const noexcept { return name_; }
  const std::vector<ValueDefinition>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::optional<std::size_t> find(std::string_view label) const;

  friend bool operator==(const LogicSpec&, const LogicSpec&) = default;

private:
  std::string name_;
  std::vector<ValueDefinition> values_;
};

/// "sT↑ ∪ T↑", "(U↑) ∩ (U↓)", ...
std::string describe(const ValueDefinition& def);

/// Extension of one derived value on ⟨A,B⟩.
ObjectSet evaluate_definition(const KnowledgeBase& kb, const Orthopair& p,
                              const ValueDefinition& def);

/// Derived values evaluated on one orthopair. Parts are pairwise disjoint
/// and cover the universe.
class LogicAssignment {
public:
  LogicAssignment(LogicSpec logic, std::vector<ObjectSet> parts);

  const LogicSpec& logic() const noexcept { return logic_; }
  const std::vector<ObjectSet>& parts() const noexcept { return parts_; }
  const ObjectSet& part(std::size_t i) const { return parts_.at(i); }
  /// Throws LogicSpecError for an unknown label.
  const ObjectSet& part(std::string_view label) const;
  /// Index of the derived value taken at object x.
  std::size_t value_of(std::size_t x) const;
  const std::string& label_of(std::size_t x) const;

private:
  LogicSpec logic_;
  std::vector<ObjectSet> parts_;
};

/// Throws LogicSpecError if the derived values overlap or leave an object
/// uncovered on this particular orthopair.
LogicAssignment evaluate_logic(const KnowledgeBase& kb, const Orthopair& p, const LogicSpec& spec);

enum class ValidationStatus : std::uint8_t { valid, invalid, undecided };
std::string_view to_string(ValidationStatus s) noexcept;

struct ValidationBudget {
  /// Enumerate 3^|U| exhaustively when it does not exceed this.
  std::uint64_t exhaustive_limit = 531441;  // 3^12
  /// Otherwise test this many uniformly drawn orthopairs.
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0x5eed;
};

struct ValidationReport {
  ValidationStatus status = ValidationStatus::undecided;
  bool exhaustive = false;
  std::uint64_t cases_checked = 0;
  /// First failing orthopair in enumeration (or sampling) order.
  std::optional<Orthopair> witness;
  /// Objects claimed by two or more derived values on the witness.
  std::optional<ObjectSet> clashing;
  /// Objects claimed by no derived value on the witness.
  std::optional<ObjectSet> uncovered;
  /// Labels of a clashing pair, when there is one.
  std::vector<std::string> clashing_labels;
};

/// Decides whether `spec` partitions U for every orthopair over `kb`.
ValidationReport validate_logic(const KnowledgeBase& kb, const LogicSpec& spec,
                                const ValidationBudget& budget = {});

/// treatment, triage, diagnosis and belnap.
std::vector<LogicSpec> builtin_logics();
/// The seven base values, each as an intersection of v↑ and v↓.
LogicSpec seven_valued_logic();
/// Looks up "seven" and the built-ins by name.
std::optional<LogicSpec> find_logic(std::string_view name);

enum class BelnapValue : std::uint8_t { true_value, unknown, contradictory, false_value };
std::string_view to_string(BelnapValue v) noexcept;

/// Reads Belnap's value off the arguments for truth (x ∈ R̄A) and for
/// falsehood (x ∈ R̄B).
BelnapValue belnap_from_arguments(const KnowledgeBase& kb, const Orthopair& p, std::size_t x);
BelnapValue belnap_from_arguments(const KnowledgeBase& kb, const Orthopair& p,
                                  std::string_view id);

}  // namespace pbz
