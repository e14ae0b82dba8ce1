#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace pbz {

/// The seven truth values of a concept at an object, by how the object's
/// equivalence class meets the positive region, the negative region and
/// the boundary.
enum class TruthValue : std::uint8_t {
  T,   ///< true: class inside A
  sT,  ///< sometimes true: meets A and the boundary, misses B
  U,   ///< unknown: class inside the boundary
  K,   ///< contradictory: meets A and B, misses the boundary
  fK,  ///< fully contradictory: meets all three regions
  sF,  ///< sometimes false: meets B and the boundary, misses A
  F,   ///< false: class inside B
};

inline constexpr std::array<TruthValue, 7> kTruthValues{
    TruthValue::T, TruthValue::sT, TruthValue::U, TruthValue::K,
    TruthValue::fK, TruthValue::sF, TruthValue::F};

enum class Direction : std::uint8_t { upward, downward };

std::string_view to_string(TruthValue v) noexcept;
std::string_view to_string(Direction d) noexcept;
std::optional<TruthValue> parse_truth_value(std::string_view text) noexcept;

/// Swaps T↔F and sT↔sF; fixes U, K, fK. The value of ⟨B,A⟩ at x is the
/// mirror of the value of ⟨A,B⟩ at x.
TruthValue mirror(TruthValue v) noexcept;

/// Truth order F < sF < {U, K, fK} < sT < T with U, K, fK pairwise
/// incomparable. Upward and downward aggregations are its principal filters
/// and ideals.
bool truth_leq(TruthValue a, TruthValue b) noexcept;

/// Values w with v ≤ w (upward) or w ≤ v (downward), in enumeration order.
std::vector<TruthValue> aggregation_members(TruthValue v, Direction d);

inline constexpr std::size_t index_of(TruthValue v) noexcept {
  return static_cast<std::size_t>(v);
}

}  // namespace pbz
