#include "pbz/truth_value.hpp"

namespace pbz {

namespace {
// Height in the truth order; the middle layer shares height 2.
constexpr int height(TruthValue v) noexcept {
  switch (v) {
    case TruthValue::F: return 0;
    case TruthValue::sF: return 1;
    case TruthValue::U:
    case TruthValue::K:
    case TruthValue::fK: return 2;
    case TruthValue::sT: return 3;
    case TruthValue::T: return 4;
  }
  return -1;
}
}  // namespace

std::string_view to_string(TruthValue v) noexcept {
  switch (v) {
    case TruthValue::T: return "T";
    case TruthValue::sT: return "sT";
    case TruthValue::U: return "U";
    case TruthValue::K: return "K";
    case TruthValue::fK: return "fK";
    case TruthValue::sF: return "sF";
    case TruthValue::F: return "F";
  }
  return "?";
}

std::string_view to_string(Direction d) noexcept {
  return d == Direction::upward ? "up" : "down";
}

std::optional<TruthValue> parse_truth_value(std::string_view text) noexcept {
  for (auto v : kTruthValues) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

TruthValue mirror(TruthValue v) noexcept {
  switch (v) {
    case TruthValue::T: return TruthValue::F;
    case TruthValue::sT: return TruthValue::sF;
    case TruthValue::sF: return TruthValue::sT;
    case TruthValue::F: return TruthValue::T;
    default: return v;
  }
}

bool truth_leq(TruthValue a, TruthValue b) noexcept {
  if (a == b) return true;
  return height(a) < height(b);
}

std::vector<TruthValue> aggregation_members(TruthValue v, Direction d) {
  std::vector<TruthValue> out;
  for (auto w : kTruthValues) {
    if (d == Direction::upward ? truth_leq(v, w) : truth_leq(w, v)) out.push_back(w);
  }
  return out;
}

}  // namespace pbz
