#pragma once

#include <cstdint>
#include <string>

#include "pbz/knowledge_base.hpp"
#include "pbz/universe.hpp"

namespace pbz {

/// An element ⟨A,B⟩ of 3^U: disjoint positive region A and negative region B.
/// The boundary U−A−B is derived on demand.
class Orthopair {
public:
  /// Throws OrthopairError if the regions overlap and UniverseMismatchError
  /// if they live over different universes.
  Orthopair(ObjectSet positive, ObjectSet negative);

  /// 0 = ⟨∅,U⟩
  static Orthopair bottom(const Universe& universe);
  /// 1 = ⟨U,∅⟩
  static Orthopair top(const Universe& universe);
  /// A crisp set S read as ⟨S, U−S⟩.
  static Orthopair crisp(const ObjectSet& s);

  const ObjectSet& positive() const noexcept { return positive_; }
  const ObjectSet& negative() const noexcept { return negative_; }
  ObjectSet boundary() const { return ~(positive_ | negative_); }
  const Universe& universe() const noexcept { return positive_.universe(); }

  friend bool operator==(const Orthopair& a, const Orthopair& b) {
    return a.positive_ == b.positive_ && a.negative_ == b.negative_;
  }

  /// "⟨{o1},{o2}⟩"
  std::string to_string() const;

private:
  ObjectSet positive_;
  ObjectSet negative_;
};

/// ⟨A,B⟩ ⊓ ⟨C,D⟩ = ⟨A∩C, B∪D⟩
Orthopair meet(const Orthopair& p, const Orthopair& q);
/// ⟨A,B⟩ ⊔ ⟨C,D⟩ = ⟨A∪C, B∩D⟩
Orthopair join(const Orthopair& p, const Orthopair& q);
/// Kleene negation ⟨A,B⟩⁻ = ⟨B,A⟩.
Orthopair kleene_neg(const Orthopair& p);
/// Brouwer negation ⟨A,B⟩^≈ = ⟨B,U−B⟩.
Orthopair brouwer_neg(const Orthopair& p);
/// Pawlak operator ⟨A,B⟩^L = ⟨R̲A, R̲B⟩.
Orthopair pawlak_op(const KnowledgeBase& kb, const Orthopair& p);

/// p ≤ q iff p = p ⊓ q.
bool leq(const Orthopair& p, const Orthopair& q);

/// |3^U| = 3^n. Throws Error if it does not fit in 64 bits.
std::uint64_t orthopair_count(std::size_t universe_size);

/// Base-3 code of an orthopair: digit i (least significant first) is
/// 0 when object i is negative, 1 on the boundary, 2 when positive.
/// Code 0 is ⟨∅,U⟩ and code 3^n−1 is ⟨U,∅⟩. Requires |U| <= 40.
std::uint64_t orthopair_code(const Orthopair& p);
Orthopair orthopair_from_code(const Universe& universe, std::uint64_t code);

/// Calls `fn(p)` for every orthopair of `universe` in code order.
template <class Fn>
void for_each_orthopair(const Universe& universe, Fn&& fn) {
  const std::uint64_t n = orthopair_count(universe.size());
  for (std::uint64_t code = 0; code < n; ++code) fn(orthopair_from_code(universe, code));
}

}  // namespace pbz
