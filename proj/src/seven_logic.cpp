#include "pbz/seven_logic.hpp"

#include <vector>

#include "pbz/error.hpp"
#include "pbz/term.hpp"

namespace pbz {

namespace {

// Terms are indexed by TruthValue. Each evaluates to a crisp orthopair
// ⟨S, U−S⟩ whose positive region S is the wanted set.
//
//   a^{L−≈}                          R̲A
//   a^{L≈}                           R̲B
//   a^{≈L≈}                          R̲(U−B)
//   a^{−≈L≈}                         R̲(U−A)
//   a^{−≈L≈−}                        R̄A
//   a^{≈L≈−}                         R̄B
//   (a^{≈−} ⊓ a^{−≈−})^{L≈−}         R̄(U−A−B)
//   (a^{≈−} ⊓ a^{−≈−})^{L−≈}         R̲(U−A−B)
//   (a ⊔ a^{−})^{L−≈}                R̲(A∪B)
constexpr std::array<std::string_view, 7> kPartTerms{
    "a^{L−≈}",
    "a^{≈L≈} ⊓ (a^{≈−} ⊓ a^{−≈−})^{L≈−} ⊓ a^{−≈L≈−}",
    "(a^{≈−} ⊓ a^{−≈−})^{L−≈}",
    "(a ⊔ a^{−})^{L−≈} ⊓ a^{−≈L≈−} ⊓ a^{≈L≈−}",
    "a^{−≈L≈−} ⊓ a^{≈L≈−} ⊓ (a^{≈−} ⊓ a^{−≈−})^{L≈−}",
    // The last conjunct is R̄B; sF requires the class to meet B.
    "a^{−≈L≈} ⊓ (a^{≈−} ⊓ a^{−≈−})^{L≈−} ⊓ a^{≈L≈−}",
    "a^{L≈}",
};

constexpr std::array<std::string_view, 7> kUpwardTerms{
    "a^{L−≈}",
    "a^{≈L≈} ⊓ a^{−≈L≈−}",
    "a^{≈L≈}",
    "((a ⊔ a^{−})^{L−≈} ⊔ a^{≈L≈}) ⊓ a^{−≈L≈−}",
    "a^{L−≈} ⊔ (a^{−≈L≈−} ⊓ (a^{≈−} ⊓ a^{−≈−})^{L≈−})",
    "a^{L≈−}",
    "1",
};

constexpr std::array<std::string_view, 7> kDownwardTerms{
    "1",
    // R̄(U−A) = U − R̲A.
    "a^{L−≈−}",
    "a^{−≈L≈}",
    "((a ⊔ a^{−})^{L−≈} ⊔ a^{−≈L≈}) ⊓ a^{≈L≈−}",
    "a^{L≈} ⊔ (a^{≈L≈−} ⊓ (a^{≈−} ⊓ a^{−≈−})^{L≈−})",
    "a^{−≈L≈} ⊓ a^{≈L≈−}",
    "a^{L≈}",
};

struct ParsedTerms {
  std::array<Term, 7> parts;
  std::array<Term, 7> upward;
  std::array<Term, 7> downward;
};

template <std::size_t N>
std::array<Term, N> parse_all(const std::array<std::string_view, N>& texts) {
  return [&]<std::size_t... I>(std::index_sequence<I...>) {
    return std::array<Term, N>{Term::parse(texts[I])...};
  }(std::make_index_sequence<N>{});
}

const ParsedTerms& parsed_terms() {
  static const ParsedTerms terms{parse_all(kPartTerms), parse_all(kUpwardTerms),
                                 parse_all(kDownwardTerms)};
  return terms;
}

void require_same_universe(const KnowledgeBase& kb, const Orthopair& p) {
  if (!(kb.universe() == p.universe())) throw UniverseMismatchError();
}

ObjectSet lattice_set(const Term& term, const KnowledgeBase& kb, const Orthopair& p) {
  return term.evaluate(kb, p).positive();
}

// Quantifier form: collect every block satisfying `pred(block)`.
template <class Pred>
ObjectSet union_of_blocks(const KnowledgeBase& kb, Pred pred) {
  ObjectSet out(kb.universe());
  for (const auto& block : kb.blocks()) {
    if (pred(block)) out |= block;
  }
  return out;
}

ObjectSet classwise_part(const KnowledgeBase& kb, const ObjectSet& a, const ObjectSet& b,
                         TruthValue v) {
  const ObjectSet bnd = ~(a | b);
  const ObjectSet not_a = ~a;
  const ObjectSet not_b = ~b;
  const ObjectSet a_or_b = a | b;
  switch (v) {
    case TruthValue::T:
      return union_of_blocks(kb, [&](const ObjectSet& c) { return c.is_subset_of(a); });
    case TruthValue::sT:
      return union_of_blocks(kb, [&](const ObjectSet& c) {
        return c.is_subset_of(not_b) && c.intersects(a) && c.intersects(bnd);
      });
    case TruthValue::U:
      return union_of_blocks(kb, [&](const ObjectSet& c) { return c.is_subset_of(bnd); });
    case TruthValue::K:
      return union_of_blocks(kb, [&](const ObjectSet& c) {
        return c.is_subset_of(a_or_b) && c.intersects(b) && c.intersects(a);
      });
    case TruthValue::fK:
      return union_of_blocks(kb, [&](const ObjectSet& c) {
        return c.intersects(a) && c.intersects(b) && c.intersects(bnd);
      });
    case TruthValue::sF:
      return union_of_blocks(kb, [&](const ObjectSet& c) {
        return c.is_subset_of(not_a) && c.intersects(b) && c.intersects(bnd);
      });
    case TruthValue::F:
      return union_of_blocks(kb, [&](const ObjectSet& c) { return c.is_subset_of(b); });
  }
  throw InternalError("unhandled truth value");
}

ObjectSet approximation_part(const KnowledgeBase& kb, const ObjectSet& a, const ObjectSet& b,
                             TruthValue v) {
  const ObjectSet bnd = ~(a | b);
  switch (v) {
    case TruthValue::T: return lower_approx(kb, a);
    case TruthValue::sT:
      return lower_approx(kb, ~b) & upper_approx(kb, a) & upper_approx(kb, bnd);
    case TruthValue::U: return lower_approx(kb, bnd);
    case TruthValue::K:
      return lower_approx(kb, a | b) & upper_approx(kb, a) & upper_approx(kb, b);
    case TruthValue::fK:
      return upper_approx(kb, a) & upper_approx(kb, b) & upper_approx(kb, bnd);
    case TruthValue::sF:
      return lower_approx(kb, ~a) & upper_approx(kb, b) & upper_approx(kb, bnd);
    case TruthValue::F: return lower_approx(kb, b);
  }
  throw InternalError("unhandled truth value");
}

// Upward aggregations over (A,B). Downward ones are the same formulas on
// (B,A) with the mirrored value.
ObjectSet classwise_upward(const KnowledgeBase& kb, const ObjectSet& a, const ObjectSet& b,
                           TruthValue v) {
  const ObjectSet bnd = ~(a | b);
  const ObjectSet not_b = ~b;
  const ObjectSet a_or_b = a | b;
  switch (v) {
    case TruthValue::T: return classwise_part(kb, a, b, TruthValue::T);
    case TruthValue::sT:
      return union_of_blocks(
          kb, [&](const ObjectSet& c) { return c.is_subset_of(not_b) && c.intersects(a); });
    case TruthValue::U:
      return union_of_blocks(kb, [&](const ObjectSet& c) { return c.is_subset_of(not_b); });
    case TruthValue::K:
      return union_of_blocks(kb, [&](const ObjectSet& c) {
        return (c.is_subset_of(a_or_b) || c.is_subset_of(not_b)) && c.intersects(a);
      });
    case TruthValue::fK:
      return union_of_blocks(kb, [&](const ObjectSet& c) {
        return c.is_subset_of(a) || (c.intersects(a) && c.intersects(bnd));
      });
    case TruthValue::sF:
      return union_of_blocks(kb, [&](const ObjectSet& c) { return c.intersects(not_b); });
    case TruthValue::F: return ObjectSet::full(kb.universe());
  }
  throw InternalError("unhandled truth value");
}

ObjectSet approximation_upward(const KnowledgeBase& kb, const ObjectSet& a, const ObjectSet& b,
                               TruthValue v) {
  const ObjectSet bnd = ~(a | b);
  switch (v) {
    case TruthValue::T: return lower_approx(kb, a);
    case TruthValue::sT: return lower_approx(kb, ~b) & upper_approx(kb, a);
    case TruthValue::U: return lower_approx(kb, ~b);
    case TruthValue::K:
      return (lower_approx(kb, a | b) | lower_approx(kb, ~b)) & upper_approx(kb, a);
    case TruthValue::fK: return lower_approx(kb, a) | (upper_approx(kb, a) & upper_approx(kb, bnd));
    case TruthValue::sF: return upper_approx(kb, ~b);
    case TruthValue::F: return ObjectSet::full(kb.universe());
  }
  throw InternalError("unhandled truth value");
}

}  // namespace

std::string_view to_string(Formulation f) noexcept {
  switch (f) {
    case Formulation::classwise: return "classwise";
    case Formulation::approximation: return "approximation";
    case Formulation::lattice: return "lattice";
  }
  return "?";
}

std::string_view lattice_term(TruthValue v) noexcept { return kPartTerms[index_of(v)]; }

std::string_view lattice_term(TruthValue v, Direction d) noexcept {
  return d == Direction::upward ? kUpwardTerms[index_of(v)] : kDownwardTerms[index_of(v)];
}

ObjectSet part(const KnowledgeBase& kb, const Orthopair& p, TruthValue v,
               Formulation formulation) {
  require_same_universe(kb, p);
  switch (formulation) {
    case Formulation::classwise: return classwise_part(kb, p.positive(), p.negative(), v);
    case Formulation::approximation:
      return approximation_part(kb, p.positive(), p.negative(), v);
    case Formulation::lattice: return lattice_set(parsed_terms().parts[index_of(v)], kb, p);
  }
  throw InternalError("unhandled formulation");
}

TruthValue truth_value_from_triple(bool in_upper_a, bool in_upper_b, bool in_upper_boundary) {
  const int key = (in_upper_a ? 4 : 0) | (in_upper_b ? 2 : 0) | (in_upper_boundary ? 1 : 0);
  switch (key) {
    case 0b100: return TruthValue::T;
    case 0b101: return TruthValue::sT;
    case 0b001: return TruthValue::U;
    case 0b110: return TruthValue::K;
    case 0b111: return TruthValue::fK;
    case 0b011: return TruthValue::sF;
    case 0b010: return TruthValue::F;
    default: break;
  }
  throw InternalError("equivalence class meets none of A, B and the boundary");
}

namespace {
TruthValue classify_block(const ObjectSet& block, const Orthopair& p, const ObjectSet& bnd) {
  return truth_value_from_triple(block.intersects(p.positive()), block.intersects(p.negative()),
                                 block.intersects(bnd));
}
}  // namespace

TruthValue classify(const KnowledgeBase& kb, const Orthopair& p, std::size_t x) {
  require_same_universe(kb, p);
  return classify_block(kb.block_of(x), p, p.boundary());
}

TruthValue classify(const KnowledgeBase& kb, const Orthopair& p, std::string_view id) {
  return classify(kb, p, kb.universe().index_of(id));
}

TruthValue SevenPartition::value_of(std::size_t x) const {
  for (auto v : kTruthValues) {
    if (parts_[index_of(v)].contains(x)) return v;
  }
  throw InternalError("object not covered by the seven-way partition");
}

std::array<std::size_t, 7> SevenPartition::counts() const {
  std::array<std::size_t, 7> out{};
  for (std::size_t i = 0; i < 7; ++i) out[i] = parts_[i].count();
  return out;
}

SevenPartition seven_partition(const KnowledgeBase& kb, const Orthopair& p) {
  require_same_universe(kb, p);
  std::array<ObjectSet, 7> parts{ObjectSet(kb.universe()), ObjectSet(kb.universe()),
                                 ObjectSet(kb.universe()), ObjectSet(kb.universe()),
                                 ObjectSet(kb.universe()), ObjectSet(kb.universe()),
                                 ObjectSet(kb.universe())};
  const ObjectSet bnd = p.boundary();
  for (const auto& block : kb.blocks()) parts[index_of(classify_block(block, p, bnd))] |= block;
  return SevenPartition(std::move(parts));
}

ObjectSet aggregate_part(const KnowledgeBase& kb, const Orthopair& p, TruthValue v, Direction d,
                         Formulation formulation) {
  require_same_universe(kb, p);
  const bool up = d == Direction::upward;
  const ObjectSet& a = up ? p.positive() : p.negative();
  const ObjectSet& b = up ? p.negative() : p.positive();
  const TruthValue w = up ? v : mirror(v);
  switch (formulation) {
    case Formulation::classwise: return classwise_upward(kb, a, b, w);
    case Formulation::approximation: return approximation_upward(kb, a, b, w);
    case Formulation::lattice: {
      const auto& terms = up ? parsed_terms().upward : parsed_terms().downward;
      return lattice_set(terms[index_of(v)], kb, p);
    }
  }
  throw InternalError("unhandled formulation");
}

ObjectSet upward_part(const KnowledgeBase& kb, const Orthopair& p, TruthValue v,
                      Formulation formulation) {
  return aggregate_part(kb, p, v, Direction::upward, formulation);
}

ObjectSet downward_part(const KnowledgeBase& kb, const Orthopair& p, TruthValue v,
                        Formulation formulation) {
  return aggregate_part(kb, p, v, Direction::downward, formulation);
}

}  // namespace pbz
