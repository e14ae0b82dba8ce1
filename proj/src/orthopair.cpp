#include "pbz/orthopair.hpp"

#include "pbz/error.hpp"

namespace pbz {

Orthopair::Orthopair(ObjectSet positive, ObjectSet negative)
    : positive_(std::move(positive)), negative_(std::move(negative)) {
  if (!(positive_.universe() == negative_.universe())) throw UniverseMismatchError();
  if (positive_.intersects(negative_)) {
    throw OrthopairError("positive and negative regions overlap on " +
                         (positive_ & negative_).to_string());
  }
}

Orthopair Orthopair::bottom(const Universe& universe) {
  return Orthopair(ObjectSet(universe), ObjectSet::full(universe));
}

Orthopair Orthopair::top(const Universe& universe) {
  return Orthopair(ObjectSet::full(universe), ObjectSet(universe));
}

Orthopair Orthopair::crisp(const ObjectSet& s) { return Orthopair(s, ~s); }

std::string Orthopair::to_string() const {
  return "⟨" + positive_.to_string() + "," + negative_.to_string() + "⟩";
}

Orthopair meet(const Orthopair& p, const Orthopair& q) {
  return Orthopair(p.positive() & q.positive(), p.negative() | q.negative());
}

Orthopair join(const Orthopair& p, const Orthopair& q) {
  return Orthopair(p.positive() | q.positive(), p.negative() & q.negative());
}

Orthopair kleene_neg(const Orthopair& p) { return Orthopair(p.negative(), p.positive()); }

Orthopair brouwer_neg(const Orthopair& p) { return Orthopair(p.negative(), ~p.negative()); }

Orthopair pawlak_op(const KnowledgeBase& kb, const Orthopair& p) {
  return Orthopair(lower_approx(kb, p.positive()), lower_approx(kb, p.negative()));
}

bool leq(const Orthopair& p, const Orthopair& q) { return p == meet(p, q); }

std::uint64_t orthopair_count(std::size_t universe_size) {
  if (universe_size > 40) throw Error("3^|U| exceeds 64 bits");
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < universe_size; ++i) n *= 3;
  return n;
}

std::uint64_t orthopair_code(const Orthopair& p) {
  const std::size_t n = p.universe().size();
  if (n > 40) throw Error("orthopair codes require |U| <= 40");
  std::uint64_t code = 0;
  for (std::size_t i = n; i-- > 0;) {
    std::uint64_t digit = p.positive().contains(i) ? 2 : p.negative().contains(i) ? 0 : 1;
    code = code * 3 + digit;
  }
  return code;
}

Orthopair orthopair_from_code(const Universe& universe, std::uint64_t code) {
  const std::size_t n = universe.size();
  if (code >= orthopair_count(n)) throw Error("orthopair code out of range");
  ObjectSet positive(universe);
  ObjectSet negative(universe);
  for (std::size_t i = 0; i < n; ++i) {
    switch (code % 3) {
      case 0: negative.insert(i); break;
      case 2: positive.insert(i); break;
      default: break;
    }
    code /= 3;
  }
  return Orthopair(std::move(positive), std::move(negative));
}

}  // namespace pbz
