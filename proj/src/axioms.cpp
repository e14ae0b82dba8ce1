#include "pbz/axioms.hpp"

#include <limits>
#include <memory>
#include <random>

#include "pbz/error.hpp"

namespace pbz {

namespace {

// Raised by a table lookup that hits an operation result outside 3^U.
struct ClosureViolation {
  std::string what;
};

// Orthopairs computed on the fly through the operations under test.
class DirectAlgebra {
public:
  using Element = Orthopair;

  DirectAlgebra(const KnowledgeBase& kb, const Operations& ops)
      : kb_(kb), ops_(ops), bottom_(Orthopair::bottom(kb.universe())),
        top_(Orthopair::top(kb.universe())) {}

  Element meet(const Element& a, const Element& b) const { return ops_.meet(a, b); }
  Element join(const Element& a, const Element& b) const { return ops_.join(a, b); }
  Element kleene(const Element& a) const { return ops_.kleene(a); }
  Element brouwer(const Element& a) const { return ops_.brouwer(a); }
  Element pawlak(const Element& a) const { return ops_.pawlak(kb_, a); }
  const Element& bottom() const { return bottom_; }
  const Element& top() const { return top_; }
  bool eq(const Element& a, const Element& b) const { return a == b; }
  bool leq(const Element& a, const Element& b) const { return eq(a, meet(a, b)); }

private:
  const KnowledgeBase& kb_;
  Operations ops_;
  Orthopair bottom_;
  Orthopair top_;
};

// Cayley tables of the operations, indexed by orthopair code. Every entry
// is produced by the operation itself; results outside 3^U are stored as
// kInvalid and raise ClosureViolation when read.
class TableAlgebra {
public:
  using Element = std::uint32_t;
  static constexpr Element kInvalid = std::numeric_limits<Element>::max();

  TableAlgebra(const KnowledgeBase& kb, const Operations& ops)
      : size_(static_cast<Element>(orthopair_count(kb.universe().size()))) {
    const Universe& u = kb.universe();
    std::vector<Orthopair> elements;
    elements.reserve(size_);
    for (Element c = 0; c < size_; ++c) elements.push_back(orthopair_from_code(u, c));

    auto code = [&](auto&& f) -> Element {
      try {
        return static_cast<Element>(orthopair_code(f()));
      } catch (const OrthopairError& e) {
        if (first_error_.empty()) first_error_ = e.what();
        return kInvalid;
      }
    };
    kleene_.resize(size_);
    brouwer_.resize(size_);
    pawlak_.resize(size_);
    for (Element a = 0; a < size_; ++a) {
      kleene_[a] = code([&] { return ops.kleene(elements[a]); });
      brouwer_[a] = code([&] { return ops.brouwer(elements[a]); });
      pawlak_[a] = code([&] { return ops.pawlak(kb, elements[a]); });
    }
    meet_.resize(std::size_t{size_} * size_);
    join_.resize(std::size_t{size_} * size_);
    for (Element a = 0; a < size_; ++a) {
      for (Element b = 0; b < size_; ++b) {
        meet_[index(a, b)] = code([&] { return ops.meet(elements[a], elements[b]); });
        join_[index(a, b)] = code([&] { return ops.join(elements[a], elements[b]); });
      }
    }
  }

  Element meet(Element a, Element b) const { return read(meet_, index(a, b)); }
  Element join(Element a, Element b) const { return read(join_, index(a, b)); }
  Element kleene(Element a) const { return read(kleene_, a); }
  Element brouwer(Element a) const { return read(brouwer_, a); }
  Element pawlak(Element a) const { return read(pawlak_, a); }
  Element bottom() const { return 0; }
  Element top() const { return size_ - 1; }
  bool eq(Element a, Element b) const { return a == b; }
  bool leq(Element a, Element b) const { return eq(a, meet(a, b)); }

private:
  std::size_t index(Element a, Element b) const { return std::size_t{a} * size_ + b; }

  Element read(const std::vector<Element>& table, std::size_t i) const {
    Element r = table[i];
    if (r == kInvalid) throw ClosureViolation{first_error_};
    return r;
  }

  Element size_;
  std::vector<Element> kleene_, brouwer_, pawlak_, meet_, join_;
  std::string first_error_;
};

template <class Alg>
bool holds(const Alg& g, AxiomId id, const typename Alg::Element* t) {
  using E = typename Alg::Element;
  auto implies = [](bool p, auto&& q) { return !p || q(); };
  switch (id) {
    case AxiomId::distributivity: {
      const E& a = t[0];
      const E& b = t[1];
      const E& c = t[2];
      return g.eq(g.meet(a, g.join(b, c)), g.join(g.meet(a, b), g.meet(a, c))) &&
             g.eq(g.join(a, g.meet(b, c)), g.meet(g.join(a, b), g.join(a, c)));
    }
    case AxiomId::bounds: return g.leq(g.bottom(), t[0]) && g.leq(t[0], g.top());
    case AxiomId::K1: return g.eq(g.kleene(g.kleene(t[0])), t[0]);
    case AxiomId::K2: return g.eq(g.kleene(g.join(t[0], t[1])), g.meet(g.kleene(t[0]), g.kleene(t[1])));
    case AxiomId::K3:
      return g.leq(g.meet(t[0], g.kleene(t[0])), g.join(t[1], g.kleene(t[1])));
    case AxiomId::B1: return g.eq(g.meet(t[0], g.brouwer(g.brouwer(t[0]))), t[0]);
    case AxiomId::B2:
      return g.eq(g.brouwer(g.join(t[0], t[1])), g.meet(g.brouwer(t[0]), g.brouwer(t[1])));
    case AxiomId::B3: return g.eq(g.meet(t[0], g.brouwer(t[0])), g.bottom());
    case AxiomId::in: return g.leq(g.brouwer(t[0]), g.kleene(t[0]));
    case AxiomId::s_in: return g.eq(g.brouwer(g.brouwer(t[0])), g.kleene(g.brouwer(t[0])));
    case AxiomId::B2a:
      return g.eq(g.brouwer(g.meet(t[0], t[1])), g.join(g.brouwer(t[0]), g.brouwer(t[1])));
    case AxiomId::A1: return g.eq(g.kleene(g.pawlak(t[0])), g.pawlak(g.kleene(t[0])));
    case AxiomId::A2:
      return implies(g.leq(t[0], t[1]), [&] {
        return g.leq(g.brouwer(g.pawlak(t[1])), g.brouwer(g.pawlak(t[0])));
      });
    case AxiomId::A3: return g.leq(g.brouwer(g.pawlak(t[0])), g.brouwer(t[0]));
    case AxiomId::A4: return g.eq(g.pawlak(g.bottom()), g.bottom());
    case AxiomId::A5:
      return implies(g.eq(g.brouwer(t[0]), g.brouwer(t[1])), [&] {
        return g.eq(g.meet(g.pawlak(t[0]), g.pawlak(t[1])), g.pawlak(g.meet(t[0], t[1])));
      });
    case AxiomId::A6:
      return g.leq(g.join(g.pawlak(t[0]), g.pawlak(t[1])), g.pawlak(g.join(t[0], t[1])));
    case AxiomId::A7: return g.eq(g.pawlak(g.pawlak(t[0])), g.pawlak(t[0]));
    case AxiomId::A8:
      return g.eq(g.pawlak(g.brouwer(g.pawlak(t[0]))), g.brouwer(g.pawlak(t[0])));
    case AxiomId::A9: {
      const E m = g.meet(g.pawlak(t[0]), g.pawlak(t[1]));
      return g.eq(g.pawlak(m), m);
    }
  }
  throw InternalError("unhandled axiom");
}

// Evaluates one tuple; an operation leaving 3^U is a violation.
template <class Alg>
bool tuple_holds(const Alg& g, AxiomId id, const typename Alg::Element* t, std::string& detail) {
  try {
    return holds(g, id, t);
  } catch (const ClosureViolation& v) {
    detail = "operation result left 3^U: " + v.what;
  } catch (const OrthopairError& e) {
    detail = std::string("operation result left 3^U: ") + e.what();
  }
  return false;
}

// (base)^exp, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

// Supplies elements of an algebra by orthopair code.
template <class Alg>
struct ElementSource;

template <>
struct ElementSource<TableAlgebra> {
  std::uint32_t operator()(std::uint64_t code) const { return static_cast<std::uint32_t>(code); }
  Orthopair orthopair(const Universe& u, std::uint32_t e) const { return orthopair_from_code(u, e); }
};

template <>
struct ElementSource<DirectAlgebra> {
  const Universe* universe;
  Orthopair operator()(std::uint64_t code) const { return orthopair_from_code(*universe, code); }
  Orthopair orthopair(const Universe&, const Orthopair& e) const { return e; }
};

template <class Alg>
AxiomReport run_checks(const Alg& g, const ElementSource<Alg>& source, const Universe& universe,
                       AxiomId id, const AxiomBudget& budget) {
  using E = typename Alg::Element;
  AxiomReport report;
  report.axiom = id;
  const std::size_t r = arity(id);
  const std::uint64_t n = orthopair_count(universe.size());
  const std::uint64_t total = saturating_pow(n, r);

  std::vector<E> tuple;
  tuple.reserve(r);
  auto fail = [&]() {
    report.status = AxiomStatus::counterexample;
    for (const auto& e : tuple) report.witness.push_back(source.orthopair(universe, e));
    return report;
  };

  if (total <= budget.max_tuples) {
    report.exhaustive = true;
    std::vector<std::uint64_t> digits(r, 0);
    for (std::size_t i = 0; i < r; ++i) tuple.push_back(source(0));
    for (std::uint64_t k = 0; k < total; ++k) {
      ++report.cases_checked;
      if (!tuple_holds(g, id, tuple.data(), report.detail)) return fail();
      // Odometer over codes, last component fastest.
      for (std::size_t i = r; i-- > 0;) {
        if (++digits[i] < n) {
          tuple[i] = source(digits[i]);
          break;
        }
        digits[i] = 0;
        tuple[i] = source(0);
      }
    }
    report.status = AxiomStatus::holds;
    return report;
  }

  std::mt19937_64 rng(budget.seed ^ static_cast<std::uint64_t>(id));
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  for (std::uint64_t k = 0; k < budget.samples; ++k) {
    tuple.clear();
    for (std::size_t i = 0; i < r; ++i) tuple.push_back(source(pick(rng)));
    ++report.cases_checked;
    if (!tuple_holds(g, id, tuple.data(), report.detail)) return fail();
  }
  report.status = AxiomStatus::undecided;
  return report;
}

// Universes up to this size are checked through Cayley tables.
constexpr std::size_t kTableUniverseLimit = 6;

Orthopair mutated_pawlak_upper_both(const KnowledgeBase& kb, const Orthopair& p) {
  return Orthopair(upper_approx(kb, p.positive()), upper_approx(kb, p.negative()));
}
Orthopair mutated_pawlak_upper_second(const KnowledgeBase& kb, const Orthopair& p) {
  return Orthopair(lower_approx(kb, p.positive()), upper_approx(kb, p.negative()));
}
Orthopair mutated_brouwer_as_kleene(const Orthopair& p) {
  return Orthopair(p.negative(), p.positive());
}
Orthopair mutated_brouwer_without_complement(const Orthopair& p) {
  return Orthopair(p.negative(), ObjectSet::full(p.universe()));
}
Orthopair mutated_kleene_as_brouwer(const Orthopair& p) {
  return Orthopair(p.negative(), ~p.negative());
}
Orthopair mutated_meet(const Orthopair& p, const Orthopair& q) {
  return Orthopair(p.positive() & q.positive(), p.negative() & q.negative());
}

}  // namespace

std::string_view to_string(AxiomId id) noexcept {
  switch (id) {
    case AxiomId::distributivity: return "distributivity";
    case AxiomId::bounds: return "bounds";
    case AxiomId::K1: return "K1";
    case AxiomId::K2: return "K2";
    case AxiomId::K3: return "K3";
    case AxiomId::B1: return "B1";
    case AxiomId::B2: return "B2";
    case AxiomId::B3: return "B3";
    case AxiomId::in: return "in";
    case AxiomId::s_in: return "s-in";
    case AxiomId::B2a: return "B2a";
    case AxiomId::A1: return "A1";
    case AxiomId::A2: return "A2";
    case AxiomId::A3: return "A3";
    case AxiomId::A4: return "A4";
    case AxiomId::A5: return "A5";
    case AxiomId::A6: return "A6";
    case AxiomId::A7: return "A7";
    case AxiomId::A8: return "A8";
    case AxiomId::A9: return "A9";
  }
  return "?";
}

std::optional<AxiomId> parse_axiom_id(std::string_view text) noexcept {
  for (auto id : kAxioms) {
    if (to_string(id) == text) return id;
  }
  return std::nullopt;
}

std::size_t arity(AxiomId id) noexcept {
  switch (id) {
    case AxiomId::distributivity: return 3;
    case AxiomId::A4: return 0;
    case AxiomId::K2:
    case AxiomId::K3:
    case AxiomId::B2:
    case AxiomId::B2a:
    case AxiomId::A2:
    case AxiomId::A5:
    case AxiomId::A6:
    case AxiomId::A9: return 2;
    default: return 1;
  }
}

std::string_view to_string(AxiomStatus s) noexcept {
  switch (s) {
    case AxiomStatus::holds: return "holds";
    case AxiomStatus::counterexample: return "counterexample";
    case AxiomStatus::undecided: return "undecided";
  }
  return "?";
}

std::string_view to_string(Mutation m) noexcept {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::pawlak_upper_both: return "pawlak-upper-both";
    case Mutation::pawlak_upper_second: return "pawlak-upper-second";
    case Mutation::brouwer_as_kleene: return "brouwer-as-kleene";
    case Mutation::brouwer_without_complement: return "brouwer-without-complement";
    case Mutation::kleene_as_brouwer: return "kleene-as-brouwer";
    case Mutation::meet_intersects_negatives: return "meet-intersects-negatives";
  }
  return "?";
}

std::optional<Mutation> parse_mutation(std::string_view text) noexcept {
  if (text == "none") return Mutation::none;
  for (auto m : kMutations) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

Operations Operations::standard() {
  return Operations{&pbz::meet, &pbz::join, &kleene_neg, &brouwer_neg, &pawlak_op};
}

Operations Operations::mutated(Mutation m) {
  Operations ops = standard();
  switch (m) {
    case Mutation::none: break;
    case Mutation::pawlak_upper_both: ops.pawlak = &mutated_pawlak_upper_both; break;
    case Mutation::pawlak_upper_second: ops.pawlak = &mutated_pawlak_upper_second; break;
    case Mutation::brouwer_as_kleene: ops.brouwer = &mutated_brouwer_as_kleene; break;
    case Mutation::brouwer_without_complement:
      ops.brouwer = &mutated_brouwer_without_complement;
      break;
    case Mutation::kleene_as_brouwer: ops.kleene = &mutated_kleene_as_brouwer; break;
    case Mutation::meet_intersects_negatives: ops.meet = &mutated_meet; break;
  }
  return ops;
}

AxiomReport check_axiom(const KnowledgeBase& kb, AxiomId id, const AxiomBudget& budget,
                        Mutation mutation) {
  const Operations ops = Operations::mutated(mutation);
  const Universe& u = kb.universe();
  if (u.size() <= kTableUniverseLimit) {
    TableAlgebra g(kb, ops);
    return run_checks(g, ElementSource<TableAlgebra>{}, u, id, budget);
  }
  DirectAlgebra g(kb, ops);
  return run_checks(g, ElementSource<DirectAlgebra>{&u}, u, id, budget);
}

std::vector<AxiomReport> check_all(const KnowledgeBase& kb, const AxiomBudget& budget,
                                   Mutation mutation) {
  const Operations ops = Operations::mutated(mutation);
  const Universe& u = kb.universe();
  std::vector<AxiomReport> reports;
  reports.reserve(kAxioms.size());
  if (u.size() <= kTableUniverseLimit) {
    TableAlgebra g(kb, ops);
    for (auto id : kAxioms) reports.push_back(run_checks(g, ElementSource<TableAlgebra>{}, u, id, budget));
  } else {
    DirectAlgebra g(kb, ops);
    for (auto id : kAxioms) {
      reports.push_back(run_checks(g, ElementSource<DirectAlgebra>{&u}, u, id, budget));
    }
  }
  return reports;
}

bool pbz_certified(std::span<const AxiomReport> reports) noexcept {
  if (reports.size() != kAxioms.size()) return false;
  for (const auto& r : reports) {
    if (r.status != AxiomStatus::holds || !r.exhaustive) return false;
  }
  return true;
}

bool violates(const KnowledgeBase& kb, AxiomId id, std::span<const Orthopair> tuple,
              Mutation mutation) {
  if (tuple.size() != arity(id)) {
    throw Error("axiom " + std::string(to_string(id)) + " takes " + std::to_string(arity(id)) +
                " orthopairs");
  }
  DirectAlgebra g(kb, Operations::mutated(mutation));
  std::string detail;
  return !tuple_holds(g, id, tuple.data(), detail);
}

}  // namespace pbz
