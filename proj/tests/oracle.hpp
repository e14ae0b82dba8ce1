#pragma once

// Brute-force reference model: plain std::set, quantifiers over blocks.
// Shares no code with the library beyond the TruthValue enum.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

#include "pbz/knowledge_base.hpp"
#include "pbz/orthopair.hpp"
#include "pbz/truth_value.hpp"

namespace oracle {

using Set = std::set<std::size_t>;
using pbz::TruthValue;

struct Model {
  std::size_t n = 0;
  std::vector<Set> blocks;
};

struct Pair {
  Set a, b;
  bool operator==(const Pair&) const = default;
};

inline Set all(std::size_t n) {
  Set s;
  for (std::size_t i = 0; i < n; ++i) s.insert(i);
  return s;
}

inline Set minus(const Set& x, const Set& y) {
  Set out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::inserter(out, out.end()));
  return out;
}

inline Set inter(const Set& x, const Set& y) {
  Set out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::inserter(out, out.end()));
  return out;
}

inline Set unite(const Set& x, const Set& y) {
  Set out = x;
  out.insert(y.begin(), y.end());
  return out;
}

inline Model from(const pbz::KnowledgeBase& kb) {
  Model m;
  m.n = kb.universe().size();
  for (const auto& block : kb.blocks()) {
    auto idx = block.indices();
    m.blocks.emplace_back(idx.begin(), idx.end());
  }
  return m;
}

inline Set to_set(const pbz::ObjectSet& s) {
  auto idx = s.indices();
  return {idx.begin(), idx.end()};
}

inline Pair from(const pbz::Orthopair& p) { return {to_set(p.positive()), to_set(p.negative())}; }

inline pbz::Orthopair to_orthopair(const pbz::Universe& u, const Pair& p) {
  std::vector<std::size_t> a(p.a.begin(), p.a.end()), b(p.b.begin(), p.b.end());
  return pbz::Orthopair(pbz::ObjectSet::from_indices(u, a), pbz::ObjectSet::from_indices(u, b));
}

inline const Set& block_of(const Model& m, std::size_t x) {
  for (const auto& blk : m.blocks) {
    if (blk.count(x)) return blk;
  }
  throw std::logic_error("object outside every block");
}

inline Set lower(const Model& m, const Set& x) {
  Set out;
  for (const auto& blk : m.blocks) {
    if (std::includes(x.begin(), x.end(), blk.begin(), blk.end())) out.insert(blk.begin(), blk.end());
  }
  return out;
}

inline Set upper(const Model& m, const Set& x) {
  Set out;
  for (const auto& blk : m.blocks) {
    if (!inter(blk, x).empty()) out.insert(blk.begin(), blk.end());
  }
  return out;
}

// The seven parts, each a quantified statement about the class [x].
inline Set part(const Model& m, const Pair& p, TruthValue v) {
  const Set boundary = minus(minus(all(m.n), p.a), p.b);
  Set out;
  for (std::size_t x = 0; x < m.n; ++x) {
    const Set& c = block_of(m, x);
    auto every = [&](const Set& s) { return std::includes(s.begin(), s.end(), c.begin(), c.end()); };
    auto some = [&](const Set& s) { return !inter(c, s).empty(); };
    const Set not_a = minus(all(m.n), p.a);
    const Set not_b = minus(all(m.n), p.b);
    bool in = false;
    switch (v) {
      case TruthValue::T: in = every(p.a); break;
      case TruthValue::sT: in = every(not_b) && some(p.a) && some(boundary); break;
      case TruthValue::U: in = every(boundary); break;
      case TruthValue::K: in = every(unite(p.a, p.b)) && some(p.a) && some(p.b); break;
      case TruthValue::fK: in = some(p.a) && some(p.b) && some(boundary); break;
      case TruthValue::sF: in = every(not_a) && some(p.b) && some(boundary); break;
      case TruthValue::F: in = every(p.b); break;
    }
    if (in) out.insert(x);
  }
  return out;
}

// Up-sets of the truth order, written out by hand.
inline std::vector<TruthValue> at_least(TruthValue v) {
  using enum TruthValue;
  switch (v) {
    case T: return {T};
    case sT: return {T, sT};
    case U: return {T, sT, U};
    case K: return {T, sT, K};
    case fK: return {T, sT, fK};
    case sF: return {T, sT, U, K, fK, sF};
    case F: return {T, sT, U, K, fK, sF, F};
  }
  return {};
}

inline std::vector<TruthValue> at_most(TruthValue v) {
  using enum TruthValue;
  switch (v) {
    case F: return {F};
    case sF: return {F, sF};
    case U: return {F, sF, U};
    case K: return {F, sF, K};
    case fK: return {F, sF, fK};
    case sT: return {F, sF, U, K, fK, sT};
    case T: return {F, sF, U, K, fK, sT, T};
  }
  return {};
}

inline Set aggregate(const Model& m, const Pair& p, TruthValue v, pbz::Direction d) {
  Set out;
  for (auto w : d == pbz::Direction::upward ? at_least(v) : at_most(v)) out = unite(out, part(m, p, w));
  return out;
}

// Orthopair operations straight from their definitions.
inline Pair meet(const Pair& p, const Pair& q) { return {inter(p.a, q.a), unite(p.b, q.b)}; }
inline Pair join(const Pair& p, const Pair& q) { return {unite(p.a, q.a), inter(p.b, q.b)}; }
inline Pair kleene(const Pair& p) { return {p.b, p.a}; }
inline Pair brouwer(const Model& m, const Pair& p) { return {p.b, minus(all(m.n), p.b)}; }
inline Pair pawlak(const Model& m, const Pair& p) { return {lower(m, p.a), lower(m, p.b)}; }

// Every orthopair over n objects, by assigning each object one of three regions.
inline std::vector<Pair> all_pairs(std::size_t n) {
  std::vector<Pair> out;
  std::vector<int> digit(n, 0);
  while (true) {
    Pair p;
    for (std::size_t i = 0; i < n; ++i) {
      if (digit[i] == 1) p.a.insert(i);
      if (digit[i] == 2) p.b.insert(i);
    }
    out.push_back(std::move(p));
    std::size_t i = 0;
    while (i < n && digit[i] == 2) digit[i++] = 0;
    if (i == n) break;
    ++digit[i];
  }
  return out;
}

// Set partitions of {0..n-1} by recursive insertion.
inline std::vector<std::vector<Set>> all_partitions(std::size_t n) {
  std::vector<std::vector<Set>> out{{}};
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::vector<Set>> next;
    for (const auto& blocks : out) {
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        auto copy = blocks;
        copy[b].insert(x);
        next.push_back(std::move(copy));
      }
      auto copy = blocks;
      copy.push_back({x});
      next.push_back(std::move(copy));
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace oracle
