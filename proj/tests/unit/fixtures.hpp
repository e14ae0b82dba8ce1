#pragma once

#include "pbz/knowledge_base.hpp"
#include "pbz/orthopair.hpp"

// Six objects in three classes; A = {o1,o2,o3}, B = {o4,o5}.
inline pbz::KnowledgeBase six_object_kb() {
  auto u = pbz::Universe::of_size(6);
  using pbz::ObjectSet;
  return pbz::KnowledgeBase(u, {ObjectSet::of(u, {"o1", "o2"}), ObjectSet::of(u, {"o3", "o4"}),
                                ObjectSet::of(u, {"o5", "o6"})});
}

inline pbz::Orthopair six_object_pair(const pbz::Universe& u) {
  return pbz::Orthopair(pbz::ObjectSet::of(u, {"o1", "o2", "o3"}),
                        pbz::ObjectSet::of(u, {"o4", "o5"}));
}
