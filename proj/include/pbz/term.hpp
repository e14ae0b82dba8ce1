#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbz/knowledge_base.hpp"
#include "pbz/orthopair.hpp"

namespace pbz {

enum class UnaryOp : char { kleene, brouwer, pawlak };

/// Operator word read left to right as postfix superscripts: "−≈L" on p
/// means ((p⁻)^≈)^L.
///
/// Accepted spellings: Kleene `-` `−` `⁻` `'` `′`; Brouwer `~` `≈` `∼`;
/// Pawlak `L` `A`. Whitespace is ignored. Throws TermSyntaxError.
std::vector<UnaryOp> parse_word(std::string_view word);
std::string word_to_string(std::span<const UnaryOp> word);

Orthopair apply_word(const KnowledgeBase& kb, Orthopair p, std::span<const UnaryOp> word);

/// Lattice term over one orthopair variable.
///
///   term    := meet { ("⊔" | "|" | "∨") meet }
///   meet    := postfix { ("⊓" | "&" | "∧") postfix }
///   postfix := primary [ "^" ( "{" word "}" | word ) ]
///   primary := "a" | "p" | "0" | "1" | "(" term ")"
///
/// An input made only of word symbols is shorthand for a^{word}; the empty
/// input is the variable itself. ⊓ binds tighter than ⊔.
class Term {
public:
  static Term parse(std::string_view text);
  static Term variable();

  Orthopair evaluate(const KnowledgeBase& kb, const Orthopair& p) const;
  std::string to_string() const;

  struct Node;

private:
  explicit Term(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

/// Parses and evaluates `term` on `p`.
Orthopair eval_term(const KnowledgeBase& kb, const Orthopair& p, std::string_view term);

}  // namespace pbz
