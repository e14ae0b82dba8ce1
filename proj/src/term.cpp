#include "pbz/term.hpp"

#include <array>
#include <optional>
#include <utility>

#include "pbz/error.hpp"

namespace pbz {

struct Term::Node {
  enum class Kind { variable, bottom, top, meet, join };
  Kind kind = Kind::variable;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  std::vector<UnaryOp> word;
};

namespace {

struct Spelling {
  std::string_view text;
  UnaryOp op;
};

constexpr std::array<Spelling, 10> kWordSymbols{{
    {"-", UnaryOp::kleene},
    {"−", UnaryOp::kleene},  // −
    {"⁻", UnaryOp::kleene},  // ⁻
    {"'", UnaryOp::kleene},
    {"′", UnaryOp::kleene},  // ′
    {"~", UnaryOp::brouwer},
    {"≈", UnaryOp::brouwer},  // ≈
    {"∼", UnaryOp::brouwer},  // ∼
    {"L", UnaryOp::pawlak},
    {"A", UnaryOp::pawlak},
}};

constexpr std::array<std::string_view, 3> kMeetSymbols{"&", "⊓", "∧"};  // ⊓ ∧
constexpr std::array<std::string_view, 3> kJoinSymbols{"|", "⊔", "∨"};  // ⊔ ∨

using NodePtr = std::shared_ptr<const Term::Node>;

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse_term() {
    skip_space();
    if (at_end()) return make_variable({});
    if (only_word_symbols()) {
      auto word = parse_word_symbols();
      return make_variable(std::move(word));
    }
    NodePtr root = parse_join();
    skip_space();
    if (!at_end()) fail("unexpected input");
    return root;
  }

  std::vector<UnaryOp> parse_bare_word() {
    auto word = parse_word_symbols();
    skip_space();
    if (!at_end()) fail("unexpected character in operator word");
    return word;
  }

private:
  NodePtr parse_join() {
    NodePtr lhs = parse_meet();
    while (accept_any(kJoinSymbols)) {
      auto node = std::make_shared<Term::Node>();
      node->kind = Term::Node::Kind::join;
      node->lhs = std::move(lhs);
      node->rhs = parse_meet();
      lhs = std::move(node);
    }
    return lhs;
  }

  NodePtr parse_meet() {
    NodePtr lhs = parse_postfix();
    while (accept_any(kMeetSymbols)) {
      auto node = std::make_shared<Term::Node>();
      node->kind = Term::Node::Kind::meet;
      node->lhs = std::move(lhs);
      node->rhs = parse_postfix();
      lhs = std::move(node);
    }
    return lhs;
  }

  NodePtr parse_postfix() {
    auto node = parse_primary();
    if (accept("^")) {
      std::vector<UnaryOp> word;
      if (accept("{")) {
        word = parse_word_symbols();
        if (!accept("}")) fail("expected '}'");
      } else {
        word = parse_word_symbols();
        if (word.empty()) fail("expected operator word after '^'");
      }
      if (node->word.empty()) {
        node->word = std::move(word);
      } else {
        node->word.insert(node->word.end(), word.begin(), word.end());
      }
    }
    return node;
  }

  std::shared_ptr<Term::Node> parse_primary() {
    skip_space();
    if (accept("(")) {
      NodePtr inner = parse_join();
      if (!accept(")")) fail("expected ')'");
      // (t^{w1})^{w2} = t^{w1 w2}, so a following word is simply appended.
      return std::make_shared<Term::Node>(*inner);
    }
    if (accept("a") || accept("p")) return std::make_shared<Term::Node>();
    if (accept("0")) {
      auto node = std::make_shared<Term::Node>();
      node->kind = Term::Node::Kind::bottom;
      return node;
    }
    if (accept("1")) {
      auto node = std::make_shared<Term::Node>();
      node->kind = Term::Node::Kind::top;
      return node;
    }
    fail(at_end() ? "unexpected end of term" : "expected operand");
  }

  std::vector<UnaryOp> parse_word_symbols() {
    std::vector<UnaryOp> word;
    while (true) {
      skip_space();
      auto op = match_word_symbol();
      if (!op) break;
      word.push_back(*op);
    }
    return word;
  }

  std::optional<UnaryOp> match_word_symbol() {
    for (const auto& s : kWordSymbols) {
      if (text_.substr(pos_).starts_with(s.text)) {
        pos_ += s.text.size();
        return s.op;
      }
    }
    return std::nullopt;
  }

  bool only_word_symbols() const {
    Parser probe(text_);
    probe.parse_word_symbols();
    probe.skip_space();
    return probe.at_end();
  }

  static NodePtr make_variable(std::vector<UnaryOp> word) {
    auto node = std::make_shared<Term::Node>();
    node->word = std::move(word);
    return node;
  }

  template <std::size_t N>
  bool accept_any(const std::array<std::string_view, N>& symbols) {
    for (auto s : symbols) {
      if (accept(s)) return true;
    }
    return false;
  }

  bool accept(std::string_view s) {
    skip_space();
    if (text_.substr(pos_).starts_with(s)) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& what) const { throw TermSyntaxError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Orthopair apply_op(const KnowledgeBase& kb, const Orthopair& p, UnaryOp op) {
  switch (op) {
    case UnaryOp::kleene: return kleene_neg(p);
    case UnaryOp::brouwer: return brouwer_neg(p);
    case UnaryOp::pawlak: return pawlak_op(kb, p);
  }
  throw InternalError("unhandled unary operator");
}

Orthopair evaluate_node(const Term::Node& node, const KnowledgeBase& kb, const Orthopair& p) {
  using Kind = Term::Node::Kind;
  auto base = [&]() -> Orthopair {
    switch (node.kind) {
      case Kind::variable: return p;
      case Kind::bottom: return Orthopair::bottom(p.universe());
      case Kind::top: return Orthopair::top(p.universe());
      case Kind::meet:
        return meet(evaluate_node(*node.lhs, kb, p), evaluate_node(*node.rhs, kb, p));
      case Kind::join:
        return join(evaluate_node(*node.lhs, kb, p), evaluate_node(*node.rhs, kb, p));
    }
    throw InternalError("unhandled term node");
  }();
  return apply_word(kb, std::move(base), node.word);
}

std::string node_to_string(const Term::Node& node) {
  using Kind = Term::Node::Kind;
  std::string out;
  bool needs_parens = false;
  switch (node.kind) {
    case Kind::variable: out = "a"; break;
    case Kind::bottom: out = "0"; break;
    case Kind::top: out = "1"; break;
    case Kind::meet:
      out = node_to_string(*node.lhs) + " ⊓ " + node_to_string(*node.rhs);
      needs_parens = true;
      break;
    case Kind::join:
      out = node_to_string(*node.lhs) + " ⊔ " + node_to_string(*node.rhs);
      needs_parens = true;
      break;
  }
  if (needs_parens) out = "(" + out + ")";
  if (!node.word.empty()) {
    out += "^{" + word_to_string(node.word) + "}";
  }
  return out;
}

}  // namespace

std::vector<UnaryOp> parse_word(std::string_view word) { return Parser(word).parse_bare_word(); }

std::string word_to_string(std::span<const UnaryOp> word) {
  std::string out;
  for (auto op : word) {
    switch (op) {
      case UnaryOp::kleene: out += "−"; break;
      case UnaryOp::brouwer: out += "≈"; break;
      case UnaryOp::pawlak: out += "L"; break;
    }
  }
  return out;
}

Orthopair apply_word(const KnowledgeBase& kb, Orthopair p, std::span<const UnaryOp> word) {
  for (auto op : word) p = apply_op(kb, p, op);
  return p;
}

Term Term::parse(std::string_view text) { return Term(Parser(text).parse_term()); }

Term Term::variable() { return Term(std::make_shared<Node>()); }

Orthopair Term::evaluate(const KnowledgeBase& kb, const Orthopair& p) const {
  if (!(kb.universe() == p.universe())) throw UniverseMismatchError();
  return evaluate_node(*root_, kb, p);
}

std::string Term::to_string() const { return node_to_string(*root_); }

Orthopair eval_term(const KnowledgeBase& kb, const Orthopair& p, std::string_view term) {
  return Term::parse(term).evaluate(kb, p);
}

}  // namespace pbz
