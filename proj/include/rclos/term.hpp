#ifndef RCLOS_TERM_HPP_
#define RCLOS_TERM_HPP_

#include <memory>
#include <string>
#include <string_view>

#include "rclos/digraph.hpp"
#include "rclos/lrb.hpp"
#include "rclos/triple.hpp"

namespace rclos {

/// Omega-term: letters, binary concatenation, unary omega-power.
/// Immutable AST with shared subterms; copying is cheap.
class OmegaTerm {
 public:
  enum class Kind { Letter, Concat, Omega };

  static OmegaTerm letter(char a);
  static OmegaTerm concat(OmegaTerm lhs, OmegaTerm rhs);
  static OmegaTerm omega(OmegaTerm base);

  Kind kind() const { return node_->kind; }
  char letter_value() const { return node_->letter; }
  OmegaTerm left() const { return OmegaTerm(node_->left); }
  OmegaTerm right() const { return OmegaTerm(node_->right); }
  OmegaTerm base() const { return OmegaTerm(node_->left); }

  /// Number of AST nodes.
  std::size_t size() const { return node_->size; }

  /// Grammar-conforming text; reparsing yields an equal AST.
  std::string render() const;

  friend bool operator==(const OmegaTerm& a, const OmegaTerm& b) {
    return a.node_ == b.node_ || structurally_equal(a, b);
  }

 private:
  struct Node {
    Kind kind;
    char letter;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::size_t size;
  };

  OmegaTerm() = default;
  explicit OmegaTerm(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  static bool structurally_equal(const OmegaTerm&, const OmegaTerm&);

  std::shared_ptr<const Node> node_;
};

/// Parses the term grammar: juxtaposition is concatenation (left
/// associated), '^w' is the omega-power (postfix, '^' followed by 'w' or a
/// UTF-8 omega), parentheses group, whitespace is ignored.
/// Throws ParseError with a position, or UnknownLetter.
OmegaTerm parse_term(std::string_view text, std::string_view alphabet);

/// Set of letters occurring in the term.
LetterSet term_content(const OmegaTerm& t);

/// Cumulative content by the structural recurrence:
///   letter -> {},  omega(t) -> content(t),
///   concat(s,t) -> cc(s) if content(t) within cc(s), else cc(t).
LetterSet term_cumulative_content(const OmegaTerm& t);

/// Plain word with every omega-power expanded to m-fold repetition,
/// innermost first.
std::string instantiate(const OmegaTerm& t, long m);

/// Evaluation with the digraph-dependent omega-power.
RTriple eval_bracket(const OmegaTerm& t, const Digraph& g);

/// Evaluation with the natural (idempotent-power) omega.
RTriple eval_natural(const OmegaTerm& t, const Digraph& g);

/// Whether the term's image in the free pro-R unary semigroup is
/// idempotent: marks of the bracket evaluation equal the word content.
bool is_r_idempotent(const OmegaTerm& t, const Digraph& g);

}  // namespace rclos

#endif  // RCLOS_TERM_HPP_
