#ifndef RCLOS_DIGRAPH_HPP_
#define RCLOS_DIGRAPH_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rclos/binrel.hpp"
#include "rclos/lrb.hpp"

namespace rclos {

/// Labeled digraph (Q, A, delta): one binary relation on the vertex set per
/// letter.  Immutable after construction apart from add_edge during setup.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int states, std::string_view alphabet);

  int states() const { return states_; }
  const std::string& alphabet() const { return alphabet_; }

  bool has_letter(char a) const;
  /// Throws UnknownLetter.
  int letter_index(char a) const;

  const BinRel& delta(char a) const;
  void add_edge(int src, char letter, int dst);
  void set_delta(char a, BinRel rel);

  /// delta extended to words: composition of the per-letter relations.
  /// The empty word gives the identity.
  BinRel delta_word(std::string_view word) const;

  /// Reachability using only letters from B, including empty paths; the
  /// reflexive-transitive closure of the union of delta(b), b in B.
  BinRel epsilon(const LetterSet& B) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int states_ = 0;
  std::string alphabet_;  // sorted distinct letters
  std::vector<BinRel> delta_;
};

/// Digraph plus initial and terminal vertex sets; recognizes the language of
/// nonempty words whose transition relation meets I x T.
struct Automaton {
  Digraph graph;
  std::vector<int> initial;
  std::vector<int> accepting;
};

/// Parses the line-based .aut format:
///
///   alphabet a b
///   states 2
///   initial 0
///   final 1
///   0 a 1
///   1 a 1
///
/// '#' starts a comment; multiple initial/final lines accumulate.
Automaton parse_automaton(std::string_view text);

/// Reads a whole .aut file; ParseError on I/O failure.
Automaton load_automaton(const std::string& path);

/// Builds an epsilon-free NFA for a regex over letters, '|', '*', '+',
/// parentheses and juxtaposition.  Thompson construction followed by
/// epsilon elimination and trimming.
Automaton regex_to_automaton(std::string_view pattern,
                             std::string_view alphabet);

bool accepts(const Automaton& aut, std::string_view word);

/// True iff the automaton accepts the empty word (I meets T).
bool accepts_empty_word(const Automaton& aut);

/// One digraph carrying several languages: initial/terminal sets per input
/// automaton, re-indexed into the disjoint union of the state sets.
struct MarkedDigraph {
  Digraph graph;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> marks;
};

MarkedDigraph disjoint_union(const std::vector<Automaton>& automata);

/// Smallest m with r^m = r^omega for every relation r in the transition
/// semigroup of the digraph: the least common multiple of the periods,
/// raised to at least every index.
long transition_exponent(const Digraph& g);

}  // namespace rclos

#endif  // RCLOS_DIGRAPH_HPP_
