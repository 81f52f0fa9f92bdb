#ifndef RCLOS_DECIDE_HPP_
#define RCLOS_DECIDE_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "rclos/digraph.hpp"
#include "rclos/generate.hpp"
#include "rclos/semigroup.hpp"
#include "rclos/term.hpp"

namespace rclos {

/// Whether xi(x) meets I x T.
bool p_contains(const RTriple& x, const std::vector<int>& initial,
                const std::vector<int>& accepting);

/// Least pair (p, q) in xi(x) with p initial and q accepting, if any.
std::optional<std::pair<int, int>> common_pair(
    const RTriple& x, const std::vector<int>& initial,
    const std::vector<int>& accepting);

/// Whether the term's image lies in the closure of the language of the
/// automaton inside the free pro-R unary semigroup.
bool member(const OmegaTerm& t, const Automaton& aut);

/// Outcome of the closure-intersection search over several languages
/// carried by one digraph.
struct SeparationOutcome {
  bool separable = false;
  /// Present exactly when not separable: a generated element whose xi-value
  /// meets every language's I x T, with its witness term.
  std::optional<GenElement> witness;
  /// The union digraph the witness lives on.
  std::optional<Digraph> graph;
  std::size_t generated = 0;
};

/// Decides whether the pro-R closures of the given languages have an empty
/// intersection.  Builds the disjoint union and searches the generated
/// closure for a common element, stopping at the first hit.
SeparationOutcome separate(const std::vector<Automaton>& automata,
                           const GenOptions& options = {});

/// Like separate, but the common element must additionally be idempotent
/// (marks equal to the word content).
SeparationOutcome find_idempotent_common(const std::vector<Automaton>& automata,
                                         const GenOptions& options = {});

struct PointlikeOutcome {
  bool pointlike = false;
  std::optional<GenElement> witness;
  std::size_t generated = 0;
};

/// Whether the subset (indices into s) is an R-pointlike set, via the
/// preimage automata of its elements; with `idempotent`, whether it is
/// R-idempotent pointlike.
PointlikeOutcome pointlike(const FiniteSemigroup& s,
                           const std::vector<int>& subset, bool idempotent,
                           const GenOptions& options = {});

/// Turns a term whose bracket evaluation carries (p, q) into one whose
/// natural evaluation does, without changing the term's value in the free
/// pro-R unary semigroup.  Follows the inductive construction: letters stay,
/// concatenations split at an intermediate state, omega-powers unroll to the
/// idempotent power with a pumping loop and a reachability tail.
/// Throws PairNotPresent if the pair is not in xi of the bracket value, and
/// DecompositionFailed if an intermediate state the construction asserts
/// does not exist.
OmegaTerm extract_certificate(const OmegaTerm& t, std::pair<int, int> pair,
                              const Digraph& g);

/// Checks a certificate against an automaton: xi of the natural evaluation
/// must meet I x T, and every instantiation at k * m0 (k = 1..samples, m0
/// the transition exponent) must be accepted.
bool verify_certificate(const OmegaTerm& beta, const Automaton& aut,
                        int samples);

}  // namespace rclos

#endif  // RCLOS_DECIDE_HPP_
