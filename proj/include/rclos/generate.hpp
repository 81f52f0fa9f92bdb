#ifndef RCLOS_GENERATE_HPP_
#define RCLOS_GENERATE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rclos/digraph.hpp"
#include "rclos/term.hpp"
#include "rclos/triple.hpp"

namespace rclos {

/// A generated triple together with a witness term evaluating to it under
/// the bracket evaluation.  Witnesses are smallest-first: no term with fewer
/// AST nodes evaluates to the same triple.
struct GenElement {
  RTriple triple;
  OmegaTerm witness;
};

/// The closure of the generator triples under product and bracket
/// omega-power, in canonical order: by witness size, ties by triple
/// serialization.  The order is a function of the digraph alone.
class GenSemigroup {
 public:
  explicit GenSemigroup(Digraph graph) : graph_(std::move(graph)) {}

  const Digraph& graph() const { return graph_; }
  const std::vector<GenElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  std::optional<std::size_t> find(const RTriple& x) const;

  /// Appends an element; used by the generation routines.
  void append(GenElement element);

 private:
  Digraph graph_;
  std::vector<GenElement> elements_;
  std::unordered_map<RTriple, std::size_t, RTripleHash> index_;
};

struct GenOptions {
  std::size_t cap = 1'000'000;
  bool parallel = true;
};

/// Invoked on each element as it enters the canonical order; returning true
/// stops the generation early.
using StopPredicate = std::function<bool(const GenElement&)>;

struct GenRun {
  GenSemigroup semigroup;
  /// Index of the first element (in canonical order) the predicate accepted.
  std::optional<std::size_t> hit;
  /// True iff the full closure was materialized (no early stop).
  bool completed = false;
};

/// Size-layered closure: elements are discovered breadth-first by witness
/// size, so each element's witness is a minimum-size term for its triple.
/// The parallel path evaluates each layer's products concurrently and
/// produces the same canonical order as the serial one.
GenRun generate_search(const Digraph& g, const StopPredicate& stop,
                       const GenOptions& options = {});

/// Full closure.
GenSemigroup generate(const Digraph& g, const GenOptions& options = {});

/// Straight-line single-threaded reference; identical output to generate().
GenSemigroup generate_serial(const Digraph& g, std::size_t cap = 1'000'000);

/// Upper bound 2^((m^2+1)n) * 3 * n! on the closure size for m vertices and
/// n letters.
double element_count_bound(int states, int alphabet_size);

}  // namespace rclos

#endif  // RCLOS_GENERATE_HPP_
