#include "rclos/decide.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "rclos/errors.hpp"

namespace rclos {

bool p_contains(const RTriple& x, const std::vector<int>& initial,
                const std::vector<int>& accepting) {
  BinRel rel = xi(x);
  for (int p : initial) {
    for (int q : accepting) {
      if (rel.test(p, q)) {
        return true;
      }
    }
  }
  return false;
}

std::optional<std::pair<int, int>> common_pair(
    const RTriple& x, const std::vector<int>& initial,
    const std::vector<int>& accepting) {
  BinRel rel = xi(x);
  for (int p : initial) {
    for (int q : accepting) {
      if (rel.test(p, q)) {
        return std::make_pair(p, q);
      }
    }
  }
  return std::nullopt;
}

bool member(const OmegaTerm& t, const Automaton& aut) {
  return p_contains(eval_bracket(t, aut.graph), aut.initial, aut.accepting);
}

namespace {

SeparationOutcome search_common(const std::vector<Automaton>& automata,
                                const GenOptions& options,
                                bool require_idempotent) {
  MarkedDigraph marked = disjoint_union(automata);
  StopPredicate stop = [&](const GenElement& element) {
    if (require_idempotent &&
        element.triple.marks() != element.triple.word().content()) {
      return false;
    }
    for (const auto& [initial, accepting] : marked.marks) {
      if (!p_contains(element.triple, initial, accepting)) {
        return false;
      }
    }
    return true;
  };
  GenRun run = generate_search(marked.graph, stop, options);
  SeparationOutcome outcome;
  outcome.generated = run.semigroup.size();
  outcome.graph = marked.graph;
  if (run.hit) {
    outcome.separable = false;
    outcome.witness = run.semigroup.elements()[*run.hit];
  } else {
    outcome.separable = true;
  }
  return outcome;
}

}  // namespace

SeparationOutcome separate(const std::vector<Automaton>& automata,
                           const GenOptions& options) {
  return search_common(automata, options, false);
}

SeparationOutcome find_idempotent_common(const std::vector<Automaton>& automata,
                                         const GenOptions& options) {
  return search_common(automata, options, true);
}

PointlikeOutcome pointlike(const FiniteSemigroup& s,
                           const std::vector<int>& subset, bool idempotent,
                           const GenOptions& options) {
  if (subset.empty()) {
    throw ParseError("pointlike requires a nonempty subset");
  }
  std::vector<Automaton> automata;
  automata.reserve(subset.size());
  for (int element : subset) {
    automata.push_back(preimage_automaton(s, element));
  }
  SeparationOutcome sep = idempotent ? find_idempotent_common(automata, options)
                                     : separate(automata, options);
  PointlikeOutcome out;
  out.pointlike = !sep.separable;
  out.witness = std::move(sep.witness);
  out.generated = sep.generated;
  return out;
}

namespace {

// Lexicographically least shortest word over `letters` labeling a path
// from `from` to `to`; empty when they coincide.
std::string path_word(const Digraph& g, const LetterSet& letters, int from,
                      int to) {
  if (from == to) {
    return "";
  }
  const int n = g.states();
  std::vector<std::pair<int, char>> parent(n, {-1, 0});
  std::vector<bool> seen(n, false);
  std::deque<int> queue;
  seen[from] = true;
  queue.push_back(from);
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    for (char a : letters) {
      const BinRel& rel = g.delta(a);
      for (int q = 0; q < n; ++q) {
        if (rel.test(p, q) && !seen[q]) {
          seen[q] = true;
          parent[q] = {p, a};
          if (q == to) {
            std::string word;
            for (int cur = to; cur != from; cur = parent[cur].first) {
              word.push_back(parent[cur].second);
            }
            std::reverse(word.begin(), word.end());
            return word;
          }
          queue.push_back(q);
        }
      }
    }
  }
  throw DecompositionFailed("no path labeled within the content exists");
}

OmegaTerm word_to_term(const OmegaTerm& head, const std::string& word) {
  OmegaTerm out = head;
  for (char a : word) {
    out = OmegaTerm::concat(std::move(out), OmegaTerm::letter(a));
  }
  return out;
}

// Splits t as prefix * suffix without changing its value, so that the
// content of the prefix lies within B and the suffix's word starts outside
// B.  Omega-powers unfold once (t0^w = t0 t0^w holds here since z z^[w] =
// z^[w] on evaluation images).  Precondition: content(t) not within B.
struct SuffixSplit {
  std::optional<OmegaTerm> prefix;
  OmegaTerm suffix;
};

SuffixSplit split_outside(const OmegaTerm& t, const LetterSet& B) {
  switch (t.kind()) {
    case OmegaTerm::Kind::Letter:
      return {std::nullopt, t};
    case OmegaTerm::Kind::Concat: {
      if (term_content(t.left()).subset_of(B)) {
        SuffixSplit s = split_outside(t.right(), B);
        OmegaTerm prefix =
            s.prefix ? OmegaTerm::concat(t.left(), *s.prefix) : t.left();
        return {prefix, s.suffix};
      }
      SuffixSplit s = split_outside(t.left(), B);
      return {s.prefix, OmegaTerm::concat(s.suffix, t.right())};
    }
    case OmegaTerm::Kind::Omega: {
      SuffixSplit s = split_outside(t.base(), B);
      return {s.prefix, OmegaTerm::concat(s.suffix, t)};
    }
  }
  throw std::logic_error("unreachable");
}

OmegaTerm repeat_term(const OmegaTerm& t, long n) {
  OmegaTerm out = t;
  for (long i = 1; i < n; ++i) {
    out = OmegaTerm::concat(std::move(out), t);
  }
  return out;
}

OmegaTerm extract(const OmegaTerm& t, int p, int q, const Digraph& g,
                  int depth) {
  if (depth > 256) {
    throw DecompositionFailed("certificate extraction recursion too deep");
  }
  RTriple value = eval_bracket(t, g);
  if (!xi(value).test(p, q)) {
    throw PairNotPresent("pair (" + std::to_string(p) + "," +
                         std::to_string(q) +
                         ") is not in xi of the bracket value");
  }
  switch (t.kind()) {
    case OmegaTerm::Kind::Letter:
      return t;

    case OmegaTerm::Kind::Concat: {
      RTriple lhs = eval_bracket(t.left(), g);
      RTriple rhs = eval_bracket(t.right(), g);
      BinRel xl = xi(lhs);
      BinRel xr = xi(rhs);
      for (int r = 0; r < g.states(); ++r) {
        if (xl.test(p, r) && xr.test(r, q)) {
          return OmegaTerm::concat(extract(t.left(), p, r, g, depth + 1),
                                   extract(t.right(), r, q, g, depth + 1));
        }
      }
      // No intermediate state.  When the right factor is absorbed by the
      // left one (its content sits inside the left marks), the product
      // equals the left value and the pair can be chased there.
      if (value == lhs) {
        return extract(t.left(), p, q, g, depth + 1);
      }
      // Otherwise the right word starts inside the left marks; peel that
      // prefix off the right factor (it is absorbed) so that its word leads
      // with a letter outside the marks, after which an intermediate state
      // exists.
      if (!term_content(t.right()).subset_of(lhs.marks())) {
        SuffixSplit split = split_outside(t.right(), lhs.marks());
        RTriple tail = eval_bracket(split.suffix, g);
        if (mul(lhs, tail) == value) {
          BinRel xt = xi(tail);
          for (int r = 0; r < g.states(); ++r) {
            if (xl.test(p, r) && xt.test(r, q)) {
              return OmegaTerm::concat(
                  extract(t.left(), p, r, g, depth + 1),
                  extract(split.suffix, r, q, g, depth + 1));
            }
          }
        }
      }
      throw DecompositionFailed(
          "no intermediate state for a concatenation at pair (" +
          std::to_string(p) + "," + std::to_string(q) + ")");
    }

    case OmegaTerm::Kind::Omega: {
      RTriple base = eval_bracket(t.base(), g);
      // Smallest n with base^n idempotent.
      long n = 1;
      RTriple pow = base;
      while (mul(pow, pow) != pow) {
        pow = mul(pow, base);
        ++n;
      }
      BinRel theta = xi(pow);
      BinRel eps = g.epsilon(base.word().content());
      int reach = -1;
      for (int r = 0; r < g.states(); ++r) {
        if (theta.test(p, r) && eps.test(r, q)) {
          reach = r;
          break;
        }
      }
      if (reach < 0) {
        throw DecompositionFailed(
            "omega-power value does not factor through the idempotent power");
      }
      int loop = -1;
      for (int r = 0; r < g.states(); ++r) {
        if (theta.test(p, r) && theta.test(r, r) && theta.test(r, reach)) {
          loop = r;
          break;
        }
      }
      if (loop < 0) {
        throw DecompositionFailed(
            "no looping state below the idempotent power at pair (" +
            std::to_string(p) + "," + std::to_string(q) + ")");
      }
      OmegaTerm unrolled = repeat_term(t.base(), n);
      OmegaTerm head = extract(unrolled, p, loop, g, depth + 1);
      OmegaTerm cycle = extract(unrolled, loop, loop, g, depth + 1);
      OmegaTerm tail = extract(unrolled, loop, reach, g, depth + 1);
      OmegaTerm beta = OmegaTerm::concat(
          OmegaTerm::concat(std::move(head), OmegaTerm::omega(std::move(cycle))),
          std::move(tail));
      return word_to_term(beta,
                          path_word(g, base.word().content(), reach, q));
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

OmegaTerm extract_certificate(const OmegaTerm& t, std::pair<int, int> pair,
                              const Digraph& g) {
  return extract(t, pair.first, pair.second, g, 0);
}

bool verify_certificate(const OmegaTerm& beta, const Automaton& aut,
                        int samples) {
  if (samples < 1) {
    throw std::invalid_argument("verify_certificate needs samples >= 1");
  }
  if (!p_contains(eval_natural(beta, aut.graph), aut.initial,
                  aut.accepting)) {
    return false;
  }
  long m0 = transition_exponent(aut.graph);
  for (int k = 1; k <= samples; ++k) {
    if (!accepts(aut, instantiate(beta, k * m0))) {
      return false;
    }
  }
  return true;
}

}  // namespace rclos
