// Shared generators and independent oracles for the test suites.  The
// oracles deliberately avoid the library's own computation paths: powers are
// enumerated explicitly, reachability is done by word enumeration, subset
// conditions by exhaustive subset pairs.

#ifndef RCLOS_TESTS_TESTUTIL_HPP_
#define RCLOS_TESTS_TESTUTIL_HPP_

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rclos/binrel.hpp"
#include "rclos/digraph.hpp"
#include "rclos/lrb.hpp"
#include "rclos/term.hpp"
#include "rclos/triple.hpp"

namespace rclos::testutil {

using Rng = std::mt19937;

inline BinRel random_rel(int dim, Rng& rng, double density = 0.4) {
  std::bernoulli_distribution bit(density);
  BinRel out(dim);
  for (int p = 0; p < dim; ++p) {
    for (int q = 0; q < dim; ++q) {
      if (bit(rng)) {
        out.set(p, q);
      }
    }
  }
  return out;
}

inline Digraph random_digraph(int states, const std::string& alphabet,
                              Rng& rng, double density = 0.35) {
  Digraph g(states, alphabet);
  for (char a : alphabet) {
    g.set_delta(a, random_rel(states, rng, density));
  }
  return g;
}

inline Automaton random_automaton(int states, const std::string& alphabet,
                                  Rng& rng, double density = 0.35) {
  Automaton aut;
  aut.graph = random_digraph(states, alphabet, rng, density);
  std::uniform_int_distribution<int> pick(0, states - 1);
  aut.initial = {pick(rng)};
  aut.accepting = {pick(rng)};
  return aut;
}

// Random nonempty repetition-free word over the alphabet.
inline LrbWord random_word(const std::string& alphabet, Rng& rng) {
  std::string pool = alphabet;
  std::shuffle(pool.begin(), pool.end(), rng);
  std::uniform_int_distribution<std::size_t> len(1, pool.size());
  return LrbWord::reduce(pool.substr(0, len(rng)));
}

inline LetterSet random_subset(const LetterSet& of, Rng& rng) {
  std::bernoulli_distribution keep(0.5);
  LetterSet out;
  for (char a : of) {
    if (keep(rng)) {
      out = out.with(a);
    }
  }
  return out;
}

// Random triple with arbitrary relation values (not necessarily inside the
// generated subsemigroup of any digraph).
inline RTriple random_triple(int dim, const std::string& alphabet, Rng& rng) {
  LrbWord word = random_word(alphabet, rng);
  LetterSet marks = random_subset(word.content(), rng);
  std::vector<BinRel> fun;
  for (std::size_t i = 0; i < word.size(); ++i) {
    fun.push_back(random_rel(dim, rng));
  }
  return RTriple(word, marks, std::move(fun));
}

inline OmegaTerm random_term(const std::string& alphabet, Rng& rng,
                             int budget) {
  std::uniform_int_distribution<std::size_t> letter(0, alphabet.size() - 1);
  if (budget <= 1) {
    return OmegaTerm::letter(alphabet[letter(rng)]);
  }
  std::uniform_int_distribution<int> shape(0, 3);
  switch (shape(rng)) {
    case 0:
      return OmegaTerm::letter(alphabet[letter(rng)]);
    case 1:
      return OmegaTerm::omega(random_term(alphabet, rng, budget - 1));
    default: {
      std::uniform_int_distribution<int> split(1, budget - 1);
      int lhs = split(rng);
      return OmegaTerm::concat(random_term(alphabet, rng, lhs),
                               random_term(alphabet, rng, budget - lhs));
    }
  }
}

// All repetition-free words over the alphabet, including the empty one.
inline std::vector<LrbWord> all_words(const std::string& alphabet) {
  std::vector<LrbWord> out{LrbWord{}};
  std::vector<std::string> frontier{""};
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const auto& w : frontier) {
      for (char a : alphabet) {
        if (w.find(a) == std::string::npos) {
          next.push_back(w + a);
          out.push_back(LrbWord::reduce(w + a));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// All pairs (B, u) with B within content(u), including the empty word.
inline std::vector<LaPair> all_pairs(const std::string& alphabet) {
  std::vector<LaPair> out;
  for (const auto& word : all_words(alphabet)) {
    std::string content = word.content().chars();
    for (unsigned mask = 0; mask < (1u << content.size()); ++mask) {
      LetterSet marks;
      for (std::size_t i = 0; i < content.size(); ++i) {
        if (mask & (1u << i)) {
          marks = marks.with(content[i]);
        }
      }
      out.push_back(LaPair{marks, word});
    }
  }
  return out;
}

// --- Independent oracles ---------------------------------------------------

// Eventual cycle of r by explicit enumeration of powers: returns the unique
// idempotent on the cycle and its predecessor under multiplication by r.
struct CycleOracle {
  BinRel omega;
  BinRel omega_minus_one;
};

inline CycleOracle cycle_oracle(const BinRel& r) {
  std::vector<BinRel> powers{r};
  while (true) {
    BinRel next = compose(powers.back(), r);
    for (std::size_t i = 0; i < powers.size(); ++i) {
      if (powers[i] == next) {
        // cycle = powers[i..end]
        CycleOracle out{BinRel(r.dim()), BinRel(r.dim())};
        bool found = false;
        for (std::size_t j = i; j < powers.size(); ++j) {
          if (compose(powers[j], powers[j]) == powers[j]) {
            out.omega = powers[j];
            found = true;
          }
        }
        if (!found) {
          throw std::logic_error("cycle without idempotent");
        }
        for (std::size_t j = i; j < powers.size(); ++j) {
          if (compose(powers[j], r) == out.omega) {
            out.omega_minus_one = powers[j];
          }
        }
        return out;
      }
    }
    powers.push_back(std::move(next));
  }
}

// Union of delta(w) over all words w over B up to the given length,
// computed word by word.
inline BinRel epsilon_by_words(const Digraph& g, const LetterSet& B,
                               std::size_t max_len) {
  BinRel acc = BinRel::identity(g.states());
  std::vector<std::string> frontier{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : frontier) {
      for (char b : B) {
        next.push_back(w + b);
        acc = unite(acc, g.delta_word(w + b));
      }
    }
    frontier = std::move(next);
  }
  return acc;
}

// The subset condition checked naively over all pairs X within Y within A.
inline bool prefix_condition_naive(const RTriple& x, const Digraph& g) {
  const std::string& alphabet = g.alphabet();
  const unsigned limit = 1u << alphabet.size();
  auto set_of = [&](unsigned mask) {
    LetterSet out;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (mask & (1u << i)) {
        out = out.with(alphabet[i]);
      }
    }
    return out;
  };
  for (unsigned ymask = 0; ymask < limit; ++ymask) {
    LetterSet Y = set_of(ymask);
    BinRel bound = compose(g.epsilon(Y), x.at(first_outside(Y, x.word())));
    // submask enumeration of ymask, including 0 and ymask itself
    unsigned xmask = ymask;
    while (true) {
      LetterSet X = set_of(xmask);
      if (!x.at(first_outside(X, x.word())).subset_of(bound)) {
        return false;
      }
      if (xmask == 0) {
        break;
      }
      xmask = (xmask - 1) & ymask;
    }
  }
  return true;
}

}  // namespace rclos::testutil

#endif  // RCLOS_TESTS_TESTUTIL_HPP_
