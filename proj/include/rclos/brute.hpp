#ifndef RCLOS_BRUTE_HPP_
#define RCLOS_BRUTE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rclos/digraph.hpp"

namespace rclos {

/// A separating recognizer found by exhaustive search: an R-trivial
/// semigroup, a letter assignment, and the accepted subset (the image of the
/// first language).  phi^{-1}(accepted) contains the first language and
/// misses the second.
struct BruteSeparator {
  int size = 0;
  std::vector<int> table;         // row-major multiplication table
  std::string alphabet;
  std::vector<int> letter_image;  // per alphabet position
  std::vector<int> accepted;
};

/// Exhaustively enumerates associative multiplication tables up to max_size
/// (with early associativity pruning), keeps the R-trivial ones, and tries
/// every letter assignment; returns the first separator found, if any.
/// Exponential by design; intended as an independent oracle at sizes <= 4.
std::optional<BruteSeparator> brute_force_separator(const Automaton& first,
                                                    const Automaton& second,
                                                    int max_size);

}  // namespace rclos

#endif  // RCLOS_BRUTE_HPP_
