#include "rclos/brute.hpp"

#include <algorithm>
#include <set>

#include "rclos/errors.hpp"

namespace rclos {

namespace {

// Partial-table associativity: checks every triple whose four lookups are
// all defined; -1 marks an unset cell.
bool associative_so_far(const std::vector<int>& table, int n) {
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int xy = table[x * n + y];
      if (xy < 0) continue;
      for (int z = 0; z < n; ++z) {
        int yz = table[y * n + z];
        if (yz < 0) continue;
        int left = table[xy * n + z];
        int right = table[x * n + yz];
        if (left >= 0 && right >= 0 && left != right) {
          return false;
        }
      }
    }
  }
  return true;
}

bool r_trivial(const std::vector<int>& table, int n) {
  // Right ideals x S^1 as bitmasks; R-trivial iff all distinct.
  std::vector<unsigned> ideals(n);
  for (int x = 0; x < n; ++x) {
    unsigned mask = 1u << x;
    for (int s = 0; s < n; ++s) {
      mask |= 1u << table[x * n + s];
    }
    ideals[x] = mask;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (ideals[x] == ideals[y]) {
        return false;
      }
    }
  }
  return true;
}

// Image of the automaton's language under the assignment, by reachability
// in the product of the right Cayley graph (with adjoined unit) and the
// automaton.  The empty word never contributes: runs start at the unit and
// images are collected only at proper elements.
std::set<int> language_image(const Automaton& aut,
                             const std::vector<int>& table, int n,
                             const std::vector<int>& letter_image) {
  const int states = aut.graph.states();
  const int unit = n;
  std::vector<bool> seen(std::size_t(n + 1) * states, false);
  std::vector<std::pair<int, int>> stack;
  for (int i : aut.initial) {
    seen[std::size_t(unit) * states + i] = true;
    stack.emplace_back(unit, i);
  }
  std::set<int> image;
  while (!stack.empty()) {
    auto [s, p] = stack.back();
    stack.pop_back();
    for (std::size_t ai = 0; ai < aut.graph.alphabet().size(); ++ai) {
      char a = aut.graph.alphabet()[ai];
      int next_s = s == unit ? letter_image[ai]
                             : table[s * n + letter_image[ai]];
      const BinRel& rel = aut.graph.delta(a);
      for (int q = 0; q < states; ++q) {
        if (!rel.test(p, q) || seen[std::size_t(next_s) * states + q]) {
          continue;
        }
        seen[std::size_t(next_s) * states + q] = true;
        stack.emplace_back(next_s, q);
        if (std::find(aut.accepting.begin(), aut.accepting.end(), q) !=
            aut.accepting.end()) {
          image.insert(next_s);
        }
      }
    }
  }
  return image;
}

struct Search {
  const Automaton& first;
  const Automaton& second;
  int n;
  std::vector<int> table;
  std::optional<BruteSeparator> found;

  void try_assignments() {
    const std::string& alphabet = first.graph.alphabet();
    std::vector<int> image(alphabet.size(), 0);
    while (true) {
      std::set<int> img1 = language_image(first, table, n, image);
      std::set<int> img2 = language_image(second, table, n, image);
      bool disjoint = true;
      for (int s : img1) {
        if (img2.count(s)) {
          disjoint = false;
          break;
        }
      }
      if (disjoint) {
        found = BruteSeparator{n, table, alphabet, image,
                               std::vector<int>(img1.begin(), img1.end())};
        return;
      }
      // next assignment, odometer-style
      std::size_t pos = 0;
      while (pos < image.size() && ++image[pos] == n) {
        image[pos] = 0;
        ++pos;
      }
      if (pos == image.size()) {
        return;
      }
    }
  }

  void fill(int cell) {
    if (found) {
      return;
    }
    if (cell == n * n) {
      if (r_trivial(table, n)) {
        try_assignments();
      }
      return;
    }
    for (int v = 0; v < n && !found; ++v) {
      table[cell] = v;
      if (associative_so_far(table, n)) {
        fill(cell + 1);
      }
    }
    table[cell] = -1;
  }
};

}  // namespace

std::optional<BruteSeparator> brute_force_separator(const Automaton& first,
                                                    const Automaton& second,
                                                    int max_size) {
  if (first.graph.alphabet() != second.graph.alphabet()) {
    throw AlphabetMismatch("separator search needs a shared alphabet");
  }
  for (int n = 1; n <= max_size; ++n) {
    Search search{first, second, n, std::vector<int>(std::size_t(n) * n, -1),
                  std::nullopt};
    search.fill(0);
    if (search.found) {
      return search.found;
    }
  }
  return std::nullopt;
}

}  // namespace rclos
