#include "rclos/semigroup.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "rclos/errors.hpp"

namespace rclos {

FiniteSemigroup::FiniteSemigroup(std::vector<std::string> names,
                                 std::vector<int> table, std::string alphabet,
                                 std::vector<int> letter_image)
    : names_(std::move(names)),
      table_(std::move(table)),
      alphabet_(std::move(alphabet)),
      letter_image_(std::move(letter_image)) {
  const int n = size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (product(product(x, y), z) != product(x, product(y, z))) {
          throw ParseError("table is not associative at (" + names_[x] + "," +
                           names_[y] + "," + names_[z] + ")");
        }
      }
    }
  }
  // The letter images must generate the whole semigroup.
  std::set<int> generated(letter_image_.begin(), letter_image_.end());
  std::vector<int> frontier(generated.begin(), generated.end());
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int g : letter_image_) {
        int p = product(x, g);
        if (generated.insert(p).second) {
          next.push_back(p);
        }
      }
    }
    frontier = std::move(next);
  }
  if (static_cast<int>(generated.size()) != n) {
    throw ParseError("letter images do not generate the semigroup");
  }
}

int FiniteSemigroup::element(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if (names_[i] == name) {
      return i;
    }
  }
  throw ParseError("unknown element '" + std::string(name) + "'");
}

int FiniteSemigroup::letter_image(char a) const {
  auto pos = alphabet_.find(a);
  if (pos == std::string::npos) {
    throw UnknownLetter(a);
  }
  return letter_image_[pos];
}

int FiniteSemigroup::evaluate(std::string_view word) const {
  if (word.empty()) {
    throw ParseError("cannot evaluate the empty word in a semigroup");
  }
  int acc = letter_image(word[0]);
  for (std::size_t i = 1; i < word.size(); ++i) {
    acc = product(acc, letter_image(word[i]));
  }
  return acc;
}

FiniteSemigroup parse_sgp(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;

  std::vector<std::string> names;
  std::vector<std::pair<char, std::string>> letters;
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
  bool in_table = false;

  auto fail = [&](const std::string& what) -> void {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) {
      toks.push_back(tok);
    }
    if (toks.empty()) {
      continue;
    }
    if (!in_table && toks[0] == "elements") {
      names.insert(names.end(), toks.begin() + 1, toks.end());
    } else if (!in_table && toks[0] == "letters") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        auto colon = toks[i].find(':');
        if (colon != 1 || toks[i].size() < 3) {
          fail("expected letter:element, got '" + toks[i] + "'");
        }
        letters.emplace_back(toks[i][0], toks[i].substr(2));
      }
    } else if (!in_table && toks[0] == "table") {
      in_table = true;
    } else if (in_table) {
      if (toks[0].empty() || toks[0].back() != ':') {
        fail("expected 'element:' to start a table row");
      }
      std::string row_name = toks[0].substr(0, toks[0].size() - 1);
      rows.emplace_back(row_name,
                        std::vector<std::string>(toks.begin() + 1, toks.end()));
    } else {
      fail("unrecognized line");
    }
  }

  if (names.empty()) {
    throw ParseError("missing 'elements' declaration");
  }
  if (letters.empty()) {
    throw ParseError("missing 'letters' declaration");
  }
  const int n = static_cast<int>(names.size());
  auto index_of = [&](const std::string& name, int at_line) -> int {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      throw ParseError("line " + std::to_string(at_line) +
                       ": unknown element '" + name + "'");
    }
    return static_cast<int>(it - names.begin());
  };

  std::vector<int> table(std::size_t(n) * n, -1);
  for (const auto& [row_name, entries] : rows) {
    int x = index_of(row_name, 0);
    if (static_cast<int>(entries.size()) != n) {
      throw ParseError("table row for '" + row_name + "' has " +
                       std::to_string(entries.size()) + " entries, expected " +
                       std::to_string(n));
    }
    for (int y = 0; y < n; ++y) {
      table[std::size_t(x) * n + y] = index_of(entries[y], 0);
    }
  }
  for (int x = 0; x < n; ++x) {
    if (table[std::size_t(x) * n] < 0) {
      throw ParseError("missing table row for '" + names[x] + "'");
    }
  }

  std::string alphabet;
  std::vector<int> letter_image;
  for (const auto& [a, elem] : letters) {
    if (alphabet.find(a) != std::string::npos) {
      throw ParseError(std::string("duplicate letter '") + a + "'");
    }
    alphabet += a;
    letter_image.push_back(index_of(elem, 0));
  }

  return FiniteSemigroup(std::move(names), std::move(table),
                         std::move(alphabet), std::move(letter_image));
}

FiniteSemigroup load_sgp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sgp(buf.str());
}

Automaton preimage_automaton(const FiniteSemigroup& s, int element) {
  const int n = s.size();
  if (element < 0 || element >= n) {
    throw ParseError("element index out of range");
  }
  // States 0..n-1 are the semigroup elements, state n the adjoined unit.
  Automaton aut;
  aut.graph = Digraph(n + 1, s.alphabet());
  for (char a : s.alphabet()) {
    int image = s.letter_image(a);
    for (int t = 0; t < n; ++t) {
      aut.graph.add_edge(t, a, s.product(t, image));
    }
    aut.graph.add_edge(n, a, image);
  }
  aut.initial = {n};
  aut.accepting = {element};
  return aut;
}

}  // namespace rclos
