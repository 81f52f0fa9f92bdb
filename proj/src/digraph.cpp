#include "rclos/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "rclos/errors.hpp"

namespace rclos {

Digraph::Digraph(int states, std::string_view alphabet) : states_(states) {
  std::string sorted(alphabet);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  alphabet_ = std::move(sorted);
  delta_.assign(alphabet_.size(), BinRel(states));
}

bool Digraph::has_letter(char a) const {
  return alphabet_.find(a) != std::string::npos;
}

int Digraph::letter_index(char a) const {
  auto pos = alphabet_.find(a);
  if (pos == std::string::npos) {
    throw UnknownLetter(a);
  }
  return static_cast<int>(pos);
}

const BinRel& Digraph::delta(char a) const { return delta_[letter_index(a)]; }

void Digraph::add_edge(int src, char letter, int dst) {
  delta_[letter_index(letter)].set(src, dst);
}

void Digraph::set_delta(char a, BinRel rel) {
  if (rel.dim() != states_) {
    throw DimensionMismatch("relation dimension does not match state count");
  }
  delta_[letter_index(a)] = std::move(rel);
}

BinRel Digraph::delta_word(std::string_view word) const {
  BinRel out = BinRel::identity(states_);
  for (char a : word) {
    out = compose(out, delta(a));
  }
  return out;
}

BinRel Digraph::epsilon(const LetterSet& B) const {
  BinRel acc(states_);
  for (char b : B) {
    acc = unite(acc, delta(b));
  }
  return reflexive_transitive_closure(acc);
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

int parse_state(const std::string& tok, int states, int line_no) {
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    fail(line_no, "expected a state id, got '" + tok + "'");
  }
  if (used != tok.size() || v < 0) {
    fail(line_no, "expected a state id, got '" + tok + "'");
  }
  if (v >= states) {
    fail(line_no, "undeclared state " + tok);
  }
  return v;
}

}  // namespace

Automaton parse_automaton(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;

  std::string alphabet;
  int states = -1;
  std::vector<int> initial;
  std::vector<int> accepting;
  std::vector<std::tuple<int, char, int>> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    auto toks = tokens(line);
    if (toks.empty()) {
      continue;
    }
    const std::string& head = toks[0];
    if (head == "alphabet") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].size() != 1) {
          fail(line_no, "letters must be single characters: '" + toks[i] + "'");
        }
        alphabet += toks[i][0];
      }
    } else if (head == "states") {
      if (toks.size() != 2) {
        fail(line_no, "expected: states <count>");
      }
      try {
        states = std::stoi(toks[1]);
      } catch (const std::exception&) {
        fail(line_no, "bad state count '" + toks[1] + "'");
      }
      if (states <= 0) {
        fail(line_no, "state count must be positive");
      }
    } else if (head == "initial" || head == "final") {
      if (states < 0) {
        fail(line_no, "'" + head + "' before 'states'");
      }
      auto& dst = head == "initial" ? initial : accepting;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        dst.push_back(parse_state(toks[i], states, line_no));
      }
    } else if (toks.size() == 3) {
      if (states < 0) {
        fail(line_no, "edge before 'states'");
      }
      if (toks[1].size() != 1) {
        fail(line_no, "edge letter must be a single character");
      }
      char a = toks[1][0];
      if (alphabet.find(a) == std::string::npos) {
        fail(line_no, std::string("undeclared letter '") + a + "'");
      }
      edges.emplace_back(parse_state(toks[0], states, line_no), a,
                         parse_state(toks[2], states, line_no));
    } else {
      fail(line_no, "unrecognized line");
    }
  }

  if (states < 0) {
    throw ParseError("missing 'states' declaration");
  }
  if (alphabet.empty()) {
    throw ParseError("missing 'alphabet' declaration");
  }

  Automaton aut;
  aut.graph = Digraph(states, alphabet);
  for (auto [src, a, dst] : edges) {
    aut.graph.add_edge(src, a, dst);
  }
  std::sort(initial.begin(), initial.end());
  initial.erase(std::unique(initial.begin(), initial.end()), initial.end());
  std::sort(accepting.begin(), accepting.end());
  accepting.erase(std::unique(accepting.begin(), accepting.end()),
                  accepting.end());
  aut.initial = std::move(initial);
  aut.accepting = std::move(accepting);
  return aut;
}

Automaton load_automaton(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_automaton(buf.str());
}

namespace {

// Regex AST over: letter, '|', juxtaposition, '*', '+', parentheses.
struct RegexNode {
  enum class Kind { Letter, Alt, Cat, Star, Plus } kind;
  char letter = 0;
  std::vector<RegexNode> children = {};
};

class RegexParser {
 public:
  RegexParser(std::string_view text, std::string_view alphabet)
      : text_(text), alphabet_(alphabet) {}

  RegexNode parse() {
    RegexNode node = alt();
    if (pos_ != text_.size()) {
      throw ParseError("regex: unexpected '" + std::string(1, text_[pos_]) +
                       "' at position " + std::to_string(pos_));
    }
    return node;
  }

 private:
  RegexNode alt() {
    RegexNode node = cat();
    while (peek() == '|') {
      ++pos_;
      RegexNode rhs = cat();
      RegexNode out{RegexNode::Kind::Alt};
      out.children.push_back(std::move(node));
      out.children.push_back(std::move(rhs));
      node = std::move(out);
    }
    return node;
  }

  RegexNode cat() {
    RegexNode node = rep();
    while (true) {
      char c = peek();
      if (c == 0 || c == '|' || c == ')') {
        return node;
      }
      RegexNode rhs = rep();
      RegexNode out{RegexNode::Kind::Cat};
      out.children.push_back(std::move(node));
      out.children.push_back(std::move(rhs));
      node = std::move(out);
    }
  }

  RegexNode rep() {
    RegexNode node = atom();
    while (true) {
      char c = peek();
      if (c == '*' || c == '+') {
        ++pos_;
        RegexNode out{c == '*' ? RegexNode::Kind::Star
                               : RegexNode::Kind::Plus};
        out.children.push_back(std::move(node));
        node = std::move(out);
      } else {
        return node;
      }
    }
  }

  RegexNode atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      RegexNode node = alt();
      if (peek() != ')') {
        throw ParseError("regex: missing ')' at position " +
                         std::to_string(pos_));
      }
      ++pos_;
      return node;
    }
    if (c == 0 || c == ')' || c == '|' || c == '*' || c == '+') {
      throw ParseError("regex: expected a letter or '(' at position " +
                       std::to_string(pos_));
    }
    if (alphabet_.find(c) == std::string_view::npos) {
      throw UnknownLetter(c);
    }
    ++pos_;
    RegexNode node{RegexNode::Kind::Letter};
    node.letter = c;
    return node;
  }

  char peek() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
    return pos_ < text_.size() ? text_[pos_] : 0;
  }

  std::string_view text_;
  std::string_view alphabet_;
  std::size_t pos_ = 0;
};

// Thompson-style epsilon-NFA under construction.
struct EpsNfa {
  int states = 0;
  std::vector<std::tuple<int, char, int>> letter_edges;
  std::vector<std::pair<int, int>> eps_edges;

  int fresh() { return states++; }
};

// Builds a fragment with a single entry and single exit state.
std::pair<int, int> build(EpsNfa& nfa, const RegexNode& node) {
  switch (node.kind) {
    case RegexNode::Kind::Letter: {
      int in = nfa.fresh(), out = nfa.fresh();
      nfa.letter_edges.emplace_back(in, node.letter, out);
      return {in, out};
    }
    case RegexNode::Kind::Alt: {
      int in = nfa.fresh(), out = nfa.fresh();
      for (const auto& child : node.children) {
        auto [cin, cout] = build(nfa, child);
        nfa.eps_edges.emplace_back(in, cin);
        nfa.eps_edges.emplace_back(cout, out);
      }
      return {in, out};
    }
    case RegexNode::Kind::Cat: {
      auto [lin, lout] = build(nfa, node.children[0]);
      auto [rin, rout] = build(nfa, node.children[1]);
      nfa.eps_edges.emplace_back(lout, rin);
      return {lin, rout};
    }
    case RegexNode::Kind::Star: {
      int in = nfa.fresh(), out = nfa.fresh();
      auto [cin, cout] = build(nfa, node.children[0]);
      nfa.eps_edges.emplace_back(in, cin);
      nfa.eps_edges.emplace_back(cout, cin);
      nfa.eps_edges.emplace_back(cout, out);
      nfa.eps_edges.emplace_back(in, out);
      return {in, out};
    }
    case RegexNode::Kind::Plus: {
      int in = nfa.fresh(), out = nfa.fresh();
      auto [cin, cout] = build(nfa, node.children[0]);
      nfa.eps_edges.emplace_back(in, cin);
      nfa.eps_edges.emplace_back(cout, cin);
      nfa.eps_edges.emplace_back(cout, out);
      return {in, out};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Automaton regex_to_automaton(std::string_view pattern,
                             std::string_view alphabet) {
  RegexNode ast = RegexParser(pattern, alphabet).parse();
  EpsNfa nfa;
  auto [start, accept] = build(nfa, ast);

  BinRel eps(nfa.states);
  for (auto [p, q] : nfa.eps_edges) {
    eps.set(p, q);
  }
  BinRel closure = reflexive_transitive_closure(eps);

  Digraph graph(nfa.states, alphabet);
  for (auto [p, a, q] : nfa.letter_edges) {
    graph.add_edge(p, a, q);
  }
  // Eliminate epsilon edges: delta'(a) = E delta(a) E, initial states become
  // the E-image of the start state.
  std::vector<BinRel> eliminated;
  for (char a : graph.alphabet()) {
    eliminated.push_back(compose(closure, compose(graph.delta(a), closure)));
  }

  std::vector<int> initial;
  for (int q = 0; q < nfa.states; ++q) {
    if (closure.test(start, q)) {
      initial.push_back(q);
    }
  }
  std::vector<int> accepting{accept};

  // Trim: keep states reachable from an initial state and co-reachable to
  // the accepting state.
  const int n = nfa.states;
  std::vector<bool> fwd(n, false), bwd(n, false);
  std::vector<int> stack;
  for (int q : initial) {
    if (!fwd[q]) {
      fwd[q] = true;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (const auto& rel : eliminated) {
      for (int q = 0; q < n; ++q) {
        if (rel.test(p, q) && !fwd[q]) {
          fwd[q] = true;
          stack.push_back(q);
        }
      }
    }
  }
  for (int q : accepting) {
    if (!bwd[q]) {
      bwd[q] = true;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (const auto& rel : eliminated) {
      for (int p = 0; p < n; ++p) {
        if (rel.test(p, q) && !bwd[p]) {
          bwd[p] = true;
          stack.push_back(p);
        }
      }
    }
  }

  std::vector<int> remap(n, -1);
  int kept = 0;
  for (int q = 0; q < n; ++q) {
    if (fwd[q] && bwd[q]) {
      remap[q] = kept++;
    }
  }

  Automaton out;
  if (kept == 0) {
    out.graph = Digraph(1, alphabet);
    out.initial = {0};
    return out;
  }
  out.graph = Digraph(kept, alphabet);
  for (char a : out.graph.alphabet()) {
    const BinRel& rel = eliminated[graph.letter_index(a)];
    for (int p = 0; p < n; ++p) {
      if (remap[p] < 0) continue;
      for (int q = 0; q < n; ++q) {
        if (remap[q] >= 0 && rel.test(p, q)) {
          out.graph.add_edge(remap[p], a, remap[q]);
        }
      }
    }
  }
  for (int q : initial) {
    if (remap[q] >= 0) {
      out.initial.push_back(remap[q]);
    }
  }
  for (int q : accepting) {
    if (remap[q] >= 0) {
      out.accepting.push_back(remap[q]);
    }
  }
  std::sort(out.initial.begin(), out.initial.end());
  std::sort(out.accepting.begin(), out.accepting.end());
  return out;
}

bool accepts(const Automaton& aut, std::string_view word) {
  BinRel rel = aut.graph.delta_word(word);
  for (int i : aut.initial) {
    for (int t : aut.accepting) {
      if (rel.test(i, t)) {
        return true;
      }
    }
  }
  return false;
}

bool accepts_empty_word(const Automaton& aut) {
  for (int i : aut.initial) {
    if (std::find(aut.accepting.begin(), aut.accepting.end(), i) !=
        aut.accepting.end()) {
      return true;
    }
  }
  return false;
}

MarkedDigraph disjoint_union(const std::vector<Automaton>& automata) {
  if (automata.empty()) {
    throw AlphabetMismatch("disjoint union of zero automata");
  }
  const std::string& alphabet = automata[0].graph.alphabet();
  int total = 0;
  for (const auto& aut : automata) {
    if (aut.graph.alphabet() != alphabet) {
      throw AlphabetMismatch("automata alphabets differ: '" + alphabet +
                             "' vs '" + aut.graph.alphabet() + "'");
    }
    total += aut.graph.states();
  }
  MarkedDigraph out;
  out.graph = Digraph(total, alphabet);
  int offset = 0;
  for (const auto& aut : automata) {
    const int n = aut.graph.states();
    for (char a : alphabet) {
      const BinRel& rel = aut.graph.delta(a);
      for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
          if (rel.test(p, q)) {
            out.graph.add_edge(offset + p, a, offset + q);
          }
        }
      }
    }
    std::vector<int> initial, accepting;
    for (int q : aut.initial) initial.push_back(offset + q);
    for (int q : aut.accepting) accepting.push_back(offset + q);
    out.marks.emplace_back(std::move(initial), std::move(accepting));
    offset += n;
  }
  return out;
}

long transition_exponent(const Digraph& g) {
  // Enumerate the transition semigroup delta(A+).
  std::unordered_set<BinRel, BinRelHash> seen;
  std::vector<BinRel> frontier;
  for (char a : g.alphabet()) {
    if (seen.insert(g.delta(a)).second) {
      frontier.push_back(g.delta(a));
    }
  }
  std::vector<BinRel> elements = frontier;
  constexpr std::size_t kCap = 1u << 20;
  while (!frontier.empty()) {
    std::vector<BinRel> next;
    for (const auto& r : frontier) {
      for (char a : g.alphabet()) {
        BinRel prod = compose(r, g.delta(a));
        if (seen.insert(prod).second) {
          next.push_back(prod);
          elements.push_back(prod);
        }
      }
    }
    if (elements.size() > kCap) {
      throw CapacityExceeded("transition semigroup exceeds " +
                             std::to_string(kCap) + " elements");
    }
    frontier = std::move(next);
  }

  long max_index = 1;
  long lcm_period = 1;
  for (const auto& r : elements) {
    auto [index, period] = index_period(r);
    max_index = std::max(max_index, index);
    lcm_period = std::lcm(lcm_period, period);
  }
  return ((max_index + lcm_period - 1) / lcm_period) * lcm_period;
}

}  // namespace rclos
