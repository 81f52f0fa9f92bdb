#include "rclos/term.hpp"

#include <algorithm>
#include <utility>

#include "rclos/errors.hpp"

namespace rclos {

OmegaTerm OmegaTerm::letter(char a) {
  return OmegaTerm(std::make_shared<const Node>(
      Node{Kind::Letter, a, nullptr, nullptr, 1}));
}

OmegaTerm OmegaTerm::concat(OmegaTerm lhs, OmegaTerm rhs) {
  std::size_t size = lhs.size() + rhs.size() + 1;
  return OmegaTerm(std::make_shared<const Node>(Node{
      Kind::Concat, 0, std::move(lhs.node_), std::move(rhs.node_), size}));
}

OmegaTerm OmegaTerm::omega(OmegaTerm base) {
  std::size_t size = base.size() + 1;
  return OmegaTerm(std::make_shared<const Node>(
      Node{Kind::Omega, 0, std::move(base.node_), nullptr, size}));
}

bool OmegaTerm::structurally_equal(const OmegaTerm& a, const OmegaTerm& b) {
  if (a.node_ == b.node_) {
    return true;
  }
  if (a.node_->kind != b.node_->kind || a.node_->size != b.node_->size) {
    return false;
  }
  switch (a.node_->kind) {
    case Kind::Letter:
      return a.node_->letter == b.node_->letter;
    case Kind::Omega:
      return structurally_equal(a.base(), b.base());
    case Kind::Concat:
      return structurally_equal(a.left(), b.left()) &&
             structurally_equal(a.right(), b.right());
  }
  return false;
}

namespace {

void render_into(const OmegaTerm& t, std::string& out) {
  switch (t.kind()) {
    case OmegaTerm::Kind::Letter:
      out.push_back(t.letter_value());
      return;
    case OmegaTerm::Kind::Omega: {
      bool parens = t.base().kind() == OmegaTerm::Kind::Concat;
      if (parens) out.push_back('(');
      render_into(t.base(), out);
      if (parens) out.push_back(')');
      out += "^w";
      return;
    }
    case OmegaTerm::Kind::Concat: {
      render_into(t.left(), out);
      // Right-nested concatenations need parentheses to survive reparsing.
      bool parens = t.right().kind() == OmegaTerm::Kind::Concat;
      if (parens) out.push_back('(');
      render_into(t.right(), out);
      if (parens) out.push_back(')');
      return;
    }
  }
}

}  // namespace

std::string OmegaTerm::render() const {
  std::string out;
  render_into(*this, out);
  return out;
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, std::string_view alphabet)
      : text_(text), alphabet_(alphabet) {}

  OmegaTerm parse() {
    OmegaTerm t = term();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError("term: unexpected '" + std::string(1, text_[pos_]) +
                       "' at position " + std::to_string(pos_));
    }
    return t;
  }

 private:
  OmegaTerm term() {
    OmegaTerm t = factor();
    while (true) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') {
        return t;
      }
      t = OmegaTerm::concat(std::move(t), factor());
    }
  }

  OmegaTerm factor() {
    OmegaTerm t = primary();
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        consume_omega_marker();
        t = OmegaTerm::omega(std::move(t));
      } else {
        return t;
      }
    }
  }

  OmegaTerm primary() {
    skip_space();
    if (pos_ >= text_.size()) {
      throw ParseError("term: unexpected end of input");
    }
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      OmegaTerm t = term();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw ParseError("term: missing ')' at position " +
                         std::to_string(pos_));
      }
      ++pos_;
      return t;
    }
    if (c == ')' || c == '^') {
      throw ParseError("term: unexpected '" + std::string(1, c) +
                       "' at position " + std::to_string(pos_));
    }
    if (alphabet_.find(c) == std::string_view::npos) {
      throw UnknownLetter(c);
    }
    ++pos_;
    return OmegaTerm::letter(c);
  }

  void consume_omega_marker() {
    // 'w', or the two-byte UTF-8 omega.
    if (pos_ < text_.size() && text_[pos_] == 'w') {
      ++pos_;
      return;
    }
    if (pos_ + 1 < text_.size() &&
        static_cast<unsigned char>(text_[pos_]) == 0xcf &&
        static_cast<unsigned char>(text_[pos_ + 1]) == 0x89) {
      pos_ += 2;
      return;
    }
    throw ParseError("term: expected 'w' after '^' at position " +
                     std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::string_view alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

OmegaTerm parse_term(std::string_view text, std::string_view alphabet) {
  return TermParser(text, alphabet).parse();
}

LetterSet term_content(const OmegaTerm& t) {
  switch (t.kind()) {
    case OmegaTerm::Kind::Letter:
      return LetterSet{}.with(t.letter_value());
    case OmegaTerm::Kind::Omega:
      return term_content(t.base());
    case OmegaTerm::Kind::Concat:
      return unite(term_content(t.left()), term_content(t.right()));
  }
  return {};
}

LetterSet term_cumulative_content(const OmegaTerm& t) {
  switch (t.kind()) {
    case OmegaTerm::Kind::Letter:
      return {};
    case OmegaTerm::Kind::Omega:
      return term_content(t.base());
    case OmegaTerm::Kind::Concat: {
      LetterSet lhs = term_cumulative_content(t.left());
      if (term_content(t.right()).subset_of(lhs)) {
        return lhs;
      }
      return term_cumulative_content(t.right());
    }
  }
  return {};
}

namespace {

constexpr unsigned long long kInstantiationCap = 200'000'000;

unsigned long long instantiated_length(const OmegaTerm& t, long m) {
  switch (t.kind()) {
    case OmegaTerm::Kind::Letter:
      return 1;
    case OmegaTerm::Kind::Concat: {
      unsigned long long len = instantiated_length(t.left(), m) +
                               instantiated_length(t.right(), m);
      return std::min(len, kInstantiationCap + 1);
    }
    case OmegaTerm::Kind::Omega: {
      unsigned long long inner = instantiated_length(t.base(), m);
      if (inner > kInstantiationCap / m) {
        return kInstantiationCap + 1;
      }
      return inner * m;
    }
  }
  return 0;
}

}  // namespace

std::string instantiate(const OmegaTerm& t, long m) {
  if (m < 1) {
    throw std::invalid_argument("instantiate needs m >= 1");
  }
  if (instantiated_length(t, m) > kInstantiationCap) {
    throw CapacityExceeded("instantiated word longer than " +
                           std::to_string(kInstantiationCap));
  }
  switch (t.kind()) {
    case OmegaTerm::Kind::Letter:
      return std::string(1, t.letter_value());
    case OmegaTerm::Kind::Concat:
      return instantiate(t.left(), m) + instantiate(t.right(), m);
    case OmegaTerm::Kind::Omega: {
      std::string inner = instantiate(t.base(), m);
      std::string out;
      out.reserve(inner.size() * m);
      for (long i = 0; i < m; ++i) {
        out += inner;
      }
      return out;
    }
  }
  return {};
}

RTriple eval_bracket(const OmegaTerm& t, const Digraph& g) {
  switch (t.kind()) {
    case OmegaTerm::Kind::Letter:
      return generator(t.letter_value(), g);
    case OmegaTerm::Kind::Concat:
      return mul(eval_bracket(t.left(), g), eval_bracket(t.right(), g));
    case OmegaTerm::Kind::Omega:
      return bracket_omega(eval_bracket(t.base(), g), g);
  }
  throw std::logic_error("unreachable");
}

RTriple eval_natural(const OmegaTerm& t, const Digraph& g) {
  switch (t.kind()) {
    case OmegaTerm::Kind::Letter:
      return generator(t.letter_value(), g);
    case OmegaTerm::Kind::Concat:
      return mul(eval_natural(t.left(), g), eval_natural(t.right(), g));
    case OmegaTerm::Kind::Omega:
      return natural_omega(eval_natural(t.base(), g));
  }
  throw std::logic_error("unreachable");
}

bool is_r_idempotent(const OmegaTerm& t, const Digraph& g) {
  RTriple value = eval_bracket(t, g);
  return value.marks() == value.word().content();
}

}  // namespace rclos
