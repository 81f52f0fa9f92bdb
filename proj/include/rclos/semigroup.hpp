#ifndef RCLOS_SEMIGROUP_HPP_
#define RCLOS_SEMIGROUP_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "rclos/digraph.hpp"

namespace rclos {

/// Finite semigroup given by a multiplication table, with a letter-to-
/// element assignment whose image generates the semigroup.
class FiniteSemigroup {
 public:
  FiniteSemigroup(std::vector<std::string> names, std::vector<int> table,
                  std::string alphabet, std::vector<int> letter_image);

  int size() const { return static_cast<int>(names_.size()); }
  int product(int x, int y) const { return table_[x * size() + y]; }

  const std::string& name(int x) const { return names_[x]; }
  /// Index of a named element; throws ParseError when unknown.
  int element(std::string_view name) const;

  const std::string& alphabet() const { return alphabet_; }
  int letter_image(char a) const;

  /// phi(w) for a nonempty word over the alphabet.
  int evaluate(std::string_view word) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> table_;  // row-major: table_[x*n + y] = x*y
  std::string alphabet_;
  std::vector<int> letter_image_;
};

/// Parses the .sgp format:
///
///   elements x y
///   letters a:x b:y
///   table
///   x: x y
///   y: x y
///
/// Row "s: p1 ... pn" lists s*e_j in element order.  Rejects
/// non-associative tables and letter images that fail to generate.
FiniteSemigroup parse_sgp(std::string_view text);

FiniteSemigroup load_sgp(const std::string& path);

/// Right Cayley automaton of S with an adjoined unit as the initial state;
/// accepts exactly the nonempty words w with phi(w) = s.
Automaton preimage_automaton(const FiniteSemigroup& s, int element);

}  // namespace rclos

#endif  // RCLOS_SEMIGROUP_HPP_
