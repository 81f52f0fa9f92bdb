#ifndef RCLOS_TRIPLE_HPP_
#define RCLOS_TRIPLE_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rclos/binrel.hpp"
#include "rclos/digraph.hpp"
#include "rclos/lrb.hpp"

namespace rclos {

/// Pair selector feeding the triple product: for letters a of the combined
/// word, tells at which letters the two factors are evaluated.
/// Returns (a, first_outside(B, v)) when a is in the content of u or the
/// content of v lies within B, and (kOne, a) otherwise.
std::pair<char, char> chi(const LetterSet& B, const LrbWord& u,
                          const LrbWord& v, char a);

/// Element (F, B, u) of the triple semigroup over a fixed vertex set:
///  - u: repetition-free word recording first occurrences (nonempty),
///  - B: subset of content(u) modeling the cumulative content,
///  - F: one relation per letter of u; letters outside u (and the adjoined
///    identity) implicitly map to the identity relation.
///
/// Immutable value type; equality and hashing are structural.
class RTriple {
 public:
  RTriple(LrbWord word, LetterSet marks, std::vector<BinRel> fun);

  const LrbWord& word() const { return word_; }
  const LetterSet& marks() const { return marks_; }
  const std::vector<BinRel>& fun() const { return fun_; }
  int dim() const { return fun_[0].dim(); }

  /// F(a); the identity for kOne and for letters outside the word.
  BinRel at(char a) const;

  /// Pointer to the stored relation, or nullptr when F(a) is the implicit
  /// identity.
  const BinRel* find(char a) const;

  std::size_t hash() const;

  /// Deterministic serialization; a total order on triples of equal dim.
  std::string key() const;

  friend bool operator==(const RTriple&, const RTriple&) = default;

 private:
  LrbWord word_;
  LetterSet marks_;
  std::vector<BinRel> fun_;
};

struct RTripleHash {
  std::size_t operator()(const RTriple& x) const { return x.hash(); }
};

/// The generator triple for a letter: ({a -> delta(a)}, {}, a).
RTriple generator(char a, const Digraph& g);

/// Semigroup product: ((F x G) o chi, la_mul((B,u),(C,v))).
RTriple mul(const RTriple& x, const RTriple& y);

/// n-fold product, n >= 1.
RTriple natural_power(const RTriple& x, long n);

/// The idempotent power of x, found by iterated multiplication.
RTriple natural_omega(const RTriple& x);

/// Closed form of the idempotent power: F_w(a) = F(a) F(i_B(u))^{omega-1}
/// on the content of u.  Cross-check for natural_omega.
RTriple natural_omega_closed_form(const RTriple& x);

/// Closed form of (x y)^omega by case analysis on the two factors.
/// Cross-check against natural_omega(mul(x, y)).
RTriple product_omega_closed_form(const RTriple& x, const RTriple& y);

/// The digraph-dependent omega-power: the natural power with every value
/// padded by epsilon(content(u)), and the marks raised to the full content.
RTriple bracket_omega(const RTriple& x, const Digraph& g);

/// Membership in the subsemigroup where, for every letter a of u,
/// F(a) is within epsilon(u) and absorbs epsilon(B) on the right.
bool is_tilde(const RTriple& x, const Digraph& g);

/// Membership in the omega-subsemigroup cut out by the prefix condition
/// F(i_X(u)) within epsilon(Y) F(i_Y(u)) for all X within Y.  Checked via
/// the reduced position-pair criterion (quadratic in |u|).
bool is_s(const RTriple& x, const Digraph& g);

/// Componentwise order: F pointwise contained, B contained, u equal.
bool leq(const RTriple& x, const RTriple& y);

/// F evaluated at the first letter of u.
BinRel xi(const RTriple& x);

}  // namespace rclos

#endif  // RCLOS_TRIPLE_HPP_
