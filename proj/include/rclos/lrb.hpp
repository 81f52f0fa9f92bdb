#ifndef RCLOS_LRB_HPP_
#define RCLOS_LRB_HPP_

#include <cstddef>
#include <string>
#include <string_view>

namespace rclos {

/// Marker for the adjoined identity "1"; never a member of a content set.
inline constexpr char kOne = '\0';

/// Small set of letters, kept as a sorted string of distinct chars.
class LetterSet {
 public:
  LetterSet() = default;
  static LetterSet of(std::string_view letters);

  bool contains(char a) const;
  bool subset_of(const LetterSet& other) const;
  bool empty() const { return chars_.empty(); }
  std::size_t size() const { return chars_.size(); }

  LetterSet with(char a) const;

  const std::string& chars() const { return chars_; }
  auto begin() const { return chars_.begin(); }
  auto end() const { return chars_.end(); }

  friend LetterSet unite(const LetterSet&, const LetterSet&);
  friend bool operator==(const LetterSet&, const LetterSet&) = default;

 private:
  std::string chars_;
};

/// Element of the free left regular band: a repetition-free word, stored in
/// canonical form (leftmost occurrence of each letter).  The empty word acts
/// as the adjoined identity and only occurs transiently.
class LrbWord {
 public:
  LrbWord() = default;

  /// Canonical form of an arbitrary word: keep the first occurrence of each
  /// letter, in order.
  static LrbWord reduce(std::string_view word);

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  char at(std::size_t i) const { return letters_[i]; }
  const std::string& letters() const { return letters_; }

  LetterSet content() const;

  friend bool operator==(const LrbWord&, const LrbWord&) = default;

 private:
  std::string letters_;
};

/// Band multiplication: reduce(u then v).  Associative and idempotent,
/// satisfying xyx = xy and x^2 = x.
LrbWord operator*(const LrbWord& u, const LrbWord& v);

/// Leftmost letter of v outside B, or kOne if the content of v is within B.
char first_outside(const LetterSet& B, const LrbWord& v);

/// Pair (B, u) with B a subset of content(u).  u records the order of first
/// occurrences, B models the cumulative content (the letters that keep
/// recurring forever at the end).
struct LaPair {
  LetterSet marks;
  LrbWord word;

  friend bool operator==(const LaPair&, const LaPair&) = default;
};

/// Band product on pairs: (B,u)(C,v) = (D, uv) where D = B if the content of
/// v is within B (the right factor is absorbed), else D = C.
LaPair la_mul(const LaPair& x, const LaPair& y);

}  // namespace rclos

#endif  // RCLOS_LRB_HPP_
