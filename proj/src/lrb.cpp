#include "rclos/lrb.hpp"

#include <algorithm>

namespace rclos {

LetterSet LetterSet::of(std::string_view letters) {
  LetterSet out;
  for (char a : letters) {
    out = out.with(a);
  }
  return out;
}

bool LetterSet::contains(char a) const {
  return chars_.find(a) != std::string::npos;
}

bool LetterSet::subset_of(const LetterSet& other) const {
  return std::includes(other.chars_.begin(), other.chars_.end(),
                       chars_.begin(), chars_.end());
}

LetterSet LetterSet::with(char a) const {
  LetterSet out = *this;
  auto pos = std::lower_bound(out.chars_.begin(), out.chars_.end(), a);
  if (pos == out.chars_.end() || *pos != a) {
    out.chars_.insert(pos, a);
  }
  return out;
}

LetterSet unite(const LetterSet& x, const LetterSet& y) {
  LetterSet out;
  std::set_union(x.chars_.begin(), x.chars_.end(), y.chars_.begin(),
                 y.chars_.end(), std::back_inserter(out.chars_));
  return out;
}

LrbWord LrbWord::reduce(std::string_view word) {
  LrbWord out;
  for (char a : word) {
    if (out.letters_.find(a) == std::string::npos) {
      out.letters_.push_back(a);
    }
  }
  return out;
}

LetterSet LrbWord::content() const { return LetterSet::of(letters_); }

LrbWord operator*(const LrbWord& u, const LrbWord& v) {
  return LrbWord::reduce(u.letters() + v.letters());
}

char first_outside(const LetterSet& B, const LrbWord& v) {
  for (char a : v.letters()) {
    if (!B.contains(a)) {
      return a;
    }
  }
  return kOne;
}

LaPair la_mul(const LaPair& x, const LaPair& y) {
  bool absorbed = y.word.content().subset_of(x.marks);
  return LaPair{absorbed ? x.marks : y.marks, x.word * y.word};
}

}  // namespace rclos
