#include "rclos/triple.hpp"

#include <algorithm>

#include "rclos/errors.hpp"

namespace rclos {

std::pair<char, char> chi(const LetterSet& B, const LrbWord& u,
                          const LrbWord& v, char a) {
  bool in_u = a != kOne && u.content().contains(a);
  if (in_u || v.content().subset_of(B)) {
    return {a, first_outside(B, v)};
  }
  return {kOne, a};
}

RTriple::RTriple(LrbWord word, LetterSet marks, std::vector<BinRel> fun)
    : word_(std::move(word)), marks_(std::move(marks)), fun_(std::move(fun)) {
  if (word_.empty()) {
    throw std::invalid_argument("triple with empty word component");
  }
  if (fun_.size() != word_.size()) {
    throw std::invalid_argument("triple function not aligned with word");
  }
  if (!marks_.subset_of(word_.content())) {
    throw std::invalid_argument("triple marks not within word content");
  }
  for (const auto& rel : fun_) {
    if (rel.dim() != fun_[0].dim()) {
      throw DimensionMismatch("triple mixes relation dimensions");
    }
  }
}

const BinRel* RTriple::find(char a) const {
  if (a == kOne) {
    return nullptr;
  }
  auto pos = word_.letters().find(a);
  return pos == std::string::npos ? nullptr : &fun_[pos];
}

BinRel RTriple::at(char a) const {
  const BinRel* rel = find(a);
  return rel ? *rel : BinRel::identity(dim());
}

std::size_t RTriple::hash() const {
  std::size_t h = std::hash<std::string>{}(word_.letters());
  h ^= std::hash<std::string>{}(marks_.chars()) + 0x9e3779b97f4a7c15ULL +
       (h << 6) + (h >> 2);
  for (const auto& rel : fun_) {
    h ^= rel.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string RTriple::key() const {
  std::string out = word_.letters();
  out += '|';
  out += marks_.chars();
  out += '|';
  for (const auto& rel : fun_) {
    out += rel.key();
  }
  return out;
}

RTriple generator(char a, const Digraph& g) {
  return RTriple(LrbWord::reduce(std::string(1, a)), LetterSet{},
                 {g.delta(a)});
}

namespace {

// Product of the two evaluations, skipping implicit identities.
BinRel eval_pair(const RTriple& x, const RTriple& y, char a1, char a2) {
  const BinRel* f = x.find(a1);
  const BinRel* g = y.find(a2);
  if (f && g) {
    return compose(*f, *g);
  }
  if (f) {
    return *f;
  }
  if (g) {
    return *g;
  }
  return BinRel::identity(x.dim());
}

}  // namespace

RTriple mul(const RTriple& x, const RTriple& y) {
  if (x.dim() != y.dim()) {
    throw DimensionMismatch("triples over different vertex sets");
  }
  LaPair combined =
      la_mul({x.marks(), x.word()}, {y.marks(), y.word()});
  std::vector<BinRel> fun;
  fun.reserve(combined.word.size());
  for (char a : combined.word.letters()) {
    auto [a1, a2] = chi(x.marks(), x.word(), y.word(), a);
    fun.push_back(eval_pair(x, y, a1, a2));
  }
  return RTriple(combined.word, combined.marks, std::move(fun));
}

RTriple natural_power(const RTriple& x, long n) {
  if (n < 1) {
    throw std::invalid_argument("natural_power needs n >= 1");
  }
  RTriple acc = x;
  for (long i = 1; i < n; ++i) {
    acc = mul(acc, x);
  }
  return acc;
}

RTriple natural_omega(const RTriple& x) {
  RTriple acc = x;
  while (true) {
    if (mul(acc, acc) == acc) {
      return acc;
    }
    acc = mul(acc, x);
  }
}

RTriple natural_omega_closed_form(const RTriple& x) {
  BinRel step = omega_plus(x.at(first_outside(x.marks(), x.word())), -1);
  std::vector<BinRel> fun;
  fun.reserve(x.word().size());
  for (const auto& rel : x.fun()) {
    fun.push_back(compose(rel, step));
  }
  return RTriple(x.word(), x.marks(), std::move(fun));
}

RTriple product_omega_closed_form(const RTriple& x, const RTriple& y) {
  const LetterSet& B = x.marks();
  const LetterSet& C = y.marks();
  const LrbWord& u = x.word();
  const LrbWord& v = y.word();
  LetterSet cu = u.content();
  LaPair combined = la_mul({B, u}, {C, v});
  const LetterSet& D = combined.marks;
  const LrbWord& uv = combined.word;
  bool v_absorbed = v.content().subset_of(B);

  char i_b_v = first_outside(B, v);
  char i_c_v = first_outside(C, v);
  char i_d_u = first_outside(D, u);
  char i_c_u = first_outside(C, u);

  std::vector<BinRel> fun;
  fun.reserve(uv.size());
  for (char a : uv.letters()) {
    if (cu.contains(a)) {
      if (v_absorbed || i_d_u != kOne) {
        BinRel cycle = omega_plus(eval_pair(x, y, i_d_u, i_b_v), -1);
        fun.push_back(compose(eval_pair(x, y, a, i_b_v), cycle));
      } else {
        // i_C(uv) outside the content of u, and v not absorbed
        BinRel cycle = omega_plus(y.at(i_c_v), -1);
        fun.push_back(compose(eval_pair(x, y, a, i_b_v), cycle));
      }
    } else {
      if (i_c_u != kOne) {
        BinRel cycle = omega_plus(eval_pair(x, y, i_c_u, i_b_v), -1);
        fun.push_back(compose(y.at(a), cycle));
      } else {
        BinRel cycle = omega_plus(y.at(i_c_v), -1);
        fun.push_back(compose(y.at(a), cycle));
      }
    }
  }
  return RTriple(uv, D, std::move(fun));
}

RTriple bracket_omega(const RTriple& x, const Digraph& g) {
  RTriple base = natural_omega(x);
  BinRel pad = g.epsilon(x.word().content());
  std::vector<BinRel> fun;
  fun.reserve(base.word().size());
  for (const auto& rel : base.fun()) {
    fun.push_back(compose(rel, pad));
  }
  return RTriple(base.word(), base.word().content(), std::move(fun));
}

bool is_tilde(const RTriple& x, const Digraph& g) {
  BinRel eps_u = g.epsilon(x.word().content());
  BinRel eps_b = g.epsilon(x.marks());
  for (const auto& rel : x.fun()) {
    if (!rel.subset_of(eps_u)) {
      return false;
    }
    if (compose(rel, eps_b) != rel) {
      return false;
    }
  }
  return true;
}

bool is_s(const RTriple& x, const Digraph& g) {
  const std::string& u = x.word().letters();
  const std::size_t n = u.size();
  // Positions k = 1..n select the target F(u[k]) (k = n gives the identity);
  // the binding choice of Y is the content of the first k letters.
  for (std::size_t k = 1; k <= n; ++k) {
    BinRel bound = g.epsilon(LetterSet::of(std::string_view(u).substr(0, k)));
    if (k < n) {
      bound = compose(bound, x.fun()[k]);
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (!x.fun()[j].subset_of(bound)) {
        return false;
      }
    }
  }
  return true;
}

bool leq(const RTriple& x, const RTriple& y) {
  if (x.word() != y.word() || !x.marks().subset_of(y.marks())) {
    return false;
  }
  for (std::size_t i = 0; i < x.fun().size(); ++i) {
    if (!x.fun()[i].subset_of(y.fun()[i])) {
      return false;
    }
  }
  return true;
}

BinRel xi(const RTriple& x) { return x.fun()[0]; }

}  // namespace rclos
