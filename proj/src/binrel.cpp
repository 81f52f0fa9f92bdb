#include "rclos/binrel.hpp"

#include <algorithm>
#include <unordered_map>

#include "rclos/errors.hpp"

namespace rclos {

namespace {

void check_same_dim(const BinRel& r, const BinRel& s) {
  if (r.dim() != s.dim()) {
    throw DimensionMismatch("relation dimensions differ: " +
                            std::to_string(r.dim()) + " vs " +
                            std::to_string(s.dim()));
  }
}

}  // namespace

BinRel::BinRel(int dim)
    : dim_(dim), words_((dim + 63) / 64), bits_(std::size_t(dim) * words_) {}

BinRel BinRel::identity(int dim) {
  BinRel r(dim);
  for (int p = 0; p < dim; ++p) {
    r.set(p, p);
  }
  return r;
}

BinRel BinRel::full(int dim) {
  BinRel r(dim);
  for (int p = 0; p < dim; ++p) {
    for (int q = 0; q < dim; ++q) {
      r.set(p, q);
    }
  }
  return r;
}

bool BinRel::test(int p, int q) const {
  return (bits_[std::size_t(p) * words_ + q / 64] >> (q % 64)) & 1;
}

void BinRel::set(int p, int q, bool value) {
  auto& word = bits_[std::size_t(p) * words_ + q / 64];
  if (value) {
    word |= std::uint64_t(1) << (q % 64);
  } else {
    word &= ~(std::uint64_t(1) << (q % 64));
  }
}

bool BinRel::is_empty() const {
  return std::all_of(bits_.begin(), bits_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool BinRel::is_identity() const { return *this == identity(dim_); }

bool BinRel::is_idempotent() const { return compose(*this, *this) == *this; }

bool BinRel::subset_of(const BinRel& other) const {
  check_same_dim(*this, other);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & ~other.bits_[i]) {
      return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> BinRel::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < dim_; ++p) {
    for (int q = 0; q < dim_; ++q) {
      if (test(p, q)) {
        out.emplace_back(p, q);
      }
    }
  }
  return out;
}

std::size_t BinRel::hash() const {
  std::size_t h = std::size_t(dim_) * 0x9e3779b97f4a7c15ULL;
  for (auto w : bits_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string BinRel::key() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bits_.size() * 16);
  for (auto w : bits_) {
    for (int shift = 60; shift >= 0; shift -= 4) {
      out.push_back(digits[(w >> shift) & 0xf]);
    }
  }
  return out;
}

BinRel compose(const BinRel& r, const BinRel& s) {
  check_same_dim(r, s);
  const int n = r.dim_;
  const int words = r.words_;
  BinRel out(n);
  for (int p = 0; p < n; ++p) {
    for (int t = 0; t < n; ++t) {
      if (r.test(p, t)) {
        for (int w = 0; w < words; ++w) {
          out.bits_[std::size_t(p) * words + w] |=
              s.bits_[std::size_t(t) * words + w];
        }
      }
    }
  }
  return out;
}

BinRel unite(const BinRel& r, const BinRel& s) {
  check_same_dim(r, s);
  BinRel out = r;
  for (std::size_t i = 0; i < out.bits_.size(); ++i) {
    out.bits_[i] |= s.bits_[i];
  }
  return out;
}

BinRel power(const BinRel& r, long n) {
  BinRel acc = BinRel::identity(r.dim());
  BinRel base = r;
  while (n > 0) {
    if (n & 1) {
      acc = compose(acc, base);
    }
    n >>= 1;
    if (n) {
      base = compose(base, base);
    }
  }
  return acc;
}

std::pair<long, long> index_period(const BinRel& r) {
  std::unordered_map<BinRel, long, BinRelHash> seen;
  BinRel cur = r;
  long exp = 1;
  while (true) {
    auto [it, fresh] = seen.emplace(cur, exp);
    if (!fresh) {
      long index = it->second;
      return {index, exp - index};
    }
    cur = compose(cur, r);
    ++exp;
  }
}

BinRel omega_plus(const BinRel& r, int k) {
  auto [index, period] = index_period(r);
  // Smallest multiple of the period that is >= the index.
  long m = ((index + period - 1) / period) * period;
  long e = m + ((k % period) + period) % period;
  return power(r, e);
}

BinRel reflexive_transitive_closure(const BinRel& r) {
  const int n = r.dim();
  BinRel out = unite(r, BinRel::identity(n));
  for (int t = 0; t < n; ++t) {
    for (int p = 0; p < n; ++p) {
      if (out.test(p, t)) {
        for (int q = 0; q < n; ++q) {
          if (out.test(t, q)) {
            out.set(p, q);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace rclos
