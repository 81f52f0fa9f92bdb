#ifndef RCLOS_BINREL_HPP_
#define RCLOS_BINREL_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rclos {

/// Binary relation on {0,...,dim-1}, stored as a row-major bit matrix.
/// Values are immutable once built; equality and hashing are bitwise, so
/// relations can serve as keys in fixpoint computations.
class BinRel {
 public:
  BinRel() = default;

  /// The empty relation on a set of `dim` vertices.
  explicit BinRel(int dim);

  static BinRel identity(int dim);
  static BinRel full(int dim);

  int dim() const { return dim_; }

  bool test(int p, int q) const;
  void set(int p, int q, bool value = true);

  bool is_empty() const;
  bool is_identity() const;
  bool is_idempotent() const;

  /// True iff every pair of *this is a pair of `other`.
  bool subset_of(const BinRel& other) const;

  std::vector<std::pair<int, int>> pairs() const;

  std::size_t hash() const;

  /// Fixed-width hex dump of the bit matrix; total order on equal dims.
  std::string key() const;

  friend bool operator==(const BinRel&, const BinRel&) = default;

 private:
  int dim_ = 0;
  int words_ = 0;  // 64-bit words per row
  std::vector<std::uint64_t> bits_;

  friend BinRel compose(const BinRel&, const BinRel&);
  friend BinRel unite(const BinRel&, const BinRel&);
};

/// Relation product: (p,q) iff p -r-> t -s-> q for some t.
BinRel compose(const BinRel& r, const BinRel& s);

/// Set union of pairs.
BinRel unite(const BinRel& r, const BinRel& s);

inline BinRel operator*(const BinRel& r, const BinRel& s) {
  return compose(r, s);
}

/// n-fold product; n = 0 gives the identity.
BinRel power(const BinRel& r, long n);

/// r^{omega+k}: with i the index and p the period of r, the power r^m for
/// some m >= i with m congruent to k mod p.  k = 0 gives the idempotent
/// power, k = -1 its predecessor on the cycle.
BinRel omega_plus(const BinRel& r, int k);

/// Index (least i >= 1 with r^{i+p} = r^i) and period of r.
std::pair<long, long> index_period(const BinRel& r);

/// Reflexive-transitive closure (Warshall).
BinRel reflexive_transitive_closure(const BinRel& r);

struct BinRelHash {
  std::size_t operator()(const BinRel& r) const { return r.hash(); }
};

}  // namespace rclos

#endif  // RCLOS_BINREL_HPP_
