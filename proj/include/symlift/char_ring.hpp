// Exact character-ring calculus for finite-dimensional (virtual)
// representations of GL(2,C).
//
// A character is a finitely supported map from Laurent monomials x^i y^j to
// integer multiplicities, invariant under swapping the two eigenvalue
// symbols.  Every such character decomposes uniquely over the basis
// sym^a (x) det^b, a >= 0, with signed multiplicities; the decomposition is
// "genuine" when all multiplicities are positive.
#pragma once

#include "symlift/integers.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace symlift {

/// Exponent pair of a Laurent monomial x^i y^j.
struct Monomial {
  Integer i;
  Integer j;

  bool operator==(const Monomial& o) const { return i == o.i && j == o.j; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  bool operator<(const Monomial& o) const {  // lexicographic
    int c = cmp(i, o.i);
    if (c != 0) return c < 0;
    return j < o.j;
  }
};

class NotSymmetric : public std::runtime_error {
 public:
  explicit NotSymmetric(const std::string& what) : std::runtime_error(what) {}
};

class NonIntegralPlethysm : public std::runtime_error {
 public:
  explicit NonIntegralPlethysm(const std::string& what) : std::runtime_error(what) {}
};

class Character {
 public:
  using Support = std::map<Monomial, Integer>;

  Character() = default;  // the zero character

  /// Drops zero entries and checks the i <-> j symmetry (throws NotSymmetric).
  explicit Character(Support terms);

  const Support& support() const { return support_; }
  Integer multiplicity(const Monomial& m) const;
  bool is_zero() const { return support_.empty(); }

  bool operator==(const Character& o) const { return support_ == o.support_; }
  bool operator!=(const Character& o) const { return !(*this == o); }

 private:
  Support support_;
};

/// Character of sym^n of the standard representation: sum of x^i y^j, i+j = n.
Character sym_char(unsigned long n);

/// Pointwise product of Laurent polynomials (tensor product of characters).
Character tensor(const Character& c1, const Character& c2);

Character direct_sum(const Character& c1, const Character& c2);

/// Negates all exponents: (i,j) -> (-i,-j).
Character dual(const Character& c);

/// Multiplies by det^b, i.e. shifts every exponent pair by (b,b).
Character det_twist(const Character& c, const Integer& b);

/// Adams operation: (i,j) -> (r*i, r*j), multiplicities kept.
Character adams(const Character& c, unsigned long r);

/// Character of Sym^m(V) where V has character c, via the Newton recursion
///   m * h_m = sum_{r=1..m} p_r(c) * h_{m-r},   p_r = adams(c, r).
/// Every intermediate division must be exact; NonIntegralPlethysm otherwise.
Character plethysm_sym(const Character& c, unsigned long m);

/// Sum of all multiplicities (evaluation at x = y = 1).
Integer dimension(const Character& c);

/// Common total degree i+j of all support monomials, when one exists.
std::optional<Integer> homogeneous_degree(const Character& c);

struct SchurConstituent {
  Integer a;     // symmetric-power degree, >= 0
  Integer b;     // determinant power
  Integer mult;  // nonzero

  bool operator==(const SchurConstituent& o) const {
    return a == o.a && b == o.b && mult == o.mult;
  }
};

struct SchurDecomposition {
  /// Sorted by (a descending, b descending); (a,b) pairs are unique.
  std::vector<SchurConstituent> constituents;

  /// True iff every multiplicity is positive.
  bool is_genuine() const;

  bool operator==(const SchurDecomposition& o) const { return constituents == o.constituents; }
};

/// Greedy leading-monomial extraction over the dominant chamber i >= j.
/// Total on symmetric characters; signed multiplicities are permitted.
SchurDecomposition decompose(const Character& c);

/// Inverse of decompose: sum of mult * sym^a (x) det^b.
Character reconstruct(const SchurDecomposition& d);

/// Drops the det powers (trivial when the central character is normalized
/// away, i.e. xy = 1) and merges multiplicities by sym degree.
std::map<Integer, Integer> unitary_specialize(const SchurDecomposition& d);

namespace detail {
/// Divides every multiplicity by m, throwing NonIntegralPlethysm on remainder.
Character::Support div_support_exact(const Character::Support& s, unsigned long m);
}  // namespace detail

}  // namespace symlift
