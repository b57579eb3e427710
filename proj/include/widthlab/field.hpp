#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace widthlab {

// A field element, encoded as an integer in [0, q).  The element
// sum_i c_i x^i in the polynomial basis maps to the value sum_i c_i p^i.
using Elem = std::uint8_t;

// Arithmetic for a small finite field GF(p^e) with q = p^e <= 64.
// All operations are lookups into tables precomputed at construction.
// Field values are immutable and cheap to copy; two Field objects compare
// equal iff they were built from the same (p, e) — the modulus is canonical.
class Field {
public:
  static constexpr int kMaxOrder = 64;

  // GF(p^e) with the canonical modulus: the lexicographically least monic
  // irreducible of degree e over GF(p), coefficients compared low-degree
  // first.  Throws std::invalid_argument for non-prime p or p^e out of range.
  static Field make(int p, int e = 1);

  // GF(q), factoring q = p^e.  Throws if q is not a prime power.
  static Field of_order(int q);

  int characteristic() const;
  int degree() const;
  int order() const;  // q = p^e

  // Modulus coefficients c0..ce (monic, ce = 1); empty when degree == 1.
  const std::vector<int>& modulus() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem inv(Elem a) const;  // a != 0
  Elem pow(Elem a, long long k) const;
  Elem frobenius(Elem a, int i) const;  // a^(p^i), 0 <= i < degree

  bool operator==(const Field& o) const;
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string name() const;  // e.g. "GF(4)"

private:
  struct Tables;
  explicit Field(std::shared_ptr<const Tables> t);
  std::shared_ptr<const Tables> t_;
};

}  // namespace widthlab
