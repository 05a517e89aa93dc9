#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace torusadm {

// All scalar arithmetic in this library is exact. Integers are GMP bignums,
// rationals are GMP rationals kept in canonical form (positive denominator,
// gcd(num, den) = 1). GMP canonicalizes after arithmetic automatically, but
// NOT when a rational is assembled from a numerator/denominator pair, so all
// construction funnels through make_rat.
using Int = mpz_class;
using RationalScalar = mpq_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den = 1) {
  return make_rat(Int(num), Int(den));
}

inline const Int num(const Rat& r) { return r.get_num(); }
inline const Int den(const Rat& r) { return r.get_den(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// true iff r is a positive integer (the values a witness must avoid).
inline bool is_positive_integer(const Rat& r) {
  return is_integer(r) && r.get_num() > 0;
}

inline Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

// Reduce into [0, 1).
inline Rat mod1(const Rat& r) {
  Rat out = r - Rat(floor_rat(r));
  out.canonicalize();
  return out;
}

// Serialize as "p" or "p/q"; parse accepts both. No floats anywhere.
std::string rat_str(const Rat& r);
std::optional<Rat> parse_rat(std::string_view text);

std::string rat_vec_str(const std::vector<Rat>& v);

}  // namespace torusadm
