#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cospec {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

// Parses "p", "p/q", or "-p/q". Throws Error on malformed input.
Rat rat_from_string(const std::string& s);

// Ascending-degree coefficient vector; charpoly of an n x n matrix is monic
// of degree n (leading coefficient 1).
using Poly = std::vector<Rat>;

bool poly_is_integral(const Poly& p);
std::string poly_to_string(const Poly& p);
Rat poly_eval(const Poly& p, const Rat& x);

}  // namespace cospec
