#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "error.hpp"

namespace sw {

// Exact rational scalar. All arithmetic in the library is exact; no floating
// point anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

bool rat_is_integer(const Rat& r);

// r must be integral and fit in long.
long rat_to_long(const Rat& r);

// Floor of an exact rational.
mpz_class rat_floor(const Rat& r);

// Parses "p", "p/q", with optional leading '-' (ASCII or U+2212).
Rat parse_rat(const std::string& s);

std::string rat_str(const Rat& r);

// Generalized binomial coefficient (x choose k) for rational x, integer k>=0.
Rat binomial(const Rat& x, unsigned k);

}  // namespace sw
