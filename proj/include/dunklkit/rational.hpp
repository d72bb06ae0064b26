#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dunklkit/errors.hpp"

namespace dunklkit {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "7", "-3/4", and decimal literals like "0.25".
Rational rat_parse(const std::string& text);

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string rat_str(const Rational& q) { return q.get_str(); }

using RVector = std::vector<Rational>;
using RMatrix = std::vector<std::vector<Rational>>;

RMatrix rmat_identity(int n);
RMatrix rmat_mul(const RMatrix& a, const RMatrix& b);
RVector rmat_apply(const RMatrix& m, const RVector& v);
bool rmat_eq(const RMatrix& a, const RMatrix& b);

}  // namespace dunklkit
