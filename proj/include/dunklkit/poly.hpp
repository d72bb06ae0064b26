#pragma once

#include <map>
#include <string>
#include <vector>

#include "dunklkit/rational.hpp"

namespace dunklkit {

// Sparse multivariate polynomial with exact rational coefficients.
// Variables are indexed 0..nvars-1; by convention a polynomial on the
// upper half-space R^{d+1} uses variables x1..xd followed by y.
class Poly {
public:
    using Exponent = std::vector<int>;
    using TermMap = std::map<Exponent, Rational>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, const Rational& c);
    static Poly variable(int nvars, int i);
    static Poly monomial(int nvars, const Exponent& e, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // total degree; -1 for the zero polynomial
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponent& e, const Rational& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative(int var) const;

    Rational eval(const RVector& point) const;
    double eval(const std::vector<double>& point) const;

    // p(M x) for a square rational matrix M acting on the first M.size()
    // variables; remaining variables pass through untouched.
    Poly compose_linear(const RMatrix& m) const;

    // Graded-lex printing with the given variable names (defaults x1..xn).
    std::string str(const std::vector<std::string>& names = {}) const;

    // Parses e.g. "x1^2 - 3*x1*y + 1/2".  Grammar (plain text):
    //   expr   := ['+'|'-'] term (('+'|'-') term)*
    //   term   := factor ('*' factor)*
    //   factor := atom ['^' uint]
    //   atom   := number | name | '(' expr ')'
    //   number := uint ['/' uint] | decimal
    static Poly parse(const std::string& text, int nvars,
                      const std::vector<std::string>& names = {});

private:
    int nvars_;
    TermMap terms_;
};

// Default variable names: x1..xd (or "x" when d==1), with "y" appended when
// with_y is set.
std::vector<std::string> poly_var_names(int d, bool with_y);

// <beta, x> as a polynomial over the first beta.size() variables.
Poly linear_form(const RVector& beta, int nvars);

// Exact quotient p / <beta,x>.  Throws InternalPanic if the division leaves
// a remainder.
Poly divide_linear_exact(const Poly& p, const RVector& beta);

// (p - p∘sigma) / <beta,x>, exact.  sigma must fix the divisibility, i.e. be
// the reflection in beta (possibly extended by identity rows for extra vars).
Poly divided_reflection_difference(const RVector& beta, const RMatrix& sigma, const Poly& p);

}  // namespace dunklkit
