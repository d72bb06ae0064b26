#include "dunklkit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace dunklkit {

Rational rat_parse(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace((unsigned char)c); }),
            s.end());
    if (s.empty()) throw DomainError("empty rational literal");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw DomainError("bad rational literal: " + text);
        mpz_class num(digits);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    Rational q;
    if (q.set_str(s, 10) != 0) throw DomainError("bad rational literal: " + text);
    q.canonicalize();
    if (q.get_den() == 0) throw DomainError("zero denominator: " + text);
    return q;
}

RMatrix rmat_identity(int n) {
    RMatrix m(n, RVector(n, Rational(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RMatrix rmat_mul(const RMatrix& a, const RMatrix& b) {
    size_t n = a.size();
    RMatrix c(n, RVector(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

RVector rmat_apply(const RMatrix& m, const RVector& v) {
    size_t n = m.size();
    RVector out(n, Rational(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
    return out;
}

bool rmat_eq(const RMatrix& a, const RMatrix& b) { return a == b; }

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

Poly Poly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw DomainError("variable index out of range");
    Poly p(nvars);
    Exponent e(nvars, 0);
    e[i] = 1;
    p.add_term(e, Rational(1));
    return p;
}

Poly Poly::monomial(int nvars, const Exponent& e, const Rational& c) {
    if ((int)e.size() != nvars) throw DomainError("exponent length mismatch");
    Poly p(nvars);
    p.add_term(e, c);
    return p;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int Poly::degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int k : e) d += k;
        deg = std::max(deg, d);
    }
    return deg;
}

Poly Poly::operator-() const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    if (nvars_ != o.nvars_) throw DomainError("nvars mismatch in +");
    Poly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    if (nvars_ != o.nvars_) throw DomainError("nvars mismatch in -");
    Poly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    if (nvars_ != o.nvars_) throw DomainError("nvars mismatch in *");
    Poly out(nvars_);
    Exponent e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Poly Poly::operator*(const Rational& c) const {
    Poly out(nvars_);
    if (c == 0) return out;
    for (const auto& [e, a] : terms_) out.terms_.emplace(e, a * c);
    return out;
}

Poly Poly::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw DomainError("derivative: bad variable");
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent e2 = e;
        e2[var] -= 1;
        out.add_term(e2, c * Rational(e[var]));
    }
    return out;
}

Rational Poly::eval(const RVector& point) const {
    if ((int)point.size() != nvars_) throw DomainError("eval: dimension mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

double Poly::eval(const std::vector<double>& point) const {
    if ((int)point.size() != nvars_) throw DomainError("eval: dimension mismatch");
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.get_d();
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

Poly Poly::compose_linear(const RMatrix& m) const {
    int mdim = (int)m.size();
    if (mdim > nvars_) throw DomainError("compose_linear: matrix larger than nvars");
    // Images of the transformed variables: x_i -> sum_j m[i][j] x_j.
    std::vector<Poly> image(mdim, Poly(nvars_));
    for (int i = 0; i < mdim; ++i) {
        Poly li(nvars_);
        for (int j = 0; j < mdim; ++j) {
            if (m[i][j] == 0) continue;
            li = li + Poly::variable(nvars_, j) * m[i][j];
        }
        image[i] = li;
    }
    // Power cache per variable.
    std::vector<std::vector<Poly>> pow(mdim);
    auto power = [&](int i, int k) -> const Poly& {
        auto& cache = pow[i];
        if (cache.empty()) cache.push_back(Poly::constant(nvars_, Rational(1)));
        while ((int)cache.size() <= k) cache.push_back(cache.back() * image[i]);
        return cache[k];
    };
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Poly t = Poly::constant(nvars_, c);
        for (int i = 0; i < mdim; ++i)
            if (e[i] > 0) t = t * power(i, e[i]);
        // untouched trailing variables
        Exponent tail(nvars_, 0);
        bool has_tail = false;
        for (int i = mdim; i < nvars_; ++i)
            if (e[i] > 0) {
                tail[i] = e[i];
                has_tail = true;
            }
        if (has_tail) t = t * Poly::monomial(nvars_, tail, Rational(1));
        out = out + t;
    }
    return out;
}

std::vector<std::string> poly_var_names(int d, bool with_y) {
    std::vector<std::string> names;
    if (d == 1) {
        names.push_back("x");
    } else {
        for (int i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
    }
    if (with_y) names.push_back("y");
    return names;
}

namespace {

int total_degree(const Poly::Exponent& e) {
    int d = 0;
    for (int k : e) d += k;
    return d;
}

// Graded-lex: higher total degree first, then lexicographically larger first.
bool graded_lex_before(const Poly::Exponent& a, const Poly::Exponent& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

}  // namespace

std::string Poly::str(const std::vector<std::string>& names_in) const {
    if (terms_.empty()) return "0";
    std::vector<std::string> names = names_in;
    if (names.empty()) {
        for (int i = 1; i <= nvars_; ++i) names.push_back("x" + std::to_string(i));
    }
    if ((int)names.size() != nvars_) throw DomainError("str: name count mismatch");

    std::vector<const std::pair<const Exponent, Rational>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return graded_lex_before(a->first, b->first); });

    std::ostringstream out;
    bool first = true;
    for (auto* t : order) {
        const Rational& c = t->second;
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (ac != 1 || total_degree(t->first) == 0) factors.push_back(ac.get_str());
        for (int i = 0; i < nvars_; ++i) {
            int k = t->first[i];
            if (k == 0) continue;
            factors.push_back(k == 1 ? names[i] : names[i] + "^" + std::to_string(k));
        }
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) out << "*";
            out << factors[i];
        }
    }
    return out.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    int nvars;
    const std::vector<std::string>& names;

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw DomainError("polynomial parse error at position " + std::to_string(pos) + ": " + what);
    }

    Poly parse_expr() {
        skip_ws();
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        Poly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (accept('+'))
                acc = acc + parse_term();
            else if (accept('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (true) {
            skip_ws();
            if (accept('*'))
                acc = acc * parse_factor();
            else
                break;
        }
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_atom();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            if (pos == start) fail("expected integer exponent");
            int k = std::stoi(s.substr(start, pos - start));
            Poly acc = Poly::constant(nvars, Rational(1));
            for (int i = 0; i < k; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Poly parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (accept('(')) {
            Poly inner = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        char c = s[pos];
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isdigit((unsigned char)s[pos]) || s[pos] == '.' ))
                ++pos;
            // optional /denominator
            if (pos < s.size() && s[pos] == '/') {
                size_t save = pos;
                ++pos;
                size_t dstart = pos;
                while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
                if (pos == dstart) pos = save;  // not a fraction after all
            }
            return Poly::constant(nvars, rat_parse(s.substr(start, pos - start)));
        }
        if (std::isalpha((unsigned char)c)) {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            for (int i = 0; i < nvars; ++i)
                if (names[i] == name) return Poly::variable(nvars, i);
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Poly Poly::parse(const std::string& text, int nvars, const std::vector<std::string>& names_in) {
    std::vector<std::string> names = names_in;
    if (names.empty()) {
        for (int i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
    }
    if ((int)names.size() != nvars) throw DomainError("parse: name count mismatch");
    Parser p{text, 0, nvars, names};
    Poly out = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

Poly linear_form(const RVector& beta, int nvars) {
    if ((int)beta.size() > nvars) throw DomainError("linear_form: too many coefficients");
    Poly out(nvars);
    for (size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] == 0) continue;
        Poly::Exponent e(nvars, 0);
        e[i] = 1;
        out.add_term(e, beta[i]);
    }
    return out;
}

Poly divide_linear_exact(const Poly& p, const RVector& beta) {
    int nvars = p.nvars();
    int pivot = -1;
    for (size_t i = 0; i < beta.size(); ++i)
        if (beta[i] != 0) {
            pivot = (int)i;
            break;
        }
    if (pivot < 0) throw DomainError("divide_linear_exact: zero form");
    Poly form = linear_form(beta, nvars);
    Poly q(nvars);
    Poly r = p;
    while (!r.is_zero()) {
        // pick the term with the largest pivot exponent (ties: map order)
        const Poly::Exponent* best = nullptr;
        const Rational* coef = nullptr;
        for (const auto& [e, c] : r.terms()) {
            if (!best || e[pivot] > (*best)[pivot]) {
                best = &e;
                coef = &c;
            }
        }
        if ((*best)[pivot] == 0)
            throw InternalPanic("divide_linear_exact: nonzero remainder");
        Poly::Exponent e2 = *best;
        e2[pivot] -= 1;
        Poly t = Poly::monomial(nvars, e2, *coef / beta[pivot]);
        q = q + t;
        r = r - t * form;
    }
    return q;
}

Poly divided_reflection_difference(const RVector& beta, const RMatrix& sigma, const Poly& p) {
    Poly diff = p - p.compose_linear(sigma);
    return divide_linear_exact(diff, beta);
}

}  // namespace dunklkit
