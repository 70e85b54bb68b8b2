#include <ordalex/laurent.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ordalex
{

std::int64_t to_int64(const BigInt &x)
{
    if (!x.fits_slong_p()) {
        throw std::overflow_error("integer does not fit in 64 bits: " + x.get_str());
    }
    return x.get_si();
}

bool GrlexLess::operator()(const Exponent &a, const Exponent &b) const
{
    std::int64_t da = 0, db = 0;
    for (auto x : a) da += x;
    for (auto x : b) db += x;
    if (da != db) return da < db;
    return a < b;
}

namespace
{

// Sorts by grlex, merges duplicates, drops zeros.
void normalize_terms(std::vector<Term> &terms)
{
    GrlexLess less;
    std::sort(terms.begin(), terms.end(),
              [&](const Term &x, const Term &y) { return less(x.exponent, y.exponent); });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Rational c = terms[i].coeff;
        while (j < terms.size() && terms[j].exponent == terms[i].exponent) {
            c += terms[j].coeff;
            ++j;
        }
        if (c != 0) {
            if (out != i) terms[out].exponent = std::move(terms[i].exponent);
            terms[out].coeff = std::move(c);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

// Merge of two sorted term lists with a sign on the second.
std::vector<Term> merge_terms(const std::vector<Term> &a, const std::vector<Term> &b, bool subtract)
{
    GrlexLess less;
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && less(a[i].exponent, b[j].exponent))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || less(b[j].exponent, a[i].exponent)) {
            out.push_back(subtract ? Term{b[j].exponent, -b[j].coeff} : b[j]);
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (c != 0) out.push_back(Term{a[i].exponent, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

void check_vars(const LaurentPolynomial &a, const LaurentPolynomial &b)
{
    if (a.nvars() != b.nvars()) {
        throw std::invalid_argument("Laurent polynomial variable-count mismatch: " + std::to_string(a.nvars()) +
                                    " vs " + std::to_string(b.nvars()));
    }
}

} // namespace

LaurentPolynomial LaurentPolynomial::constant(std::size_t nvars, const Rational &c)
{
    LaurentPolynomial p(nvars);
    if (c != 0) p.terms_.push_back(Term{Exponent(nvars, 0), c});
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(Exponent e, const Rational &c)
{
    LaurentPolynomial p(e.size());
    if (c != 0) p.terms_.push_back(Term{std::move(e), c});
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t nvars, std::size_t i)
{
    Exponent e(nvars, 0);
    e.at(i) = 1;
    return monomial(std::move(e));
}

LaurentPolynomial LaurentPolynomial::from_terms(std::size_t nvars, std::vector<Term> terms)
{
    for (const auto &t : terms) {
        if (t.exponent.size() != nvars) {
            throw std::invalid_argument("from_terms: exponent length mismatch");
        }
    }
    normalize_terms(terms);
    LaurentPolynomial p(nvars);
    p.terms_ = std::move(terms);
    return p;
}

bool LaurentPolynomial::is_constant() const
{
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    return std::all_of(terms_[0].exponent.begin(), terms_[0].exponent.end(), [](auto x) { return x == 0; });
}

bool LaurentPolynomial::is_one() const
{
    return terms_.size() == 1 && is_constant() && terms_[0].coeff == 1;
}

const Term &LaurentPolynomial::leading_term() const
{
    if (terms_.empty()) throw std::domain_error("leading_term of zero polynomial");
    return terms_.back();
}

Rational LaurentPolynomial::coefficient(const Exponent &e) const
{
    GrlexLess less;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [&](const Term &t, const Exponent &x) { return less(t.exponent, x); });
    if (it != terms_.end() && it->exponent == e) return it->coeff;
    return 0;
}

Rational LaurentPolynomial::constant_term() const
{
    return coefficient(Exponent(nvars_, 0));
}

Exponent LaurentPolynomial::min_exponents() const
{
    if (terms_.empty()) throw std::domain_error("min_exponents of zero polynomial");
    Exponent m = terms_[0].exponent;
    for (const auto &t : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], t.exponent[i]);
    }
    return m;
}

Exponent LaurentPolynomial::max_exponents() const
{
    if (terms_.empty()) throw std::domain_error("max_exponents of zero polynomial");
    Exponent m = terms_[0].exponent;
    for (const auto &t : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::max(m[i], t.exponent[i]);
    }
    return m;
}

std::int64_t LaurentPolynomial::degree_in(std::size_t var) const
{
    if (terms_.empty()) throw std::domain_error("degree_in of zero polynomial");
    std::int64_t d = std::numeric_limits<std::int64_t>::min();
    for (const auto &t : terms_) d = std::max(d, t.exponent[var]);
    return d;
}

std::int64_t LaurentPolynomial::min_degree_in(std::size_t var) const
{
    if (terms_.empty()) throw std::domain_error("min_degree_in of zero polynomial");
    std::int64_t d = std::numeric_limits<std::int64_t>::max();
    for (const auto &t : terms_) d = std::min(d, t.exponent[var]);
    return d;
}

bool LaurentPolynomial::involves(std::size_t var) const
{
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term &t) { return t.exponent[var] != 0; });
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponent &by) const
{
    if (by.size() != nvars_) throw std::invalid_argument("shifted: exponent length mismatch");
    LaurentPolynomial p = *this;
    for (auto &t : p.terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) t.exponent[i] += by[i];
    }
    // A shift preserves grlex order.
    return p;
}

LaurentPolynomial LaurentPolynomial::substitute(const std::vector<std::vector<std::int64_t>> &a) const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &t : terms_) {
        Exponent e(nvars_, 0);
        for (std::size_t i = 0; i < nvars_; ++i) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < nvars_; ++j) s += a[i][j] * t.exponent[j];
            e[i] = s;
        }
        out.push_back(Term{std::move(e), t.coeff});
    }
    return from_terms(nvars_, std::move(out));
}

LaurentPolynomial LaurentPolynomial::scaled(const Rational &c) const
{
    if (c == 0) return LaurentPolynomial(nvars_);
    LaurentPolynomial p = *this;
    for (auto &t : p.terms_) t.coeff *= c;
    return p;
}

LaurentPolynomial LaurentPolynomial::operator-() const
{
    return scaled(-1);
}

LaurentPolynomial &LaurentPolynomial::operator+=(const LaurentPolynomial &b)
{
    check_vars(*this, b);
    terms_ = merge_terms(terms_, b.terms_, false);
    return *this;
}

LaurentPolynomial &LaurentPolynomial::operator-=(const LaurentPolynomial &b)
{
    check_vars(*this, b);
    terms_ = merge_terms(terms_, b.terms_, true);
    return *this;
}

LaurentPolynomial &LaurentPolynomial::operator*=(const LaurentPolynomial &b)
{
    *this = *this * b;
    return *this;
}

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial &b)
{
    a += b;
    return a;
}

LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial &b)
{
    a -= b;
    return a;
}

LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b)
{
    check_vars(a, b);
    LaurentPolynomial p(a.nvars_);
    if (a.is_zero() || b.is_zero()) return p;
    if (b.terms_.size() == 1) {
        p.terms_ = a.terms_;
        for (auto &t : p.terms_) {
            for (std::size_t i = 0; i < a.nvars_; ++i) t.exponent[i] += b.terms_[0].exponent[i];
            t.coeff *= b.terms_[0].coeff;
        }
        return p;
    }
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto &x : a.terms_) {
        for (const auto &y : b.terms_) {
            Exponent e(a.nvars_);
            for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = x.exponent[i] + y.exponent[i];
            prod.push_back(Term{std::move(e), x.coeff * y.coeff});
        }
    }
    normalize_terms(prod);
    p.terms_ = std::move(prod);
    return p;
}

LaurentPolynomial pow(const LaurentPolynomial &a, unsigned n)
{
    LaurentPolynomial result = LaurentPolynomial::constant(a.nvars(), 1);
    LaurentPolynomial base = a;
    while (n) {
        if (n & 1u) result *= base;
        n >>= 1u;
        if (n) base *= base;
    }
    return result;
}

LaurentPolynomial laurent_arithmetic(const LaurentPolynomial &a, const LaurentPolynomial &b, ArithmeticOp op)
{
    check_vars(a, b);
    switch (op) {
    case ArithmeticOp::add:
        return a + b;
    case ArithmeticOp::sub:
        return a - b;
    case ArithmeticOp::mul:
        return a * b;
    }
    throw std::invalid_argument("laurent_arithmetic: unknown op");
}

std::string LaurentPolynomial::to_string(const std::vector<std::string> &names) const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &t = *it;
        Rational c = t.coeff;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool has_var = std::any_of(t.exponent.begin(), t.exponent.end(), [](auto x) { return x != 0; });
        bool wrote = false;
        if (c != 1 || !has_var) {
            os << c.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (t.exponent[i] == 0) continue;
            if (wrote) os << "*";
            os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
            if (t.exponent[i] != 1) os << "^" << t.exponent[i];
            wrote = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Division and gcd.

LaurentPolynomial strip_monomial(const LaurentPolynomial &p)
{
    if (p.is_zero()) return p;
    Exponent m = p.min_exponents();
    for (auto &x : m) x = -x;
    return p.shifted(m);
}

namespace
{

// Exact division of ordinary polynomials (nonnegative exponents), grlex.
std::optional<LaurentPolynomial> poly_divide_exact(LaurentPolynomial r, const LaurentPolynomial &b)
{
    const std::size_t k = r.nvars();
    LaurentPolynomial q(k);
    if (r.is_zero()) return q;
    const Term &lb = b.leading_term();
    std::vector<Term> qterms;
    while (!r.is_zero()) {
        const Term &lr = r.leading_term();
        Exponent e(k);
        for (std::size_t i = 0; i < k; ++i) {
            e[i] = lr.exponent[i] - lb.exponent[i];
            if (e[i] < 0) return std::nullopt;
        }
        Rational c = lr.coeff / lb.coeff;
        LaurentPolynomial step = b.shifted(e).scaled(c);
        qterms.push_back(Term{std::move(e), std::move(c)});
        r -= step;
    }
    return LaurentPolynomial::from_terms(k, std::move(qterms));
}

LaurentPolynomial make_monic(const LaurentPolynomial &p)
{
    if (p.is_zero()) return p;
    return p.scaled(1 / p.leading_coeff());
}

LaurentPolynomial exact_or_throw(const LaurentPolynomial &a, const LaurentPolynomial &b)
{
    auto q = poly_divide_exact(a, b);
    if (!q) throw std::logic_error("gcd: expected exact division failed");
    return *q;
}

// Coefficients of p viewed as a univariate polynomial in `var`
// (nonnegative exponents); index i holds the coefficient of var^i.
std::vector<LaurentPolynomial> coeffs_in(const LaurentPolynomial &p, std::size_t var)
{
    const std::size_t k = p.nvars();
    std::int64_t d = p.is_zero() ? -1 : p.degree_in(var);
    std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(d + 1));
    for (const auto &t : p.terms()) {
        Term c = t;
        c.exponent[var] = 0;
        buckets[static_cast<std::size_t>(t.exponent[var])].push_back(std::move(c));
    }
    std::vector<LaurentPolynomial> out;
    out.reserve(buckets.size());
    for (auto &b : buckets) out.push_back(LaurentPolynomial::from_terms(k, std::move(b)));
    return out;
}

LaurentPolynomial from_coeffs(const std::vector<LaurentPolynomial> &c, std::size_t var, std::size_t k)
{
    std::vector<Term> terms;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (const auto &t : c[i].terms()) {
            Term x = t;
            x.exponent[var] = static_cast<std::int64_t>(i);
            terms.push_back(std::move(x));
        }
    }
    return LaurentPolynomial::from_terms(k, std::move(terms));
}

void trim(std::vector<LaurentPolynomial> &c)
{
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Pseudo-remainder of a by b in the main variable: lc(b)^(deg a - deg b + 1) a mod b.
std::vector<LaurentPolynomial> pseudo_remainder(std::vector<LaurentPolynomial> a,
                                                const std::vector<LaurentPolynomial> &b)
{
    const std::size_t db = b.size() - 1;
    const LaurentPolynomial &lb = b.back();
    std::int64_t delta = static_cast<std::int64_t>(a.size()) - static_cast<std::int64_t>(b.size()) + 1;
    while (!a.empty() && a.size() - 1 >= db) {
        LaurentPolynomial c = a.back();
        const std::size_t s = a.size() - 1 - db;
        for (auto &x : a) x *= lb;
        for (std::size_t i = 0; i <= db; ++i) a[i + s] -= c * b[i];
        trim(a);
        --delta;
    }
    if (delta > 0 && !a.empty()) {
        LaurentPolynomial f = pow(lb, static_cast<unsigned>(delta));
        for (auto &x : a) x *= f;
    }
    return a;
}

std::vector<std::size_t> active_vars(const LaurentPolynomial &a, const LaurentPolynomial &b)
{
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a.involves(i) || b.involves(i)) v.push_back(i);
    }
    return v;
}

LaurentPolynomial poly_gcd(const LaurentPolynomial &a, const LaurentPolynomial &b);

LaurentPolynomial content_in(const LaurentPolynomial &p, std::size_t var)
{
    auto cs = coeffs_in(p, var);
    LaurentPolynomial g(p.nvars());
    for (const auto &c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? make_monic(c) : poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

LaurentPolynomial univariate_gcd(LaurentPolynomial a, LaurentPolynomial b, std::size_t var)
{
    const std::size_t k = a.nvars();
    auto ca = coeffs_in(a, var);
    auto cb = coeffs_in(b, var);
    // Coefficients are constants here; work over Q directly.
    auto to_q = [](const std::vector<LaurentPolynomial> &c) {
        std::vector<Rational> q;
        for (const auto &x : c) q.push_back(x.constant_term());
        return q;
    };
    std::vector<Rational> x = to_q(ca), y = to_q(cb);
    auto trimq = [](std::vector<Rational> &v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trimq(x);
    trimq(y);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        // x mod y
        while (x.size() >= y.size() && !x.empty()) {
            Rational c = x.back() / y.back();
            std::size_t s = x.size() - y.size();
            for (std::size_t i = 0; i < y.size(); ++i) x[i + s] -= c * y[i];
            x.pop_back();
            trimq(x);
        }
        std::swap(x, y);
    }
    std::vector<Term> terms;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Exponent e(k, 0);
        e[var] = static_cast<std::int64_t>(i);
        terms.push_back(Term{std::move(e), x[i]});
    }
    return make_monic(LaurentPolynomial::from_terms(k, std::move(terms)));
}

// Subresultant PRS for primitive a, b in the main variable; returns the last
// nonzero subresultant (not yet made primitive).
LaurentPolynomial subresultant_gcd(const LaurentPolynomial &pa, const LaurentPolynomial &pb, std::size_t var)
{
    const std::size_t k = pa.nvars();
    auto a = coeffs_in(pa, var);
    auto b = coeffs_in(pb, var);
    if (a.size() < b.size()) std::swap(a, b);
    LaurentPolynomial g = LaurentPolynomial::constant(k, 1);
    LaurentPolynomial h = LaurentPolynomial::constant(k, 1);
    for (;;) {
        const std::int64_t delta = static_cast<std::int64_t>(a.size()) - static_cast<std::int64_t>(b.size());
        auto r = pseudo_remainder(a, b);
        if (r.empty()) break;
        if (r.size() == 1) return LaurentPolynomial::constant(k, 1);
        a = std::move(b);
        LaurentPolynomial den = g * pow(h, static_cast<unsigned>(delta));
        for (auto &x : r) x = exact_or_throw(x, den);
        b = std::move(r);
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = exact_or_throw(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
        }
    }
    return from_coeffs(b, var, k);
}

// Heuristic gcd by evaluation at a large integer and xi-adic reconstruction
// (Char, Geddes, Gonnet). Works on integer polynomials; a candidate is only
// accepted after it divides both inputs, so a failure just means falling
// back to the subresultant algorithm.
using IntPoly = std::map<Exponent, BigInt>;

IntPoly integer_multiple(const LaurentPolynomial &p)
{
    BigInt den = 1;
    for (const auto &t : p.terms()) den = lcm(den, t.coeff.get_den());
    IntPoly out;
    for (const auto &t : p.terms()) out.emplace(t.exponent, BigInt(t.coeff.get_num() * (den / t.coeff.get_den())));
    return out;
}

LaurentPolynomial from_int_poly(std::size_t k, const IntPoly &p)
{
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto &[e, c] : p) terms.push_back(Term{e, Rational(c)});
    return LaurentPolynomial::from_terms(k, std::move(terms));
}

BigInt int_content(const IntPoly &p)
{
    BigInt g = 0;
    for (const auto &[e, c] : p) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

BigInt max_norm(const IntPoly &p)
{
    BigInt m = 0;
    for (const auto &[e, c] : p) m = std::max(m, BigInt(abs(c)));
    return m;
}

IntPoly evaluate_at(const IntPoly &p, std::size_t var, const BigInt &xi)
{
    std::vector<BigInt> powers{BigInt(1)};
    IntPoly out;
    for (const auto &[e, c] : p) {
        const auto d = static_cast<std::size_t>(e[var]);
        while (powers.size() <= d) powers.push_back(powers.back() * xi);
        Exponent f = e;
        f[var] = 0;
        out[f] += c * powers[d];
    }
    std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
    return out;
}

// Inverse of evaluate_at with digits taken in (-xi/2, xi/2].
IntPoly interpolate(const IntPoly &h, std::size_t var, const BigInt &xi)
{
    const BigInt half = xi / 2;
    IntPoly out;
    for (const auto &[e, c] : h) {
        BigInt r = c;
        for (std::int64_t d = 0; r != 0; ++d) {
            BigInt digit = r % xi;
            if (digit > half) digit -= xi;
            else if (digit <= -half) digit += xi;
            if (digit != 0) {
                Exponent f = e;
                f[var] = d;
                out.emplace(std::move(f), digit);
            }
            r = (r - digit) / xi;
        }
    }
    return out;
}

bool int_divides(std::size_t k, const IntPoly &d, const IntPoly &a)
{
    return poly_divide_exact(from_int_poly(k, a), from_int_poly(k, d)).has_value();
}

// gcd over Z (content included, sign not normalized) or nullopt on failure.
std::optional<IntPoly> heuristic_gcd(std::size_t k, const IntPoly &a, const IntPoly &b, std::size_t first_var)
{
    const BigInt ca = int_content(a), cb = int_content(b);
    const BigInt c = gcd(ca, cb);
    std::size_t var = k;
    for (std::size_t v = first_var; v < k && var == k; ++v) {
        for (const auto &[e, x] : a) {
            if (e[v] != 0) var = v;
        }
        for (const auto &[e, x] : b) {
            if (e[v] != 0) var = v;
        }
    }
    if (var == k) return IntPoly{{Exponent(k, 0), c}};

    IntPoly pa = a, pb = b;
    for (auto &[e, x] : pa) x /= ca;
    for (auto &[e, x] : pb) x /= cb;
    std::int64_t deg = 0;
    for (const IntPoly *p : {&pa, &pb}) {
        for (const auto &[e, x] : *p) deg = std::max(deg, e[var]);
    }
    BigInt xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        // Evaluated coefficients would get too large to be worth it.
        if (static_cast<double>(mpz_sizeinbase(xi.get_mpz_t(), 2)) * static_cast<double>(deg + 1) > 2e6) break;
        IntPoly fa = evaluate_at(pa, var, xi), fb = evaluate_at(pb, var, xi);
        if (!fa.empty() && !fb.empty()) {
            auto h = heuristic_gcd(k, fa, fb, var + 1);
            if (!h) return std::nullopt;
            IntPoly g = interpolate(*h, var, xi);
            const BigInt gc = int_content(g);
            if (gc != 0) {
                for (auto &[e, x] : g) x /= gc;
                if (int_divides(k, g, pa) && int_divides(k, g, pb)) {
                    for (auto &[e, x] : g) x *= c;
                    return g;
                }
            }
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

std::optional<LaurentPolynomial> heuristic_poly_gcd(const LaurentPolynomial &a, const LaurentPolynomial &b)
{
    auto g = heuristic_gcd(a.nvars(), integer_multiple(a), integer_multiple(b), 0);
    if (!g) return std::nullopt;
    return make_monic(from_int_poly(a.nvars(), *g));
}

// gcd of ordinary polynomials, monic under grlex.
LaurentPolynomial poly_gcd(const LaurentPolynomial &a, const LaurentPolynomial &b)
{
    const std::size_t k = a.nvars();
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return LaurentPolynomial::constant(k, 1);
    if (a.is_monomial() && b.is_monomial()) {
        Exponent e(k);
        for (std::size_t i = 0; i < k; ++i)
            e[i] = std::min(a.terms()[0].exponent[i], b.terms()[0].exponent[i]);
        return LaurentPolynomial::monomial(std::move(e));
    }
    if (a == b) return make_monic(a);

    auto vars = active_vars(a, b);
    // Cheap divisibility shortcut.
    if (a.size() <= b.size()) {
        if (poly_divide_exact(b, a)) return make_monic(a);
    } else if (poly_divide_exact(a, b)) {
        return make_monic(b);
    }
    if (auto h = heuristic_poly_gcd(a, b)) return *h;
    if (vars.size() == 1) return univariate_gcd(a, b, vars[0]);

    // Main variable: lowest combined degree among variables both involve;
    // a variable only one side involves is stripped through its content.
    std::size_t var = vars[0];
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (auto v : vars) {
        bool both = a.involves(v) && b.involves(v);
        std::int64_t score = a.degree_in(v) + b.degree_in(v) + (both ? 0 : -1000000);
        if (score < best) {
            best = score;
            var = v;
        }
    }
    LaurentPolynomial ca = a.involves(var) ? content_in(a, var) : make_monic(a);
    LaurentPolynomial cb = b.involves(var) ? content_in(b, var) : make_monic(b);
    LaurentPolynomial c = poly_gcd(ca, cb);
    if (!a.involves(var) || !b.involves(var)) return c;
    LaurentPolynomial pa = exact_or_throw(a, ca);
    LaurentPolynomial pb = exact_or_throw(b, cb);
    if (pa.degree_in(var) == 0 || pb.degree_in(var) == 0) return c;
    LaurentPolynomial h = subresultant_gcd(pa, pb, var);
    if (h.is_constant()) return c;
    LaurentPolynomial ph = exact_or_throw(h, content_in(h, var));
    return make_monic(c * ph);
}

} // namespace

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial &a, const LaurentPolynomial &b)
{
    check_vars(a, b);
    if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
    if (a.is_zero()) return LaurentPolynomial(a.nvars());
    Exponent ma = a.min_exponents(), mb = b.min_exponents();
    auto q = poly_divide_exact(strip_monomial(a), strip_monomial(b));
    if (!q) return std::nullopt;
    Exponent shift(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) shift[i] = ma[i] - mb[i];
    return q->shifted(shift);
}

LaurentPolynomial monic_gcd(const LaurentPolynomial &a, const LaurentPolynomial &b)
{
    check_vars(a, b);
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    return strip_monomial(poly_gcd(strip_monomial(a), strip_monomial(b)));
}

LaurentPolynomial multivariate_gcd(const LaurentPolynomial &a, const LaurentPolynomial &b)
{
    return canonical_form(monic_gcd(a, b));
}

LaurentPolynomial canonical_form(const LaurentPolynomial &p)
{
    if (p.is_zero()) return p;
    BigInt den = 1, num = 0;
    for (const auto &t : p.terms()) {
        den = lcm(den, t.coeff.get_den());
        num = gcd(num, t.coeff.get_num());
    }
    Rational scale = make_rational(den, num);
    LaurentPolynomial q = strip_monomial(p).scaled(scale);
    if (q.leading_coeff() < 0) q = -q;
    return q;
}

std::set<Exponent> newton_polytope_support(const LaurentPolynomial &p)
{
    std::set<Exponent> s;
    for (const auto &t : p.terms()) s.insert(t.exponent);
    return s;
}

} // namespace ordalex
