#include <ordalex/systems.hpp>

#include <ordalex/errors.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace ordalex
{

// --- abelianization and classes ----------------------------------------------

namespace
{

IntMatrix abelianized_relators(const GroupPresentation &p)
{
    IntMatrix r(p.relator_count(), p.generator_count(), BigInt(0));
    for (std::size_t i = 0; i < p.relator_count(); ++i) {
        for (const auto &l : p.relators()[i].letters()) r(i, l.generator) += static_cast<long>(l.exponent);
    }
    return r;
}

} // namespace

Abelianization abelianization(const GroupPresentation &p)
{
    const std::size_t g = p.generator_count();
    SmithForm f = smith_normal_form_Z(abelianized_relators(p));
    std::size_t rank = 0;
    Abelianization ab;
    for (const auto &d : f.diagonal) {
        if (d == 0) break;
        ++rank;
        if (d > 1) ab.torsion.push_back(d);
    }
    for (std::size_t j = rank; j < g; ++j) ab.free_columns.push_back(j);
    ab.betti = ab.free_columns.size();
    ab.projection.resize(g);
    for (std::size_t i = 0; i < g; ++i) {
        for (auto j : ab.free_columns) ab.projection[i].push_back(f.V(i, j));
    }
    ab.inverse_basis = unimodular_inverse(f.V);
    return ab;
}

CohomologyClass validate_class(const GroupPresentation &p, const IntVector &values)
{
    if (values.size() != p.generator_count()) {
        throw invalid_input("class has " + std::to_string(values.size()) + " values but the presentation has " +
                            std::to_string(p.generator_count()) + " generators");
    }
    for (std::size_t r = 0; r < p.relator_count(); ++r) {
        BigInt s = 0;
        for (const auto &l : p.relators()[r].letters()) s += values[l.generator] * static_cast<long>(l.exponent);
        if (s != 0) {
            throw invalid_input("class does not vanish on relator " + std::to_string(r + 1) + " (" +
                                render_word(p.relators()[r], p.generators()) + " maps to " + s.get_str() + ")");
        }
    }
    CohomologyClass c;
    c.values = values;
    c.multiplicity = gcd_of(values);
    c.primitive_values = values;
    if (c.multiplicity != 0) {
        for (auto &v : c.primitive_values) v /= c.multiplicity;
    }
    return c;
}

IntVector abelian_coordinates(const Abelianization &ab, const IntVector &values)
{
    IntVector full = mat_vec(ab.inverse_basis, values);
    IntVector out;
    for (auto j : ab.free_columns) out.push_back(full[j]);
    return out;
}

// --- towers ------------------------------------------------------------------

struct PfaTower::Cache {
    std::mutex mu;
    IntMatrix inverse;
    std::map<std::int64_t, IntMatrix> powers;
    std::map<std::int64_t, std::vector<std::vector<std::int64_t>>> powers64;
};

PfaTower::PfaTower(IntMatrix m) : m_(std::move(m)), cache_(std::make_shared<Cache>())
{
    if (m_.rows() != m_.cols()) throw invalid_input("monodromy must be square");
    if (m_.rows() == 0) {
        cache_->inverse = m_;
        return;
    }
    BigInt d = determinant(m_);
    if (d != 1 && d != -1) throw invalid_input("monodromy must have determinant +-1 (got " + d.get_str() + ")");
    cache_->inverse = unimodular_inverse(m_);
}

PfaTower PfaTower::endomorphism(IntMatrix m)
{
    if (m.rows() != m.cols()) throw invalid_input("monodromy must be square");
    BigInt d = m.rows() ? determinant(m) : BigInt(1);
    if (d == 1 || d == -1) return PfaTower(std::move(m));
    if (d == 0) throw invalid_input("monodromy must be nonsingular");
    PfaTower t;
    t.m_ = std::move(m);
    t.invertible_ = false;
    t.cache_ = std::make_shared<Cache>();
    return t;
}

PfaTower PfaTower::identity_tower(std::size_t k)
{
    return PfaTower(int_identity(k));
}

bool PfaTower::is_abelian() const
{
    return m_ == int_identity(k());
}

const IntMatrix &PfaTower::power(std::int64_t e) const
{
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->powers.find(e);
    if (it != cache_->powers.end()) return it->second;
    if (e < 0 && !invertible_) throw std::domain_error("negative power of a non-invertible monodromy");
    const IntMatrix &base = e < 0 ? cache_->inverse : m_;
    const std::int64_t step = e < 0 ? -1 : 1;
    IntMatrix acc = int_identity(k());
    cache_->powers.emplace(0, acc);
    if (e == 0) return cache_->powers.at(0);
    for (std::int64_t i = step;; i += step) {
        acc = multiply(acc, base, BigInt(0));
        cache_->powers.emplace(i, acc);
        if (i == e) break;
    }
    return cache_->powers.at(e);
}

const std::vector<std::vector<std::int64_t>> &PfaTower::power64(std::int64_t e) const
{
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->powers64.find(e);
        if (it != cache_->powers64.end()) return it->second;
    }
    const IntMatrix &m = power(e);
    std::vector<std::vector<std::int64_t>> out(k(), std::vector<std::int64_t>(k()));
    for (std::size_t i = 0; i < k(); ++i)
        for (std::size_t j = 0; j < k(); ++j) out[i][j] = to_int64(m(i, j));
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->powers64.emplace(e, std::move(out)).first->second;
}

TowerElement tower_identity(const PfaTower &t)
{
    return TowerElement{IntVector(t.k(), BigInt(0)), 0};
}

TowerElement tower_mul(const PfaTower &t, const TowerElement &a, const TowerElement &b)
{
    TowerElement out{a.v, a.e + b.e};
    IntVector w = mat_vec(t.power(a.e), b.v);
    for (std::size_t i = 0; i < t.k(); ++i) out.v[i] += w[i];
    return out;
}

TowerElement tower_inverse(const PfaTower &t, const TowerElement &a)
{
    TowerElement out{mat_vec(t.power(-a.e), a.v), -a.e};
    for (auto &x : out.v) x = -x;
    return out;
}

TowerElement tower_pow(const PfaTower &t, const TowerElement &a, std::int64_t n)
{
    TowerElement base = n < 0 ? tower_inverse(t, a) : a;
    std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    TowerElement acc = tower_identity(t);
    while (m) {
        if (m & 1u) acc = tower_mul(t, acc, base);
        m >>= 1u;
        if (m) base = tower_mul(t, base, base);
    }
    return acc;
}

// --- systems -----------------------------------------------------------------

IntVector CoefficientSystem::psi() const
{
    IntVector out;
    out.reserve(images.size());
    for (const auto &im : images) out.push_back(BigInt(static_cast<long>(im.e)));
    return out;
}

TowerElement evaluate(const CoefficientSystem &sys, const FreeWord &w)
{
    TowerElement acc = tower_identity(sys.tower);
    for (const auto &l : w.letters()) {
        acc = tower_mul(sys.tower, acc, tower_pow(sys.tower, sys.images.at(l.generator), l.exponent));
    }
    return acc;
}

void validate_system(const GroupPresentation &p, const CoefficientSystem &sys)
{
    if (sys.images.size() != p.generator_count()) {
        throw invalid_input("system has " + std::to_string(sys.images.size()) + " images but the presentation has " +
                            std::to_string(p.generator_count()) + " generators");
    }
    for (std::size_t i = 0; i < sys.images.size(); ++i) {
        if (sys.images[i].v.size() != sys.k()) {
            throw invalid_input("image of " + p.generators()[i] + " has the wrong fiber dimension");
        }
    }
    const TowerElement one = tower_identity(sys.tower);
    for (std::size_t r = 0; r < p.relator_count(); ++r) {
        if (!(evaluate(sys, p.relators()[r]) == one)) {
            throw invalid_input("relator " + std::to_string(r + 1) + " (" +
                                render_word(p.relators()[r], p.generators()) + ") is not trivial in the tower");
        }
    }
}

bool check_surjective(const CoefficientSystem &sys)
{
    const PfaTower &t = sys.tower;
    const std::size_t k = t.k();
    // mu with t-exponent 1 as a product of generator images.
    BigInt g = 0;
    std::vector<BigInt> coef(sys.images.size(), BigInt(0));
    for (std::size_t i = 0; i < sys.images.size(); ++i) {
        BigInt s, u;
        BigInt e(static_cast<long>(sys.images[i].e));
        BigInt ng = extended_gcd(g, e, s, u);
        for (std::size_t j = 0; j < i; ++j) coef[j] *= s;
        coef[i] = u;
        g = ng;
    }
    if (g != 1) return false;
    if (k == 0) return true;

    TowerElement mu = tower_identity(t);
    for (std::size_t i = 0; i < sys.images.size(); ++i) {
        mu = tower_mul(t, mu, tower_pow(t, sys.images[i], to_int64(coef[i])));
    }
    std::vector<IntVector> gens;
    for (const auto &im : sys.images) gens.push_back(tower_mul(t, im, tower_pow(t, mu, -im.e)).v);

    std::vector<IntVector> basis = lattice_basis(gens, k);
    for (;;) {
        std::vector<IntVector> next = basis;
        for (const auto &b : basis) {
            next.push_back(mat_vec(t.power(1), b));
            next.push_back(mat_vec(t.power(-1), b));
        }
        next = lattice_basis(next, k);
        if (next == basis) break;
        basis = std::move(next);
    }
    // The Hermite basis of Z^k is the standard one.
    if (basis.size() != k) return false;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (basis[i][j] != (i == j ? 1 : 0)) return false;
        }
    }
    return true;
}

CoefficientSystem abelian_system(const GroupPresentation &p, const CohomologyClass &psi)
{
    if (psi.values.size() != p.generator_count()) throw invalid_input("class length does not match generators");
    validate_class(p, psi.values);
    if (!psi.is_primitive()) {
        throw invalid_input(psi.is_zero() ? "class is zero" : "class is not primitive (gcd " +
                                                                  psi.multiplicity.get_str() + ")");
    }
    Abelianization ab = abelianization(p);
    const std::size_t m = ab.betti;
    IntVector coords = abelian_coordinates(ab, psi.values);

    // Unimodular P whose last row is the class.
    IntMatrix rowm(1, m, BigInt(0));
    for (std::size_t j = 0; j < m; ++j) rowm(0, j) = coords[j];
    SmithForm f = smith_normal_form_Z(rowm);
    if (f.diagonal.empty() || f.diagonal[0] != 1) throw invariant_violation("primitive class has non-unit content");
    IntMatrix w = unimodular_inverse(f.V);
    const BigInt u = f.U(0, 0);
    IntMatrix pm(m, m, BigInt(0));
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) pm(i - 1, j) = w(i, j);
    for (std::size_t j = 0; j < m; ++j) pm(m - 1, j) = u * w(0, j);

    CoefficientSystem sys{PfaTower::identity_tower(m - 1), {}};
    for (std::size_t i = 0; i < p.generator_count(); ++i) {
        IntVector y = mat_vec(pm, ab.projection[i]);
        TowerElement im{IntVector(y.begin(), y.end() - 1), to_int64(y.back())};
        if (BigInt(static_cast<long>(im.e)) != psi.values[i]) throw invariant_violation("abelian system lost the class");
        sys.images.push_back(std::move(im));
    }
    validate_system(p, sys);
    return sys;
}

AdmissibleTriple make_triple(const GroupPresentation &p, CoefficientSystem lambda, CoefficientSystem gamma,
                             IntMatrix alpha, std::optional<bool> claimed_initial)
{
    validate_system(p, lambda);
    validate_system(p, gamma);
    const std::size_t kl = lambda.k(), kg = gamma.k();
    if (alpha.rows() != kg || alpha.cols() != kl) throw invalid_input("projection has the wrong shape");
    if (lambda.psi() != gamma.psi()) throw invalid_input("the two systems induce different classes");
    if (!(multiply(alpha, lambda.tower.monodromy(), BigInt(0)) == multiply(gamma.tower.monodromy(), alpha, BigInt(0)))) {
        throw invalid_input("projection does not commute with the monodromies");
    }
    for (std::size_t i = 0; i < lambda.images.size(); ++i) {
        if (mat_vec(alpha, lambda.images[i].v) != gamma.images[i].v) {
            throw invalid_input("projection does not carry the image of " + p.generators()[i] + " correctly");
        }
    }
    if (kg > 0) {
        SmithForm f = smith_normal_form_Z(alpha);
        for (const auto &d : f.diagonal) {
            if (d != 1) throw invalid_input("projection is not surjective");
        }
    }
    if (kg >= kl) throw invalid_input("projection is an isomorphism; a triple needs a proper quotient");
    const bool initial = kg == 0;
    if (claimed_initial && *claimed_initial != initial) {
        throw invalid_input(initial ? "triple is initial (gamma is Z) but was declared non-initial"
                                    : "triple was declared initial but gamma has a nontrivial fiber");
    }
    return AdmissibleTriple{std::move(lambda), std::move(gamma), std::move(alpha), initial};
}

std::pair<CoefficientSystem, AdmissibleTriple> intermediate_abelian_quotient(const GroupPresentation &p,
                                                                             const CoefficientSystem &sys,
                                                                             const IntMatrix &q)
{
    if (!sys.tower.is_abelian()) throw invalid_input("intermediate quotients need an abelian system");
    const std::size_t k = sys.k(), j = q.rows();
    if (q.cols() != k) throw invalid_input("quotient map has the wrong number of columns");
    if (j >= k) throw invalid_input("quotient rank must be smaller than the fiber rank");
    if (j > 0) {
        SmithForm f = smith_normal_form_Z(q);
        for (const auto &d : f.diagonal) {
            if (d != 1) throw invalid_input("quotient map is not surjective");
        }
    }
    CoefficientSystem out{PfaTower::identity_tower(j), {}};
    for (const auto &im : sys.images) out.images.push_back(TowerElement{mat_vec(q, im.v), im.e});
    AdmissibleTriple tr = make_triple(p, sys, out, q);
    return {std::move(out), std::move(tr)};
}

IntVector extend_class(const IntVector &values, const std::vector<FreeWord> &defs)
{
    IntVector out = values;
    for (const auto &w : defs) {
        BigInt s = 0;
        for (const auto &l : w.letters()) s += values.at(l.generator) * BigInt(static_cast<long>(l.exponent));
        out.push_back(s);
    }
    return out;
}

CoefficientSystem extend_system(const CoefficientSystem &sys, const std::vector<FreeWord> &defs)
{
    CoefficientSystem out = sys;
    for (const auto &w : defs) out.images.push_back(evaluate(sys, w));
    return out;
}

CoefficientSystem change_fiber_basis(const CoefficientSystem &sys, const IntMatrix &pm)
{
    IntMatrix pinv = unimodular_inverse(pm);
    IntMatrix m = multiply(multiply(pm, sys.tower.monodromy(), BigInt(0)), pinv, BigInt(0));
    CoefficientSystem out{PfaTower(std::move(m)), {}};
    for (const auto &im : sys.images) out.images.push_back(TowerElement{mat_vec(pm, im.v), im.e});
    return out;
}

// --- text format -------------------------------------------------------------

namespace
{

std::vector<std::string> tokens(const std::string &line)
{
    std::string spaced;
    for (char ch : line) {
        if (ch == ';' || ch == ':') {
            spaced += ' ';
            spaced += ch;
            spaced += ' ';
        } else {
            spaced += ch;
        }
    }
    std::istringstream is(spaced);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

BigInt integer_token(const std::string &tok, int line)
{
    BigInt v;
    std::string digits = tok[0] == '+' ? tok.substr(1) : tok;
    if (digits.empty() || v.set_str(digits, 10) != 0) throw parse_error("expected an integer, found '" + tok + "'", line, 1);
    return v;
}

} // namespace

CoefficientSystem parse_system(std::string_view text, const GroupPresentation &p)
{
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    std::optional<PfaTower> tower;
    std::vector<std::optional<TowerElement>> images(p.generator_count());
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        auto tok = tokens(raw);
        if (tok.empty()) continue;
        if (!tower) {
            BigInt kb = integer_token(tok[0], lineno);
            if (kb < 0 || kb > 64) throw parse_error("fiber rank out of range", lineno, 1);
            const std::size_t k = kb.get_ui();
            IntMatrix m(k, k, BigInt(0));
            std::size_t pos = 1;
            for (std::size_t i = 0; i < k; ++i) {
                if (i > 0) {
                    if (pos >= tok.size() || tok[pos] != ";") throw parse_error("expected ';' between monodromy rows", lineno, 1);
                    ++pos;
                }
                for (std::size_t j = 0; j < k; ++j) {
                    if (pos >= tok.size()) throw parse_error("monodromy row is too short", lineno, 1);
                    m(i, j) = integer_token(tok[pos++], lineno);
                }
            }
            if (pos != tok.size()) throw parse_error("unexpected text after the monodromy", lineno, 1);
            tower = PfaTower(std::move(m));
            continue;
        }
        if (tok.size() < 2 || tok[1] != ":") throw parse_error("expected 'name: v1 ... vk ; e'", lineno, 1);
        const std::size_t idx = p.index_of(tok[0]);
        if (idx == p.generator_count()) throw parse_error("unknown generator '" + tok[0] + "'", lineno, 1);
        if (images[idx]) throw parse_error("generator '" + tok[0] + "' given twice", lineno, 1);
        TowerElement im;
        std::size_t pos = 2;
        while (pos < tok.size() && tok[pos] != ";") im.v.push_back(integer_token(tok[pos++], lineno));
        if (pos + 2 != tok.size()) throw parse_error("expected '; e' at the end of the image", lineno, 1);
        im.e = to_int64(integer_token(tok[pos + 1], lineno));
        if (im.v.size() != tower->k()) throw parse_error("fiber vector has the wrong length", lineno, 1);
        images[idx] = std::move(im);
    }
    if (!tower) throw parse_error("missing tower line", lineno, 1);
    CoefficientSystem sys{*tower, {}};
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!images[i]) throw invalid_input("no image given for generator '" + p.generators()[i] + "'");
        sys.images.push_back(*images[i]);
    }
    validate_system(p, sys);
    return sys;
}

std::string render_system(const CoefficientSystem &sys, const GroupPresentation &p)
{
    std::ostringstream os;
    const std::size_t k = sys.k();
    os << k;
    for (std::size_t i = 0; i < k; ++i) {
        if (i) os << ';';
        for (std::size_t j = 0; j < k; ++j) os << ' ' << sys.tower.monodromy()(i, j).get_str();
    }
    os << '\n';
    for (std::size_t i = 0; i < sys.images.size(); ++i) {
        os << p.generators()[i] << ':';
        for (const auto &x : sys.images[i].v) os << ' ' << x.get_str();
        os << " ; " << sys.images[i].e << '\n';
    }
    return os.str();
}

} // namespace ordalex
