#include <ordalex/presentation.hpp>

#include <ordalex/errors.hpp>

#include <random>
#include <set>
#include <sstream>

namespace ordalex
{

FreeWord FreeWord::generator(std::size_t i, std::int64_t exponent)
{
    if (exponent == 0) return FreeWord{};
    return FreeWord({Letter{i, exponent}});
}

std::int64_t FreeWord::length() const
{
    std::int64_t n = 0;
    for (const auto &l : letters_) n += l.exponent < 0 ? -l.exponent : l.exponent;
    return n;
}

std::int64_t FreeWord::exponent_sum(std::size_t i) const
{
    std::int64_t n = 0;
    for (const auto &l : letters_) {
        if (l.generator == i) n += l.exponent;
    }
    return n;
}

FreeWord FreeWord::inverse() const
{
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto &l : out) l.exponent = -l.exponent;
    return FreeWord(std::move(out));
}

FreeWord free_reduce(const FreeWord &w)
{
    std::vector<Letter> stack;
    stack.reserve(w.letters().size());
    for (const auto &l : w.letters()) {
        if (l.exponent == 0) continue;
        if (!stack.empty() && stack.back().generator == l.generator) {
            stack.back().exponent += l.exponent;
            if (stack.back().exponent == 0) stack.pop_back();
        } else {
            stack.push_back(l);
        }
    }
    return FreeWord(std::move(stack));
}

FreeWord operator*(const FreeWord &a, const FreeWord &b)
{
    std::vector<Letter> letters = a.letters();
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return free_reduce(FreeWord(std::move(letters)));
}

FreeWord power(const FreeWord &w, std::int64_t n)
{
    FreeWord base = n < 0 ? w.inverse() : w;
    if (n < 0) n = -n;
    if (base.letters().size() == 1) {
        const Letter &l = base.letters()[0];
        return FreeWord::generator(l.generator, l.exponent * n);
    }
    FreeWord out;
    for (std::int64_t i = 0; i < n; ++i) out = out * base;
    return out;
}

FreeWord commutator(const FreeWord &a, const FreeWord &b)
{
    return a * b * a.inverse() * b.inverse();
}

GroupPresentation::GroupPresentation(std::vector<std::string> generators, std::vector<FreeWord> relators)
    : generators_(std::move(generators))
{
    std::set<std::string> seen;
    for (const auto &g : generators_) {
        if (!seen.insert(g).second) throw invalid_input("duplicate generator '" + g + "'");
    }
    relators_.reserve(relators.size());
    for (auto &r : relators) {
        for (const auto &l : r.letters()) {
            if (l.generator >= generators_.size()) throw invalid_input("relator references an undeclared generator");
        }
        relators_.push_back(free_reduce(r));
    }
}

std::size_t GroupPresentation::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i] == name) return i;
    }
    return generators_.size();
}

// --- free group ring -------------------------------------------------------

FreeGroupRingElement FreeGroupRingElement::word(const FreeWord &w, const BigInt &c)
{
    FreeGroupRingElement e;
    e.add(w, c);
    return e;
}

void FreeGroupRingElement::add(const FreeWord &w, const BigInt &c)
{
    if (c == 0) return;
    FreeWord key = free_reduce(w);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

FreeGroupRingElement &FreeGroupRingElement::operator+=(const FreeGroupRingElement &b)
{
    for (const auto &[w, c] : b.terms_) add(w, c);
    return *this;
}

FreeGroupRingElement &FreeGroupRingElement::operator-=(const FreeGroupRingElement &b)
{
    for (const auto &[w, c] : b.terms_) add(w, -c);
    return *this;
}

FreeGroupRingElement operator*(const FreeGroupRingElement &a, const FreeGroupRingElement &b)
{
    FreeGroupRingElement out;
    for (const auto &[u, c] : a.terms_) {
        for (const auto &[v, d] : b.terms_) out.add(u * v, c * d);
    }
    return out;
}

std::string FreeGroupRingElement::to_string(const std::vector<std::string> &names) const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[w, c] : terms_) {
        BigInt a = c;
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        first = false;
        if (a < 0) a = -a;
        if (w.empty()) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << render_word(w, names);
    }
    return os.str();
}

// --- Fox calculus ----------------------------------------------------------

FreeGroupRingElement fox_derivative(const FreeWord &w, std::size_t i)
{
    FreeGroupRingElement d;
    FreeWord prefix;
    for (const auto &l : w.letters()) {
        if (l.generator == i) {
            if (l.exponent > 0) {
                for (std::int64_t k = 0; k < l.exponent; ++k) d.add(prefix * FreeWord::generator(i, k), 1);
            } else {
                for (std::int64_t k = 1; k <= -l.exponent; ++k) d.add(prefix * FreeWord::generator(i, -k), -1);
            }
        }
        prefix = prefix * FreeWord({l});
    }
    return d;
}

Matrix<FreeGroupRingElement> fox_jacobian(const GroupPresentation &p)
{
    Matrix<FreeGroupRingElement> j(p.relator_count(), p.generator_count());
    for (std::size_t r = 0; r < p.relator_count(); ++r) {
        for (std::size_t g = 0; g < p.generator_count(); ++g) j(r, g) = fox_derivative(p.relators()[r], g);
    }
    return j;
}

// --- Tietze moves ----------------------------------------------------------

namespace
{

FreeWord random_word(std::mt19937_64 &rng, std::size_t gens, std::size_t min_len, std::size_t max_len)
{
    std::uniform_int_distribution<std::size_t> len_d(min_len, max_len);
    std::uniform_int_distribution<std::size_t> gen_d(0, gens - 1);
    std::uniform_int_distribution<int> sign_d(0, 1);
    FreeWord w;
    const std::size_t len = len_d(rng);
    while (static_cast<std::size_t>(w.length()) < len) {
        w = w * FreeWord::generator(gen_d(rng), sign_d(rng) ? 1 : -1);
    }
    return w;
}

} // namespace

TietzeResult tietze_perturb_traced(const GroupPresentation &p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::string> names = p.generators();
    std::vector<FreeWord> rels = p.relators();
    std::vector<FreeWord> defs;
    const std::size_t original = names.size();

    std::uniform_int_distribution<int> count_d(2, 5);
    const int moves = count_d(rng);
    for (int m = 0; m < moves; ++m) {
        std::uniform_int_distribution<int> kind_d(0, 3);
        int kind = kind_d(rng);
        if (rels.empty() && kind != 3) kind = 3;
        if (kind == 2 && rels.size() < 2) kind = 0;
        if (kind == 3 && defs.size() >= 2) kind = 0;
        if (rels.empty() && kind != 3) continue;
        std::uniform_int_distribution<std::size_t> rel_d(0, rels.empty() ? 0 : rels.size() - 1);
        switch (kind) {
        case 0: { // conjugate a relator by a generator
            std::size_t r = rel_d(rng);
            FreeWord c = random_word(rng, names.size(), 1, 1);
            rels[r] = c * rels[r] * c.inverse();
            break;
        }
        case 1: { // invert a relator
            std::size_t r = rel_d(rng);
            rels[r] = rels[r].inverse();
            break;
        }
        case 2: { // multiply one relator by another
            std::size_t a = rel_d(rng), b = rel_d(rng);
            if (a == b) b = (a + 1) % rels.size();
            std::uniform_int_distribution<int> side_d(0, 1);
            rels[a] = side_d(rng) ? rels[a] * rels[b] : rels[a] * rels[b].inverse();
            break;
        }
        default: { // add a generator y with relator y w^-1
            FreeWord w = random_word(rng, original, 1, 3);
            std::string name;
            for (std::size_t k = defs.size();; ++k) {
                name = "tz" + std::to_string(k);
                bool clash = false;
                for (const auto &n : names) clash = clash || n == name;
                if (!clash) break;
            }
            const std::size_t idx = names.size();
            names.push_back(name);
            rels.push_back(FreeWord::generator(idx) * w.inverse());
            defs.push_back(w);
            break;
        }
        }
    }
    return TietzeResult{GroupPresentation(std::move(names), std::move(rels)), std::move(defs)};
}

GroupPresentation tietze_perturb(const GroupPresentation &p, std::uint64_t seed)
{
    return tietze_perturb_traced(p, seed).presentation;
}

} // namespace ordalex
