#include <ordalex/verdicts.hpp>

#include <ordalex/alexander.hpp>
#include <ordalex/errors.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace ordalex
{

std::int64_t presentation_deficiency(const GroupPresentation &p)
{
    return static_cast<std::int64_t>(p.generator_count()) - static_cast<std::int64_t>(p.relator_count());
}

bool knot_like(const GroupPresentation &p)
{
    if (presentation_deficiency(p) < 1) return false;
    AlexanderData data = alexander_data(p);
    if (data.abelian.betti != 1 || !data.abelian.torsion.empty()) return false;
    Rational at_one = 0;
    for (const auto &t : data.delta.terms()) at_one += t.coeff;
    return at_one == 1 || at_one == -1;
}

IntVector class_from_coordinates(const Abelianization &ab, const IntVector &coords)
{
    if (coords.size() != ab.betti) throw invalid_input("class has the wrong number of coordinates");
    IntVector out;
    for (const auto &proj : ab.projection) {
        BigInt s = 0;
        for (std::size_t j = 0; j < ab.betti; ++j) s += coords[j] * proj[j];
        out.push_back(s);
    }
    return out;
}

IntVector default_class(const GroupPresentation &p)
{
    Abelianization ab = abelianization(p);
    if (ab.betti != 1) {
        throw invalid_input("a class must be given when beta_1 = " + std::to_string(ab.betti));
    }
    IntVector v = class_from_coordinates(ab, IntVector{BigInt(1)});
    auto first = std::find_if(v.begin(), v.end(), [](const BigInt &x) { return x != 0; });
    if (first != v.end() && *first < 0) {
        for (auto &x : v) x = -x;
    }
    return v;
}

// --- obstructions ----------------------------------------------------------

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::no_obstruction: return "no_obstruction";
    case Verdict::def_nonpositive_and_not_3manifold: return "def_nonpositive_and_not_3manifold";
    case Verdict::not_3manifold_with_nonsphere_boundary: return "not_3manifold_with_nonsphere_boundary";
    case Verdict::not_any_3manifold: return "not_any_3manifold";
    }
    return "unknown";
}

Verdict classify(bool initial, std::int64_t delta_lambda, std::int64_t delta_gamma)
{
    if (!initial) return delta_lambda < delta_gamma ? Verdict::def_nonpositive_and_not_3manifold
                                                    : Verdict::no_obstruction;
    if (delta_lambda < delta_gamma - 2) return Verdict::not_any_3manifold;
    if (delta_lambda < delta_gamma - 1) return Verdict::not_3manifold_with_nonsphere_boundary;
    return Verdict::no_obstruction;
}

ObstructionVerdict three_manifold_obstruction(const AdmissibleTriple &triple, const DegreeReport &lambda,
                                              const DegreeReport &gamma)
{
    if (lambda.psi != gamma.psi) throw invalid_input("the two degree reports are for different classes");
    ObstructionVerdict v;
    v.initial = triple.initial;
    v.delta_lambda = lambda.delta;
    v.delta_gamma = gamma.delta;
    v.k_lambda = triple.lambda.k();
    v.k_gamma = triple.gamma.k();
    v.verdict = classify(triple.initial, lambda.delta, gamma.delta);
    return v;
}

AdmissibleTriple default_triple(const GroupPresentation &p, const CohomologyClass &psi)
{
    const std::size_t betti = abelianization(p).betti;
    if (betti == 0) throw invalid_input("beta_1 = 0: there is no nonzero class");
    CoefficientSystem lambda = betti == 1 ? build_metabelian_system(p, psi) : abelian_system(p, psi);
    CoefficientSystem gamma{PfaTower(), {}};
    for (const auto &v : psi.values) gamma.images.push_back(TowerElement{{}, to_int64(v)});
    const std::size_t kl = lambda.k();
    return make_triple(p, std::move(lambda), std::move(gamma), IntMatrix(0, kl), true);
}

// --- monotonicity ----------------------------------------------------------

std::size_t MonotonicityReport::violations() const
{
    if (!certified) return 0;
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const MonotonicityRow &r) { return !r.deficiency_form; }));
}

MonotonicityReport monotonicity_check(const GroupPresentation &p, const std::vector<AdmissibleTriple> &triples)
{
    MonotonicityReport rep;
    rep.deficiency = presentation_deficiency(p);
    rep.certified = rep.deficiency >= 1;
    for (const auto &t : triples) {
        MonotonicityRow row;
        row.initial = t.initial;
        row.delta_lambda = gamma_degree(p, t.lambda).delta;
        row.delta_gamma = gamma_degree(p, t.gamma).delta;
        const std::int64_t slack = t.initial ? 1 : 0;
        row.deficiency_form = row.delta_lambda >= row.delta_gamma - slack;
        row.closed_form = row.delta_lambda >= row.delta_gamma - (t.initial ? 2 : 0);
        rep.rows.push_back(row);
    }
    return rep;
}

// --- bounds ----------------------------------------------------------------

BoundReport thurston_genus_bounds(const std::vector<LevelReport> &reports, std::size_t betti, bool knot_like)
{
    if (reports.empty()) throw invalid_input("no degree reports to bound from");
    BoundReport b;
    for (const auto &[level, r] : reports) {
        if (betti == 1 && level == 0) {
            b.thurston.push_back(ThurstonBound{0, r.delta - 1, "beta3=0"});
            b.thurston.push_back(ThurstonBound{0, r.delta - 2, "beta3=1"});
            b.beta3 = "both";
        } else {
            b.thurston.push_back(ThurstonBound{level, r.delta, ""});
        }
        if (!knot_like) continue;
        std::optional<Rational> g;
        if (level == 0) g = Rational(r.delta, 2);
        else if (r.delta >= 1) g = Rational(r.delta + 1, 2);
        if (g) {
            g->canonicalize();
            if (!b.genus || *g > *b.genus) b.genus = g;
        }
    }
    return b;
}

// --- epimorphisms ----------------------------------------------------------

namespace
{

IntVector exponent_sums(const FreeWord &w, std::size_t n)
{
    IntVector v(n, BigInt(0));
    for (const auto &l : w.letters()) v[l.generator] += BigInt(static_cast<long>(l.exponent));
    return v;
}

FreeWord substitute_word(const FreeWord &w, const std::vector<FreeWord> &images)
{
    FreeWord out;
    for (const auto &l : w.letters()) out = out * power(images.at(l.generator), l.exponent);
    return out;
}

BigInt class_value(const IntVector &psi, const FreeWord &w)
{
    BigInt s = 0;
    for (const auto &l : w.letters()) s += psi.at(l.generator) * BigInt(static_cast<long>(l.exponent));
    return s;
}

} // namespace

ComparisonReport epimorphism_compare(const GroupPresentation &x, const GroupPresentation &y,
                                     const std::vector<FreeWord> &images, int level, const IntVector &psi_target)
{
    if (images.size() != x.generator_count()) throw invalid_input("the map must give an image for every generator");
    const std::size_t gy = y.generator_count();
    std::vector<IntVector> rel_y;
    for (const auto &r : y.relators()) rel_y.push_back(exponent_sums(r, gy));
    const auto basis = lattice_basis(rel_y, gy);
    for (std::size_t r = 0; r < x.relator_count(); ++r) {
        auto extended = rel_y;
        extended.push_back(exponent_sums(substitute_word(x.relators()[r], images), gy));
        if (lattice_basis(extended, gy) != basis) {
            throw invalid_input("relator " + std::to_string(r + 1) +
                                " of the source is not trivial in H_1 of the target");
        }
    }
    Abelianization ax = abelianization(x), ay = abelianization(y);
    if (ax.betti != ay.betti) {
        throw invalid_input("beta_1 differs: " + std::to_string(ax.betti) + " vs " + std::to_string(ay.betti));
    }
    // H_1 / torsion must map onto H_1 / torsion.
    std::vector<IntVector> img;
    for (const auto &w : images) {
        IntVector s = exponent_sums(w, gy), v(ay.betti, BigInt(0));
        for (std::size_t j = 0; j < gy; ++j)
            for (std::size_t b = 0; b < ay.betti; ++b) v[b] += s[j] * ay.projection[j][b];
        img.push_back(std::move(v));
    }
    if (ay.betti > 0) {
        auto ib = lattice_basis(img, ay.betti);
        bool unit = ib.size() == ay.betti;
        for (std::size_t i = 0; unit && i < ib.size(); ++i)
            for (std::size_t j = 0; j < ay.betti; ++j) unit = unit && ib[i][j] == (i == j ? 1 : 0);
        if (!unit) throw invalid_input("the map is not onto the torsion-free abelianization of the target");
    }

    validate_class(y, psi_target);
    ComparisonReport rep;
    rep.level = level;
    rep.psi_target = psi_target;
    for (const auto &w : images) rep.psi_source.push_back(class_value(psi_target, w));
    validate_class(x, rep.psi_source);
    if (delta_n(x, rep.psi_source, 0).rank != 0) throw invalid_input("the source has r_0 > 0 for the pulled-back class");
    rep.delta_target = delta_n(y, psi_target, level).delta;
    rep.delta_source = delta_n(x, rep.psi_source, level).delta;
    rep.pass = rep.delta_source >= rep.delta_target;
    if (rep.pass && knot_like(x)) {
        if (level == 0) rep.source_genus = Rational(rep.delta_target, 2);
        else if (rep.delta_target >= 1) rep.source_genus = Rational(rep.delta_target + 1, 2);
        if (rep.source_genus) rep.source_genus->canonicalize();
    }
    return rep;
}

std::vector<FreeWord> parse_generator_map(std::string_view text, const GroupPresentation &x,
                                          const GroupPresentation &y)
{
    std::vector<std::optional<FreeWord>> out(x.generator_count());
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw parse_error("expected 'name: word'", lineno, 1);
        std::string name = line.substr(0, colon);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        const std::size_t idx = x.index_of(name);
        if (idx == x.generator_count()) throw parse_error("unknown source generator '" + name + "'", lineno, 1);
        if (out[idx]) throw parse_error("generator '" + name + "' mapped twice", lineno, 1);
        try {
            out[idx] = parse_word(line.substr(colon + 1), y.generators());
        } catch (const parse_error &e) {
            throw parse_error(std::string("in the image of '") + name + "': " + e.what(), lineno,
                              static_cast<int>(colon) + 1 + e.column());
        }
    }
    std::vector<FreeWord> words;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!out[i]) throw invalid_input("no image given for generator '" + x.generators()[i] + "'");
        words.push_back(*out[i]);
    }
    return words;
}

// --- corpus ----------------------------------------------------------------

namespace
{

FreeWord random_reduced_word(std::mt19937_64 &rng, std::size_t length)
{
    std::uniform_int_distribution<int> first(0, 3), next(0, 2);
    FreeWord w;
    int prev = -1;
    for (std::size_t i = 0; i < length; ++i) {
        int letter = prev < 0 ? first(rng) : next(rng);
        // Letters 0..3 are x, x^-1, y, y^-1; skip the inverse of the previous one.
        if (prev >= 0 && letter >= (prev ^ 1)) ++letter;
        w = w * FreeWord::generator(static_cast<std::size_t>(letter / 2), letter % 2 ? -1 : 1);
        prev = letter;
    }
    return w;
}

} // namespace

CorpusEntry corpus_entry(const GroupPresentation &p, std::size_t index)
{
    static const std::vector<IntVector> cross_classes = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}};
    AlexanderData data = alexander_data(p);
    if (data.abelian.betti == 0) throw invalid_input("beta_1 = 0");
    CorpusEntry e;
    e.index = index;
    e.presentation = render(p);
    e.betti = data.abelian.betti;
    if (e.betti == 1) {
        e.psi = default_class(p);
        CohomologyClass c = validate_class(p, e.psi);
        e.delta0 = delta_n(p, e.psi, 0).delta;
        try {
            if (build_metabelian_system(p, c).k() == 0) {
                // Trivial Alexander module: Gamma_1 = Gamma_0 = Z.
                e.delta1 = e.delta0;
            } else {
                auto rep = monotonicity_check(p, {default_triple(p, c)});
                e.delta1 = rep.rows[0].delta_lambda;
                if (rep.rows[0].delta_gamma != e.delta0) throw invariant_violation("level 0 disagrees with the triple");
                e.chain_pass = rep.violations() == 0;
            }
        } catch (const unsupported &) {
        }
        return e;
    }
    if (e.betti != 2) return e;
    for (const auto &coords : cross_classes) {
        IntVector psi = class_from_coordinates(data.abelian, coords);
        auto r = delta_n(p, psi, 0);
        if (coords == cross_classes.front()) {
            e.psi = psi;
            e.delta0 = r.delta;
            auto rep = monotonicity_check(p, {default_triple(p, validate_class(p, psi))});
            e.chain_pass = rep.violations() == 0;
        }
        if (r.rank != 0) continue;
        ++e.cross_checked;
        if (data.delta.is_zero() || BigInt(static_cast<long>(r.delta)) != alexander_norm(data.delta, coords)) {
            ++e.cross_mismatches;
        }
    }
    return e;
}

namespace
{

void add_entry(CorpusSummary &s, CorpusEntry e)
{
    if (e.delta1) ++s.computable;
    if (!e.chain_pass) ++s.violations;
    s.cross_checked += e.cross_checked;
    s.cross_mismatches += e.cross_mismatches;
    s.entries.push_back(std::move(e));
}

} // namespace

CorpusSummary run_corpus(std::uint64_t seed, std::size_t target, std::size_t max_relator_length,
                         std::size_t max_attempts)
{
    CorpusSummary s;
    s.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> len(1, max_relator_length);
    while (s.computable < target && s.generated < max_attempts) {
        ++s.generated;
        GroupPresentation p({"x", "y"}, {random_reduced_word(rng, len(rng))});
        if (abelianization(p).betti == 0) {
            ++s.discarded;
            continue;
        }
        add_entry(s, corpus_entry(p, s.entries.size()));
    }
    return s;
}

CorpusSummary run_commutator_corpus(std::uint64_t seed, std::size_t count, std::size_t max_relator_length)
{
    CorpusSummary s;
    s.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> len(1, max_relator_length / 2);
    while (s.entries.size() < count) {
        ++s.generated;
        FreeWord w = random_reduced_word(rng, 2 * len(rng));
        if (w.exponent_sum(0) != 0 || w.exponent_sum(1) != 0 || w.empty()) {
            ++s.discarded;
            continue;
        }
        add_entry(s, corpus_entry(GroupPresentation({"x", "y"}, {w}), s.entries.size()));
    }
    return s;
}

} // namespace ordalex
