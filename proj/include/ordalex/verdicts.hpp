#ifndef ORDALEX_VERDICTS_HPP
#define ORDALEX_VERDICTS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <ordalex/degree.hpp>
#include <ordalex/presentation.hpp>
#include <ordalex/systems.hpp>

namespace ordalex
{

std::int64_t presentation_deficiency(const GroupPresentation &p);

// beta_1 = 1, torsion-free H_1, deficiency >= 1 and |Delta(1)| = 1.
bool knot_like(const GroupPresentation &p);

// Values on the generators of the class with the given coordinates in
// H^1(G) = Hom(Z^betti, Z) (the coordinates of abelianization()).
IntVector class_from_coordinates(const Abelianization &ab, const IntVector &coords);
// The generator of H^1 for beta_1 = 1, oriented so its first nonzero value is positive.
IntVector default_class(const GroupPresentation &p);

// --- obstructions ----------------------------------------------------------

enum class Verdict {
    no_obstruction,
    def_nonpositive_and_not_3manifold,
    not_3manifold_with_nonsphere_boundary,
    not_any_3manifold,
};

std::string to_string(Verdict v);
Verdict classify(bool initial, std::int64_t delta_lambda, std::int64_t delta_gamma);

struct ObstructionVerdict {
    Verdict verdict = Verdict::no_obstruction;
    bool initial = false;
    std::int64_t delta_lambda = 0, delta_gamma = 0;
    std::size_t k_lambda = 0, k_gamma = 0;
};

// Throws invalid_input when the reports were computed for different classes.
ObstructionVerdict three_manifold_obstruction(const AdmissibleTriple &triple, const DegreeReport &lambda,
                                              const DegreeReport &gamma);

// (Z^m, Z) for beta_1 >= 2, (Gamma_1, Gamma_0) for beta_1 = 1.
AdmissibleTriple default_triple(const GroupPresentation &p, const CohomologyClass &psi);

// --- monotonicity ----------------------------------------------------------

struct MonotonicityRow {
    std::int64_t delta_lambda = 0, delta_gamma = 0;
    bool initial = false;
    // delta_lambda >= delta_gamma - slack with slack 1 (initial) or 0.
    bool deficiency_form = false;
    // Same with slack 2 for initial triples.
    bool closed_form = false;
};

struct MonotonicityReport {
    std::int64_t deficiency = 0;
    // Presentation deficiency >= 1, so the deficiency form must hold.
    bool certified = false;
    std::vector<MonotonicityRow> rows;

    // A failure of the deficiency form under a certified hypothesis.
    std::size_t violations() const;
};

MonotonicityReport monotonicity_check(const GroupPresentation &p, const std::vector<AdmissibleTriple> &triples);

// --- bounds ----------------------------------------------------------------

struct ThurstonBound {
    int level = 0;
    std::int64_t bound = 0;
    // Empty, or "beta3=0" / "beta3=1" for the exceptional level-0 case.
    std::string tag;
};

struct BoundReport {
    std::vector<ThurstonBound> thurston;
    std::optional<Rational> genus;
    // "none" or "both" (both values of beta_3 reported).
    std::string beta3 = "none";
};

struct LevelReport {
    int level = 0;
    DegreeReport report;
};

BoundReport thurston_genus_bounds(const std::vector<LevelReport> &reports, std::size_t betti, bool knot_like);

// --- epimorphisms ----------------------------------------------------------

struct ComparisonReport {
    int level = 0;
    IntVector psi_target;
    IntVector psi_source; // pulled back
    std::int64_t delta_target = 0, delta_source = 0;
    bool pass = false;
    std::optional<Rational> source_genus;
};

// From X onto Y; images[i] is the word in Y's generators for X's generator i.
// Only the abelianization-level consistency of the map is verified.
ComparisonReport epimorphism_compare(const GroupPresentation &x, const GroupPresentation &y,
                                     const std::vector<FreeWord> &images, int level, const IntVector &psi_target);

// Lines "name: word" for every generator of x.
std::vector<FreeWord> parse_generator_map(std::string_view text, const GroupPresentation &x,
                                          const GroupPresentation &y);

// --- corpus ----------------------------------------------------------------

struct CorpusEntry {
    std::size_t index = 0;
    std::string presentation;
    std::size_t betti = 0;
    IntVector psi;
    std::int64_t delta0 = 0;
    std::optional<std::int64_t> delta1; // when the metabelian system exists
    bool chain_pass = true;
    // beta_1 >= 2 entries: classes with r_0 = 0 checked against the Alexander norm.
    std::size_t cross_checked = 0, cross_mismatches = 0;
};

struct CorpusSummary {
    std::uint64_t seed = 0;
    std::size_t generated = 0, discarded = 0;
    std::size_t computable = 0; // entries with delta1
    std::size_t violations = 0;
    std::size_t cross_checked = 0, cross_mismatches = 0;
    std::vector<CorpusEntry> entries;
};

// Degrees, chain check and (beta_1 = 2) Alexander-norm cross-check for one
// presentation with beta_1 >= 1.
CorpusEntry corpus_entry(const GroupPresentation &p, std::size_t index);

// Random 2-generator 1-relator presentations until `target` entries have a
// computable delta-bar_1 (or max_attempts presentations were drawn).
CorpusSummary run_corpus(std::uint64_t seed, std::size_t target, std::size_t max_relator_length = 12,
                         std::size_t max_attempts = 20000);

// `count` presentations whose relator has zero exponent sums (beta_1 = 2).
CorpusSummary run_commutator_corpus(std::uint64_t seed, std::size_t count, std::size_t max_relator_length = 16);

} // namespace ordalex

#endif
