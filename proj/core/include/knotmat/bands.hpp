#pragma once

#include <knotmat/seifert.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace knotmat {

enum class RungSign { Over, Under };

// Horizontal band between strands `pair` and `pair`+1 (1-based), placed at
// `height` counted downward from the top of the ladder.
struct Rung {
    unsigned pair = 1;
    unsigned height = 0;
    RungSign sign = RungSign::Under;
};

// Vertical strands joined by ordered rungs, each strand closed top-to-bottom
// onto itself. Base floors seed the numbering walk; defaults are (2,1) for
// two strands and 1 + min(i-1, s-i) otherwise, which gives the usual
// side-1/centre-2 assignment on three strands.
class LadderDiagram {
public:
    LadderDiagram(unsigned strands, std::vector<Rung> rungs, std::vector<int> base_floors = {});

    unsigned strands() const { return strands_; }
    const std::vector<Rung>& rungs() const { return rungs_; } // sorted by height
    const std::vector<int>& base_floors() const { return base_; }

    LadderDiagram with_signs(const std::vector<RungSign>& signs) const;

private:
    unsigned strands_;
    std::vector<Rung> rungs_;
    std::vector<int> base_;
};

// Loads {"strands": s, "rungs": [{"pair": [i, i+1], "height": h, "sign":
// "over"|"under"}, ...], "base_floors": [...]} (base_floors optional).
LadderDiagram ladder_from_json(const std::string& text);

// Floor numbers along the one-stroke traversal: the starting floor followed
// by the floor after each crossing event. The final event returns to the
// start, so string() holds 2r values and closed_string() appends the
// starting floor again.
class NumberingSequence {
public:
    NumberingSequence(std::vector<int> closed_floors, unsigned strands);

    const std::vector<int>& floors() const { return floors_; } // s_0 .. s_2r
    unsigned rung_count() const { return static_cast<unsigned>((floors_.size() - 1) / 2); }
    unsigned strands() const { return strands_; }

    std::string string() const;
    std::string closed_string() const;

private:
    std::vector<int> floors_;
    unsigned strands_;
};

enum class Verdict { KnotCandidate, UnknotReducible };

// The two halves of the closed floor sequence, stacked so that column k
// holds the numbers at the two passes over rung k (sharing the turning
// value at both ends). Equal row sums are necessary for a nontrivial knot;
// unequal sums certify that the diagram reduces to a circle, as do fewer
// than three crossings.
struct CrossingMatrix {
    std::vector<int> first;
    std::vector<int> second;
    Verdict verdict = Verdict::UnknotReducible;

    long long first_sum() const;
    long long second_sum() const;
};

NumberingSequence floor_numbering(const LadderDiagram& d, bool strict = false);
CrossingMatrix crossing_matrix(const NumberingSequence& seq);

// Number of closed loops of the traversal; rung signs do not enter.
unsigned component_count(const LadderDiagram& d);

// Sign choice that makes the closure alternate: a rung is Over exactly when
// the base floor rises from its left strand to its right one.
std::vector<RungSign> alternating_assignment(const LadderDiagram& d);

struct CensusEntry {
    std::uint64_t mask = 0; // bit j set = rung j Over
    unsigned components = 1;
    bool knot_candidate = false;
    bool linked = false;
    std::string sequence; // empty for multi-component entries
};

struct CensusSummary {
    std::vector<CensusEntry> entries; // indexed by mask
    std::size_t knot_candidates = 0;
    std::size_t unknot_reducible = 0;
    std::size_t multi_component = 0;
    std::size_t linked = 0;
};

struct CensusOptions {
    unsigned rung_cap = 20;
    // worker threads for enumeration; 0 = hardware concurrency
    unsigned threads = 0;
};

// Classifies all 2^r sign assignments. On two strands a single-component
// entry knots exactly when the net writhe reaches 3 in magnitude (opposite
// crossings cancel in pairs, so the writhe decides the closure type; the
// row sums of an unreduced presentation can disagree even for a knotted
// loop). Wider single-component entries get the row-sum verdict.
// Multi-component entries count as linked when some pair of loops has a
// nonzero signed crossing total (a nonzero linking number).
CensusSummary enumerate_assignments(const LadderDiagram& d, const CensusOptions& opts = {});

// Seifert matrix of the two-strand closure, one band per adjacent rung
// pair; the alternating assignment reproduces the torus-closure Alexander
// polynomials.
SeifertMatrix seifert_matrix_from_ladder(const LadderDiagram& d);

} // namespace knotmat
