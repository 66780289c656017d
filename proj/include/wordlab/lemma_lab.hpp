#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "wordlab/permutation.hpp"

namespace wordlab {

struct ProofContradiction : WordError {
    using WordError::WordError;
};
struct TargetLengthExceedsPrefix : WordError {
    TargetLengthExceedsPrefix() : WordError("s-word target length exceeds the indexed prefix") {}
};
struct NoSuitableV : WordError {
    NoSuitableV() : WordError("no family member satisfies the v-selection constraints") {}
};

// One (b, k) cell: s present (a length-n factor containing v·b at offset k) or
// Missing (v·b has no feasible occurrence in the prefix).
struct SWordEntry {
    Word b;
    size_t k = 0;
    std::optional<Word> s;
};

struct SWordTable {
    Word v;
    size_t m = 0;    // |v|
    size_t l_b = 0;  // l_B
    size_t n = 0;    // floor(3m/2) + l_B
    std::vector<SWordEntry> entries;

    std::vector<Word> missing_vb() const;
};

// First family member v outside B with |v| >= 2*l_B, minimal_period(v) >= l_B,
// and v a factor of the indexed prefix.
std::optional<Word> select_v(const Family& family, const std::vector<Word>& B,
                             const FactorIndex& index);

// Fills the (b, k) grid for b in P_B, k in 0..floor(m/2), each s taken from the
// leftmost occurrence of v·b with room for the length-n window.
SWordTable build_s_words(const FactorIndex& index, const Word& v, const PermClosure& closure);

size_t count_distinct_s(const SWordTable& table);

struct CollisionFact {
    Word b1, b2;
    size_t k1 = 0, k2 = 0;
    size_t shift = 0;  // |k1 - k2|
};

// Verifies, for every pair of equal s-cells at different offsets: v is
// shift-periodic, minimal_period(v) divides the shift, and the earlier-offset
// b equals the length-l_B prefix of the length-p_min suffix of v. A violation
// throws ProofContradiction.
std::vector<CollisionFact> collision_analysis(const SWordTable& table);

struct Lemma2Report {
    size_t m = 0, l_b = 0, closure_count = 0, n = 0, N = 0;
    size_t distinct_s = 0;
    size_t lower_bound_claim = 0;  // (floor(m/2)+1)*(#P_B-1)
    size_t measured_p_at_N = 0;
    bool hypothesis_ok = false;
    bool degenerate_periodic = false;  // detect_period fired; bound not asserted
    std::optional<size_t> period;
    Word v;
    std::vector<Word> missing;  // absent v·b words
    std::vector<CollisionFact> collisions;

    // 4 * p_w(N) >= N * (#P_B - 1), compared in integers.
    bool bound_holds() const { return 4 * measured_p_at_N >= N * (closure_count - 1); }
};

Lemma2Report lemma2_bound_check(const WordSpec& spec, const Family& family,
                                const std::vector<Word>& B, size_t prefix_len,
                                size_t max_k = 8);

struct SaturationPair {
    Word u1, u2;
    bool commute = false;
    bool extensions_present = false;  // all of P_B·u1·u2 and P_B·u2·u1 in index
};

struct SaturationReport {
    std::vector<Word> best_b;
    size_t best_count = 0;
    size_t c_estimate = 0;
    std::optional<Word> tail_root;
    std::optional<size_t> tail_period;
    std::vector<SaturationPair> pairs;
};

struct SaturationBudget {
    size_t max_members = 12;  // family members scanned
    size_t max_k = 6;         // factorial guard on B
    size_t max_pairs = 20;
};

SaturationReport saturation_probe(const Family& family, const FactorIndex& index,
                                  const SaturationBudget& budget = {});

struct PeriodicEvidence {
    size_t period;
};
struct MissingPermutation {
    Witness witness;
};
struct SlopeRow {
    size_t n;
    size_t p_n, p_2n;  // slope = (p_2n - p_n) / n
};
struct SuperlinearEvidence {
    std::vector<SlopeRow> slopes;
};
struct Inconclusive {
    std::string reason;
    std::vector<SlopeRow> slopes;
};

using Verdict = std::variant<PeriodicEvidence, MissingPermutation, SuperlinearEvidence, Inconclusive>;

struct ClassifyBudget {
    size_t prefix_len = 10000;
    size_t max_k = 3;
    size_t max_index = 6;
    size_t slope_start = 1;
    size_t slope_max_n = 256;
};

// Check order: periodicity, then a missing-permutation scan over the family,
// then the complexity slope table over doubling n.
Verdict classify(const WordSpec& spec, const Family& family, const ClassifyBudget& budget = {});

}  // namespace wordlab
