#pragma once

#include <optional>
#include <set>
#include <vector>

#include "wordlab/factor_index.hpp"

namespace wordlab {

struct TooManyWords : WordError {
    TooManyWords() : WordError("subset exceeds the factorial guard maxK") {}
};

// An ordered stream of nonempty factors. Theorem-style families (as_set)
// enforce pairwise distinctness; Lemma-1-style streams (as_stream) may repeat.
struct Family {
    std::vector<Word> members;
    std::string provenance;

    static Family as_set(std::vector<Word> members, std::string provenance = "explicit list");
    static Family as_stream(std::vector<Word> members, std::string provenance = "stream");
    static Family prefixes(const WordSpec& spec, const std::vector<size_t>& lengths);
};

// Family file format: one word per line, or a generated form
//   prefixes <specfile> lengths <l1,l2,...>
Family load_family(const std::string& path, int alphabet);

// All deduplicated permutation concatenations of a finite B.
struct PermClosure {
    std::vector<Word> base;  // B, in the order given
    size_t l = 0;            // l_B: sum of member lengths
    std::set<Word> words;    // P_B
    size_t count() const { return words.size(); }
};

PermClosure perm_closure(const std::vector<Word>& B, size_t max_k = 8);

// Lexicographically smallest member of P_B absent from the index; nullopt if
// all are present.
std::optional<Word> missing_permutation(const std::vector<Word>& B, const FactorIndex& index,
                                        size_t max_k = 8);

struct Witness {
    std::vector<size_t> indices;  // n_1 < ... < n_k, 0-based into the family
    std::vector<size_t> sigma;    // permutation of {1..k}
    Word word;                    // V_{n_sigma(1)} ... V_{n_sigma(k)}
    size_t absent_at_prefix = 0;
};

struct ScanReport {
    std::optional<Witness> witness;
    size_t scanned = 0;  // concatenations checked
};

// Scans subsets of {0..maxIndex-1} in order of increasing total concatenation
// length, ties broken lexicographically on the index tuple, then permutations
// in lexicographic rank order. A hit at `index` is re-checked against
// `recheck` (the doubled prefix) when provided.
ScanReport subset_scan(const Family& family, const FactorIndex& index,
                       const FactorIndex* recheck, size_t max_k, size_t max_index);

}  // namespace wordlab
