#pragma once

#include <optional>
#include <vector>

#include "wordlab/word_models.hpp"

namespace wordlab {

struct LengthOutOfRange : WordError {
    LengthOutOfRange() : WordError("factor length out of indexed range") {}
};
struct BudgetExceeded : WordError {
    BudgetExceeded() : WordError("doubling budget exceeded before stabilization") {}
};

// Factor index over a fixed prefix, built as a suffix automaton.
// Immutable after construction; all queries are read-only.
class FactorIndex {
  public:
    // Throws EmptyWord on an empty input.
    explicit FactorIndex(Word source);

    const Word& source() const { return source_; }
    size_t length() const { return source_.size(); }

    // True iff u occurs as a contiguous block; the empty word always occurs.
    bool contains(const Word& u) const;

    // Number of distinct length-n factors, 1 <= n <= length().
    size_t complexity(size_t n) const;

    // Smallest weak period p <= L/3 of the whole prefix (>= 3 repetitions), or nullopt.
    std::optional<size_t> detect_period() const;

    // Smallest R such that every length-R window contains every length-n
    // factor of the prefix; nullopt (Unknown) if no R <= L/2 works.
    std::optional<size_t> recurrence_bound(size_t n) const;

    // Naive sliding-window reference for recurrence_bound; O(L * R).
    std::optional<size_t> recurrence_bound_serial(size_t n) const;

    // recurrence_bound for n = 1..n_max; OpenMP-parallel over n when enabled.
    std::vector<std::optional<size_t>> recurrence_profile(size_t n_max) const;
    std::vector<std::optional<size_t>> recurrence_profile_serial(size_t n_max) const;

    // {true, ""} if no u with 1 <= |u| <= max_root_len has u^r in the prefix;
    // otherwise {false, witness} with the witness minimal by (|u|, position).
    struct PowerFreeResult {
        bool free;
        Word witness;
    };
    PowerFreeResult is_power_free(size_t r, size_t max_root_len) const;
    PowerFreeResult is_power_free_serial(size_t r, size_t max_root_len) const;

  private:
    struct State {
        int len = 0;
        int link = -1;
        std::vector<std::pair<Letter, int>> next;
    };
    int go(int state, Letter c) const;
    void extend(Letter c);

    Word source_;
    std::vector<State> states_;
    int last_ = 0;
    std::vector<size_t> counts_;  // counts_[n] = #distinct length-n factors
};

inline FactorIndex build_index(Word source) { return FactorIndex(std::move(source)); }

struct StablePolicy {
    size_t start = 1000;
    size_t cap = 100000;
};

struct StableCount {
    size_t count;
    bool stable;
};

// complexity(n) at prefix lengths L, 2L, ... until two consecutive values
// agree (stable) or the cap is hit (unstable). Specs that cannot grow past
// their own length are stable trivially.
StableCount stable_complexity(const WordSpec& spec, size_t n, const StablePolicy& policy = {});

}  // namespace wordlab
