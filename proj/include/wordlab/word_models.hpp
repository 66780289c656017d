#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <variant>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

struct ExplicitTooShort : WordError {
    ExplicitTooShort() : WordError("explicit word shorter than requested prefix") {}
};
struct NotProlongable : WordError {
    NotProlongable() : WordError("substitution is not prolongable from the seed") {}
};
struct DirectiveExhausted : WordError {
    DirectiveExhausted() : WordError("directive sequence exhausted before reaching the requested length") {}
};

struct PeriodicSpec {
    Word seed;  // nonempty
};
struct MorphicSpec {
    std::map<Letter, Word> rules;
    Letter seed = 0;
};
struct SturmianSpec {
    std::vector<int> preperiod;  // a_1, a_2, ... (all >= 1)
    std::vector<int> period;     // repeated forever after the preperiod; empty = finite directive
};
struct ExplicitSpec {
    Word w;
};

struct WordSpec {
    int alphabet = 2;
    std::variant<PeriodicSpec, MorphicSpec, SturmianSpec, ExplicitSpec> variant;
};

// Length-n prefix of the word denoted by spec. Deterministic.
Word prefix(const WordSpec& spec, size_t n);

// Standard-word recursion: s_{-1} = "1", s_0 = "0", s_k = (s_{k-1})^{a_k} s_{k-2}.
Word standard_word(const std::vector<int>& directive, int k);

Word substitution_fixed_point_prefix(const std::map<Letter, Word>& rules, Letter seed, size_t n);

// Spec text format:
//   line 1: alphabet <k>
//   line 2: periodic <word> | morphic <seed> ; 0-><word> ; ... |
//           sturmian <a1,a2,...>[;<period list>] | explicit <word>
WordSpec parse_spec(const std::string& text);
WordSpec load_spec(const std::string& path);

// Longest prefix the spec can denote: |w| for Explicit, |s_K| for a finite
// Sturmian directive, unbounded (nullopt) otherwise.
std::optional<size_t> max_prefix_length(const WordSpec& spec);

// prefix(spec, min(n, max_prefix_length)); never throws a length error.
Word prefix_clamped(const WordSpec& spec, size_t n);

// Caches the longest prefix generated so far; prefix(n) growth is linearizable.
class PrefixOracle {
  public:
    explicit PrefixOracle(WordSpec spec) : spec_(std::move(spec)) {}

    const WordSpec& spec() const { return spec_; }

    // Returns the length-n prefix, extending the materialized prefix as needed.
    Word prefix(size_t n);

  private:
    WordSpec spec_;
    std::mutex mu_;
    Word materialized_;
};

}  // namespace wordlab
