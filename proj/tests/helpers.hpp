#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab::testing {

// Digit-string literal -> internal word.
inline Word W(const std::string& digits) { return parse_word(digits, 10); }

inline std::string D(const Word& w) { return format_word(w, 10); }

// All binary words of length 1..max_len, shortlex order.
inline std::vector<Word> all_binary_words(size_t max_len) {
    std::vector<Word> out;
    for (size_t len = 1; len <= max_len; ++len) {
        for (size_t bits = 0; bits < (size_t{1} << len); ++bits) {
            Word w(len, char(0));
            for (size_t i = 0; i < len; ++i)
                if (bits & (size_t{1} << i)) w[i] = char(1);
            out.push_back(std::move(w));
        }
    }
    return out;
}

inline Word random_binary_word(std::mt19937& rng, size_t min_len, size_t max_len) {
    std::uniform_int_distribution<size_t> len_dist(min_len, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    Word w(len_dist(rng), char(0));
    for (char& c : w) c = static_cast<char>(bit(rng));
    return w;
}

// Naive O(n^2) distinct-window count; the independent complexity oracle.
inline size_t naive_complexity(const Word& w, size_t n) {
    std::set<std::string> seen;
    for (size_t i = 0; i + n <= w.size(); ++i) seen.insert(w.substr(i, n));
    return seen.size();
}

inline bool naive_contains(const Word& w, const Word& u) {
    return u.empty() || w.find(u) != Word::npos;
}

// Naive shift-checking weak-period oracle.
inline size_t naive_minimal_period(const Word& u) {
    for (size_t p = 1; p < u.size(); ++p) {
        bool ok = true;
        for (size_t i = 0; i + p < u.size(); ++i)
            if (u[i] != u[i + p]) {
                ok = false;
                break;
            }
        if (ok) return p;
    }
    return u.size();
}

}  // namespace wordlab::testing
