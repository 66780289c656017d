#include "wordlab/word_algebra.hpp"

namespace wordlab {

std::vector<size_t> border_array(const Word& u) {
    if (u.empty()) throw EmptyWord();
    std::vector<size_t> b(u.size(), 0);
    for (size_t i = 1; i < u.size(); ++i) {
        size_t k = b[i - 1];
        while (k > 0 && u[i] != u[k]) k = b[k - 1];
        if (u[i] == u[k]) ++k;
        b[i] = k;
    }
    return b;
}

size_t minimal_period(const Word& u) {
    return u.size() - border_array(u).back();
}

RootDecomposition primitive_root(const Word& u) {
    size_t p = minimal_period(u);
    if (p < u.size() && u.size() % p == 0)
        return {u.substr(0, p), u.size() / p};
    return {u, 1};
}

bool commutes(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw EmptyWord();
    return u + v == v + u;
}

std::optional<Word> common_primitive_root(const std::vector<Word>& words) {
    if (words.empty()) throw WordError("common_primitive_root of empty set");
    Word r = primitive_root(words.front()).root;
    for (const Word& w : words)
        if (primitive_root(w).root != r) return std::nullopt;
    return r;
}

}  // namespace wordlab
