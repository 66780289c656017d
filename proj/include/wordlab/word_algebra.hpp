#pragma once

#include <optional>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

// u = root^exponent with root primitive.
struct RootDecomposition {
    Word root;
    size_t exponent;
};

// border_array(u)[i] = length of the longest proper border of u[0..i].
std::vector<size_t> border_array(const Word& u);

// Smallest weak period p: u[i] == u[i+p] for all valid i. Need not divide |u|.
size_t minimal_period(const Word& u);

RootDecomposition primitive_root(const Word& u);

// uv == vu, checked by direct concatenation, not via roots.
bool commutes(const Word& u, const Word& v);

// The primitive r with every word a power of r, if one exists.
std::optional<Word> common_primitive_root(const std::vector<Word>& words);

}  // namespace wordlab
