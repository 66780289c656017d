#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wordlab {

// A finite word. Letters are stored as raw byte values (0, 1, 2, ...),
// not ASCII digits; parse_word/format_word translate to the textual form.
using Word = std::string;
using Letter = unsigned char;

struct WordError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyWord : WordError {
    EmptyWord() : WordError("operation requires a nonempty word") {}
};

struct FileError : WordError {
    using WordError::WordError;
};

// Text form: digit string for alphabet <= 10, comma-separated integers otherwise.
Word parse_word(std::string_view text, int alphabet);
std::string format_word(const Word& w, int alphabet);

}  // namespace wordlab
