#include "wordlab/word.hpp"

#include <charconv>

namespace wordlab {

Word parse_word(std::string_view text, int alphabet) {
    Word w;
    if (alphabet <= 10) {
        w.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9')
                throw WordError("bad letter '" + std::string(1, c) + "' in word");
            int v = c - '0';
            if (v >= alphabet) throw WordError("letter out of alphabet range");
            w.push_back(static_cast<char>(v));
        }
        return w;
    }
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            throw WordError("bad letter token in word");
        if (v < 0 || v >= alphabet) throw WordError("letter out of alphabet range");
        w.push_back(static_cast<char>(v));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return w;
}

std::string format_word(const Word& w, int alphabet) {
    std::string out;
    if (alphabet <= 10) {
        out.reserve(w.size());
        for (char c : w) out.push_back(static_cast<char>('0' + static_cast<unsigned char>(c)));
        return out;
    }
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(static_cast<int>(static_cast<unsigned char>(w[i])));
    }
    return out;
}

}  // namespace wordlab
