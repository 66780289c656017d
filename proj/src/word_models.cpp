#include "wordlab/word_models.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace wordlab {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

Word periodic_prefix(const Word& seed, size_t n) {
    Word out;
    out.reserve(n);
    while (out.size() < n) out.append(seed, 0, std::min(seed.size(), n - out.size()));
    return out;
}

Word sturmian_prefix(const SturmianSpec& s, size_t n) {
    for (int a : s.preperiod)
        if (a < 1) throw WordError("sturmian directive entries must be >= 1");
    for (int a : s.period)
        if (a < 1) throw WordError("sturmian directive entries must be >= 1");
    Word prev(1, char(1));  // s_{-1} = "1"
    Word cur(1, char(0));   // s_0 = "0"
    size_t idx = 0;
    while (cur.size() < n) {
        int a;
        if (idx < s.preperiod.size()) {
            a = s.preperiod[idx];
        } else if (!s.period.empty()) {
            a = s.period[(idx - s.preperiod.size()) % s.period.size()];
        } else {
            throw DirectiveExhausted();
        }
        ++idx;
        Word next;
        next.reserve(cur.size() * a + prev.size());
        for (int i = 0; i < a; ++i) next += cur;
        next += prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    cur.resize(n);
    return cur;
}

}  // namespace

Word standard_word(const std::vector<int>& directive, int k) {
    if (k < -1) throw WordError("standard_word index must be >= -1");
    if (k > static_cast<int>(directive.size())) throw DirectiveExhausted();
    Word prev(1, char(1));
    Word cur(1, char(0));
    if (k == -1) return prev;
    for (int i = 1; i <= k; ++i) {
        int a = directive[i - 1];
        if (a < 1) throw WordError("sturmian directive entries must be >= 1");
        Word next;
        next.reserve(cur.size() * a + prev.size());
        for (int j = 0; j < a; ++j) next += cur;
        next += prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Word substitution_fixed_point_prefix(const std::map<Letter, Word>& rules, Letter seed, size_t n) {
    auto it = rules.find(seed);
    if (it == rules.end() || it->second.size() < 2 ||
        static_cast<Letter>(it->second[0]) != seed)
        throw NotProlongable();
    Word cur(1, static_cast<char>(seed));
    while (cur.size() < n) {
        Word next;
        for (char c : cur) {
            auto r = rules.find(static_cast<Letter>(c));
            if (r == rules.end()) throw NotProlongable();
            next += r->second;
            if (next.size() >= n) break;
        }
        if (next.size() <= cur.size()) throw NotProlongable();
        if (next.size() > n) next.resize(n);
        cur = std::move(next);
    }
    cur.resize(n);
    return cur;
}

Word prefix(const WordSpec& spec, size_t n) {
    return std::visit(
        [&](const auto& v) -> Word {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PeriodicSpec>) {
                if (v.seed.empty()) throw EmptyWord();
                return periodic_prefix(v.seed, n);
            } else if constexpr (std::is_same_v<T, MorphicSpec>) {
                return substitution_fixed_point_prefix(v.rules, v.seed, n);
            } else if constexpr (std::is_same_v<T, SturmianSpec>) {
                return sturmian_prefix(v, n);
            } else {
                if (n > v.w.size()) throw ExplicitTooShort();
                return v.w.substr(0, n);
            }
        },
        spec.variant);
}

WordSpec parse_spec(const std::string& text) {
    std::stringstream ss(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(ss, line)) {
        line = trim(line);
        if (!line.empty() && line[0] != '#') lines.push_back(line);
    }
    if (lines.size() < 2) throw WordError("spec needs an alphabet line and a variant line");
    WordSpec spec;
    {
        std::stringstream ls(lines[0]);
        std::string kw;
        ls >> kw >> spec.alphabet;
        if (kw != "alphabet" || spec.alphabet < 1 || spec.alphabet > 256)
            throw WordError("bad alphabet line");
    }
    const std::string& body = lines[1];
    size_t sp = body.find(' ');
    std::string kind = body.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : trim(body.substr(sp + 1));
    if (kind == "periodic") {
        spec.variant = PeriodicSpec{parse_word(rest, spec.alphabet)};
    } else if (kind == "explicit") {
        spec.variant = ExplicitSpec{parse_word(rest, spec.alphabet)};
    } else if (kind == "sturmian") {
        SturmianSpec s;
        size_t semi = rest.find(';');
        s.preperiod = parse_int_list(rest.substr(0, semi));
        if (semi != std::string::npos) s.period = parse_int_list(rest.substr(semi + 1));
        spec.variant = std::move(s);
    } else if (kind == "morphic") {
        MorphicSpec m;
        std::stringstream ms(rest);
        std::string tok;
        bool have_seed = false;
        while (std::getline(ms, tok, ';')) {
            tok = trim(tok);
            if (tok.empty()) continue;
            if (!have_seed) {
                Word w = parse_word(tok, spec.alphabet);
                if (w.size() != 1) throw WordError("morphic seed must be a single letter");
                m.seed = static_cast<Letter>(w[0]);
                have_seed = true;
                continue;
            }
            size_t arrow = tok.find("->");
            if (arrow == std::string::npos) throw WordError("morphic rule needs '->'");
            Word lhs = parse_word(trim(tok.substr(0, arrow)), spec.alphabet);
            if (lhs.size() != 1) throw WordError("morphic rule lhs must be a single letter");
            m.rules[static_cast<Letter>(lhs[0])] =
                parse_word(trim(tok.substr(arrow + 2)), spec.alphabet);
        }
        if (!have_seed) throw WordError("morphic spec needs a seed");
        spec.variant = std::move(m);
    } else {
        throw WordError("unknown spec variant '" + kind + "'");
    }
    return spec;
}

WordSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open spec file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

std::optional<size_t> max_prefix_length(const WordSpec& spec) {
    if (const auto* e = std::get_if<ExplicitSpec>(&spec.variant)) return e->w.size();
    if (const auto* s = std::get_if<SturmianSpec>(&spec.variant)) {
        if (!s->period.empty()) return std::nullopt;
        size_t prev = 1, cur = 1;
        for (int a : s->preperiod) {
            size_t next = cur * static_cast<size_t>(a) + prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    return std::nullopt;
}

Word prefix_clamped(const WordSpec& spec, size_t n) {
    auto cap = max_prefix_length(spec);
    return prefix(spec, cap ? std::min(n, *cap) : n);
}

Word PrefixOracle::prefix(size_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    if (n > materialized_.size()) materialized_ = wordlab::prefix(spec_, n);
    return materialized_.substr(0, n);
}

}  // namespace wordlab
