#include "wordlab/permutation.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace wordlab {

namespace {

void check_members(const std::vector<Word>& members, bool require_distinct) {
    for (const Word& w : members)
        if (w.empty()) throw EmptyWord();
    if (require_distinct) {
        std::set<Word> seen(members.begin(), members.end());
        if (seen.size() != members.size())
            throw WordError("family members must be pairwise distinct");
    }
}

}  // namespace

Family Family::as_set(std::vector<Word> members, std::string provenance) {
    check_members(members, true);
    return {std::move(members), std::move(provenance)};
}

Family Family::as_stream(std::vector<Word> members, std::string provenance) {
    check_members(members, false);
    return {std::move(members), std::move(provenance)};
}

Family Family::prefixes(const WordSpec& spec, const std::vector<size_t>& lengths) {
    std::vector<Word> members;
    members.reserve(lengths.size());
    for (size_t l : lengths) members.push_back(prefix(spec, l));
    return as_set(std::move(members), "prefixes");
}

Family load_family(const std::string& path, int alphabet) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open family file " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty() && line[0] != '#') lines.push_back(line);
    }
    if (!lines.empty() && lines[0].rfind("prefixes ", 0) == 0) {
        std::stringstream ss(lines[0]);
        std::string kw, specfile, lengths_kw, list;
        ss >> kw >> specfile >> lengths_kw >> list;
        if (lengths_kw != "lengths") throw WordError("bad generated family line");
        WordSpec spec = load_spec(specfile);
        std::vector<size_t> lengths;
        std::stringstream ls(list);
        std::string tok;
        while (std::getline(ls, tok, ',')) lengths.push_back(std::stoull(tok));
        return Family::prefixes(spec, lengths);
    }
    std::vector<Word> members;
    for (const std::string& l : lines) members.push_back(parse_word(l, alphabet));
    return Family::as_stream(std::move(members), "file " + path);
}

PermClosure perm_closure(const std::vector<Word>& B, size_t max_k) {
    if (B.empty()) throw WordError("perm_closure of empty set");
    if (B.size() > max_k) throw TooManyWords();
    check_members(B, true);
    PermClosure out;
    out.base = B;
    for (const Word& w : B) out.l += w.size();
    std::vector<size_t> order(B.size());
    std::iota(order.begin(), order.end(), size_t{0});
    do {
        Word cat;
        cat.reserve(out.l);
        for (size_t i : order) cat += B[i];
        out.words.insert(std::move(cat));
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

std::optional<Word> missing_permutation(const std::vector<Word>& B, const FactorIndex& index,
                                        size_t max_k) {
    PermClosure closure = perm_closure(B, max_k);
    for (const Word& w : closure.words)  // std::set iterates in lexicographic order
        if (!index.contains(w)) return w;
    return std::nullopt;
}

ScanReport subset_scan(const Family& family, const FactorIndex& index,
                       const FactorIndex* recheck, size_t max_k, size_t max_index) {
    if (max_k < 1 || max_index < 1) throw WordError("subset_scan budgets must be >= 1");
    size_t limit = std::min(max_index, family.members.size());

    struct Entry {
        size_t total_len;
        std::vector<size_t> indices;
    };
    std::vector<Entry> subsets;
    std::vector<size_t> cur;
    auto gather = [&](auto&& self, size_t next) -> void {
        if (!cur.empty() && cur.size() <= max_k) {
            size_t total = 0;
            for (size_t i : cur) total += family.members[i].size();
            subsets.push_back({total, cur});
        }
        if (cur.size() == max_k) return;
        for (size_t i = next; i < limit; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    gather(gather, 0);
    std::stable_sort(subsets.begin(), subsets.end(), [](const Entry& a, const Entry& b) {
        if (a.total_len != b.total_len) return a.total_len < b.total_len;
        return a.indices < b.indices;
    });

    ScanReport report;
    for (const Entry& e : subsets) {
        size_t k = e.indices.size();
        std::vector<size_t> sigma(k);
        std::iota(sigma.begin(), sigma.end(), size_t{1});
        do {
            Word cat;
            cat.reserve(e.total_len);
            for (size_t j = 0; j < k; ++j) cat += family.members[e.indices[sigma[j] - 1]];
            ++report.scanned;
            if (!index.contains(cat) && (!recheck || !recheck->contains(cat))) {
                report.witness = Witness{e.indices, sigma, std::move(cat), index.length()};
                return report;
            }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return report;
}

}  // namespace wordlab
