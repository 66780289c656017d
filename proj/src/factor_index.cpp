#include "wordlab/factor_index.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_map>

#include "wordlab/word_algebra.hpp"

namespace wordlab {

FactorIndex::FactorIndex(Word source) : source_(std::move(source)) {
    if (source_.empty()) throw EmptyWord();
    states_.reserve(2 * source_.size());
    states_.push_back(State{});
    for (char c : source_) extend(static_cast<Letter>(c));

    counts_.assign(source_.size() + 2, 0);
    for (size_t i = 1; i < states_.size(); ++i) {
        const State& s = states_[i];
        counts_[states_[s.link].len + 1] += 1;
        counts_[s.len + 1] -= 1;
    }
    size_t run = 0;
    for (size_t n = 1; n <= source_.size(); ++n) {
        run += counts_[n];
        counts_[n] = run;
    }
}

int FactorIndex::go(int state, Letter c) const {
    for (const auto& [letter, to] : states_[state].next)
        if (letter == c) return to;
    return -1;
}

void FactorIndex::extend(Letter c) {
    int cur = static_cast<int>(states_.size());
    states_.push_back(State{});
    states_[cur].len = states_[last_].len + 1;
    int p = last_;
    while (p != -1 && go(p, c) == -1) {
        states_[p].next.emplace_back(c, cur);
        p = states_[p].link;
    }
    if (p == -1) {
        states_[cur].link = 0;
    } else {
        int q = go(p, c);
        if (states_[p].len + 1 == states_[q].len) {
            states_[cur].link = q;
        } else {
            int clone = static_cast<int>(states_.size());
            states_.push_back(states_[q]);
            states_[clone].len = states_[p].len + 1;
            while (p != -1) {
                bool patched = false;
                for (auto& [letter, to] : states_[p].next) {
                    if (letter == c && to == q) {
                        to = clone;
                        patched = true;
                        break;
                    }
                }
                if (!patched) break;
                p = states_[p].link;
            }
            states_[q].link = clone;
            states_[cur].link = clone;
        }
    }
    last_ = cur;
}

bool FactorIndex::contains(const Word& u) const {
    int state = 0;
    for (char c : u) {
        state = go(state, static_cast<Letter>(c));
        if (state == -1) return false;
    }
    return true;
}

size_t FactorIndex::complexity(size_t n) const {
    if (n < 1 || n > source_.size()) throw LengthOutOfRange();
    return counts_[n];
}

std::optional<size_t> FactorIndex::detect_period() const {
    size_t L = source_.size();
    size_t p = L - border_array(source_).back();
    if (3 * p <= L) return p;
    return std::nullopt;
}

namespace {

// 0-based factor id per window start position, plus the number of distinct ids.
std::pair<std::vector<int>, int> window_ids(const Word& source, size_t n) {
    size_t windows = source.size() - n + 1;
    std::unordered_map<std::string_view, int> ids;
    ids.reserve(windows);
    std::vector<int> id_at(windows);
    std::string_view sv(source);
    int next_id = 0;
    for (size_t i = 0; i < windows; ++i) {
        auto [it, inserted] = ids.emplace(sv.substr(i, n), next_id);
        if (inserted) ++next_id;
        id_at[i] = it->second;
    }
    return {std::move(id_at), next_id};
}

}  // namespace

std::optional<size_t> FactorIndex::recurrence_bound(size_t n) const {
    size_t L = source_.size();
    if (n < 1 || n > L) throw LengthOutOfRange();
    auto [id_at, distinct] = window_ids(source_, n);
    std::vector<size_t> first(distinct, SIZE_MAX), last(distinct, 0), max_gap(distinct, 0);
    for (size_t i = 0; i < id_at.size(); ++i) {
        int id = id_at[i];
        if (first[id] == SIZE_MAX) {
            first[id] = i;
        } else {
            max_gap[id] = std::max(max_gap[id], i - last[id]);
        }
        last[id] = i;
    }
    // Per factor, R must cover the head, the tail, and every occurrence gap.
    size_t R = n;
    for (int id = 0; id < distinct; ++id) {
        R = std::max(R, first[id] + n);
        R = std::max(R, L - last[id]);
        R = std::max(R, n - 1 + max_gap[id]);
    }
    if (2 * R > L) return std::nullopt;
    return R;
}

std::optional<size_t> FactorIndex::recurrence_bound_serial(size_t n) const {
    size_t L = source_.size();
    if (n < 1 || n > L) throw LengthOutOfRange();
    auto [id_at, distinct] = window_ids(source_, n);
    for (size_t R = n; 2 * R <= L; ++R) {
        std::vector<size_t> seen(distinct, 0);
        size_t present = 0;
        size_t span = R - n + 1;  // window starts covered by one length-R window
        bool ok = true;
        for (size_t i = 0; i < span; ++i)
            if (seen[id_at[i]]++ == 0) ++present;
        if (present < static_cast<size_t>(distinct)) ok = false;
        for (size_t w = 1; ok && w + R <= L; ++w) {
            if (--seen[id_at[w - 1]] == 0) --present;
            if (seen[id_at[w + span - 1]]++ == 0) ++present;
            if (present < static_cast<size_t>(distinct)) ok = false;
        }
        if (ok) return R;
    }
    return std::nullopt;
}

std::vector<std::optional<size_t>> FactorIndex::recurrence_profile(size_t n_max) const {
    std::vector<std::optional<size_t>> out(n_max);
#pragma omp parallel for schedule(dynamic)
    for (long long n = 1; n <= static_cast<long long>(n_max); ++n)
        out[n - 1] = recurrence_bound(static_cast<size_t>(n));
    return out;
}

std::vector<std::optional<size_t>> FactorIndex::recurrence_profile_serial(size_t n_max) const {
    std::vector<std::optional<size_t>> out(n_max);
    for (size_t n = 1; n <= n_max; ++n) out[n - 1] = recurrence_bound(n);
    return out;
}

namespace {

// First i with source[i..i+d*r) = u^r for some u of length d; SIZE_MAX if none.
size_t first_power_at(const Word& source, size_t d, size_t r) {
    size_t L = source.size();
    if (d * r > L) return SIZE_MAX;
    size_t need = d * (r - 1);
    for (size_t i = 0; i + d * r <= L; ++i) {
        size_t j = 0;
        while (j < need && source[i + j] == source[i + j + d]) ++j;
        if (j == need) return i;
    }
    return SIZE_MAX;
}

}  // namespace

FactorIndex::PowerFreeResult FactorIndex::is_power_free(size_t r, size_t max_root_len) const {
    if (r < 2) throw WordError("power exponent must be >= 2");
    std::vector<size_t> hit(max_root_len + 1, SIZE_MAX);
#pragma omp parallel for schedule(dynamic)
    for (long long d = 1; d <= static_cast<long long>(max_root_len); ++d)
        hit[d] = first_power_at(source_, static_cast<size_t>(d), r);
    for (size_t d = 1; d <= max_root_len; ++d)
        if (hit[d] != SIZE_MAX) return {false, source_.substr(hit[d], d)};
    return {true, {}};
}

FactorIndex::PowerFreeResult FactorIndex::is_power_free_serial(size_t r, size_t max_root_len) const {
    if (r < 2) throw WordError("power exponent must be >= 2");
    for (size_t d = 1; d <= max_root_len; ++d) {
        size_t i = first_power_at(source_, d, r);
        if (i != SIZE_MAX) return {false, source_.substr(i, d)};
    }
    return {true, {}};
}

StableCount stable_complexity(const WordSpec& spec, size_t n, const StablePolicy& policy) {
    size_t L = std::max(policy.start, n);
    auto cap_len = max_prefix_length(spec);
    auto count_at = [&](size_t len) {
        return FactorIndex(prefix(spec, len)).complexity(n);
    };
    if (cap_len && *cap_len <= L) {
        size_t len = *cap_len;
        if (len < n) throw LengthOutOfRange();
        return {count_at(len), true};  // no doubling possible
    }
    size_t prev = count_at(L);
    while (true) {
        size_t L2 = 2 * L;
        if (L2 > policy.cap) return {prev, false};  // budget exceeded
        if (cap_len && *cap_len <= L2) {
            size_t cur = count_at(*cap_len);
            return {cur, true};  // prefix exhausted; no further growth possible
        }
        size_t cur = count_at(L2);
        if (cur == prev) return {cur, true};
        prev = cur;
        L = L2;
    }
}

}  // namespace wordlab
