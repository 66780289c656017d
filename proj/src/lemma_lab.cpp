#include "wordlab/lemma_lab.hpp"

#include <algorithm>
#include <map>

#include "wordlab/word_algebra.hpp"

namespace wordlab {

std::vector<Word> SWordTable::missing_vb() const {
    std::vector<Word> out;
    for (const auto& e : entries)
        if (!e.s) {
            Word vb = v + e.b;
            if (std::find(out.begin(), out.end(), vb) == out.end()) out.push_back(vb);
        }
    return out;
}

std::optional<Word> select_v(const Family& family, const std::vector<Word>& B,
                             const FactorIndex& index) {
    size_t l_b = 0;
    for (const Word& w : B) l_b += w.size();
    for (const Word& v : family.members) {
        if (std::find(B.begin(), B.end(), v) != B.end()) continue;
        if (v.size() < 2 * l_b) continue;
        if (minimal_period(v) < l_b) continue;
        if (!index.contains(v)) continue;
        return v;
    }
    return std::nullopt;
}

SWordTable build_s_words(const FactorIndex& index, const Word& v, const PermClosure& closure) {
    SWordTable table;
    table.v = v;
    table.m = v.size();
    table.l_b = closure.l;
    table.n = (3 * table.m) / 2 + table.l_b;
    size_t L = index.length();
    if (table.n > L) throw TargetLengthExceedsPrefix();
    const Word& source = index.source();
    for (const Word& b : closure.words) {
        Word vb = v + b;
        for (size_t k = 0; k <= table.m / 2; ++k) {
            SWordEntry entry{b, k, std::nullopt};
            size_t q = source.find(vb, k);
            if (q != Word::npos && q - k + table.n <= L)
                entry.s = source.substr(q - k, table.n);
            table.entries.push_back(std::move(entry));
        }
    }
    return table;
}

size_t count_distinct_s(const SWordTable& table) {
    std::set<Word> distinct;
    for (const auto& e : table.entries)
        if (e.s) distinct.insert(*e.s);
    return distinct.size();
}

std::vector<CollisionFact> collision_analysis(const SWordTable& table) {
    std::map<Word, std::vector<const SWordEntry*>> by_s;
    for (const auto& e : table.entries)
        if (e.s) by_s[*e.s].push_back(&e);

    std::vector<CollisionFact> facts;
    size_t p_min = table.m ? minimal_period(table.v) : 0;
    for (const auto& [s, entries] : by_s) {
        for (size_t i = 0; i < entries.size(); ++i) {
            for (size_t j = i + 1; j < entries.size(); ++j) {
                const SWordEntry& a = *entries[i];
                const SWordEntry& c = *entries[j];
                if (a.k == c.k) {
                    if (a.b != c.b)
                        throw ProofContradiction("equal s-words at equal offsets with different b");
                    continue;
                }
                const SWordEntry& lo = a.k < c.k ? a : c;
                const SWordEntry& hi = a.k < c.k ? c : a;
                size_t shift = hi.k - lo.k;
                for (size_t t = 0; t + shift < table.m; ++t)
                    if (table.v[t] != table.v[t + shift])
                        throw ProofContradiction("collision shift is not a period of v");
                if (shift % p_min != 0)
                    throw ProofContradiction("minimal period of v does not divide collision shift");
                if (table.l_b > p_min || lo.b != table.v.substr(table.m - p_min, table.l_b))
                    throw ProofContradiction(
                        "colliding b is not the l_B-prefix of the p_min-suffix of v");
                facts.push_back({lo.b, hi.b, lo.k, hi.k, shift});
            }
        }
    }
    return facts;
}

Lemma2Report lemma2_bound_check(const WordSpec& spec, const Family& family,
                                const std::vector<Word>& B, size_t prefix_len, size_t max_k) {
    FactorIndex index(prefix(spec, prefix_len));
    PermClosure closure = perm_closure(B, max_k);

    Lemma2Report report;
    report.l_b = closure.l;
    report.closure_count = closure.count();
    report.period = index.detect_period();
    report.degenerate_periodic = report.period.has_value();

    auto v = select_v(family, B, index);
    if (!v) throw NoSuitableV();
    report.v = *v;
    report.m = v->size();
    report.N = 2 * report.m + 4;
    if (report.N > index.length()) throw TargetLengthExceedsPrefix();

    SWordTable table = build_s_words(index, *v, closure);
    report.n = table.n;
    report.distinct_s = count_distinct_s(table);
    report.collisions = collision_analysis(table);
    report.missing = table.missing_vb();
    report.hypothesis_ok = report.missing.empty();
    report.lower_bound_claim = (report.m / 2 + 1) * (report.closure_count - 1);
    report.measured_p_at_N = index.complexity(report.N);

    if (report.hypothesis_ok && !report.degenerate_periodic) {
        if (report.distinct_s < report.lower_bound_claim)
            throw ProofContradiction("distinct s-word count below the proven lower bound");
        if (!report.bound_holds())
            throw ProofContradiction("measured complexity below the lemma bound");
    }
    return report;
}

SaturationReport saturation_probe(const Family& family, const FactorIndex& index,
                                  const SaturationBudget& budget) {
    std::vector<Word> scanned;
    for (const Word& w : family.members) {
        if (scanned.size() >= budget.max_members) break;
        if (std::find(scanned.begin(), scanned.end(), w) == scanned.end()) scanned.push_back(w);
    }

    SaturationReport report;
    std::vector<Word> B;
    size_t count = 0;
    while (B.size() < budget.max_k) {
        const Word* best = nullptr;
        size_t best_count = count;
        for (const Word& u : scanned) {
            if (std::find(B.begin(), B.end(), u) != B.end()) continue;
            std::vector<Word> trial = B;
            trial.push_back(u);
            size_t c = perm_closure(trial, budget.max_k).count();
            if (c > best_count) {
                best_count = c;
                best = &u;
            }
        }
        if (!best) break;
        B.push_back(*best);
        count = best_count;
    }
    report.best_b = B;
    report.best_count = B.empty() ? 0 : count;
    report.c_estimate = report.best_count;

    std::vector<Word> tail;
    for (const Word& w : scanned)
        if (std::find(B.begin(), B.end(), w) == B.end()) tail.push_back(w);

    if (!B.empty()) {
        PermClosure closure = perm_closure(B, budget.max_k);
        for (size_t i = 0; i < tail.size() && report.pairs.size() < budget.max_pairs; ++i) {
            for (size_t j = i + 1; j < tail.size() && report.pairs.size() < budget.max_pairs; ++j) {
                SaturationPair pair{tail[i], tail[j], commutes(tail[i], tail[j]), true};
                for (const Word& w : closure.words) {
                    if (!index.contains(w + pair.u1 + pair.u2) ||
                        !index.contains(w + pair.u2 + pair.u1)) {
                        pair.extensions_present = false;
                        break;
                    }
                }
                report.pairs.push_back(std::move(pair));
            }
        }
    }
    if (!tail.empty()) {
        report.tail_root = common_primitive_root(tail);
        if (report.tail_root) report.tail_period = report.tail_root->size();
    }
    return report;
}

namespace {

std::vector<SlopeRow> slope_table(const FactorIndex& index, size_t start, size_t max_n) {
    std::vector<SlopeRow> rows;
    for (size_t n = std::max<size_t>(1, start); 2 * n <= std::min(max_n, index.length()); n *= 2)
        rows.push_back({n, index.complexity(n), index.complexity(2 * n)});
    return rows;
}

// Slopes (p_2n - p_n) / n strictly increasing across every doubling.
bool strictly_increasing_slopes(const std::vector<SlopeRow>& rows) {
    if (rows.size() < 2) return false;
    for (size_t i = 1; i < rows.size(); ++i) {
        size_t d_prev = rows[i - 1].p_2n - rows[i - 1].p_n;
        size_t d_cur = rows[i].p_2n - rows[i].p_n;
        if (d_cur * rows[i - 1].n <= d_prev * rows[i].n) return false;
    }
    return true;
}

}  // namespace

Verdict classify(const WordSpec& spec, const Family& family, const ClassifyBudget& budget) {
    Word w = prefix_clamped(spec, budget.prefix_len);
    if (w.empty()) return Inconclusive{"empty prefix", {}};
    FactorIndex index(w);

    if (auto p = index.detect_period()) return PeriodicEvidence{*p};

    if (!family.members.empty()) {
        Word doubled = prefix_clamped(spec, 2 * index.length());
        std::optional<FactorIndex> recheck;
        if (doubled.size() > index.length()) recheck.emplace(std::move(doubled));
        ScanReport scan = subset_scan(family, index, recheck ? &*recheck : nullptr,
                                      budget.max_k, budget.max_index);
        if (scan.witness) return MissingPermutation{*scan.witness};
    }

    std::vector<SlopeRow> rows = slope_table(index, budget.slope_start, budget.slope_max_n);
    if (strictly_increasing_slopes(rows)) return SuperlinearEvidence{rows};
    if (rows.size() < 2) return Inconclusive{"prefix too short for a slope table", rows};
    return Inconclusive{"no periodicity, no missing permutation, slope table not increasing", rows};
}

}  // namespace wordlab
