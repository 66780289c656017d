#include "wordlab/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wordlab/factor_index.hpp"
#include "wordlab/lemma_lab.hpp"
#include "wordlab/permutation.hpp"
#include "wordlab/word_algebra.hpp"
#include "wordlab/word_models.hpp"

namespace wordlab::cli {

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitFile = 66;
constexpr int kExitContradiction = 70;

std::vector<Word> parse_word_list(const std::string& list, int alphabet) {
    std::vector<Word> out;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_word(tok, alphabet));
    return out;
}

std::vector<size_t> parse_size_list(const std::string& list) {
    std::vector<size_t> out;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoull(tok));
    return out;
}

// Writes to `path` when nonempty, else to `fallback`.
class Sink {
  public:
    Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw FileError("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

  private:
    std::ofstream file_;
    std::ostream& fallback_;
};

void print_witness(std::ostream& out, const Witness& w, int alphabet) {
    out << "witness indices=";
    for (size_t i = 0; i < w.indices.size(); ++i) out << (i ? "," : "") << w.indices[i];
    out << " sigma=";
    for (size_t i = 0; i < w.sigma.size(); ++i) out << (i ? "," : "") << w.sigma[i];
    out << " word=" << format_word(w.word, alphabet) << " absent_at=" << w.absent_at_prefix
        << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"wordlab: factor complexity, permutation closures, and the lemma engine"};
    app.require_subcommand(1);

    std::string spec_path, family_path, out_path, words_arg, subset_arg, word_arg;
    size_t n = 0, max_n = 10, prefix_len = 10000, cap = 100000;
    size_t max_k = 8, max_index = 12;
    size_t power_r = 2, max_root = 20;
    int alphabet = 10;

    auto* gen = app.add_subcommand("gen", "print a prefix of the word denoted by a spec");
    gen->add_option("--spec", spec_path, "spec file")->required();
    gen->add_option("--n", n, "prefix length")->required();

    auto* complexity = app.add_subcommand("complexity", "factor complexity CSV (n,p,stable)");
    complexity->add_option("--spec", spec_path)->required();
    complexity->add_option("--max-n", max_n);
    complexity->add_option("--prefix", prefix_len);
    complexity->add_option("--cap", cap);
    complexity->add_option("--out", out_path);

    auto* recurrence = app.add_subcommand("recurrence", "recurrence bound CSV (n,R)");
    recurrence->add_option("--spec", spec_path)->required();
    recurrence->add_option("--max-n", max_n);
    recurrence->add_option("--prefix", prefix_len);
    recurrence->add_option("--out", out_path);

    auto* algebra = app.add_subcommand("algebra", "word algebra queries");
    algebra->require_subcommand(1);
    auto* period = algebra->add_subcommand("period", "minimal weak period");
    period->add_option("word", word_arg)->required();
    period->add_option("--alphabet", alphabet);
    auto* root = algebra->add_subcommand("root", "primitive root and exponent");
    root->add_option("word", word_arg)->required();
    root->add_option("--alphabet", alphabet);

    auto* powerfree = app.add_subcommand("power-free", "bounded r-power-freeness check");
    powerfree->add_option("--spec", spec_path)->required();
    powerfree->add_option("--prefix", prefix_len);
    powerfree->add_option("--r", power_r);
    powerfree->add_option("--max-root", max_root);

    auto* perm_check = app.add_subcommand("perm-check", "permutation closure vs an index");
    perm_check->add_option("--spec", spec_path)->required();
    perm_check->add_option("--words", words_arg, "comma-separated members of B")->required();
    perm_check->add_option("--prefix", prefix_len);
    perm_check->add_option("--max-k", max_k);

    auto* witness = app.add_subcommand("witness", "bounded missing-permutation search");
    witness->add_option("--spec", spec_path)->required();
    witness->add_option("--family", family_path)->required();
    witness->add_option("--prefix", prefix_len);
    witness->add_option("--max-k", max_k);
    witness->add_option("--max-index", max_index);

    auto* lemma2 = app.add_subcommand("lemma2", "run the counting-argument machinery");
    lemma2->add_option("--spec", spec_path)->required();
    lemma2->add_option("--family", family_path)->required();
    lemma2->add_option("--subset", subset_arg, "0-based indices into the family")->required();
    lemma2->add_option("--prefix", prefix_len);
    lemma2->add_option("--max-k", max_k);

    auto* classify_cmd = app.add_subcommand("classify", "periodic / missing-permutation / slope verdict");
    classify_cmd->add_option("--spec", spec_path)->required();
    classify_cmd->add_option("--family", family_path)->required();
    classify_cmd->add_option("--prefix", prefix_len);
    classify_cmd->add_option("--max-k", max_k);
    classify_cmd->add_option("--max-index", max_index);

    std::vector<std::string> argv_strings;
    argv_strings.push_back("wordlab");
    argv_strings.insert(argv_strings.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_strings) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*gen) {
            WordSpec spec = load_spec(spec_path);
            out << format_word(prefix(spec, n), spec.alphabet) << "\n";
            return 0;
        }
        if (*complexity) {
            WordSpec spec = load_spec(spec_path);
            Sink sink(out_path, out);
            sink.stream() << "n,p,stable\n";
            for (size_t i = 1; i <= max_n; ++i) {
                StableCount sc = stable_complexity(spec, i, {prefix_len, cap});
                sink.stream() << i << ',' << sc.count << ',' << (sc.stable ? 1 : 0) << "\n";
            }
            return 0;
        }
        if (*recurrence) {
            WordSpec spec = load_spec(spec_path);
            FactorIndex index(prefix_clamped(spec, prefix_len));
            size_t limit = std::min(max_n, index.length() / 4);
            auto profile = index.recurrence_profile(limit);
            Sink sink(out_path, out);
            sink.stream() << "n,R\n";
            for (size_t i = 1; i <= limit; ++i) {
                sink.stream() << i << ',';
                if (profile[i - 1])
                    sink.stream() << *profile[i - 1];
                else
                    sink.stream() << '?';
                sink.stream() << "\n";
            }
            return 0;
        }
        if (*algebra) {
            Word w = parse_word(word_arg, alphabet);
            if (*period) {
                out << minimal_period(w) << "\n";
            } else {
                RootDecomposition d = primitive_root(w);
                out << format_word(d.root, alphabet) << "^" << d.exponent << "\n";
            }
            return 0;
        }
        if (*powerfree) {
            WordSpec spec = load_spec(spec_path);
            FactorIndex index(prefix_clamped(spec, prefix_len));
            auto result = index.is_power_free(power_r, max_root);
            if (result.free)
                out << "power-free r=" << power_r << " max-root=" << max_root << "\n";
            else
                out << "witness " << format_word(result.witness, spec.alphabet) << "\n";
            return 0;
        }
        if (*perm_check) {
            WordSpec spec = load_spec(spec_path);
            std::vector<Word> B = parse_word_list(words_arg, spec.alphabet);
            FactorIndex index(prefix_clamped(spec, prefix_len));
            PermClosure closure = perm_closure(B, max_k);
            auto missing = missing_permutation(B, index, max_k);
            out << "P_B size=" << closure.count() << " l_B=" << closure.l << " missing="
                << (missing ? format_word(*missing, spec.alphabet) : std::string("none")) << "\n";
            return 0;
        }
        if (*witness) {
            WordSpec spec = load_spec(spec_path);
            Family family = load_family(family_path, spec.alphabet);
            FactorIndex index(prefix_clamped(spec, prefix_len));
            Word doubled = prefix_clamped(spec, 2 * index.length());
            std::optional<FactorIndex> recheck;
            if (doubled.size() > index.length()) recheck.emplace(std::move(doubled));
            ScanReport report =
                subset_scan(family, index, recheck ? &*recheck : nullptr, max_k, max_index);
            if (report.witness)
                print_witness(out, *report.witness, spec.alphabet);
            else
                out << "witness none scanned=" << report.scanned << "\n";
            return 0;
        }
        if (*lemma2) {
            WordSpec spec = load_spec(spec_path);
            Family family = load_family(family_path, spec.alphabet);
            std::vector<Word> B;
            for (size_t i : parse_size_list(subset_arg)) {
                if (i >= family.members.size()) throw WordError("subset index out of range");
                B.push_back(family.members[i]);
            }
            Lemma2Report r = lemma2_bound_check(spec, family, B, prefix_len, max_k);
            out << "v=" << format_word(r.v, spec.alphabet) << "\n"
                << "m=" << r.m << "\n"
                << "l_B=" << r.l_b << "\n"
                << "P_B=" << r.closure_count << "\n"
                << "n=" << r.n << "\n"
                << "N=" << r.N << "\n"
                << "distinct_s=" << r.distinct_s << "\n"
                << "lower_bound_claim=" << r.lower_bound_claim << "\n"
                << "p_at_N=" << r.measured_p_at_N << "\n"
                << "bound_rhs=" << r.N * (r.closure_count - 1) << "/4\n"
                << "collisions=" << r.collisions.size() << "\n"
                << "degenerate_periodic=" << (r.degenerate_periodic ? 1 : 0) << "\n"
                << "hypothesis_ok=" << (r.hypothesis_ok ? 1 : 0) << "\n";
            for (const Word& w : r.missing)
                out << "missing=" << format_word(w, spec.alphabet) << "\n";
            if (r.hypothesis_ok && r.bound_holds()) return 0;
            if (!r.hypothesis_ok) return 2;
            return 1;
        }
        if (*classify_cmd) {
            WordSpec spec = load_spec(spec_path);
            Family family = load_family(family_path, spec.alphabet);
            ClassifyBudget budget;
            budget.prefix_len = prefix_len;
            budget.max_k = max_k;
            budget.max_index = max_index;
            Verdict v = classify(spec, family, budget);
            if (const auto* p = std::get_if<PeriodicEvidence>(&v)) {
                out << "verdict=periodic period=" << p->period << "\n";
                return 0;
            }
            if (const auto* mp = std::get_if<MissingPermutation>(&v)) {
                out << "verdict=missing-permutation\n";
                print_witness(out, mp->witness, spec.alphabet);
                return 2;
            }
            if (const auto* s = std::get_if<SuperlinearEvidence>(&v)) {
                out << "verdict=superlinear-evidence\n";
                for (const auto& row : s->slopes)
                    out << "slope n=" << row.n << " p_n=" << row.p_n << " p_2n=" << row.p_2n
                        << "\n";
                return 3;
            }
            const auto& inc = std::get<Inconclusive>(v);
            out << "verdict=inconclusive reason=\"" << inc.reason << "\"\n";
            for (const auto& row : inc.slopes)
                out << "slope n=" << row.n << " p_n=" << row.p_n << " p_2n=" << row.p_2n << "\n";
            return 4;
        }
    } catch (const ProofContradiction& e) {
        err << "proof contradiction: " << e.what() << "\n";
        return kExitContradiction;
    } catch (const FileError& e) {
        err << e.what() << "\n";
        return kExitFile;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}

}  // namespace wordlab::cli
