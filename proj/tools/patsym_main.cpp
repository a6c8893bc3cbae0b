// Command-line front end: every library capability behind one binary with
// table/csv/json output. All runs are deterministic; exit code 0 means
// success (and, for verify-style subcommands, "verified"), 1 means a
// verification found a counterexample, 2 means a usage or guard error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "patsym/avoiders.hpp"
#include "patsym/colored_tree.hpp"
#include "patsym/equiv.hpp"
#include "patsym/errors.hpp"
#include "patsym/parallel.hpp"
#include "patsym/pattern_forms.hpp"
#include "patsym/permutation.hpp"
#include "patsym/plane_tree.hpp"
#include "patsym/series.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace patsym;

struct NRange {
    int lo = 0;
    int hi = 0;
};

NRange parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected N or A..B (inclusive), got '" + text + "'");
    }
}

struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void emit_table(const Table& t, const std::string& format) {
    if (format == "json") {
        json rows = json::array();
        for (const auto& row : t.rows) {
            json obj;
            for (std::size_t i = 0; i < t.headers.size(); ++i) obj[t.headers[i]] = row[i];
            rows.push_back(std::move(obj));
        }
        std::cout << rows.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        for (std::size_t i = 0; i < t.headers.size(); ++i)
            std::cout << (i ? "," : "") << csv_escape(t.headers[i]);
        std::cout << "\n";
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                std::cout << (i ? "," : "") << csv_escape(row[i]);
            std::cout << "\n";
        }
        return;
    }
    std::vector<std::size_t> width(t.headers.size());
    for (std::size_t i = 0; i < t.headers.size(); ++i) width[i] = t.headers[i].size();
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::cout << row[i];
            if (i + 1 < row.size()) std::cout << std::string(width[i] - row[i].size() + 2, ' ');
        }
        std::cout << "\n";
    };
    line(t.headers);
    for (const auto& row : t.rows) line(row);
}

std::string str(const Int& v) { return v.str(); }

void check_enumeration_guard(int n_max, const Permutation& avoided, bool unguarded) {
    const int limit = avoided == pattern_132() ? 14 : 11;
    if (!unguarded && n_max > limit)
        throw GuardError("n exceeds the default guard of " + std::to_string(limit) +
                         " for this avoided pattern; pass --unguarded to force");
}

int cmd_catalan(const NRange& range, const std::string& format) {
    Table t{{"n", "catalan"}, {}};
    for (int n = range.lo; n <= range.hi; ++n) t.rows.push_back({std::to_string(n), str(catalan(n))});
    emit_table(t, format);
    return 0;
}

// Streams row by row; avoider lists grow like 4^n and are never buffered.
int cmd_enumerate(int n, const std::string& avoid, long long limit, bool unguarded,
                  const std::string& format) {
    const Permutation r = parse_permutation(avoid);
    check_enumeration_guard(n, r, unguarded);
    AvoiderStream stream(n, r);
    Permutation p;
    long long count = 0;
    const bool json = format == "json";
    if (json)
        std::cout << "[";
    else
        std::cout << "permutation\n";
    while (stream.next(p)) {
        if (limit >= 0 && count >= limit) break;
        if (json) std::cout << (count ? ",\n  " : "\n  ") << "{\"permutation\": \"" << to_string(p) << "\"}";
        else std::cout << to_string(p) << "\n";
        ++count;
    }
    if (json) std::cout << (count ? "\n]" : "]") << "\n";
    return 0;
}

int cmd_count(const std::string& perm, const std::string& pattern, bool list,
              const std::string& format) {
    const Permutation p = parse_permutation(perm);
    const Permutation q = parse_permutation(pattern);
    if (list) {
        Table t{{"occurrence"}, {}};
        for (const Occurrence& occ : list_occurrences(p, q)) t.rows.push_back({to_string(occ)});
        emit_table(t, format);
        return 0;
    }
    Table t{{"permutation", "pattern", "count"}, {}};
    t.rows.push_back({to_string(p), to_string(q), str(count_occurrences(p, q))});
    emit_table(t, format);
    return 0;
}

int cmd_total(const NRange& range, const std::string& pattern, const std::string& avoid,
              int threads, bool unguarded, const std::string& format) {
    const Permutation q = parse_permutation(pattern);
    const Permutation r = parse_permutation(avoid);
    check_enumeration_guard(range.hi, r, unguarded);
    Table t{{"n", "total"}, {}};
    for (int n = range.lo; n <= range.hi; ++n)
        t.rows.push_back({std::to_string(n), str(total_occurrences(n, q, r, threads))});
    emit_table(t, format);
    return 0;
}

int cmd_signature(const NRange& range, const std::string& pattern, int threads, bool unguarded,
                  const std::string& format) {
    const Permutation q = parse_permutation(pattern);
    check_enumeration_guard(range.hi, pattern_132(), unguarded);
    const Signature sig = signature(q, range.lo, range.hi, pattern_132(), threads);
    Table t{{"n", "total"}, {}};
    for (std::size_t i = 0; i < sig.values.size(); ++i)
        t.rows.push_back({std::to_string(sig.n_min + static_cast<int>(i)), str(sig.values[i])});
    emit_table(t, format);
    return 0;
}

int cmd_verify_triple(int n_max, int threads, bool unguarded, const std::string& format) {
    check_enumeration_guard(n_max, pattern_132(), unguarded);
    const Permutation p231 = parse_permutation("231");
    const Permutation p312 = parse_permutation("312");
    const Permutation p213 = parse_permutation("213");
    Table t{{"n", "total(231)", "total(312)", "total(213)", "equal"}, {}};
    bool all_equal = true;
    for (int n = 1; n <= n_max; ++n) {
        const Int a = total_occurrences(n, p231, pattern_132(), threads);
        const Int b = total_occurrences(n, p312, pattern_132(), threads);
        const Int c = total_occurrences(n, p213, pattern_132(), threads);
        const bool eq = a == b && b == c;
        all_equal = all_equal && eq;
        t.rows.push_back({std::to_string(n), str(a), str(b), str(c), eq ? "yes" : "NO"});
    }
    emit_table(t, format);
    if (!all_equal) std::cerr << "counterexample found: totals differ\n";
    return all_equal ? 0 : 1;
}

int cmd_verify_general(const std::string& q_text, const std::string& t_text, int u,
                       const NRange& range, int threads, bool unguarded,
                       const std::string& format) {
    const Permutation q = parse_permutation(q_text);
    const Permutation t = parse_permutation(t_text);
    if (!q.ends_in_largest() || !t.ends_in_largest())
        throw std::invalid_argument("q and t must end in their largest entry");
    check_enumeration_guard(range.hi, pattern_132(), unguarded);
    const Permutation src = source_pattern(q, t, u);
    const Permutation tgt = target_pattern(q, t, u);
    Table table{{"n", "total(" + to_string(src) + ")", "total(" + to_string(tgt) + ")", "equal"},
                {}};
    bool all_equal = true;
    for (int n = range.lo; n <= range.hi; ++n) {
        const Int a = total_occurrences(n, src, pattern_132(), threads);
        const Int b = total_occurrences(n, tgt, pattern_132(), threads);
        all_equal = all_equal && a == b;
        table.rows.push_back({std::to_string(n), str(a), str(b), a == b ? "yes" : "NO"});
    }
    emit_table(table, format);
    if (!all_equal) std::cerr << "counterexample found: totals differ\n";
    return all_equal ? 0 : 1;
}

int cmd_bijection_verify(int n, const std::string& q_text, const std::string& t_text, int u,
                         bool override_guard, int threads, const std::string& format) {
    const Permutation q = parse_permutation(q_text);
    const Permutation t = parse_permutation(t_text);
    BijectionLimits limits;
    limits.override_guard = override_guard;
    limits.threads = threads;
    const BijectionReport rep = verify_bijection(n, q, t, u, limits);
    if (format == "json") {
        json out;
        out["n"] = rep.n;
        out["source_pattern"] = to_string(rep.source_pat);
        out["target_pattern"] = to_string(rep.target_pat);
        out["k"] = rep.d.k;
        out["m"] = rep.d.m;
        out["u"] = rep.d.u;
        out["source_count"] = str(rep.source_count);
        out["target_count"] = str(rep.target_count);
        out["brute_force_source_total"] = str(rep.total_source);
        out["brute_force_target_total"] = str(rep.total_target);
        out["direct_count"] = str(rep.direct_count);
        out["pivot_count"] = str(rep.pivot_count);
        out["injective"] = rep.injective;
        out["surjective"] = rep.surjective;
        out["round_trips"] = rep.round_trips;
        out["left_subtrees_preserved"] = rep.left_subtrees_preserved;
        out["cases_consistent"] = rep.cases_consistent;
        out["direct_left_clause"] = rep.direct_left_clause;
        out["counts_match"] = rep.counts_match;
        out["passed"] = rep.passed();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << rep.to_text() << "\n";
    }
    return rep.passed() ? 0 : 1;
}

int cmd_bijection_apply(const std::string& input, const std::string& format) {
    const ColoredTree ct = ColoredTree::from_text(input);
    const ColoredTree out = ct.side() == Side::source ? bijection_forward(ct) : bijection_inverse(ct);
    const Permutation before = tree_to_perm(ct.tree());
    const Permutation after = tree_to_perm(out.tree());
    if (format == "json") {
        json j;
        j["input"] = ct.to_text();
        j["input_permutation"] = to_string(before);
        j["input_black_pattern"] = to_string(ct.black_pattern());
        j["direction"] = ct.side() == Side::source ? "forward" : "inverse";
        j["output"] = out.to_text();
        j["output_permutation"] = to_string(after);
        j["output_black_pattern"] = to_string(out.black_pattern());
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "input:  " << ct.to_text() << "   permutation " << to_string(before)
                  << ", black pattern " << to_string(ct.black_pattern()) << "\n"
                  << "output: " << out.to_text() << "   permutation " << to_string(after)
                  << ", black pattern " << to_string(out.black_pattern()) << "\n";
    }
    return 0;
}

int cmd_series(std::string which, int order, const std::string& format) {
    for (char& c : which) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    PowerSeries s = [&]() {
        if (which == "C") return catalan_series(order);
        if (which == "D") return inversion_total_series(order);
        if (which == "H") return noninversion_total_series(order);
        if (which == "Z") return entry_total_series(order);
        if (which == "A") return total_213_series(order);
        if (which == "B") return total_231_series(order);
        throw CLI::ValidationError("--which", "expected one of C, D, H, Z, A, B");
    }();
    const std::vector<Int> coefficients = s.integer_coefficients();
    Table t{{"n", "value"}, {}};
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        t.rows.push_back({std::to_string(i), str(coefficients[i])});
    emit_table(t, format);
    return 0;
}

int cmd_closed_a(int n, const std::string& format) {
    Table t{{"n", "value"}, {}};
    t.rows.push_back({std::to_string(n), str(total_213_closed_form(n))});
    emit_table(t, format);
    return 0;
}

int cmd_search(int h, const NRange& range, bool with_pairs, int threads, bool unguarded,
               const std::string& format) {
    SearchLimits limits;
    limits.override_guard = unguarded;
    const std::vector<EquivClass> classes =
        classify_patterns(h, range.lo, range.hi, pattern_132(), threads, limits);

    json out;
    out["h"] = h;
    out["n_min"] = range.lo;
    out["n_max"] = range.hi;
    out["note"] = "empirical, range-limited: equality of signatures is evidence on the tested range only";
    json jclasses = json::array();

    if (format != "json")
        std::cout << "signature classes for length-" << h << " patterns, n in [" << range.lo
                  << ", " << range.hi << "] (empirical, range-limited)\n";
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        const EquivClass& cls = classes[ci];
        json jc;
        jc["degenerate"] = cls.degenerate;
        json members = json::array();
        for (const auto& m : cls.members) members.push_back(to_string(m));
        jc["members"] = members;
        json sig = json::array();
        for (const auto& v : cls.signature) sig.push_back(str(v));
        jc["signature"] = sig;
        json explanations = json::array();

        if (format != "json") {
            std::cout << "class " << ci + 1 << (cls.degenerate ? " (degenerate)" : "") << ": ";
            for (std::size_t i = 0; i < cls.members.size(); ++i)
                std::cout << (i ? " " : "") << to_string(cls.members[i]);
            std::cout << "\n  signature:";
            for (const auto& v : cls.signature) std::cout << ' ' << v;
            std::cout << "\n";
        }
        if (cls.members.size() > 1 && !cls.degenerate) {
            for (std::size_t i = 1; i < cls.members.size(); ++i) {
                const PairExplanation ex = explain_equal_pair(cls.members.front(), cls.members[i]);
                const std::string text = to_string(cls.members.front()) + " ~ " +
                                         to_string(cls.members[i]) + ": " + ex.describe();
                explanations.push_back(text);
                if (format != "json") std::cout << "  " << text << "\n";
            }
        }
        jc["explanations"] = explanations;
        jclasses.push_back(std::move(jc));
    }
    out["classes"] = jclasses;

    if (with_pairs) {
        const std::vector<ExchangePair> pairs = exchange_pairs(h);
        std::size_t u1 = 0;
        json jpairs = json::array();
        if (format != "json") std::cout << "exchange pairs for h=" << h << ":\n";
        for (const ExchangePair& pr : pairs) {
            if (pr.has_witness_with_u(1)) ++u1;
            json jp;
            jp["source"] = to_string(pr.source);
            jp["target"] = to_string(pr.target);
            json jw = json::array();
            for (const auto& w : pr.witnesses)
                jw.push_back("q=" + to_string(w.q) + " t=" + to_string(w.t) +
                             " u=" + std::to_string(w.u));
            jp["witnesses"] = jw;
            jpairs.push_back(std::move(jp));
            if (format != "json") {
                std::cout << "  " << to_string(pr.source) << " ~ " << to_string(pr.target)
                          << "   via";
                for (const auto& w : pr.witnesses)
                    std::cout << " (q=" << to_string(w.q) << ",t=" << to_string(w.t)
                              << ",u=" << w.u << ")";
                std::cout << "\n";
            }
        }
        out["pairs"] = jpairs;
        out["u1_pair_count"] = u1;
        if (format != "json")
            std::cout << "pairs with a u=1 witness: " << u1 << " (catalan(h-2) = "
                      << catalan(h - 2) << ")\n";
    }
    if (format == "json") std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_explain(const std::string& a_text, const std::string& b_text, const NRange& range,
                int threads, const std::string& format) {
    const Permutation a = parse_permutation(a_text);
    const Permutation b = parse_permutation(b_text);
    check_enumeration_guard(range.hi, pattern_132(), false);
    const PairExplanation ex = explain_pair(a, b, range.lo, range.hi, pattern_132(), threads);
    if (format == "json") {
        json out;
        out["a"] = to_string(a);
        out["b"] = to_string(b);
        out["n_min"] = range.lo;
        out["n_max"] = range.hi;
        out["explanation"] = ex.describe();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << to_string(a) << " ~ " << to_string(b) << " on n in [" << range.lo << ", "
                  << range.hi << "]: " << ex.describe() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "patsym: exact pattern statistics over 132-avoiding permutations.\n"
        "Counts pattern occurrences, streams avoiders, runs the plane-tree\n"
        "recoloring bijection, evaluates the counting series, and searches for\n"
        "pattern pairs with equal totals. Output is deterministic; big integers\n"
        "print in full decimal (JSON serializes them as strings)."};
    app.require_subcommand(1);

    std::string format = "table";
    const int default_threads = default_thread_count();

    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "output format: table, csv or json")
            ->check(CLI::IsMember({"table", "csv", "json"}))
            ->capture_default_str();
    };

    // catalan
    std::string catalan_range = "0..12";
    auto* sc_catalan = app.add_subcommand("catalan", "Catalan numbers C(2n,n)/(n+1)");
    sc_catalan->add_option("--n", catalan_range, "n or inclusive range a..b")->required();
    add_format(sc_catalan);

    // enumerate
    int enum_n = 0;
    std::string enum_avoid = "132";
    long long enum_limit = -1;
    bool enum_unguarded = false;
    auto* sc_enum = app.add_subcommand("enumerate", "stream the r-avoiding permutations of length n in lexicographic order");
    sc_enum->add_option("--n", enum_n, "length")->required();
    sc_enum->add_option("--avoid", enum_avoid, "avoided pattern")->capture_default_str();
    sc_enum->add_option("--limit", enum_limit, "emit at most this many");
    sc_enum->add_flag("--unguarded", enum_unguarded, "ignore the size guard");
    add_format(sc_enum);

    // count
    std::string count_perm, count_pattern;
    bool count_list = false;
    auto* sc_count = app.add_subcommand("count", "occurrences of a pattern in one permutation");
    sc_count->add_option("--perm", count_perm, "host permutation")->required();
    sc_count->add_option("--pattern", count_pattern, "pattern")->required();
    sc_count->add_flag("--list", count_list, "list the occurrences instead of counting");
    add_format(sc_count);

    // total
    std::string total_range, total_pattern, total_avoid = "132";
    int total_threads = default_threads;
    bool total_unguarded = false;
    auto* sc_total = app.add_subcommand("total", "sum of pattern occurrences over all r-avoiders of each length");
    sc_total->add_option("--n", total_range, "n or inclusive range a..b")->required();
    sc_total->add_option("--pattern", total_pattern, "pattern")->required();
    sc_total->add_option("--avoid", total_avoid, "avoided pattern")->capture_default_str();
    sc_total->add_option("--threads", total_threads, "worker threads")->capture_default_str();
    sc_total->add_flag("--unguarded", total_unguarded, "ignore the size guard");
    add_format(sc_total);

    // signature
    std::string sig_range, sig_pattern;
    int sig_threads = default_threads;
    bool sig_unguarded = false;
    auto* sc_sig = app.add_subcommand("signature", "vector of totals over a range of lengths (avoided pattern fixed at 132)");
    sc_sig->add_option("--n", sig_range, "inclusive range a..b")->required();
    sc_sig->add_option("--pattern", sig_pattern, "pattern")->required();
    sc_sig->add_option("--threads", sig_threads, "worker threads")->capture_default_str();
    sc_sig->add_flag("--unguarded", sig_unguarded, "ignore the size guard");
    add_format(sc_sig);

    // verify-triple
    int vt_nmax = 10;
    int vt_threads = default_threads;
    bool vt_unguarded = false;
    auto* sc_vt = app.add_subcommand("verify-triple", "check total(231) = total(312) = total(213) over 132-avoiders for 1 <= n <= n-max");
    sc_vt->add_option("--n-max", vt_nmax, "largest length to test")->required();
    sc_vt->add_option("--threads", vt_threads, "worker threads")->capture_default_str();
    sc_vt->add_flag("--unguarded", vt_unguarded, "ignore the size guard");
    add_format(sc_vt);

    // verify-general
    std::string vg_q, vg_t, vg_range;
    int vg_u = 1;
    int vg_threads = default_threads;
    bool vg_unguarded = false;
    auto* sc_vg = app.add_subcommand("verify-general", "check the exchange identity: totals of (q skew t) sum i_u and (q sum i_u) skew t agree");
    sc_vg->add_option("--q", vg_q, "block q (must end in its largest entry)")->required();
    sc_vg->add_option("--t", vg_t, "block t (must end in its largest entry)")->required();
    sc_vg->add_option("--u", vg_u, "top-run length, >= 1")->required()->check(CLI::PositiveNumber);
    sc_vg->add_option("--n", vg_range, "n or inclusive range a..b")->required();
    sc_vg->add_option("--threads", vg_threads, "worker threads")->capture_default_str();
    sc_vg->add_flag("--unguarded", vg_unguarded, "ignore the size guard");
    add_format(sc_vg);

    // bijection
    int bj_n = 0;
    std::string bj_q = "1", bj_t = "1", bj_apply;
    int bj_u = 1;
    int bj_threads = default_threads;
    bool bj_override = false;
    auto* sc_bj = app.add_subcommand("bijection",
                                     "exhaustively verify the recoloring bijection at length n, "
                                     "or apply it to one colored tree (--apply 'tree;blacks;k,m,u'; "
                                     "source-side input maps forward, target-side input maps back)");
    auto* bj_n_opt = sc_bj->add_option("--n", bj_n, "verify exhaustively at this length");
    sc_bj->add_option("--q", bj_q, "block q")->capture_default_str();
    sc_bj->add_option("--t", bj_t, "block t")->capture_default_str();
    sc_bj->add_option("--u", bj_u, "top-run length")->capture_default_str()->check(CLI::PositiveNumber);
    auto* bj_apply_opt = sc_bj->add_option("--apply", bj_apply, "colored tree to map");
    sc_bj->add_option("--threads", bj_threads, "worker threads")->capture_default_str();
    sc_bj->add_flag("--override-guard", bj_override, "allow n beyond the exhaustive guard");
    add_format(sc_bj);
    bj_apply_opt->excludes(bj_n_opt);

    // series
    std::string series_which;
    int series_order = 200;
    auto* sc_series = app.add_subcommand("series",
                                         "coefficients of a counting series: C (Catalan), D (inversions), "
                                         "H (non-inversions), Z (entries), A (213 totals), B (231 totals)");
    sc_series->add_option("--which", series_which, "C, D, H, Z, A or B")->required();
    sc_series->add_option("--order", series_order, "truncation order")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    add_format(sc_series);

    // closed-a
    int ca_n = 0;
    auto* sc_ca = app.add_subcommand("closed-a", "closed form for the total number of 213-patterns in all 132-avoiders of length n (n >= 3; the totals for n = 0, 1, 2 are 0)");
    sc_ca->add_option("--n", ca_n, "length, >= 3")->required();
    add_format(sc_ca);

    // search
    int search_h = 3;
    std::string search_range;
    bool search_pairs = false, search_unguarded = false;
    int search_threads = default_threads;
    auto* sc_search = app.add_subcommand("search", "group all length-h patterns by signature and explain the coincidences");
    sc_search->add_option("--length", search_h, "pattern length")->required();
    sc_search->add_option("--n", search_range, "inclusive signature range a..b (default h..h+4)");
    sc_search->add_flag("--pairs", search_pairs, "also list the exchange-construction pairs");
    sc_search->add_option("--threads", search_threads, "worker threads")->capture_default_str();
    sc_search->add_flag("--unguarded", search_unguarded, "ignore the search guard");
    add_format(sc_search);

    // explain
    std::string ex_a, ex_b, ex_range;
    int ex_threads = default_threads;
    auto* sc_explain = app.add_subcommand("explain", "explain why two patterns share a signature (errors if they do not)");
    sc_explain->add_option("--q", ex_a, "first pattern")->required();
    sc_explain->add_option("--q2", ex_b, "second pattern")->required();
    sc_explain->add_option("--n", ex_range, "inclusive range a..b (default h..h+4)");
    sc_explain->add_option("--threads", ex_threads, "worker threads")->capture_default_str();
    add_format(sc_explain);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(sc_catalan)) return cmd_catalan(parse_range(catalan_range), format);
        if (app.got_subcommand(sc_enum))
            return cmd_enumerate(enum_n, enum_avoid, enum_limit, enum_unguarded, format);
        if (app.got_subcommand(sc_count)) return cmd_count(count_perm, count_pattern, count_list, format);
        if (app.got_subcommand(sc_total))
            return cmd_total(parse_range(total_range), total_pattern, total_avoid, total_threads,
                             total_unguarded, format);
        if (app.got_subcommand(sc_sig))
            return cmd_signature(parse_range(sig_range), sig_pattern, sig_threads, sig_unguarded,
                                 format);
        if (app.got_subcommand(sc_vt))
            return cmd_verify_triple(vt_nmax, vt_threads, vt_unguarded, format);
        if (app.got_subcommand(sc_vg))
            return cmd_verify_general(vg_q, vg_t, vg_u, parse_range(vg_range), vg_threads,
                                      vg_unguarded, format);
        if (app.got_subcommand(sc_bj)) {
            if (!bj_apply.empty()) return cmd_bijection_apply(bj_apply, format);
            if (bj_n_opt->count() == 0)
                throw CLI::ValidationError("bijection", "pass --n to verify or --apply to map one tree");
            return cmd_bijection_verify(bj_n, bj_q, bj_t, bj_u, bj_override, bj_threads, format);
        }
        if (app.got_subcommand(sc_series)) return cmd_series(series_which, series_order, format);
        if (app.got_subcommand(sc_ca)) return cmd_closed_a(ca_n, format);
        if (app.got_subcommand(sc_search)) {
            const NRange range = search_range.empty() ? NRange{search_h, search_h + 4}
                                                      : parse_range(search_range);
            return cmd_search(search_h, range, search_pairs, search_threads, search_unguarded,
                              format);
        }
        if (app.got_subcommand(sc_explain)) {
            const int h = static_cast<int>(parse_permutation(ex_a).size());
            const NRange range = ex_range.empty() ? NRange{h, h + 4} : parse_range(ex_range);
            return cmd_explain(ex_a, ex_b, range, ex_threads, format);
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const NotEquivalentError& e) {
        std::cerr << "not equivalent: " << e.what() << "\n";
        return 1;
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
