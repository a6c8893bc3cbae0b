// Acceptance suite: runs every top-level claim the library is built to
// verify, printing one PASS/FAIL line per criterion. All comparisons are
// exact; the two timed criteria also enforce their wall-clock budgets.
// Exit code 0 iff every criterion passes.

#include <chrono>
#include <cstring>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "patsym/avoiders.hpp"
#include "patsym/colored_tree.hpp"
#include "patsym/equiv.hpp"
#include "patsym/parallel.hpp"
#include "patsym/pattern_forms.hpp"
#include "patsym/permutation.hpp"
#include "patsym/series.hpp"

using namespace patsym;
using Clock = std::chrono::steady_clock;

namespace {

int g_threads = 1;

Permutation P(const std::string& s) { return parse_permutation(s); }

// Brute-force totals are reused across criteria; cache them.
std::map<std::pair<int, std::string>, Int> g_cache;

const Int& total(int n, const Permutation& q) {
    const auto key = std::make_pair(n, to_string(q));
    auto it = g_cache.find(key);
    if (it == g_cache.end())
        it = g_cache.emplace(key, total_occurrences(n, q, pattern_132(), g_threads)).first;
    return it->second;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

// 1. Brute-force totals of 231, 312 and 213 agree for 1 <= n <= 12, with the
//    n = 3 value equal to 1, inside a 60 s budget.
Outcome criterion_triple() {
    Outcome out;
    const auto start = Clock::now();
    for (int n = 1; n <= 12; ++n) {
        const Int& a = total(n, P("231"));
        const Int& b = total(n, P("312"));
        const Int& c = total(n, P("213"));
        if (!(a == b && b == c))
            out.fail("totals differ at n=" + std::to_string(n) + ": " + a.str() + "," + b.str() +
                     "," + c.str());
    }
    if (total(3, P("231")) != 1 || total(3, P("312")) != 1 || total(3, P("213")) != 1)
        out.fail("n=3 values are not 1,1,1");
    const double elapsed = seconds_since(start);
    if (elapsed > 60.0) out.fail("exceeded 60 s budget");
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += "S(12) = " + total(12, P("213")).str() + ", " +
                  std::to_string(elapsed).substr(0, 5) + " s";
    return out;
}

// 2. The closed form equals the brute-force 213 totals for 3 <= n <= 12,
//    with spot values 1 and 11 at n = 3, 4.
Outcome criterion_closed_form() {
    Outcome out;
    for (int n = 3; n <= 12; ++n)
        if (total_213_closed_form(n) != total(n, P("213")))
            out.fail("mismatch at n=" + std::to_string(n));
    if (total_213_closed_form(3) != 1) out.fail("closed form at n=3 is not 1");
    if (total_213_closed_form(4) != 11) out.fail("closed form at n=4 is not 11");
    return out;
}

// 3. Series coefficients match brute-force statistics for n <= 12 (spot
//    values d_3 = 8, h_3 = 7, z_3 = 15), and the 213 and 231 series agree
//    coefficientwise to order 200 within 5 s.
Outcome criterion_series() {
    Outcome out;
    const int N = 12;
    const auto d = inversion_total_series(N).integer_coefficients();
    const auto h = noninversion_total_series(N).integer_coefficients();
    const auto z = entry_total_series(N).integer_coefficients();
    const auto a = total_213_series(N).integer_coefficients();
    const auto b = total_231_series(N).integer_coefficients();
    for (int n = 0; n <= N; ++n) {
        const auto i = static_cast<std::size_t>(n);
        if (d[i] != total(n, P("21"))) out.fail("inversion series wrong at n=" + std::to_string(n));
        if (h[i] != total(n, P("12")))
            out.fail("non-inversion series wrong at n=" + std::to_string(n));
        if (n >= 1 && z[i] != total(n, P("1")))
            out.fail("entry series wrong at n=" + std::to_string(n));
        if (a[i] != total(n, P("213"))) out.fail("213 series wrong at n=" + std::to_string(n));
        if (b[i] != total(n, P("231"))) out.fail("231 series wrong at n=" + std::to_string(n));
    }
    if (d[3] != 8) out.fail("d_3 != 8");
    if (h[3] != 7) out.fail("h_3 != 7");
    if (z[3] != 15) out.fail("z_3 != 15");

    const auto start = Clock::now();
    const auto a200 = total_213_series(200).integer_coefficients();
    const auto b200 = total_231_series(200).integer_coefficients();
    const double elapsed = seconds_since(start);
    if (a200 != b200) out.fail("order-200 coefficients differ");
    if (elapsed > 5.0) out.fail("order-200 comparison exceeded 5 s");
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += "order-200 check " + std::to_string(elapsed).substr(0, 5) + " s";
    return out;
}

// 4. The recurrences reproduce the series coefficients to order 50.
Outcome criterion_recurrences() {
    Outcome out;
    if (total_213_by_recurrence(50) != total_213_series(50).integer_coefficients())
        out.fail("213 recurrence drifts from the series");
    if (total_231_by_recurrence(50) != total_231_series(50).integer_coefficients())
        out.fail("231 recurrence drifts from the series");
    return out;
}

// 5. The three-letter bijection is exhaustive-verified for n <= 9:
//    images land on the correct side, round trips are identities, the source
//    and target counts agree with the brute-force totals, and the left
//    subtrees of the first two black vertices survive the map.
Outcome criterion_bijection_three() {
    Outcome out;
    for (int n = 3; n <= 9; ++n) {
        BijectionLimits lim;
        lim.threads = g_threads;
        const BijectionReport rep = verify_bijection(n, P("1"), P("1"), 1, lim);
        if (!rep.passed()) out.fail("report failed at n=" + std::to_string(n));
        if (rep.source_count != rep.target_count)
            out.fail("side counts differ at n=" + std::to_string(n));
        if (rep.source_count != total(n, P("213")))
            out.fail("side count is not the 213 total at n=" + std::to_string(n));
        if (!rep.left_subtrees_preserved)
            out.fail("left subtrees moved at n=" + std::to_string(n));
    }
    return out;
}

// 6. The general bijection is exhaustive-verified for (q=1,t=1,u=2) and for
//    (q=12,t=12,u=2) at every n <= 10.
Outcome criterion_bijection_general() {
    Outcome out;
    struct Instance {
        const char* q;
        const char* t;
        int u;
    };
    for (const Instance& inst : {Instance{"1", "1", 2}, Instance{"12", "12", 2}}) {
        const int h = P(inst.q).size() + P(inst.t).size() + inst.u;
        for (int n = h; n <= 10; ++n) {
            BijectionLimits lim;
            lim.threads = g_threads;
            const BijectionReport rep = verify_bijection(n, P(inst.q), P(inst.t), inst.u, lim);
            if (!rep.passed())
                out.fail(std::string("failed for q=") + inst.q + " t=" + inst.t + " u=" +
                         std::to_string(inst.u) + " at n=" + std::to_string(n));
        }
    }
    const Permutation fig_source = source_pattern(P("12"), P("12"), 2);
    const Permutation fig_target = target_pattern(P("12"), P("12"), 2);
    if (!(fig_source == P("341256")) || !(fig_target == P("345612")))
        out.fail("block composition does not reproduce the 341256/345612 pair");
    return out;
}

// 7. The nine-letter pair has equal brute-force totals for 9 <= n <= 12.
Outcome criterion_nine_letter() {
    Outcome out;
    const Permutation a = P("645721389");
    const Permutation b = P("645789213");
    for (int n = 9; n <= 12; ++n) {
        if (total(n, a) != total(n, b)) out.fail("totals differ at n=" + std::to_string(n));
    }
    out.detail = "S(12) = " + total(12, a).str();
    return out;
}

// 8. Splitting the top run: totals of 2314 and 2134 agree for n <= 11.
Outcome criterion_split() {
    Outcome out;
    const Permutation split = split_pattern(P("1"), P("1"), 2, 1);
    const Permutation whole = source_pattern(P("1"), P("1"), 2);
    if (!(split == P("2314")) || !(whole == P("2134")))
        out.fail("split construction built unexpected patterns");
    for (int n = 4; n <= 11; ++n)
        if (total(n, split) != total(n, whole)) out.fail("totals differ at n=" + std::to_string(n));
    return out;
}

// 9. Signature classes for length 3 over n in [3,8] are exactly
//    {123} {321} {132} {213,231,312}, and the u=1 exchange-pair counts equal
//    catalan(h-2) for h = 3, 4, 5.
Outcome criterion_classes() {
    Outcome out;
    const auto classes = classify_patterns(3, 3, 8, pattern_132(), g_threads);
    auto members = [](const EquivClass& cls) {
        std::vector<std::string> out_names;
        for (const auto& m : cls.members) out_names.push_back(to_string(m));
        return out_names;
    };
    if (classes.size() != 4) {
        out.fail("expected 4 classes, got " + std::to_string(classes.size()));
    } else {
        if (members(classes[0]) != std::vector<std::string>{"123"}) out.fail("class {123} missing");
        if (members(classes[1]) != std::vector<std::string>{"132"}) out.fail("class {132} missing");
        if (members(classes[2]) != std::vector<std::string>{"213", "231", "312"})
            out.fail("class {213,231,312} missing");
        if (members(classes[3]) != std::vector<std::string>{"321"}) out.fail("class {321} missing");
    }
    for (int h = 3; h <= 5; ++h) {
        Int u1 = 0;
        for (const auto& pr : exchange_pairs(h))
            if (pr.has_witness_with_u(1)) ++u1;
        if (u1 != catalan(h - 2))
            out.fail("u=1 pair count at h=" + std::to_string(h) + " is " + u1.str());
    }
    return out;
}

// 10. Growth ordering at desk scale: at n = 12 the totals satisfy
//     S(321) > S(213) > S(123), and both ratios increase over n = 8..12.
Outcome criterion_ordering() {
    Outcome out;
    if (!(total(12, P("321")) > total(12, P("213")) && total(12, P("213")) > total(12, P("123"))))
        out.fail("ordering fails at n=12");
    Rat prev_hi(0), prev_lo(0);
    for (int n = 8; n <= 12; ++n) {
        const Rat hi = Rat(total(n, P("321"))) / Rat(total(n, P("213")));
        const Rat lo = Rat(total(n, P("213"))) / Rat(total(n, P("123")));
        if (n > 8 && !(hi > prev_hi)) out.fail("upper ratio not increasing at n=" + std::to_string(n));
        if (n > 8 && !(lo > prev_lo)) out.fail("lower ratio not increasing at n=" + std::to_string(n));
        prev_hi = hi;
        prev_lo = lo;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    g_threads = default_thread_count();
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
        if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
            g_threads = std::max(1, std::atoi(argv[i + 1]));
    }

    struct Entry {
        int id;
        const char* name;
        Outcome (*run)();
    };
    const Entry entries[] = {
        {1, "triple symmetry of 231/312/213 totals, n <= 12", criterion_triple},
        {2, "closed form equals brute force, 3 <= n <= 12", criterion_closed_form},
        {3, "counting series match brute force; 213/231 series agree to order 200",
         criterion_series},
        {4, "recurrences reproduce the series to order 50", criterion_recurrences},
        {5, "three-letter bijection exhaustive for n <= 9", criterion_bijection_three},
        {6, "general bijection exhaustive for (1,1,2) and (12,12,2), n <= 10",
         criterion_bijection_general},
        {7, "nine-letter pair totals agree, 9 <= n <= 12", criterion_nine_letter},
        {8, "top-run split keeps totals equal, n <= 11", criterion_split},
        {9, "signature classes at h=3 and u=1 pair counts", criterion_classes},
        {10, "growth ordering and ratio monotonicity at n = 8..12", criterion_ordering},
    };

    bool all_ok = true;
    for (const Entry& e : entries) {
        if (only != 0 && e.id != only) continue;
        const auto start = Clock::now();
        const Outcome out = e.run();
        all_ok = all_ok && out.ok;
        std::cout << (out.ok ? "PASS" : "FAIL") << "  criterion " << e.id << ": " << e.name
                  << "  [" << std::to_string(seconds_since(start)).substr(0, 6) << " s]";
        if (!out.detail.empty()) std::cout << "  (" << out.detail << ")";
        std::cout << "\n" << std::flush;
    }
    std::cout << (all_ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << "\n";
    return all_ok ? 0 : 1;
}
