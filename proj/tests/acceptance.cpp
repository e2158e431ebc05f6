// Acceptance checks, one numbered criterion per line of output:
//
//   criterion N: PASS  <what was checked>
//   criterion N: FAIL  <what was checked>
//       <detail lines>
//
// With no arguments every criterion runs; arguments select criteria by
// number. Exit 0 iff all selected criteria pass. Tolerances and grid
// bounds are pinned here on purpose; loosening them is an interface change.

#include "qp/bisnomial.hpp"
#include "qp/golden_tables.hpp"
#include "qp/qanalogue.hpp"
#include "qp/quasi.hpp"
#include "qp/rays.hpp"
#include "qp/series_suite.hpp"
#include "qp/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qp;

constexpr double kRootOfUnityTolerance = 1e-6;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool ok = true;
    std::vector<std::string> details;

    void fail(const std::string& msg) {
        ok = false;
        details.push_back(msg);
    }
    void note(const std::string& msg) { details.push_back(msg); }
};

std::string istr(const ExactInt& v) { return v.str(); }

// 1. the regenerated s=2 triangle reproduces the printed rows 0..9 exactly
Outcome criterion_triangle_reproduction() {
    Outcome out;
    auto t0 = Clock::now();
    TriangleTable t = triangle_rows(2, 10);
    double secs = seconds_since(t0);

    const auto& printed = golden_tribonacci_table();
    if (t.rows.size() != printed.size()) {
        out.fail("row count mismatch");
        return out;
    }
    std::size_t entries = 0;
    for (std::size_t n = 0; n < printed.size(); ++n) {
        if (t.rows[n].size() != printed[n].size()) {
            out.fail("row " + std::to_string(n) + " has wrong length");
            continue;
        }
        for (std::size_t k = 0; k < printed[n].size(); ++k) {
            ++entries;
            if (t.rows[n][k] != printed[n][k])
                out.fail("entry (" + std::to_string(n) + "," + std::to_string(k) + ") = "
                         + istr(t.rows[n][k]) + ", table prints " + std::to_string(printed[n][k]));
        }
    }
    if (entries != 55) out.fail("expected 55 entries, compared " + std::to_string(entries));

    const std::vector<long long> row8{1, 15, 85, 231, 321, 231, 85, 15, 1};
    for (std::size_t k = 0; k < row8.size(); ++k)
        if (t.rows[8][k] != row8[k]) out.fail("row 8 deviates at k = " + std::to_string(k));

    if (secs >= 1.0) out.fail("regeneration took " + std::to_string(secs) + " s, budget is 1 s");
    return out;
}

// 2. the tables suite flags the printed s=3 entries that break the recurrence
Outcome criterion_erratum_detection() {
    Outcome out;
    SuiteResult res = run_suite("tables");
    if (!res.pass) out.fail("tables suite reported a failure");
    if (res.errata.empty()) out.fail("expected a non-empty erratum list");
    for (const Erratum& e : res.errata)
        out.note("printed (" + std::to_string(e.row) + "," + std::to_string(e.col) + ") = "
                 + istr(e.printed) + ", recurrence gives " + istr(e.recomputed));
    return out;
}

// 3. six quasi-coefficient routes agree cell by cell, oracle included
Outcome criterion_quasi_routes() {
    Outcome out;
    auto t0 = Clock::now();
    std::size_t cells = 0;
    for (int s = 1; s <= 4; ++s)
        for (long long n = 0; n <= 12; ++n)
            for (long long k = 0; k <= n; ++k) {
                ++cells;
                ExactInt ref = quasi_by_lattice_oracle(s, n, k);
                struct Route {
                    const char* name;
                    ExactInt value;
                } routes[] = {
                    {"recurrence", quasi_by_recurrence(s, n, k)},
                    {"explicit_binomial", quasi_by_explicit_binomial(s, n, k)},
                    {"multinomial", quasi_by_explicit_multinomial(s, n, k)},
                    {"spascal_link", quasi_by_spascal_link(s, n, k)},
                    {"demoivre_dual", quasi_by_demoivre_dual(s, n, k)},
                };
                for (const auto& rt : routes)
                    if (rt.value != ref)
                        out.fail(std::string(rt.name) + "(s=" + std::to_string(s) + ",n="
                                 + std::to_string(n) + ",k=" + std::to_string(k) + ") = "
                                 + istr(rt.value) + ", oracle gives " + istr(ref));
            }
    double secs = seconds_since(t0);
    if (cells != 4 * 91) out.fail("grid covered " + std::to_string(cells) + " cells, expected 364");
    if (secs >= 30.0) out.fail("routes took " + std::to_string(secs) + " s, budget is 30 s");
    return out;
}

// 4. five power-expansion routes plus symmetry and row sums
Outcome criterion_bisnomial_routes() {
    Outcome out;
    for (int s = 1; s <= 4; ++s)
        for (long long n = 0; n <= 12; ++n) {
            const long long top = static_cast<long long>(s) * n;
            ExactInt row_sum = 0;
            for (long long k = 0; k <= top; ++k) {
                ExactInt ref = bisnomial_by_expansion(s, n, k);
                row_sum += ref;
                if (bisnomial_by_nested_sum(s, n, k) != ref
                    || bisnomial_by_longitudinal(s, n, k) != ref
                    || bisnomial_by_diagonal(s, n, k) != ref
                    || bisnomial_by_demoivre(s, n, k) != ref)
                    out.fail("route disagreement at (s=" + std::to_string(s) + ",n="
                             + std::to_string(n) + ",k=" + std::to_string(k) + ")");
                if (ref != bisnomial_by_expansion(s, n, top - k))
                    out.fail("symmetry broken at (s=" + std::to_string(s) + ",n="
                             + std::to_string(n) + ",k=" + std::to_string(k) + ")");
            }
            if (row_sum != int_pow(ExactInt(s + 1), static_cast<unsigned long long>(n)))
                out.fail("row sum of (s=" + std::to_string(s) + ",n=" + std::to_string(n)
                         + ") is " + istr(row_sum));
        }
    return out;
}

// 5. both root-of-unity evaluations stay inside the pinned tolerance
Outcome criterion_root_of_unity() {
    Outcome out;
    double worst_expansion = 0.0, worst_dual = 0.0;
    for (int s = 2; s <= 3; ++s)
        for (long long n = 0; n <= 10; ++n) {
            for (long long k = 0; k <= static_cast<long long>(s) * n; ++k) {
                double err = detail::root_of_unity_bisnomial_error(s, n, k);
                worst_expansion = std::max(worst_expansion, err);
                if (err > kRootOfUnityTolerance)
                    out.fail("expansion form off by " + std::to_string(err) + " at (s="
                             + std::to_string(s) + ",n=" + std::to_string(n) + ",k="
                             + std::to_string(k) + ")");
            }
            for (long long k = 0; k <= n; ++k) {
                double err = detail::root_of_unity_dual_error(s, n, k);
                worst_dual = std::max(worst_dual, err);
                if (err > kRootOfUnityTolerance)
                    out.fail("dual form off by " + std::to_string(err) + " at (s="
                             + std::to_string(s) + ",n=" + std::to_string(n) + ",k="
                             + std::to_string(k) + ")");
            }
        }
    std::ostringstream os;
    os << "worst absolute errors: expansion form " << worst_expansion << ", dual form "
       << worst_dual << " (tolerance " << kRootOfUnityTolerance << ")";
    out.note(os.str());
    return out;
}

// 6. diagonal sums give the classical sequences and the order-(s+1) recurrence
Outcome criterion_sbonacci() {
    Outcome out;
    const std::vector<long long> fib{0, 1, 1, 2, 3, 5, 8, 13, 21, 34};
    const std::vector<long long> trib{0, 1, 1, 2, 4, 7, 13, 24, 44, 81};
    auto check_prefix = [&](int s, const std::vector<long long>& want) {
        auto got = sbonacci(s, static_cast<long long>(want.size()));
        for (std::size_t i = 0; i < want.size(); ++i)
            if (got[i] != want[i])
                out.fail("s=" + std::to_string(s) + " term " + std::to_string(i) + " is "
                         + istr(got[i]) + ", expected " + std::to_string(want[i]));
    };
    check_prefix(1, fib);
    check_prefix(2, trib);
    for (int s = 1; s <= 4; ++s) {
        auto t = sbonacci(s, 30);
        for (std::size_t n = 1; n + 1 < t.size(); ++n) {
            ExactInt sum = 0;
            for (int j = 0; j <= s; ++j)
                if (n >= static_cast<std::size_t>(j)) sum += t[n - static_cast<std::size_t>(j)];
            if (t[n + 1] != sum)
                out.fail("order-" + std::to_string(s + 1) + " recurrence fails at term "
                         + std::to_string(n + 1));
        }
    }
    return out;
}

// 7. transversal recurrence across the direction grid, 15 indices from
// alpha*s + r upward
Outcome criterion_transversal_recurrence() {
    Outcome out;
    for (int s = 2; s <= 3; ++s)
        for (long long alpha = 1; alpha <= 3; ++alpha)
            for (long long beta = 0; beta < alpha; ++beta)
                for (long long r = -alpha + 1; r <= 3; ++r) {
                    Direction d(alpha, beta, r);
                    long long start = alpha * s + r;
                    for (long long n = start; n < start + 15; ++n)
                        if (!ray_recurrence_holds_at(s, d, n))
                            out.fail("fails at n=" + std::to_string(n) + " for s="
                                     + std::to_string(s) + ", alpha=" + std::to_string(alpha)
                                     + ", beta=" + std::to_string(beta) + ", r="
                                     + std::to_string(r));
                }
    if (!out.ok)
        out.note("every failing index lies below n = alpha + beta*(s-1) + 1; from that "
                 "bound on the recurrence held at every grid point");
    return out;
}

// 8. series expansions match the coefficient routes; q-series match exactly
Outcome criterion_generating_functions() {
    Outcome out;
    auto absorb = [&](const GfCheckReport& rep) {
        if (rep.pass()) return;
        const GfMismatch& m = rep.mismatches.front();
        out.fail(rep.name + ": coefficient " + std::to_string(m.index) + " is " + istr(m.got)
                 + ", expected " + istr(m.expected) + " ("
                 + std::to_string(rep.mismatches.size()) + " mismatches)");
    };
    for (long long k = 0; k <= 12; ++k) absorb(check_binomial_gf(k, 24));
    for (int s = 1; s <= 4; ++s)
        for (long long k = 0; k <= 12; ++k) absorb(check_quasi_gf(s, k, 24));
    for (int s = 2; s <= 3; ++s)
        for (long long alpha = 1; alpha <= 3; ++alpha)
            for (long long beta = 0; beta < alpha; ++beta)
                for (long long r = -alpha + 1; r <= 3; ++r)
                    absorb(check_ray_gf(s, Direction(alpha, beta, r), 24));
    for (int s = 1; s <= 3; ++s)
        for (long long k = 0; k <= 6; ++k) {
            Series<QPoly> gf = q_quasi_gf(s, k, 12);
            for (std::size_t n = 0; n < 12; ++n)
                if (gf[n] != q_quasi(s, static_cast<long long>(n), k))
                    out.fail("q series (s=" + std::to_string(s) + ",k=" + std::to_string(k)
                             + ") deviates at x^" + std::to_string(n));
        }
    return out;
}

// 9. q-layer: route agreement, q=1 specialization, q-binomial and q-sequence
// recurrences
Outcome criterion_q_layer() {
    Outcome out;
    for (int s = 1; s <= 3; ++s)
        for (long long n = 0; n <= 10; ++n)
            for (long long k = 0; k <= n; ++k) {
                QPoly a = q_quasi(s, n, k, QQuasiRoute::recurrence_a);
                QPoly b = q_quasi(s, n, k, QQuasiRoute::recurrence_b);
                QPoly e = q_quasi_by_explicit(s, n, k);
                if (a != b || a != e)
                    out.fail("q routes disagree at (s=" + std::to_string(s) + ",n="
                             + std::to_string(n) + ",k=" + std::to_string(k) + ")");
                if (qpoly_eval_at_one(a) != quasi_by_recurrence(s, n, k))
                    out.fail("q=1 specialization wrong at (s=" + std::to_string(s) + ",n="
                             + std::to_string(n) + ",k=" + std::to_string(k) + ")");
            }
    if (!verify_q_binomial_recurrences(15)) out.fail("a q-binomial recurrence broke for n <= 15");
    for (int s = 1; s <= 3; ++s)
        if (!verify_q_sbonacci_recurrences(s, 12))
            out.fail("a q-sequence recurrence broke for s = " + std::to_string(s));
    return out;
}

// 10. index-exchanged lattice table equals the quasi triangle
Outcome criterion_delannoy_correspondence() {
    Outcome out;
    for (int s = 1; s <= 4; ++s)
        if (!verify_delannoy_correspondence(s, 12))
            out.fail("correspondence broke for s = " + std::to_string(s));
    return out;
}

// 11. alternating binomial identity, exhaustively at desk scale
Outcome criterion_alternating_identity() {
    Outcome out;
    for (long long a = 0; a <= 12; ++a)
        for (long long b = 0; b <= 12; ++b)
            for (long long alpha = 0; alpha <= a; ++alpha)
                if (!verify_alternating_lemma(a, b, alpha))
                    out.fail("identity fails at a=" + std::to_string(a) + ", b="
                             + std::to_string(b) + ", alpha=" + std::to_string(alpha));
    return out;
}

struct Criterion {
    int id;
    const char* label;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "s=2 triangle rows 0..9 reproduce the printed table", criterion_triangle_reproduction},
    {2, "printed s=3 entries that break the recurrence are flagged", criterion_erratum_detection},
    {3, "six quasi-coefficient routes agree for s <= 4, n <= 12", criterion_quasi_routes},
    {4, "five expansion routes, symmetry, row sums for s <= 4, n <= 12", criterion_bisnomial_routes},
    {5, "root-of-unity evaluations within 1e-6 for s in {2,3}, n <= 10", criterion_root_of_unity},
    {6, "diagonal sums give Fibonacci/Tribonacci and the order-(s+1) recurrence", criterion_sbonacci},
    {7, "transversal recurrence on the direction grid, 15 indices from alpha*s+r", criterion_transversal_recurrence},
    {8, "series expansions match coefficient routes at order 24", criterion_generating_functions},
    {9, "q routes agree, q=1 specializes, q recurrences hold", criterion_q_layer},
    {10, "index-exchanged lattice table equals the quasi triangle", criterion_delannoy_correspondence},
    {11, "alternating binomial identity for 0 <= alpha <= a <= 12, b <= 12", criterion_alternating_identity},
};

} // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    if (argc == 1) {
        for (const Criterion& c : kCriteria) selected.push_back(c.id);
    } else {
        for (int i = 1; i < argc; ++i) {
            char* end = nullptr;
            long v = std::strtol(argv[i], &end, 10);
            if (end == argv[i] || *end != '\0' || v < 1 || v > 11) {
                std::cerr << "usage: acceptance [criterion-number ...] (1..11)\n";
                return 2;
            }
            selected.push_back(static_cast<int>(v));
        }
    }

    bool all_pass = true;
    for (int id : selected) {
        const Criterion& c = kCriteria[id - 1];
        Outcome out = c.run();
        all_pass = all_pass && out.ok;
        std::cout << "criterion " << c.id << ": " << (out.ok ? "PASS" : "FAIL") << "  "
                  << c.label << "\n";
        for (const std::string& d : out.details) std::cout << "    " << d << "\n";
    }
    return all_pass ? 0 : 1;
}
