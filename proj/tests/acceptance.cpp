// Acceptance run: one PASS/FAIL line per criterion. An optional argument
// selects a single criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gkt/family.hpp"
#include "gkt/graph_io.hpp"
#include "gkt/ktheory.hpp"
#include "gkt/blend.hpp"
#include "gkt/smith.hpp"
#include "gkt/straighten.hpp"
#include "gkt/synthesis.hpp"
#include "oracles.hpp"

using namespace gkt;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

const long kOrders[] = {2, 3, 4, 9};

IntVector to_ints(const std::vector<long>& v) { return IntVector(v.begin(), v.end()); }

Outcome case_i_grid() {
    Outcome o;
    int count = 0;
    std::vector<std::vector<long>> torsions = {{}};
    for (long a : kOrders) torsions.push_back({a});
    for (long a : kOrders)
        for (long b : kOrders) torsions.push_back({a, b});
    for (std::size_t ell = 0; ell <= 3; ++ell) {
        for (const auto& tor : torsions) {
            if (ell == 0 && tor.empty()) continue;
            KTheoryResult k = ktheory(build_case_i(ell, tor));
            FgAbelianGroup want0 = FgAbelianGroup::from_invariants(ell, to_ints(tor));
            ++count;
            if (!k.k0.isomorphic(want0) || !k.k1.isomorphic(FgAbelianGroup::free(ell))) {
                o.pass = false;
                o.detail = "l=" + std::to_string(ell) + " gives (" + format_group(k.k0) + ", " + format_group(k.k1) + ")";
                return o;
            }
        }
    }
    o.detail = std::to_string(count) + " graphs";
    return o;
}

Outcome p_infinity() {
    SynthesisRequest req{parse_group_expr("0"), parse_group_expr("Z"), 6, 2};
    SynthesisResult r = synthesize(req);
    Outcome o;
    o.pass = r.verified && r.stabilized && r.k0.is_trivial() && r.k1.isomorphic(FgAbelianGroup::free(1)) &&
             r.case_tag == SynthesisCase::ii && r.ell == 2 && r.p == 1;
    o.detail = "(" + format_group(r.k0) + ", " + format_group(r.k1) + "), stabilized " + (r.stabilized ? "yes" : "no");
    return o;
}

// Synthesizes, serializes, re-parses and recomputes from the parsed document.
bool roundtrip(const FgAbelianGroup& g0, const FgAbelianGroup& g1, std::string& why) {
    SynthesisResult r = synthesize({g0, g1});
    if (!r.verified) {
        why = "not verified";
        return false;
    }
    GraphDocument doc = parse_graph_document(r.graph ? dump_graph(*r.graph) : dump_graph(*r.chain));
    FgAbelianGroup k0, k1;
    if (doc.is_chain) {
        ChainKTheory ck = chain_ktheory(doc.chain);
        if (!ck.stabilized) {
            why = "reparsed chain not stabilized";
            return false;
        }
        k0 = ck.k0;
        k1 = ck.k1;
    } else {
        KTheoryResult k = ktheory(doc.graph);
        k0 = k.k0;
        k1 = k.k1;
    }
    if (!k0.isomorphic(g0) || !k1.isomorphic(g1)) {
        why = "reparsed graph gives (" + format_group(k0) + ", " + format_group(k1) + ")";
        return false;
    }
    return true;
}

Outcome synthesis_grid() {
    Outcome o;
    std::vector<std::vector<long>> torsions = {{}};
    for (std::size_t i = 0; i < 4; ++i) {
        torsions.push_back({kOrders[i]});
        for (std::size_t j = i; j < 4; ++j) torsions.push_back({kOrders[i], kOrders[j]});
    }
    int count = 0, failed = 0;
    for (std::size_t r0 = 0; r0 <= 3; ++r0) {
        for (std::size_t r1 = 0; r1 <= 3; ++r1) {
            for (const auto& tor : torsions) {
                if (r0 == 0 && r1 == 0 && tor.empty()) continue;
                FgAbelianGroup g0 = FgAbelianGroup::from_invariants(r0, to_ints(tor));
                FgAbelianGroup g1 = FgAbelianGroup::free(r1);
                ++count;
                std::string why;
                bool ok = false;
                try {
                    ok = roundtrip(g0, g1, why);
                } catch (const std::exception& e) {
                    why = e.what();
                }
                if (!ok) {
                    ++failed;
                    if (o.detail.empty()) o.detail = "first failure (" + format_group(g0) + ", " + format_group(g1) + "): " + why + "; ";
                }
            }
        }
    }
    o.pass = failed == 0;
    o.detail += std::to_string(count - failed) + "/" + std::to_string(count) + " requests";
    return o;
}

Outcome case_ii_layers() {
    const std::size_t p = 1;
    GraphChain c = build_case_ii(3, p, {}, 5);
    Outcome o;
    std::vector<KTheoryResult> ks;
    std::vector<FiniteGraph> gs;
    for (std::size_t n = 0; n <= 4; ++n) {
        gs.push_back(c.layer(n));
        ks.push_back(ktheory(gs.back()));
        if (!ks.back().k1.isomorphic(FgAbelianGroup::free(2))) {
            o.pass = false;
            o.detail = "K1 at layer " + std::to_string(n) + " is " + format_group(ks.back().k1);
            return o;
        }
    }
    std::ostringstream ranks;
    for (std::size_t n = 0; n < 4; ++n) {
        FgAbelianGroup ker = hom_kernel(inclusion_k0(gs[n], ks[n], gs[n + 1], ks[n + 1]));
        ranks << (n ? "," : "") << ker.free_rank();
        if (ker.free_rank() != p + 1 || !ker.is_free()) o.pass = false;
    }
    o.detail = "K1 = Z^2 on layers 0-4, kernel ranks " + ranks.str();
    return o;
}

Outcome les_suite() {
    oracle::Gen gen(20240601);
    int passed = 0;
    Outcome o;
    for (int trial = 0; trial < 200; ++trial) {
        FiniteGraph g = gen.graph(6, 12, 3, true);
        LesReport r = les_check(g);
        if (r.all_passed()) {
            ++passed;
        } else if (o.detail.empty()) {
            for (const auto& n : r.nodes)
                if (!n.passed) o.detail = "first failure at " + n.name + "; ";
        }
    }
    o.pass = passed == 200;
    o.detail += std::to_string(passed) + "/200 graphs";
    return o;
}

Outcome snf_suite() {
    oracle::Gen gen(8128);
    int passed = 0;
    for (int trial = 0; trial < 500; ++trial) {
        auto r = static_cast<std::size_t>(gen.uniform(1, 8));
        auto c = static_cast<std::size_t>(gen.uniform(1, 8));
        IntMatrix m = gen.matrix(r, c, 9);
        SmithDecomposition s = smith_normal_form(m);
        bool ok = s.u * m * s.v == s.d && abs(determinant(s.u)) == 1 && abs(determinant(s.v)) == 1;
        for (std::size_t i = 0; i < r && ok; ++i)
            for (std::size_t j = 0; j < c && ok; ++j)
                if (i != j && s.d(i, j) != 0) ok = false;
        IntVector diag = s.diagonal();
        for (std::size_t i = 0; i + 1 < diag.size() && ok; ++i) {
            if (diag[i] < 0) ok = false;
            else if (diag[i] == 0) ok = diag[i + 1] == 0;
            else ok = diag[i + 1] % diag[i] == 0;
        }
        if (ok) ++passed;
    }
    return {passed == 500, std::to_string(passed) + "/500 matrices"};
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

Outcome straighten_suite() {
    Outcome o;
    const double defects[] = {1e-2, 1e-3, 1e-4};
    double worst_residual = 0.0, worst_v = 0.0;
    std::vector<double> medians;
    for (double d : defects) {
        std::vector<double> dist;
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            std::mt19937_64 rng(seed);
            StraightenTrial t = straighten_trial(rng, 6, d);
            worst_residual = std::max(worst_residual, t.residual);
            worst_v = std::max(worst_v, t.property_v);
            dist.push_back(t.distance);
        }
        medians.push_back(median(dist));
    }
    o.pass = worst_residual <= 1e-10 && worst_v <= 1e-12 && medians[0] > medians[1] && medians[1] > medians[2];
    char buf[200];
    std::snprintf(buf, sizeof buf, "max residual %.2e, max property (v) %.2e, median distances %.2e > %.2e > %.2e",
                  worst_residual, worst_v, medians[0], medians[1], medians[2]);
    o.detail = buf;
    return o;
}

Outcome w_scenarios() {
    Outcome o;
    double worst_j = 0.0, worst_final = 0.0;
    for (WCase c : {WCase::i, WCase::ii}) {
        WScenario sc = canonical_scenario(c);
        std::vector<DefectReport> reps;
        for (double t : {0.5, 0.9, 0.99}) reps.push_back(blend_w(sc.a, sc.b, sc.r, t, c).report);
        for (const auto& [name, v0] : reps[0].defects) {
            const double v1 = reps[1].defect(name), v2 = reps[2].defect(name);
            if (!(v0 > v1 && v1 > v2) || v2 > 0.1) {
                o.pass = false;
                o.detail += sc.name + " " + name + " not decreasing below 0.1; ";
            }
            worst_final = std::max(worst_final, v2);
        }
        for (const auto& rep : reps)
            for (const auto& [name, v] : rep.j_residuals) worst_j = std::max(worst_j, v);
    }
    if (worst_j > 1e-10) o.pass = false;
    char buf[160];
    std::snprintf(buf, sizeof buf, "largest defect at t=0.99 %.3e, largest J residual %.2e", worst_final, worst_j);
    o.detail += buf;
    return o;
}

Outcome family_suite() {
    Outcome o;
    for (int which = 1; which <= 3; ++which) {
        FamilyExample ex = family_example(which);
        std::string tag = "example " + std::to_string(which) + " (" + ex.name + ")";
        try {
            FamilyResult r = straighten_family(ex.f, ex.g, ex.d, ex.c, ex.tol);
            bool same = true;
            for (const auto& e : ex.f.edges())
                for (std::size_t s = 0; s < ex.c.at(e.id).num_points(); ++s)
                    if (!(r.a.at(e.id)[s] == ex.c.at(e.id)[s])) same = false;
            char buf[120];
            std::snprintf(buf, sizeof buf, ": residual %.2e, F edges %s; ", r.residual, same ? "unchanged" : "CHANGED");
            o.detail += tag + buf;
            if (r.residual > 1e-10 || !same) o.pass = false;
        } catch (const LabError& e) {
            o.pass = false;
            o.detail += tag + ": " + e.what() + "; ";
        }
    }
    o.detail.resize(o.detail.size() - 2);
    return o;
}

struct Criterion {
    int number;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all = {
        {1, "case (i) K-theory grid", 5, case_i_grid},
        {2, "P-infinity synthesis", 5, p_infinity},
        {3, "full synthesis grid roundtrip", 60, synthesis_grid},
        {4, "case (ii) per-layer structure", 0, case_ii_layers},
        {5, "six-term exact sequence suite", 30, les_suite},
        {6, "Smith normal form suite", 0, snf_suite},
        {7, "straightening suite", 10, straighten_suite},
        {8, "w construction scenarios", 10, w_scenarios},
        {9, "family straightening examples", 10, family_suite},
    };
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    bool all_pass = true;
    for (const auto& c : all) {
        if (only && c.number != only) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_s > 0 && secs > c.budget_s) {
            o.pass = false;
            o.detail += "; over the time budget";
        }
        std::printf("%s criterion %d: %s (%s; %.2f s)\n", o.pass ? "PASS" : "FAIL", c.number, c.title,
                    o.detail.c_str(), secs);
        all_pass = all_pass && o.pass;
    }
    return all_pass ? 0 : 1;
}
