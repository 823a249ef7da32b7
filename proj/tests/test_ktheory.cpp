#include "doctest.h"
#include "gkt/ktheory.hpp"
#include "gkt/synthesis.hpp"
#include "oracles.hpp"

using namespace gkt;

namespace {

IntVector delta(const FiniteGraph& g, const VertexId& plus, const VertexId& minus) {
    IntVector x = zero_vector(g.num_vertices());
    x[g.index_of(plus)] += 1;
    x[g.index_of(minus)] -= 1;
    return x;
}

// Brute-force membership: x(w) = Σ over in-edges of x(origin) at every w, x = 0 off S.
bool k1_oracle(const FiniteGraph& g, const IntVector& x) {
    for (std::size_t w = 0; w < g.num_vertices(); ++w) {
        Integer inflow = 0;
        for (const auto& e : g.edges())
            if (e.to == g.vertices()[w]) inflow += x[g.index_of(e.from)];
        if (inflow != x[w]) return false;
        if (!g.in_relation_set(g.vertices()[w]) && x[w] != 0) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("ktheory") {

TEST_CASE("single vertex examples") {
    FiniteGraph two({"v"}, {{"e1", "v", "v"}, {"e2", "v", "v"}});
    auto k = ktheory(two);
    CHECK(k.k0.is_trivial());
    CHECK(k.k1.is_trivial());

    FiniteGraph one({"v"}, {{"e", "v", "v"}});
    auto k1 = ktheory(one);
    CHECK(k1.k0.isomorphic(FgAbelianGroup::free(1)));
    CHECK(k1.k1.isomorphic(FgAbelianGroup::free(1)));

    auto t = ktheory(one.with_relation_exempt({"v"}));
    CHECK(t.k0.isomorphic(FgAbelianGroup::free(1)));
    CHECK(t.k1.is_trivial());

    FiniteGraph three({"v"}, {{"e1", "v", "v"}, {"e2", "v", "v"}, {"e3", "v", "v"}});
    CHECK(ktheory(three).k0.invariant_factors() == IntVector{2});
}

TEST_CASE("relation matrix rows") {
    FiniteGraph g({"a", "b"}, {{"ab", "a", "b"}, {"ba", "b", "a"}, {"bb", "b", "b"}}, {"a"});
    CHECK(relation_matrix(g) == IntMatrix::from_rows({{-1, 0}}));
    CHECK(relation_matrix(g.with_relation_exempt({})) == IntMatrix::from_rows({{1, -1}, {-1, 0}}));
}

TEST_CASE("case (i) K-theory and K1 basis") {
    for (std::size_t ell : {1, 2, 3}) {
        for (const std::vector<long>& tor : {std::vector<long>{}, {3}, {2, 4}}) {
            FiniteGraph g = build_case_i(ell, tor);
            auto k = ktheory(g);
            IntVector tv;
            for (long n : tor) tv.push_back(n);
            CHECK(k.k0.isomorphic(FgAbelianGroup::from_invariants(ell, tv)));
            CHECK(k.k1.isomorphic(FgAbelianGroup::free(ell)));
            const VertexId last = tor.empty() ? "z" : "w" + std::to_string(tor.size());
            std::vector<IntVector> basis;
            for (std::size_t i = 1; i <= ell; ++i) basis.push_back(delta(g, "v" + std::to_string(i), last));
            CHECK(same_column_lattice(k.k1_lattice, IntMatrix::from_columns(basis, g.num_vertices())));
        }
    }
}

TEST_CASE("boundary examples") {
    FiniteGraph loop({"v"}, {{"e", "v", "v"}}, {"v"});
    CHECK(boundary_map(loop, {1}) == IntVector{-1});
    CHECK(boundary_map(loop, {3}) == IntVector{-3});
    CHECK_THROWS_AS(boundary_map(loop, {1, 0}), KTheoryError);

    FiniteGraph two({"v"}, {{"e1", "v", "v"}, {"e2", "v", "v"}}, {"v"});
    CHECK_THROWS_AS(boundary_map(two, {1}), KTheoryError);

    // x(a) = x(b) and x(b) = x(a) + x(b) force x = 0.
    FiniteGraph g({"a", "b"}, {{"ab", "a", "b"}, {"ba", "b", "a"}, {"bb", "b", "b"}}, {"a"});
    CHECK(!in_k1_full(g, {1, 1}));
}

TEST_CASE("K1 lattices satisfy the defining equations") {
    oracle::Gen gen(71);
    for (int trial = 0; trial < 200; ++trial) {
        FiniteGraph g = gen.graph(6, 12, 3, true);
        auto k = ktheory(g);
        for (std::size_t j = 0; j < k.k1_lattice.cols(); ++j) CHECK(k1_oracle(g, k.k1_lattice.col(j)));
        CHECK(same_column_lattice(k.k1_lattice, k1_lattice_direct(g)));
    }
}

TEST_CASE("six-term sequence on random graphs") {
    oracle::Gen gen(97);
    for (int trial = 0; trial < 150; ++trial) {
        FiniteGraph g = gen.graph(6, 12, 3, true);
        LesReport r = les_check(g);
        for (const auto& node : r.nodes) CHECK_MESSAGE(node.passed, node.name << " " << node.detail);

        // j ∘ ∂ = 0, computed independently of les_check.
        IdealClassMap j = ideal_class_map(g);
        for (std::size_t c = 0; c < r.boundary.cols(); ++c) {
            IntVector amb = j.hom.matrix().apply(r.boundary.col(c));
            CHECK(r.toeplitz.k0.is_zero(r.toeplitz.k0.class_of(amb)));
        }
    }
}

TEST_CASE("rank K0 = rank K1 for Cuntz-Krieger relations") {
    oracle::Gen gen(13);
    for (int trial = 0; trial < 150; ++trial) {
        FiniteGraph g = gen.graph(6, 12, 3, false);
        auto k = ktheory(g);
        CHECK(k.k0.free_rank() == k.k1.free_rank());
    }
}

TEST_CASE("inclusions along a synthesized chain commute with j") {
    for (const GraphChain& c : {build_case_ii(3, 1, {2}, 5), build_case_iii(2, 1, {}, 5)}) {
        for (std::size_t n = 0; n + 1 < c.num_layers(); ++n) {
            FiniteGraph f = c.layer(n);
            FiniteGraph g = c.layer(n + 1);
            auto kf = ktheory(f);
            auto kg = ktheory(g);
            GroupHom i0 = inclusion_k0(f, kf, g, kg);
            GroupHom i1 = inclusion_k1_hom(f, kf, g, kg);
            CHECK(i1.matrix().cols() == kf.k1_lattice.cols());
            CHECK(i0.matrix().rows() == g.num_vertices());
            for (const auto& d : c.infinite_vertices()) {
                IdealClassImage im = ideal_class_image(f, g, d);
                CHECK(im.verified_case);
                CHECK(im.agree);
            }
        }
    }
}

TEST_CASE("ideal class image when u joins the relation set") {
    GraphChain c({}, {{"x"}, {"x", "y"}}, {{"x>x", "x", "x"}, {"x>y", "x", "y"}, {"y>x", "y", "x"}});
    IdealClassImage im = ideal_class_image(c.layer(0), c.layer(1), "x");
    CHECK(!im.verified_case);
    CHECK_THROWS_AS(ideal_class_image(c.layer(1), c.layer(1), "x"), KTheoryError);
}

TEST_CASE("inclusion errors") {
    FiniteGraph f({"a"}, {{"aa", "a", "a"}});
    FiniteGraph g({"a", "b"}, {{"aa", "a", "a"}, {"ab", "a", "b"}, {"ba", "b", "a"}});
    CHECK_THROWS_AS(inclusion_k0(f, g), KTheoryError);
    CHECK_THROWS_AS(inclusion_k1(g, f, {0, 0}), KTheoryError);
}

TEST_CASE("chain K-theory") {
    GraphChain c = build_case_ii(3, 1, {}, 6);
    ChainKTheory ck = chain_ktheory(c);
    CHECK(ck.stabilized);
    CHECK(ck.k0.isomorphic(FgAbelianGroup::free(1)));
    CHECK(ck.k1.isomorphic(FgAbelianGroup::free(2)));
    CHECK(ck.representative_layer == 3);
    CHECK(ck.k0_classes.size() == c.layer_vertices(3).size());

    GraphChain deep = build_case_ii(3, 1, {}, 10);
    ChainKTheory wide = chain_ktheory(deep, 4);
    CHECK(wide.stabilized);
    CHECK(wide.k0.isomorphic(ck.k0));
    CHECK(wide.k1.isomorphic(ck.k1));
}

TEST_CASE("chain K-theory refuses failing conditions") {
    GraphChain c({"u"}, {{"x"}, {"u", "x"}, {"u", "x", "y"}, {"u", "x", "y"}},
                 {{"u>x", "u", "x"}, {"u>y", "u", "y"}, {"x>u", "x", "u"}, {"x>x", "x", "x"}, {"y>x", "y", "x"}});
    CHECK_THROWS_WITH_AS(chain_ktheory(c), doctest::Contains("a1"), KTheoryError);
    ChainKTheory forced = chain_ktheory(c, 1, true);
    CHECK(forced.forced);
    CHECK(!forced.conditions.all_passed());
}

}
