#include <catch_amalgamated.hpp>

#include "partot/cosimplicial.hpp"
#include "partot/errors.hpp"
#include "partot/totalization.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace partot;
using namespace partot::testing;

namespace {

const ChainComplexInt z0 = ChainComplexInt(0, {1}, std::vector<Matrix>{Matrix(0, 1)});

const AbelianGroup Z{1, {}};

} // namespace

TEST_CASE("surjections from [n]", "[cosimplicial]") {
    for (int n = 0; n <= 6; ++n) {
        const auto all = surjections_from(n);
        std::vector<std::size_t> by_k(static_cast<std::size_t>(n + 1));
        for (const auto& s : all) ++by_k[static_cast<std::size_t>(s.back())];
        for (int k = 0; k <= n; ++k)
            CHECK(by_k[static_cast<std::size_t>(k)] ==
                  binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)));
    }
    CHECK(surjections_from(2) == std::vector<std::vector<int>>{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {0, 1, 2}});
}

TEST_CASE("constant object", "[cosimplicial]") {
    const auto x = constant_object(z0, 3);
    CHECK(validate_cosimplicial(x).ok);
    const auto c = conormalize(x);
    CHECK(c.n.rank(0, 0) == 1);
    for (int s = 1; s <= 3; ++s) CHECK(c.n.rank(s, 0) == 0);

    for (int m = 0; m + 1 <= 3; ++m) {
        const auto mo = matching_object(x, m);
        CHECK(mo.complex.rank(0) == 1);
        CHECK(homology(mo.complex).at(0) == Z);
        CHECK(mo.map.at(0).rows() == 1);
        CHECK(abs(mo.map.at(0)(0, 0)) == 1);
        CHECK(mo.kernel.at(0).rank() == 0);
    }
    for (int n = 0; n <= 3; ++n) {
        const auto h = homology(tot_n(x, n));
        CHECK(h.at(0) == Z);
        for (int k = -4; k <= 2; ++k)
            if (k != 0) CHECK(h.at(k).is_zero());
    }
    CHECK(homology(tower_fiber(x, 0, 3)).is_zero());
    for (int n = 0; n <= 3; ++n) CHECK(homology(tower_fiber(x, n, n)).is_zero());
    for (int j = -3; j <= 3; ++j) CHECK(shift_check(x, 0, 3, j));
}

TEST_CASE("matching object at m = 0 is X^0 with s^0", "[cosimplicial]") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        const auto x = random_cosimplicial(rng, 2);
        const auto mo = matching_object(x, 0);
        for (int t = x.lo(); t <= x.hi(); ++t) {
            const auto tu = static_cast<std::size_t>(t - x.lo());
            CHECK(mo.tuples[tu] == Lattice::full(x.rank(0, t)));
            CHECK(mo.map[tu] == x.codegeneracy(1, 0, t));
        }
        CHECK(mo.complex == x.level(0));
    }
}

TEST_CASE("Cech object of a two-point set", "[cosimplicial]") {
    const int m = 4;
    const auto x = cech_object(2, m);
    CHECK(validate_cosimplicial(x).ok);
    CHECK(x.rank(3, 0) == 16);
    const auto c = conormalize(x);
    // Kernel-rank oracle: rank N^{k+1} = rank X^{k+1} - rank M^k.
    for (int k = 0; k + 1 <= m; ++k) {
        const auto mo = matching_object(x, k);
        const std::size_t oracle = x.rank(k + 1, 0) - mo.complex.rank(0);
        CHECK(c.n.rank(k + 1, 0) == oracle);
        CHECK(c.n.rank(k + 1, 0) == 2);
        CHECK(mo.kernel[0] == Lattice::span(c.basis[static_cast<std::size_t>(k + 1)][0]));
    }
    CHECK(tot_n(x, 0) == x.level(0).shifted(0));

    // Tot_M is the truncated normalized cochain complex: H_0 = Z, nothing in
    // between, and a leftover Z in the top stripe degree -M.
    for (int n = 1; n <= m; ++n) {
        const auto h = homology(tot_n(x, n));
        CHECK(h.at(0) == Z);
        for (int k = -n + 1; k < 0; ++k) CHECK(h.at(k).is_zero());
        CHECK(h.at(-n) == Z);
    }
    CHECK(homology(tot_n(x, 0)).at(0) == AbelianGroup{2, {}});
}

TEST_CASE("validation names the broken identity", "[cosimplicial]") {
    const auto x = cech_object(2, 2);
    auto cofaces = x.cofaces();
    cofaces[1][0][0](0, 0) += 1;
    std::vector<ChainComplexInt> levels{x.level(0), x.level(1), x.level(2)};
    const CosimplicialChain bad(levels, cofaces, x.codegeneracies());
    const auto report = validate_cosimplicial(bad);
    CHECK(!report.ok);
    bool named = false;
    for (const auto& v : report.violations) named = named || v.find("d^j d^i") != std::string::npos;
    CHECK(named);
    CHECK_THROWS_AS(conormalize(bad), PreconditionError);

    auto codeg = x.codegeneracies();
    codeg[0][0][0](0, 1) = 5;
    const CosimplicialChain bad2(levels, x.cofaces(), codeg);
    const auto r2 = validate_cosimplicial(bad2);
    CHECK(!r2.ok);
    named = false;
    for (const auto& v : r2.violations) named = named || v.find("s^j d^i = id fails on level 0") != std::string::npos;
    CHECK(named);
}

TEST_CASE("shape and range errors", "[cosimplicial]") {
    const auto x = cech_object(2, 2);
    std::vector<ChainComplexInt> levels{x.level(0), x.level(1), x.level(2)};
    auto cofaces = x.cofaces();
    cofaces[0][1][0] = Matrix(3, 2);
    CHECK_THROWS_AS(CosimplicialChain(levels, cofaces, x.codegeneracies()), InputError);
    cofaces = x.cofaces();
    cofaces[1].pop_back();
    CHECK_THROWS_AS(CosimplicialChain(levels, cofaces, x.codegeneracies()), InputError);
    CHECK_THROWS_AS(CosimplicialChain({}, {}, {}), InputError);

    CHECK_THROWS_AS(matching_object(x, 2), InputError);
    CHECK_THROWS_AS(matching_object(x, -1), InputError);
    CHECK_THROWS_AS(tot_n(x, 3), InputError);
    CHECK_THROWS_AS(tower_fiber(x, 2, 1), InputError);
    CHECK_THROWS_AS(tower_fiber(x, -2, 1), InputError);
    CHECK_THROWS_AS(tower_fiber(x, 0, 3), InputError);
    CHECK_THROWS_AS(cech_object(0, 2), InputError);
}

TEST_CASE("Dold-Kan round trip", "[cosimplicial]") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const int m = 1 + trial % 4;
        const auto d = random_double_complex(rng, m);
        const auto x = dold_kan(d);
        REQUIRE(validate_cosimplicial(x).ok);
        CHECK(conormalize(x).n == d);
        // After a change of basis the pieces have the same homology.
        const auto y = scramble(rng, x);
        REQUIRE(validate_cosimplicial(y).ok);
        const auto cy = conormalize(y);
        for (int s = 0; s <= m; ++s) CHECK(homology(cy.n.column(s)).same_as(homology(d.column(s))));
    }
}

TEST_CASE("double complex validation", "[cosimplicial]") {
    DoubleComplexBuilder b(2, 0, 1);
    const auto x = b.add(0, 1), y = b.add(0, 0), u = b.add(1, 1), v = b.add(1, 0);
    b.vertical(x, y, 1);
    b.horizontal(x, u, 1);
    b.vertical(u, v, 2);
    b.horizontal(y, v, 1);
    CHECK_THROWS_AS(b.build().validate(), InvariantError);
    CHECK_THROWS_AS(dold_kan(b.build()), InvariantError);
}

TEST_CASE("corpus objects: fibers, matching objects, tower", "[property]") {
    const auto corpus = cosimplicial_corpus(20, 77);
    for (const auto& x : corpus) {
        REQUIRE(validate_cosimplicial(x).ok);
        const auto c = conormalize(x);
        const int m = x.truncation();
        for (int k = 1; k <= m; ++k) {
            const auto fiber = homology(tower_fiber(c, k - 1, k));
            const auto piece = homology(c.n.column(k));
            for (int i = x.lo() - k - 1; i <= x.hi() + 1; ++i) CHECK(fiber.at(i) == piece.at(i + k));
        }
        for (int k = 0; k + 1 <= m; ++k) {
            const auto mo = matching_object(x, k);
            for (int t = x.lo(); t <= x.hi(); ++t) {
                const auto tu = static_cast<std::size_t>(t - x.lo());
                CHECK(mo.kernel[tu] == Lattice::span(c.basis[static_cast<std::size_t>(k + 1)][tu]));
            }
        }
        const auto tw = tower(x);
        REQUIRE(tw.stages.size() == static_cast<std::size_t>(m + 1));
        CHECK(tw.stages[0] == x.level(0));
        for (int k = 1; k <= m; ++k) {
            const auto& p = tw.projections[static_cast<std::size_t>(k - 1)];
            const auto& a = tw.stages[static_cast<std::size_t>(k)];
            const auto& b = tw.stages[static_cast<std::size_t>(k - 1)];
            CHECK(is_chain_map(p, a, b));
            const auto stripe = tower_fiber(c, k - 1, k);
            for (int d = a.lo(); d <= a.hi(); ++d) {
                CHECK(kernel(p.at(d)).rank() == stripe.rank(d));
                CHECK(a.rank(d) == b.rank(d) + stripe.rank(d));
            }
        }
        for (int j = -3; j <= 3; ++j) CHECK(shift_check(x, -1, m, j));
        CHECK(shift_check(x, 0, m, 2));
    }
}

TEST_CASE("tower fiber ignores levels outside the stripe", "[property]") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 12; ++trial) {
        const int m = 3 + trial % 2;
        const auto d = random_double_complex(rng, m);
        const int n = static_cast<int>(rng() % 2), top = n + 1 + static_cast<int>(rng() % static_cast<unsigned>(m - n));
        // Replace every column outside n+1..top by zero.
        DoubleComplex e = d;
        for (int s = 0; s <= m; ++s) {
            if (s > n && s <= top) continue;
            const auto su = static_cast<std::size_t>(s);
            for (auto& r : e.ranks[su]) r = 0;
        }
        for (int s = 0; s <= m; ++s)
            for (int t = d.lo; t <= d.hi; ++t) {
                const auto su = static_cast<std::size_t>(s), tu = static_cast<std::size_t>(t - d.lo);
                e.vertical[su][tu] = (s > n && s <= top) ? d.d(s, t) : Matrix(e.rank(s, t - 1), 0);
                if (s < m)
                    e.horizontal[su][tu] = (s > n && s < top) ? d.delta(s, t) : Matrix(e.rank(s + 1, t), e.rank(s, t));
            }
        const auto x = dold_kan(d), y = dold_kan(e);
        CHECK(tower_fiber(x, n, top) == tower_fiber(y, n, top));
        const auto sx = scramble(rng, x);
        CHECK(tower_fiber(sx, n, top) == tower_fiber(truncate(sx, top), n, top));
    }
}

TEST_CASE("levelwise quasi-isomorphisms induce fiber equivalences", "[property]") {
    std::mt19937 rng(99);
    // Constant Z against constant Z + (Z -> Z).
    const auto x = constant_object(z0, 3);
    const auto acyclic = ChainComplexInt(0, {1, 1}, std::vector<Matrix>{Matrix(0, 1), Matrix{{1}}});
    const auto y = direct_sum(x, constant_object(acyclic, 3));
    const auto wx = widen(x, y.lo(), y.hi());
    CHECK(quasi_iso_invariance(wx, y, first_summand_inclusion(x, y)));
    CHECK(quasi_iso_invariance(y, wx, first_summand_projection(x, y)));
    CHECK(quasi_iso_invariance(x, x, CosimplicialMap{std::vector<LevelMap>(4, LevelMap{Matrix::identity(1)})}));

    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_cosimplicial(rng, 1 + trial % 4);
        const auto extra = dold_kan(acyclic_double_complex(rng, a.truncation(), a.lo(), a.hi()));
        const auto sum = direct_sum(a, extra);
        const auto wa = widen(a, sum.lo(), sum.hi());
        CHECK(quasi_iso_invariance(wa, sum, first_summand_inclusion(a, sum)));
        CHECK(quasi_iso_invariance(sum, wa, first_summand_projection(a, sum)));
        const auto [b, f] = random_isomorph(rng, a);
        CHECK(quasi_iso_invariance(a, b, f));
    }

    // Negative controls.
    CosimplicialMap twice{std::vector<LevelMap>(4, LevelMap{Matrix{{2}}})};
    CHECK_THROWS_AS(quasi_iso_invariance(x, x, twice), PreconditionError);
    CosimplicialMap zero{std::vector<LevelMap>(4, LevelMap{Matrix{{0}}})};
    CHECK_THROWS_AS(quasi_iso_invariance(x, x, zero), PreconditionError);
    CosimplicialMap broken{std::vector<LevelMap>(4, LevelMap{Matrix::identity(1)})};
    broken.components[2][0](0, 0) = -1;
    CHECK_THROWS_AS(quasi_iso_invariance(x, x, broken), PreconditionError);
    CosimplicialMap shapes{std::vector<LevelMap>(3, LevelMap{Matrix::identity(1)})};
    CHECK_THROWS_AS(quasi_iso_invariance(x, x, shapes), InputError);
}
