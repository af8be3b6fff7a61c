#include <catch_amalgamated.hpp>

#include "partot/deloop.hpp"
#include "partot/errors.hpp"

using namespace partot;

namespace {

PosetInclusion subset_inclusion(std::size_t s, std::size_t r) {
    return PosetInclusion::full_subposet(subset_poset(s, 1, s), subset_poset(s, 1, r).elements());
}

PosetInclusion subspace_inclusion(unsigned q, std::size_t n, std::size_t r) {
    return PosetInclusion::full_subposet(subspace_poset(q, n, n), subspace_poset(q, n, r).elements());
}

} // namespace

TEST_CASE("analyze_inclusion examples", "[deloop]") {
    const auto a = analyze_inclusion(subset_inclusion(4, 2));
    CHECK(a.p == 2);
    CHECK(a.complement_dim == 1);
    CHECK(a.d_max == 1);
    CHECK(!a.disclaimer.empty());

    const auto b = analyze_inclusion(subset_inclusion(2, 1));
    CHECK(b.p == 1);
    CHECK(b.complement_dim == 0);
    CHECK(b.d_max == 1);

    const auto c = analyze_inclusion(subspace_inclusion(2, 3, 2));
    CHECK(c.p == 2);
    CHECK(c.complement_dim == 0);
    CHECK(c.d_max == 2);
}

TEST_CASE("analyze_inclusion declines what it cannot certify", "[deloop]") {
    // 2r - |S| + 1 < 0: the complement is too tall.
    const auto neg = analyze_inclusion(subset_inclusion(5, 1));
    CHECK(neg.p == 1);
    CHECK(neg.complement_dim == 3);
    CHECK(!neg.d_max.has_value());
    CHECK(!neg.diagnostics.empty());

    // C not downward closed.
    const auto d = subset_poset(3, 1, 3);
    CHECK_THROWS_AS(analyze_inclusion(PosetInclusion::full_subposet(d, subset_poset(3, 2, 3).elements())),
                    PreconditionError);

    // C = D.
    const auto all = analyze_inclusion(subset_inclusion(3, 3));
    CHECK(all.unbounded);
    CHECK(all.complement_dim == -1);
    CHECK(!all.d_max.has_value());
}

TEST_CASE("mixed sphere dimensions block the bound", "[deloop]") {
    // P({0,1,2}) with an extra element u above {0} and {1}: T(top) is a
    // 2-sphere, T(u) a circle.
    const auto base = subset_poset(3, 1, 3);
    std::vector<Label> elements = base.elements();
    elements.emplace_back("u");
    std::vector<std::pair<Label, Label>> pairs;
    for (const auto& [i, j] : base.hasse_edges()) pairs.emplace_back(base.element(i), base.element(j));
    pairs.emplace_back("{0}", "u");
    pairs.emplace_back("{1}", "u");
    const auto dpos = FinPoset::from_relation(elements, pairs);
    const auto inc = PosetInclusion::full_subposet(dpos, subset_poset(3, 1, 2).elements());
    const auto report = analyze_inclusion(inc);
    CHECK(!report.p.has_value());
    CHECK(!report.d_max.has_value());
    CHECK(report.complement_dim == 0);
    CHECK(!report.diagnostics.empty());
}

TEST_CASE("tot truncation bound", "[deloop]") {
    CHECK(tot_truncation_bound(2, 3).bound == 3);
    CHECK(tot_truncation_bound(1, 2).bound == 2);
    CHECK(tot_truncation_bound(2, 3).valid);
    const auto none = tot_truncation_bound(1, 4);
    CHECK(!none.valid);
    CHECK(!none.bound.has_value());
    CHECK(tot_truncation_bound(1, 3).bound == 1);
    CHECK_THROWS_AS(tot_truncation_bound(0, 1), InputError);
    CHECK_THROWS_AS(tot_truncation_bound(3, 2), InputError);
}

TEST_CASE("cover bounds and arithmetic helpers", "[deloop]") {
    CHECK(cover_suspension_bound(3, 2) == 2);
    CHECK(cover_suspension_bound(2, 1) == 1);
    CHECK(unpointed_check(5, 3));
    CHECK(!unpointed_check(6, 3));
    CHECK_THROWS_AS(cover_suspension_bound(2, 3), InputError);

    CHECK(suspension_functor_connectivity(2, 1) == 1);
    CHECK(suspension_functor_connectivity(5, 0) == 5);
    CHECK(suspension_functor_connectivity(3, 3) == 0);
    CHECK_THROWS_AS(suspension_functor_connectivity(2, 3), PreconditionError);

    CHECK(lifting_criterion(1, 1));
    CHECK(!lifting_criterion(2, 1));
    CHECK(lifting_criterion(0, 0));
    CHECK_THROWS_AS(lifting_criterion(-1, 0), InputError);
}

TEST_CASE("lifting criterion is monotone", "[property]") {
    for (int dim = 0; dim <= 6; ++dim)
        for (int conn = -2; conn <= 6; ++conn)
            if (lifting_criterion(dim, conn)) {
                if (dim > 0) CHECK(lifting_criterion(dim - 1, conn));
                CHECK(lifting_criterion(dim, conn + 1));
            }
}

TEST_CASE("delta model", "[deloop]") {
    const auto m23 = delta_model(2, 3);
    CHECK(m23.ambient().size() == 15);
    CHECK(m23.sub().size() == 14);
    const auto m00 = delta_model(0, 0);
    CHECK(m00.ambient().size() == 1);
    CHECK(m00.sub().size() == 1);
    CHECK(analyze_inclusion(m23).d_max == 3);
    CHECK_THROWS_AS(delta_model(2, 1), InputError);
}

TEST_CASE("subset inclusions reproduce 2r - |S| + 1", "[property]") {
    for (int s = 2; s <= 5; ++s)
        for (int r = 1; r < s; ++r) {
            const auto report = analyze_inclusion(subset_inclusion(s, r));
            const int expected = 2 * r - s + 1;
            CHECK(report.p == r);
            if (expected >= 0)
                CHECK(report.d_max == expected);
            else
                CHECK(!report.d_max.has_value());
        }
}

TEST_CASE("delta models reproduce 2n - m + 2", "[property]") {
    for (int n = 1; n <= 4; ++n)
        for (int m = n; m <= std::min(4, 2 * n + 1); ++m) {
            const auto report = analyze_inclusion(delta_model(n, m));
            const auto bound = tot_truncation_bound(n, m);
            REQUIRE(bound.valid);
            if (n == m)
                CHECK(report.unbounded);
            else
                CHECK(report.d_max == bound.bound);
        }
}

TEST_CASE("no bound when T(c) is not contractible", "[property]") {
    // Every report that carries a bound has contractible values on C.
    for (int s = 2; s <= 4; ++s)
        for (int r = 1; r < s; ++r) {
            const auto report = analyze_inclusion(subset_inclusion(s, r));
            if (!report.d_max) continue;
            for (const auto& ps : report.pointwise)
                if (ps.in_sub) CHECK((ps.signature && ps.signature->is_contractible()));
        }
}
