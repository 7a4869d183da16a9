#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyfeyn/correlator.hpp"
#include "cyfeyn/errors.hpp"
#include "cyfeyn/genring.hpp"

using namespace cyfeyn;

TEST_CASE("table seeding, storage and lookup") {
    CorrelatorTable table;
    CHECK(table.has(0, 3));
    CHECK(table.get(0, 3) == GenPoly::constant(1));
    CHECK(table.max_m(0) == 3);
    CHECK(table.max_m(1) == -1);
    CHECK_FALSE(table.has(1, 1));
    CHECK_THROWS_AS(table.get(1, 1), MissingCorrelator);

    table.set(1, 1, GenPoly::variable(Var::B));
    CHECK(table.has(1, 1));
    CHECK(table.max_m(1) == 1);
    CHECK(table.get(1, 1) == GenPoly::variable(Var::B));
}

TEST_CASE("genus-1 seed") {
    const TargetSpec t6 = make_target(6);
    const GenPoly p = genus1_seed(t6);
    // -A/2 - 21/2 B - X/12 - 7/4 for the sextic (chi = -204).
    CHECK(p == poly_parse("-1/2*A - 21/2*B - 1/12*X - 7/4"));

    const TargetSpec t8 = make_target(8);
    Monom mB = kUnitMonom;
    mB[static_cast<int>(Var::B)] = 1;
    CHECK(genus1_seed(t8).coefficient(mB).c0 == Rat(-43) / 3);
}

TEST_CASE("recursion step reproduces the four-point genus-0 correlator") {
    const TargetSpec t = make_target(6);
    const CorrelatorTable table;
    const GenPoly p04 = recursion_step(table.get(0, 3), 0, 3, t);
    CHECK(p04 == poly_parse("-3*A - 2*B - X"));
}

TEST_CASE("recursion step intertwines with series evaluation") {
    const int T = 18;
    for (int k : kSupportedTargets) {
        const TargetSpec t = make_target(k);
        CorrelatorTable table;
        table.set(1, 1, genus1_seed(t));
        extend_table(table, 0, 6, t);
        extend_table(table, 1, 3, t);

        auto gs = generator_series(t, T);
        const QSeries two_b_plus_x = QSeries::constant(2, T) * gs->B + gs->X;
        struct Probe {
            int g, m;
        };
        for (Probe pr : {Probe{0, 3}, Probe{0, 4}, Probe{0, 5}, Probe{1, 1}, Probe{1, 2}}) {
            const QSeries lhs = eval_hom(table.get(pr.g, pr.m + 1), t, T);
            const QSeries base = eval_hom(table.get(pr.g, pr.m), t, T);
            const QSeries rhs = derive_D(base) +
                                (QSeries::constant(pr.g - 1, T) * two_b_plus_x -
                                 QSeries::constant(pr.m, T) * gs->A) *
                                    base;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("extend_table requires a base entry") {
    const TargetSpec t = make_target(8);
    CorrelatorTable table;
    CHECK_THROWS_AS(extend_table(table, 1, 4, t), MissingCorrelator);
    CHECK_THROWS_AS(extend_table(table, 2, 2, t), MissingCorrelator);
    table.set(1, 1, genus1_seed(t));
    extend_table(table, 1, 4, t);
    CHECK(table.has(1, 4));
    // Idempotent when the target is already reached.
    const GenPoly p14 = table.get(1, 4);
    extend_table(table, 1, 2, t);
    CHECK(table.get(1, 4) == p14);
}

TEST_CASE("vertex correlator branches") {
    const TargetSpec t6 = make_target(6);
    CorrelatorTable table;
    table.set(1, 1, genus1_seed(t6));

    // One ancestor on the three-point genus-0 vertex: (1)_1 * P_{0,3} = 1.
    CHECK(vertex_correlator(0, 3, 1, table, t6) == GenPoly::constant(1));
    // Falling factorial: (2g+m+n-3)_n with (1,1,2) gives (2)_2 = 2.
    CHECK(vertex_correlator(1, 1, 2, table, t6) == scalar_mul(Rat(2), genus1_seed(t6)));
    // Pure-ancestor genus-1 vertex: (n-1)! (chi/24 - 1); chi = -204 gives -19/2.
    CHECK(vertex_correlator(1, 0, 2, table, t6) == GenPoly::constant(Rat(-19) / 2));
    CHECK(vertex_correlator(1, 0, 1, table, t6) == GenPoly::constant(Rat(-19) / 2));
    CHECK(vertex_correlator(1, 0, 3, table, t6) == GenPoly::constant(-19));
    // Genus-0 vertices with fewer than three primary ends vanish.
    CHECK(vertex_correlator(0, 0, 3, table, t6).is_zero());
    CHECK(vertex_correlator(0, 2, 5, table, t6).is_zero());
    // Unstable triples and bad indices are rejected.
    CHECK_THROWS_AS(vertex_correlator(1, 0, 0, table, t6), UnstablePair);
    CHECK_THROWS_AS(vertex_correlator(0, 2, 0, table, t6), UnstablePair);
    CHECK_THROWS_AS(vertex_correlator(0, -1, 4, table, t6), ConfigError);
    // Stable but unstored correlators surface as MissingCorrelator.
    CHECK_THROWS_AS(vertex_correlator(2, 0, 0, table, t6), MissingCorrelator);
    CHECK_THROWS_AS(vertex_correlator(1, 2, 0, table, t6), MissingCorrelator);
}

TEST_CASE("genus-0 correlators never involve the modified generators") {
    const TargetSpec t = make_target(10);
    CorrelatorTable table;
    extend_table(table, 0, 8, t);
    for (int m = 3; m <= 8; ++m)
        CHECK(depends_only_on(table.get(0, m), {Var::A, Var::B, Var::B2, Var::B3, Var::X}));
}
