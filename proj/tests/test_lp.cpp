#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "counting.hpp"
#include "lp.hpp"
#include "multipole.hpp"
#include "testutil.hpp"

using namespace cidc;
using namespace cidc::testutil;

TEST_CASE("a one-variable LP solves exactly") {
    auto sol = solve_exact_raw({mpq_class(1)}, {{mpq_class(1)}}, {mpq_class(1)});
    CHECK(sol.optimum == 1);
    CHECK(sol.primal[0] == 1);
    CHECK(sol.dual.multipliers[0] == 1);
}

TEST_CASE("the 4-cycle reduction LP has 33 variables, 2 constraints, optimum 1") {
    auto lp = build_reduction_lp(cycle_pole(4), replacement_poles_4cycle(), 4);
    CHECK(lp.objective.size() == 33);
    CHECK(lp.rows.size() == 2);
    auto sol = solve_exact(lp);
    CHECK(sol.optimum == 1);
    CHECK(verify_dual(lp, sol.dual) == 1);
}

TEST_CASE("the 5-cycle reduction LPs reach optimum exactly 1") {
    {
        auto lp = build_reduction_lp(cycle_pole(5), replacement_poles_5cycle(false), mpq_class(5, 2));
        CHECK(lp.objective.size() == 744);
        CHECK(lp.rows.size() == 5);
        CHECK(solve_exact(lp).optimum == 1);
    }
    {
        auto lp = build_reduction_lp(cycle_pole(5), replacement_poles_5cycle(true), mpq_class(15, 4));
        CHECK(lp.rows.size() == 10);
        CHECK(solve_exact(lp).optimum == 1);
    }
}

TEST_CASE("the printed dual solutions certify bound 1 on the full LPs") {
    {
        auto lp = build_reduction_lp(cycle_pole(4), replacement_poles_4cycle(), 4);
        DualCertificate cert;
        cert.multipliers = {mpq_class(1, 2), mpq_class(1, 2)};  // two active multipliers summing to 1
        CHECK(verify_dual(lp, cert) == 1);
    }
    {
        auto lp = build_reduction_lp(cycle_pole(5), replacement_poles_5cycle(false), mpq_class(5, 2));
        DualCertificate cert;
        cert.multipliers.assign(5, mpq_class(1, 5));  // the all-one-half pattern, rescaled
        CHECK(verify_dual(lp, cert) == 1);
    }
}

TEST_CASE("dual verification rejects bad certificates with a located coordinate") {
    auto lp = build_reduction_lp(cycle_pole(4), replacement_poles_4cycle(), 4);
    DualCertificate zero;
    zero.multipliers = {mpq_class(0), mpq_class(0)};
    CHECK(verify_dual(lp, zero) == 0);  // feasible, vacuous

    DualCertificate negative;
    negative.multipliers = {mpq_class(-1), mpq_class(0)};
    CHECK_THROWS_AS(verify_dual(lp, negative), Error);

    DualCertificate excessive;
    excessive.multipliers = {mpq_class(5), mpq_class(5)};
    CHECK_THROWS_WITH_AS(verify_dual(lp, excessive), doctest::Contains("coordinate"), Error);
}

TEST_CASE("check_theorem_lp end to end") {
    auto r4 = check_theorem_lp(4, "planar");
    CHECK(r4.ok);
    CHECK(r4.optimum == 1);
    CHECK(r4.c4 == 4);
    auto r5 = check_theorem_lp(5, "planar");
    CHECK(r5.ok);
    CHECK(r5.optimum == 1);
    CHECK(r5.c4 == mpq_class(5, 2));
    auto r5a = check_theorem_lp(5, "all");
    CHECK(r5a.ok);
    CHECK(r5a.optimum == 1);
    CHECK(r5a.c4 == mpq_class(15, 4));
    CHECK_THROWS_AS(check_theorem_lp(6, "planar"), Error);
    CHECK_THROWS_AS(check_theorem_lp(5, "bogus"), Error);
}

TEST_CASE("build_reduction_lp validates its inputs") {
    CHECK_THROWS_AS(build_reduction_lp(cycle_pole(4), replacement_poles_5cycle(false), 4), Error);
    CHECK_THROWS_AS(build_reduction_lp(cycle_pole(5), {cycle_pole(5)}, 4), Error);  // removes 0 vertices
}

TEST_CASE("the certified inequality instantiates on concrete graphs") {
    // nu(glue(g,s)) >= min_r c4 nu(glue(g,r)) for random environments g
    std::mt19937 rng(4242);
    auto s = cycle_pole(4);
    auto repl = replacement_poles_4cycle();
    std::vector<CubicMultipole> pool;
    for (const auto& g : load_graph6_file(data_dir() + "/catalog/cubic_n08.g6"))
        if (!has_bridge(g)) pool.push_back(g);

    int done = 0;
    for (int trial = 0; trial < 500 && done < 20; ++trial) {
        const auto& g = pool[rng() % pool.size()];
        CubicMultipole env, rest;
        if (!random_fragments(g, 4, rng, env, rest)) continue;
        mpz_class with_s;
        std::vector<mpz_class> with_r;
        try {
            with_s = count_auto(glue(env, s)).value;
            for (const auto& r : repl) with_r.push_back(count_auto(glue(env, r)).value);
        } catch (const Error&) {
            continue;  // a replacement gluing may close into a loop; resample
        }
        mpz_class worst = *std::min_element(with_r.begin(), with_r.end());
        CHECK(with_s >= 4 * worst);
        ++done;
    }
    CHECK(done == 20);
}
