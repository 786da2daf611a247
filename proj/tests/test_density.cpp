#include <doctest.h>

#include "artin/density.hpp"

#include <vector>

using namespace artin;

namespace {

const std::vector<int64_t> kPool = {2, -2, 3, -3, -4, 5, 6, 10, -10, 27, -3375, -759375};

} // namespace

TEST_CASE("artin_spec recovers discriminant and power index") {
    ArtinSpec s27 = artin_spec(27);
    CHECK(s27.delta == 12);
    CHECK(s27.h == 3);
    ArtinSpec sbig = artin_spec(-759375);
    CHECK(sbig.delta == -15);
    CHECK(sbig.h == 5);
    ArtinSpec s2 = artin_spec(2);
    CHECK(s2.delta == 8);
    CHECK(s2.h == 1);
    CHECK(artin_spec(-4).delta == -4);
    CHECK(artin_spec(-4).h == 1);
    CHECK(artin_spec(-3375).delta == -15);
    CHECK(artin_spec(-3375).h == 3);
    CHECK(artin_spec(8).delta == 8);
    CHECK(artin_spec(8).h == 3);
    CHECK(artin_spec(5).delta == 5);
    CHECK(artin_spec(-8).h == 3); // -8 = (-2)^3

    CHECK_THROWS_AS(artin_spec(0), invalid_base);
    CHECK_THROWS_AS(artin_spec(1), invalid_base);
    CHECK_THROWS_AS(artin_spec(-1), invalid_base);
    CHECK_THROWS_AS(artin_spec(4), invalid_base);
    CHECK_THROWS_AS(artin_spec(9), invalid_base);
    CHECK_THROWS_AS(artin_spec(1024), invalid_base);
}

TEST_CASE("spec invariants over the pool") {
    for (int64_t a : kPool) {
        ArtinSpec s = artin_spec(a);
        CHECK(s.h % 2 == 1);
        int64_t dm = ((s.delta % 4) + 4) % 4;
        CHECK((dm == 0 || dm == 1));
        int64_t odd = std::abs(s.delta);
        while (odd % 2 == 0) odd /= 2;
        CHECK(moebius(static_cast<uint64_t>(odd)) != 0);
    }
}

TEST_CASE("f_dagger") {
    ArtinSpec s2 = artin_spec(2), s27 = artin_spec(27);
    CHECK(f_dagger(s2, 1) == Rat(1));
    CHECK(f_dagger(s2, 2) == Rat(2));
    CHECK(f_dagger(s27, 12) == Rat(4));
}

TEST_CASE("f_ddagger") {
    ArtinSpec s5 = artin_spec(5), s27 = artin_spec(27);
    CHECK(f_ddagger(s5, 1) == Rat(1));
    CHECK(f_ddagger(s5, 5) == rat_i64(1, 19));
    CHECK(f_ddagger(s27, 3) == Rat(1));
}

TEST_CASE("beta_disc") {
    CHECK(beta_disc(artin_spec(27), 5) == 1);
    CHECK(beta_disc(artin_spec(5), 5) == 5);
    CHECK(beta_disc(artin_spec(-759375), 3) == -3);
    CHECK(beta_disc(artin_spec(2), 8) == 8);
}

TEST_CASE("artin_A value and monotonicity") {
    RealWithError a2 = artin_A(artin_spec(2), 1000000);
    CHECK(a2.value == doctest::Approx(0.3739558136).epsilon(1e-6));
    CHECK(a2.error_bound == doctest::Approx(1e-6));

    RealWithError a27 = artin_A(artin_spec(27), 1000000);
    CHECK(a27.value == doctest::Approx(0.6 * a2.value).epsilon(1e-12));

    double prev = artin_A(artin_spec(2), 100).value;
    for (int64_t pmax : {1000, 10000, 100000}) {
        double cur = artin_A(artin_spec(2), pmax).value;
        CHECK(cur <= prev);
        prev = cur;
    }
}

TEST_CASE("artin_A error interval nests under pmax growth") {
    for (int64_t a : kPool) {
        ArtinSpec s = artin_spec(a);
        RealWithError coarse = artin_A(s, 1000);
        RealWithError fine = artin_A(s, 10000);
        CHECK(fine.value >= coarse.value - coarse.error_bound);
        CHECK(fine.value <= coarse.value + coarse.error_bound);
    }
}

TEST_CASE("L_const") {
    ArtinSpec s2 = artin_spec(2), s5 = artin_spec(5);
    RealWithError a2 = artin_A(s2, 1000000);
    CHECK(L_const(s2, 1000000).value == a2.value); // mu(16) = 0
    CHECK(L_over_A(s5) == rat_i64(20, 19));
    for (int64_t a : kPool) CHECK(L_over_A(artin_spec(a)) > 0);
}

TEST_CASE("A_mod_ratio") {
    ArtinSpec s27 = artin_spec(27);
    CHECK(A_mod_ratio(s27, 7, 1) == Rat(1));
    CHECK(A_mod_ratio(s27, 3, 12) == Rat(0)); // gcd(x, q) > 1
    CHECK(A_mod_ratio(s27, 5, 12) == rat_i64(1, 2));
}

TEST_CASE("delta_ratio at the worked moduli") {
    ArtinSpec s27 = artin_spec(27);
    CHECK(delta_ratio(s27, 5, 12) == Rat(1));
    CHECK(delta_ratio(s27, 1, 12) == Rat(0));
    CHECK(delta_ratio(s27, 7, 12) == Rat(0));
    CHECK(delta_ratio(s27, 11, 12) == Rat(0));

    ArtinSpec sbig = artin_spec(-759375);
    std::vector<int64_t> support;
    for (int64_t x = 0; x < 15; ++x)
        if (delta_ratio(sbig, x, 15) > 0) support.push_back(x);
    CHECK(support == std::vector<int64_t>{7, 13, 14});
}

TEST_CASE("delta depends only on the residue class") {
    for (int64_t a : {2, 27, -759375}) {
        ArtinSpec s = artin_spec(a);
        for (int64_t q : {1, 5, 8, 12, 15, 24}) {
            for (int64_t x = 0; x < q; ++x) {
                CHECK(delta_ratio(s, x, q) == delta_ratio(s, x + q, q));
                CHECK(delta_ratio(s, x, q) == delta_ratio(s, x - 3 * q, q));
            }
        }
    }
}

TEST_CASE("refinement identity and the L sum") {
    ArtinSpec s2 = artin_spec(2), s27 = artin_spec(27);
    CHECK(delta_refinement_check(s2, 8, 8));
    CHECK(delta_refinement_check(s2, 8, 4));
    CHECK(delta_refinement_check(s27, 12, 1));

    // q = 1 refinement: the deltas sum to L/A exactly.
    for (int64_t a : kPool) {
        ArtinSpec s = artin_spec(a);
        for (int64_t q : {2, 3, 12, 15, 40, 60}) {
            Rat sum(0);
            for (int64_t b = 0; b < q; ++b) sum += delta_ratio(s, b, q);
            CHECK(sum == L_over_A(s));
        }
    }
}

TEST_CASE("delta ratios nonnegative and refinements exact over a sample") {
    // The full q <= 60 sweep runs in the acceptance suite; this covers a
    // representative slice per base.
    for (int64_t a : kPool) {
        ArtinSpec s = artin_spec(a);
        for (int64_t q : {1, 2, 6, 8, 12, 15, 20, 24, 30, 48, 60}) {
            for (int64_t b = 0; b < q; ++b) CHECK(delta_ratio(s, b, q) >= 0);
            for (int64_t Q = 1; Q <= q; ++Q)
                if (q % Q == 0) CHECK(delta_refinement_check(s, q, Q));
        }
    }
}
