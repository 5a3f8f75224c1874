#include "hypersum/eval.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace hypersum;

namespace {
HypersumQuery q(std::uint32_t n, std::uint32_t m, std::uint32_t k) {
    return HypersumQuery(Natural(n), Natural(m), Natural(k));
}
}  // namespace

TEST_CASE("query validation") {
    CHECK_THROWS_AS(q(3, 2, 0), std::invalid_argument);
    CHECK(q(0, 0, 1).n() == Natural(0));
}

TEST_CASE("f_direct") {
    CHECK(f_direct(q(5, 1, 1)) == Natural(15));       // n(n+1)/2
    CHECK(f_direct(q(0, 4, 3)) == Natural(0));        // empty sum
    CHECK(f_direct(q(3, 2, 2)) == Natural(20));       // 1 + 5 + 14
    CHECK(f_direct(q(3, 2, 2)).value() == oracle::nested_sum(3, 2, 2));
}

TEST_CASE("f_closed") {
    CHECK(f_closed(q(3, 1, 2)) == Natural(10));       // n(n+1)(n+2)/6
    CHECK(f_closed(q(2, 1, 3)) == Natural(5));        // n(n+1)(n+2)(n+3)/24
    CHECK(f_closed(q(3, 3, 1)) == Natural(36));       // (n(n+1)/2)^2
}

TEST_CASE("f_base_m0") {
    CHECK(f_base_m0(Natural(4), Natural(2)) == Natural(10));  // C(5,2)
    CHECK(f_base_m0(Natural(4), Natural(2)).value() == oracle::nested_sum(4, 0, 2));
    CHECK(f_base_m0(Natural(0), Natural(3)) == Natural(0));   // C(2,3)
    CHECK(f_base_m0(Natural(7), Natural(1)) == Natural(7));
    CHECK_THROWS_AS(f_base_m0(Natural(3), Natural(0)), std::invalid_argument);
}

TEST_CASE("f_theorem") {
    CHECK(f_theorem(q(3, 2, 2)) == Natural(20));      // 3*10 - 2*5
    CHECK(f_theorem(q(1, 5, 4)) == Natural(1));       // single-term sums
    CHECK(f_theorem(q(5, 1, 1)) == Natural(15));
}

TEST_CASE("f_cereceda") {
    CHECK(f_cereceda(q(3, 1, 2)) == Natural(10));
    CHECK(f_cereceda(q(3, 2, 2)) == Natural(20));     // 5*10 - 2*15
    CHECK(f_cereceda(q(0, 6, 2)) == Natural(0));
}

TEST_CASE("kernel_check") {
    CHECK(kernel_check(Natural(5), Natural(2), Natural(3)));
    // Independent verification of the sides at (5,2,3): a = 3, and
    // n*C(3,1) - k*C(3,2) = 15 - 6 = 9 = r*C(3,1).
    {
        BigInt a_choose_km1 = oracle::pascal_binom(3, 1);
        BigInt a_choose_k = oracle::pascal_binom(3, 2);
        CHECK(BigInt(5) * a_choose_km1 - BigInt(2) * a_choose_k == BigInt(9));
        CHECK(BigInt(3) * a_choose_km1 == BigInt(9));
    }
    CHECK(kernel_check(Natural(1), Natural(1), Natural(1)));  // both sides 1
    CHECK(kernel_check(Natural(4), Natural(3), Natural(4)));  // a=2, C(2,3)=0 branch
    CHECK_THROWS_AS(kernel_check(Natural(3), Natural(2), Natural(4)),
                    std::invalid_argument);  // r > n
    CHECK_THROWS_AS(kernel_check(Natural(3), Natural(0), Natural(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(kernel_check(Natural(3), Natural(2), Natural(0)),
                    std::invalid_argument);
}

TEST_CASE("kernel identity across its domain") {
    for (std::uint32_t n = 1; n <= 24; ++n) {
        for (std::uint32_t k = 1; k <= 6; ++k) {
            for (std::uint32_t r = 1; r <= n; ++r) {
                CHECK(kernel_check(Natural(n), Natural(k), Natural(r)));
            }
        }
    }
}

TEST_CASE("f_dispatch routes every method") {
    CHECK(f_dispatch(q(5, 1, 1), EvalMethod::direct) == Natural(15));
    CHECK(f_dispatch(q(3, 3, 1), EvalMethod::closed) == Natural(36));
    CHECK(f_dispatch(q(3, 2, 2), EvalMethod::theorem) == Natural(20));
    CHECK(f_dispatch(q(3, 2, 2), EvalMethod::cereceda) == Natural(20));
    CHECK(f_dispatch(q(3, 1, 2), EvalMethod::polynomial) == Natural(10));
}

TEST_CASE("all strategies match the brute-force oracle") {
    EvalSession session;
    for (std::uint32_t n = 0; n <= 12; ++n) {
        for (std::uint32_t m = 0; m <= 4; ++m) {
            for (std::uint32_t k = 1; k <= 3; ++k) {
                BigInt expected = oracle::nested_sum(n, m, k);
                for (EvalMethod method : kAllMethods) {
                    CAPTURE(n);
                    CAPTURE(m);
                    CAPTURE(k);
                    CHECK(session.eval(q(n, m, k), method).value() == expected);
                }
            }
        }
    }
}

TEST_CASE("memoization is transparent") {
    EvalSession warm;
    // Warm the caches with an assortment of queries, then compare against
    // fresh one-shot evaluations.
    for (std::uint32_t n : {2u, 7u, 11u}) {
        for (std::uint32_t m : {0u, 3u}) {
            warm.theorem(q(n, m, 2));
            warm.cereceda(q(n, m, 2));
            warm.direct(q(n, m, 2));
            warm.polynomial(q(n, m, 2));
        }
    }
    for (std::uint32_t n = 1; n <= 11; ++n) {
        CHECK(warm.theorem(q(n, 3, 2)) == f_theorem(q(n, 3, 2)));
        CHECK(warm.cereceda(q(n, 3, 2)) == f_cereceda(q(n, 3, 2)));
        CHECK(warm.direct(q(n, 3, 2)) == f_direct(q(n, 3, 2)));
        CHECK(warm.polynomial(q(n, 3, 2)) == f_closed(q(n, 3, 2)));
    }
}

TEST_CASE("direct table grows in both dimensions") {
    EvalSession session;
    CHECK(session.direct(q(5, 2, 3)) == f_closed(q(5, 2, 3)));
    CHECK(session.direct(q(9, 2, 1)) == f_closed(q(9, 2, 1)));   // widen
    CHECK(session.direct(q(9, 2, 4)) == f_closed(q(9, 2, 4)));   // deepen
    CHECK(session.direct(q(14, 2, 5)) == f_closed(q(14, 2, 5))); // both
}

TEST_CASE("monotonicity in n and k") {
    EvalSession session;
    for (std::uint32_t m = 0; m <= 3; ++m) {
        for (std::uint32_t k = 1; k <= 3; ++k) {
            for (std::uint32_t n = 1; n <= 15; ++n) {
                CHECK(session.closed(q(n, m, k)) > session.closed(q(n - 1, m, k)));
                CHECK(session.closed(q(n, m, k + 1)) >= session.closed(q(n, m, k)));
            }
        }
    }
}

TEST_CASE("polynomial strategy reaches n beyond dense-table range") {
    Natural n("1000000000000000000000000000000");  // 10^30
    Natural value = f_dispatch(HypersumQuery(n, Natural(1), Natural(2)),
                               EvalMethod::polynomial);
    // n(n+1)(n+2)/6, computed here directly in big-integer arithmetic.
    BigInt nn(n.value());
    CHECK(value.value() == nn * (nn + 1) * (nn + 2) / 6);
}

TEST_CASE("method names round-trip") {
    for (EvalMethod m : kAllMethods) {
        CHECK(parse_method(to_string(m)) == m);
    }
    CHECK(!parse_method("fastest").has_value());
}
