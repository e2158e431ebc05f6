#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qp/exact.hpp"
#include "qp/rays.hpp"

#include <stdexcept>
#include <string>
#include <vector>

using namespace qp;

TEST_CASE("direction constraints are validated by name") {
    CHECK_NOTHROW(Direction(1, 0, 1));
    CHECK_NOTHROW(Direction(3, 2, -2));
    CHECK_THROWS_WITH_AS(Direction(0, 0, 1), "Direction: constraint alpha >= 1 violated",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Direction(2, 2, 1), "Direction: constraint beta < alpha violated",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Direction(2, -1, 1), "Direction: constraint beta >= 0 violated",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(Direction(2, 1, -2), "Direction: constraint r + alpha > 0 violated",
                         std::invalid_argument);
}

TEST_CASE("sbonacci reproduces the classical sequences") {
    CHECK(sbonacci(1, 8) == std::vector<ExactInt>{0, 1, 1, 2, 3, 5, 8, 13});
    CHECK(sbonacci(2, 8) == std::vector<ExactInt>{0, 1, 1, 2, 4, 7, 13, 24});
    CHECK(sbonacci(3, 8) == std::vector<ExactInt>{0, 1, 1, 2, 4, 8, 15, 29});
    CHECK(sbonacci(1, 10) == std::vector<ExactInt>{0, 1, 1, 2, 3, 5, 8, 13, 21, 34});
    CHECK(sbonacci(2, 10) == std::vector<ExactInt>{0, 1, 1, 2, 4, 7, 13, 24, 44, 81});
    CHECK(sbonacci(3, 12) ==
          std::vector<ExactInt>{0, 1, 1, 2, 4, 8, 15, 29, 56, 108, 208, 401});
    CHECK(sbonacci(4, 12) ==
          std::vector<ExactInt>{0, 1, 1, 2, 4, 8, 16, 31, 61, 120, 236, 464});
    CHECK_THROWS_AS(sbonacci(2, 0), std::invalid_argument);
}

TEST_CASE("sbonacci satisfies the order-(s+1) recurrence for 30 terms") {
    for (int s = 1; s <= 4; ++s) {
        auto t = sbonacci(s, 30);
        for (std::size_t n = static_cast<std::size_t>(s); n + 1 < t.size(); ++n) {
            ExactInt acc = 0;
            for (int j = 0; j <= s; ++j) acc += t[n - static_cast<std::size_t>(j)];
            CHECK(t[n + 1] == acc);
        }
    }
}

TEST_CASE("ray_sum_direct pinned values") {
    CHECK(ray_sum_direct(2, Direction(2, 0, 1), 5) == 6); // 1 + 5
    CHECK(ray_sum_direct(2, Direction(1, 0, 1), 4) == 4); // 0,1,1,2,4,...
    CHECK(ray_sum_direct(1, Direction(1, 0, 1), 4) == 3); // Fibonacci
    CHECK(ray_sum_direct(1, Direction(1, 0, 1), 3) == 2);
    CHECK(ray_sum_direct(2, Direction(3, 1, 2), 0) == 0);
    CHECK(ray_sum_direct(4, Direction(2, 1, -1), 0) == 0);
    CHECK_THROWS_AS(ray_sum_direct(2, Direction(1, 0, 1), -1), std::invalid_argument);
}

TEST_CASE("ray (1,0,1) reduces to sbonacci") {
    Direction diag(1, 0, 1);
    for (int s = 1; s <= 4; ++s) {
        auto t = sbonacci(s, 26);
        for (long long n = 0; n <= 25; ++n)
            CHECK(ray_sum_direct(s, diag, n) == t[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("frozen ray sequence for s=2, direction (3,1,2)") {
    Direction d(3, 1, 2);
    const long long expect[]{0, 0, 1, 3, 5, 7, 9, 12, 22, 56, 146, 340};
    for (long long n = 0; n < 12; ++n)
        CHECK(ray_sum_direct(2, d, n) == expect[n]);
}

TEST_CASE("ray recurrence verifier on the documented directions") {
    CHECK(verify_ray_recurrence(2, Direction(2, 0, 1), 20));
    CHECK(verify_ray_recurrence(3, Direction(1, 0, 1), 20));
    CHECK(verify_ray_recurrence(2, Direction(3, 1, 2), 25));
    CHECK_THROWS_AS(verify_ray_recurrence(2, Direction(2, 0, 1), 3), std::invalid_argument);
}

// The stated validity bound n >= alpha*s + r admits counterexamples when r is
// negative enough; the recurrence provably holds from
// n >= alpha + beta*(s-1) + 1 (one past the degree of the ray GF numerator).
// Exactly five grid directions violate the stated bound, all with r < 0.
TEST_CASE("recurrence violations below the sharp threshold, and nowhere above") {
    struct Violation { int s; long long alpha, beta, r; };
    const Violation expected[]{
        {2, 2, 1, -1},
        {2, 3, 1, -2},
        {2, 3, 2, -2},
        {2, 3, 2, -1},
        {3, 3, 2, -2},
    };
    std::vector<Violation> found;
    for (int s = 2; s <= 3; ++s)
        for (long long alpha = 1; alpha <= 3; ++alpha)
            for (long long beta = 0; beta < alpha; ++beta)
                for (long long r = -alpha + 1; r <= 3; ++r) {
                    Direction d(alpha, beta, r);
                    long long lo = alpha * s + r;
                    if (!verify_ray_recurrence(s, d, lo + 15))
                        found.push_back({s, alpha, beta, r});
                    long long sharp = alpha + beta * (s - 1) + 1;
                    for (long long n = sharp; n <= lo + 15; ++n)
                        CHECK(ray_recurrence_holds_at(s, d, n));
                }
    REQUIRE(found.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(found[i].s == expected[i].s);
        CHECK(found[i].alpha == expected[i].alpha);
        CHECK(found[i].beta == expected[i].beta);
        CHECK(found[i].r == expected[i].r);
    }
}

TEST_CASE("first failing indices of the five violating directions") {
    CHECK_FALSE(ray_recurrence_holds_at(2, Direction(2, 1, -1), 3));
    CHECK_FALSE(ray_recurrence_holds_at(2, Direction(3, 1, -2), 4));
    CHECK_FALSE(ray_recurrence_holds_at(2, Direction(3, 2, -2), 4));
    CHECK_FALSE(ray_recurrence_holds_at(2, Direction(3, 2, -2), 5));
    CHECK_FALSE(ray_recurrence_holds_at(2, Direction(3, 2, -1), 5));
    CHECK_FALSE(ray_recurrence_holds_at(3, Direction(3, 2, -2), 7));
}

TEST_CASE("alternating lemma examples and exhaustive grid") {
    CHECK(verify_alternating_lemma(5, 3, 2));
    CHECK(verify_alternating_lemma(4, 2, 0));
    CHECK(verify_alternating_lemma(6, 2, 3)); // right side 0 since b-alpha < 0
    CHECK_THROWS_AS(verify_alternating_lemma(3, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(verify_alternating_lemma(3, 2, -1), std::invalid_argument);
    for (long long a = 0; a <= 12; ++a)
        for (long long alpha = 0; alpha <= a; ++alpha)
            for (long long b = 0; b <= 12; ++b)
                CHECK(verify_alternating_lemma(a, b, alpha));
}
