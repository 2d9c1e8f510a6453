#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include <doctest.h>

#include "hbvm/legendre.hpp"
#include "hbvm/quadrature.hpp"

using hbvm::gauss_rule;

TEST_CASE("closed-form small rules")
{
    SUBCASE("midpoint")
    {
        const auto& r = gauss_rule(1);
        REQUIRE(r.k == 1);
        CHECK(r.nodes[0] == 0.5);
        CHECK(std::abs(r.weights[0] - 1.0) <= 1e-15);
    }
    SUBCASE("two nodes")
    {
        const auto& r = gauss_rule(2);
        CHECK(std::abs(r.nodes[0] - (0.5 - std::sqrt(3.0) / 6.0)) <= 1e-15);
        CHECK(std::abs(r.nodes[1] - (0.5 + std::sqrt(3.0) / 6.0)) <= 1e-15);
        CHECK(std::abs(r.weights[0] - 0.5) <= 1e-15);
        CHECK(std::abs(r.weights[1] - 0.5) <= 1e-15);
    }
    SUBCASE("three nodes")
    {
        const auto& r = gauss_rule(3);
        CHECK(std::abs(r.weights[0] - 5.0 / 18.0) <= 1e-15);
        CHECK(std::abs(r.weights[1] - 8.0 / 18.0) <= 1e-15);
        CHECK(std::abs(r.weights[2] - 5.0 / 18.0) <= 1e-15);
        CHECK(r.nodes[1] == 0.5);
        CHECK(std::abs(r.nodes[0] - (0.5 - std::sqrt(15.0) / 10.0)) <= 1e-15);
    }
}

TEST_CASE("rule invariants for k = 1..32")
{
    for (int k = 1; k <= 32; ++k) {
        CAPTURE(k);
        const auto& r = gauss_rule(k);
        REQUIRE(static_cast<int>(r.nodes.size()) == k);
        REQUIRE(static_cast<int>(r.weights.size()) == k);

        double weight_sum = 0.0;
        for (int l = 0; l < k; ++l) {
            weight_sum += r.weights[l];
            CHECK(r.weights[l] > 0.0);
            CHECK(r.nodes[l] > 0.0);
            CHECK(r.nodes[l] < 1.0);
            if (l > 0)
                CHECK(r.nodes[l] > r.nodes[l - 1]);
        }
        CHECK(std::abs(weight_sum - 1.0) <= 1e-14);

        for (int l = 0; l < k; ++l) {
            CHECK(std::abs(r.nodes[l] + r.nodes[k - 1 - l] - 1.0) <= 1e-14);
            CHECK(std::abs(r.weights[l] - r.weights[k - 1 - l]) <= 1e-14);
        }

        // Exactness on monomials up to degree 2k-1.
        for (int d = 0; d <= 2 * k - 1; ++d) {
            double integral = 0.0;
            for (int l = 0; l < k; ++l)
                integral += r.weights[l] * std::pow(r.nodes[l], d);
            CAPTURE(d);
            CHECK(std::abs(integral - 1.0 / (d + 1)) <= 1e-13);
        }

        // The nodes are the roots of the degree-k orthonormal basis member.
        for (int l = 0; l < k; ++l)
            CHECK(std::abs(hbvm::eval_basis(k + 1, r.nodes[l])) <= 1e-12);
    }
}

TEST_CASE("argument and cap errors")
{
    CHECK_THROWS_AS(gauss_rule(0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_rule(-3), std::invalid_argument);
    CHECK_THROWS_AS(gauss_rule(513), std::length_error);
    CHECK_NOTHROW(gauss_rule(512));
}

TEST_CASE("memoization returns the same object and survives concurrent access")
{
    const auto& a = gauss_rule(7);
    const auto& b = gauss_rule(7);
    CHECK(&a == &b);

    std::vector<std::thread> workers;
    std::vector<const hbvm::QuadratureRule*> seen(8, nullptr);
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&seen, t] { seen[t] = &gauss_rule(41 + t % 2); });
    for (auto& w : workers)
        w.join();
    for (int t = 0; t < 8; ++t) {
        REQUIRE(seen[t] != nullptr);
        CHECK(seen[t] == &gauss_rule(41 + t % 2));
    }
}
