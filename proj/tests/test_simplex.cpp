#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qproj/simplex.hpp"

using namespace qproj;
using Catch::Matchers::WithinAbs;

namespace {

RealVector as_vector(const std::vector<double>& c) {
    return Eigen::Map<const RealVector>(c.data(), static_cast<Eigen::Index>(c.size()));
}

// Random n x r directions whose columns sum to zero, so no nonzero shift is
// entrywise positive and the program is bounded.
RealMatrix zero_sum_directions(test::Rng& rng, int n, int r) {
    std::normal_distribution<double> g(0.0, 1.0);
    RealMatrix b(n, r);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < r; ++j) b(i, j) = g(rng);
    b.rowwise() -= b.colwise().mean();
    return b;
}

} // namespace

TEST_CASE("empty basis returns the minimum entry", "[simplex]") {
    const RealVector p = (RealVector(3) << 0.4, -0.2, 0.8).finished();
    const MaxMinResult r = maxmin_over_nullspace(p, std::vector<RealVector>{});
    CHECK(r.t_star == -0.2);
    CHECK(r.coefficients.empty());
    CHECK_FALSE(r.unbounded);
}

TEST_CASE("square nullspace shift", "[simplex]") {
    // p = (1, -1, 0.5, -0.5) / 2 + 1/4, shift along (1, 1, -1, -1)
    const RealVector p = (RealVector(4) << 0.75, -0.25, 0.5, 0.0).finished();
    const RealVector n = (RealVector(4) << 1, 1, -1, -1).finished();
    const MaxMinResult r = maxmin_over_nullspace(p, std::vector<RealVector>{n});
    // best c balances min(0.75 + c, -0.25 + c) = -0.25 + c against min(0.5 - c, -c) = -c
    CHECK_THAT(r.t_star, WithinAbs(-0.125, 1e-12));
    REQUIRE(r.coefficients.size() == 1);
    CHECK_THAT(r.coefficients[0], WithinAbs(0.125, 1e-12));
}

TEST_CASE("unbounded programs report +inf", "[simplex]") {
    const RealVector p = (RealVector(2) << 0.0, -1.0).finished();
    const RealVector n = (RealVector(2) << 1.0, 1.0).finished();
    const MaxMinResult r = maxmin_over_nullspace(p, std::vector<RealVector>{n});
    CHECK(r.unbounded);
    CHECK(std::isinf(r.t_star));
    CHECK(r.t_star > 0);

    // half-bounded direction: one entry grows, another is fixed
    const RealVector m = (RealVector(2) << 1.0, 0.0).finished();
    const MaxMinResult s = maxmin_over_nullspace(p, std::vector<RealVector>{m});
    CHECK_FALSE(s.unbounded);
    CHECK_THAT(s.t_star, WithinAbs(-1.0, 1e-12));
}

TEST_CASE("vector and matrix overloads agree", "[simplex]") {
    test::Rng rng(1);
    const RealMatrix b = zero_sum_directions(rng, 6, 2);
    const RealVector p = RealVector::Random(6);
    const MaxMinResult a = maxmin_over_nullspace(p, b);
    const MaxMinResult v = maxmin_over_nullspace(p, std::vector<RealVector>{b.col(0), b.col(1)});
    CHECK(a.t_star == v.t_star);
    CHECK(a.coefficients == v.coefficients);
}

TEST_CASE("random bounded programs match vertex enumeration", "[simplex][property]") {
    test::Rng rng(2024);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + trial % 6;
        const int r = 1 + trial % std::min(3, n - 1);
        const RealMatrix b = zero_sum_directions(rng, n, r);
        RealVector p(n);
        for (int i = 0; i < n; ++i) p(i) = g(rng);

        const MaxMinResult res = maxmin_over_nullspace(p, b);
        REQUIRE_FALSE(res.unbounded);
        REQUIRE(res.coefficients.size() == static_cast<std::size_t>(r));
        const double oracle = test::brute_force_maxmin(p, b);
        CHECK_THAT(res.t_star, WithinAbs(oracle, 1e-9));

        // t_star is achieved by the reported coefficients
        const RealVector shifted = p + b * as_vector(res.coefficients);
        CHECK_THAT(shifted.minCoeff(), WithinAbs(res.t_star, 1e-12));
    }
}

TEST_CASE("optimum carries a dual certificate", "[simplex][property]") {
    // At the optimum some convex combination of the active rows of B vanishes;
    // otherwise a direction raising every active entry would exist.
    test::Rng rng(77);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 6;
        const int r = 2;
        const RealMatrix b = zero_sum_directions(rng, n, r);
        RealVector p(n);
        for (int i = 0; i < n; ++i) p(i) = g(rng);
        const MaxMinResult res = maxmin_over_nullspace(p, b);
        const RealVector shifted = p + b * as_vector(res.coefficients);

        std::vector<int> active;
        for (int i = 0; i < n; ++i)
            if (shifted(i) - res.t_star < 1e-9) active.push_back(i);
        REQUIRE(static_cast<int>(active.size()) >= r + 1);

        // solve [B_active^T; 1^T] lambda = [0; 1] in least squares, check lambda >= 0 for
        // the generic case of exactly r + 1 active constraints
        if (static_cast<int>(active.size()) == r + 1) {
            RealMatrix a(r + 1, r + 1);
            for (int j = 0; j <= r; ++j) {
                a.col(j).head(r) = b.row(active[static_cast<std::size_t>(j)]).transpose();
                a(r, j) = 1.0;
            }
            RealVector rhs = RealVector::Zero(r + 1);
            rhs(r) = 1.0;
            const RealVector lambda = a.fullPivLu().solve(rhs);
            CHECK(lambda.minCoeff() >= -1e-9);
        }
    }
}

TEST_CASE("degenerate programs terminate", "[simplex]") {
    // all entries tied and duplicated directions: a cycling trap without Bland's rule
    const RealVector p = RealVector::Constant(6, 0.25);
    RealMatrix b(6, 3);
    b.col(0) << 1, -1, 0, 0, 1, -1;
    b.col(1) = b.col(0);
    b.col(2) << 0, 0, 1, -1, -1, 1;
    const MaxMinResult r = maxmin_over_nullspace(p, b);
    CHECK_FALSE(r.unbounded);
    CHECK_THAT(r.t_star, WithinAbs(0.25, 1e-12));
    CHECK(r.pivots < 1000);
}

TEST_CASE("scaling the shift directions does not change t*", "[simplex][property]") {
    test::Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const RealMatrix b = zero_sum_directions(rng, 5, 2);
        const RealVector p = RealVector::Random(5);
        const double base = maxmin_over_nullspace(p, b).t_star;
        CHECK_THAT(maxmin_over_nullspace(p, RealMatrix(7.5 * b)).t_star, WithinAbs(base, 1e-9));
        // a constant offset of p moves t* by the same amount
        CHECK_THAT(maxmin_over_nullspace(RealVector(p.array() + 0.3), b).t_star, WithinAbs(base + 0.3, 1e-9));
    }
}
