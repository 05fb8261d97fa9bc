#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "casimir/error.hpp"
#include "casimir/specfun.hpp"

namespace {

using casimir::DomainError;
using casimir::specfun::li2;
using casimir::specfun::li3;
using casimir::specfun::PolyOrder;
using casimir::specfun::polylog;
using casimir::specfun::polylog_terms;
using casimir::specfun::zeta3;

struct Oracle {
    double z;
    double li2;
    double li3;
};

// 30-digit reference evaluations.
constexpr Oracle kOracles[] = {
    {0.5, 0.58224052646501251, 0.5372131936080402},
    {-0.5, -0.4484142069236462, -0.47259784465889687},
    {0.3, 0.32612951007547607, 0.31240017789289262},
    {0.7056, 0.89904582084273143, 0.7871890652690214},
    {0.9, 1.2997147230049587, 1.0496589501864399},
    {-0.9, -0.75216317921726162, -0.81863820154436384},
    {0.95, 1.4406337969700395, 1.1235745842791988},
    {0.99, 1.5886254480763753, 1.1858329336450369},
    {0.995, 1.6133697655259166, 1.1938969871912495},
    {0.999, 1.6370226052761177, 1.2004153539954643},
    {-0.999, -0.82177378964724064, -0.90072014566542724},
    {-1.0, -0.82246703342411322, -0.90154267736969571},
};

TEST(Polylog, MatchesReferenceValues) {
    for (const auto& o : kOracles) {
        EXPECT_NEAR(li2(o.z), o.li2, 1e-13) << "z = " << o.z;
        EXPECT_NEAR(li3(o.z), o.li3, 1e-13) << "z = " << o.z;
    }
}

TEST(Polylog, PhysicalArguments) {
    const double r0 = (11.66 - 1.0) / (11.66 + 1.0);
    EXPECT_NEAR(li3(r0), 0.967834329934183, 1e-14);
    EXPECT_NEAR(li3(r0 * r0), 0.791526560345246, 1e-14);
    EXPECT_NEAR(li2(r0 * r0), 0.90495393486717935, 1e-14);
    EXPECT_NEAR(li3(0.8421), 0.967941899161721, 1e-14);
}

TEST(Polylog, EndpointsAndZero) {
    EXPECT_EQ(li2(0.0), 0.0);
    EXPECT_EQ(li3(0.0), 0.0);
    EXPECT_DOUBLE_EQ(li3(1.0), 1.2020569031595943);
    EXPECT_DOUBLE_EQ(li2(1.0), std::numbers::pi * std::numbers::pi / 6.0);
}

TEST(Polylog, RejectsOutsideUnitInterval) {
    EXPECT_THROW(li2(1.0000001), DomainError);
    EXPECT_THROW(li3(-1.5), DomainError);
    EXPECT_THROW(li3(std::nan("")), DomainError);
    EXPECT_THROW(li2(INFINITY), DomainError);
}

TEST(Zeta3, ConstantAndConsistency) {
    EXPECT_DOUBLE_EQ(zeta3(), 1.2020569031595943);
    EXPECT_EQ(zeta3(), li3(1.0));
    // Partial sum to 10^6 plus the integral tail bound 1/(2 N^2).
    long double partial = 0.0L;
    for (long k = 1000000; k >= 1; --k) partial += 1.0L / (static_cast<long double>(k) * k * k);
    EXPECT_LT(std::abs(zeta3() - static_cast<double>(partial)), 1e-12 + 0.5e-12);
}

TEST(Polylog, MonotoneInZ) {
    double prev2 = li2(-1.0);
    double prev3 = li3(-1.0);
    for (int i = -999; i <= 1000; ++i) {
        const double z = i / 1000.0;
        const double v2 = li2(z);
        const double v3 = li3(z);
        EXPECT_LT(prev2, v2) << z;
        EXPECT_LT(prev3, v3) << z;
        prev2 = v2;
        prev3 = v3;
    }
}

TEST(Polylog, ThirdOrderBelowSecondOnOpenInterval) {
    for (int i = 1; i < 1000; ++i) {
        const double z = i / 1000.0;
        EXPECT_LT(li3(z), li2(z)) << z;
    }
}

TEST(Polylog, RespectsOwnTruncationBound) {
    std::mt19937_64 rng(20240917);
    std::uniform_real_distribution<double> dist(0.0, 0.99);
    for (int trial = 0; trial < 1000; ++trial) {
        const double z = dist(rng);
        for (PolyOrder n : {PolyOrder::two, PolyOrder::three}) {
            const std::size_t K = polylog_terms(n, z);
            ASSERT_GT(K, 0u);
            const int p = static_cast<int>(n);
            // Reference: the same series carried far past K in extended precision.
            long double ref = 0.0L;
            long double zk = 1.0L;
            for (int k = 1; k <= 20000; ++k) {
                zk *= z;
                ref += zk / std::pow(static_cast<long double>(k), p);
                if (zk < 1e-30L) break;
            }
            const double kp1 = static_cast<double>(K + 1);
            const double bound = std::pow(z, kp1) / ((1.0 - z) * std::pow(kp1, p));
            const double err = std::abs(polylog(n, z) - static_cast<double>(ref));
            EXPECT_LE(err, bound + 4e-16 * std::abs(static_cast<double>(ref))) << "z = " << z << " n = " << p;
        }
    }
}

TEST(Polylog, TermCountOnlyForSeriesBranch) {
    EXPECT_EQ(polylog_terms(PolyOrder::three, 0.995), 0u);
    EXPECT_EQ(polylog_terms(PolyOrder::three, -0.3), 0u);
    EXPECT_GT(polylog_terms(PolyOrder::three, 0.9), 100u);
}

}  // namespace
