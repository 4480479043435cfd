#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "submod/baselines.hpp"
#include "submod/stream_io.hpp"
#include "submod/threshold_stream.hpp"
#include "test_util.hpp"

using namespace submod;
using testutil::close;
using testutil::cov;
using testutil::vec;

TEST_CASE("initial threshold anchors at f(u1)/2k") {
    SubmodularOracle f(FuncKind::Coverage);
    ThresholdStream a(1, 0.999, cov(1, {10}), f);
    CHECK(close(a.buckets().front().tau, 0.5));
    CHECK(a.buckets().front().solution.contains(1));

    ThresholdStream b(2, 0.5, cov(1, {10, 11}), f);
    CHECK(close(b.buckets().front().tau, 0.5));

    SubmodularOracle g(FuncKind::LogDet);
    ThresholdStream c(1, 0.999, vec(1, {0.3, 0.4}), g);
    CHECK(close(c.buckets().front().tau, 0.25 * std::log(2.0)));

    // single-element stream: the answer is the first singleton value
    CHECK(a.best_value() == 1.0);
    CHECK(close(c.best_value(), 0.5 * std::log(2.0)));
}

TEST_CASE("lazy growth and bucket assignment follow the hand trace") {
    // k=1, delta=1: after u1={a}, the grid reaches m=1 (taus 0.5, 1.0) and u1
    // lands in both buckets; after u2={b,c} the grid reaches m=2 and only the
    // fresh tau=2 bucket can take u2.
    SubmodularOracle f(FuncKind::Coverage);
    ThresholdStream ts(1, 1.0, cov(1, {100}), f);
    REQUIRE(ts.bucket_count() == 2);
    CHECK(close(ts.buckets()[0].tau, 0.5));
    CHECK(close(ts.buckets()[1].tau, 1.0));
    CHECK(ts.buckets()[0].solution.contains(1));
    CHECK(ts.buckets()[1].solution.contains(1));

    ts.process(cov(2, {200, 201}), f);
    CHECK(ts.running_max() == 2.0);
    CHECK(ts.max_threshold_index() == 2);
    REQUIRE(ts.bucket_count() == 3);
    CHECK(close(ts.buckets()[2].tau, 2.0));
    CHECK(ts.buckets()[0].solution.indices() == std::vector<std::uint64_t>{1});
    CHECK(ts.buckets()[1].solution.indices() == std::vector<std::uint64_t>{1});
    CHECK(ts.buckets()[2].solution.indices() == std::vector<std::uint64_t>{2});

    const ThresholdBucket& best = ts.best();
    CHECK(best.solution.value == 2.0);
    CHECK(best.solution.indices() == std::vector<std::uint64_t>{2});
}

TEST_CASE("low-gain element changes only the running max") {
    SubmodularOracle f(FuncKind::Coverage);
    ThresholdStream ts(1, 1.0, cov(1, {1, 2, 3}), f);
    const auto before = ts.buckets();
    ts.process(cov(2, {1}), f);  // gain 0 against every bucket
    REQUIRE(ts.bucket_count() == before.size());
    for (std::size_t i = 0; i < before.size(); ++i)
        CHECK(ts.buckets()[i].solution.indices() == before[i].solution.indices());
}

TEST_CASE("duplicate elements have zero marginal gain") {
    SubmodularOracle f(FuncKind::Coverage);
    ThresholdStream ts(2, 1.0, cov(1, {7}), f);
    ts.process(cov(2, {7}), f);
    ts.process(cov(3, {7}), f);
    for (const ThresholdBucket& b : ts.buckets())
        CHECK(b.solution.indices() == std::vector<std::uint64_t>{1});
}

TEST_CASE("bucket count equals m_t + 1 without pruning") {
    SubmodularOracle f(FuncKind::Coverage);
    const auto stream = gen_synthetic({SyntheticSpec::Kind::Coverage, 40, 30, 1, 6, 0}, 21);
    ThresholdStream ts(3, 0.3, stream[0], f);
    for (std::size_t i = 1; i < stream.size(); ++i) {
        ts.process(stream[i], f);
        CHECK(ts.bucket_count() == static_cast<std::size_t>(ts.max_threshold_index()) + 1);
    }
}

TEST_CASE("taus form an exact geometric grid") {
    SubmodularOracle f(FuncKind::Coverage);
    const auto stream = gen_synthetic({SyntheticSpec::Kind::Coverage, 30, 40, 1, 5, 0}, 33);
    ThresholdStream ts(2, 0.4, stream[0], f);
    for (std::size_t i = 1; i < stream.size(); ++i) ts.process(stream[i], f);
    const auto& buckets = ts.buckets();
    for (std::size_t j = 0; j + 1 < buckets.size(); ++j)
        CHECK(close(buckets[j + 1].tau, buckets[j].tau * 1.4));
    CHECK(close(buckets.front().tau, ts.first_value() / 4.0));
}

TEST_CASE("identical streams give identical states") {
    const auto stream = gen_synthetic({SyntheticSpec::Kind::Coverage, 25, 20, 1, 4, 0}, 5);
    SubmodularOracle f1(FuncKind::Coverage), f2(FuncKind::Coverage);
    ThresholdStream a(2, 0.25, stream[0], f1), b(2, 0.25, stream[0], f2);
    for (std::size_t i = 1; i < stream.size(); ++i) {
        a.process(stream[i], f1);
        b.process(stream[i], f2);
    }
    REQUIRE(a.bucket_count() == b.bucket_count());
    for (std::size_t j = 0; j < a.bucket_count(); ++j) {
        CHECK(a.buckets()[j].tau == b.buckets()[j].tau);
        CHECK(a.buckets()[j].solution.indices() == b.buckets()[j].solution.indices());
    }
    CHECK(f1.eval_count() == f2.eval_count());
}

TEST_CASE("solution value never decreases") {
    for (FuncKind kind : {FuncKind::Coverage, FuncKind::LogDet}) {
        SubmodularOracle f(kind);
        SyntheticSpec spec{kind == FuncKind::Coverage ? SyntheticSpec::Kind::Coverage
                                                      : SyntheticSpec::Kind::Vectors,
                           30, 25, 1, 5, 3};
        const auto stream = gen_synthetic(spec, 77);
        ThresholdStream ts(3, 0.2, stream[0], f);
        double prev = ts.best_value();
        for (std::size_t i = 1; i < stream.size(); ++i) {
            ts.process(stream[i], f);
            CHECK(ts.best_value() >= prev - 1e-12);
            prev = ts.best_value();
        }
    }
}

TEST_CASE("prefix guarantee against exhaustive optima") {
    // h >= (1 - delta) * k/(k + k') * f_{k'} on every prefix, all k' <= k.
    for (double delta : {0.1, 0.5}) {
        for (int s = 0; s < 10; ++s) {
            SubmodularOracle f(FuncKind::Coverage);
            SubmodularOracle oracle(FuncKind::Coverage);
            const std::uint32_t k = 1 + s % 4;
            const auto stream =
                gen_synthetic({SyntheticSpec::Kind::Coverage, 12, 15, 1, 4, 0}, 500 + s);
            ThresholdStream ts(k, delta, stream[0], f);
            std::vector<Element> prefix{stream[0]};
            for (std::size_t i = 0; i <= stream.size(); ++i) {
                for (std::uint32_t kp = 1; kp <= k; ++kp) {
                    const double fk = brute_force_opt(prefix, kp, oracle).value;
                    const double bound = (1.0 - delta) * k / double(k + kp) * fk;
                    CHECK(ts.best_value() >= bound - 1e-9);
                }
                if (i + 1 >= stream.size()) break;
                ts.process(stream[i + 1], f);
                prefix.push_back(stream[i + 1]);
            }
        }
    }
}

TEST_CASE("coverage prune keeps the solution value") {
    for (int s = 0; s < 8; ++s) {
        const auto stream =
            gen_synthetic({SyntheticSpec::Kind::Coverage, 30, 25, 1, 5, 0}, 800 + s);
        SubmodularOracle f1(FuncKind::Coverage), f2(FuncKind::Coverage);
        ThresholdStream plain(3, 0.2, stream[0], f1, false);
        ThresholdStream pruned(3, 0.2, stream[0], f2, true);
        for (std::size_t i = 1; i < stream.size(); ++i) {
            plain.process(stream[i], f1);
            pruned.process(stream[i], f2);
            CHECK(plain.best_value() == pruned.best_value());
        }
        CHECK(pruned.bucket_count() <= plain.bucket_count());
        CHECK(f2.eval_count() <= f1.eval_count());
    }
}

TEST_CASE("audit log records gains meeting the threshold") {
    SubmodularOracle f(FuncKind::LogDet);
    const auto stream = gen_synthetic({SyntheticSpec::Kind::Vectors, 20, 0, 1, 1, 3}, 91);
    SubmodularOracle probe(FuncKind::LogDet);
    ThresholdStream ts(3, 0.3, stream[0], probe);
    ts.set_audit(true);
    for (std::size_t i = 1; i < stream.size(); ++i) ts.process(stream[i], probe);
    CHECK(!ts.audit_log().empty());
    for (const InsertionRecord& rec : ts.audit_log()) CHECK(rec.gain >= rec.tau - 1e-12);
    (void)f;
}

TEST_CASE("rejects a zero-value first element and out-of-order arrivals") {
    SubmodularOracle f(FuncKind::Coverage);
    CHECK_THROWS_AS(ThresholdStream(2, 0.5, cov(1, {}), f), std::invalid_argument);
    ThresholdStream ts(2, 0.5, cov(5, {1}), f);
    CHECK_THROWS_AS(ts.process(cov(5, {2}), f), std::invalid_argument);
    CHECK_THROWS_AS(ts.process(cov(3, {2}), f), std::invalid_argument);
}
