#include <doctest.h>

#include <random>

#include "tdcode/rmq.hpp"

using namespace tdcode;

namespace {

std::vector<Cost> costs(std::initializer_list<std::uint64_t> vals) {
    std::vector<Cost> out;
    for (auto v : vals) {
        out.push_back(Cost::finite(v));
    }
    return out;
}

}  // namespace

TEST_CASE("basic queries") {
    const RMQIndex a(costs({3, 1, 2}));
    CHECK(a.query(0, 2) == 1);
    const RMQIndex one(costs({5}));
    CHECK(one.query(0, 0) == 0);
    const RMQIndex flat(costs({2, 2, 2}));
    CHECK(flat.query(0, 2) == 0);
    CHECK(flat.query(1, 2) == 1);
    const RMQIndex b(costs({4, 3, 5, 1}));
    CHECK(b.query(0, 2) == 1);
    CHECK(b.query(0, 3) == 3);
    const RMQIndex c(std::vector<Cost>{Cost::unreachable(), Cost::finite(7)});
    CHECK(c.query(0, 1) == 1);
    CHECK(c.query(0, 0) == 0);
}

TEST_CASE("bad ranges and empty input") {
    CHECK_THROWS_AS(RMQIndex(std::vector<Cost>{}), Error);
    const RMQIndex a(costs({1, 2}));
    try {
        (void)a.query(1, 0);
        FAIL("expected InvalidRange");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidRange);
    }
    CHECK_THROWS_AS((void)a.query(0, 2), Error);
}

TEST_CASE("index owns its values") {
    std::vector<Cost> v = costs({9, 4, 6});
    const RMQIndex idx(v);
    v.assign(3, Cost::finite(0));
    v.clear();
    CHECK(idx.query(0, 2) == 1);
    CHECK(idx.value(1).value() == 4);
}

TEST_CASE("every window matches a linear scan") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t len = std::uniform_int_distribution<std::size_t>(1, 200)(rng);
        std::uniform_int_distribution<int> val(0, 12);  // small range, many ties
        std::vector<Cost> v;
        for (std::size_t i = 0; i < len; ++i) {
            const int x = val(rng);
            v.push_back(x == 12 ? Cost::unreachable() : Cost::finite(static_cast<std::uint64_t>(x)));
        }
        const RMQIndex idx(v);
        for (std::size_t i = 0; i < len; ++i) {
            for (std::size_t j = i; j < len; ++j) {
                std::size_t best = i;
                for (std::size_t k = i + 1; k <= j; ++k) {
                    if (v[k] < v[best]) {
                        best = k;
                    }
                }
                REQUIRE(idx.query(i, j) == best);
            }
        }
    }
}
