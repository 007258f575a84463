// Copyright (C) 2026 the abharm authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "abharm/errors.hpp"
#include "abharm/group.hpp"

using namespace abharm;

namespace {

GroupElement random_element(const GroupSpec& spec, std::mt19937_64& rng)
{
    return unrank(spec, rng() % spec.order);
}

} // namespace

TEST_CASE("make_group validates and computes the order")
{
    CHECK(make_group({4}).order == 4);
    CHECK(make_group({}).order == 1);
    CHECK(make_group({2, 3}).order == 6);
    CHECK(make_group({1, 1, 5}).order == 5);

    CHECK_THROWS_AS(make_group({0}), Error);
    CHECK_THROWS_AS(make_group({3, -2}), Error);
    CHECK_THROWS_AS(make_group({1 << 13, 1 << 13}, kDefaultSizeCap), Error);
    try {
        make_group({-1});
        FAIL("expected NonPositiveOrder");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonPositiveOrder);
    }
    try {
        make_group({1 << 20, 1 << 20});
        FAIL("expected SizeCapExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SizeCapExceeded);
    }
    // The cap is configurable.
    CHECK(make_group({1 << 13, 1 << 13}, std::size_t{1} << 26).order == std::size_t{1} << 26);
}

TEST_CASE("zero is the identity tuple")
{
    CHECK(zero(make_group({2, 3})) == element(make_group({2, 3}), {0, 0}));
    CHECK(zero(make_group({})).residues.empty());
    CHECK(zero(make_group({7})) == element(make_group({7}), {0}));
}

TEST_CASE("add works componentwise modulo the factor orders")
{
    const auto g4 = make_group({4});
    CHECK(add(g4, element(g4, {3}), element(g4, {2})) == element(g4, {1}));

    const auto g23 = make_group({2, 3});
    CHECK(add(g23, element(g23, {1, 2}), element(g23, {1, 2})) == element(g23, {0, 1}));

    const auto g5 = make_group({5});
    CHECK(add(g5, zero(g5), element(g5, {4})) == element(g5, {4}));

    CHECK_THROWS_AS(add(g23, element(g5, {1}), element(g23, {1, 1})), Error);
}

TEST_CASE("negate inverts")
{
    const auto g4 = make_group({4});
    CHECK(negate(g4, element(g4, {1})) == element(g4, {3}));
    CHECK(negate(g4, element(g4, {0})) == element(g4, {0}));

    const auto g23 = make_group({2, 3});
    CHECK(negate(g23, element(g23, {1, 2})) == element(g23, {1, 1}));
}

TEST_CASE("rank and unrank follow the little-endian convention")
{
    const auto g23 = make_group({2, 3});
    CHECK(rank(g23, element(g23, {1, 2})) == 5);
    CHECK(rank(g23, zero(g23)) == 0);
    CHECK(unrank(g23, 5) == element(g23, {1, 2}));
    CHECK(unrank(g23, 0) == element(g23, {0, 0}));

    const auto g4 = make_group({4});
    CHECK(rank(g4, element(g4, {3})) == 3);
    const auto g6 = make_group({6});
    CHECK(unrank(g6, 4) == element(g6, {4}));

    CHECK_THROWS_AS(unrank(g23, 6), Error);
    try {
        unrank(g23, 600);
        FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IndexOutOfRange);
    }
}

TEST_CASE("element construction validates residues")
{
    const auto g23 = make_group({2, 3});
    CHECK_THROWS_AS(element(g23, {1}), Error);
    CHECK_THROWS_AS(element(g23, {2, 0}), Error);
    CHECK_THROWS_AS(element(g23, {0, -1}), Error);
}

TEST_CASE("group laws hold exactly on random triples")
{
    std::mt19937_64 rng(12345);
    for (const auto& orders : std::vector<std::vector<std::int64_t>>{
             {1}, {2}, {7}, {2, 3}, {4, 9, 5}, {2, 2, 2, 2, 2, 2, 2, 2, 2, 2}, {97}, {10, 10},
             {100, 100}}) {
        const auto spec = make_group(orders);
        for (int i = 0; i < 500; ++i) {
            const auto a = random_element(spec, rng);
            const auto b = random_element(spec, rng);
            const auto c = random_element(spec, rng);
            CHECK(add(spec, a, b) == add(spec, b, a));
            CHECK(add(spec, add(spec, a, b), c) == add(spec, a, add(spec, b, c)));
            CHECK(add(spec, a, zero(spec)) == a);
            CHECK(add(spec, a, negate(spec, a)) == zero(spec));
            CHECK(negate(spec, negate(spec, a)) == a);
        }
    }
}

TEST_CASE("rank and unrank are mutually inverse bijections")
{
    for (const auto& orders :
         std::vector<std::vector<std::int64_t>>{{}, {1}, {5}, {2, 3}, {3, 1, 4}, {2, 2, 2, 2}}) {
        const auto spec = make_group(orders);
        for (std::size_t k = 0; k < spec.order; ++k)
            CHECK(rank(spec, unrank(spec, k)) == k);
    }
}
