#include <doctest.h>

#include <limits>
#include <set>
#include <vector>

#include "idxsplit/oracle.hpp"
#include "idxsplit/split.hpp"

using namespace idxsplit;

namespace {

constexpr Index max_index = std::numeric_limits<Index>::max();

Partition part(Range l, std::optional<Index> ex, Range r, SplitPolicy p) {
    return Partition{l, ex, r, p};
}

std::set<Index> elements(const Partition& p) {
    std::set<Index> out;
    for (Index i = p.left.lo(); i < p.left.hi(); ++i)
        out.insert(i);
    if (p.excluded)
        out.insert(*p.excluded);
    for (Index i = p.right.lo(); i < p.right.hi(); ++i)
        out.insert(i);
    return out;
}

} // namespace

TEST_CASE("split_n") {
    using P = SplitPolicy;
    CHECK(split_n(Extent(5), P::Natural) == part({0, 2}, 2, {3, 5}, P::Natural));
    CHECK(split_n(Extent(6), P::Natural) == part({0, 3}, std::nullopt, {3, 6}, P::Natural));
    CHECK(split_n(Extent(5), P::LeftPlus) == part({0, 3}, std::nullopt, {3, 5}, P::LeftPlus));
    CHECK(split_n(Extent(5), P::CutRight) == part({0, 2}, 2, {3, 5}, P::CutRight));

    const Partition cut6 = split_n(Extent(6), P::CutLeft);
    CHECK(cut6 == part({0, 2}, 2, {3, 6}, P::CutLeft));
    CHECK(equivalent(cut6, oracle::oracle_split(Extent(6), P::CutLeft)));

    const Partition zero = split_n(Extent(0), P::LeftPlus);
    CHECK(zero.left.empty());
    CHECK(zero.right.empty());
    CHECK_FALSE(zero.excluded);

    CHECK(split_n(Extent(1), P::LeftPlus) == part({0, 1}, std::nullopt, {1, 1}, P::LeftPlus));
}

TEST_CASE("split_n pieces tile the frame for every policy") {
    for (Index n = 0; n <= 300; ++n) {
        for (SplitPolicy policy : all_policies) {
            const Partition p = split_n(Extent(n), policy);
            const Index pieces = p.left.length().value() + p.right.length().value() +
                                 (p.excluded ? 1 : 0);
            REQUIRE(pieces == n);
            std::set<Index> want;
            for (Index i = 0; i < n; ++i)
                want.insert(i);
            REQUIRE(elements(p) == want);
            REQUIRE(equivalent(p, oracle::oracle_split(Extent(n), policy)));
        }
    }
}

TEST_CASE("split_based") {
    using P = SplitPolicy;
    const Partition rp = split_based(10, Extent(5), P::RightPlus);
    CHECK(rp.left == Range(10, 12));
    CHECK(rp.right == Range(12, 15));
    CHECK(rp == rebase(split_n(Extent(5), P::RightPlus), 10));

    CHECK(split_based(0, Extent(6), P::Natural) == split_n(Extent(6), P::Natural));

    const Partition one = split_based(7, Extent(1), P::CutRight);
    CHECK(one.left == Range(7, 7));
    CHECK(one.excluded == 7);
    CHECK(equivalent(one, rebase(oracle::oracle_split(Extent(1), P::CutRight), 7)));

    CHECK_THROWS_AS(split_based(max_index - 2, Extent(5), P::Natural), OverflowError);
}

TEST_CASE("split_be") {
    using P = SplitPolicy;
    CHECK(split_be(0, 4, P::Natural) == part({0, 2}, 2, {3, 5}, P::Natural));
    for (Index b : {-9, 0, 4}) {
        const Partition single = split_be(b, b, P::LeftPlus);
        CHECK(single.left == Range(b, b + 1));
        CHECK(single.right.empty());
    }
    const Partition rp = split_be(3, 8, P::RightPlus);
    CHECK(rp.left == Range(3, 6));
    CHECK(rp.right == Range(6, 9));
    CHECK(rp == split_based(3, Extent(6), P::RightPlus));

    CHECK_THROWS_AS(split_be(5, 4, P::Natural), DomainError);

    SUBCASE("b+e beyond the index width still splits") {
        const Partition hi = split_be(max_index - 10, max_index - 1, P::Natural);
        CHECK(hi.left == Range(max_index - 10, max_index - 5));
        CHECK(hi.right == Range(max_index - 5, max_index));
        CHECK(split_be(std::numeric_limits<Index>::min(), std::numeric_limits<Index>::min() + 3,
                       P::LeftPlus)
                  .left.length() == Extent(2));
        CHECK_THROWS_AS(split_be(max_index - 3, max_index, P::Natural), OverflowError);
    }
}

TEST_CASE("split_bex") {
    using P = SplitPolicy;
    CHECK(split_bex(0, 6, P::RightPlus) == split_n(Extent(6), P::RightPlus));
    for (Index b : {-3, 0, 11}) {
        const Partition z = split_bex(b, b, P::Natural);
        CHECK(z.left.empty());
        CHECK(z.right.empty());
    }
    CHECK(split_bex(2, 7, P::CutRight) == part({2, 4}, 4, {5, 7}, P::CutRight));
    CHECK(equivalent(split_bex(2, 7, P::CutRight),
                     rebase(oracle::oracle_split(Extent(5), P::CutRight), 2)));

    CHECK_THROWS_AS(split_bex(3, 2, P::Natural), DomainError);
    CHECK_THROWS_AS(split_bex(0, 4, P::LeftPlus), DomainError);
    CHECK_THROWS_AS(split_bex(0, 4, P::CutLeft), DomainError);
    CHECK(supports_bex(P::CutRight));
    CHECK_FALSE(supports_bex(P::LeftPlus));
}

TEST_CASE("landmarks") {
    CHECK(landmarks(Extent(5)) == Landmarks{1, 2, 3});
    CHECK(landmarks(Extent(6)) == Landmarks{2, std::nullopt, 3});
    CHECK(landmarks(Extent(2)) == Landmarks{0, std::nullopt, 1});
    CHECK_THROWS_AS(landmarks(Extent(1)), DomainError);
    CHECK_THROWS_AS(landmarks(Extent(0)), DomainError);

    SUBCASE("cut policies drop el or rs when there is no center") {
        for (Index n = 2; n <= 500; ++n) {
            const Landmarks lm = landmarks(Extent(n));
            const Partition cl = split_n(Extent(n), SplitPolicy::CutLeft);
            const Partition cr = split_n(Extent(n), SplitPolicy::CutRight);
            if (n % 2 == 1) {
                CHECK(cl.excluded == lm.center);
                CHECK(cr.excluded == lm.center);
            } else {
                CHECK(cl.excluded == lm.el);
                CHECK(cr.excluded == lm.rs);
            }
        }
    }
}

TEST_CASE("center band, index and window") {
    CHECK(center_band(Extent(5)) == Range(2, 3));
    CHECK(center_band(Extent(6)).empty());
    CHECK(center_band(Extent(6)) == Range(3, 3));
    CHECK(center_band(Extent(0)) == Range(0, 0));

    CHECK(center_index(Extent(5)) == 2);
    CHECK_FALSE(center_index(Extent(4)));
    CHECK(center_index(Extent(1)) == 0);

    CHECK(center_window(Extent(5), Extent(1)) == Range(1, 4));
    CHECK(center_window(Extent(6), Extent(2)) == Range(1, 5));
    CHECK(center_window(Extent(5), Extent(0)) == center_band(Extent(5)));
    CHECK_THROWS_AS(center_window(Extent(5), Extent(3)), DomainError);
    CHECK_THROWS_AS(center_window(Extent(0), Extent(1)), DomainError);

    SUBCASE("windows are symmetric under mirroring and hold the band") {
        for (Index n = 0; n <= 40; ++n)
            for (Index k = 0; 2 * k + n % 2 <= n; ++k) {
                const Range w = center_window(Extent(n), Extent(k));
                CHECK(w.length().value() == 2 * k + n % 2);
                if (!w.empty())
                    CHECK(mirror(w, Extent(n)) == w);
            }
    }
}

TEST_CASE("kway_split") {
    CHECK(kway_split(Extent(7), Extent(3)) == std::vector<Range>{{0, 2}, {2, 4}, {4, 7}});
    CHECK(kway_split(Extent(6), Extent(3)) == std::vector<Range>{{0, 2}, {2, 4}, {4, 6}});
    const std::vector<Range> empties = kway_split(Extent(0), Extent(4));
    REQUIRE(empties.size() == 4);
    for (const Range& r : empties)
        CHECK(r.empty());
    CHECK_THROWS_AS(kway_split(Extent(5), Extent(0)), DomainError);

    SUBCASE("deal-out oracle") {
        // Hand out elements round-robin starting from the last part: part
        // sizes then follow from counting alone.
        for (Index n = 0; n <= 120; ++n)
            for (Index k = 1; k <= 13; ++k) {
                std::vector<Index> sizes(static_cast<std::size_t>(k), 0);
                for (Index i = 0; i < n; ++i)
                    ++sizes[static_cast<std::size_t>(k - 1 - i % k)];
                const std::vector<Range> parts = kway_split(Extent(n), Extent(k));
                REQUIRE(parts.size() == sizes.size());
                Index at = 0;
                for (std::size_t r = 0; r < parts.size(); ++r) {
                    CHECK(parts[r].lo() == at);
                    CHECK(parts[r].length().value() == sizes[r]);
                    at = parts[r].hi();
                }
                CHECK(at == n);
            }
    }
}

TEST_CASE("size laws") {
    for (Index n = 0; n <= 2000; ++n) {
        const Extent e(n);
        const Index half = n / 2;
        CHECK(split_n(e, SplitPolicy::Natural).left.length().value() == half);
        CHECK(split_n(e, SplitPolicy::Natural).right.length().value() == half);
        CHECK(split_n(e, SplitPolicy::LeftPlus).left.length().value() == n - half);
        CHECK(split_n(e, SplitPolicy::LeftPlus).right.length().value() == half);
        CHECK(split_n(e, SplitPolicy::RightPlus).left.length().value() == half);
        CHECK(split_n(e, SplitPolicy::RightPlus).right.length().value() == n - half);
        if (n >= 1)
            for (SplitPolicy cut : {SplitPolicy::CutLeft, SplitPolicy::CutRight}) {
                const Partition p = split_n(e, cut);
                CHECK(p.left.length().value() + p.right.length().value() == n - 1);
            }
    }
}

TEST_CASE("mirror maps natural halves onto each other") {
    for (Index n = 0; n <= 200; ++n) {
        const Partition p = split_n(Extent(n), SplitPolicy::Natural);
        std::set<Index> image;
        for (Index i = p.left.lo(); i < p.left.hi(); ++i)
            image.insert(mirror_index(i, Extent(n)));
        std::set<Index> right;
        for (Index i = p.right.lo(); i < p.right.hi(); ++i)
            right.insert(i);
        CHECK(image == right);
    }
}

TEST_CASE("policy names round trip") {
    for (SplitPolicy p : all_policies)
        CHECK(parse_policy(name(p)) == p);
    CHECK_FALSE(parse_policy("middle"));
    CHECK(to_string(split_n(Extent(6), SplitPolicy::Natural)) ==
          "natural: left [0, 3), excluded none, right [3, 6)");
}
