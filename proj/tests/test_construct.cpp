#include <doctest.h>

#include "lrc/construct.hpp"
#include "lrc/locality.hpp"
#include "lrc/subcode.hpp"
#include "oracles.hpp"

using namespace lrc;

TEST_SUITE_BEGIN("construct");

namespace {

// Additive closure over GF(q); the pyramid parities are linear forms, so
// the untwisted codes must pass and a generic twist must not.
bool additively_closed(const Codebook& c) {
    for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = a; b < c.size(); ++b) {
            Word sum(c.n());
            for (int pos = 0; pos < c.n(); ++pos) {
                sum[pos] =
                    static_cast<Symbol>((c.word(a)[pos] + c.word(b)[pos]) % c.q());
            }
            if (!c.contains(sum)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("MDS builder fixtures") {
    const SystematicCode rs = build_rs_mds(7, 3, 4);
    CHECK(rs.n() == 6);
    CHECK(rs.base().size() == 343);
    CHECK(oracle::min_distance(rs.base().words()) == 4);

    const SystematicCode repetition = build_rs_mds(2, 1, 2);
    CHECK(repetition.base().words() == std::vector<Word>{{0, 0}, {1, 1}});

    CHECK_THROWS_AS(build_rs_mds(5, 3, 4), AlphabetTooSmall);
    CHECK_THROWS_AS(build_rs_mds(7, 3, 1), InvalidSpec);
}

TEST_CASE("MDS codebooks pass every size-k projection") {
    const SystematicCode rs = build_rs_mds(5, 2, 3);  // n = 4
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
            CHECK(mds_projection_check(rs.base(), {a, b}).bijective);
        }
    }
}

TEST_CASE("pyramid fixture 7/4/2/3") {
    const SystematicCode pyramid = build_pyramid({7, 4, 2, 3});
    CHECK(pyramid.n() == 7);
    CHECK(pyramid.base().size() == 2401);
    CHECK(oracle::min_distance(pyramid.base().words()) == 3);
    CHECK(information_locality(pyramid, 6) == 2);
    const BoundReport bound = check_locality_bound(7, 4, 3, 2);
    CHECK(bound.optimal);
}

TEST_CASE("pyramid with r = 1 scales single symbols into light parities") {
    const SystematicCode pyramid = build_pyramid({5, 2, 1, 3});
    CHECK(pyramid.n() == 5);
    CHECK(oracle::min_distance(pyramid.base().words()) == 3);
    // light parity g is a bijective function of information symbol g alone
    for (int g = 0; g < 2; ++g) {
        CHECK(determines(pyramid.base(), {g}, 2 + g));
        CHECK(determines(pyramid.base(), {2 + g}, g));
    }
    // the heavy parity depends on both information symbols
    CHECK_FALSE(determines(pyramid.base(), {0}, 4));
    CHECK_FALSE(determines(pyramid.base(), {1}, 4));
    CHECK(determines(pyramid.base(), {0, 1}, 4));
}

TEST_CASE("r = k collapses to the MDS code") {
    const SystematicCode pyramid = build_pyramid({7, 4, 4, 3});
    const SystematicCode rs = build_rs_mds(7, 4, 3);
    CHECK(pyramid.n() == 6);
    CHECK(pyramid.base().words() == rs.base().words());
}

TEST_CASE("pyramid spec validation") {
    CHECK_THROWS_AS(build_pyramid({7, 4, 3, 3}), InvalidSpec);   // r does not divide k
    CHECK_THROWS_AS(build_pyramid({7, 4, 2, 1}), InvalidSpec);   // d too small
    CHECK_THROWS_AS(build_pyramid({5, 4, 2, 3}), InvalidSpec);   // q < k + d - 1
    CHECK_THROWS_AS(build_pyramid({6, 4, 2, 3}), InvalidSpec);   // q not prime
    CHECK_THROWS_AS(build_pyramid({7, 4, 5, 3}), InvalidSpec);   // r > k
    CHECK_THROWS_AS(build_pyramid({7, 4, 2, 5}), InvalidSpec);   // q < k + d - 1 again
    Limits tiny;
    tiny.max_words = 100;
    CHECK_THROWS_AS(build_pyramid({7, 4, 2, 3}, tiny), TooLarge);
}

TEST_CASE("every shipped pyramid meets the bound with equality and d exactly") {
    const PyramidSpec specs[] = {{7, 4, 2, 3}, {5, 2, 1, 3}, {5, 2, 1, 4},
                                 {7, 2, 1, 2}, {5, 4, 2, 2}, {11, 4, 2, 4}};
    for (const PyramidSpec& spec : specs) {
        const SystematicCode code = build_pyramid(spec);
        CHECK(code.n() == spec.k + spec.k / spec.r + spec.d - 2);
        CHECK(min_distance(code.base()) == spec.d);
        CHECK(information_locality(code, spec.r) == spec.r);
        CHECK(check_locality_bound(code.n(), spec.k, spec.d, spec.r).optimal);
    }
}

TEST_CASE("identity twist is a no-op") {
    const Codebook parity(2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    std::vector<std::vector<Symbol>> identity(3, {0, 1});
    CHECK(twist(parity, TwistSpec::explicit_perms(identity)).words() ==
          parity.words());
}

TEST_CASE("explicit twist on the parity code") {
    const Codebook parity(2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    const Codebook flipped = twist(
        parity, TwistSpec::explicit_perms({{0, 1}, {0, 1}, {1, 0}}));
    CHECK(flipped.words() ==
          std::vector<Word>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}});
    CHECK(min_distance(flipped) == 2);
    CHECK(min_distance(parity) == 2);
}

TEST_CASE("twist validation") {
    const Codebook parity(2, {{0, 0}, {1, 1}});
    CHECK_THROWS_AS(twist(parity, TwistSpec::explicit_perms({{0, 1}})), ShapeError);
    CHECK_THROWS_AS(twist(parity, TwistSpec::explicit_perms({{0, 0}, {0, 1}})),
                    ShapeError);
    CHECK_THROWS_AS(twist(parity, TwistSpec::explicit_perms({{0}, {0, 1}})),
                    ShapeError);
    CHECK_THROWS_AS(twist(parity, TwistSpec{}), ShapeError);
}

TEST_CASE("seeded permutations are deterministic and alphabet bijections") {
    const auto perms = twist_permutations(1, 7, 7);
    CHECK(perms == twist_permutations(1, 7, 7));
    CHECK(perms != twist_permutations(2, 7, 7));
    for (const auto& perm : perms) {
        std::vector<char> hit(7, 0);
        for (Symbol s : perm) {
            REQUIRE(s < 7);
            CHECK_FALSE(hit[s]);
            hit[s] = 1;
        }
    }
}

TEST_CASE("twist preserves metric and locality structure") {
    const SystematicCode pyramid = build_pyramid({5, 2, 1, 3});
    const SystematicCode twisted = twist(pyramid, TwistSpec::seeded(1));
    CHECK(twisted.base().size() == pyramid.base().size());
    CHECK(min_distance(twisted.base()) == min_distance(pyramid.base()));

    // the full determined-by relation survives coordinate bijections
    for (int i = 0; i < pyramid.n(); ++i) {
        CoordSet pool;
        for (int c = 0; c < pyramid.n(); ++c) {
            if (c != i) pool.push_back(c);
        }
        for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
            CoordSet s;
            for (std::size_t b = 0; b < pool.size(); ++b) {
                if (mask & (1u << b)) s.push_back(pool[b]);
            }
            CHECK(determines(pyramid.base(), s, i) ==
                  determines(twisted.base(), s, i));
        }
    }

    const LocalityProfile original = locality_profile(pyramid.base(), 4);
    const LocalityProfile after = locality_profile(twisted.base(), 4);
    for (int i = 0; i < pyramid.n(); ++i) {
        CHECK(original[i].locality == after[i].locality);
        CHECK(original[i].witness == after[i].witness);
    }
}

TEST_CASE("a seeded twist of the pyramid breaks additive closure") {
    const SystematicCode pyramid = build_pyramid({5, 2, 1, 3});
    CHECK(additively_closed(pyramid.base()));
    bool some_twist_broke_closure = false;
    for (std::uint64_t seed : {1, 2, 3}) {
        if (!additively_closed(twist(pyramid.base(), TwistSpec::seeded(seed)))) {
            some_twist_broke_closure = true;
        }
    }
    CHECK(some_twist_broke_closure);
}

TEST_CASE("the non-reversible example") {
    const Codebook and_code = build_nonreversible_example();
    CHECK(and_code.words() ==
          std::vector<Word>{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}});
    const auto verdicts = reversibility_check(and_code, {0, 1, 2});
    CHECK(verdicts.at(2));
    CHECK_FALSE(verdicts.at(0));
    CHECK_FALSE(verdicts.at(1));
    CHECK(min_distance(and_code) == 1);
}

TEST_SUITE_END();
