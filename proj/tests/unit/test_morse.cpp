#include <doctest.h>

#include <numeric>
#include <random>

#include "thinpos/morse.hpp"

#include "../support.hpp"

using namespace thinpos;

namespace {

MorseWord word_of(std::vector<MorseEvent> events) { return MorseWord(std::move(events)); }

const MorseEvent MIN = MorseEvent::min();
const MorseEvent MAX = MorseEvent::max();

}  // namespace

TEST_CASE("running counts scan the word bottom to top") {
    CHECK(running_counts(word_of({MIN, MAX})) == std::vector<int>{2, 0});
    CHECK(running_counts(word_of({MIN, MIN, MAX, MIN, MAX, MAX})) ==
          std::vector<int>{2, 4, 2, 4, 2, 0});

    // Independent re-derivation by partial sums over the deltas.
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const MorseWord word = testsupport::random_link_word(rng, 12);
        std::vector<int> deltas;
        for (const MorseEvent& e : word.events()) deltas.push_back(e.strand_delta());
        std::vector<int> expected(deltas.size());
        std::partial_sum(deltas.begin(), deltas.end(), expected.begin());
        CHECK(running_counts(word) == expected);
    }
}

TEST_CASE("malformed words are rejected at construction") {
    CHECK_THROWS_AS(word_of({MIN, MAX, MAX}), MalformedWord);
    CHECK_THROWS_AS(word_of({MIN}), MalformedWord);
    CHECK_THROWS_AS(word_of({MAX, MIN}), MalformedWord);
    // Vertex placement: '-' below everything, '+' above everything.
    CHECK_THROWS_AS(word_of({MIN, MorseEvent::vminus(2), MorseEvent::vplus(2), MAX}),
                    MalformedWord);
    CHECK_THROWS_AS(word_of({MorseEvent::vplus(2), MorseEvent::vminus(2)}),
                    MalformedWord);
    CHECK_THROWS_AS(word_of({MorseEvent::vminus(3), MorseEvent::vplus(3)}),
                    MalformedWord);
    CHECK_NOTHROW(word_of({MorseEvent::vminus(2), MorseEvent::vplus(2)}));
    CHECK_NOTHROW(word_of({}));
}

TEST_CASE("link width sums the levels between critical values") {
    CHECK(width_link(word_of({MIN, MAX})) == 2);
    CHECK(width_link(word_of({MIN, MIN, MAX, MIN, MAX, MAX})) == 14);

    const MorseWord word46 =
        testsupport::word_from_profile({2, 4, 6, 8, 6, 8, 6, 4, 2});
    CHECK(width_profile(word46).counts == std::vector<int>{2, 4, 6, 8, 6, 8, 6, 4, 2});
    CHECK(width_link(word46) == 46);

    CHECK_THROWS_AS(width_link(word_of({MorseEvent::vminus(2), MorseEvent::vplus(2)})),
                    NotLinkWord);
}

TEST_CASE("graph width skips levels adjacent to vertex events") {
    CHECK(width_graph(word_of({MorseEvent::vminus(2), MorseEvent::vplus(2)})) == 0);
    CHECK(width_graph(word_of({MIN, MIN, MAX, MorseEvent::vplus(2)})) == 6);
    CHECK(width_graph(word_of({MorseEvent::vminus(4), MorseEvent::vplus(4)})) == 0);
    // On a pure link word both widths agree.
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const MorseWord word = testsupport::random_link_word(rng, 10);
        CHECK(width_graph(word) == width_link(word));
    }
}

TEST_CASE("bridge positions and bridge numbers") {
    CHECK(is_bridge_position(word_of({MIN, MIN, MAX, MAX})));
    CHECK_FALSE(is_bridge_position(word_of({MIN, MAX, MIN, MAX})));
    CHECK(is_bridge_position(
        word_of({MorseEvent::vminus(2), MIN, MAX, MorseEvent::vplus(2)})));

    CHECK(bridge_number(word_of({MIN, MIN, MAX, MAX})) == 2);
    CHECK(bridge_number(nbridge_word(6)) == 6);
    CHECK(bridge_number(word_of({MorseEvent::vminus(4), MorseEvent::vplus(4)})) == 2);
    CHECK_THROWS_AS(bridge_number(word_of({MIN, MAX, MIN, MAX})), NotBridgePosition);
    CHECK_THROWS_AS(bridge_number(MorseWord{}), NotBridgePosition);
}

TEST_CASE("n-bridge words have width 2n^2") {
    CHECK(width_link(nbridge_word(1)) == 2);
    CHECK(width_link(nbridge_word(3)) == 18);
    CHECK(width_link(nbridge_word(6)) == 72);
    for (int n = 1; n <= 32; ++n) {
        CHECK(width_link(nbridge_word(n)) == 2LL * n * n);
    }
    // A link word in bridge position is forced to be the pyramid.
    const WidthProfile profile = width_profile(nbridge_word(4));
    CHECK(profile.counts == std::vector<int>{2, 4, 6, 8, 6, 4, 2});
}

TEST_CASE("thin and thick levels are strict local extrema against 0-padded ends") {
    const LevelClasses classes =
        thin_thick_levels(WidthProfile{{2, 4, 6, 8, 6, 8, 6, 4, 2}});
    CHECK(classes.thin == std::vector<int>{4});
    CHECK(classes.thick == std::vector<int>{3, 5});

    const LevelClasses bridge = thin_thick_levels(WidthProfile{{2, 4, 2}});
    CHECK(bridge.thin.empty());
    CHECK(bridge.thick == std::vector<int>{1});

    const LevelClasses two = thin_thick_levels(WidthProfile{{2, 4, 2, 4, 2}});
    CHECK(two.thin == std::vector<int>{2});
    CHECK(two.thick == std::vector<int>{1, 3});
}

TEST_CASE("reflection preserves width") {
    CHECK(reflect(word_of({MIN, MAX})) == word_of({MIN, MAX}));
    CHECK(reflect(word_of({MIN, MIN, MAX, MIN, MAX, MAX})) ==
          word_of({MIN, MIN, MAX, MIN, MAX, MAX}));
    CHECK(reflect(word_of({MorseEvent::vminus(2), MIN, MAX, MorseEvent::vplus(2)})) ==
          word_of({MorseEvent::vminus(2), MIN, MAX, MorseEvent::vplus(2)}));

    std::mt19937 rng(23);
    for (int trial = 0; trial < 500; ++trial) {
        const MorseWord word = testsupport::random_link_word(rng, 16);
        const MorseWord mirrored = reflect(word);
        CHECK(width_link(word) == width_link(mirrored));
        CHECK(reflect(mirrored) == word);
    }
}

TEST_CASE("every prefix count is nonnegative and the total closes at zero") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const MorseWord word = testsupport::random_link_word(rng, 14);
        const std::vector<int> rc = running_counts(word);
        for (int c : rc) CHECK(c >= 0);
        CHECK(rc.back() == 0);
    }
}

TEST_CASE("two thick levels force the quadratic width bound") {
    std::mt19937 rng(41);
    int qualifying = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const MorseWord word = testsupport::random_link_word(rng, 14);
        const WidthProfile profile = width_profile(word);
        const LevelClasses classes = thin_thick_levels(profile);
        if (classes.thick.size() < 2) continue;
        ++qualifying;
        const long long n_top = profile.counts[classes.thick.back()] / 2;
        const long long n_bottom = profile.counts[classes.thick.front()] / 2;
        CHECK(width_link(word) >=
              n_top * (n_top + 1) + n_bottom * (n_bottom + 1));
    }
    CHECK(qualifying > 100);
}
