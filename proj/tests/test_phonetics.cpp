#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "support.hpp"

using namespace quip;

namespace {

const PhoneticLexicon& lexicon() { return testing::engine().lexicon(); }

std::vector<Phoneme> ph(std::string_view symbols) { return Pronunciation::from_symbols("", symbols).phonemes; }

std::vector<int> random_seq(std::mt19937_64& rng, std::size_t max_len, int alphabet) {
    std::vector<int> v(rng() % (max_len + 1));
    for (auto& x : v) x = static_cast<int>(rng() % static_cast<unsigned>(alphabet));
    return v;
}

}  // namespace

TEST_CASE("lexicon parses entries, comments and alternates") {
    std::istringstream in(";;; comment\nCAT  K AE1 T\nFLU F L UW1\nFLU(2) F L UW0\n");
    auto lex = PhoneticLexicon::load(in);
    CHECK(lex.size() == 2);
    CHECK(lex.pronounce("cat")->symbols() == "K AE1 T");
    CHECK(lex.pronounce("flu")->symbols() == "F L UW1");
}

TEST_CASE("empty stream gives an empty lexicon") {
    std::istringstream in("");
    CHECK(PhoneticLexicon::load(in).size() == 0);
}

TEST_CASE("unknown phoneme names its line") {
    std::istringstream in("CAT K AE1 T\nDOG D QQ1 G\n");
    try {
        PhoneticLexicon::load(in);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("QQ1") != std::string::npos);
    }
}

TEST_CASE("pronounce looks up normalized words") {
    auto flower = lexicon().pronounce("flower");
    REQUIRE(flower);
    CHECK(flower->symbols() == "F L AW1 ER0");
    CHECK(flower->syllable_count == 2);
    CHECK(lexicon().pronounce("Cat.")->symbols() == "K AE1 T");
    CHECK_FALSE(lexicon().pronounce("zzqx"));
    CHECK_THROWS_AS(lexicon().pronounce("..."), InvalidArgument);
    CHECK_THROWS_AS(lexicon().pronounce("two words"), InvalidArgument);
}

TEST_CASE("edit distance examples") {
    CHECK(phoneme_distance(ph("K AE1 T"), ph("K AE1 T")) == 0);
    CHECK(phoneme_distance(ph("K AE1 T"), ph("B AE1 T")) == 1);
    CHECK(edit_distance(std::string("zzyzx"), std::string("zzyzz")) == 1);
    // stress is not part of the sound
    CHECK(phoneme_distance(ph("F L UW1"), ph("F L UW0")) == 0);
}

TEST_CASE("edit distance matches the naive recursion") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 300; ++i) {
        auto a = random_seq(rng, 7, 4), b = random_seq(rng, 7, 4);
        REQUIRE(edit_distance(a, b) == testing::naive_levenshtein(a, b));
    }
}

TEST_CASE("edit distance metric properties") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        auto a = random_seq(rng, 10, 5), b = random_seq(rng, 10, 5), c = random_seq(rng, 10, 5);
        auto ab = edit_distance(a, b);
        CHECK(ab == edit_distance(b, a));
        CHECK(edit_distance(a, a) == 0);
        CHECK(ab <= std::max(a.size(), b.size()));
        CHECK(edit_distance(a, c) <= ab + edit_distance(b, c));
    }
}

TEST_CASE("rhyme examples") {
    auto stupidity = *lexicon().pronounce("stupidity");
    auto blend = Pronunciation::from_symbols("flupidity", "F L UW0 P IH1 D IH0 T IY0");
    CHECK(rhymes(stupidity, blend));
    auto cat = *lexicon().pronounce("cat");
    auto dog = *lexicon().pronounce("dog");
    CHECK_FALSE(rhymes(cat, cat));
    CHECK_FALSE(rhymes(cat, dog));
    CHECK(rhymes(cat, *lexicon().pronounce("bat")));
}

TEST_CASE("rhymes is symmetric") {
    auto words = testing::plain_lexicon_words(lexicon());
    std::mt19937_64 rng(3);
    for (int i = 0; i < 2000; ++i) {
        auto a = *lexicon().pronounce(words[rng() % words.size()]);
        auto b = *lexicon().pronounce(words[rng() % words.size()]);
        REQUIRE(rhymes(a, b) == rhymes(b, a));
    }
}

TEST_CASE("syllable count equals vowel count for every entry") {
    std::size_t bad = 0;
    lexicon().for_each([&](const Pronunciation& p) {
        auto vowels = std::count_if(p.phonemes.begin(), p.phonemes.end(), [](const Phoneme& x) { return x.is_vowel(); });
        if (vowels != p.syllable_count) ++bad;
    });
    CHECK(bad == 0);
}

TEST_CASE("phoneme symbols round trip") {
    for (auto base : detail::kArpabet) {
        auto p = Phoneme::parse(base);
        bool vowel = p && p->is_vowel();
        if (vowel) {
            for (auto d : {"0", "1", "2"}) {
                auto s = std::string(base) + d;
                REQUIRE(Phoneme::parse(s)->symbol() == s);
            }
        } else {
            REQUIRE(p);
            CHECK(p->symbol() == base);
            CHECK_FALSE(Phoneme::parse(std::string(base) + "1"));
        }
    }
}
