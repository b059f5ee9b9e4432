#include <catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace quip;
using Catch::Approx;

namespace {

const Engine& eng() { return testing::engine(); }

std::vector<std::string> normalized(const std::vector<KeywordCandidate>& cs) {
    std::vector<std::string> out;
    for (const auto& c : cs) out.push_back(c.normalized);
    return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

// Exhaustive scan: least similarity, ties to the smallest (first span, second span).
std::pair<std::size_t, std::size_t> exhaustive_pair(const std::vector<KeywordCandidate>& cs, const EmbeddingStore& s,
                                                    double& best) {
    std::optional<std::pair<std::size_t, std::size_t>> arg;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = 0; j < cs.size(); ++j) {
            if (i == j || !(cs[i].span < cs[j].span)) continue;
            auto vi = *s.phrase_vector(cs[i].words), vj = *s.phrase_vector(cs[j].words);
            double d = 0;
            for (std::size_t k = 0; k < vi.size(); ++k) d += double(vi[k]) * double(vj[k]);
            bool better = !arg || d < best ||
                          (d == best && std::pair(cs[i].span, cs[j].span) <
                                            std::pair(cs[arg->first].span, cs[arg->second].span));
            if (better) {
                best = d;
                arg = {i, j};
            }
        }
    }
    return *arg;
}

}  // namespace

TEST_CASE("tokenizer keeps internal apostrophes and drops possessives") {
    auto toks = tokenize("America's forests, don't they\xE2\x80\x99re fine?");
    std::vector<std::string> words;
    for (auto& t : toks) words.push_back(t.text);
    CHECK(words == std::vector<std::string>{"America", "forests", "don't", "they're", "fine"});
    CHECK(toks[2].after_break);
}

TEST_CASE("reference sentences yield their topic keywords") {
    auto a = eng().analyze("I just read that some flower that smells like a corpse is about to bloom.");
    CHECK(contains(normalized(a.candidates), "flower"));
    CHECK(contains(normalized(a.candidates), "corpse"));
    REQUIRE(a.selected);
    CHECK(a.selected->first.surface == "flower");
    CHECK(a.selected->second.surface == "corpse");

    auto b = eng().analyze("People are trying to summon a Mexican demon by getting him to spin a pencil.");
    REQUIRE(b.selected);
    CHECK(b.selected->first.surface == "Mexican");
    CHECK(b.selected->second.surface == "demon");

    auto c = eng().analyze("Researchers at Johns Hopkins have discovered a virus that causes stupidity.");
    auto jh = std::find_if(c.candidates.begin(), c.candidates.end(),
                           [](const KeywordCandidate& k) { return k.surface == "Johns Hopkins"; });
    REQUIRE(jh != c.candidates.end());
    CHECK(jh->kind == CandidateKind::named_entity);
    CHECK(jh->words.size() == 2);
    REQUIRE(c.selected);
    CHECK(c.selected->first.surface == "virus");
    CHECK(c.selected->second.surface == "stupidity");
}

TEST_CASE("stopwords never become candidates") {
    auto a = eng().analyze("The official told the person to come back tonight with the flower.");
    for (const auto& c : a.candidates) {
        CHECK_FALSE(eng().stopwords().contains(c.normalized));
        for (const auto& w : c.words) CHECK(text::lower(w) != "official");
    }
    auto n = normalized(a.candidates);
    CHECK_FALSE(contains(n, "official"));
    CHECK_FALSE(contains(n, "person"));
    CHECK_FALSE(contains(n, "tonight"));
}

TEST_CASE("candidates over the corpus exclude stopwords") {
    for (const auto& line : testing::read_lines(testing::fixture("corpus50.txt"))) {
        for (const auto& c : eng().analyze(line).candidates) REQUIRE_FALSE(eng().stopwords().contains(c.normalized));
    }
}

TEST_CASE("fewer than two candidates selects nothing") {
    std::vector<KeywordCandidate> one = {testing::noun("flower", 0)};
    CHECK_FALSE(select_keyword_pair(one, eng().store()));
    CHECK_FALSE(select_keyword_pair({}, eng().store()));
    CHECK_FALSE(eng().analyze("Hello there.").selected);
}

TEST_CASE("selection equals exhaustive minimisation and ignores input order") {
    const auto& s = eng().store();
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 200; ++round) {
        std::size_t n = 2 + rng() % 9;
        std::vector<KeywordCandidate> cs;
        std::set<std::string> used;
        while (cs.size() < n) {
            auto tok = s.vocabulary()[rng() % s.size()];
            if (tok.find('_') != std::string::npos || !used.insert(text::lower(tok)).second) continue;
            cs.push_back(testing::noun(tok, cs.size() * 2));
        }
        double want_sim = 0;
        auto [i, j] = exhaustive_pair(cs, s, want_sim);
        double got_sim = 0;
        auto got = select_keyword_pair(cs, s, &got_sim);
        REQUIRE(got);
        REQUIRE(got->first == cs[i]);
        REQUIRE(got->second == cs[j]);
        REQUIRE(got_sim == Approx(want_sim).margin(1e-12));

        auto shuffled = cs;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        auto again = select_keyword_pair(shuffled, s);
        REQUIRE(again->first == got->first);
        REQUIRE(again->second == got->second);
    }
}

TEST_CASE("equal similarities select the earliest pair") {
    auto s = EmbeddingStore::from_rows(3, {{"a", {1, 0, 0}}, {"b", {0, 1, 0}}, {"c", {0, 0, 1}}});
    std::vector<KeywordCandidate> cs = {testing::noun("c", 4), testing::noun("a", 0), testing::noun("b", 2)};
    auto got = select_keyword_pair(cs, s);
    REQUIRE(got);
    CHECK(got->first.surface == "a");
    CHECK(got->second.surface == "b");
}

TEST_CASE("noun fallback uses every embeddable token") {
    WordSet stop = {"the", "a"};
    WordSet nouns;
    auto cs = extract_candidates("the flower ate a corpse", stop, nouns, eng().store());
    auto n = normalized(cs);
    CHECK(contains(n, "flower"));
    CHECK(contains(n, "corpse"));
    for (const auto& c : cs) CHECK_FALSE(stop.contains(c.normalized));
}

TEST_CASE("adjacent nouns also form a noun phrase") {
    WordSet stop;
    WordSet nouns = {"garden", "corpse"};
    auto cs = extract_candidates("garden corpse", stop, nouns, eng().store());
    auto n = normalized(cs);
    CHECK(contains(n, "garden corpse"));
    CHECK(contains(n, "garden"));
    CHECK(contains(n, "corpse"));
}
