#include <catch_amalgamated.hpp>

#include <cctype>

#include "support.hpp"

using namespace quip;

namespace {

const Engine& eng() { return testing::engine(); }

const std::vector<std::string>& corpus() {
    static const auto lines = testing::read_lines(testing::fixture("corpus50.txt"));
    return lines;
}

struct Case {
    TopicAnalysis topic;
    PunchlineContext ctx;
};

Case prepare(const std::string& sentence) {
    auto t = eng().analyze(sentence);
    auto ctx = eng().punchline_context(t);
    return {std::move(t), std::move(ctx)};
}

PunchlineCandidate cand(PunchlineKind k, std::string text, double total) {
    PunchlineCandidate c;
    c.kind = k;
    c.text = std::move(text);
    c.score.total = total;
    return c;
}

bool plain_word(const std::string& w) {
    return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '\'' || c == '-';
    }) && std::isalpha(static_cast<unsigned char>(w.front())) && std::isalpha(static_cast<unsigned char>(w.back()));
}

// Juxtaposition by direct enumeration of both association lists.
std::optional<std::pair<std::string, double>> brute_juxtaposition(const KeywordCandidate& k1,
                                                                  const KeywordCandidate& k2,
                                                                  const PunchlineContext& ctx) {
    auto list = [&](const KeywordCandidate& k) {
        std::vector<std::string> out;
        if (k.words.size() == 1 && plain_word(k.words[0])) out.push_back(k.words[0]);
        std::vector<Association> assoc;
        if (auto i = ctx.store.find(k.surface)) {
            assoc = *ctx.store.most_similar(ctx.store.vocabulary()[*i], 50);
        } else if (auto v = ctx.store.phrase_vector(k.words)) {
            assoc = ctx.store.nearest(*v, 50);
        }
        for (const auto& a : assoc) {
            if (a.raw.find('_') == std::string::npos && plain_word(a.raw)) out.push_back(a.raw);
        }
        return out;
    };
    std::optional<std::pair<std::string, double>> best;
    for (const auto& a : list(k1)) {
        for (const auto& b : list(k2)) {
            auto na = text::normalize_word(a), nb = text::normalize_word(b);
            if (na == nb || ctx.topic_words.count(na) || ctx.topic_words.count(nb)) continue;
            double t = wordplay_score(a, b, ctx.lexicon, ctx.config).total;
            std::string txt = a + " " + b;
            if (!best || t > best->second || (t == best->second && txt < best->first)) best = {txt, t};
        }
    }
    return best;
}

std::vector<std::string> words_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

}  // namespace

TEST_CASE("flower and corpse give the juxtaposition garden carcass") {
    auto c = prepare(testing::read_lines(testing::fixture("corpus50.txt"))[0]);
    REQUIRE(c.topic.selected);
    auto j = make_juxtaposition(c.topic.selected->first, c.topic.selected->second, c.ctx);
    REQUIRE(j);
    CHECK(j->text == "garden carcass");
    auto best = select_best(make_all_candidates(c.topic.selected->first, c.topic.selected->second, c.ctx),
                            c.ctx.config);
    REQUIRE(best);
    CHECK(best->kind == PunchlineKind::juxtaposition);
    CHECK(best->text == "garden carcass");
}

TEST_CASE("Mexican and demon give the substitution Puerto Demon") {
    auto c = prepare(corpus()[1]);
    auto s = make_substitution(c.topic.selected->first, c.topic.selected->second, c.ctx);
    REQUIRE(s);
    CHECK(s->text == "Puerto Demon");
    CHECK(s->provenance.first == "demon");
    CHECK(s->provenance.second == "Rican");
    auto best = select_best(make_all_candidates(c.topic.selected->first, c.topic.selected->second, c.ctx),
                            c.ctx.config);
    REQUIRE(best);
    CHECK(best->text == "Puerto Demon");
}

TEST_CASE("virus and stupidity give the portmanteau flupidity") {
    auto c = prepare(corpus()[2]);
    auto p = make_portmanteau(c.topic.selected->first, c.topic.selected->second, c.ctx);
    REQUIRE(p);
    CHECK(p->text == "flupidity");
    CHECK(p->provenance.first == "flu");
    CHECK(p->provenance.second == "stu");
    CHECK(p->provenance.host == "stupidity");
    auto flu = eng().lexicon().pronounce("flu")->phonemes;
    auto stu = Pronunciation::from_symbols("stu", "S T UW1").phonemes;
    CHECK(phoneme_distance(flu, stu) == 2);
    auto best = select_best(make_all_candidates(c.topic.selected->first, c.topic.selected->second, c.ctx),
                            c.ctx.config);
    REQUIRE(best);
    CHECK(best->text == "flupidity");
}

TEST_CASE("portmanteau rejects identical prefixes and distant ones") {
    auto c = prepare(corpus()[2]);
    auto stupidity = WordForm::of("stupidity", eng().lexicon());
    WordForm stew{"stew", Pronunciation::from_symbols("stew", "S T UW1")};
    CHECK_FALSE(try_portmanteau(stew, stupidity, c.ctx));
    WordForm far{"mox", Pronunciation::from_symbols("mox", "M AA1 K")};
    CHECK_FALSE(try_portmanteau(far, stupidity, c.ctx));
    CHECK(try_portmanteau(WordForm::of("flu", eng().lexicon()), stupidity, c.ctx));
}

TEST_CASE("makers agree with direct enumeration over the corpus") {
    for (const auto& line : corpus()) {
        auto c = prepare(line);
        if (!c.topic.selected) continue;
        const auto& [k1, k2] = *c.topic.selected;
        auto got = make_juxtaposition(k1, k2, c.ctx);
        auto want = brute_juxtaposition(k1, k2, c.ctx);
        INFO(line);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            CHECK(got->text == want->first);
            CHECK(got->score.total == want->second);
        }

        auto check_max = [&](auto each, const std::optional<PunchlineCandidate>& chosen) {
            std::optional<PunchlineCandidate> best;
            each(k1, k2, c.ctx, [&](PunchlineCandidate p, const WordForm&, const WordForm&) {
                if (!best || p.score.total > best->score.total ||
                    (p.score.total == best->score.total && p.text < best->text)) {
                    best = p;
                }
            });
            REQUIRE(best.has_value() == chosen.has_value());
            if (best) {
                CHECK(best->text == chosen->text);
                CHECK(best->score.total == chosen->score.total);
            }
        };
        check_max([](auto&&... a) { for_each_substitution(a...); }, make_substitution(k1, k2, c.ctx));
        check_max([](auto&&... a) { for_each_portmanteau(a...); }, make_portmanteau(k1, k2, c.ctx));
    }
}

TEST_CASE("candidate invariants over the corpus") {
    std::size_t seen[3] = {0, 0, 0};
    for (const auto& line : corpus()) {
        auto c = prepare(line);
        if (!c.topic.selected) continue;
        const auto& [k1, k2] = *c.topic.selected;
        INFO(line);

        for_each_juxtaposition(k1, k2, c.ctx, [&](PunchlineCandidate p, const WordForm& a, const WordForm& b) {
            ++seen[0];
            CHECK(a.key() != b.key());
            auto w = words_of(p.text);
            REQUIRE(w.size() == 2);
            for (const auto& x : w) CHECK_FALSE(c.ctx.topic_words.count(text::normalize_word(x)));
            CHECK(p.score == wordplay_score(a, b, c.ctx.config));
        });
        for_each_substitution(k1, k2, c.ctx, [&](PunchlineCandidate p, const WordForm& a, const WordForm& b) {
            ++seen[1];
            CHECK(a.key() != b.key());
            auto out = words_of(p.text), host = words_of(p.provenance.host);
            REQUIRE(out.size() == host.size());
            std::size_t diff = 0;
            for (std::size_t i = 0; i < out.size(); ++i) diff += out[i] != host[i];
            CHECK(diff == 1);
        });
        for_each_portmanteau(k1, k2, c.ctx, [&](PunchlineCandidate p, const WordForm& a, const WordForm& b) {
            ++seen[2];
            CHECK(a.key() != b.key());
            const auto& shortw = p.provenance.first;
            const auto& longw = p.provenance.host;
            auto key = text::normalize_word(p.text);
            CHECK(key != text::normalize_word(shortw));
            CHECK(key != text::normalize_word(longw));
            CHECK(p.text.starts_with(shortw));
            CHECK(longw.ends_with(p.text.substr(shortw.size())));
            CHECK(p.provenance.second + p.text.substr(shortw.size()) == longw);
        });
    }
    CHECK(seen[0] > 0);
    CHECK(seen[1] > 0);
    CHECK(seen[2] > 0);
}

TEST_CASE("makers are deterministic") {
    for (std::size_t i = 0; i < 5; ++i) {
        auto c = prepare(corpus()[i]);
        const auto& [k1, k2] = *c.topic.selected;
        auto x = make_all_candidates(k1, k2, c.ctx);
        auto y = make_all_candidates(k1, k2, c.ctx);
        REQUIRE(x.size() == y.size());
        for (std::size_t j = 0; j < x.size(); ++j) {
            CHECK(x[j].text == y[j].text);
            CHECK(x[j].score == y[j].score);
        }
    }
}

TEST_CASE("identical keywords give no candidates") {
    auto c = prepare(corpus()[0]);
    auto k = c.topic.selected->first;
    CHECK(make_all_candidates(k, k, c.ctx).empty());
}

TEST_CASE("select_best examples") {
    WordplayConfig cfg;
    cfg.threshold = 3.5;
    std::vector<PunchlineCandidate> three = {cand(PunchlineKind::juxtaposition, "a", 4.1),
                                             cand(PunchlineKind::substitution, "b", 3.9),
                                             cand(PunchlineKind::portmanteau, "c", 5.0)};
    CHECK(select_best(three, cfg)->text == "c");
    std::vector<PunchlineCandidate> low = {cand(PunchlineKind::juxtaposition, "a", 1.0),
                                           cand(PunchlineKind::portmanteau, "c", 3.49)};
    CHECK_FALSE(select_best(low, cfg));
    CHECK_FALSE(select_best({}, cfg));

    std::vector<PunchlineCandidate> tie = {cand(PunchlineKind::portmanteau, "a", 4.0),
                                           cand(PunchlineKind::substitution, "b", 4.0),
                                           cand(PunchlineKind::juxtaposition, "z", 4.0)};
    CHECK(select_best(tie, cfg)->text == "z");
    std::vector<PunchlineCandidate> same_kind = {cand(PunchlineKind::substitution, "y", 4.0),
                                                 cand(PunchlineKind::substitution, "x", 4.0)};
    CHECK(select_best(same_kind, cfg)->text == "x");
    std::vector<PunchlineCandidate> at = {cand(PunchlineKind::juxtaposition, "a", 3.5)};
    CHECK(select_best(at, cfg));
}

TEST_CASE("selected candidates always clear the threshold") {
    for (double t : {0.0, 5.0, 9.75, 12.0, 15.0}) {
        auto e = eng().with_wordplay([&] {
            auto w = eng().config().wordplay;
            w.threshold = t;
            return w;
        }());
        for (const auto& line : corpus()) {
            auto r = e.respond(line);
            if (r.responded) REQUIRE(r.selected->score.total >= t);
        }
    }
}
