#pragma once

// Punch-line construction from a keyword pair: juxtaposition, substitution
// and portmanteau candidates, each carrying the wordplay score of the words
// it links, plus best-candidate selection under the quality threshold.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "quip/association.hpp"
#include "quip/hyphenation.hpp"
#include "quip/keywords.hpp"
#include "quip/phonetics.hpp"
#include "quip/text.hpp"
#include "quip/wordplay.hpp"

namespace quip {

enum class PunchlineKind { juxtaposition, substitution, portmanteau };

inline std::string_view to_string(PunchlineKind k) {
    switch (k) {
        case PunchlineKind::juxtaposition: return "juxtaposition";
        case PunchlineKind::substitution: return "substitution";
        case PunchlineKind::portmanteau: return "portmanteau";
    }
    return "juxtaposition";
}

struct Provenance {
    std::string first;   // word taken from the first list / the substituted-in word / the short word
    std::string second;  // its partner / the replaced chunk member / the replaced syllables
    std::string host;    // host chunk (substitution) or long word (portmanteau)
};

struct PunchlineCandidate {
    PunchlineKind kind = PunchlineKind::juxtaposition;
    std::string text;
    WordplayScore score;
    Provenance provenance;
};

// Everything a punch-line maker reads. All references must outlive the call.
struct PunchlineContext {
    const EmbeddingStore& store;
    const PhoneticLexicon& lexicon;
    const Hyphenator& hyphenator;
    const WordplayConfig& config;
    std::unordered_set<std::string> topic_words;  // normalized sentence tokens
};

inline std::unordered_set<std::string> topic_word_set(const std::vector<std::string>& tokens) {
    std::unordered_set<std::string> out;
    for (const auto& t : tokens) {
        auto n = text::normalize_word(t);
        if (!n.empty()) out.insert(std::move(n));
    }
    return out;
}

namespace detail {

// Plain alphabetic word, optionally with internal apostrophes or hyphens.
inline bool wordlike(std::string_view w) {
    if (w.empty() || !text::is_alpha(w.front()) || !text::is_alpha(w.back())) return false;
    return std::ranges::all_of(w, [](char c) { return text::is_alpha(c) || c == '\'' || c == '-'; });
}

inline std::vector<Association> associations_of(const KeywordCandidate& kw, const PunchlineContext& ctx) {
    auto k = static_cast<std::size_t>(ctx.config.k_assoc);
    if (auto idx = ctx.store.find(kw.surface)) {
        return *ctx.store.most_similar(ctx.store.vocabulary()[*idx], k);
    }
    if (auto v = ctx.store.phrase_vector(kw.words)) return ctx.store.nearest(*v, k);
    return {};
}

// Words that stand for a keyword when pairing: the word itself, or the
// members of a multi-word keyword.
inline std::vector<std::string> pairing_words(const KeywordCandidate& kw) {
    std::vector<std::string> out;
    for (const auto& w : kw.words) {
        if (wordlike(w)) out.push_back(w);
    }
    return out;
}

inline std::vector<std::string> single_word_list(const KeywordCandidate& kw, const std::vector<Association>& assoc) {
    std::vector<std::string> out;
    if (kw.words.size() == 1 && wordlike(kw.words[0])) out.push_back(kw.words[0]);
    for (const auto& a : assoc) {
        if (!a.is_chunk && wordlike(a.raw)) out.push_back(a.raw);
    }
    return out;
}

inline std::vector<std::string> split_chunk(std::string_view raw) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto p = raw.find('_', start);
        out.emplace_back(raw.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
        if (p == std::string_view::npos) break;
        start = p + 1;
    }
    return out;
}

struct Best {
    std::optional<PunchlineCandidate> cand;
    void offer(PunchlineCandidate c) {
        if (!cand || c.score.total > cand->score.total ||
            (c.score.total == cand->score.total && c.text < cand->text)) {
            cand = std::move(c);
        }
    }
};

}  // namespace detail

// The enumerators below call fn(candidate, a, b) for every scored pairing,
// where a and b are the two word forms whose wordplay score the candidate
// carries. The make_* functions keep the best of each enumeration.

template <class Fn>
void for_each_juxtaposition(const KeywordCandidate& kw1, const KeywordCandidate& kw2, const PunchlineContext& ctx,
                            Fn&& fn) {
    auto list_a = detail::single_word_list(kw1, detail::associations_of(kw1, ctx));
    auto list_b = detail::single_word_list(kw2, detail::associations_of(kw2, ctx));

    std::vector<WordForm> forms_b;
    forms_b.reserve(list_b.size());
    for (const auto& b : list_b) forms_b.push_back(WordForm::of(b, ctx.lexicon));

    for (const auto& a : list_a) {
        auto fa = WordForm::of(a, ctx.lexicon);
        auto ka = fa.key();
        if (ctx.topic_words.contains(ka)) continue;
        for (const auto& fb : forms_b) {
            auto kb = fb.key();
            if (ka == kb || ctx.topic_words.contains(kb)) continue;
            auto score = wordplay_score(fa, fb, ctx.config);
            fn(PunchlineCandidate{PunchlineKind::juxtaposition, a + " " + fb.spelling, score, {a, fb.spelling, {}}},
               fa, fb);
        }
    }
}

template <class Fn>
void for_each_substitution(const KeywordCandidate& kw1, const KeywordCandidate& kw2, const PunchlineContext& ctx,
                           Fn&& fn) {
    auto one_direction = [&](const KeywordCandidate& kw, const KeywordCandidate& other) {
        auto words = detail::pairing_words(kw);
        if (words.empty()) return;
        for (const auto& assoc : detail::associations_of(other, ctx)) {
            if (!assoc.is_chunk) continue;
            auto members = detail::split_chunk(assoc.raw);
            for (const auto& w : words) {
                auto fw = WordForm::of(w, ctx.lexicon);
                auto kw_key = fw.key();
                if (std::ranges::any_of(members, [&](const auto& m) { return text::normalize_word(m) == kw_key; })) {
                    continue;
                }
                for (std::size_t i = 0; i < members.size(); ++i) {
                    if (!detail::wordlike(members[i])) continue;
                    auto fm = WordForm::of(members[i], ctx.lexicon);
                    auto score = wordplay_score(fw, fm, ctx.config);
                    auto replaced = members;
                    replaced[i] = text::match_case(w, members[i]);
                    fn(PunchlineCandidate{PunchlineKind::substitution, text::join(replaced, " "), score,
                                          {w, members[i], assoc.token}},
                       fw, fm);
                }
            }
        }
    };
    one_direction(kw1, kw2);
    one_direction(kw2, kw1);
}

namespace detail {

struct Blend {
    std::string text;
    WordForm replaced;  // the leading syllables of the long word, with the phonemes they cover
};

// Blends `short_word` into the start of `long_word` when the short word
// sounds like, but not exactly like, the leading phonemes of the long word.
inline std::optional<Blend> blend(const WordForm& short_word, const WordForm& long_word,
                                  const PunchlineContext& ctx) {
    if (!short_word.pron || !long_word.pron) return std::nullopt;
    const auto& ps = short_word.pron->phonemes;
    const auto& pl = long_word.pron->phonemes;
    const int s = short_word.pron->syllable_count;
    if (s < 1 || s >= long_word.pron->syllable_count || ps.size() >= pl.size()) return std::nullopt;

    std::vector<Phoneme> prefix(pl.begin(), pl.begin() + static_cast<std::ptrdiff_t>(ps.size()));
    auto d = phoneme_distance(ps, prefix);
    if (d == 0 || d > static_cast<std::size_t>(ctx.config.portmanteau_max_dist)) return std::nullopt;

    auto pieces = syllabify(long_word.spelling, ctx.hyphenator, long_word.pron->syllable_count);
    if (pieces.size() <= static_cast<std::size_t>(s)) return std::nullopt;
    std::string removed, rest;
    for (std::size_t i = 0; i < pieces.size(); ++i) (i < static_cast<std::size_t>(s) ? removed : rest) += pieces[i];

    std::string text = short_word.spelling + rest;
    auto bkey = text::normalize_word(text);
    if (bkey == short_word.key() || bkey == long_word.key()) return std::nullopt;

    WordForm replaced{removed, Pronunciation(removed, std::move(prefix))};
    if (replaced.key() == short_word.key()) return std::nullopt;
    return Blend{std::move(text), std::move(replaced)};
}

}  // namespace detail

inline std::optional<PunchlineCandidate> try_portmanteau(const WordForm& short_word, const WordForm& long_word,
                                                         const PunchlineContext& ctx) {
    auto b = detail::blend(short_word, long_word, ctx);
    if (!b) return std::nullopt;
    auto score = wordplay_score(short_word, b->replaced, ctx.config);
    return PunchlineCandidate{PunchlineKind::portmanteau, b->text, score,
                              {short_word.spelling, b->replaced.spelling, long_word.spelling}};
}

template <class Fn>
void for_each_portmanteau(const KeywordCandidate& kw1, const KeywordCandidate& kw2, const PunchlineContext& ctx,
                          Fn&& fn) {
    auto attempt = [&](const WordForm& s, const WordForm& l) {
        auto b = detail::blend(s, l, ctx);
        if (!b) return;
        auto score = wordplay_score(s, b->replaced, ctx.config);
        fn(PunchlineCandidate{PunchlineKind::portmanteau, b->text, score, {s.spelling, b->replaced.spelling, l.spelling}},
           s, b->replaced);
    };
    auto one_direction = [&](const KeywordCandidate& kw, const KeywordCandidate& other) {
        auto sources = detail::pairing_words(kw);
        for (const auto& a : detail::associations_of(kw, ctx)) {
            if (!a.is_chunk && detail::wordlike(a.raw)) sources.push_back(a.raw);
        }
        for (const auto& target : detail::pairing_words(other)) {
            auto ft = WordForm::of(target, ctx.lexicon);
            for (const auto& src : sources) {
                auto fs = WordForm::of(src, ctx.lexicon);
                if (fs.key() == ft.key()) continue;
                attempt(fs, ft);
                attempt(ft, fs);
            }
        }
    };
    one_direction(kw1, kw2);
    one_direction(kw2, kw1);
}

inline std::optional<PunchlineCandidate> make_juxtaposition(const KeywordCandidate& kw1, const KeywordCandidate& kw2,
                                                            const PunchlineContext& ctx) {
    detail::Best best;
    for_each_juxtaposition(kw1, kw2, ctx, [&](PunchlineCandidate c, const WordForm&, const WordForm&) {
        best.offer(std::move(c));
    });
    return best.cand;
}

inline std::optional<PunchlineCandidate> make_substitution(const KeywordCandidate& kw1, const KeywordCandidate& kw2,
                                                           const PunchlineContext& ctx) {
    detail::Best best;
    for_each_substitution(kw1, kw2, ctx, [&](PunchlineCandidate c, const WordForm&, const WordForm&) {
        best.offer(std::move(c));
    });
    return best.cand;
}

inline std::optional<PunchlineCandidate> make_portmanteau(const KeywordCandidate& kw1, const KeywordCandidate& kw2,
                                                          const PunchlineContext& ctx) {
    detail::Best best;
    for_each_portmanteau(kw1, kw2, ctx, [&](PunchlineCandidate c, const WordForm&, const WordForm&) {
        best.offer(std::move(c));
    });
    return best.cand;
}

inline int kind_rank(PunchlineKind k) {
    switch (k) {
        case PunchlineKind::juxtaposition: return 0;
        case PunchlineKind::substitution: return 1;
        case PunchlineKind::portmanteau: return 2;
    }
    return 3;
}

// Highest total at or above the threshold; ties go to juxtaposition, then
// substitution, then portmanteau, then the lexicographically smaller text.
inline std::optional<PunchlineCandidate> select_best(const std::vector<PunchlineCandidate>& candidates,
                                                     const WordplayConfig& config) {
    const PunchlineCandidate* best = nullptr;
    for (const auto& c : candidates) {
        if (!(c.score.total >= config.threshold)) continue;
        if (!best) {
            best = &c;
            continue;
        }
        if (c.score.total != best->score.total) {
            if (c.score.total > best->score.total) best = &c;
        } else if (kind_rank(c.kind) != kind_rank(best->kind)) {
            if (kind_rank(c.kind) < kind_rank(best->kind)) best = &c;
        } else if (c.text < best->text) {
            best = &c;
        }
    }
    if (!best) return std::nullopt;
    return *best;
}

inline std::vector<PunchlineCandidate> make_all_candidates(const KeywordCandidate& kw1, const KeywordCandidate& kw2,
                                                           const PunchlineContext& ctx) {
    std::vector<PunchlineCandidate> out;
    if (kw1.normalized == kw2.normalized) return out;
    if (auto c = make_juxtaposition(kw1, kw2, ctx)) out.push_back(std::move(*c));
    if (auto c = make_substitution(kw1, kw2, ctx)) out.push_back(std::move(*c));
    if (auto c = make_portmanteau(kw1, kw2, ctx)) out.push_back(std::move(*c));
    return out;
}

}  // namespace quip
