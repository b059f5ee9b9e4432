#pragma once

// Topic keyword extraction: nouns, noun phrases and capitalized named-entity
// runs from one sentence, filtered against a stopword list, then the pair of
// candidates with the least cosine similarity.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "quip/association.hpp"
#include "quip/errors.hpp"
#include "quip/text.hpp"

namespace quip {

using WordSet = std::unordered_set<std::string>;

// One lowercase word per line; blank lines and `#` comments are skipped.
inline WordSet load_word_set(std::istream& in) {
    WordSet out;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view v = line;
        if (auto h = v.find('#'); h != std::string_view::npos) v = v.substr(0, h);
        v = text::trim(v);
        if (!v.empty()) out.insert(text::lower(v));
    }
    return out;
}

inline WordSet load_word_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open word list '" + path + "'");
    return load_word_set(in);
}

struct Token {
    std::string text;
    std::size_t index = 0;
    bool after_break = false;  // punctuation separates it from the previous token
};

// Splits on whitespace and punctuation. Apostrophes between letters stay
// inside a token; a possessive 's is dropped. Bytes >= 0x80 count as letters.
inline std::vector<Token> tokenize(std::string_view sentence) {
    std::string s;
    s.reserve(sentence.size());
    for (std::size_t i = 0; i < sentence.size(); ++i) {
        if (sentence.substr(i).starts_with("\xE2\x80\x99")) {
            s += '\'';
            i += 2;
        } else {
            s += sentence[i];
        }
    }
    auto wordish = [](char c) { return text::is_alnum(c) || static_cast<unsigned char>(c) >= 0x80; };

    std::vector<Token> out;
    bool brk = false;
    std::size_t i = 0;
    while (i < s.size()) {
        if (!wordish(s[i])) {
            if (!text::is_space(s[i])) brk = true;
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < s.size() &&
               (wordish(s[j]) || (s[j] == '\'' && j + 1 < s.size() && text::is_alpha(s[j + 1]) && j > i))) {
            ++j;
        }
        std::string tok = s.substr(i, j - i);
        if (tok.size() > 2 && (tok.ends_with("'s") || tok.ends_with("'S"))) tok.resize(tok.size() - 2);
        out.push_back({std::move(tok), out.size(), brk && !out.empty()});
        brk = false;
        i = j;
    }
    return out;
}

enum class CandidateKind { noun, noun_phrase, named_entity };

inline std::string_view to_string(CandidateKind k) {
    switch (k) {
        case CandidateKind::noun: return "noun";
        case CandidateKind::noun_phrase: return "noun_phrase";
        case CandidateKind::named_entity: return "named_entity";
    }
    return "noun";
}

struct KeywordCandidate {
    std::string surface;
    std::string normalized;
    std::pair<std::size_t, std::size_t> span;  // [first, last) token indices
    CandidateKind kind = CandidateKind::noun;
    std::vector<std::string> words;  // surface tokens of the span

    friend bool operator==(const KeywordCandidate&, const KeywordCandidate&) = default;
};

struct TopicAnalysis {
    std::string sentence;
    std::vector<std::string> tokens;
    std::vector<KeywordCandidate> candidates;
    std::optional<std::pair<KeywordCandidate, KeywordCandidate>> selected;
    std::optional<double> pair_similarity;
};

namespace detail {

inline bool in_nouns(const std::string& w, const WordSet& nouns) {
    if (nouns.contains(w)) return true;
    if (w.size() > 3 && w.ends_with("ies") && nouns.contains(w.substr(0, w.size() - 3) + "y")) return true;
    if (w.size() > 3 && w.ends_with("es") && nouns.contains(w.substr(0, w.size() - 2))) return true;
    if (w.size() > 2 && w.ends_with('s') && !w.ends_with("ss") && nouns.contains(w.substr(0, w.size() - 1))) {
        return true;
    }
    return false;
}

inline KeywordCandidate make_candidate(const std::vector<Token>& toks, std::size_t b, std::size_t e,
                                       CandidateKind kind) {
    KeywordCandidate c;
    c.span = {b, e};
    c.kind = kind;
    for (std::size_t i = b; i < e; ++i) c.words.push_back(toks[i].text);
    c.surface = text::join(c.words, " ");
    c.normalized = text::lower(c.surface);
    return c;
}

inline bool capitalized(const Token& t) {
    return text::starts_with_upper(t.text) && t.text != "I";
}

}  // namespace detail

inline std::vector<KeywordCandidate> extract_candidates(std::string_view sentence, const WordSet& stopwords,
                                                        const WordSet& nouns, const EmbeddingStore& store) {
    const auto toks = tokenize(sentence);
    std::vector<KeywordCandidate> found;
    std::vector<bool> in_entity(toks.size(), false);

    // Named entities: runs of capitalized tokens with no punctuation inside.
    for (std::size_t i = 0; i < toks.size();) {
        if (!detail::capitalized(toks[i])) {
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        while (j < toks.size() && detail::capitalized(toks[j]) && !toks[j].after_break) ++j;
        std::size_t b = i, e = j;
        while (b < e && stopwords.contains(text::lower(toks[b].text))) ++b;
        while (e > b && stopwords.contains(text::lower(toks[e - 1].text))) --e;
        bool sentence_initial_word = (i == 0 && j - i == 1);
        if (b < e && !sentence_initial_word) {
            found.push_back(detail::make_candidate(toks, b, e, CandidateKind::named_entity));
            for (std::size_t k = b; k < e; ++k) in_entity[k] = true;
        }
        i = j;
    }

    // Nouns, with adjacent runs also offered as a noun phrase.
    for (std::size_t i = 0; i < toks.size();) {
        auto is_noun = [&](std::size_t k) {
            return !in_entity[k] && detail::in_nouns(text::lower(toks[k].text), nouns);
        };
        if (!is_noun(i)) {
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        while (j < toks.size() && is_noun(j) && !toks[j].after_break) ++j;
        if (j - i >= 2) found.push_back(detail::make_candidate(toks, i, j, CandidateKind::noun_phrase));
        for (std::size_t k = i; k < j; ++k) found.push_back(detail::make_candidate(toks, k, k + 1, CandidateKind::noun));
        i = j;
    }

    auto embeddable = [&](const KeywordCandidate& c) { return store.phrase_vector(c.words).has_value(); };
    auto keep = [&](const KeywordCandidate& c) { return !stopwords.contains(c.normalized) && embeddable(c); };

    std::vector<KeywordCandidate> out;
    auto add_unique = [&](KeywordCandidate c) {
        if (!keep(c)) return;
        if (std::ranges::any_of(out, [&](const auto& o) { return o.normalized == c.normalized; })) return;
        out.push_back(std::move(c));
    };
    auto by_span = [](const KeywordCandidate& a, const KeywordCandidate& b) {
        return a.span != b.span ? a.span < b.span : a.kind < b.kind;
    };
    std::ranges::stable_sort(found, by_span);
    for (auto& c : found) add_unique(std::move(c));

    if (out.size() < 2) {
        for (std::size_t i = 0; i < toks.size(); ++i) {
            if (!text::is_alpha(toks[i].text[0])) continue;
            add_unique(detail::make_candidate(toks, i, i + 1, CandidateKind::noun));
        }
        std::ranges::stable_sort(out, by_span);
    }
    return out;
}

// Least-similar candidate pair, returned in sentence order. Ties go to the
// pair with the earlier first span, then the earlier second span.
inline std::optional<std::pair<KeywordCandidate, KeywordCandidate>> select_keyword_pair(
    const std::vector<KeywordCandidate>& candidates, const EmbeddingStore& store,
    double* similarity_out = nullptr) {
    std::vector<std::pair<KeywordCandidate, EmbeddingStore::Vector>> pool;
    for (const auto& c : candidates) {
        if (auto v = store.phrase_vector(c.words)) pool.emplace_back(c, std::move(*v));
    }
    std::ranges::sort(pool, [](const auto& a, const auto& b) {
        const auto& x = a.first;
        const auto& y = b.first;
        return std::tie(x.span, x.kind, x.normalized) < std::tie(y.span, y.kind, y.normalized);
    });
    if (pool.size() < 2) return std::nullopt;

    std::size_t bi = 0, bj = 1;
    double best = 0;
    bool have = false;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            double s = EmbeddingStore::dot(pool[i].second, pool[j].second);
            if (!have || s < best) {
                best = s;
                bi = i;
                bj = j;
                have = true;
            }
        }
    }
    if (similarity_out) *similarity_out = best;
    return std::make_pair(pool[bi].first, pool[bj].first);
}

inline TopicAnalysis analyze_topic(std::string_view sentence, const WordSet& stopwords, const WordSet& nouns,
                                   const EmbeddingStore& store) {
    TopicAnalysis t;
    t.sentence = std::string(sentence);
    for (auto& tok : tokenize(sentence)) t.tokens.push_back(std::move(tok.text));
    t.candidates = extract_candidates(sentence, stopwords, nouns, store);
    double sim = 0;
    t.selected = select_keyword_pair(t.candidates, store, &sim);
    if (t.selected) t.pair_similarity = sim;
    return t;
}

}  // namespace quip
