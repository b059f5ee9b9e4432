#pragma once

// Wordplay scoring for a pair of words: six phonetic subscores, each
// higher-is-better, combined by a weighted sum.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "quip/errors.hpp"
#include "quip/phonetics.hpp"
#include "quip/text.hpp"

namespace quip {

struct WordplayConfig {
    double w_edit = 5.0;
    double w_allit = 0.5;
    double w_asson = 1.5;
    double w_stop = 0.75;
    double w_end = 0.75;
    double w_syll = 3.0;
    double c_allit_bonus = 0.125;
    double c_rhyme = 5.0;
    double c_end_bonus = 1.0;
    double threshold = 9.75;
    int k_assoc = 50;
    int portmanteau_max_dist = 2;

    void validate() const {
        for (double v : {w_edit, w_allit, w_asson, w_stop, w_end, w_syll, c_allit_bonus, c_rhyme, c_end_bonus,
                         threshold}) {
            if (!std::isfinite(v)) throw ConfigError("wordplay weights and constants must be finite");
        }
        if (k_assoc < 1) throw ConfigError("wordplay.k_assoc must be >= 1");
        if (portmanteau_max_dist < 1) throw ConfigError("wordplay.portmanteau_max_dist must be >= 1");
    }
};

struct WordplayScore {
    double edit_sub = 0;
    double allit_sub = 0;
    double asson_sub = 0;
    double stop_sub = 0;
    double end_sub = 0;
    double syll_sub = 0;
    double total = 0;

    friend bool operator==(const WordplayScore&, const WordplayScore&) = default;
};

inline double weighted_total(const WordplayScore& s, const WordplayConfig& c) {
    return c.w_edit * s.edit_sub + c.w_allit * s.allit_sub + c.w_asson * s.asson_sub + c.w_stop * s.stop_sub +
           c.w_end * s.end_sub + c.w_syll * s.syll_sub;
}

// A word as the scorer sees it: its spelling and, when known, its
// pronunciation. Pronunciation-less forms only take part in the edit term.
struct WordForm {
    std::string spelling;
    std::optional<Pronunciation> pron;

    static WordForm of(std::string_view word, const PhoneticLexicon& lex) {
        WordForm f{std::string(word), std::nullopt};
        if (!text::normalize_word(word).empty() && std::ranges::none_of(word, text::is_space)) {
            if (const auto* p = lex.find(word)) f.pron = *p;
        }
        return f;
    }

    std::string key() const { return text::normalize_word(spelling); }
};

namespace detail {

inline void require_distinct(const WordForm& a, const WordForm& b) {
    if (a.key() == b.key()) throw RejectedPair("'" + a.spelling + "' and '" + b.spelling + "' are the same word");
}

inline std::size_t common_prefix(const std::vector<Phoneme>& a, const std::vector<Phoneme>& b) {
    std::size_t n = 0;
    while (n < a.size() && n < b.size() && Phoneme::same_sound(a[n], b[n])) ++n;
    return n;
}

inline std::size_t common_suffix(const std::vector<Phoneme>& a, const std::vector<Phoneme>& b) {
    std::size_t n = 0;
    while (n < a.size() && n < b.size() && Phoneme::same_sound(a[a.size() - 1 - n], b[b.size() - 1 - n])) ++n;
    return n;
}

inline double edit_similarity(const WordForm& a, const WordForm& b) {
    std::size_t d = 0, len = 0;
    if (a.pron && b.pron && !a.pron->phonemes.empty() && !b.pron->phonemes.empty()) {
        d = phoneme_distance(a.pron->phonemes, b.pron->phonemes);
        len = std::max(a.pron->phonemes.size(), b.pron->phonemes.size());
    } else {
        auto sa = text::lower(a.spelling), sb = text::lower(b.spelling);
        d = edit_distance(sa, sb);
        len = std::max(sa.size(), sb.size());
    }
    if (len == 0) return 0.0;
    return 1.0 - static_cast<double>(d) / static_cast<double>(len);
}

inline double alliteration(const WordForm& a, const WordForm& b, const WordplayConfig& c) {
    if (!a.pron || !b.pron || a.pron->phonemes.empty() || b.pron->phonemes.empty()) return 0.0;
    const auto& pa = a.pron->phonemes;
    const auto& pb = b.pron->phonemes;
    if (pa[0].is_vowel() || !Phoneme::same_sound(pa[0], pb[0])) return 0.0;
    return 1.0 + c.c_allit_bonus * static_cast<double>(common_prefix(pa, pb) - 1);
}

inline double assonance(const WordForm& a, const WordForm& b, const WordplayConfig& c) {
    if (!a.pron || !b.pron) return 0.0;
    if (rhymes(*a.pron, *b.pron)) return c.c_rhyme;
    auto collect = [](const Pronunciation& p, bool stressed_only) {
        std::set<std::uint8_t> out;
        for (const auto& ph : p.phonemes) {
            if (ph.is_vowel() && (!stressed_only || ph.is_stressed())) out.insert(ph.code());
        }
        return out;
    };
    auto sa = collect(*a.pron, true), va = collect(*a.pron, false);
    auto sb = collect(*b.pron, true), vb = collect(*b.pron, false);
    std::set<std::uint8_t> shared;
    std::ranges::set_intersection(sa, vb, std::inserter(shared, shared.end()));
    std::ranges::set_intersection(sb, va, std::inserter(shared, shared.end()));
    return static_cast<double>(shared.size());
}

inline double stop_consonants(const WordForm& a, const WordForm& b) {
    auto count = [](const WordForm& f) {
        return f.pron ? std::ranges::count_if(f.pron->phonemes, &Phoneme::is_stop) : 0;
    };
    return static_cast<double>(count(a) + count(b));
}

inline double ending(const WordForm& a, const WordForm& b, const WordplayConfig& c) {
    if (!a.pron || !b.pron || a.pron->phonemes.empty() || b.pron->phonemes.empty()) return 0.0;
    auto m = common_suffix(a.pron->phonemes, b.pron->phonemes);
    if (m == 0) return 0.0;
    return 1.0 + c.c_end_bonus * static_cast<double>(m - 1);
}

inline double syllables(const WordForm& a, const WordForm& b) {
    if (!a.pron || !b.pron) return 0.0;
    return a.pron->syllable_count == b.pron->syllable_count ? 1.0 : 0.0;
}

}  // namespace detail

inline double edit_subscore(const WordForm& a, const WordForm& b) {
    detail::require_distinct(a, b);
    return detail::edit_similarity(a, b);
}
inline double alliteration_subscore(const WordForm& a, const WordForm& b, const WordplayConfig& c) {
    return detail::alliteration(a, b, c);
}
inline double assonance_subscore(const WordForm& a, const WordForm& b, const WordplayConfig& c) {
    return detail::assonance(a, b, c);
}
inline double stop_consonant_subscore(const WordForm& a, const WordForm& b) {
    return detail::stop_consonants(a, b);
}
inline double ending_subscore(const WordForm& a, const WordForm& b, const WordplayConfig& c) {
    return detail::ending(a, b, c);
}
inline double syllable_subscore(const WordForm& a, const WordForm& b) { return detail::syllables(a, b); }

// Throws RejectedPair when the two words normalize to the same form.
inline WordplayScore wordplay_score(const WordForm& a, const WordForm& b, const WordplayConfig& c) {
    detail::require_distinct(a, b);
    WordplayScore s;
    s.edit_sub = detail::edit_similarity(a, b);
    s.allit_sub = detail::alliteration(a, b, c);
    s.asson_sub = detail::assonance(a, b, c);
    s.stop_sub = detail::stop_consonants(a, b);
    s.end_sub = detail::ending(a, b, c);
    s.syll_sub = detail::syllables(a, b);
    s.total = weighted_total(s, c);
    return s;
}

inline WordplayScore wordplay_score(std::string_view a, std::string_view b, const PhoneticLexicon& lex,
                                    const WordplayConfig& c) {
    return wordplay_score(WordForm::of(a, lex), WordForm::of(b, lex), c);
}

}  // namespace quip
