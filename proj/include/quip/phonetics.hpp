#pragma once

// ARPAbet pronunciations from a CMU-style pronouncing dictionary, plus the
// phoneme-level primitives the wordplay scorer is built on.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <iterator>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "quip/errors.hpp"
#include "quip/text.hpp"

namespace quip {

enum class Stress : std::uint8_t { none, unstressed, primary, secondary };

namespace detail {

inline constexpr std::array<std::string_view, 39> kArpabet = {
    "AA", "AE", "AH", "AO", "AW", "AY", "EH", "ER", "EY", "IH", "IY", "OW", "OY", "UH", "UW",
    "B",  "CH", "D",  "DH", "F",  "G",  "HH", "JH", "K",  "L",  "M",  "N",  "NG", "P",  "R",
    "S",  "SH", "T",  "TH", "V",  "W",  "Y",  "Z",  "ZH"};

inline constexpr std::uint8_t kVowelCount = 15;

}  // namespace detail

class Phoneme {
public:
    Phoneme() = default;

    // Parses one ARPAbet token such as "K", "AE1" or "ER0". A vowel written
    // without a digit is read as unstressed.
    static std::optional<Phoneme> parse(std::string_view symbol) {
        Stress stress = Stress::none;
        if (!symbol.empty() && text::is_digit(symbol.back())) {
            switch (symbol.back()) {
                case '0': stress = Stress::unstressed; break;
                case '1': stress = Stress::primary; break;
                case '2': stress = Stress::secondary; break;
                default: return std::nullopt;
            }
            symbol.remove_suffix(1);
        }
        for (std::size_t i = 0; i < detail::kArpabet.size(); ++i) {
            if (detail::kArpabet[i] != symbol) continue;
            bool vowel = i < detail::kVowelCount;
            if (!vowel && stress != Stress::none) return std::nullopt;
            if (vowel && stress == Stress::none) stress = Stress::unstressed;
            return Phoneme(static_cast<std::uint8_t>(i), stress);
        }
        return std::nullopt;
    }

    std::string_view base() const noexcept { return detail::kArpabet[code_]; }
    std::uint8_t code() const noexcept { return code_; }
    Stress stress() const noexcept { return stress_; }
    bool is_vowel() const noexcept { return code_ < detail::kVowelCount; }
    bool is_stressed() const noexcept { return stress_ == Stress::primary || stress_ == Stress::secondary; }
    bool is_stop() const noexcept {
        auto b = base();
        return b == "B" || b == "D" || b == "G" || b == "K" || b == "P" || b == "T";
    }

    std::string symbol() const {
        std::string s(base());
        switch (stress_) {
            case Stress::unstressed: s += '0'; break;
            case Stress::primary: s += '1'; break;
            case Stress::secondary: s += '2'; break;
            case Stress::none: break;
        }
        return s;
    }

    friend bool operator==(const Phoneme&, const Phoneme&) = default;

    // Equality on the base symbol, ignoring the stress digit.
    static bool same_sound(const Phoneme& a, const Phoneme& b) noexcept { return a.code_ == b.code_; }

private:
    Phoneme(std::uint8_t code, Stress stress) : code_(code), stress_(stress) {}

    std::uint8_t code_ = 0;
    Stress stress_ = Stress::unstressed;
};

struct SameSound {
    bool operator()(const Phoneme& a, const Phoneme& b) const noexcept { return Phoneme::same_sound(a, b); }
};

struct Pronunciation {
    std::string word;
    std::vector<Phoneme> phonemes;
    int syllable_count = 0;

    Pronunciation() = default;
    Pronunciation(std::string w, std::vector<Phoneme> ph)
        : word(std::move(w)), phonemes(std::move(ph)),
          syllable_count(static_cast<int>(std::ranges::count_if(phonemes, &Phoneme::is_vowel))) {}

    // Parses a space-separated phoneme string; throws ParseError on unknown symbols.
    static Pronunciation from_symbols(std::string word, std::string_view symbols) {
        std::vector<Phoneme> ph;
        for (auto tok : text::split_ws(symbols)) {
            auto p = Phoneme::parse(tok);
            if (!p) throw ParseError("unknown phoneme symbol '" + std::string(tok) + "'");
            ph.push_back(*p);
        }
        return Pronunciation(std::move(word), std::move(ph));
    }

    std::string symbols() const {
        std::string out;
        for (const auto& p : phonemes) {
            if (!out.empty()) out += ' ';
            out += p.symbol();
        }
        return out;
    }
};

// Classical Levenshtein distance with unit costs over any two ranges whose
// elements are comparable with `eq`. Two-row dynamic program.
template <std::ranges::forward_range A, std::ranges::forward_range B, class Eq = std::equal_to<>>
std::size_t edit_distance(const A& a, const B& b, Eq eq = {}) {
    const auto n = static_cast<std::size_t>(std::ranges::distance(b));
    std::vector<std::size_t> prev(n + 1), cur(n + 1);
    for (std::size_t j = 0; j <= n; ++j) prev[j] = j;
    std::size_t i = 0;
    for (const auto& x : a) {
        ++i;
        cur[0] = i;
        std::size_t j = 0;
        for (const auto& y : b) {
            ++j;
            std::size_t sub = prev[j - 1] + (eq(x, y) ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

inline std::size_t phoneme_distance(const std::vector<Phoneme>& a, const std::vector<Phoneme>& b) {
    return edit_distance(a, b, SameSound{});
}

// Index of the rhyme anchor: the last primary-stressed vowel, or the last
// vowel of any stress when the word has no primary stress.
inline std::optional<std::size_t> rhyme_anchor(const std::vector<Phoneme>& ph) {
    std::optional<std::size_t> any;
    for (std::size_t i = ph.size(); i-- > 0;) {
        if (!ph[i].is_vowel()) continue;
        if (ph[i].stress() == Stress::primary) return i;
        if (!any) any = i;
    }
    return any;
}

inline bool rhymes(const Pronunciation& a, const Pronunciation& b) {
    if (a.phonemes.empty() || b.phonemes.empty()) return false;
    if (text::normalize_word(a.word) == text::normalize_word(b.word)) return false;
    auto ia = rhyme_anchor(a.phonemes);
    auto ib = rhyme_anchor(b.phonemes);
    if (!ia || !ib) return false;
    std::span<const Phoneme> ta(a.phonemes.begin() + static_cast<std::ptrdiff_t>(*ia), a.phonemes.end());
    std::span<const Phoneme> tb(b.phonemes.begin() + static_cast<std::ptrdiff_t>(*ib), b.phonemes.end());
    return std::ranges::equal(ta, tb, SameSound{});
}

class PhoneticLexicon {
public:
    PhoneticLexicon() = default;

    // Reads the CMU pronouncing dictionary layout: `WORD  PH1 PH2 ...`,
    // `;;;` comment lines, `WORD(2)` alternates and optional trailing
    // `# comment`. Only the first pronunciation of each word is kept.
    static PhoneticLexicon load(std::istream& in) {
        PhoneticLexicon lex;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::string_view v = line;
            if (v.starts_with(";;;")) continue;
            if (auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
            v = text::trim(v);
            if (v.empty()) continue;

            std::size_t sp = 0;
            while (sp < v.size() && !text::is_space(v[sp])) ++sp;
            std::string_view head = v.substr(0, sp);
            std::string_view rest = v.substr(sp);
            if (head.ends_with(')')) {
                auto open = head.rfind('(');
                if (open != std::string_view::npos && open > 0) head = head.substr(0, open);
            }
            std::string word = text::lower(head);

            std::vector<Phoneme> ph;
            for (auto tok : text::split_ws(rest)) {
                auto p = Phoneme::parse(tok);
                if (!p) throw ParseError("unknown phoneme symbol '" + std::string(tok) + "'", lineno);
                ph.push_back(*p);
            }
            if (ph.empty()) throw ParseError("entry '" + std::string(head) + "' has no phonemes", lineno);
            if (lex.entries_.contains(word)) continue;
            auto key = word;
            lex.entries_.emplace(std::move(key), Pronunciation(std::move(word), std::move(ph)));
        }
        return lex;
    }

    static PhoneticLexicon load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open pronunciation dictionary '" + path + "'");
        return load(in);
    }

    // Looks up the primary pronunciation. Throws InvalidArgument for input
    // that is empty after normalization or contains whitespace.
    std::optional<Pronunciation> pronounce(std::string_view word) const {
        const Pronunciation* p = find(word);
        if (!p) return std::nullopt;
        return *p;
    }

    // Non-copying variant of pronounce().
    const Pronunciation* find(std::string_view word) const {
        if (std::ranges::any_of(word, text::is_space)) {
            throw InvalidArgument("multi-word input '" + std::string(word) + "' cannot be pronounced as one word");
        }
        auto key = text::normalize_word(word);
        if (key.empty()) throw InvalidArgument("word is empty after normalization");
        auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second;
    }

    bool contains(std::string_view word) const {
        auto key = text::normalize_word(word);
        return !key.empty() && entries_.contains(key);
    }

    std::size_t size() const noexcept { return entries_.size(); }

    template <class F>
    void for_each(F&& f) const {
        for (const auto& [_, p] : entries_) f(p);
    }

private:
    std::unordered_map<std::string, Pronunciation> entries_;
};

}  // namespace quip
