#pragma once

// Liang-style hyphenation over TeX/libhyphen pattern files, used to split a
// word into orthographic syllables.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "quip/errors.hpp"
#include "quip/text.hpp"

namespace quip {

class Hyphenator {
public:
    Hyphenator() = default;

    // Accepts the libhyphen `.dic` layout (charset line, *HYPHENMIN keyword
    // lines, one pattern per line) as well as bare `.pat` pattern lists.
    // Minimum fragment lengths default to 2/2 regardless of the file.
    static Hyphenator load(std::istream& in) {
        Hyphenator h;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::string_view v = text::trim(line);
            if (v.empty() || v.starts_with('%') || v.starts_with('#')) continue;
            if (lineno == 1 && std::ranges::any_of(v, text::is_upper)) continue;  // charset, e.g. UTF-8
            if (v.find("HYPHENMIN") != std::string_view::npos || v.starts_with("NEXTLEVEL")) continue;
            if (v.find_first_of(" \t/") != std::string_view::npos) {
                throw ParseError("unsupported hyphenation pattern '" + std::string(v) + "'", lineno);
            }
            h.add_pattern(v);
        }
        return h;
    }

    static Hyphenator load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open hyphenation patterns '" + path + "'");
        return load(in);
    }

    void add_pattern(std::string_view pat) {
        std::string letters;
        std::vector<std::uint8_t> weights(1, 0);
        for (char c : pat) {
            if (text::is_digit(c)) {
                weights.back() = static_cast<std::uint8_t>(c - '0');
            } else {
                letters += c;
                weights.push_back(0);
            }
        }
        if (letters.empty()) return;
        max_len_ = std::max(max_len_, letters.size());
        patterns_[std::move(letters)] = std::move(weights);
    }

    std::size_t pattern_count() const noexcept { return patterns_.size(); }
    void set_min_fragments(std::size_t left, std::size_t right) {
        left_min_ = left;
        right_min_ = right;
    }

    // Byte offsets inside `word` where a hyphen may be inserted.
    std::vector<std::size_t> break_points(std::string_view word) const {
        const std::string dotted = "." + text::lower(word) + ".";
        std::vector<std::uint8_t> levels(dotted.size() + 1, 0);
        for (std::size_t i = 0; i + 1 < dotted.size(); ++i) {
            for (std::size_t len = 1; len <= max_len_ && i + len <= dotted.size(); ++len) {
                auto it = patterns_.find(dotted.substr(i, len));
                if (it == patterns_.end()) continue;
                const auto& w = it->second;
                for (std::size_t k = 0; k < w.size(); ++k) levels[i + k] = std::max(levels[i + k], w[k]);
            }
        }
        std::vector<std::size_t> out;
        for (std::size_t p = 1; p < word.size(); ++p) {
            if (p < left_min_ || word.size() - p < right_min_) continue;
            if (levels[p + 1] % 2 == 1) out.push_back(p);
        }
        return out;
    }

private:
    std::unordered_map<std::string, std::vector<std::uint8_t>> patterns_;
    std::size_t max_len_ = 0;
    std::size_t left_min_ = 2;
    std::size_t right_min_ = 2;
};

namespace detail {

inline bool ortho_vowel(std::string_view w, std::size_t i) {
    char c = text::to_lower(w[i]);
    if (c == 'y') return i > 0;
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Splits before the consonant that precedes each non-initial vowel cluster,
// producing at most `pieces` fragments.
inline std::vector<std::size_t> vowel_onset_breaks(std::string_view w, std::size_t pieces) {
    std::vector<std::size_t> starts;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (ortho_vowel(w, i) && (i == 0 || !ortho_vowel(w, i - 1))) starts.push_back(i);
    }
    std::vector<std::size_t> out;
    std::size_t prev_end = 0;
    for (std::size_t c = 0; c < starts.size(); ++c) {
        std::size_t s = starts[c];
        if (c == 0) {
            prev_end = s;
            while (prev_end < w.size() && ortho_vowel(w, prev_end)) ++prev_end;
            continue;
        }
        std::size_t cut = (s > prev_end) ? s - 1 : s;
        if (cut > (out.empty() ? 0 : out.back()) && cut > 0 && cut < w.size()) out.push_back(cut);
        prev_end = s;
        while (prev_end < w.size() && ortho_vowel(w, prev_end)) ++prev_end;
        if (out.size() + 1 >= pieces) break;
    }
    return out;
}

}  // namespace detail

// Divides `word` into orthographic syllables whose concatenation is `word`.
// When the patterns leave the word whole but `spoken_syllables` says it has
// two or more, falls back to splitting at vowel-cluster onsets.
inline std::vector<std::string> syllabify(std::string_view word, const Hyphenator& hyph,
                                          std::optional<int> spoken_syllables = std::nullopt) {
    if (word.empty()) return {};
    auto breaks = hyph.break_points(word);
    if (breaks.empty() && spoken_syllables && *spoken_syllables >= 2) {
        breaks = detail::vowel_onset_breaks(word, static_cast<std::size_t>(*spoken_syllables));
    }
    std::vector<std::string> out;
    std::size_t start = 0;
    for (auto b : breaks) {
        out.emplace_back(word.substr(start, b - start));
        start = b;
    }
    out.emplace_back(word.substr(start));
    return out;
}

}  // namespace quip
