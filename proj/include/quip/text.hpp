#pragma once

// Small ASCII-oriented string helpers shared by the resource loaders and the
// pipeline. Bytes >= 0x80 are treated as opaque letters so UTF-8 input passes
// through untouched.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace quip::text {

inline bool is_alpha(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }
inline bool is_alnum(char c) noexcept { return is_alpha(c) || is_digit(c); }
inline bool is_upper(char c) noexcept { return c >= 'A' && c <= 'Z'; }
inline bool is_space(char c) noexcept {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}
inline char to_lower(char c) noexcept { return is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c; }
inline char to_upper(char c) noexcept {
    return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
}

inline std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), to_lower);
    return out;
}

inline std::string_view trim(std::string_view s) noexcept {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

inline std::string capitalize(std::string_view s) {
    std::string out(s);
    if (!out.empty()) out[0] = to_upper(out[0]);
    return out;
}

inline bool starts_with_upper(std::string_view s) noexcept { return !s.empty() && is_upper(s[0]); }

// Lowercase and strip leading/trailing characters that are not ASCII
// alphanumerics. Internal punctuation such as apostrophes survives.
inline std::string normalize_word(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && !is_alnum(s[b])) ++b;
    while (e > b && !is_alnum(s[e - 1])) --e;
    return lower(s.substr(b, e - b));
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) ++i;
        std::size_t j = i;
        while (j < s.size() && !is_space(s[j])) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline std::string collapse_spaces(std::string_view s) {
    std::string out;
    bool pending = false;
    for (char c : s) {
        if (is_space(c)) {
            pending = !out.empty();
            continue;
        }
        if (pending) out += ' ';
        pending = false;
        out += c;
    }
    return out;
}

// Copies the capitalization pattern of `model` onto `word`: all-caps stays
// all-caps, a leading capital is transferred, otherwise lowercase.
inline std::string match_case(std::string_view word, std::string_view model) {
    if (model.empty()) return std::string(word);
    bool all_upper = model.size() > 1 &&
                     std::all_of(model.begin(), model.end(), [](char c) { return !is_alpha(c) || is_upper(c); });
    std::string out = lower(word);
    if (all_upper) {
        std::transform(out.begin(), out.end(), out.begin(), to_upper);
    } else if (is_upper(model[0])) {
        out = capitalize(out);
    }
    return out;
}

// Replaces the underscore chunk separator used on disk with spaces.
inline std::string surface_of_token(std::string_view token) {
    std::string out(token);
    std::replace(out.begin(), out.end(), '_', ' ');
    return out;
}

inline std::uint64_t fnv1a(std::string_view s) noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace quip::text
