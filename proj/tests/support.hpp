#pragma once

// Shared fixtures and independent oracles for the test binaries.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quip/quip.hpp"

namespace testing {

inline std::string resource(const std::string& name) { return std::string(QUIP_RESOURCES_DIR) + "/" + name; }
inline std::string fixture(const std::string& name) { return std::string(QUIP_FIXTURES_DIR) + "/" + name; }

inline quip::EngineConfig default_config() { return quip::load_config_file(QUIP_TEST_CONFIG); }

// Built once per test binary.
inline const quip::Engine& engine() {
    static const quip::Engine e = quip::Engine::build(default_config());
    return e;
}

inline std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

// Plain exponential recursion, no memoisation.
template <class T>
std::size_t naive_levenshtein(const std::vector<T>& a, std::size_t i, const std::vector<T>& b, std::size_t j) {
    if (i == a.size()) return b.size() - j;
    if (j == b.size()) return a.size() - i;
    std::size_t sub = naive_levenshtein(a, i + 1, b, j + 1) + (a[i] == b[j] ? 0 : 1);
    std::size_t del = naive_levenshtein(a, i + 1, b, j) + 1;
    std::size_t ins = naive_levenshtein(a, i, b, j + 1) + 1;
    return std::min({sub, del, ins});
}

template <class T>
std::size_t naive_levenshtein(const std::vector<T>& a, const std::vector<T>& b) {
    return naive_levenshtein(a, 0, b, 0);
}

// Full scan, full sort: descending similarity, ascending vocabulary index.
inline std::vector<std::pair<std::string, double>> brute_force_neighbours(const quip::EmbeddingStore& s,
                                                                          std::size_t query, std::size_t k) {
    std::vector<std::pair<double, std::size_t>> all;
    auto q = s.vector(query);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == query) continue;
        auto v = s.vector(i);
        double d = 0;
        for (std::size_t t = 0; t < v.size(); ++t) d += double(q[t]) * double(v[t]);
        all.emplace_back(d, i);
    }
    std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return x.second < y.second;
    });
    std::vector<std::pair<std::string, double>> out;
    for (std::size_t i = 0; i < std::min(k, all.size()); ++i) out.emplace_back(s.vocabulary()[all[i].second], all[i].first);
    return out;
}

// Every in-lexicon word made of lowercase letters only, sorted.
inline std::vector<std::string> plain_lexicon_words(const quip::PhoneticLexicon& lex) {
    std::vector<std::string> out;
    lex.for_each([&](const quip::Pronunciation& p) {
        if (!p.word.empty() && std::all_of(p.word.begin(), p.word.end(), [](char c) { return c >= 'a' && c <= 'z'; })) {
            out.push_back(p.word);
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline quip::KeywordCandidate noun(const std::string& w, std::size_t pos) {
    return {w, quip::text::lower(w), {pos, pos + 1}, quip::CandidateKind::noun, {w}};
}

inline quip::TopicAnalysis topic_with(const std::string& sentence, quip::KeywordCandidate a, quip::KeywordCandidate b) {
    quip::TopicAnalysis t;
    t.sentence = sentence;
    t.selected = std::make_pair(std::move(a), std::move(b));
    return t;
}

}  // namespace testing
