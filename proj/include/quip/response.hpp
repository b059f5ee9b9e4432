#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "quip/angle.hpp"
#include "quip/errors.hpp"
#include "quip/keywords.hpp"
#include "quip/punchline.hpp"
#include "quip/text.hpp"

namespace quip {

struct JokeResponse {
    std::string text;
    std::optional<std::pair<std::string, std::string>> keywords;
    std::string filler;
    std::string angle;
    std::string punchline;
    std::optional<PunchlineCandidate> selected;
    std::optional<AngleResult> angle_result;
    std::vector<PunchlineCandidate> candidates;
    bool responded = false;
};

class FillerWords {
public:
    FillerWords() = default;
    explicit FillerWords(std::vector<std::string> items) : items_(std::move(items)) {
        if (items_.empty()) throw ConfigError("filler word list is empty");
    }

    static FillerWords load(std::istream& in) {
        std::vector<std::string> items;
        std::string line;
        while (std::getline(in, line)) {
            auto v = text::trim(line);
            if (v.empty() || v.starts_with('#')) continue;
            items.emplace_back(v);
        }
        return FillerWords(std::move(items));
    }

    static FillerWords load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open filler words '" + path + "'");
        return load(in);
    }

    static FillerWords defaults() {
        return FillerWords({"Um", "Like", "Heh", "Yah", "Ah", "Okay", "Mmm-hmm", "Yup", "Huh", "Yep", "Yes", "Yeah"});
    }

    const std::vector<std::string>& items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }

private:
    std::vector<std::string> items_;
};

// How a keyword is echoed: named entities keep their casing, other
// candidates are echoed in lowercase (undoing sentence-initial capitals).
inline std::string echo_form(const KeywordCandidate& c) {
    return c.kind == CandidateKind::named_entity ? c.surface : c.normalized;
}

inline bool ends_with_terminal(std::string_view s) {
    return !s.empty() && (s.back() == '.' || s.back() == '!' || s.back() == '?');
}

inline JokeResponse no_response(const TopicAnalysis& topic, std::vector<PunchlineCandidate> candidates) {
    JokeResponse r;
    if (topic.selected) r.keywords = {topic.selected->first.surface, topic.selected->second.surface};
    r.candidates = std::move(candidates);
    return r;
}

// Builds "<Kw1> <kw2>? <Filler>, <angle> <punch line>." The filler is drawn
// from `rng` after the angle.
inline JokeResponse assemble(const TopicAnalysis& topic, const PunchlineCandidate& best, const AngleResult& angle,
                             const FillerWords& fillers, std::mt19937_64& rng,
                             std::vector<PunchlineCandidate> candidates = {}) {
    if (!topic.selected) throw InvalidArgument("assemble needs a selected keyword pair");
    if (fillers.size() == 0) throw ConfigError("filler word list is empty");
    const auto& [kw1, kw2] = *topic.selected;

    JokeResponse r;
    r.keywords = {kw1.surface, kw2.surface};
    r.filler = text::capitalize(fillers.items()[pick_index(rng, fillers.size())]);
    r.angle = text::collapse_spaces(angle.angle);
    r.punchline = text::collapse_spaces(best.text);
    r.selected = best;
    r.angle_result = angle;
    r.candidates = std::move(candidates);

    std::string echo = text::capitalize(echo_form(kw1)) + " " + echo_form(kw2) + "?";
    std::string body = r.filler + ", " + r.angle + " " + r.punchline;
    if (!ends_with_terminal(r.punchline)) body += ".";
    r.text = text::collapse_spaces(echo + " " + body);
    r.responded = !r.text.empty();
    return r;
}

}  // namespace quip
