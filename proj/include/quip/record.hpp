#pragma once

// JSON views of pipeline results, shared by the batch front end and tests.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "quip/response.hpp"

namespace quip {

using ordered_json = nlohmann::ordered_json;

inline ordered_json score_json(const WordplayScore& s) {
    ordered_json j;
    j["edit_sub"] = s.edit_sub;
    j["allit_sub"] = s.allit_sub;
    j["asson_sub"] = s.asson_sub;
    j["stop_sub"] = s.stop_sub;
    j["end_sub"] = s.end_sub;
    j["syll_sub"] = s.syll_sub;
    j["total"] = s.total;
    return j;
}

inline ordered_json candidate_json(const PunchlineCandidate& c) {
    ordered_json j;
    j["kind"] = to_string(c.kind);
    j["text"] = c.text;
    j["score_total"] = c.score.total;
    j["score"] = score_json(c.score);
    ordered_json p;
    p["first"] = c.provenance.first;
    p["second"] = c.provenance.second;
    if (!c.provenance.host.empty()) p["host"] = c.provenance.host;
    j["provenance"] = std::move(p);
    return j;
}

// One batch output record. `candidates` is only emitted in explain mode.
inline ordered_json batch_record(std::string_view input, const JokeResponse& r, bool explain) {
    ordered_json j;
    j["input"] = std::string(input);
    j["response"] = r.responded ? ordered_json(r.text) : ordered_json(nullptr);
    j["responded"] = r.responded;
    if (r.keywords) {
        j["keywords"] = ordered_json::array({r.keywords->first, r.keywords->second});
    } else {
        j["keywords"] = nullptr;
    }
    if (r.responded && r.selected) {
        ordered_json p;
        p["kind"] = to_string(r.selected->kind);
        p["text"] = r.selected->text;
        p["score_total"] = r.selected->score.total;
        j["punchline"] = std::move(p);
    } else {
        j["punchline"] = nullptr;
    }
    if (explain) {
        ordered_json cands = ordered_json::array();
        for (const auto& c : r.candidates) cands.push_back(candidate_json(c));
        j["candidates"] = std::move(cands);
    }
    return j;
}

inline ordered_json error_record(const std::string& message) {
    ordered_json j;
    j["input"] = nullptr;
    j["response"] = nullptr;
    j["responded"] = false;
    j["keywords"] = nullptr;
    j["punchline"] = nullptr;
    j["error"] = message;
    return j;
}

}  // namespace quip
