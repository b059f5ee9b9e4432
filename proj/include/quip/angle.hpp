#pragma once

// The angle: text that bridges the topic sentence and the punch line. A
// remote masked-LM fill service is tried first when configured; a randomly
// chosen template is the terminal fallback.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <istream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "quip/errors.hpp"
#include "quip/text.hpp"

namespace quip {

inline constexpr std::string_view kSlot = "{P}";

struct AngleRequest {
    std::string topic;
    std::string punchline;
    int max_tokens = 12;
};

enum class AngleSource { template_list, remote };

inline std::string_view to_string(AngleSource s) { return s == AngleSource::remote ? "remote" : "template"; }

struct AngleResult {
    std::string angle;
    AngleSource source = AngleSource::template_list;
    bool fallback_used = false;
};

// Angle skeletons, each holding exactly one trailing `{P}` slot where the
// punch line goes.
class AngleTemplates {
public:
    AngleTemplates() = default;

    explicit AngleTemplates(std::vector<std::string> items) : items_(std::move(items)) {
        if (items_.empty()) throw ConfigError("angle template list is empty");
        for (auto& t : items_) {
            auto first = t.find(kSlot);
            if (first == std::string::npos || t.find(kSlot, first + 1) != std::string::npos) {
                throw ConfigError("angle template '" + t + "' must contain exactly one " + std::string(kSlot));
            }
            if (!text::trim(std::string_view(t).substr(first + kSlot.size())).empty()) {
                throw ConfigError("angle template '" + t + "' must end with " + std::string(kSlot));
            }
        }
    }

    static AngleTemplates load(std::istream& in) {
        std::vector<std::string> items;
        std::string line;
        while (std::getline(in, line)) {
            auto v = text::trim(line);
            if (v.empty() || v.starts_with('#')) continue;
            items.emplace_back(v);
        }
        return AngleTemplates(std::move(items));
    }

    static AngleTemplates load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open angle templates '" + path + "'");
        return load(in);
    }

    static AngleTemplates defaults() {
        return AngleTemplates({"or a {P}", "welcome to the {P}", "so now it's {P}", "and not because of {P}",
                               "I like the {P}", "they stole {P}", "so not {P}", "to make a {P}", "no {P}",
                               "of {P}", "but I prefer a {P}", "I have to focus on {P}"});
    }

    const std::vector<std::string>& items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }

private:
    std::vector<std::string> items_;
};

// Uniform index in [0, n) from a 64-bit engine. The reduction is written out
// so results do not depend on the standard library's distributions.
inline std::size_t pick_index(std::mt19937_64& rng, std::size_t n) {
    if (n == 0) throw ConfigError("cannot pick from an empty list");
    return static_cast<std::size_t>(rng() % n);
}

inline AngleResult template_angle(const AngleRequest& request, const AngleTemplates& templates,
                                  std::mt19937_64& rng, bool fallback_used = false) {
    if (templates.size() == 0) throw ConfigError("angle template list is empty");
    if (request.punchline.empty()) throw InvalidArgument("angle request needs a punch line");
    std::string t = templates.items()[pick_index(rng, templates.size())];
    t.erase(t.find(kSlot), kSlot.size());
    return {text::collapse_spaces(t), AngleSource::template_list, fallback_used};
}

// Outcome of one call to the remote fill service.
struct RemoteAngleReply {
    enum class Status { ok, fallback, transport_error };
    Status status = Status::transport_error;
    std::string angle;
    std::vector<std::string> tokens;
    std::string error;
};

// Request body for POST /v1/angle, fields in wire order.
inline std::string angle_request_body(const AngleRequest& r) {
    nlohmann::ordered_json j;
    j["topic"] = r.topic;
    j["punchline"] = r.punchline;
    j["max_tokens"] = r.max_tokens;
    return j.dump();
}

// Validates a reply body. Anything that is not an object with a boolean
// `fallback`, a string `angle` and an optional string-array `tokens` is a
// transport error.
inline RemoteAngleReply parse_angle_reply(std::string_view body) {
    RemoteAngleReply out;
    auto j = nlohmann::json::parse(body, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        out.error = "reply is not a JSON object";
        return out;
    }
    auto fb = j.find("fallback");
    if (fb == j.end() || !fb->is_boolean()) {
        out.error = "reply lacks boolean 'fallback'";
        return out;
    }
    if (auto t = j.find("tokens"); t != j.end()) {
        if (!t->is_array()) {
            out.error = "reply 'tokens' is not an array";
            return out;
        }
        for (const auto& tok : *t) {
            if (!tok.is_string()) {
                out.error = "reply 'tokens' holds a non-string";
                return out;
            }
            out.tokens.push_back(tok.get<std::string>());
        }
    }
    if (fb->get<bool>()) {
        out.status = RemoteAngleReply::Status::fallback;
        return out;
    }
    auto a = j.find("angle");
    if (a == j.end() || !a->is_string()) {
        out.error = "reply lacks string 'angle'";
        out.tokens.clear();
        return out;
    }
    out.status = RemoteAngleReply::Status::ok;
    out.angle = std::string(text::trim(a->get<std::string>()));
    return out;
}

class RemoteAngleClient {
public:
    // `endpoint` is a base URL such as http://127.0.0.1:8080.
    RemoteAngleClient(std::string endpoint, std::chrono::milliseconds timeout)
        : endpoint_(std::move(endpoint)), timeout_(timeout) {
        if (endpoint_.empty()) throw ConfigError("remote angle endpoint is empty");
        while (endpoint_.ends_with('/')) endpoint_.pop_back();
    }

    const std::string& endpoint() const noexcept { return endpoint_; }

    RemoteAngleReply fetch(const AngleRequest& request) const {
        RemoteAngleReply out;
        try {
            httplib::Client cli(endpoint_);
            auto secs = timeout_.count() / 1000;
            auto usecs = (timeout_.count() % 1000) * 1000;
            cli.set_connection_timeout(secs, usecs);
            cli.set_read_timeout(secs, usecs);
            cli.set_write_timeout(secs, usecs);
            auto res = cli.Post("/v1/angle", angle_request_body(request), "application/json");
            if (!res) {
                out.error = "request failed: " + httplib::to_string(res.error());
                return out;
            }
            if (res->status != 200) {
                out.error = "service answered HTTP " + std::to_string(res->status);
                return out;
            }
            return parse_angle_reply(res->body);
        } catch (const std::exception& e) {
            out.error = e.what();
            return out;
        }
    }

private:
    std::string endpoint_;
    std::chrono::milliseconds timeout_;
};

// Remote first (when given), template list otherwise or on any failure.
inline AngleResult generate_angle(const AngleRequest& request, const RemoteAngleClient* remote,
                                  const AngleTemplates& templates, std::mt19937_64& rng) {
    if (!remote) return template_angle(request, templates, rng, false);
    auto reply = remote->fetch(request);
    if (reply.status == RemoteAngleReply::Status::ok &&
        text::lower(reply.angle).find(text::lower(request.punchline)) == std::string::npos) {
        return {text::collapse_spaces(reply.angle), AngleSource::remote, false};
    }
    return template_angle(request, templates, rng, true);
}

}  // namespace quip
