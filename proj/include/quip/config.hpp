#pragma once

// Engine configuration and its on-disk form: a TOML subset of `[section]`
// headers and `key = value` lines (quoted strings, numbers, booleans).

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "quip/errors.hpp"
#include "quip/text.hpp"
#include "quip/wordplay.hpp"

namespace quip {

struct ResourcePaths {
    std::string lexicon;
    std::string embeddings;
    std::string embeddings_format = "auto";  // auto | text | binary
    std::string stopwords;
    std::string nouns;
    std::string fillers;
    std::string templates;
    std::string hyphenation;
};

enum class AngleProvider { template_list, remote };

struct AngleConfig {
    AngleProvider provider = AngleProvider::template_list;
    std::string endpoint;
    int timeout_ms = 2000;
    int max_tokens = 12;
};

struct EngineConfig {
    WordplayConfig wordplay;
    ResourcePaths resources;
    AngleConfig angle;
    std::uint64_t seed = 0;
};

namespace detail {

inline std::string parse_string_value(std::string_view v, std::size_t lineno) {
    if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front()) {
        return std::string(v.substr(1, v.size() - 2));
    }
    if (v.empty()) throw ParseError("missing value", lineno);
    return std::string(v);
}

inline double parse_number(std::string_view v, std::size_t lineno) {
    std::string s(v);
    char* end = nullptr;
    double d = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) throw ParseError("'" + s + "' is not a number", lineno);
    return d;
}

inline int parse_int(std::string_view v, std::size_t lineno) {
    double d = parse_number(v, lineno);
    if (d != static_cast<double>(static_cast<long long>(d))) {
        throw ParseError("'" + std::string(v) + "' is not an integer", lineno);
    }
    return static_cast<int>(d);
}

inline std::string resolve_path(const std::string& p, const std::filesystem::path& base) {
    if (p.empty()) return p;
    std::filesystem::path fp(p);
    if (fp.is_absolute() || base.empty()) return p;
    return (base / fp).lexically_normal().string();
}

}  // namespace detail

// Parses a configuration stream. Relative resource paths are resolved
// against `base_dir`. Unknown sections or keys are errors.
inline EngineConfig parse_config(std::istream& in, const std::filesystem::path& base_dir = {}) {
    EngineConfig cfg;
    std::string section;
    std::string line;
    std::size_t lineno = 0;

    using Setter = std::function<void(std::string_view, std::size_t)>;
    auto num = [](double& field) -> Setter {
        return [&field](std::string_view v, std::size_t n) { field = detail::parse_number(v, n); };
    };
    auto integer = [](int& field) -> Setter {
        return [&field](std::string_view v, std::size_t n) { field = detail::parse_int(v, n); };
    };
    auto path = [&base_dir](std::string& field) -> Setter {
        return [&field, &base_dir](std::string_view v, std::size_t n) {
            field = detail::resolve_path(detail::parse_string_value(v, n), base_dir);
        };
    };
    auto& w = cfg.wordplay;
    auto& r = cfg.resources;
    const std::map<std::string, Setter> setters = {
        {"wordplay.w_edit", num(w.w_edit)},
        {"wordplay.w_allit", num(w.w_allit)},
        {"wordplay.w_asson", num(w.w_asson)},
        {"wordplay.w_stop", num(w.w_stop)},
        {"wordplay.w_end", num(w.w_end)},
        {"wordplay.w_syll", num(w.w_syll)},
        {"wordplay.c_allit_bonus", num(w.c_allit_bonus)},
        {"wordplay.c_rhyme", num(w.c_rhyme)},
        {"wordplay.c_end_bonus", num(w.c_end_bonus)},
        {"wordplay.threshold", num(w.threshold)},
        {"wordplay.k_assoc", integer(w.k_assoc)},
        {"wordplay.portmanteau_max_dist", integer(w.portmanteau_max_dist)},
        {"resources.lexicon", path(r.lexicon)},
        {"resources.embeddings", path(r.embeddings)},
        {"resources.embeddings_format",
         [&r](std::string_view v, std::size_t n) { r.embeddings_format = detail::parse_string_value(v, n); }},
        {"resources.stopwords", path(r.stopwords)},
        {"resources.nouns", path(r.nouns)},
        {"resources.fillers", path(r.fillers)},
        {"resources.templates", path(r.templates)},
        {"resources.hyphenation", path(r.hyphenation)},
        {"angle.provider",
         [&cfg](std::string_view v, std::size_t n) {
             auto s = detail::parse_string_value(v, n);
             if (s == "template") cfg.angle.provider = AngleProvider::template_list;
             else if (s == "remote") cfg.angle.provider = AngleProvider::remote;
             else throw ParseError("angle.provider must be \"template\" or \"remote\"", n);
         }},
        {"angle.endpoint",
         [&cfg](std::string_view v, std::size_t n) { cfg.angle.endpoint = detail::parse_string_value(v, n); }},
        {"angle.timeout_ms", integer(cfg.angle.timeout_ms)},
        {"angle.max_tokens", integer(cfg.angle.max_tokens)},
        {"engine.seed",
         [&cfg](std::string_view v, std::size_t n) {
             std::string s(v);
             char* end = nullptr;
             auto x = std::strtoull(s.c_str(), &end, 10);
             if (s.empty() || end != s.c_str() + s.size()) throw ParseError("engine.seed must be an integer", n);
             cfg.seed = x;
         }},
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::string_view v = line;
        // '#' starts a comment unless it sits inside a quoted string.
        bool quoted = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == '"') quoted = !quoted;
            if (v[i] == '#' && !quoted) {
                v = v.substr(0, i);
                break;
            }
        }
        v = text::trim(v);
        if (v.empty()) continue;
        if (v.front() == '[') {
            if (v.back() != ']') throw ParseError("malformed section header", lineno);
            section = std::string(text::trim(v.substr(1, v.size() - 2)));
            continue;
        }
        auto eq = v.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected `key = value`", lineno);
        std::string key = section + "." + std::string(text::trim(v.substr(0, eq)));
        auto it = setters.find(key);
        if (it == setters.end()) throw ParseError("unknown configuration key '" + key + "'", lineno);
        it->second(text::trim(v.substr(eq + 1)), lineno);
    }
    return cfg;
}

inline EngineConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open configuration file '" + path + "'");
    return parse_config(in, std::filesystem::path(path).parent_path());
}

// Environment overrides for resource paths and the remote angle service.
inline void apply_env_overrides(EngineConfig& cfg, const std::function<const char*(const char*)>& getenv_fn =
                                                       [](const char* k) { return std::getenv(k); }) {
    auto take = [&](const char* var, std::string& field) {
        if (const char* v = getenv_fn(var); v && *v) field = v;
    };
    take("QUIP_LEXICON", cfg.resources.lexicon);
    take("QUIP_EMBEDDINGS", cfg.resources.embeddings);
    take("QUIP_STOPWORDS", cfg.resources.stopwords);
    take("QUIP_NOUNS", cfg.resources.nouns);
    take("QUIP_FILLERS", cfg.resources.fillers);
    take("QUIP_TEMPLATES", cfg.resources.templates);
    take("QUIP_HYPHENATION", cfg.resources.hyphenation);
    if (const char* v = getenv_fn("QUIP_ANGLE_URL"); v && *v) {
        cfg.angle.endpoint = v;
        cfg.angle.provider = AngleProvider::remote;
    }
}

}  // namespace quip
