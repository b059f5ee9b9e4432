// Command-line front end for the joke engine.
//
//   quip respond "<sentence>"      one response, or [no joke]
//   quip repl                      one response per input line
//   quip batch --in a.jsonl --out b.jsonl
//   quip score <word1> <word2>     wordplay subscores for a pair
//
// Exit status: 0 success (including no joke), 2 usage error, 3 resource or
// engine build error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quip/config.hpp"
#include "quip/engine.hpp"
#include "quip/record.hpp"
#include "quip/version.hpp"

#ifndef QUIP_DEFAULT_CONFIG
#define QUIP_DEFAULT_CONFIG "resources/quip.toml"
#endif

namespace {

constexpr int kUsageError = 2;
constexpr int kBuildError = 3;
constexpr const char* kNoJoke = "[no joke]";

struct Options {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<double> threshold;
    std::string angle_provider;
    std::string angle_url;
    bool explain = false;
};

quip::EngineConfig resolve_config(const Options& opt) {
    std::string path = opt.config_path;
    if (path.empty()) {
        const char* env = std::getenv("QUIP_CONFIG");
        path = env && *env ? env : QUIP_DEFAULT_CONFIG;
    }
    auto cfg = quip::load_config_file(path);
    quip::apply_env_overrides(cfg);
    if (opt.seed) cfg.seed = *opt.seed;
    if (opt.threshold) cfg.wordplay.threshold = *opt.threshold;
    if (!opt.angle_url.empty()) {
        cfg.angle.endpoint = opt.angle_url;
        cfg.angle.provider = quip::AngleProvider::remote;
    }
    if (opt.angle_provider == "template") cfg.angle.provider = quip::AngleProvider::template_list;
    if (opt.angle_provider == "remote") cfg.angle.provider = quip::AngleProvider::remote;
    return cfg;
}

void print_explain(std::ostream& out, const quip::Engine& engine, const std::string& sentence,
                   const quip::JokeResponse& r) {
    auto topic = engine.analyze(sentence);
    out << "  candidates:";
    for (const auto& c : topic.candidates) out << " [" << c.surface << " (" << quip::to_string(c.kind) << ")]";
    out << '\n';
    if (topic.selected) {
        out << "  keywords: " << topic.selected->first.surface << " | " << topic.selected->second.surface
            << "  similarity " << std::fixed << std::setprecision(4) << topic.pair_similarity.value_or(0) << '\n';
    }
    for (const auto& c : r.candidates) {
        const auto& s = c.score;
        out << "  " << std::left << std::setw(14) << quip::to_string(c.kind) << std::right << std::fixed
            << std::setprecision(3) << s.total << "  \"" << c.text << "\"  (" << c.provenance.first << " ~ "
            << c.provenance.second << ")  edit " << s.edit_sub << " allit " << s.allit_sub << " asson "
            << s.asson_sub << " stop " << s.stop_sub << " end " << s.end_sub << " syll " << s.syll_sub << '\n';
    }
    if (r.angle_result) {
        out << "  angle source: " << quip::to_string(r.angle_result->source)
            << (r.angle_result->fallback_used ? " (fallback)" : "") << '\n';
    }
    out << std::defaultfloat;
}

void respond_line(std::ostream& out, const quip::Engine& engine, const std::string& sentence, bool explain) {
    auto r = engine.respond(sentence);
    out << (r.responded ? r.text : kNoJoke) << '\n';
    if (explain) print_explain(out, engine, sentence, r);
}

int run_batch(const quip::Engine& engine, const std::string& in_path, const std::string& out_path, bool explain) {
    std::ifstream in(in_path);
    if (!in) {
        std::cerr << "quip: cannot open " << in_path << '\n';
        return kBuildError;
    }
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));

    std::vector<std::string> records(lines.size());
    auto work = [&](std::size_t i) {
        auto j = nlohmann::json::parse(lines[i], nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("input") || !j["input"].is_string()) {
            records[i] = quip::error_record("line " + std::to_string(i + 1) + ": expected {\"input\": string}").dump();
            return;
        }
        auto sentence = j["input"].get<std::string>();
        records[i] = quip::batch_record(sentence, engine.respond(sentence), explain).dump();
    };

    unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < lines.size(); i += workers) work(i);
            });
        }
    }

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "quip: cannot write " << out_path << '\n';
        return kBuildError;
    }
    for (const auto& r : records) out << r << '\n';
    return 0;
}

int run_score(const quip::EngineConfig& cfg, const std::string& a, const std::string& b) {
    auto lex = quip::PhoneticLexicon::load_file(cfg.resources.lexicon);
    quip::WordplayScore s;
    try {
        s = quip::wordplay_score(a, b, lex, cfg.wordplay);
    } catch (const quip::RejectedPair& e) {
        std::cerr << "quip: " << e.what() << '\n';
        return kUsageError;
    }
    auto show = [&](const std::string& w) {
        auto p = lex.pronounce(w);
        std::cout << std::left << std::setw(10) << w << (p ? p->symbols() : "(not in dictionary)") << '\n';
    };
    show(a);
    show(b);
    std::cout << std::fixed << std::setprecision(3);
    std::cout << "edit_sub   " << s.edit_sub << '\n'
              << "allit_sub  " << s.allit_sub << '\n'
              << "asson_sub  " << s.asson_sub << '\n'
              << "stop_sub   " << s.stop_sub << '\n'
              << "end_sub    " << s.end_sub << '\n'
              << "syll_sub   " << s.syll_sub << '\n'
              << "total      " << s.total << '\n'
              << "threshold  " << cfg.wordplay.threshold << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Improvises a wordplay joke in response to a topic sentence."};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string("quip ") + quip::kVersion);

    Options opt;
    app.add_option("--config", opt.config_path, "Engine configuration file");
    app.add_option("--seed", opt.seed, "Random seed for filler and template choice");
    app.add_option("--threshold", opt.threshold, "Minimum wordplay score for a punch line");
    app.add_option("--angle-provider", opt.angle_provider, "Angle source")
        ->check(CLI::IsMember({"template", "remote"}));
    app.add_option("--angle-url", opt.angle_url, "Base URL of the remote angle service (implies remote)");
    app.add_flag("--explain", opt.explain, "Print keyword and punch-line candidates");

    std::string sentence;
    auto* respond = app.add_subcommand("respond", "Respond to one sentence");
    respond->add_option("sentence", sentence, "Topic sentence")->required();

    auto* repl = app.add_subcommand("repl", "Respond to each line read from standard input");

    std::string in_path, out_path;
    auto* batch = app.add_subcommand("batch", "Map a JSONL file of {\"input\": ...} records to responses");
    batch->add_option("--in", in_path, "Input JSONL")->required();
    batch->add_option("--out", out_path, "Output JSONL")->required();

    std::vector<std::string> pair;
    auto* score = app.add_subcommand("score", "Show the wordplay subscores for two words");
    score->add_option("words", pair, "Two words")->required()->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    quip::EngineConfig cfg;
    try {
        cfg = resolve_config(opt);
    } catch (const std::exception& e) {
        std::cerr << "quip: configuration: " << e.what() << '\n';
        return kBuildError;
    }

    if (*score) {
        try {
            cfg.wordplay.validate();
            return run_score(cfg, pair[0], pair[1]);
        } catch (const quip::InvalidArgument& e) {
            std::cerr << "quip: " << e.what() << '\n';
            return kUsageError;
        } catch (const std::exception& e) {
            std::cerr << "quip: " << e.what() << '\n';
            return kBuildError;
        }
    }

    std::optional<quip::Engine> engine;
    try {
        engine = quip::Engine::build(cfg);
    } catch (const std::exception& e) {
        std::cerr << "quip: cannot build engine: " << e.what() << '\n';
        return kBuildError;
    }

    if (*respond) {
        if (quip::text::trim(sentence).empty()) {
            std::cerr << "quip: sentence is empty\n";
            return kUsageError;
        }
        respond_line(std::cout, *engine, sentence, opt.explain);
        return 0;
    }
    if (*repl) {
        for (std::string line; std::getline(std::cin, line);) {
            if (quip::text::trim(line).empty()) continue;
            respond_line(std::cout, *engine, line, opt.explain);
            std::cout.flush();
        }
        return 0;
    }
    if (*batch) return run_batch(*engine, in_path, out_path, opt.explain);
    return kUsageError;
}
