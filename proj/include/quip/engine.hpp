#pragma once

// The full pipeline behind one entry point: keyword pair, punch-line
// candidates, threshold filter, angle, assembly.

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "quip/angle.hpp"
#include "quip/association.hpp"
#include "quip/config.hpp"
#include "quip/errors.hpp"
#include "quip/hyphenation.hpp"
#include "quip/keywords.hpp"
#include "quip/phonetics.hpp"
#include "quip/punchline.hpp"
#include "quip/response.hpp"
#include "quip/text.hpp"
#include "quip/wordplay.hpp"

namespace quip {

struct EngineStats {
    std::size_t lexicon_entries = 0;
    std::size_t vocabulary_size = 0;
    std::size_t template_count = 0;
    std::size_t filler_count = 0;
    std::size_t stopword_count = 0;
    std::size_t noun_count = 0;
    std::size_t hyphenation_patterns = 0;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Immutable after build(); respond() may be called from any number of threads.
class Engine {
public:
    static Engine build(EngineConfig config) {
        try {
            config.wordplay.validate();
        } catch (const Error& e) {
            throw BuildError("wordplay", e.what());
        }
        if (config.angle.max_tokens < 1) throw BuildError("angle", "max_tokens must be >= 1");
        if (config.angle.timeout_ms < 1) throw BuildError("angle", "timeout_ms must be >= 1");

        Engine e;
        auto load = [](const char* name, const std::string& path, auto&& fn) {
            if (path.empty()) throw BuildError(name, "no path configured");
            try {
                return fn(path);
            } catch (const BuildError&) {
                throw;
            } catch (const std::exception& ex) {
                throw BuildError(name, ex.what());
            }
        };
        const auto& r = config.resources;
        e.lexicon_ = std::make_shared<PhoneticLexicon>(
            load("lexicon", r.lexicon, [](const std::string& p) { return PhoneticLexicon::load_file(p); }));
        e.store_ = std::make_shared<EmbeddingStore>(load("embeddings", r.embeddings, [&](const std::string& p) {
            EmbeddingFormat fmt = EmbeddingFormat::automatic;
            if (r.embeddings_format == "text") fmt = EmbeddingFormat::text;
            else if (r.embeddings_format == "binary") fmt = EmbeddingFormat::binary;
            else if (r.embeddings_format != "auto") throw ConfigError("unknown format '" + r.embeddings_format + "'");
            return EmbeddingStore::load_file(p, fmt);
        }));
        e.stopwords_ = std::make_shared<WordSet>(
            load("stopwords", r.stopwords, [](const std::string& p) { return load_word_set_file(p); }));
        e.nouns_ = std::make_shared<WordSet>(
            load("nouns", r.nouns, [](const std::string& p) { return load_word_set_file(p); }));
        e.fillers_ = load("fillers", r.fillers, [](const std::string& p) { return FillerWords::load_file(p); });
        e.templates_ =
            load("templates", r.templates, [](const std::string& p) { return AngleTemplates::load_file(p); });
        e.hyphenator_ = std::make_shared<Hyphenator>(
            load("hyphenation", r.hyphenation, [](const std::string& p) { return Hyphenator::load_file(p); }));
        if (e.hyphenator_->pattern_count() == 0) throw BuildError("hyphenation", "no patterns loaded");

        if (config.angle.provider == AngleProvider::remote) {
            try {
                e.remote_ = std::make_shared<RemoteAngleClient>(config.angle.endpoint,
                                                                std::chrono::milliseconds(config.angle.timeout_ms));
            } catch (const std::exception& ex) {
                throw BuildError("angle", ex.what());
            }
        }
        e.config_ = std::move(config);
        return e;
    }

    // Assembles an engine from already-loaded resources.
    static Engine from_parts(EngineConfig config, PhoneticLexicon lexicon, EmbeddingStore store, WordSet stopwords,
                             WordSet nouns, FillerWords fillers, AngleTemplates templates, Hyphenator hyphenator) {
        config.wordplay.validate();
        Engine e;
        e.lexicon_ = std::make_shared<PhoneticLexicon>(std::move(lexicon));
        e.store_ = std::make_shared<EmbeddingStore>(std::move(store));
        e.stopwords_ = std::make_shared<WordSet>(std::move(stopwords));
        e.nouns_ = std::make_shared<WordSet>(std::move(nouns));
        e.fillers_ = std::move(fillers);
        e.templates_ = std::move(templates);
        e.hyphenator_ = std::make_shared<Hyphenator>(std::move(hyphenator));
        if (config.angle.provider == AngleProvider::remote) {
            e.remote_ = std::make_shared<RemoteAngleClient>(config.angle.endpoint,
                                                            std::chrono::milliseconds(config.angle.timeout_ms));
        }
        e.config_ = std::move(config);
        return e;
    }

    // Copy sharing the loaded resources but with a different wordplay config.
    Engine with_wordplay(const WordplayConfig& wp) const {
        wp.validate();
        Engine e = *this;
        e.config_.wordplay = wp;
        return e;
    }

    Engine with_seed(std::uint64_t seed) const {
        Engine e = *this;
        e.config_.seed = seed;
        return e;
    }

    EngineStats stats() const {
        return {lexicon_->size(), store_->size(), templates_.size(), fillers_.size(),
                stopwords_->size(), nouns_->size(), hyphenator_->pattern_count()};
    }

    const EngineConfig& config() const noexcept { return config_; }
    const PhoneticLexicon& lexicon() const noexcept { return *lexicon_; }
    const EmbeddingStore& store() const noexcept { return *store_; }
    const Hyphenator& hyphenator() const noexcept { return *hyphenator_; }
    const WordSet& stopwords() const noexcept { return *stopwords_; }
    const WordSet& nouns() const noexcept { return *nouns_; }
    const AngleTemplates& templates() const noexcept { return templates_; }
    const FillerWords& fillers() const noexcept { return fillers_; }

    TopicAnalysis analyze(std::string_view sentence) const {
        return analyze_topic(sentence, *stopwords_, *nouns_, *store_);
    }

    PunchlineContext punchline_context(const TopicAnalysis& topic) const {
        return PunchlineContext{*store_, *lexicon_, *hyphenator_, config_.wordplay, topic_word_set(topic.tokens)};
    }

    // Per-call generator derived from the seed and the input text.
    std::mt19937_64 rng_for(std::string_view sentence) const {
        return std::mt19937_64(splitmix64(config_.seed ^ splitmix64(text::fnv1a(sentence))));
    }

    // Never throws: any internal failure degrades to a no-response.
    JokeResponse respond(std::string_view sentence) const noexcept {
        try {
            return respond_or_throw(sentence);
        } catch (...) {
            return JokeResponse{};
        }
    }

    JokeResponse respond_or_throw(std::string_view sentence) const {
        TopicAnalysis topic = analyze(sentence);
        if (!topic.selected) return no_response(topic, {});

        auto ctx = punchline_context(topic);
        auto candidates = make_all_candidates(topic.selected->first, topic.selected->second, ctx);
        auto best = select_best(candidates, config_.wordplay);
        if (!best) return no_response(topic, std::move(candidates));

        auto rng = rng_for(sentence);
        AngleRequest req{std::string(sentence), best->text, config_.angle.max_tokens};
        auto angle = generate_angle(req, remote_.get(), templates_, rng);
        return assemble(topic, *best, angle, fillers_, rng, std::move(candidates));
    }

private:
    Engine() = default;

    EngineConfig config_;
    std::shared_ptr<const PhoneticLexicon> lexicon_;
    std::shared_ptr<const EmbeddingStore> store_;
    std::shared_ptr<const Hyphenator> hyphenator_;
    std::shared_ptr<const RemoteAngleClient> remote_;
    std::shared_ptr<const WordSet> stopwords_;
    std::shared_ptr<const WordSet> nouns_;
    FillerWords fillers_;
    AngleTemplates templates_;
};

}  // namespace quip
