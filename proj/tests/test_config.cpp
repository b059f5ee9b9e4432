#include <catch_amalgamated.hpp>

#include <map>
#include <sstream>

#include "support.hpp"

using namespace quip;

TEST_CASE("parses every section") {
    std::istringstream in(R"(
# comment
[engine]
seed = 7

[resources]
lexicon = "dict/cmu.dict"   # trailing comment
embeddings = "/abs/vectors.bin"
embeddings_format = "binary"

[angle]
provider = "remote"
endpoint = "http://host:9000/#frag"
timeout_ms = 500
max_tokens = 4

[wordplay]
w_edit = 2.5
threshold = 1e1
k_assoc = 20
)");
    auto cfg = parse_config(in, "/etc/quip");
    CHECK(cfg.seed == 7);
    CHECK(cfg.resources.lexicon == "/etc/quip/dict/cmu.dict");
    CHECK(cfg.resources.embeddings == "/abs/vectors.bin");
    CHECK(cfg.resources.embeddings_format == "binary");
    CHECK(cfg.angle.provider == AngleProvider::remote);
    CHECK(cfg.angle.endpoint == "http://host:9000/#frag");
    CHECK(cfg.angle.timeout_ms == 500);
    CHECK(cfg.angle.max_tokens == 4);
    CHECK(cfg.wordplay.w_edit == 2.5);
    CHECK(cfg.wordplay.threshold == 10.0);
    CHECK(cfg.wordplay.k_assoc == 20);
    CHECK(cfg.wordplay.w_syll == WordplayConfig{}.w_syll);
}

TEST_CASE("malformed input names the line") {
    auto line_of = [](const std::string& text) -> std::size_t {
        std::istringstream in(text);
        try {
            parse_config(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("[wordplay]\nw_bogus = 1\n") == 2);
    CHECK(line_of("[wordplay]\n\nw_edit = abc\n") == 3);
    CHECK(line_of("[wordplay\n") == 1);
    CHECK(line_of("[wordplay]\nk_assoc = 2.5\n") == 2);
    CHECK(line_of("[angle]\nprovider = \"bert\"\n") == 2);
    CHECK(line_of("just text\n") == 1);
}

TEST_CASE("bundled config loads with resolved paths") {
    auto cfg = testing::default_config();
    CHECK(cfg.resources.lexicon == testing::resource("cmudict.dict"));
    CHECK(cfg.resources.embeddings == testing::resource("fixture/embeddings.txt"));
    CHECK(cfg.seed == 2021);
    // the bundled file and the built-in defaults carry the same calibration
    WordplayConfig d;
    CHECK(cfg.wordplay.w_edit == d.w_edit);
    CHECK(cfg.wordplay.w_allit == d.w_allit);
    CHECK(cfg.wordplay.w_asson == d.w_asson);
    CHECK(cfg.wordplay.w_stop == d.w_stop);
    CHECK(cfg.wordplay.w_end == d.w_end);
    CHECK(cfg.wordplay.w_syll == d.w_syll);
    CHECK(cfg.wordplay.c_allit_bonus == d.c_allit_bonus);
    CHECK(cfg.wordplay.c_rhyme == d.c_rhyme);
    CHECK(cfg.wordplay.c_end_bonus == d.c_end_bonus);
    CHECK(cfg.wordplay.threshold == d.threshold);
    CHECK(cfg.wordplay.k_assoc == d.k_assoc);
    CHECK(cfg.wordplay.portmanteau_max_dist == d.portmanteau_max_dist);
    CHECK_THROWS_AS(load_config_file("/nonexistent/quip.toml"), ConfigError);
}

TEST_CASE("environment overrides") {
    std::map<std::string, std::string> env = {{"QUIP_EMBEDDINGS", "/tmp/big.bin"}, {"QUIP_ANGLE_URL", "http://x:1"}};
    auto cfg = testing::default_config();
    apply_env_overrides(cfg, [&](const char* k) -> const char* {
        auto it = env.find(k);
        return it == env.end() ? nullptr : it->second.c_str();
    });
    CHECK(cfg.resources.embeddings == "/tmp/big.bin");
    CHECK(cfg.resources.lexicon == testing::resource("cmudict.dict"));
    CHECK(cfg.angle.endpoint == "http://x:1");
    CHECK(cfg.angle.provider == AngleProvider::remote);
}

TEST_CASE("wordplay validation") {
    WordplayConfig c;
    c.k_assoc = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.w_edit = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.portmanteau_max_dist = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
}
