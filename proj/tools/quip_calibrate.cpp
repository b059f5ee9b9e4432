// Random search over wordplay weights and constants.
//
// For each target sentence the tool enumerates every punch-line pairing the
// makers consider, reduces each to config-independent features, and keeps
// the configurations under which every target punch line is the unique best
// candidate and clears the threshold. Among those it reports the ones that
// let the fewest random word pairs through.
//
//   quip_calibrate [--config PATH] [--samples N] [--seed N] [--pairs N]
//                  [--margin X] [--top N] [--rivals N]

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quip/config.hpp"
#include "quip/engine.hpp"

#ifndef QUIP_DEFAULT_CONFIG
#define QUIP_DEFAULT_CONFIG "resources/quip.toml"
#endif

namespace {

struct Target {
    std::string sentence;
    std::string punchline;
};

const std::vector<Target> kTargets = {
    {"I just read that some flower that smells like a corpse is about to bloom.", "garden carcass"},
    {"People are trying to summon a Mexican demon by getting him to spin a pencil.", "Puerto Demon"},
    {"Researchers at Johns Hopkins have discovered a virus that causes stupidity.", "flupidity"},
};

struct Features {
    double edit = 0, allit_ind = 0, allit_extra = 0, rhyme = 0, asson_count = 0, stop = 0, end_ind = 0,
           end_extra = 0, syll = 0;
};

struct Scored {
    std::string kind;
    std::string text;
    Features f;
};

Features features_of(const quip::WordForm& a, const quip::WordForm& b) {
    quip::WordplayConfig c0, c1;
    c0.c_allit_bonus = 0;
    c1.c_allit_bonus = 1;
    c0.c_end_bonus = 0;
    c1.c_end_bonus = 1;
    c0.c_rhyme = 0.5;
    Features f;
    f.edit = quip::edit_subscore(a, b);
    f.allit_ind = quip::alliteration_subscore(a, b, c0);
    f.allit_extra = quip::alliteration_subscore(a, b, c1) - f.allit_ind;
    double as = quip::assonance_subscore(a, b, c0);
    if (as == 0.5) {
        f.rhyme = 1;
    } else {
        f.asson_count = as;
    }
    f.stop = quip::stop_consonant_subscore(a, b);
    f.end_ind = quip::ending_subscore(a, b, c0);
    f.end_extra = quip::ending_subscore(a, b, c1) - f.end_ind;
    f.syll = quip::syllable_subscore(a, b);
    return f;
}

double total(const Features& f, const quip::WordplayConfig& c) {
    return c.w_edit * f.edit + c.w_allit * (f.allit_ind + c.c_allit_bonus * f.allit_extra) +
           c.w_asson * (f.rhyme > 0 ? c.c_rhyme : f.asson_count) + c.w_stop * f.stop +
           c.w_end * (f.end_ind + c.c_end_bonus * f.end_extra) + c.w_syll * f.syll;
}

bool dominates(const Features& x, const Features& y) {
    auto ge = [](double p, double q) { return p >= q; };
    double xa = x.rhyme > 0 ? 1e9 : x.asson_count, ya = y.rhyme > 0 ? 1e9 : y.asson_count;
    return ge(x.edit, y.edit) && ge(x.allit_ind, y.allit_ind) && ge(x.allit_extra, y.allit_extra) && ge(xa, ya) &&
           ge(x.stop, y.stop) && ge(x.end_ind, y.end_ind) && ge(x.end_extra, y.end_extra) && ge(x.syll, y.syll);
}

std::ostream& operator<<(std::ostream& os, const quip::WordplayConfig& c) {
    return os << "w_edit=" << c.w_edit << " w_allit=" << c.w_allit << " w_asson=" << c.w_asson
              << " w_stop=" << c.w_stop << " w_end=" << c.w_end << " w_syll=" << c.w_syll
              << " c_allit_bonus=" << c.c_allit_bonus << " c_rhyme=" << c.c_rhyme
              << " c_end_bonus=" << c.c_end_bonus << " threshold=" << c.threshold;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Searches wordplay weights under which the reference punch lines win."};
    std::string config_path = QUIP_DEFAULT_CONFIG;
    int samples = 200000;
    std::uint64_t seed = 1;
    int pair_count = 5000;
    double margin = 0.05;
    int top = 10;
    int show_rivals = 0;
    app.add_option("--config", config_path);
    app.add_option("--samples", samples);
    app.add_option("--seed", seed);
    app.add_option("--pairs", pair_count, "Random vocabulary pairs for the pass-rate estimate");
    app.add_option("--margin", margin, "Required lead of each target over its best rival");
    app.add_option("--top", top);
    app.add_option("--rivals", show_rivals, "Print the best pairings of each set under the current defaults");
    CLI11_PARSE(app, argc, argv);

    auto engine = quip::Engine::build(quip::load_config_file(config_path));

    std::vector<std::vector<Scored>> sets;
    std::vector<std::vector<std::size_t>> target_hits;
    for (const auto& t : kTargets) {
        auto topic = engine.analyze(t.sentence);
        if (!topic.selected) {
            std::cerr << "no keyword pair for: " << t.sentence << '\n';
            return 1;
        }
        auto ctx = engine.punchline_context(topic);
        const auto& [k1, k2] = *topic.selected;
        std::vector<Scored> set;
        auto collect = [&](quip::PunchlineCandidate c, const quip::WordForm& a, const quip::WordForm& b) {
            set.push_back({std::string(quip::to_string(c.kind)), c.text, features_of(a, b)});
        };
        quip::for_each_juxtaposition(k1, k2, ctx, collect);
        quip::for_each_substitution(k1, k2, ctx, collect);
        quip::for_each_portmanteau(k1, k2, ctx, collect);
        std::vector<std::size_t> hits;
        for (std::size_t j = 0; j < set.size(); ++j) {
            if (set[j].text == t.punchline) hits.push_back(j);
        }
        std::cout << k1.surface << " / " << k2.surface << ": " << set.size() << " pairings";
        if (hits.empty()) {
            std::cout << ", target \"" << t.punchline << "\" not generated\n";
            return 1;
        }
        std::cout << '\n';
        for (const auto& s : set) {
            if (s.text == t.punchline) continue;
            if (std::ranges::all_of(hits, [&](std::size_t h) { return dominates(s.f, set[h].f); })) {
                std::cout << "  dominated by " << s.kind << " \"" << s.text << "\"\n";
            }
        }
        if (show_rivals > 0) {
            const quip::WordplayConfig defaults;
            std::vector<std::pair<double, std::size_t>> ranked;
            for (std::size_t j = 0; j < set.size(); ++j) ranked.emplace_back(-total(set[j].f, defaults), j);
            std::ranges::sort(ranked);
            for (int r = 0; r < show_rivals && r < static_cast<int>(ranked.size()); ++r) {
                const auto& s = set[ranked[static_cast<std::size_t>(r)].second];
                std::cout << "  " << std::setw(7) << -ranked[static_cast<std::size_t>(r)].first << "  " << s.kind
                          << " \"" << s.text << "\"\n";
            }
        }
        target_hits.push_back(std::move(hits));
        sets.push_back(std::move(set));
    }

    std::mt19937_64 rng(seed);
    std::vector<Features> random_pairs;
    {
        std::vector<quip::WordForm> words;
        for (const auto& tok : engine.store().vocabulary()) {
            if (tok.find('_') != std::string::npos) continue;
            if (engine.lexicon().contains(tok)) words.push_back(quip::WordForm::of(tok, engine.lexicon()));
        }
        while (static_cast<int>(random_pairs.size()) < pair_count) {
            const auto& a = words[rng() % words.size()];
            const auto& b = words[rng() % words.size()];
            if (a.key() == b.key()) continue;
            random_pairs.push_back(features_of(a, b));
        }
    }

    const std::vector<double> weight_grid = {0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0};
    const std::vector<double> bonus_grid = {0.125, 0.25, 0.5, 1.0};
    const std::vector<double> rhyme_grid = {1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 6.0};
    auto pick = [&](const std::vector<double>& g) { return g[rng() % g.size()]; };

    struct Found {
        quip::WordplayConfig cfg;
        double pass_rate;
        double min_lead;
    };
    std::vector<Found> found;
    const quip::WordplayConfig current;
    int best_violations = std::numeric_limits<int>::max();
    quip::WordplayConfig nearest_miss;
    for (int i = 0; i < samples; ++i) {
        quip::WordplayConfig c;
        if (i > 0) {
            c.w_edit = pick(weight_grid);
            c.w_allit = pick(weight_grid);
            c.w_asson = pick(weight_grid);
            c.w_stop = pick(weight_grid);
            c.w_end = pick(weight_grid);
            c.w_syll = pick(weight_grid);
            c.c_allit_bonus = pick(bonus_grid);
            c.c_end_bonus = pick(bonus_grid);
            c.c_rhyme = pick(rhyme_grid);
        }
        double min_target = 1e300, min_lead = 1e300;
        int violations = 0;
        for (std::size_t s = 0; s < sets.size(); ++s) {
            const auto& set = sets[s];
            const auto& target_text = set[target_hits[s].front()].text;
            double t = -1e300;
            for (auto h : target_hits[s]) t = std::max(t, total(set[h].f, c));
            double rival = -1e300;
            for (const auto& x : set) {
                if (x.text == target_text) continue;
                double v = total(x.f, c);
                rival = std::max(rival, v);
                violations += t - v < margin;
            }
            min_target = std::min(min_target, t);
            min_lead = std::min(min_lead, t - rival);
        }
        c.threshold = std::ceil(min_target * 4.0) / 4.0 - 0.25;
        if (i == 0) {
            std::cout << "current defaults: " << violations << " rivals within margin (smallest lead "
                      << min_lead << ")\n";
        }
        if (violations < best_violations) {
            best_violations = violations;
            nearest_miss = c;
        }
        if (violations > 0) continue;
        int pass = 0;
        for (const auto& f : random_pairs) pass += total(f, c) >= c.threshold;
        found.push_back({c, static_cast<double>(pass) / static_cast<double>(random_pairs.size()), min_lead});
    }

    if (found.empty()) {
        std::cout << "closest configuration leaves " << best_violations << " rivals: " << nearest_miss << '\n';
        for (std::size_t s = 0; s < sets.size(); ++s) {
            const auto& set = sets[s];
            double t = -1e300;
            for (auto h : target_hits[s]) t = std::max(t, total(set[h].f, nearest_miss));
            std::cout << "  " << set[target_hits[s].front()].text << " " << t << ":";
            for (const auto& x : set) {
                if (x.text != set[target_hits[s].front()].text && t - total(x.f, nearest_miss) < margin) {
                    std::cout << " [" << x.text << " " << total(x.f, nearest_miss) << "]";
                }
            }
            std::cout << '\n';
        }
    }
    std::cout << found.size() << " of " << samples << " sampled configurations make every target win\n";
    auto distance = [&](const quip::WordplayConfig& c) {
        return std::abs(c.w_edit - current.w_edit) + std::abs(c.w_allit - current.w_allit) +
               std::abs(c.w_asson - current.w_asson) + std::abs(c.w_stop - current.w_stop) +
               std::abs(c.w_end - current.w_end) + std::abs(c.w_syll - current.w_syll) +
               std::abs(c.c_allit_bonus - current.c_allit_bonus) + std::abs(c.c_rhyme - current.c_rhyme) +
               std::abs(c.c_end_bonus - current.c_end_bonus);
    };
    std::ranges::sort(found, [&](const Found& a, const Found& b) {
        if (a.pass_rate != b.pass_rate) return a.pass_rate < b.pass_rate;
        return distance(a.cfg) < distance(b.cfg);
    });
    found.erase(std::unique(found.begin(), found.end(),
                            [](const Found& a, const Found& b) {
                                return a.cfg.w_edit == b.cfg.w_edit && a.cfg.w_allit == b.cfg.w_allit &&
                                       a.cfg.w_asson == b.cfg.w_asson && a.cfg.w_stop == b.cfg.w_stop &&
                                       a.cfg.w_end == b.cfg.w_end && a.cfg.w_syll == b.cfg.w_syll &&
                                       a.cfg.c_allit_bonus == b.cfg.c_allit_bonus &&
                                       a.cfg.c_rhyme == b.cfg.c_rhyme && a.cfg.c_end_bonus == b.cfg.c_end_bonus;
                            }),
                found.end());
    for (int i = 0; i < top && i < static_cast<int>(found.size()); ++i) {
        std::cout << std::fixed << std::setprecision(3) << "pass " << found[i].pass_rate << " lead "
                  << found[i].min_lead << std::defaultfloat << "  " << found[i].cfg << '\n';
    }
    return 0;
}
