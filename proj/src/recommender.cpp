#include "sentiprofile/recommender.hpp"

#include <algorithm>  // std::find, std::max, std::min_element, std::count
#include <cmath>      // std::abs, std::isfinite
#include <stdexcept>  // std::invalid_argument
#include <string>     // std::string, std::to_string

namespace sentiprofile {

std::size_t questionnaire_answers::not_specified_count() const noexcept {
    return static_cast<std::size_t>(std::count(answers.begin(), answers.end(), answer_option::not_specified));
}

questionnaire_answers questionnaire_answers::all(const answer_option a) noexcept {
    questionnaire_answers q;
    q.answers.fill(a);
    return q;
}

std::size_t user_statistics::provided() const noexcept {
    return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [](const std::optional<double> &v) { return v.has_value(); }));
}

user_statistics user_statistics::from(const text_statistics &stats) noexcept {
    user_statistics u;
    for (const statistic s : all_statistics) {
        u[s] = stats[s];
    }
    return u;
}

std::vector<platform> score_board::leaders() const {
    const std::size_t best = *std::max_element(points.begin(), points.end());
    std::vector<platform> out;
    for (const platform p : all_platforms) {
        if (points[index_of(p)] == best) {
            out.push_back(p);
        }
    }
    return out;
}

score_board score_board::pooled_with(const score_board &other) const {
    score_board pooled = *this;
    for (std::size_t i = 0; i < num_platforms; ++i) {
        pooled.points[i] += other.points[i];
    }
    pooled.ambiguous += other.ambiguous;
    pooled.features.insert(pooled.features.end(), other.features.begin(), other.features.end());
    pooled.statistics.insert(pooled.statistics.end(), other.statistics.begin(), other.statistics.end());
    return pooled;
}

score_board score_linguistic(const questionnaire_answers &answers, const feature_interval_map &mapping) {
    score_board board;
    for (std::size_t i = 0; i < num_features; ++i) {
        const linguistic_feature f = feature_at(i);
        feature_trace trace{ f, answers[f], {}, false };
        if (trace.answer != answer_option::not_specified) {
            trace.awarded = mapping.platforms_in(f, trace.answer);
        }
        if (trace.awarded.empty()) {
            trace.ambiguous = true;
            ++board.ambiguous;
        }
        for (const platform p : trace.awarded) {
            ++board.points[index_of(p)];
        }
        board.features.push_back(std::move(trace));
    }
    return board;
}

score_board score_statistics(const user_statistics &user, const statistics_table &profiles) {
    if (user.provided() == 0) {
        throw std::invalid_argument{ "statistics matching needs at least one statistic" };
    }
    score_board board;
    for (const statistic s : all_statistics) {
        const std::optional<double> &value = user[s];
        if (!value) {
            continue;
        }
        if (!(*value >= 0.0) || !std::isfinite(*value)) {
            throw std::invalid_argument{ std::string{ to_string(s) } + " must be a finite non-negative number, got " + std::to_string(*value) };
        }
        statistic_trace trace{ s, *value, {}, {} };
        double nearest = 0.0;
        double scale = std::abs(*value);
        for (const platform p : all_platforms) {
            const double reference = profiles[index_of(p)][s];
            trace.distance[index_of(p)] = std::abs(*value - reference);
            scale = std::max(scale, std::abs(reference));
        }
        nearest = *std::min_element(trace.distance.begin(), trace.distance.end());
        const double slack = 1e-9 * std::max(1.0, scale);
        for (const platform p : all_platforms) {
            if (trace.distance[index_of(p)] <= nearest + slack) {
                trace.awarded.push_back(p);
                ++board.points[index_of(p)];
            }
        }
        board.statistics.push_back(std::move(trace));
    }
    return board;
}

recommendation recommend(const questionnaire_answers &answers, const std::optional<user_statistics> &stats, const knowledge_base &kb, const recommend_options &options) {
    recommendation rec;
    rec.scores = score_linguistic(answers, kb.mapping());
    if (stats && stats->provided() > 0) {
        rec.scores = rec.scores.pooled_with(score_statistics(*stats, kb.statistics));
    }

    const std::size_t top = *std::max_element(rec.scores.points.begin(), rec.scores.points.end());
    const std::size_t unspecified = answers.not_specified_count();
    const bool ambiguous_leads = rec.scores.ambiguous > top;
    const bool mostly_unspecified = unspecified > options.max_not_specified;

    rec.rationale.push_back("highest platform score " + std::to_string(top) + ", ambiguous points " + std::to_string(rec.scores.ambiguous));
    if (ambiguous_leads) {
        rec.rationale.emplace_back("ambiguous points exceed every platform score");
    }
    if (mostly_unspecified) {
        rec.rationale.push_back(std::to_string(unspecified) + " of " + std::to_string(num_features) + " answers not specified (limit " + std::to_string(options.max_not_specified) + ")");
    }

    if (ambiguous_leads || mostly_unspecified) {
        rec.ambiguous = true;
        rec.tools = kb.fallback_tools;
        rec.rationale.emplace_back("no clear platform match; recommending the fallback tools");
        return rec;
    }

    rec.platforms = rec.scores.leaders();
    for (const platform p : rec.platforms) {
        platform_recommendation pr{ p, kb.best_tool(p) };
        for (const std::string &tool : pr.best.tools) {
            if (std::find(rec.tools.begin(), rec.tools.end(), tool) == rec.tools.end()) {
                rec.tools.push_back(tool);
            }
        }
        rec.per_platform.push_back(std::move(pr));
    }
    if (rec.platforms.size() > 1) {
        rec.rationale.push_back(std::to_string(rec.platforms.size()) + " platforms tied at " + std::to_string(top) + " points");
    }
    return rec;
}

user_statistics auto_answers_from_corpus(const corpus &c, const dictionary &dict, const emoticon_lexicon &lexicon, const tokenizer_config &config, const unsigned threads) {
    return user_statistics::from(corpus_statistics(c, dict, lexicon, config, threads));
}

}  // namespace sentiprofile
