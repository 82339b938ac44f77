#include "sentiprofile/json_io.hpp"

#include "sentiprofile/error.hpp"

#include <fstream>  // std::ifstream
#include <string>   // std::string

namespace sentiprofile {

namespace {

json platform_list(const std::vector<platform> &platforms) {
    json arr = json::array();
    for (const platform p : platforms) {
        arr.push_back(to_string(p));
    }
    return arr;
}

}  // namespace

json to_json(const class_counts &counts) {
    return json{ { "negative", counts.negative }, { "neutral", counts.neutral }, { "positive", counts.positive }, { "unlabeled", counts.unlabeled }, { "total", counts.total() } };
}

json to_json(const text_statistics &stats) {
    json j = json::object();
    for (const statistic s : all_statistics) {
        j[std::string{ to_string(s) }] = stats[s];
    }
    return j;
}

json to_json(const classification_report &report) {
    json classes = json::object();
    for (const polarity p : all_polarities) {
        const class_metrics &m = report[p];
        if (!m.present) {
            continue;
        }
        classes[std::string{ to_string(p) }] = json{ { "precision", m.precision }, { "recall", m.recall }, { "f1", m.f1 }, { "support", m.support } };
    }
    json confusion = json::object();
    for (const polarity g : all_polarities) {
        json row = json::object();
        for (const polarity q : all_polarities) {
            row[std::string{ to_string(q) }] = report.confusion[index_of(g)][index_of(q)];
        }
        confusion[std::string{ to_string(g) }] = std::move(row);
    }
    return json{
        { "samples", report.samples },
        { "classes", std::move(classes) },
        { "accuracy", report.accuracy },
        { "micro_f1", report.micro_f1 },
        { "macro_f1", report.macro_f1 },
        { "overall_score", report.overall_score },
        { "confusion", std::move(confusion) },
    };
}

json to_json(const agreement_result &result) {
    json j;
    j["kappa"] = result.kappa ? json(*result.kappa) : json(nullptr);
    j["kappa_defined"] = result.kappa.has_value();
    j["raw_agreement"] = result.raw_agreement;
    j["interpretation"] = result.interpretation ? json(to_string(*result.interpretation)) : json(nullptr);
    return j;
}

json to_json(const feature_interval_map &mapping) {
    json j = json::object();
    for (std::size_t i = 0; i < num_features; ++i) {
        json row = json::object();
        for (const answer_option a : interval_options) {
            row[std::string{ to_string(a) }] = platform_list(mapping.platforms_in(feature_at(i), a));
        }
        j[feature_id(feature_at(i))] = std::move(row);
    }
    return j;
}

json to_json(const best_tool_result &best) {
    return json{ { "tools", best.tools }, { "mean_overall", best.mean_overall }, { "datasets", best.datasets } };
}

json to_json(const integrity_report &report) {
    json flags = json::array();
    for (const integrity_flag &f : report.flags) {
        flags.push_back(json{ { "kind", to_string(f.kind) }, { "subject", f.subject }, { "detail", f.detail }, { "known", f.known } });
    }
    return json{ { "clean", report.clean() }, { "flags", std::move(flags) } };
}

json to_json(const score_board &board) {
    json points = json::object();
    for (const platform p : all_platforms) {
        points[std::string{ to_string(p) }] = board[p];
    }
    json features = json::array();
    for (const feature_trace &t : board.features) {
        features.push_back(json{
            { "feature", feature_id(t.feature) },
            { "answer", to_string(t.answer) },
            { "interval", interval_label(t.answer) },
            { "awarded", platform_list(t.awarded) },
            { "ambiguous", t.ambiguous },
        });
    }
    json statistics = json::array();
    for (const statistic_trace &t : board.statistics) {
        json distance = json::object();
        for (const platform p : all_platforms) {
            distance[std::string{ to_string(p) }] = t.distance[index_of(p)];
        }
        statistics.push_back(json{
            { "statistic", to_string(t.stat) },
            { "value", t.user_value },
            { "distance", std::move(distance) },
            { "awarded", platform_list(t.awarded) },
        });
    }
    return json{ { "points", std::move(points) }, { "ambiguous", board.ambiguous }, { "features", std::move(features) }, { "statistics", std::move(statistics) } };
}

json to_json(const recommendation &rec) {
    json per_platform = json::array();
    for (const platform_recommendation &pr : rec.per_platform) {
        json entry{ { "platform", to_string(pr.target) } };
        const json best = to_json(pr.best);
        for (const auto &[key, value] : best.items()) {
            entry[key] = value;
        }
        per_platform.push_back(std::move(entry));
    }
    return json{
        { "ambiguous", rec.ambiguous },
        { "platforms", platform_list(rec.platforms) },
        { "tools", rec.tools },
        { "per_platform", std::move(per_platform) },
        { "scoreboard", to_json(rec.scores) },
        { "rationale", rec.rationale },
    };
}

answers_file parse_answers(const json &j, const std::string_view origin) {
    const auto fail = [&](const std::string &what) { throw data_error{ std::string{ origin } + ": " + what }; };
    if (!j.is_object()) {
        fail("answers must be a JSON object");
    }
    answers_file out;
    std::array<bool, num_features> seen{};
    for (const auto &[key, value] : j.items()) {
        if (key == "statistics") {
            if (!value.is_object()) {
                fail("'statistics' must be an object");
            }
            user_statistics stats;
            for (const auto &[name, v] : value.items()) {
                const auto s = parse_statistic(name);
                if (!s) {
                    fail("unknown statistic '" + name + "'");
                }
                if (!v.is_number()) {
                    fail("statistic '" + name + "' must be a number");
                }
                const double d = v.get<double>();
                if (d < 0.0) {
                    fail("statistic '" + name + "' must not be negative");
                }
                stats[*s] = d;
            }
            if (stats.provided() > 0) {
                out.statistics = stats;
            }
            continue;
        }
        const auto f = parse_feature_id(key);
        if (!f) {
            fail("unknown key '" + key + "'");
        }
        if (!value.is_string()) {
            fail("answer for " + key + " must be a string");
        }
        const auto a = parse_answer_option(value.get<std::string>());
        if (!a) {
            fail("answer for " + key + " must be one of true, likely, unlikely, untrue, not_specified");
        }
        out.answers[*f] = *a;
        seen[index_of(*f)] = true;
    }
    for (std::size_t i = 0; i < num_features; ++i) {
        if (!seen[i]) {
            fail("missing answer for " + feature_id(feature_at(i)));
        }
    }
    return out;
}

answers_file load_answers(const std::filesystem::path &path) {
    std::ifstream in{ path };
    if (!in) {
        throw data_error{ path.string() + ": cannot open answers file" };
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw data_error{ path.string() + ": invalid JSON: " + e.what() };
    }
    return parse_answers(j, path.string());
}

json to_json(const answers_file &answers) {
    json j = json::object();
    for (std::size_t i = 0; i < num_features; ++i) {
        j[feature_id(feature_at(i))] = to_string(answers.answers.answers[i]);
    }
    if (answers.statistics) {
        json stats = json::object();
        for (const statistic s : all_statistics) {
            if (const auto &v = (*answers.statistics)[s]) {
                stats[std::string{ to_string(s) }] = *v;
            }
        }
        j["statistics"] = std::move(stats);
    }
    return j;
}

}  // namespace sentiprofile
