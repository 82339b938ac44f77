#include "sentiprofile/profiles.hpp"

#include "sentiprofile/data_paths.hpp"
#include "sentiprofile/error.hpp"

#include "support/generators.hpp"

#include "doctest.h"

#include <algorithm>  // std::shuffle, std::sort
#include <cmath>      // std::llround, std::nan
#include <fstream>    // std::ifstream
#include <map>        // std::map
#include <set>        // std::set
#include <sstream>    // std::istringstream, std::stringstream
#include <stdexcept>  // std::invalid_argument
#include <string>     // std::string
#include <vector>     // std::vector

using namespace sentiprofile;

namespace {

std::string bundled_text() {
    std::ifstream in{ default_knowledge_base_path() };
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const knowledge_base &bundled() {
    static const knowledge_base kb = load_knowledge_base(default_knowledge_base_path()).kb;
    return kb;
}

loaded_knowledge_base load_text(const std::string &text) {
    std::istringstream in{ text };
    return load_knowledge_base(in, "kb");
}

std::string replaced(std::string text, const std::string &from, const std::string &to) {
    const std::size_t at = text.find(from);
    REQUIRE(at != std::string::npos);
    return text.replace(at, from.size(), to);
}

std::set<std::string> as_set(const std::vector<std::string> &v) { return { v.begin(), v.end() }; }

std::vector<platform> platforms(std::initializer_list<platform> ps) { return ps; }

/// Best tools by exact integer arithmetic on the two-decimal scores: the mean
/// overall is proportional to the sum of (micro + macro) in hundredths.
std::set<std::string> best_by_enumeration(const platform p, const std::vector<tool_performance_record> &records) {
    std::map<std::string, long long> sums;
    std::map<std::string, int> counts;
    for (const tool_performance_record &r : records) {
        if (r.platform_of == p) {
            sums[r.tool] += std::llround(r.micro_f1 * 100) + std::llround(r.macro_f1 * 100);
            ++counts[r.tool];
        }
    }
    // compare sum_a / count_a against sum_b / count_b by cross-multiplying
    std::set<std::string> best;
    std::string leader;
    for (const auto &[tool, sum] : sums) {
        if (leader.empty()) {
            leader = tool;
            best = { tool };
            continue;
        }
        const long long lhs = sum * counts[leader];
        const long long rhs = sums[leader] * counts[tool];
        if (lhs > rhs) {
            leader = tool;
            best = { tool };
        } else if (lhs == rhs) {
            best.insert(tool);
        }
    }
    return best;
}

}  // namespace

TEST_SUITE("interval_of") {
    TEST_CASE("table values and boundaries") {
        CHECK(interval_of(60.6) == answer_option::likely);
        CHECK(interval_of(49.4) == answer_option::unlikely);
        CHECK(interval_of(0.0) == answer_option::untrue);
        CHECK(interval_of(24.999) == answer_option::untrue);
        CHECK(interval_of(25.0) == answer_option::unlikely);
        CHECK(interval_of(50.0) == answer_option::likely);
        CHECK(interval_of(75.0) == answer_option::fully_true);
        CHECK(interval_of(100.0) == answer_option::fully_true);
    }

    TEST_CASE("out of range") {
        CHECK_THROWS_AS(static_cast<void>(interval_of(-0.1)), std::invalid_argument);
        CHECK_THROWS_AS(static_cast<void>(interval_of(100.5)), std::invalid_argument);
        CHECK_THROWS_AS(static_cast<void>(interval_of(std::nan(""))), std::invalid_argument);
    }

    TEST_CASE("monotone") {
        const auto rank = [](const answer_option a) {
            switch (a) {
                case answer_option::untrue: return 0;
                case answer_option::unlikely: return 1;
                case answer_option::likely: return 2;
                default: return 3;
            }
        };
        for (double f = 0.0; f < 100.0; f += 0.37) {
            CHECK(rank(interval_of(f)) <= rank(interval_of(std::min(100.0, f + 0.37))));
        }
    }

    TEST_CASE("answer option names") {
        CHECK(to_string(answer_option::fully_true) == "true");
        CHECK(parse_answer_option("not_specified") == answer_option::not_specified);
        CHECK(interval_label(answer_option::unlikely) == "25-50%");
        CHECK_FALSE(parse_answer_option("maybe").has_value());
    }
}

TEST_SUITE("derive_mapping") {
    TEST_CASE("bundled percentages reproduce the expected mapping") {
        const knowledge_base &kb = bundled();
        CHECK(kb.mapping() == kb.expected_mapping);
    }

    TEST_CASE("individual rows") {
        const feature_interval_map m = bundled().mapping();
        using enum platform;
        CHECK(m.platforms_in(linguistic_feature::gratitude, answer_option::likely) == platforms({ jira }));
        CHECK(m.platforms_in(linguistic_feature::gratitude, answer_option::unlikely) == platforms({ github }));
        CHECK(m.platforms_in(linguistic_feature::gratitude, answer_option::untrue) == platforms({ app_reviews, code_reviews, stack_overflow }));
        CHECK(m.platforms_in(linguistic_feature::progress_sharing, answer_option::untrue).size() == 5);
        CHECK(m.platforms_in(linguistic_feature::technical_focus, answer_option::likely) == platforms({ jira, stack_overflow }));
        CHECK(m.platforms_in(linguistic_feature::technical_focus, answer_option::unlikely) == platforms({ code_reviews, github }));
        CHECK(m.platforms_in(linguistic_feature::technical_focus, answer_option::untrue) == platforms({ app_reviews }));
        for (std::size_t i = 0; i < num_features; ++i) {
            CHECK(m.platforms_in(feature_at(i), answer_option::fully_true).empty());
        }
    }
}

TEST_SUITE("best_tool") {
    TEST_CASE("matches exhaustive integer enumeration") {
        const knowledge_base &kb = bundled();
        for (const platform p : all_platforms) {
            CAPTURE(to_string(p));
            CHECK(as_set(kb.best_tool(p).tools) == best_by_enumeration(p, kb.performance));
        }
    }

    TEST_CASE("frozen winners") {
        const knowledge_base &kb = bundled();
        CHECK(kb.best_tool(platform::app_reviews).tools == std::vector<std::string>{ "SetFit" });
        CHECK(kb.best_tool(platform::code_reviews).tools == std::vector<std::string>{ "SetFit" });
        CHECK(kb.best_tool(platform::github).tools == std::vector<std::string>{ "SetFit" });
        CHECK(as_set(kb.best_tool(platform::jira).tools) == std::set<std::string>{ "ELECTRA", "RoBERTa" });
        CHECK(as_set(kb.best_tool(platform::stack_overflow).tools) == std::set<std::string>{ "RoBERTa", "SetFit" });
        CHECK(kb.best_tool(platform::jira).mean_overall == doctest::Approx(0.8975));
        CHECK(kb.best_tool(platform::github).datasets == 3);
    }

    TEST_CASE("invariant under reordering and positive rescaling") {
        const knowledge_base &kb = bundled();
        gen::source rng{ 67 };
        for (int round = 0; round < 20; ++round) {
            std::vector<tool_performance_record> records = kb.performance;
            std::shuffle(records.begin(), records.end(), rng.engine());
            const double scale = 0.25 + static_cast<double>(rng.between(0, 100)) / 100.0;
            for (tool_performance_record &r : records) {
                r.micro_f1 *= scale;
                r.macro_f1 *= scale;
            }
            for (const platform p : all_platforms) {
                CHECK(as_set(best_tool(p, records).tools) == as_set(kb.best_tool(p).tools));
            }
        }
    }

    TEST_CASE("no records for the platform") {
        CHECK_THROWS_AS(static_cast<void>(best_tool(platform::jira, std::vector<tool_performance_record>{})), std::invalid_argument);
    }
}

TEST_SUITE("knowledge_base") {
    TEST_CASE("bundled data loads with only known anomalies") {
        const loaded_knowledge_base loaded = load_knowledge_base(default_knowledge_base_path());
        CHECK(loaded.report.clean());
        std::set<std::string> flagged;
        for (const integrity_flag &f : loaded.report.flags) {
            CHECK(f.known);
            flagged.insert(f.subject);
        }
        CHECK(flagged.count("SentiSW/SO2") == 1);
        CHECK(loaded.kb.schema_version == 1);
    }

    TEST_CASE("transcribed values") {
        const knowledge_base &kb = bundled();
        CHECK(kb.statistics[index_of(platform::jira)][statistic::chars_per_doc] == 104.21);
        CHECK(kb.statistics[index_of(platform::github)][statistic::spelling_mistakes] == 2.97);
        CHECK(kb.linguistic[index_of(platform::app_reviews)][index_of(linguistic_feature::direct_emotion)] == 60.6);
        CHECK(kb.performance.size() == 130);
        CHECK(kb.tools().size() == 13);
        CHECK(kb.datasets.size() == 10);
        CHECK(kb.fallback_tools == std::vector<std::string>{ "SetFit", "SentiStrength-SE" });
        CHECK(kb.features[index_of(linguistic_feature::gratitude)].name == "Gratitude");

        const auto setfit_app = std::find_if(kb.performance.begin(), kb.performance.end(), [](const tool_performance_record &r) { return r.tool == "SetFit" && r.dataset == "App"; });
        REQUIRE(setfit_app != kb.performance.end());
        CHECK(setfit_app->overall() == doctest::Approx(0.79));
        CHECK_FALSE(overall_mismatch(*setfit_app));
    }

    TEST_CASE("overall tolerance is inclusive") {
        tool_performance_record r{ "T", "D", platform::jira, 0.80, 0.70, 0.76 };
        CHECK_FALSE(overall_mismatch(r));
        r.printed_overall = 0.762;
        CHECK(overall_mismatch(r));
    }

    TEST_CASE("a tampered percentage is an integrity error") {
        const std::string text = replaced(bundled_text(), "L1    60.6", "L1    120.0");
        CHECK_THROWS_AS(static_cast<void>(load_text(text)), data_error);
    }

    TEST_CASE("an unlisted overall mismatch is an integrity error") {
        const std::string text = replaced(bundled_text(), "SetFit            App    0.94 0.64 0.79", "SetFit            App    0.94 0.64 0.70");
        CHECK_THROWS_WITH_AS(static_cast<void>(load_text(text)), doctest::Contains("SetFit/App"), data_error);
    }

    TEST_CASE("a stale anomaly entry is flagged") {
        const std::string text = replaced(bundled_text(), "SEnti-Analyzer   SO3\n", "SEnti-Analyzer   SO3\nSetFit App\n");
        std::istringstream in{ text };
        const integrity_report report = parse_knowledge_base(in, "kb").check_integrity();
        CHECK_FALSE(report.clean());
        CHECK(report.unexpected().front().kind == flag_kind::stale_anomaly);
    }

    TEST_CASE("an expected mapping that disagrees is flagged") {
        const std::string text = replaced(bundled_text(), "L6    - | Jira | GH | App Code SO", "L6    - | Jira GH | - | App Code SO");
        std::istringstream in{ text };
        const integrity_report report = parse_knowledge_base(in, "kb").check_integrity();
        CHECK_FALSE(report.clean());
        CHECK(report.unexpected().front().kind == flag_kind::mapping_mismatch);
    }

    TEST_CASE("syntax errors name the line") {
        CHECK_THROWS_WITH_AS(static_cast<void>(load_text(replaced(bundled_text(), "schema_version 1", "schema_version x"))), doctest::Contains("kb:"), data_error);
        CHECK_THROWS_AS(static_cast<void>(load_text(replaced(bundled_text(), "[fallback_tools]", "[surprise]"))), data_error);
        CHECK_THROWS_AS(static_cast<void>(load_text("schema_version 1\n")), data_error);
        CHECK_THROWS_AS(static_cast<void>(load_knowledge_base("/nonexistent/kb.txt")), data_error);
    }

    TEST_CASE("names") {
        CHECK(parse_platform("GH") == platform::github);
        CHECK(parse_platform("GitHub") == platform::github);
        CHECK(short_code(platform::stack_overflow) == "SO");
        CHECK_FALSE(parse_platform("Reddit").has_value());
        CHECK(feature_id(linguistic_feature::name_mentioning) == "L13");
        CHECK(parse_feature_id("L10") == linguistic_feature::bug_fix_requests);
        CHECK_FALSE(parse_feature_id("L14").has_value());
        CHECK_FALSE(parse_feature_id("L0").has_value());
    }
}
