#include "sentiprofile/json_io.hpp"

#include "sentiprofile/data_paths.hpp"
#include "sentiprofile/error.hpp"

#include "support/generators.hpp"

#include "doctest.h"

#include <string>  // std::string

using namespace sentiprofile;

namespace {

json github_example_json() {
    return json::parse(R"({"L1":"untrue","L2":"untrue","L3":"unlikely","L4":"untrue","L5":"unlikely","L6":"unlikely","L7":"untrue",
                           "L8":"unlikely","L9":"untrue","L10":"not_specified","L11":"untrue","L12":"not_specified","L13":"unlikely"})");
}

std::string parse_error(const json &j) {
    try {
        static_cast<void>(parse_answers(j, "answers.json"));
    } catch (const data_error &e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_SUITE("answers file") {
    TEST_CASE("the bundled fixture parses") {
        const answers_file a = load_answers(SENTIPROFILE_TEST_DIR "/data/github_example.json");
        CHECK(a.answers[linguistic_feature::direct_emotion] == answer_option::untrue);
        CHECK(a.answers[linguistic_feature::bug_fix_requests] == answer_option::not_specified);
        CHECK(a.answers.not_specified_count() == 2);
        CHECK_FALSE(a.statistics.has_value());
        CHECK(parse_answers(github_example_json(), "x") == a);
    }

    TEST_CASE("errors name the file and the key") {
        json missing = github_example_json();
        missing.erase("L7");
        CHECK(parse_error(missing).find("answers.json: missing answer for L7") != std::string::npos);

        json unknown = github_example_json();
        unknown["L14"] = "true";
        CHECK(parse_error(unknown).find("L14") != std::string::npos);

        json bad_value = github_example_json();
        bad_value["L2"] = "sometimes";
        CHECK(parse_error(bad_value).find("L2") != std::string::npos);

        json bad_stat = github_example_json();
        bad_stat["statistics"] = json{ { "avg_nothing", 1.0 } };
        CHECK(parse_error(bad_stat).find("avg_nothing") != std::string::npos);

        json negative = github_example_json();
        negative["statistics"] = json{ { "avg_emoticons", -1.0 } };
        CHECK(parse_error(negative).find("avg_emoticons") != std::string::npos);

        CHECK_FALSE(parse_error(json::array()).empty());
        CHECK_THROWS_AS(static_cast<void>(load_answers("/nonexistent/answers.json")), data_error);
    }

    TEST_CASE("partial statistics are kept") {
        json j = github_example_json();
        j["statistics"] = json{ { "avg_chars_per_doc", 104.21 }, { "avg_question_marks", 0 } };
        const answers_file a = parse_answers(j, "x");
        REQUIRE(a.statistics.has_value());
        CHECK(a.statistics->provided() == 2);
        CHECK((*a.statistics)[statistic::chars_per_doc] == 104.21);
    }

    TEST_CASE("round trip") {
        gen::source rng{ 97 };
        static constexpr std::array<answer_option, 5> options{ answer_option::fully_true, answer_option::likely, answer_option::unlikely, answer_option::untrue, answer_option::not_specified };
        for (int round = 0; round < 200; ++round) {
            answers_file a;
            for (answer_option &o : a.answers.answers) {
                o = options[rng.between(0, 4)];
            }
            if (rng.coin()) {
                user_statistics s;
                for (const statistic st : all_statistics) {
                    if (rng.coin()) {
                        s[st] = static_cast<double>(rng.between(0, 100000)) / 100.0;
                    }
                }
                if (s.provided() > 0) {
                    a.statistics = s;
                }
            }
            const std::string text = to_json(a).dump(2);
            CHECK(parse_answers(json::parse(text), "x") == a);
        }
    }
}

TEST_SUITE("serializers") {
    TEST_CASE("classification report keys") {
        const std::vector<polarity> gold{ polarity::negative, polarity::positive };
        const std::vector<polarity> pred{ polarity::negative, polarity::negative };
        const json j = to_json(make_classification_report(gold, pred));
        CHECK(j["samples"] == 2);
        CHECK(j["accuracy"] == 0.5);
        CHECK(j["classes"].contains("negative"));
        CHECK_FALSE(j["classes"].contains("neutral"));
        CHECK(j["confusion"]["positive"]["negative"] == 1);
    }

    TEST_CASE("undefined kappa is null") {
        const json j = to_json(assess_agreement(rating_matrix{ { { 2, 0 }, { 2, 0 } } }));
        CHECK(j["kappa"].is_null());
        CHECK(j["kappa_defined"] == false);
        CHECK(j["interpretation"].is_null());
        CHECK(j["raw_agreement"] == 1.0);
    }

    TEST_CASE("recommendation layout") {
        const knowledge_base kb = load_knowledge_base(default_knowledge_base_path()).kb;
        const recommendation r = recommend(parse_answers(github_example_json(), "x").answers, std::nullopt, kb);
        const json j = to_json(r);
        CHECK(j["ambiguous"] == false);
        CHECK(j["platforms"] == json::array({ "GitHub" }));
        CHECK(j["per_platform"][0]["platform"] == "GitHub");
        CHECK(j["scoreboard"]["points"]["GitHub"] == 9);
        CHECK(j["scoreboard"]["ambiguous"] == 4);
        CHECK(j["scoreboard"]["features"].size() == 13);
        CHECK(j["scoreboard"]["features"][9]["ambiguous"] == true);
    }

    TEST_CASE("mapping lists platforms per option") {
        const knowledge_base kb = load_knowledge_base(default_knowledge_base_path()).kb;
        const json j = to_json(kb.mapping());
        CHECK(j["L6"]["likely"] == json::array({ "Jira" }));
        CHECK(j["L5"]["untrue"].size() == 5);
        CHECK(j["L1"]["true"].empty());
    }
}
