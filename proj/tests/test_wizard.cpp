#include "sentiprofile/wizard.hpp"

#include "sentiprofile/data_paths.hpp"
#include "sentiprofile/error.hpp"
#include "sentiprofile/json_io.hpp"

#include "doctest.h"

#include <sstream>  // std::istringstream, std::ostringstream
#include <string>   // std::string

using namespace sentiprofile;

namespace {

const knowledge_base &kb() {
    static const knowledge_base k = load_knowledge_base(default_knowledge_base_path()).kb;
    return k;
}

const question_set &questions() {
    static const question_set q = load_questions(default_questions_path());
    return q;
}

std::optional<questionnaire_answers> drive(const std::string &keys, std::string *transcript = nullptr) {
    std::istringstream in{ keys };
    std::ostringstream out;
    auto result = run_wizard(in, out, questions(), kb().features);
    if (transcript != nullptr) {
        *transcript = out.str();
    }
    return result;
}

// 1 true, 2 likely, 3 unlikely, 4 untrue, 5 not specified
const std::string github_keys = "4\n4\n3\n4\n3\n3\n4\n3\n4\n5\n4\n5\n3\n";

}  // namespace

TEST_SUITE("wizard") {
    TEST_CASE("keystrokes for the GitHub example equal the answers file") {
        std::string transcript;
        const auto answers = drive(github_keys + "s\n", &transcript);
        REQUIRE(answers.has_value());
        const answers_file file = load_answers(SENTIPROFILE_TEST_DIR "/data/github_example.json");
        CHECK(*answers == file.answers);
        CHECK(to_json(answers_file{ *answers, std::nullopt }).dump(2) == to_json(file).dump(2));
        CHECK(transcript.find("Documents in my dataset explicitly express emotions.") != std::string::npos);
        CHECK(transcript.find("Question 13 of 13") != std::string::npos);
        CHECK(transcript.find("Review:") != std::string::npos);
    }

    TEST_CASE("all not specified") {
        std::string keys;
        for (int i = 0; i < 13; ++i) {
            keys += "5\n";
        }
        const auto answers = drive(keys + "s\n");
        REQUIRE(answers.has_value());
        CHECK(*answers == questionnaire_answers::all(answer_option::not_specified));
        CHECK(recommend(*answers, std::nullopt, kb()).ambiguous);
    }

    TEST_CASE("back navigation rewrites the previous answer") {
        const auto answers = drive("1\nb\n4\n" + github_keys.substr(2) + "s\n");
        REQUIRE(answers.has_value());
        CHECK(*answers == load_answers(SENTIPROFILE_TEST_DIR "/data/github_example.json").answers);
    }

    TEST_CASE("back on the first question stays put") {
        const auto answers = drive("b\n" + github_keys + "s\n");
        REQUIRE(answers.has_value());
        CHECK((*answers)[linguistic_feature::direct_emotion] == answer_option::untrue);
    }

    TEST_CASE("review can edit a single answer") {
        const auto answers = drive(github_keys + "6\n1\ns\n");
        REQUIRE(answers.has_value());
        CHECK((*answers)[linguistic_feature::gratitude] == answer_option::fully_true);
        CHECK((*answers)[linguistic_feature::inquisitive] == answer_option::untrue);
    }

    TEST_CASE("invalid input asks again") {
        std::string transcript;
        const auto answers = drive("x\n9\n" + github_keys + "99\ns\n", &transcript);
        REQUIRE(answers.has_value());
        CHECK(transcript.find("Please enter 1-5, b or q.") != std::string::npos);
        CHECK(transcript.find("Please enter s, q or a number from 1 to 13.") != std::string::npos);
    }

    TEST_CASE("quitting or running out of input aborts") {
        CHECK_FALSE(drive("4\nq\n").has_value());
        CHECK_FALSE(drive("4\n4\n").has_value());
        CHECK_FALSE(drive(github_keys).has_value());
        CHECK_FALSE(drive(github_keys + "q\n").has_value());
        CHECK_FALSE(drive(github_keys + "3\nq\n").has_value());
    }

    TEST_CASE("question files must cover every feature once") {
        std::istringstream missing{ "L1 | one\n" };
        CHECK_THROWS_AS(static_cast<void>(load_questions(missing, "q")), data_error);
        std::istringstream twice{ "L1 | one\nL1 | again\n" };
        CHECK_THROWS_WITH_AS(static_cast<void>(load_questions(twice, "q")), doctest::Contains("q:2"), data_error);
        std::istringstream bad{ "L99 | what\n" };
        CHECK_THROWS_AS(static_cast<void>(load_questions(bad, "q")), data_error);
    }
}
