#include "sentiprofile/wizard.hpp"

#include "sentiprofile/error.hpp"

#include <fstream>  // std::ifstream
#include <istream>  // std::istream, std::getline
#include <ostream>  // std::ostream

namespace sentiprofile {

namespace {

constexpr std::array<answer_option, 5> menu{ answer_option::fully_true, answer_option::likely, answer_option::unlikely, answer_option::untrue, answer_option::not_specified };

std::string trimmed(const std::string &s) {
    const std::size_t first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

enum class step { answered, back, quit };

step ask(std::istream &in, std::ostream &out, const std::size_t i, const question_set &questions, const std::array<feature_info, num_features> &features, std::optional<answer_option> &slot) {
    while (true) {
        out << "\nQuestion " << i + 1 << " of " << num_features << " (" << feature_id(feature_at(i)) << " " << features[i].name << ")\n"
            << questions[i] << '\n';
        for (std::size_t k = 0; k < menu.size(); ++k) {
            out << "  " << k + 1 << ") " << describe(menu[k]);
            if (menu[k] != answer_option::not_specified) {
                out << " (" << interval_label(menu[k]) << ")";
            }
            if (slot == menu[k]) {
                out << "  [current]";
            }
            out << '\n';
        }
        out << "  b) back   q) quit\n> " << std::flush;

        std::string line;
        if (!std::getline(in, line)) {
            return step::quit;
        }
        const std::string choice = trimmed(line);
        if (choice == "q") {
            return step::quit;
        }
        if (choice == "b") {
            return step::back;
        }
        if (choice.size() == 1 && choice[0] >= '1' && choice[0] <= '5') {
            slot = menu[static_cast<std::size_t>(choice[0] - '1')];
            return step::answered;
        }
        out << "Please enter 1-5, b or q.\n";
    }
}

}  // namespace

question_set load_questions(std::istream &in, const std::string_view origin) {
    question_set questions;
    std::array<bool, num_features> seen{};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trimmed(line);
        if (text.empty() || text.front() == '#') {
            continue;
        }
        const std::size_t bar = text.find('|');
        const auto fail = [&](const std::string &what) { throw data_error{ std::string{ origin } + ":" + std::to_string(line_no) + ": " + what }; };
        if (bar == std::string::npos) {
            fail("expected '<id> | <question>'");
        }
        const auto f = parse_feature_id(trimmed(text.substr(0, bar)));
        if (!f) {
            fail("unknown feature id");
        }
        if (seen[index_of(*f)]) {
            fail("question given twice");
        }
        seen[index_of(*f)] = true;
        questions[index_of(*f)] = trimmed(text.substr(bar + 1));
    }
    for (std::size_t i = 0; i < num_features; ++i) {
        if (!seen[i]) {
            throw data_error{ std::string{ origin } + ": no question for " + feature_id(feature_at(i)) };
        }
    }
    return questions;
}

question_set load_questions(const std::filesystem::path &path) {
    std::ifstream in{ path };
    if (!in) {
        throw data_error{ path.string() + ": cannot open questions file" };
    }
    return load_questions(in, path.string());
}

std::optional<questionnaire_answers> run_wizard(std::istream &in, std::ostream &out, const question_set &questions, const std::array<feature_info, num_features> &features) {
    std::array<std::optional<answer_option>, num_features> slots{};
    out << "For each statement, choose how well it describes your dataset.\n";

    std::size_t i = 0;
    while (i < num_features) {
        switch (ask(in, out, i, questions, features, slots[i])) {
            case step::quit: return std::nullopt;
            case step::back:
                if (i > 0) {
                    --i;
                }
                break;
            case step::answered: ++i; break;
        }
    }

    while (true) {
        out << "\nReview:\n";
        for (std::size_t k = 0; k < num_features; ++k) {
            out << "  " << k + 1 << ". " << feature_id(feature_at(k)) << " " << features[k].name << ": " << describe(*slots[k]) << '\n';
        }
        out << "Enter s to submit, 1-13 to change an answer, or q to quit.\n> " << std::flush;
        std::string line;
        if (!std::getline(in, line)) {
            return std::nullopt;
        }
        const std::string choice = trimmed(line);
        if (choice == "s") {
            break;
        }
        if (choice == "q") {
            return std::nullopt;
        }
        std::size_t n = 0;
        try {
            std::size_t used = 0;
            n = std::stoul(choice, &used);
            if (used != choice.size()) {
                n = 0;
            }
        } catch (const std::exception &) {
            n = 0;
        }
        if (n < 1 || n > num_features) {
            out << "Please enter s, q or a number from 1 to 13.\n";
            continue;
        }
        std::optional<answer_option> edited = slots[n - 1];
        if (ask(in, out, n - 1, questions, features, edited) == step::quit) {
            return std::nullopt;
        }
        slots[n - 1] = edited;
    }

    questionnaire_answers answers;
    for (std::size_t k = 0; k < num_features; ++k) {
        answers.answers[k] = *slots[k];
    }
    return answers;
}

}  // namespace sentiprofile
