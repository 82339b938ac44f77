#ifndef SENTIPROFILE_WIZARD_HPP_
#define SENTIPROFILE_WIZARD_HPP_

#include "sentiprofile/profiles.hpp"
#include "sentiprofile/recommender.hpp"

#include <array>       // std::array
#include <filesystem>  // std::filesystem::path
#include <iosfwd>      // std::istream, std::ostream
#include <optional>    // std::optional
#include <string>      // std::string

namespace sentiprofile {

using question_set = std::array<std::string, num_features>;

/// Reads "L<n> | question" lines; every feature needs exactly one question.
[[nodiscard]] question_set load_questions(const std::filesystem::path &path);
[[nodiscard]] question_set load_questions(std::istream &in, std::string_view origin);

/// Asks the questions in order. Input per question: 1-5 to answer, "b" to go
/// back, "q" to quit. After the last question the answers are listed for
/// review: "s" submits, a question number reopens that question.
/// Returns nullopt when the user quits or input ends.
[[nodiscard]] std::optional<questionnaire_answers> run_wizard(std::istream &in, std::ostream &out, const question_set &questions, const std::array<feature_info, num_features> &features);

}  // namespace sentiprofile

#endif  // SENTIPROFILE_WIZARD_HPP_
