#ifndef SENTIPROFILE_JSON_IO_HPP_
#define SENTIPROFILE_JSON_IO_HPP_

#include "sentiprofile/corpus.hpp"
#include "sentiprofile/metrics.hpp"
#include "sentiprofile/profiles.hpp"
#include "sentiprofile/recommender.hpp"
#include "sentiprofile/textstats.hpp"

#include "json.hpp"  // nlohmann::json

#include <filesystem>   // std::filesystem::path
#include <optional>     // std::optional
#include <string_view>  // std::string_view

namespace sentiprofile {

using json = nlohmann::ordered_json;

[[nodiscard]] json to_json(const class_counts &counts);
[[nodiscard]] json to_json(const text_statistics &stats);
[[nodiscard]] json to_json(const classification_report &report);
[[nodiscard]] json to_json(const agreement_result &result);
[[nodiscard]] json to_json(const feature_interval_map &mapping);
[[nodiscard]] json to_json(const best_tool_result &best);
[[nodiscard]] json to_json(const integrity_report &report);
[[nodiscard]] json to_json(const score_board &board);
[[nodiscard]] json to_json(const recommendation &rec);

/// Contents of an answers file: "L1".."L13" plus an optional "statistics" object.
struct answers_file {
    questionnaire_answers answers;
    std::optional<user_statistics> statistics;

    friend bool operator==(const answers_file &, const answers_file &) = default;
};

/// Throws data_error (prefixed with `origin`) on missing or unknown keys and
/// invalid values.
[[nodiscard]] answers_file parse_answers(const json &j, std::string_view origin);
[[nodiscard]] answers_file load_answers(const std::filesystem::path &path);
[[nodiscard]] json to_json(const answers_file &answers);

}  // namespace sentiprofile

#endif  // SENTIPROFILE_JSON_IO_HPP_
