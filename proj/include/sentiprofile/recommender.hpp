#ifndef SENTIPROFILE_RECOMMENDER_HPP_
#define SENTIPROFILE_RECOMMENDER_HPP_

#include "sentiprofile/corpus.hpp"
#include "sentiprofile/profiles.hpp"
#include "sentiprofile/textstats.hpp"

#include <array>     // std::array
#include <cstddef>   // std::size_t
#include <optional>  // std::optional
#include <string>    // std::string
#include <vector>    // std::vector

namespace sentiprofile {

/// One answer per linguistic feature, L1..L13.
struct questionnaire_answers {
    std::array<answer_option, num_features> answers{};

    [[nodiscard]] answer_option operator[](const linguistic_feature f) const noexcept { return answers[index_of(f)]; }
    [[nodiscard]] answer_option &operator[](const linguistic_feature f) noexcept { return answers[index_of(f)]; }
    [[nodiscard]] std::size_t not_specified_count() const noexcept;

    [[nodiscard]] static questionnaire_answers all(answer_option a) noexcept;

    friend bool operator==(const questionnaire_answers &, const questionnaire_answers &) = default;
};

/// User-supplied statistics in the units of the platform statistics table;
/// any subset may be given.
struct user_statistics {
    std::array<std::optional<double>, num_statistics> values{};

    [[nodiscard]] const std::optional<double> &operator[](const statistic s) const noexcept { return values[static_cast<std::size_t>(s)]; }
    [[nodiscard]] std::optional<double> &operator[](const statistic s) noexcept { return values[static_cast<std::size_t>(s)]; }
    [[nodiscard]] std::size_t provided() const noexcept;

    [[nodiscard]] static user_statistics from(const text_statistics &stats) noexcept;

    friend bool operator==(const user_statistics &, const user_statistics &) = default;
};

/// Why points were awarded for one feature.
struct feature_trace {
    linguistic_feature feature{};
    answer_option answer{};
    std::vector<platform> awarded;
    bool ambiguous{ false };
};

/// Why points were awarded for one statistic.
struct statistic_trace {
    statistic stat{};
    double user_value{ 0.0 };
    std::array<double, num_platforms> distance{};
    std::vector<platform> awarded;
};

struct score_board {
    std::array<std::size_t, num_platforms> points{};
    std::size_t ambiguous{ 0 };
    std::vector<feature_trace> features;
    std::vector<statistic_trace> statistics;

    [[nodiscard]] std::size_t operator[](const platform p) const noexcept { return points[index_of(p)]; }
    /// Highest-scoring platforms, in platform order.
    [[nodiscard]] std::vector<platform> leaders() const;
    /// Sums points and traces of both boards.
    [[nodiscard]] score_board pooled_with(const score_board &other) const;

    friend bool operator==(const score_board &lhs, const score_board &rhs) { return lhs.points == rhs.points && lhs.ambiguous == rhs.ambiguous; }
};

/// Every platform whose interval matches the answer scores a point; a
/// not-specified answer, or one no platform occupies, scores one ambiguous point.
[[nodiscard]] score_board score_linguistic(const questionnaire_answers &answers, const feature_interval_map &mapping);

/// For each provided statistic the platform(s) with the smallest absolute
/// difference score a point; distances within 1e-9 (relative) tie.
/// Throws std::invalid_argument when nothing is provided or a value is
/// negative or not finite.
[[nodiscard]] score_board score_statistics(const user_statistics &user, const statistics_table &profiles);

struct recommend_options {
    /// AMBIGUOUS when strictly more answers than this are not specified.
    std::size_t max_not_specified{ num_features / 2 };
};

struct platform_recommendation {
    platform target{};
    best_tool_result best;
};

struct recommendation {
    bool ambiguous{ false };
    /// Tied leaders; empty when ambiguous.
    std::vector<platform> platforms;
    std::vector<platform_recommendation> per_platform;
    /// Union of recommended tools, or the fallback pair when ambiguous.
    std::vector<std::string> tools;
    score_board scores;
    std::vector<std::string> rationale;
};

/// Pools linguistic and (optional) statistics points and picks the leaders.
/// The result is ambiguous when the ambiguous bucket beats every platform or
/// when too many answers are not specified; it then carries the knowledge
/// base's fallback tools.
[[nodiscard]] recommendation recommend(const questionnaire_answers &answers, const std::optional<user_statistics> &stats, const knowledge_base &kb, const recommend_options &options = {});

/// Corpus statistics as user statistics, for automatic statistics matching.
[[nodiscard]] user_statistics auto_answers_from_corpus(const corpus &c, const dictionary &dict, const emoticon_lexicon &lexicon, const tokenizer_config &config = {}, unsigned threads = 1);

}  // namespace sentiprofile

#endif  // SENTIPROFILE_RECOMMENDER_HPP_
