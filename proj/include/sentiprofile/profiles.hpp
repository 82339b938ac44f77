#ifndef SENTIPROFILE_PROFILES_HPP_
#define SENTIPROFILE_PROFILES_HPP_

#include "sentiprofile/textstats.hpp"

#include <array>        // std::array
#include <cstddef>      // std::size_t
#include <filesystem>   // std::filesystem::path
#include <iosfwd>       // std::istream
#include <map>          // std::map
#include <optional>     // std::optional
#include <set>          // std::set
#include <span>         // std::span
#include <string>       // std::string
#include <string_view>  // std::string_view
#include <utility>      // std::pair
#include <vector>       // std::vector

namespace sentiprofile {

enum class platform {
    app_reviews,
    code_reviews,
    github,
    jira,
    stack_overflow
};

inline constexpr std::size_t num_platforms = 5;
inline constexpr std::array<platform, num_platforms> all_platforms{
    platform::app_reviews, platform::code_reviews, platform::github, platform::jira, platform::stack_overflow
};

[[nodiscard]] constexpr std::size_t index_of(const platform p) noexcept { return static_cast<std::size_t>(p); }
/// "AppReviews", "CodeReviews", "GitHub", "Jira", "StackOverflow"
[[nodiscard]] std::string_view to_string(platform p) noexcept;
/// "App", "Code", "GH", "Jira", "SO"
[[nodiscard]] std::string_view short_code(platform p) noexcept;
/// Accepts the full name or the short code.
[[nodiscard]] std::optional<platform> parse_platform(std::string_view s) noexcept;

/// L1..L13 in table order.
enum class linguistic_feature {
    direct_emotion,
    emphasized_positivity,
    technical_focus,
    balanced_critique,
    progress_sharing,
    gratitude,
    inquisitive,
    help_seeking_offering,
    compliments,
    bug_fix_requests,
    constructive_criticism,
    username_mentioning,
    name_mentioning
};

inline constexpr std::size_t num_features = 13;

[[nodiscard]] constexpr std::size_t index_of(const linguistic_feature f) noexcept { return static_cast<std::size_t>(f); }
[[nodiscard]] constexpr linguistic_feature feature_at(const std::size_t i) noexcept { return static_cast<linguistic_feature>(i); }
/// "L1".."L13"
[[nodiscard]] std::string feature_id(linguistic_feature f);
[[nodiscard]] std::optional<linguistic_feature> parse_feature_id(std::string_view id) noexcept;

enum class answer_option {
    fully_true,
    likely,
    unlikely,
    untrue,
    not_specified
};

inline constexpr std::array<answer_option, 4> interval_options{ answer_option::fully_true, answer_option::likely, answer_option::unlikely, answer_option::untrue };

/// "true", "likely", "unlikely", "untrue", "not_specified"
[[nodiscard]] std::string_view to_string(answer_option a) noexcept;
[[nodiscard]] std::optional<answer_option> parse_answer_option(std::string_view s) noexcept;
/// Wording shown to users, e.g. "More likely to be true".
[[nodiscard]] std::string_view describe(answer_option a) noexcept;
/// "75-100%", "50-75%", "25-50%", "0-25%", "-"
[[nodiscard]] std::string_view interval_label(answer_option a) noexcept;

/// [0, 25) untrue, [25, 50) unlikely, [50, 75) likely, [75, 100] true.
/// Throws std::invalid_argument outside [0, 100] or for NaN.
[[nodiscard]] answer_option interval_of(double percentage);

/// Percentages per [platform][feature].
using linguistic_table = std::array<std::array<double, num_features>, num_platforms>;
/// Average text statistics per platform.
using statistics_table = std::array<text_statistics, num_platforms>;

/// Answer option occupied by each platform, per feature.
class feature_interval_map {
  public:
    feature_interval_map() = default;

    [[nodiscard]] answer_option at(linguistic_feature f, platform p) const noexcept { return cells_[index_of(f)][index_of(p)]; }
    void set(linguistic_feature f, platform p, answer_option a) noexcept { cells_[index_of(f)][index_of(p)] = a; }

    /// Platforms whose interval for `f` is `a`, in platform order.
    [[nodiscard]] std::vector<platform> platforms_in(linguistic_feature f, answer_option a) const;

    friend bool operator==(const feature_interval_map &, const feature_interval_map &) = default;

  private:
    std::array<std::array<answer_option, num_platforms>, num_features> cells_{};
};

[[nodiscard]] feature_interval_map derive_mapping(const linguistic_table &table);

struct tool_performance_record {
    std::string tool;
    std::string dataset;
    platform platform_of{ platform::app_reviews };
    double micro_f1{ 0.0 };
    double macro_f1{ 0.0 };
    /// As printed in the source table; may disagree with overall().
    double printed_overall{ 0.0 };

    [[nodiscard]] double overall() const noexcept { return (micro_f1 + macro_f1) / 2.0; }
};

/// Tolerance for printed vs recomputed overall scores.
inline constexpr double overall_tolerance = 0.01;

/// True if |printed - (micro + macro) / 2| exceeds overall_tolerance.
[[nodiscard]] bool overall_mismatch(const tool_performance_record &r) noexcept;

struct best_tool_result {
    /// Every tool attaining the maximum mean, in first-seen record order.
    std::vector<std::string> tools;
    double mean_overall{ 0.0 };
    std::size_t datasets{ 0 };
};

/// Tools with the highest mean recomputed overall score over the platform's
/// datasets. Means within 1e-9 (relative) of the maximum count as tied.
/// Throws std::invalid_argument if no record belongs to the platform.
[[nodiscard]] best_tool_result best_tool(platform p, std::span<const tool_performance_record> records);

struct feature_info {
    linguistic_feature feature{};
    std::string name;
    std::string description;
};

enum class flag_kind {
    overall_mismatch,
    stale_anomaly,
    mapping_mismatch,
    value_out_of_range,
    missing_data
};

[[nodiscard]] std::string_view to_string(flag_kind k) noexcept;

struct integrity_flag {
    flag_kind kind{};
    /// e.g. "SentiSW/SO2" or "L6/GH"
    std::string subject;
    std::string detail;
    /// Listed in the knowledge base's known-anomaly section.
    bool known{ false };
};

struct integrity_report {
    std::vector<integrity_flag> flags;

    [[nodiscard]] std::vector<integrity_flag> unexpected() const;
    [[nodiscard]] bool clean() const { return unexpected().empty(); }
};

/// Platform knowledge base: feature descriptions, per-platform linguistic
/// percentages and statistics, tool performance, and the expected interval
/// mapping used as an integrity reference.
class knowledge_base {
  public:
    int schema_version{ 0 };
    std::array<feature_info, num_features> features{};
    linguistic_table linguistic{};
    statistics_table statistics{};
    std::map<std::string, platform> datasets;
    std::vector<tool_performance_record> performance;
    /// (tool, dataset) pairs whose printed overall is known to be off.
    std::set<std::pair<std::string, std::string>> known_anomalies;
    feature_interval_map expected_mapping;
    std::vector<std::string> fallback_tools;

    /// Re-derives the interval map from `linguistic`.
    [[nodiscard]] feature_interval_map mapping() const { return derive_mapping(linguistic); }
    [[nodiscard]] best_tool_result best_tool(platform p) const { return sentiprofile::best_tool(p, performance); }
    [[nodiscard]] std::set<std::string> tools() const;

    /// Range checks, overall-score consistency and mapping re-derivation.
    [[nodiscard]] integrity_report check_integrity() const;
};

/// Parses the knowledge-base text format. Throws data_error naming the line on
/// syntax errors; does not run integrity checks.
[[nodiscard]] knowledge_base parse_knowledge_base(std::istream &in, std::string_view origin);

struct loaded_knowledge_base {
    knowledge_base kb;
    integrity_report report;
};

/// Parses and checks. Throws data_error if any flag falls outside the
/// knowledge base's known-anomaly list.
[[nodiscard]] loaded_knowledge_base load_knowledge_base(const std::filesystem::path &path);
[[nodiscard]] loaded_knowledge_base load_knowledge_base(std::istream &in, std::string_view origin);

}  // namespace sentiprofile

#endif  // SENTIPROFILE_PROFILES_HPP_
