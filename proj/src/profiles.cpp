#include "sentiprofile/profiles.hpp"

#include "sentiprofile/error.hpp"

#include <algorithm>     // std::find, std::max
#include <charconv>      // std::from_chars
#include <cmath>         // std::abs, std::isfinite, std::isnan
#include <fstream>       // std::ifstream
#include <istream>       // std::istream, std::getline
#include <sstream>       // std::ostringstream
#include <stdexcept>     // std::invalid_argument
#include <system_error>  // std::errc

namespace sentiprofile {

namespace {

constexpr std::string_view platform_names[] = { "AppReviews", "CodeReviews", "GitHub", "Jira", "StackOverflow" };
constexpr std::string_view platform_codes[] = { "App", "Code", "GH", "Jira", "SO" };

}  // namespace

std::string_view to_string(const platform p) noexcept { return platform_names[index_of(p)]; }

std::string_view short_code(const platform p) noexcept { return platform_codes[index_of(p)]; }

std::optional<platform> parse_platform(const std::string_view s) noexcept {
    for (const platform p : all_platforms) {
        if (s == to_string(p) || s == short_code(p)) {
            return p;
        }
    }
    return std::nullopt;
}

std::string feature_id(const linguistic_feature f) {
    return "L" + std::to_string(index_of(f) + 1);
}

std::optional<linguistic_feature> parse_feature_id(const std::string_view id) noexcept {
    if (id.size() < 2 || id.front() != 'L') {
        return std::nullopt;
    }
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(id.data() + 1, id.data() + id.size(), n);
    if (ec != std::errc{} || ptr != id.data() + id.size() || n < 1 || n > num_features) {
        return std::nullopt;
    }
    return feature_at(n - 1);
}

std::string_view to_string(const answer_option a) noexcept {
    switch (a) {
        case answer_option::fully_true: return "true";
        case answer_option::likely: return "likely";
        case answer_option::unlikely: return "unlikely";
        case answer_option::untrue: return "untrue";
        case answer_option::not_specified: return "not_specified";
    }
    return "";
}

std::optional<answer_option> parse_answer_option(const std::string_view s) noexcept {
    for (const answer_option a : { answer_option::fully_true, answer_option::likely, answer_option::unlikely, answer_option::untrue, answer_option::not_specified }) {
        if (s == to_string(a)) {
            return a;
        }
    }
    return std::nullopt;
}

std::string_view describe(const answer_option a) noexcept {
    switch (a) {
        case answer_option::fully_true: return "Fully true";
        case answer_option::likely: return "More likely to be true";
        case answer_option::unlikely: return "More unlikely to be true";
        case answer_option::untrue: return "Not true at all";
        case answer_option::not_specified: return "Not specified";
    }
    return "";
}

std::string_view interval_label(const answer_option a) noexcept {
    switch (a) {
        case answer_option::fully_true: return "75-100%";
        case answer_option::likely: return "50-75%";
        case answer_option::unlikely: return "25-50%";
        case answer_option::untrue: return "0-25%";
        case answer_option::not_specified: return "-";
    }
    return "";
}

answer_option interval_of(const double percentage) {
    if (std::isnan(percentage) || percentage < 0.0 || percentage > 100.0) {
        throw std::invalid_argument{ "frequency must lie in [0, 100], got " + std::to_string(percentage) };
    }
    if (percentage < 25.0) {
        return answer_option::untrue;
    }
    if (percentage < 50.0) {
        return answer_option::unlikely;
    }
    if (percentage < 75.0) {
        return answer_option::likely;
    }
    return answer_option::fully_true;
}

std::vector<platform> feature_interval_map::platforms_in(const linguistic_feature f, const answer_option a) const {
    std::vector<platform> out;
    for (const platform p : all_platforms) {
        if (at(f, p) == a) {
            out.push_back(p);
        }
    }
    return out;
}

feature_interval_map derive_mapping(const linguistic_table &table) {
    feature_interval_map m;
    for (std::size_t f = 0; f < num_features; ++f) {
        for (const platform p : all_platforms) {
            m.set(feature_at(f), p, interval_of(table[index_of(p)][f]));
        }
    }
    return m;
}

bool overall_mismatch(const tool_performance_record &r) noexcept {
    // slack absorbs binary representation of two-decimal values
    return std::abs(r.printed_overall - r.overall()) > overall_tolerance + 1e-9;
}

best_tool_result best_tool(const platform p, const std::span<const tool_performance_record> records) {
    // tool -> (sum of overall, dataset count), first-seen order kept separately
    std::vector<std::string> order;
    std::map<std::string, std::pair<double, std::size_t>> sums;
    std::set<std::string> datasets;
    for (const tool_performance_record &r : records) {
        if (r.platform_of != p) {
            continue;
        }
        auto [it, inserted] = sums.try_emplace(r.tool, 0.0, 0);
        if (inserted) {
            order.push_back(r.tool);
        }
        it->second.first += r.overall();
        ++it->second.second;
        datasets.insert(r.dataset);
    }
    if (order.empty()) {
        throw std::invalid_argument{ "no performance records for platform " + std::string{ to_string(p) } };
    }

    const auto mean_of = [&](const std::string &tool) {
        const auto &[sum, count] = sums.at(tool);
        return sum / static_cast<double>(count);
    };
    double best = mean_of(order.front());
    for (const std::string &tool : order) {
        best = std::max(best, mean_of(tool));
    }
    const double slack = 1e-9 * std::max(1.0, std::abs(best));

    best_tool_result result;
    result.mean_overall = best;
    result.datasets = datasets.size();
    for (const std::string &tool : order) {
        if (mean_of(tool) >= best - slack) {
            result.tools.push_back(tool);
        }
    }
    return result;
}

std::string_view to_string(const flag_kind k) noexcept {
    switch (k) {
        case flag_kind::overall_mismatch: return "overall_mismatch";
        case flag_kind::stale_anomaly: return "stale_anomaly";
        case flag_kind::mapping_mismatch: return "mapping_mismatch";
        case flag_kind::value_out_of_range: return "value_out_of_range";
        case flag_kind::missing_data: return "missing_data";
    }
    return "";
}

std::vector<integrity_flag> integrity_report::unexpected() const {
    std::vector<integrity_flag> out;
    for (const integrity_flag &f : flags) {
        if (!f.known) {
            out.push_back(f);
        }
    }
    return out;
}

std::set<std::string> knowledge_base::tools() const {
    std::set<std::string> out;
    for (const tool_performance_record &r : performance) {
        out.insert(r.tool);
    }
    return out;
}

integrity_report knowledge_base::check_integrity() const {
    integrity_report report;
    const auto flag = [&](const flag_kind kind, std::string subject, std::string detail, const bool known = false) {
        report.flags.push_back(integrity_flag{ kind, std::move(subject), std::move(detail), known });
    };
    const auto fmt = [](const double v) {
        std::ostringstream ss;
        ss << v;
        return ss.str();
    };

    bool percentages_valid = true;
    for (const platform p : all_platforms) {
        for (std::size_t f = 0; f < num_features; ++f) {
            const double v = linguistic[index_of(p)][f];
            if (!(v >= 0.0 && v <= 100.0)) {
                percentages_valid = false;
                flag(flag_kind::value_out_of_range, feature_id(feature_at(f)) + "/" + std::string{ short_code(p) }, "percentage " + fmt(v) + " outside [0, 100]");
            }
        }
        for (const statistic s : all_statistics) {
            const double v = statistics[index_of(p)][s];
            if (!(v >= 0.0) || !std::isfinite(v)) {
                flag(flag_kind::value_out_of_range, std::string{ to_string(s) } + "/" + std::string{ short_code(p) }, "statistic " + fmt(v) + " is negative or not finite");
            }
        }
    }

    std::set<std::pair<std::string, std::string>> mismatched;
    for (const tool_performance_record &r : performance) {
        const std::string subject = r.tool + "/" + r.dataset;
        bool in_range = true;
        for (const double v : { r.micro_f1, r.macro_f1, r.printed_overall }) {
            if (!(v >= 0.0 && v <= 1.0)) {
                in_range = false;
                flag(flag_kind::value_out_of_range, subject, "score " + fmt(v) + " outside [0, 1]");
            }
        }
        if (in_range && overall_mismatch(r)) {
            const bool known = known_anomalies.contains({ r.tool, r.dataset });
            mismatched.insert({ r.tool, r.dataset });
            flag(flag_kind::overall_mismatch, subject, "printed overall " + fmt(r.printed_overall) + " vs (micro + macro) / 2 = " + fmt(r.overall()), known);
        }
    }
    for (const auto &anomaly : known_anomalies) {
        if (!mismatched.contains(anomaly)) {
            flag(flag_kind::stale_anomaly, anomaly.first + "/" + anomaly.second, "listed as a known anomaly but consistent or absent");
        }
    }

    for (const platform p : all_platforms) {
        const bool covered = std::any_of(performance.begin(), performance.end(), [p](const tool_performance_record &r) { return r.platform_of == p; });
        if (!covered) {
            flag(flag_kind::missing_data, std::string{ to_string(p) }, "no performance records");
        }
    }
    const std::set<std::string> known_tools = tools();
    if (fallback_tools.empty()) {
        flag(flag_kind::missing_data, "fallback_tools", "no fallback tools listed");
    }
    for (const std::string &t : fallback_tools) {
        if (!known_tools.contains(t)) {
            flag(flag_kind::missing_data, t, "fallback tool has no performance records");
        }
    }

    if (percentages_valid) {
        const feature_interval_map derived = mapping();
        for (std::size_t f = 0; f < num_features; ++f) {
            for (const platform p : all_platforms) {
                const answer_option got = derived.at(feature_at(f), p);
                const answer_option want = expected_mapping.at(feature_at(f), p);
                if (got != want) {
                    flag(flag_kind::mapping_mismatch, feature_id(feature_at(f)) + "/" + std::string{ short_code(p) },
                         "derived " + std::string{ to_string(got) } + ", expected " + std::string{ to_string(want) });
                }
            }
        }
    }
    return report;
}

//*************************************************************************************************************************************//
//                                                              parser                                                                 //
//*************************************************************************************************************************************//

namespace {

std::string_view trim(std::string_view s) {
    const std::size_t first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const std::size_t last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(const std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') {
            ++i;
        }
        if (i > start) {
            out.push_back(s.substr(start, i - start));
        }
    }
    return out;
}

std::vector<std::string_view> split_bar(const std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t bar = s.find('|', start);
        out.push_back(trim(s.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start)));
        if (bar == std::string_view::npos) {
            break;
        }
        start = bar + 1;
    }
    return out;
}

class kb_parser {
  public:
    kb_parser(std::istream &in, const std::string_view origin) :
        in_{ in },
        origin_{ origin } { }

    knowledge_base parse() {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            const std::string_view text = trim(raw);
            if (text.empty() || text.front() == '#') {
                continue;
            }
            if (text.front() == '[') {
                open_section(text);
                continue;
            }
            handle(text);
        }
        finish();
        return std::move(kb_);
    }

  private:
    [[noreturn]] void fail(const std::string &what) const {
        throw data_error{ std::string{ origin_ } + ":" + std::to_string(line_) + ": " + what };
    }

    double number(const std::string_view token) const {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            fail("not a number: '" + std::string{ token } + "'");
        }
        return v;
    }

    platform platform_code(const std::string_view code) const {
        const auto it = codes_.find(std::string{ code });
        if (it == codes_.end()) {
            fail("unknown platform code '" + std::string{ code } + "'");
        }
        return it->second;
    }

    void open_section(const std::string_view text) {
        if (text.back() != ']') {
            fail("malformed section header");
        }
        section_ = std::string{ text.substr(1, text.size() - 2) };
        static const std::set<std::string> known{ "platforms", "features", "linguistic", "statistics", "datasets", "performance", "known_anomalies", "expected_mapping", "fallback_tools" };
        if (!known.contains(section_)) {
            fail("unknown section [" + section_ + "]");
        }
        columns_.clear();
    }

    void read_columns(const std::vector<std::string_view> &tokens) {
        if (tokens.size() != num_platforms + 1) {
            fail("columns line must name all five platforms");
        }
        columns_.clear();
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            const platform p = platform_code(tokens[i]);
            if (std::find(columns_.begin(), columns_.end(), p) != columns_.end()) {
                fail("platform listed twice in columns");
            }
            columns_.push_back(p);
        }
    }

    void handle(const std::string_view text) {
        const std::vector<std::string_view> tokens = split_ws(text);
        if (section_.empty()) {
            if (tokens.size() == 2 && tokens[0] == "schema_version") {
                kb_.schema_version = static_cast<int>(number(tokens[1]));
                if (kb_.schema_version != 1) {
                    fail("unsupported schema_version " + std::string{ tokens[1] });
                }
                return;
            }
            fail("unexpected line outside any section");
        }

        if (section_ == "platforms") {
            if (tokens.size() != 2) {
                fail("expected '<code> <platform name>'");
            }
            const auto p = parse_platform(tokens[1]);
            if (!p || to_string(*p) != tokens[1]) {
                fail("unknown platform name '" + std::string{ tokens[1] } + "'");
            }
            codes_[std::string{ tokens[0] }] = *p;
        } else if (section_ == "features") {
            const std::vector<std::string_view> fields = split_bar(text);
            if (fields.size() != 3) {
                fail("expected '<id> | <name> | <description>'");
            }
            const auto f = parse_feature_id(fields[0]);
            if (!f) {
                fail("unknown feature id '" + std::string{ fields[0] } + "'");
            }
            kb_.features[index_of(*f)] = feature_info{ *f, std::string{ fields[1] }, std::string{ fields[2] } };
            mark(seen_features_, index_of(*f), "feature");
        } else if (section_ == "linguistic") {
            if (tokens.front() == "columns") {
                read_columns(tokens);
                return;
            }
            require_columns(tokens);
            const auto f = parse_feature_id(tokens[0]);
            if (!f) {
                fail("unknown feature id '" + std::string{ tokens[0] } + "'");
            }
            for (std::size_t i = 0; i < num_platforms; ++i) {
                kb_.linguistic[index_of(columns_[i])][index_of(*f)] = number(tokens[i + 1]);
            }
            mark(seen_linguistic_, index_of(*f), "linguistic row");
        } else if (section_ == "statistics") {
            if (tokens.front() == "columns") {
                read_columns(tokens);
                return;
            }
            require_columns(tokens);
            const auto s = parse_statistic(tokens[0]);
            if (!s) {
                fail("unknown statistic '" + std::string{ tokens[0] } + "'");
            }
            for (std::size_t i = 0; i < num_platforms; ++i) {
                kb_.statistics[index_of(columns_[i])][*s] = number(tokens[i + 1]);
            }
            mark(seen_statistics_, static_cast<std::size_t>(*s), "statistics row");
        } else if (section_ == "datasets") {
            if (tokens.size() != 2) {
                fail("expected '<dataset> <platform>'");
            }
            const auto p = parse_platform(tokens[1]);
            if (!p) {
                fail("unknown platform '" + std::string{ tokens[1] } + "'");
            }
            if (!kb_.datasets.emplace(std::string{ tokens[0] }, *p).second) {
                fail("dataset listed twice");
            }
        } else if (section_ == "performance") {
            if (tokens.size() != 5) {
                fail("expected '<tool> <dataset> <micro> <macro> <overall>'");
            }
            const auto ds = kb_.datasets.find(std::string{ tokens[1] });
            if (ds == kb_.datasets.end()) {
                fail("unknown dataset '" + std::string{ tokens[1] } + "'");
            }
            if (!records_.insert({ std::string{ tokens[0] }, std::string{ tokens[1] } }).second) {
                fail("duplicate record for " + std::string{ tokens[0] } + "/" + std::string{ tokens[1] });
            }
            kb_.performance.push_back(tool_performance_record{ std::string{ tokens[0] }, ds->first, ds->second, number(tokens[2]), number(tokens[3]), number(tokens[4]) });
        } else if (section_ == "known_anomalies") {
            if (tokens.size() != 2) {
                fail("expected '<tool> <dataset>'");
            }
            kb_.known_anomalies.insert({ std::string{ tokens[0] }, std::string{ tokens[1] } });
        } else if (section_ == "expected_mapping") {
            parse_mapping_row(text);
        } else if (section_ == "fallback_tools") {
            if (tokens.size() != 1) {
                fail("expected one tool name per line");
            }
            kb_.fallback_tools.emplace_back(tokens[0]);
        }
    }

    void parse_mapping_row(const std::string_view text) {
        const std::vector<std::string_view> head = split_ws(text);
        const auto f = parse_feature_id(head.front());
        if (!f) {
            fail("unknown feature id '" + std::string{ head.front() } + "'");
        }
        const std::vector<std::string_view> cells = split_bar(trim(text.substr(head.front().size())));
        if (cells.size() != interval_options.size()) {
            fail("expected four '|'-separated cells (true | likely | unlikely | untrue)");
        }
        std::array<int, num_platforms> assigned{};
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const std::vector<std::string_view> names = split_ws(cells[c]);
            if (names.size() == 1 && names.front() == "-") {
                continue;
            }
            for (const std::string_view name : names) {
                if (name == "All") {
                    for (const platform p : all_platforms) {
                        kb_.expected_mapping.set(*f, p, interval_options[c]);
                        ++assigned[index_of(p)];
                    }
                    continue;
                }
                const platform p = platform_code(name);
                kb_.expected_mapping.set(*f, p, interval_options[c]);
                ++assigned[index_of(p)];
            }
        }
        for (const platform p : all_platforms) {
            if (assigned[index_of(p)] != 1) {
                fail("platform " + std::string{ short_code(p) } + " must appear exactly once in the mapping row");
            }
        }
        mark(seen_mapping_, index_of(*f), "mapping row");
    }

    void require_columns(const std::vector<std::string_view> &tokens) const {
        if (columns_.empty()) {
            fail("data row before 'columns' line");
        }
        if (tokens.size() != num_platforms + 1) {
            fail("expected a name and five values");
        }
    }

    template <std::size_t N>
    void mark(std::array<bool, N> &seen, const std::size_t i, const std::string_view what) const {
        if (seen[i]) {
            fail(std::string{ what } + " given twice");
        }
        seen[i] = true;
    }

    void finish() {
        const auto all = [](const auto &seen) { return std::all_of(seen.begin(), seen.end(), [](const bool b) { return b; }); };
        const auto missing = [&](const std::string &what) {
            throw data_error{ std::string{ origin_ } + ": incomplete knowledge base: " + what };
        };
        if (kb_.schema_version == 0) {
            missing("no schema_version");
        }
        if (!all(seen_features_)) {
            missing("features L1..L13 not all described");
        }
        if (!all(seen_linguistic_)) {
            missing("linguistic rows L1..L13 not all present");
        }
        if (!all(seen_statistics_)) {
            missing("not all eight statistics present");
        }
        if (!all(seen_mapping_)) {
            missing("expected mapping rows L1..L13 not all present");
        }
        if (kb_.performance.empty()) {
            missing("no performance records");
        }
    }

    std::istream &in_;
    std::string_view origin_;
    std::size_t line_{ 0 };
    std::string section_;
    std::map<std::string, platform> codes_;
    std::vector<platform> columns_;
    std::set<std::pair<std::string, std::string>> records_;
    std::array<bool, num_features> seen_features_{};
    std::array<bool, num_features> seen_linguistic_{};
    std::array<bool, num_statistics> seen_statistics_{};
    std::array<bool, num_features> seen_mapping_{};
    knowledge_base kb_;
};

}  // namespace

knowledge_base parse_knowledge_base(std::istream &in, const std::string_view origin) {
    return kb_parser{ in, origin }.parse();
}

loaded_knowledge_base load_knowledge_base(std::istream &in, const std::string_view origin) {
    loaded_knowledge_base loaded{ parse_knowledge_base(in, origin), {} };
    loaded.report = loaded.kb.check_integrity();
    const std::vector<integrity_flag> bad = loaded.report.unexpected();
    if (!bad.empty()) {
        std::string msg = std::string{ origin } + ": knowledge base failed integrity checks:";
        for (const integrity_flag &f : bad) {
            msg += "\n  " + std::string{ to_string(f.kind) } + " " + f.subject + ": " + f.detail;
        }
        throw data_error{ msg };
    }
    return loaded;
}

loaded_knowledge_base load_knowledge_base(const std::filesystem::path &path) {
    std::ifstream in{ path };
    if (!in) {
        throw data_error{ path.string() + ": cannot open knowledge base" };
    }
    return load_knowledge_base(in, path.string());
}

}  // namespace sentiprofile
