#include "sentiprofile/corpus.hpp"

#include "sentiprofile/csv.hpp"
#include "sentiprofile/error.hpp"

#include "json.hpp"  // nlohmann::json

#include <algorithm>      // std::max, std::find
#include <fstream>        // std::ifstream
#include <istream>        // std::istream, std::getline
#include <ostream>        // std::ostream
#include <set>            // std::set
#include <sstream>        // std::ostringstream
#include <string>         // std::string, std::to_string
#include <unordered_set>  // std::unordered_set
#include <utility>        // std::move

namespace sentiprofile {

using json = nlohmann::json;

bool operator==(const document &lhs, const document &rhs) {
    return lhs.id == rhs.id && lhs.text == rhs.text && lhs.label == rhs.label;
}

std::string_view to_string(const corpus_format f) noexcept {
    return f == corpus_format::csv ? "csv" : "jsonl";
}

std::optional<corpus_format> parse_corpus_format(const std::string_view s) noexcept {
    if (s == "csv") {
        return corpus_format::csv;
    }
    if (s == "jsonl") {
        return corpus_format::jsonl;
    }
    return std::nullopt;
}

std::optional<corpus_format> format_from_extension(const std::filesystem::path &path) {
    const std::string ext = path.extension().string();
    if (ext == ".csv") {
        return corpus_format::csv;
    }
    if (ext == ".jsonl" || ext == ".json") {
        return corpus_format::jsonl;
    }
    return std::nullopt;
}

corpus::corpus(std::vector<document> docs, std::optional<std::string> source) :
    docs_{ std::move(docs) },
    source_{ std::move(source) } {
    std::unordered_set<std::string_view> seen;
    seen.reserve(docs_.size());
    for (const document &d : docs_) {
        if (d.id.empty()) {
            throw data_error{ "document with empty id" };
        }
        if (!seen.insert(d.id).second) {
            throw data_error{ "duplicate document id '" + d.id + "'" };
        }
    }
}

bool corpus::fully_labeled() const noexcept {
    return std::all_of(docs_.begin(), docs_.end(), [](const document &d) { return d.label.has_value(); });
}

//*************************************************************************************************************************************//
//                                                          label mapping                                                              //
//*************************************************************************************************************************************//

label_mapping label_mapping::identity() {
    label_mapping m;
    for (const polarity p : all_polarities) {
        m.map(std::string{ to_string(p) }, p);
    }
    return m;
}

label_mapping label_mapping::from_json_string(const std::string_view text, const std::string_view origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw data_error{ std::string{ origin } + ": invalid label mapping JSON: " + e.what() };
    }
    if (!j.is_object()) {
        throw data_error{ std::string{ origin } + ": label mapping must be a JSON object" };
    }
    label_mapping m;
    for (const auto &[raw, target] : j.items()) {
        if (!target.is_string()) {
            throw data_error{ std::string{ origin } + ": target for '" + raw + "' must be a string" };
        }
        const auto t = target.get<std::string>();
        if (t == "drop") {
            m.drop(raw);
        } else if (const auto p = parse_polarity(t)) {
            m.map(raw, *p);
        } else {
            throw data_error{ std::string{ origin } + ": unknown target '" + t + "' for '" + raw + "' (expected negative, neutral, positive or drop)" };
        }
    }
    return m;
}

label_mapping label_mapping::from_json_file(const std::filesystem::path &path) {
    std::ifstream in{ path };
    if (!in) {
        throw data_error{ path.string() + ": cannot open label mapping" };
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_string(ss.str(), path.string());
}

label_mapping &label_mapping::map(std::string raw, const polarity target) {
    rules_.insert_or_assign(std::move(raw), target);
    return *this;
}

label_mapping &label_mapping::drop(std::string raw) {
    rules_.insert_or_assign(std::move(raw), std::nullopt);
    return *this;
}

std::optional<std::optional<polarity>> label_mapping::lookup(const std::string &raw) const {
    const auto it = rules_.find(raw);
    if (it == rules_.end()) {
        return std::nullopt;
    }
    return it->second;
}

corpus apply_label_mapping(const corpus &c, const label_mapping &mapping) {
    std::set<std::string> unmapped;
    std::vector<document> out;
    out.reserve(c.size());
    for (const document &d : c) {
        if (!d.raw_label.has_value()) {
            out.push_back(d);
            continue;
        }
        const auto rule = mapping.lookup(*d.raw_label);
        if (!rule.has_value()) {
            unmapped.insert(*d.raw_label);
            continue;
        }
        if (!rule->has_value()) {
            continue;  // drop
        }
        document mapped = d;
        mapped.label = **rule;
        out.push_back(std::move(mapped));
    }
    if (!unmapped.empty()) {
        std::string msg = "unmapped raw label(s):";
        for (const std::string &l : unmapped) {
            msg += " '" + l + "'";
        }
        throw data_error{ msg };
    }
    return corpus{ std::move(out), c.source() };
}

//*************************************************************************************************************************************//
//                                                            ingestion                                                                //
//*************************************************************************************************************************************//

namespace {

struct raw_record {
    std::size_t row;
    std::optional<std::string> id;
    std::string text;
    std::optional<std::string> label;
};

std::string row_prefix(const std::string_view origin, const std::size_t row) {
    return std::string{ origin } + ":" + std::to_string(row) + ": ";
}

std::vector<raw_record> read_csv_records(std::istream &in, const std::string_view origin) {
    std::vector<csv::record> rows = csv::read(in, origin);
    std::vector<raw_record> out;
    if (rows.empty()) {
        return out;
    }
    const std::vector<std::string> &header = rows.front().fields;
    const auto column = [&](const std::string_view name) -> std::optional<std::size_t> {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - header.begin());
    };
    const auto text_col = column("text");
    if (!text_col) {
        throw data_error{ row_prefix(origin, rows.front().line) + "header has no 'text' column" };
    }
    const auto id_col = column("id");
    const auto label_col = column("label");

    out.reserve(rows.size() - 1);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const csv::record &r = rows[i];
        if (r.fields.size() != header.size()) {
            throw data_error{ row_prefix(origin, r.line) + "expected " + std::to_string(header.size()) + " fields, found " + std::to_string(r.fields.size()) };
        }
        raw_record rec{ r.line, std::nullopt, r.fields[*text_col], std::nullopt };
        if (id_col && !r.fields[*id_col].empty()) {
            rec.id = r.fields[*id_col];
        }
        if (label_col && !r.fields[*label_col].empty()) {
            rec.label = r.fields[*label_col];
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<raw_record> read_jsonl_records(std::istream &in, const std::string_view origin) {
    std::vector<raw_record> out;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error &e) {
            throw data_error{ row_prefix(origin, row) + "invalid JSON: " + e.what() };
        }
        if (!j.is_object()) {
            throw data_error{ row_prefix(origin, row) + "record is not a JSON object" };
        }
        const auto text = j.find("text");
        if (text == j.end() || !text->is_string()) {
            throw data_error{ row_prefix(origin, row) + "missing string key 'text'" };
        }
        raw_record rec{ row, std::nullopt, text->get<std::string>(), std::nullopt };
        if (const auto id = j.find("id"); id != j.end() && !id->is_null()) {
            if (id->is_string()) {
                rec.id = id->get<std::string>();
            } else if (id->is_number_integer()) {
                rec.id = id->dump();
            } else {
                throw data_error{ row_prefix(origin, row) + "'id' must be a string or integer" };
            }
        }
        if (const auto label = j.find("label"); label != j.end() && !label->is_null()) {
            if (!label->is_string()) {
                throw data_error{ row_prefix(origin, row) + "'label' must be a string" };
            }
            rec.label = label->get<std::string>();
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::string padded_index(const std::size_t index, const std::size_t width) {
    std::string s = std::to_string(index);
    if (s.size() < width) {
        s.insert(0, width - s.size(), '0');
    }
    return s;
}

}  // namespace

corpus read_corpus(std::istream &in, const corpus_format format, const ingest_options &options, const std::string_view origin) {
    std::vector<raw_record> records = format == corpus_format::csv ? read_csv_records(in, origin) : read_jsonl_records(in, origin);

    const std::size_t width = std::max<std::size_t>(6, std::to_string(records.size()).size());
    const label_mapping mapping = options.mapping.value_or(label_mapping::identity());

    std::unordered_set<std::string> explicit_ids;
    std::vector<document> docs;
    docs.reserve(records.size());
    std::set<std::string> unknown_labels;
    std::size_t first_unknown_row = 0;

    for (std::size_t index = 0; index < records.size(); ++index) {
        raw_record &rec = records[index];
        if (rec.id && !explicit_ids.insert(*rec.id).second) {
            throw data_error{ row_prefix(origin, rec.row) + "duplicate id '" + *rec.id + "'" };
        }
        if (rec.text.empty() && !options.allow_empty_text) {
            throw data_error{ row_prefix(origin, rec.row) + "empty text" };
        }
        document d;
        d.id = rec.id ? std::move(*rec.id) : padded_index(index, width);
        d.text = options.strip_markup ? strip_markup(rec.text) : std::move(rec.text);
        d.raw_label = std::move(rec.label);
        if (options.resolve_labels && d.raw_label) {
            const auto rule = mapping.lookup(*d.raw_label);
            if (!rule) {
                if (unknown_labels.empty()) {
                    first_unknown_row = rec.row;
                }
                unknown_labels.insert(*d.raw_label);
                continue;
            }
            if (!rule->has_value()) {
                continue;  // dropped by mapping
            }
            d.label = **rule;
        }
        docs.push_back(std::move(d));
    }
    if (!unknown_labels.empty()) {
        std::string msg = row_prefix(origin, first_unknown_row) + "unknown label(s)";
        for (const std::string &l : unknown_labels) {
            msg += " '" + l + "'";
        }
        msg += options.mapping ? " not covered by the label mapping" : "; supply a label mapping";
        throw data_error{ msg };
    }
    try {
        return corpus{ std::move(docs) };
    } catch (const data_error &e) {
        // an auto-assigned id collided with an explicit one
        throw data_error{ std::string{ origin } + ": " + e.what() };
    }
}

corpus load_corpus(const std::filesystem::path &path, const corpus_format format, const ingest_options &options) {
    std::ifstream in{ path, std::ios::binary };
    if (!in) {
        throw data_error{ path.string() + ": cannot open corpus file" };
    }
    corpus c = read_corpus(in, format, options, path.string());
    return corpus{ std::vector<document>{ c.begin(), c.end() }, path.stem().string() };
}

void write_corpus(std::ostream &out, const corpus &c, const corpus_format format) {
    const auto label_of = [](const document &d) -> std::optional<std::string> {
        if (d.label) {
            return std::string{ to_string(*d.label) };
        }
        return d.raw_label;
    };
    if (format == corpus_format::csv) {
        const std::vector<std::string> header{ "id", "text", "label" };
        csv::write_row(out, header);
        for (const document &d : c) {
            const std::vector<std::string> row{ d.id, d.text, label_of(d).value_or("") };
            csv::write_row(out, row);
        }
        return;
    }
    for (const document &d : c) {
        json j = { { "id", d.id }, { "text", d.text } };
        if (const auto l = label_of(d)) {
            j["label"] = *l;
        }
        out << j.dump() << '\n';
    }
}

corpus pool(const std::span<const corpus> parts) {
    if (parts.size() == 1) {
        return parts.front();
    }
    std::vector<document> docs;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::string prefix = parts[i].source().value_or(std::to_string(i)) + "/";
        for (document d : parts[i]) {
            d.id.insert(0, prefix);
            docs.push_back(std::move(d));
        }
    }
    return corpus{ std::move(docs), std::string{ "pooled" } };
}

std::size_t class_counts::of(const polarity p) const noexcept {
    switch (p) {
        case polarity::negative: return negative;
        case polarity::neutral: return neutral;
        case polarity::positive: return positive;
    }
    return 0;
}

class_counts class_distribution(const corpus &c) {
    class_counts counts;
    for (const document &d : c) {
        if (!d.label) {
            ++counts.unlabeled;
            continue;
        }
        switch (*d.label) {
            case polarity::negative: ++counts.negative; break;
            case polarity::neutral: ++counts.neutral; break;
            case polarity::positive: ++counts.positive; break;
        }
    }
    return counts;
}

std::string strip_markup(const std::string_view text) {
    static constexpr std::pair<std::string_view, std::string_view> entities[] = {
        { "&amp;", "&" }, { "&lt;", "<" }, { "&gt;", ">" }, { "&quot;", "\"" }, { "&#39;", "'" }, { "&apos;", "'" }, { "&nbsp;", " " }
    };
    const auto is_letter = [](const char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
    // "<b", "</b", "<!--"; leaves "<3" and "</3" alone
    const auto is_tag_start = [&](const std::size_t at) {
        const std::string_view rest = text.substr(at + 1);
        return !rest.empty() && (is_letter(rest[0]) || rest[0] == '!' || (rest[0] == '/' && rest.size() > 1 && is_letter(rest[1])));
    };

    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '<' && is_tag_start(i)) {
            const std::size_t close = text.find('>', i + 1);
            if (close != std::string_view::npos) {
                i = close + 1;
                continue;
            }
        }
        if (text[i] == '&') {
            bool decoded = false;
            for (const auto &[entity, replacement] : entities) {
                if (text.substr(i).starts_with(entity)) {
                    out += replacement;
                    i += entity.size();
                    decoded = true;
                    break;
                }
            }
            if (decoded) {
                continue;
            }
        }
        out.push_back(text[i++]);
    }
    return out;
}

}  // namespace sentiprofile
