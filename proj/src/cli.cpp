#include "sentiprofile/cli.hpp"

#include "sentiprofile/corpus.hpp"
#include "sentiprofile/csv.hpp"
#include "sentiprofile/data_paths.hpp"
#include "sentiprofile/error.hpp"
#include "sentiprofile/json_io.hpp"
#include "sentiprofile/metrics.hpp"
#include "sentiprofile/profiles.hpp"
#include "sentiprofile/recommender.hpp"
#include "sentiprofile/sampling.hpp"
#include "sentiprofile/textstats.hpp"
#include "sentiprofile/wizard.hpp"

#include "CLI11.hpp"  // CLI::App

#include <algorithm>      // std::sort, std::unique, std::reverse, std::all_of
#include <cstdint>        // std::uint64_t
#include <filesystem>     // std::filesystem
#include <fstream>        // std::ifstream, std::ofstream
#include <iomanip>        // std::setw, std::setprecision
#include <istream>        // std::istream
#include <map>            // std::map
#include <optional>       // std::optional
#include <ostream>        // std::ostream
#include <set>            // std::set
#include <sstream>        // std::ostringstream
#include <stdexcept>      // std::runtime_error
#include <string>         // std::string
#include <thread>         // std::thread::hardware_concurrency
#include <unordered_map>  // std::unordered_map
#include <utility>        // std::pair, std::move
#include <vector>         // std::vector

namespace sentiprofile::cli {

namespace {

namespace fs = std::filesystem;

/// Raised for invocations that parse but make no sense together.
class usage_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> format_names{ "csv", "jsonl" };
const std::vector<std::string> polarity_names{ "negative", "neutral", "positive" };

//*************************************************************************************************************************************//
//                                                         shared options                                                              //
//*************************************************************************************************************************************//

struct corpus_options {
    std::vector<std::string> inputs;
    std::string format;
    std::string label_map;
    bool ignore_labels{ false };
    bool strip_markup{ false };
    bool allow_empty_text{ false };

    [[nodiscard]] std::optional<corpus_format> declared_format() const { return format.empty() ? std::nullopt : parse_corpus_format(format); }
};

struct textstats_options {
    std::string dictionary;
    std::string emoticons;
    bool no_skip_urls{ false };
    bool skip_code{ false };
    unsigned threads{ 0 };

    [[nodiscard]] tokenizer_config tokenizer() const { return tokenizer_config{ !no_skip_urls, skip_code }; }
};

void add_format_option(CLI::App *cmd, std::string &format) {
    cmd->add_option("--format", format, "Input format; inferred from the extension when omitted")->check(CLI::IsMember(format_names));
}

void add_corpus_options(CLI::App *cmd, corpus_options &opts, const std::string &flag, const bool with_labels) {
    cmd->add_option(flag, opts.inputs, "Corpus file(s), CSV or JSONL; several files are pooled in the given order")->required()->expected(1, -1);
    add_format_option(cmd, opts.format);
    if (with_labels) {
        cmd->add_option("--label-map", opts.label_map, "JSON object mapping raw labels to negative/neutral/positive or \"drop\"");
        cmd->add_flag("--ignore-labels", opts.ignore_labels, "Keep raw labels unresolved");
    }
    cmd->add_flag("--strip-markup", opts.strip_markup, "Remove HTML tags and decode entities");
    cmd->add_flag("--allow-empty-text", opts.allow_empty_text, "Accept documents with empty text");
}

void add_textstats_options(CLI::App *cmd, textstats_options &opts) {
    cmd->add_option("--dictionary", opts.dictionary, "Word list for spelling checks")->default_str(default_dictionary_path().string());
    cmd->add_option("--emoticons", opts.emoticons, "Emoticon lexicon")->default_str(default_emoticons_path().string());
    cmd->add_flag("--no-skip-urls", opts.no_skip_urls, "Tokenize URLs like ordinary text");
    cmd->add_flag("--skip-code", opts.skip_code, "Ignore text between backticks");
    cmd->add_option("--threads", opts.threads, "Worker threads for profiling (0 = all cores)")->capture_default_str();
}

corpus_format resolve_format(const fs::path &path, const std::optional<corpus_format> declared) {
    if (declared) {
        return *declared;
    }
    if (const auto f = format_from_extension(path)) {
        return *f;
    }
    throw usage_error{ path.string() + ": cannot infer the format from the extension; pass --format" };
}

corpus load_inputs(const corpus_options &opts, const bool resolve_labels) {
    ingest_options ingest;
    ingest.resolve_labels = resolve_labels && !opts.ignore_labels;
    ingest.allow_empty_text = opts.allow_empty_text;
    ingest.strip_markup = opts.strip_markup;
    if (!opts.label_map.empty()) {
        ingest.mapping = label_mapping::from_json_file(opts.label_map);
    }
    std::vector<corpus> parts;
    for (const std::string &input : opts.inputs) {
        parts.push_back(load_corpus(input, resolve_format(input, opts.declared_format()), ingest));
    }
    return parts.size() == 1 ? std::move(parts.front()) : pool(parts);
}

struct text_resources {
    dictionary dict;
    emoticon_lexicon lexicon;
};

text_resources load_resources(const textstats_options &opts) {
    const fs::path dict = opts.dictionary.empty() ? default_dictionary_path() : fs::path{ opts.dictionary };
    const fs::path lex = opts.emoticons.empty() ? default_emoticons_path() : fs::path{ opts.emoticons };
    return text_resources{ dictionary::load(dict), emoticon_lexicon::load(lex) };
}

unsigned worker_count(const unsigned requested) {
    return requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
}

fs::path knowledge_base_path(const std::string &flag) {
    return flag.empty() ? default_knowledge_base_path() : fs::path{ flag };
}

void print_json(std::ostream &out, const json &j) {
    out << j.dump(2) << '\n';
}

std::string fixed(const double v, const int digits = 4) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

std::string joined(const std::vector<std::string> &items, const std::string_view sep = ", ") {
    std::string s;
    for (const std::string &item : items) {
        if (!s.empty()) {
            s += sep;
        }
        s += item;
    }
    return s;
}

std::vector<std::string> platform_names(const std::vector<platform> &platforms) {
    std::vector<std::string> names;
    for (const platform p : platforms) {
        names.emplace_back(to_string(p));
    }
    return names;
}

void print_counts(std::ostream &out, const class_counts &c) {
    out << "labels: negative " << c.negative << ", neutral " << c.neutral << ", positive " << c.positive << ", unlabeled " << c.unlabeled << '\n';
}

//*************************************************************************************************************************************//
//                                                            profile                                                                  //
//*************************************************************************************************************************************//

struct profile_command {
    corpus_options corpus_opts;
    textstats_options text_opts;

    int run(std::ostream &out, const bool human) const {
        const corpus c = load_inputs(corpus_opts, true);
        const text_resources res = load_resources(text_opts);
        const tokenizer_config tok = text_opts.tokenizer();
        const text_statistics stats = corpus_statistics(c, res.dict, res.lexicon, tok, worker_count(text_opts.threads));
        const class_counts counts = class_distribution(c);

        if (human) {
            out << "documents: " << c.size() << '\n';
            print_counts(out, counts);
            for (const statistic s : all_statistics) {
                out << std::left << std::setw(28) << to_string(s) << ' ' << fixed(stats[s], 2) << '\n';
            }
            return exit_ok;
        }
        json sources = json::array();
        for (const std::string &input : corpus_opts.inputs) {
            sources.push_back(fs::path{ input }.filename().string());
        }
        print_json(out, json{
                            { "documents", c.size() },
                            { "sources", std::move(sources) },
                            { "class_distribution", to_json(counts) },
                            { "statistics", to_json(stats) },
                            { "tokenizer", json{ { "skip_urls", tok.skip_urls }, { "skip_code", tok.skip_code } } },
                        });
        return exit_ok;
    }
};

//*************************************************************************************************************************************//
//                                                             sample                                                                  //
//*************************************************************************************************************************************//

struct sample_command {
    corpus_options corpus_opts;
    std::optional<std::size_t> n;
    std::uint64_t seed{ 0 };
    std::string retain_class;
    double confidence{ 0.95 };
    double margin{ 0.05 };
    std::string output;
    std::string output_format;

    int run(std::ostream &out, const bool human) const {
        const corpus population = load_inputs(corpus_opts, true);
        if (population.empty()) {
            throw data_error{ "no documents to sample from" };
        }
        if (!output.empty()) {
            for (const std::string &input : corpus_opts.inputs) {
                std::error_code ec;
                if (fs::equivalent(input, output, ec)) {
                    throw usage_error{ "--output " + output + " would overwrite the input file" };
                }
            }
        }

        sample_spec spec;
        spec.population = population.size();
        spec.confidence = confidence;
        spec.margin_of_error = margin;
        const std::size_t size = n.value_or(min_sample_size(spec));

        const corpus sample = retain_class.empty() ? stratified_sample(population, size, seed)
                                                   : sample_with_minority_retention(population, size, *parse_polarity(retain_class), seed);

        const corpus_format in_format = resolve_format(corpus_opts.inputs.front(), corpus_opts.declared_format());
        const corpus_format out_format = output_format.empty() ? in_format : *parse_corpus_format(output_format);

        if (output.empty()) {
            write_corpus(out, sample, out_format);
            return exit_ok;
        }
        {
            std::ofstream file{ output, std::ios::binary };
            if (!file) {
                throw data_error{ output + ": cannot open for writing" };
            }
            write_corpus(file, sample, out_format);
        }
        if (human) {
            out << "sampled " << sample.size() << " of " << population.size() << " documents (seed " << seed << ") into " << output << '\n';
            print_counts(out, class_distribution(sample));
            return exit_ok;
        }
        print_json(out, json{
                            { "population", population.size() },
                            { "sample_size", sample.size() },
                            { "requested", size },
                            { "seed", seed },
                            { "retained_class", retain_class.empty() ? json(nullptr) : json(retain_class) },
                            { "class_distribution", to_json(class_distribution(sample)) },
                            { "output", output },
                            { "format", to_string(out_format) },
                        });
        return exit_ok;
    }
};

//*************************************************************************************************************************************//
//                                                            evaluate                                                                 //
//*************************************************************************************************************************************//

using labeled_ids = std::vector<std::pair<std::string, polarity>>;

/// id + label records; text is not required. Dropped labels remove the record.
labeled_ids read_label_file(const fs::path &path, const corpus_format format, const label_mapping &mapping) {
    std::ifstream in{ path, std::ios::binary };
    if (!in) {
        throw data_error{ path.string() + ": cannot open file" };
    }
    const std::string origin = path.string();
    labeled_ids out;
    std::set<std::string> seen;

    const auto add = [&](const std::size_t row, std::string id, const std::string &raw) {
        const std::string where = origin + ":" + std::to_string(row) + ": ";
        if (id.empty()) {
            throw data_error{ where + "empty id" };
        }
        if (!seen.insert(id).second) {
            throw data_error{ where + "duplicate id '" + id + "'" };
        }
        const auto rule = mapping.lookup(raw);
        if (!rule) {
            throw data_error{ where + "unknown label '" + raw + "'; pass --label-map to map it" };
        }
        if (*rule) {
            out.emplace_back(std::move(id), **rule);
        }
    };

    if (format == corpus_format::csv) {
        const std::vector<csv::record> rows = csv::read(in, origin);
        if (rows.empty()) {
            throw data_error{ origin + ": empty file" };
        }
        const auto &header = rows.front().fields;
        const auto column = [&](const std::string &name) -> std::size_t {
            const auto it = std::find(header.begin(), header.end(), name);
            if (it == header.end()) {
                throw data_error{ origin + ":" + std::to_string(rows.front().line) + ": header has no '" + name + "' column" };
            }
            return static_cast<std::size_t>(it - header.begin());
        };
        const std::size_t id_col = column("id");
        const std::size_t label_col = column("label");
        for (std::size_t r = 1; r < rows.size(); ++r) {
            const csv::record &rec = rows[r];
            if (rec.fields.size() != header.size()) {
                throw data_error{ origin + ":" + std::to_string(rec.line) + ": expected " + std::to_string(header.size()) + " fields, got " + std::to_string(rec.fields.size()) };
            }
            add(rec.line, rec.fields[id_col], rec.fields[label_col]);
        }
        return out;
    }

    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error &e) {
            throw data_error{ origin + ":" + std::to_string(row) + ": invalid JSON (" + e.what() + ")" };
        }
        const auto id = j.find("id");
        const auto label = j.find("label");
        if (!j.is_object() || id == j.end() || label == j.end() || !label->is_string() || !(id->is_string() || id->is_number_integer())) {
            throw data_error{ origin + ":" + std::to_string(row) + ": expected an object with 'id' and string 'label'" };
        }
        add(row, id->is_string() ? id->get<std::string>() : id->dump(), label->get<std::string>());
    }
    return out;
}

std::string id_sample(const std::vector<std::string> &ids) {
    constexpr std::size_t shown = 5;
    std::vector<std::string> head(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(std::min(ids.size(), shown)));
    std::string s = joined(head);
    if (ids.size() > shown) {
        s += ", ... (" + std::to_string(ids.size()) + " in total)";
    }
    return s;
}

struct evaluate_command {
    std::string gold;
    std::string pred;
    std::string format;
    std::string label_map;

    int run(std::ostream &out, const bool human) const {
        const label_mapping mapping = label_map.empty() ? label_mapping::identity() : label_mapping::from_json_file(label_map);
        const std::optional<corpus_format> declared = format.empty() ? std::nullopt : parse_corpus_format(format);
        const labeled_ids g = read_label_file(gold, resolve_format(gold, declared), mapping);
        const labeled_ids p = read_label_file(pred, resolve_format(pred, declared), mapping);

        std::unordered_map<std::string, polarity> predicted(p.begin(), p.end());
        std::vector<polarity> gold_labels;
        std::vector<polarity> pred_labels;
        std::vector<std::string> missing;
        for (const auto &[id, label] : g) {
            const auto it = predicted.find(id);
            if (it == predicted.end()) {
                missing.push_back(id);
                continue;
            }
            gold_labels.push_back(label);
            pred_labels.push_back(it->second);
            predicted.erase(it);
        }
        if (!missing.empty()) {
            throw data_error{ pred + ": no prediction for gold id(s) " + id_sample(missing) };
        }
        if (!predicted.empty()) {
            std::vector<std::string> extra;
            for (const auto &[id, label] : p) {
                if (predicted.count(id) != 0) {
                    extra.push_back(id);
                }
            }
            throw data_error{ pred + ": id(s) absent from " + gold + ": " + id_sample(extra) };
        }
        if (gold_labels.empty()) {
            throw data_error{ gold + ": no labeled documents to evaluate" };
        }

        const classification_report report = make_classification_report(gold_labels, pred_labels);
        if (human) {
            out << "documents: " << report.samples << '\n'
                << std::left << std::setw(10) << "class" << std::right << std::setw(10) << "precision" << std::setw(10) << "recall" << std::setw(10) << "f1" << std::setw(10) << "support" << '\n';
            for (const polarity c : all_polarities) {
                const class_metrics &m = report[c];
                if (m.present) {
                    out << std::left << std::setw(10) << to_string(c) << std::right << std::setw(10) << fixed(m.precision) << std::setw(10) << fixed(m.recall) << std::setw(10) << fixed(m.f1) << std::setw(10) << m.support << '\n';
                }
            }
            out << "accuracy " << fixed(report.accuracy) << ", micro F1 " << fixed(report.micro_f1) << ", macro F1 " << fixed(report.macro_f1) << ", overall " << fixed(report.overall_score) << '\n';
            return exit_ok;
        }
        print_json(out, to_json(report));
        return exit_ok;
    }
};

//*************************************************************************************************************************************//
//                                                           agreement                                                                 //
//*************************************************************************************************************************************//

struct agreement_command {
    std::string ratings;
    bool votes{ false };

    int run(std::ostream &out, const bool human) const {
        std::ifstream in{ ratings, std::ios::binary };
        if (!in) {
            throw data_error{ ratings + ": cannot open file" };
        }
        const std::vector<csv::record> rows = csv::read(in, ratings);
        if (rows.size() < 2) {
            throw data_error{ ratings + ": expected a header and at least one item row" };
        }
        const std::vector<std::string> &header = rows.front().fields;
        if (header.size() < 3) {
            throw data_error{ ratings + ":" + std::to_string(rows.front().line) + ": expected an item column and at least two rater columns" };
        }

        std::vector<std::string> items;
        std::vector<std::vector<std::string>> labels;
        std::set<std::string> distinct;
        for (std::size_t r = 1; r < rows.size(); ++r) {
            const csv::record &rec = rows[r];
            const std::string where = ratings + ":" + std::to_string(rec.line) + ": ";
            if (rec.fields.size() != header.size()) {
                throw data_error{ where + "expected " + std::to_string(header.size()) + " fields, got " + std::to_string(rec.fields.size()) };
            }
            items.push_back(rec.fields.front());
            std::vector<std::string> row(rec.fields.begin() + 1, rec.fields.end());
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (row[k].empty()) {
                    throw data_error{ where + "no rating from rater '" + header[k + 1] + "'" };
                }
                distinct.insert(row[k]);
            }
            labels.push_back(std::move(row));
        }

        // polarity labels keep their natural order, anything else sorts
        std::vector<std::string> categories;
        if (std::all_of(distinct.begin(), distinct.end(), [](const std::string &s) { return parse_polarity(s).has_value(); })) {
            categories = polarity_names;
        } else {
            categories.assign(distinct.begin(), distinct.end());
        }
        std::map<std::string, std::size_t> category_index;
        for (std::size_t k = 0; k < categories.size(); ++k) {
            category_index[categories[k]] = k;
        }
        // a single category still needs a second (empty) column for the table
        const std::size_t columns = std::max<std::size_t>(categories.size(), 2);

        std::vector<std::vector<std::size_t>> choices;
        for (const auto &row : labels) {
            std::vector<std::size_t> c;
            for (const std::string &label : row) {
                c.push_back(category_index.at(label));
            }
            choices.push_back(std::move(c));
        }
        const rating_matrix matrix = rating_matrix::from_ratings(choices, columns);
        const agreement_result result = assess_agreement(matrix);

        json vote_list = json::array();
        if (votes) {
            for (std::size_t i = 0; i < items.size(); ++i) {
                const std::optional<std::string> winner = majority_vote<std::string>(labels[i]);
                vote_list.push_back(json{ { "item", items[i] }, { "label", winner ? json(*winner) : json(nullptr) } });
            }
        }

        if (human) {
            out << "items: " << matrix.items() << ", raters: " << matrix.raters() << ", categories: " << joined(categories) << '\n'
                << "kappa: " << (result.kappa ? fixed(*result.kappa) : std::string{ "undefined (one category only)" }) << '\n'
                << "raw agreement: " << fixed(result.raw_agreement) << '\n';
            if (result.interpretation) {
                out << "interpretation: " << to_string(*result.interpretation) << '\n';
            }
            for (const json &v : vote_list) {
                out << "vote " << v["item"].get<std::string>() << ": " << (v["label"].is_null() ? std::string{ "no majority" } : v["label"].get<std::string>()) << '\n';
            }
            return exit_ok;
        }
        json j{ { "items", matrix.items() }, { "raters", matrix.raters() }, { "categories", categories } };
        const json agreement = to_json(result);
        for (const auto &[key, value] : agreement.items()) {
            j[key] = value;
        }
        if (votes) {
            j["votes"] = std::move(vote_list);
        }
        print_json(out, j);
        return exit_ok;
    }
};

//*************************************************************************************************************************************//
//                                                           recommend                                                                 //
//*************************************************************************************************************************************//

void print_recommendation(std::ostream &out, const recommendation &rec) {
    out << std::left << std::setw(10) << "platform" << "points\n";
    for (const platform p : all_platforms) {
        out << std::left << std::setw(10) << short_code(p) << rec.scores[p] << '\n';
    }
    out << std::left << std::setw(10) << "Ambig" << rec.scores.ambiguous << '\n';
    if (rec.ambiguous) {
        out << "result: AMBIGUOUS\n";
    } else {
        out << "platform: " << joined(platform_names(rec.platforms)) << '\n';
    }
    out << "tools: " << joined(rec.tools) << '\n';
    for (const std::string &line : rec.rationale) {
        out << "  " << line << '\n';
    }
}

struct recommend_command {
    std::string answers;
    bool wizard{ false };
    std::string questions;
    std::string save_answers;
    std::string kb;
    std::size_t max_not_specified{ recommend_options{}.max_not_specified };
    corpus_options corpus_opts;
    textstats_options text_opts;

    int run(std::ostream &out, std::ostream &err, std::istream &in, const bool interactive, const bool human) const {
        if (answers.empty() == !wizard) {
            throw usage_error{ "pass exactly one of --answers FILE or --wizard" };
        }
        if (wizard && !interactive) {
            throw usage_error{ "--wizard needs an interactive terminal; pass --answers FILE instead" };
        }
        const loaded_knowledge_base loaded = load_knowledge_base(knowledge_base_path(kb));

        answers_file given;
        if (wizard) {
            const question_set qs = load_questions(questions.empty() ? default_questions_path() : fs::path{ questions });
            const std::optional<questionnaire_answers> result = run_wizard(in, err, qs, loaded.kb.features);
            if (!result) {
                err << "questionnaire aborted\n";
                return exit_usage_error;
            }
            given.answers = *result;
        } else {
            given = load_answers(answers);
        }

        std::optional<user_statistics> stats = given.statistics;
        if (!corpus_opts.inputs.empty()) {
            if (stats) {
                throw usage_error{ answers + " already holds statistics; drop them or omit --corpus" };
            }
            const corpus c = load_inputs(corpus_opts, false);
            const text_resources res = load_resources(text_opts);
            stats = auto_answers_from_corpus(c, res.dict, res.lexicon, text_opts.tokenizer(), worker_count(text_opts.threads));
        }

        if (!save_answers.empty()) {
            std::ofstream file{ save_answers, std::ios::binary };
            if (!file) {
                throw data_error{ save_answers + ": cannot open for writing" };
            }
            file << to_json(answers_file{ given.answers, stats }).dump(2) << '\n';
        }

        const recommendation rec = recommend(given.answers, stats, loaded.kb, recommend_options{ max_not_specified });
        if (human) {
            print_recommendation(out, rec);
        } else {
            print_json(out, to_json(rec));
        }
        return exit_ok;
    }
};

//*************************************************************************************************************************************//
//                                                               kb                                                                    //
//*************************************************************************************************************************************//

struct kb_command {
    std::string path;

    int dump(std::ostream &out, const bool human) const {
        const fs::path file = knowledge_base_path(path);
        const loaded_knowledge_base loaded = load_knowledge_base(file);
        const knowledge_base &kb = loaded.kb;
        const feature_interval_map mapping = kb.mapping();

        if (human) {
            out << std::left << std::setw(6) << "";
            for (const platform p : all_platforms) {
                out << std::setw(10) << short_code(p);
            }
            out << '\n';
            for (std::size_t i = 0; i < num_features; ++i) {
                out << std::left << std::setw(6) << feature_id(feature_at(i));
                for (const platform p : all_platforms) {
                    out << std::setw(10) << interval_label(mapping.at(feature_at(i), p));
                }
                out << kb.features[i].name << '\n';
            }
            for (const platform p : all_platforms) {
                const best_tool_result best = kb.best_tool(p);
                out << "best tool " << to_string(p) << ": " << joined(best.tools) << " (mean overall " << fixed(best.mean_overall) << " over " << best.datasets << " datasets)\n";
            }
            out << "fallback tools: " << joined(kb.fallback_tools) << '\n';
            return exit_ok;
        }

        json features = json::array();
        for (const feature_info &f : kb.features) {
            features.push_back(json{ { "id", feature_id(f.feature) }, { "name", f.name }, { "description", f.description } });
        }
        json best_tools = json::object();
        for (const platform p : all_platforms) {
            best_tools[std::string{ to_string(p) }] = to_json(kb.best_tool(p));
        }
        print_json(out, json{
                            { "schema_version", kb.schema_version },
                            { "features", std::move(features) },
                            { "mapping", to_json(mapping) },
                            { "best_tools", std::move(best_tools) },
                            { "fallback_tools", kb.fallback_tools },
                            { "integrity", to_json(loaded.report) },
                        });
        return exit_ok;
    }

    int check(std::ostream &out, const bool human) const {
        const fs::path file = knowledge_base_path(path);
        std::ifstream in{ file };
        if (!in) {
            throw data_error{ file.string() + ": cannot open knowledge base" };
        }
        const integrity_report report = parse_knowledge_base(in, file.string()).check_integrity();
        const bool clean = report.clean();
        if (human) {
            for (const integrity_flag &f : report.flags) {
                out << (f.known ? "known      " : "UNEXPECTED ") << to_string(f.kind) << ' ' << f.subject << ": " << f.detail << '\n';
            }
            out << (clean ? "ok" : "integrity check failed") << '\n';
        } else {
            json j = to_json(report);
            j["clean"] = clean;
            print_json(out, j);
        }
        return clean ? exit_ok : exit_data_error;
    }
};

}  // namespace

int run(const std::span<const std::string> args, std::ostream &out, std::ostream &err, std::istream &in, const bool interactive) {
    CLI::App app{ "Profile sentiment corpora and recommend a sentiment analysis tool", "sentiprofile" };
    app.require_subcommand(1);
    app.fallthrough();
    bool human = false;
    app.add_flag("--human", human, "Human-readable output instead of JSON");

    profile_command profile;
    CLI::App *profile_cmd = app.add_subcommand("profile", "Class distribution and text statistics of a corpus");
    add_corpus_options(profile_cmd, profile.corpus_opts, "--input", true);
    add_textstats_options(profile_cmd, profile.text_opts);

    sample_command sample;
    CLI::App *sample_cmd = app.add_subcommand("sample", "Seeded stratified sample of a labeled corpus");
    add_corpus_options(sample_cmd, sample.corpus_opts, "--input", true);
    sample_cmd->add_option("--n", sample.n, "Sample size; defaults to the minimum for --confidence and --margin");
    sample_cmd->add_option("--seed", sample.seed, "Random seed")->required();
    sample_cmd->add_option("--retain-class", sample.retain_class, "Keep every document of this class")->check(CLI::IsMember(polarity_names));
    sample_cmd->add_option("--confidence", sample.confidence, "Confidence level")->capture_default_str();
    sample_cmd->add_option("--margin", sample.margin, "Margin of error")->capture_default_str();
    sample_cmd->add_option("--output", sample.output, "Write the sample here instead of standard output");
    sample_cmd->add_option("--output-format", sample.output_format, "Format of the sample; defaults to the input format")->check(CLI::IsMember(format_names));

    evaluate_command evaluate;
    CLI::App *evaluate_cmd = app.add_subcommand("evaluate", "Classification report of predictions against gold labels");
    evaluate_cmd->add_option("--gold", evaluate.gold, "Gold labels (id, label)")->required();
    evaluate_cmd->add_option("--pred", evaluate.pred, "Predicted labels (id, label)")->required();
    add_format_option(evaluate_cmd, evaluate.format);
    evaluate_cmd->add_option("--label-map", evaluate.label_map, "JSON object mapping raw labels to polarities or \"drop\"");

    agreement_command agreement;
    CLI::App *agreement_cmd = app.add_subcommand("agreement", "Fleiss' kappa over an item x rater CSV");
    agreement_cmd->add_option("--ratings", agreement.ratings, "CSV with an item column followed by one column per rater")->required();
    agreement_cmd->add_flag("--votes", agreement.votes, "Also report the strict-majority label per item");

    recommend_command rec;
    CLI::App *recommend_cmd = app.add_subcommand("recommend", "Match answers (and statistics) to a platform and recommend tools");
    CLI::Option *answers_opt = recommend_cmd->add_option("--answers", rec.answers, "Answers JSON file");
    CLI::Option *wizard_opt = recommend_cmd->add_flag("--wizard", rec.wizard, "Answer the questionnaire interactively");
    answers_opt->excludes(wizard_opt);
    recommend_cmd->add_option("--questions", rec.questions, "Question texts for the wizard")->default_str(default_questions_path().string());
    recommend_cmd->add_option("--save-answers", rec.save_answers, "Write the answers (and statistics) as an answers file");
    recommend_cmd->add_option("--kb", rec.kb, "Knowledge base file")->default_str(default_knowledge_base_path().string());
    recommend_cmd->add_option("--max-not-specified", rec.max_not_specified, "Ambiguous when more answers than this are not specified")->capture_default_str();
    recommend_cmd->add_option("--corpus", rec.corpus_opts.inputs, "Corpus file(s) to derive statistics from")->expected(1, -1);
    add_format_option(recommend_cmd, rec.corpus_opts.format);
    recommend_cmd->add_flag("--strip-markup", rec.corpus_opts.strip_markup, "Remove HTML tags and decode entities");
    recommend_cmd->add_flag("--allow-empty-text", rec.corpus_opts.allow_empty_text, "Accept documents with empty text");
    add_textstats_options(recommend_cmd, rec.text_opts);

    kb_command kb;
    CLI::App *kb_cmd = app.add_subcommand("kb", "Inspect the knowledge base");
    kb_cmd->require_subcommand(1);
    CLI::App *kb_dump = kb_cmd->add_subcommand("dump", "Derived interval mapping and best tools");
    kb_dump->add_option("--kb", kb.path, "Knowledge base file")->default_str(default_knowledge_base_path().string());
    CLI::App *kb_check = kb_cmd->add_subcommand("check", "Integrity report");
    kb_check->add_option("--kb", kb.path, "Knowledge base file")->default_str(default_knowledge_base_path().string());

    std::vector<std::string> reversed(args.begin(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage_error;
    }

    try {
        if (profile_cmd->parsed()) {
            return profile.run(out, human);
        }
        if (sample_cmd->parsed()) {
            return sample.run(out, human);
        }
        if (evaluate_cmd->parsed()) {
            return evaluate.run(out, human);
        }
        if (agreement_cmd->parsed()) {
            return agreement.run(out, human);
        }
        if (recommend_cmd->parsed()) {
            return rec.run(out, err, in, interactive, human);
        }
        if (kb_dump->parsed()) {
            return kb.dump(out, human);
        }
        return kb.check(out, human);
    } catch (const usage_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage_error;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_data_error;
    }
}

}  // namespace sentiprofile::cli
