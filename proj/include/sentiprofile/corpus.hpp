#ifndef SENTIPROFILE_CORPUS_HPP_
#define SENTIPROFILE_CORPUS_HPP_

#include "sentiprofile/polarity.hpp"

#include <cstddef>      // std::size_t
#include <filesystem>   // std::filesystem::path
#include <iosfwd>       // std::istream, std::ostream
#include <map>          // std::map
#include <optional>     // std::optional
#include <span>         // std::span
#include <string>       // std::string
#include <string_view>  // std::string_view
#include <vector>       // std::vector

namespace sentiprofile {

/// One communication unit (comment, review, message).
///
/// `raw_label` keeps the label string exactly as read from the file, `label`
/// is the resolved polarity. A document without a label column value has
/// neither.
struct document {
    std::string id;
    std::string text;
    std::optional<polarity> label;
    std::optional<std::string> raw_label;
};

/// Equality over (id, text, label); the raw label is provenance only.
[[nodiscard]] bool operator==(const document &lhs, const document &rhs);

enum class corpus_format {
    csv,
    jsonl
};

[[nodiscard]] std::string_view to_string(corpus_format f) noexcept;
[[nodiscard]] std::optional<corpus_format> parse_corpus_format(std::string_view s) noexcept;
/// Picks the format from the file extension (.csv, .jsonl, .json).
[[nodiscard]] std::optional<corpus_format> format_from_extension(const std::filesystem::path &path);

/// Ordered, id-unique collection of documents. Immutable once built.
class corpus {
  public:
    corpus() = default;
    /// Throws data_error on duplicate or empty ids.
    explicit corpus(std::vector<document> docs, std::optional<std::string> source = std::nullopt);

    [[nodiscard]] const std::vector<document> &documents() const noexcept { return docs_; }
    [[nodiscard]] const std::optional<std::string> &source() const noexcept { return source_; }
    [[nodiscard]] std::size_t size() const noexcept { return docs_.size(); }
    [[nodiscard]] bool empty() const noexcept { return docs_.empty(); }
    [[nodiscard]] const document &operator[](const std::size_t i) const { return docs_[i]; }
    [[nodiscard]] auto begin() const noexcept { return docs_.begin(); }
    [[nodiscard]] auto end() const noexcept { return docs_.end(); }

    /// True if every document carries a resolved polarity.
    [[nodiscard]] bool fully_labeled() const noexcept;

    friend bool operator==(const corpus &lhs, const corpus &rhs) { return lhs.docs_ == rhs.docs_; }

  private:
    std::vector<document> docs_;
    std::optional<std::string> source_;
};

/// Raw label string -> polarity, or drop. Raw labels are case-sensitive.
class label_mapping {
  public:
    label_mapping() = default;

    /// "negative" -> negative, "neutral" -> neutral, "positive" -> positive.
    [[nodiscard]] static label_mapping identity();
    /// JSON object such as {"Excited": "positive", "Sarcasm": "drop"}.
    [[nodiscard]] static label_mapping from_json_file(const std::filesystem::path &path);
    [[nodiscard]] static label_mapping from_json_string(std::string_view json, std::string_view origin = "<string>");

    label_mapping &map(std::string raw, polarity target);
    label_mapping &drop(std::string raw);

    /// nullopt if the raw label has no rule; an inner nullopt means drop.
    [[nodiscard]] std::optional<std::optional<polarity>> lookup(const std::string &raw) const;
    [[nodiscard]] std::size_t size() const noexcept { return rules_.size(); }

  private:
    std::map<std::string, std::optional<polarity>> rules_;
};

/// Maps every raw label through `mapping`, dropping documents whose rule is
/// drop. Documents without a raw label pass through unlabeled. Throws
/// data_error listing all unmapped raw labels.
[[nodiscard]] corpus apply_label_mapping(const corpus &c, const label_mapping &mapping);

struct ingest_options {
    /// Used to resolve raw labels; when absent the identity mapping applies.
    std::optional<label_mapping> mapping;
    /// Keep raw labels unresolved instead of failing on unknown strings.
    bool resolve_labels{ true };
    bool allow_empty_text{ false };
    /// Remove HTML tags and decode the common entities before storing text.
    bool strip_markup{ false };
};

/// Reads a corpus in the declared format. Records without an id get their
/// zero-based record index, zero-padded to at least six digits.
/// Throws data_error naming the file and row on malformed input.
[[nodiscard]] corpus load_corpus(const std::filesystem::path &path, corpus_format format, const ingest_options &options = {});
[[nodiscard]] corpus read_corpus(std::istream &in, corpus_format format, const ingest_options &options = {}, std::string_view origin = "<stream>");

/// Writes id, text and label (the resolved polarity when present, else the
/// raw label) in the given format.
void write_corpus(std::ostream &out, const corpus &c, corpus_format format);

/// Concatenates corpora in argument order. With more than one input, ids are
/// prefixed with the corpus source tag (or its position) to keep them unique.
[[nodiscard]] corpus pool(std::span<const corpus> parts);

struct class_counts {
    std::size_t negative{ 0 };
    std::size_t neutral{ 0 };
    std::size_t positive{ 0 };
    std::size_t unlabeled{ 0 };

    [[nodiscard]] std::size_t of(polarity p) const noexcept;
    [[nodiscard]] std::size_t total() const noexcept { return negative + neutral + positive + unlabeled; }

    friend bool operator==(const class_counts &, const class_counts &) = default;
};

[[nodiscard]] class_counts class_distribution(const corpus &c);

/// Removes HTML tags and decodes &amp; &lt; &gt; &quot; &#39; &nbsp;.
[[nodiscard]] std::string strip_markup(std::string_view text);

}  // namespace sentiprofile

#endif  // SENTIPROFILE_CORPUS_HPP_
