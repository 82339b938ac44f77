#ifndef SENTIPROFILE_TEXTSTATS_HPP_
#define SENTIPROFILE_TEXTSTATS_HPP_

#include "sentiprofile/corpus.hpp"

#include <array>          // std::array
#include <cstddef>        // std::size_t
#include <filesystem>     // std::filesystem::path
#include <iosfwd>         // std::istream
#include <optional>       // std::optional
#include <span>           // std::span
#include <string>         // std::string
#include <string_view>    // std::string_view
#include <unordered_set>  // std::unordered_set
#include <vector>         // std::vector

namespace sentiprofile {

/// Word tokens are maximal runs of letters, joined by single internal
/// apostrophes or hyphens ("don't", "well-known").
struct tokenizer_config {
    /// Whitespace-delimited chunks starting with a URL scheme or "www." yield no tokens.
    bool skip_urls{ true };
    /// Text between backticks yields no tokens.
    bool skip_code{ false };
};

/// Case-insensitive word list used for spelling-mistake counting.
class dictionary {
  public:
    /// One word per line; '#' comment lines and blank lines are ignored.
    /// Throws data_error if the file cannot be read or holds no words.
    [[nodiscard]] static dictionary load(const std::filesystem::path &path);
    [[nodiscard]] static dictionary from_stream(std::istream &in, std::string_view origin);
    [[nodiscard]] static dictionary from_words(std::span<const std::string> words);

    [[nodiscard]] bool contains(std::string_view word) const;
    [[nodiscard]] std::size_t size() const noexcept { return words_.size(); }

  private:
    dictionary() = default;
    std::unordered_set<std::string> words_;
};

/// ASCII emoticons matched as whole whitespace-delimited chunks, plus Unicode
/// emoji detected by code point.
class emoticon_lexicon {
  public:
    [[nodiscard]] static emoticon_lexicon load(const std::filesystem::path &path);
    [[nodiscard]] static emoticon_lexicon from_stream(std::istream &in, std::string_view origin);
    [[nodiscard]] static emoticon_lexicon from_entries(std::span<const std::string> entries);

    [[nodiscard]] bool contains(std::string_view chunk) const;
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }

    /// Lexicon matches plus emoji clusters found anywhere in `text`.
    [[nodiscard]] std::size_t count(std::string_view text) const;

  private:
    emoticon_lexicon() = default;
    std::unordered_set<std::string> entries_;
};

/// Tokens are views into `text`. When `skip` is given, chunks that are
/// lexicon emoticons produce no word tokens (":D" is not the word "D").
[[nodiscard]] std::vector<std::string_view> tokenize(std::string_view text, const tokenizer_config &config = {}, const emoticon_lexicon *skip = nullptr);

struct doc_counts {
    std::size_t chars{ 0 };
    std::size_t words{ 0 };
    std::size_t alpha_chars{ 0 };
    std::size_t capitalized_words{ 0 };
    std::size_t spelling_mistakes{ 0 };
    std::size_t emoticons{ 0 };
    std::size_t question_marks{ 0 };
    std::size_t exclamation_marks{ 0 };

    friend bool operator==(const doc_counts &, const doc_counts &) = default;
};

/// Raw per-document counts:
///   chars             Unicode scalar values in the raw text, whitespace included
///   words             word tokens
///   alpha_chars       letters inside word tokens
///   capitalized_words tokens with at least two letters, all uppercase
///   spelling_mistakes tokens absent from the dictionary; tokens glued to
///                     digits or '_', and '@'/'#' handles, are not candidates
[[nodiscard]] doc_counts count_document(std::string_view text, const dictionary &dict, const emoticon_lexicon &lexicon, const tokenizer_config &config = {});

enum class statistic {
    chars_per_doc,
    chars_per_word,
    words_per_doc,
    capitalized_words,
    spelling_mistakes,
    emoticons,
    question_marks,
    exclamation_marks
};

inline constexpr std::size_t num_statistics = 8;
inline constexpr std::array<statistic, num_statistics> all_statistics{
    statistic::chars_per_doc, statistic::chars_per_word, statistic::words_per_doc, statistic::capitalized_words,
    statistic::spelling_mistakes, statistic::emoticons, statistic::question_marks, statistic::exclamation_marks
};

/// Field names used in JSON and in the knowledge base ("avg_chars_per_doc", ...).
[[nodiscard]] std::string_view to_string(statistic s) noexcept;
[[nodiscard]] std::optional<statistic> parse_statistic(std::string_view s) noexcept;

/// The eight per-document averages, indexed by `statistic`.
struct text_statistics {
    std::array<double, num_statistics> values{};

    [[nodiscard]] double operator[](const statistic s) const noexcept { return values[static_cast<std::size_t>(s)]; }
    [[nodiscard]] double &operator[](const statistic s) noexcept { return values[static_cast<std::size_t>(s)]; }

    friend bool operator==(const text_statistics &, const text_statistics &) = default;
};

/// Averages over per-document counts, summed in document order so the result
/// does not depend on `threads`. chars_per_word is the mean of the per-document
/// alpha_chars/words ratios, with zero-word documents contributing 0.
/// Throws std::invalid_argument on an empty corpus.
[[nodiscard]] text_statistics corpus_statistics(const corpus &c, const dictionary &dict, const emoticon_lexicon &lexicon, const tokenizer_config &config = {}, unsigned threads = 1);

namespace unicode {

/// Decodes one scalar value starting at `pos` and advances it. Invalid bytes
/// decode as U+FFFD, one byte at a time.
[[nodiscard]] char32_t next(std::string_view text, std::size_t &pos) noexcept;
[[nodiscard]] std::size_t count_scalars(std::string_view text) noexcept;
[[nodiscard]] bool is_letter(char32_t cp) noexcept;
[[nodiscard]] bool is_upper(char32_t cp) noexcept;
[[nodiscard]] bool is_emoji(char32_t cp) noexcept;
/// Lowercases ASCII and Latin-1 letters; other code points pass through.
[[nodiscard]] std::string to_lower(std::string_view text);

}  // namespace unicode

}  // namespace sentiprofile

#endif  // SENTIPROFILE_TEXTSTATS_HPP_
