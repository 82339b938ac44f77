#include "sentiprofile/textstats.hpp"

#include "sentiprofile/error.hpp"

#include <algorithm>  // std::min, std::max
#include <fstream>    // std::ifstream
#include <istream>    // std::istream, std::getline
#include <stdexcept>  // std::invalid_argument
#include <thread>     // std::jthread
#include <utility>    // std::pair

namespace sentiprofile {

//*************************************************************************************************************************************//
//                                                             unicode                                                                 //
//*************************************************************************************************************************************//

namespace unicode {

char32_t next(const std::string_view text, std::size_t &pos) noexcept {
    constexpr char32_t replacement = 0xFFFD;
    const auto byte = [&](const std::size_t i) { return static_cast<unsigned char>(text[i]); };
    const unsigned char lead = byte(pos);
    std::size_t len = 0;
    char32_t cp = 0;
    if (lead < 0x80) {
        ++pos;
        return lead;
    } else if ((lead & 0xE0) == 0xC0) {
        len = 2;
        cp = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
        len = 3;
        cp = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
        len = 4;
        cp = lead & 0x07;
    } else {
        ++pos;
        return replacement;
    }
    if (pos + len > text.size()) {
        ++pos;
        return replacement;
    }
    for (std::size_t i = 1; i < len; ++i) {
        const unsigned char b = byte(pos + i);
        if ((b & 0xC0) != 0x80) {
            ++pos;
            return replacement;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    pos += len;
    return cp;
}

std::size_t count_scalars(const std::string_view text) noexcept {
    std::size_t n = 0;
    for (std::size_t pos = 0; pos < text.size(); ++n) {
        static_cast<void>(next(text, pos));
    }
    return n;
}

namespace {

struct range {
    char32_t lo;
    char32_t hi;
};

template <std::size_t N>
constexpr bool in_ranges(const char32_t cp, const range (&table)[N]) noexcept {
    for (const range &r : table) {
        if (cp >= r.lo && cp <= r.hi) {
            return true;
        }
    }
    return false;
}

constexpr range letter_ranges[] = {
    { 0x41, 0x5A }, { 0x61, 0x7A }, { 0xAA, 0xAA }, { 0xB5, 0xB5 }, { 0xBA, 0xBA }, { 0xC0, 0xD6 }, { 0xD8, 0xF6 }, { 0xF8, 0x2AF },
    { 0x370, 0x373 }, { 0x376, 0x377 }, { 0x37B, 0x37D }, { 0x386, 0x386 }, { 0x388, 0x3FF }, { 0x400, 0x481 }, { 0x48A, 0x52F },
    { 0x531, 0x556 }, { 0x561, 0x587 }, { 0x5D0, 0x5EA }, { 0x620, 0x64A }, { 0x671, 0x6D3 }, { 0x904, 0x939 }, { 0x1E00, 0x1FFF },
    { 0x3041, 0x3096 }, { 0x30A1, 0x30FA }, { 0x4E00, 0x9FFF }, { 0xAC00, 0xD7A3 }
};

constexpr range emoji_ranges[] = {
    { 0x1F000, 0x1F02F }, { 0x1F0CF, 0x1F0CF }, { 0x1F170, 0x1F251 }, { 0x1F300, 0x1F3FA }, { 0x1F400, 0x1FAFF },
    { 0x2600, 0x27BF }, { 0x231A, 0x231B }, { 0x23E9, 0x23F3 }, { 0x23F8, 0x23FA }, { 0x2B05, 0x2B07 }, { 0x2B1B, 0x2B1C },
    { 0x2B50, 0x2B50 }, { 0x2B55, 0x2B55 }, { 0x3030, 0x3030 }, { 0x303D, 0x303D }, { 0x3297, 0x3297 }, { 0x3299, 0x3299 }
};

// code points that attach to a preceding emoji
constexpr range emoji_modifiers[] = {
    { 0x1F3FB, 0x1F3FF }, { 0xFE0E, 0xFE0F }, { 0x20E3, 0x20E3 }, { 0xE0020, 0xE007F }
};

constexpr bool is_regional_indicator(const char32_t cp) noexcept { return cp >= 0x1F1E6 && cp <= 0x1F1FF; }

// Case pairs outside ASCII: uppercase range start, length, offset to lowercase.
struct case_block {
    char32_t upper_lo;
    char32_t upper_hi;
    char32_t offset;
    bool alternating;  // upper/lower interleave (Latin Extended-A style)
};

constexpr case_block case_blocks[] = {
    { 0xC0, 0xD6, 0x20, false },
    { 0xD8, 0xDE, 0x20, false },
    { 0x100, 0x137, 1, true },
    { 0x139, 0x148, 1, true },
    { 0x14A, 0x177, 1, true },
    { 0x391, 0x3A1, 0x20, false },
    { 0x3A3, 0x3A9, 0x20, false },
    { 0x400, 0x40F, 0x50, false },
    { 0x410, 0x42F, 0x20, false },
};

constexpr std::optional<char32_t> lower_of(const char32_t cp) noexcept {
    if (cp >= 'A' && cp <= 'Z') {
        return cp + 0x20;
    }
    for (const case_block &b : case_blocks) {
        if (cp < b.upper_lo || cp > b.upper_hi) {
            continue;
        }
        if (b.alternating && ((cp - b.upper_lo) % 2 != 0)) {
            return std::nullopt;
        }
        return cp + b.offset;
    }
    return std::nullopt;
}

void append_utf8(std::string &out, const char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

}  // namespace

bool is_letter(const char32_t cp) noexcept { return in_ranges(cp, letter_ranges); }

bool is_upper(const char32_t cp) noexcept { return lower_of(cp).has_value(); }

bool is_emoji(const char32_t cp) noexcept { return in_ranges(cp, emoji_ranges) || is_regional_indicator(cp); }

std::string to_lower(const std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t pos = 0; pos < text.size();) {
        const std::size_t start = pos;
        const char32_t cp = next(text, pos);
        if (const auto lower = lower_of(cp)) {
            append_utf8(out, *lower);
        } else if (cp == 0x2019) {
            out.push_back('\'');  // typographic apostrophe
        } else {
            out.append(text.substr(start, pos - start));
        }
    }
    return out;
}

}  // namespace unicode

//*************************************************************************************************************************************//
//                                                            tokenizer                                                                //
//*************************************************************************************************************************************//

namespace {

constexpr bool is_space(const char c) noexcept {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

constexpr bool is_joiner(const char32_t cp) noexcept {
    return cp == '\'' || cp == '-' || cp == 0x2019;
}

constexpr bool is_ascii_alpha(const char c) noexcept {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool looks_like_url(const std::string_view chunk) noexcept {
    if (chunk.starts_with("www.")) {
        return true;
    }
    // scheme = ALPHA *( ALPHA / DIGIT / "+" / "-" / "." ) "://"
    const std::size_t sep = chunk.find("://");
    if (sep == std::string_view::npos || sep == 0) {
        return false;
    }
    std::size_t start = 0;
    // tolerate a leading bracket or quote: "(https://..."
    while (start < sep && (chunk[start] == '(' || chunk[start] == '<' || chunk[start] == '"' || chunk[start] == '[')) {
        ++start;
    }
    if (start >= sep || !is_ascii_alpha(chunk[start])) {
        return false;
    }
    for (std::size_t i = start + 1; i < sep; ++i) {
        const char c = chunk[i];
        if (!is_ascii_alpha(c) && !(c >= '0' && c <= '9') && c != '+' && c != '-' && c != '.') {
            return false;
        }
    }
    return true;
}

// Splits `text` into whitespace-delimited chunks, calling f(chunk, offset).
template <typename F>
void for_each_chunk(const std::string_view text, F &&f) {
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) {
            ++i;
        }
        const std::size_t start = i;
        while (i < text.size() && !is_space(text[i])) {
            ++i;
        }
        if (i > start) {
            f(text.substr(start, i - start), start);
        }
    }
}

}  // namespace

std::vector<std::string_view> tokenize(const std::string_view text, const tokenizer_config &config, const emoticon_lexicon *skip) {
    std::vector<std::string_view> tokens;
    bool in_code = false;

    for_each_chunk(text, [&](const std::string_view chunk, const std::size_t offset) {
        const bool whole_chunk_skipped = (config.skip_urls && looks_like_url(chunk)) || (skip != nullptr && skip->contains(chunk));
        std::size_t pos = 0;
        std::optional<std::size_t> token_start;
        std::size_t token_end = 0;
        // pending joiner: the token may continue if a letter follows
        bool after_joiner = false;

        const auto flush = [&]() {
            if (token_start) {
                if (!whole_chunk_skipped) {
                    tokens.push_back(text.substr(offset + *token_start, token_end - *token_start));
                }
                token_start.reset();
            }
            after_joiner = false;
        };

        while (pos < chunk.size()) {
            const std::size_t cp_start = pos;
            const char32_t cp = unicode::next(chunk, pos);
            if (config.skip_code && cp == '`') {
                flush();
                in_code = !in_code;
                continue;
            }
            if (in_code) {
                continue;
            }
            if (unicode::is_letter(cp)) {
                if (!token_start) {
                    token_start = cp_start;
                }
                token_end = pos;
                after_joiner = false;
            } else if (token_start && !after_joiner && is_joiner(cp)) {
                after_joiner = true;
            } else {
                flush();
            }
        }
        flush();
    });
    return tokens;
}

//*************************************************************************************************************************************//
//                                                       dictionary & lexicon                                                          //
//*************************************************************************************************************************************//

namespace {

std::vector<std::string> read_entries(std::istream &in) {
    std::vector<std::string> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        const std::size_t last = line.find_last_not_of(" \t");
        entries.push_back(line.substr(first, last - first + 1));
    }
    return entries;
}

}  // namespace

dictionary dictionary::from_words(const std::span<const std::string> words) {
    dictionary d;
    d.words_.reserve(words.size());
    for (const std::string &w : words) {
        if (!w.empty()) {
            d.words_.insert(unicode::to_lower(w));
        }
    }
    if (d.words_.empty()) {
        throw data_error{ "dictionary holds no words" };
    }
    return d;
}

dictionary dictionary::from_stream(std::istream &in, const std::string_view origin) {
    const std::vector<std::string> words = read_entries(in);
    if (words.empty()) {
        throw data_error{ std::string{ origin } + ": dictionary holds no words" };
    }
    return from_words(words);
}

dictionary dictionary::load(const std::filesystem::path &path) {
    std::ifstream in{ path };
    if (!in) {
        throw data_error{ path.string() + ": cannot open dictionary" };
    }
    return from_stream(in, path.string());
}

bool dictionary::contains(const std::string_view word) const {
    const std::string lower = unicode::to_lower(word);
    if (words_.contains(lower)) {
        return true;
    }
    if (lower.ends_with("'s") && lower.size() > 2 && words_.contains(lower.substr(0, lower.size() - 2))) {
        return true;
    }
    if (lower.find('-') != std::string::npos) {
        std::size_t start = 0;
        while (start <= lower.size()) {
            const std::size_t dash = std::min(lower.find('-', start), lower.size());
            const std::string part = lower.substr(start, dash - start);
            if (part.empty() || !contains(part)) {
                return false;
            }
            start = dash + 1;
        }
        return true;
    }
    return false;
}

emoticon_lexicon emoticon_lexicon::from_entries(const std::span<const std::string> entries) {
    emoticon_lexicon lex;
    for (const std::string &e : entries) {
        if (!e.empty()) {
            lex.entries_.insert(e);
        }
    }
    return lex;
}

emoticon_lexicon emoticon_lexicon::from_stream(std::istream &in, const std::string_view origin) {
    const std::vector<std::string> entries = read_entries(in);
    if (entries.empty()) {
        throw data_error{ std::string{ origin } + ": emoticon lexicon holds no entries" };
    }
    return from_entries(entries);
}

emoticon_lexicon emoticon_lexicon::load(const std::filesystem::path &path) {
    std::ifstream in{ path };
    if (!in) {
        throw data_error{ path.string() + ": cannot open emoticon lexicon" };
    }
    return from_stream(in, path.string());
}

bool emoticon_lexicon::contains(const std::string_view chunk) const {
    return entries_.contains(std::string{ chunk });
}

std::size_t emoticon_lexicon::count(const std::string_view text) const {
    std::size_t n = 0;
    for_each_chunk(text, [&](const std::string_view chunk, std::size_t) {
        if (contains(chunk)) {
            ++n;
        }
    });

    // emoji clusters: modifiers, ZWJ sequences and flag pairs count once
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char32_t cp = unicode::next(text, pos);
        if (!unicode::is_emoji(cp)) {
            continue;
        }
        ++n;
        bool pending_flag_half = cp >= 0x1F1E6 && cp <= 0x1F1FF;
        while (pos < text.size()) {
            std::size_t look = pos;
            const char32_t follower = unicode::next(text, look);
            if (unicode::in_ranges(follower, unicode::emoji_modifiers)) {
                pos = look;
            } else if (follower == 0x200D) {
                pos = look;
                if (pos < text.size()) {
                    std::size_t after = pos;
                    if (unicode::is_emoji(unicode::next(text, after))) {
                        pos = after;
                    }
                }
            } else if (pending_flag_half && follower >= 0x1F1E6 && follower <= 0x1F1FF) {
                pos = look;
                pending_flag_half = false;
            } else {
                break;
            }
        }
    }
    return n;
}

//*************************************************************************************************************************************//
//                                                             counting                                                                //
//*************************************************************************************************************************************//

doc_counts count_document(const std::string_view text, const dictionary &dict, const emoticon_lexicon &lexicon, const tokenizer_config &config) {
    doc_counts counts;
    counts.chars = unicode::count_scalars(text);
    for (const char c : text) {
        if (c == '?') {
            ++counts.question_marks;
        } else if (c == '!') {
            ++counts.exclamation_marks;
        }
    }
    counts.emoticons = lexicon.count(text);

    const std::vector<std::string_view> tokens = tokenize(text, config, &lexicon);
    counts.words = tokens.size();
    for (const std::string_view token : tokens) {
        std::size_t letters = 0;
        bool all_upper = true;
        for (std::size_t pos = 0; pos < token.size();) {
            const char32_t cp = unicode::next(token, pos);
            if (unicode::is_letter(cp)) {
                ++letters;
                all_upper = all_upper && unicode::is_upper(cp);
            }
        }
        counts.alpha_chars += letters;
        if (letters >= 2 && all_upper) {
            ++counts.capitalized_words;
        }

        const std::size_t begin = static_cast<std::size_t>(token.data() - text.data());
        const std::size_t end = begin + token.size();
        const auto glued = [](const char c) { return (c >= '0' && c <= '9') || c == '_'; };
        const bool handle = begin > 0 && (text[begin - 1] == '@' || text[begin - 1] == '#');
        const bool identifier = (begin > 0 && glued(text[begin - 1])) || (end < text.size() && glued(text[end]));
        if (!handle && !identifier && !dict.contains(token)) {
            ++counts.spelling_mistakes;
        }
    }
    return counts;
}

namespace {

constexpr std::pair<statistic, std::string_view> statistic_names[] = {
    { statistic::chars_per_doc, "avg_chars_per_doc" },
    { statistic::chars_per_word, "avg_chars_per_word" },
    { statistic::words_per_doc, "avg_words_per_doc" },
    { statistic::capitalized_words, "avg_capitalized_words" },
    { statistic::spelling_mistakes, "avg_spelling_mistakes" },
    { statistic::emoticons, "avg_emoticons" },
    { statistic::question_marks, "avg_question_marks" },
    { statistic::exclamation_marks, "avg_exclamation_marks" },
};

}  // namespace

std::string_view to_string(const statistic s) noexcept {
    return statistic_names[static_cast<std::size_t>(s)].second;
}

std::optional<statistic> parse_statistic(const std::string_view s) noexcept {
    for (const auto &[stat, name] : statistic_names) {
        if (name == s) {
            return stat;
        }
    }
    return std::nullopt;
}

text_statistics corpus_statistics(const corpus &c, const dictionary &dict, const emoticon_lexicon &lexicon, const tokenizer_config &config, const unsigned threads) {
    if (c.empty()) {
        throw std::invalid_argument{ "cannot compute statistics of an empty corpus" };
    }
    std::vector<doc_counts> per_doc(c.size());
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, c.size());
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (c.size() + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(c.size(), lo + chunk);
            const auto job = [&, lo, hi]() {
                for (std::size_t i = lo; i < hi; ++i) {
                    per_doc[i] = count_document(c[i].text, dict, lexicon, config);
                }
            };
            if (w + 1 == workers) {
                job();
            } else {
                pool.emplace_back(job);
            }
        }
    }

    text_statistics sums;
    for (const doc_counts &d : per_doc) {
        sums[statistic::chars_per_doc] += static_cast<double>(d.chars);
        sums[statistic::chars_per_word] += d.words == 0 ? 0.0 : static_cast<double>(d.alpha_chars) / static_cast<double>(d.words);
        sums[statistic::words_per_doc] += static_cast<double>(d.words);
        sums[statistic::capitalized_words] += static_cast<double>(d.capitalized_words);
        sums[statistic::spelling_mistakes] += static_cast<double>(d.spelling_mistakes);
        sums[statistic::emoticons] += static_cast<double>(d.emoticons);
        sums[statistic::question_marks] += static_cast<double>(d.question_marks);
        sums[statistic::exclamation_marks] += static_cast<double>(d.exclamation_marks);
    }
    const auto n = static_cast<double>(c.size());
    for (double &v : sums.values) {
        v /= n;
    }
    return sums;
}

}  // namespace sentiprofile
