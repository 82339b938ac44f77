#ifndef SENTIPROFILE_CSV_HPP_
#define SENTIPROFILE_CSV_HPP_

#include <cstddef>      // std::size_t
#include <iosfwd>       // std::istream, std::ostream
#include <span>         // std::span
#include <string>       // std::string
#include <string_view>  // std::string_view
#include <vector>       // std::vector

namespace sentiprofile::csv {

struct record {
    /// 1-based line on which the record starts.
    std::size_t line{ 0 };
    std::vector<std::string> fields;
};

/// RFC 4180 reader: quoted fields may contain separators, doubled quotes and
/// line breaks; CRLF and LF are both accepted. A UTF-8 BOM is skipped.
/// Throws data_error (prefixed with `origin`) on an unterminated quote or
/// stray characters after a closing quote.
[[nodiscard]] std::vector<record> read(std::istream &in, std::string_view origin);

/// Quotes a field when it contains a comma, quote, CR or LF.
[[nodiscard]] std::string escape(std::string_view field);
void write_row(std::ostream &out, std::span<const std::string> fields);

}  // namespace sentiprofile::csv

#endif  // SENTIPROFILE_CSV_HPP_
