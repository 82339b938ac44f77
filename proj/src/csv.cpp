#include "sentiprofile/csv.hpp"

#include "sentiprofile/error.hpp"

#include <istream>   // std::istream
#include <iterator>  // std::istreambuf_iterator
#include <ostream>   // std::ostream
#include <string>    // std::string, std::to_string

namespace sentiprofile::csv {

std::vector<record> read(std::istream &in, const std::string_view origin) {
    const std::string data{ std::istreambuf_iterator<char>{ in }, std::istreambuf_iterator<char>{} };
    std::size_t pos = 0;
    if (data.starts_with("\xEF\xBB\xBF")) {
        pos = 3;
    }

    std::vector<record> records;
    std::size_t line = 1;
    const auto fail = [&](const std::size_t at_line, const std::string &what) {
        throw data_error{ std::string{ origin } + ":" + std::to_string(at_line) + ": " + what };
    };

    while (pos < data.size()) {
        record rec;
        rec.line = line;
        std::string field;
        bool end_of_record = false;
        while (!end_of_record) {
            if (pos < data.size() && data[pos] == '"') {
                // quoted field
                ++pos;
                while (true) {
                    if (pos >= data.size()) {
                        fail(rec.line, "unterminated quoted field");
                    }
                    const char c = data[pos++];
                    if (c == '"') {
                        if (pos < data.size() && data[pos] == '"') {
                            field.push_back('"');
                            ++pos;
                        } else {
                            break;
                        }
                    } else {
                        if (c == '\n') {
                            ++line;
                        }
                        field.push_back(c);
                    }
                }
                if (pos < data.size() && data[pos] != ',' && data[pos] != '\n' && data[pos] != '\r') {
                    fail(line, "unexpected character after closing quote");
                }
            } else {
                while (pos < data.size() && data[pos] != ',' && data[pos] != '\n' && data[pos] != '\r') {
                    if (data[pos] == '"') {
                        fail(line, "quote inside unquoted field");
                    }
                    field.push_back(data[pos++]);
                }
            }
            rec.fields.push_back(std::move(field));
            field.clear();

            if (pos >= data.size()) {
                end_of_record = true;
            } else if (data[pos] == ',') {
                ++pos;
            } else {
                if (data[pos] == '\r') {
                    ++pos;
                }
                if (pos < data.size() && data[pos] == '\n') {
                    ++pos;
                }
                ++line;
                end_of_record = true;
            }
        }
        // blank lines carry no record
        if (!(rec.fields.size() == 1 && rec.fields.front().empty())) {
            records.push_back(std::move(rec));
        }
    }
    return records;
}

std::string escape(const std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string{ field };
    }
    std::string out{ "\"" };
    for (const char c : field) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

void write_row(std::ostream &out, const std::span<const std::string> fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i != 0) {
            out << ',';
        }
        out << escape(fields[i]);
    }
    out << '\n';
}

}  // namespace sentiprofile::csv
