#ifndef SENTIPROFILE_TESTS_FIXTURES_HPP_
#define SENTIPROFILE_TESTS_FIXTURES_HPP_

#include "sentiprofile/corpus.hpp"

#include <cstddef>  // std::size_t
#include <string>   // std::string
#include <vector>   // std::vector

namespace sentiprofile::fixture {

/// 100 documents whose per-document averages sit on the GitHub statistics:
/// 16555 characters, 2778 words, 44 all-caps words, 297 misspellings,
/// 40 emoticons, 24 question marks and 48 exclamation marks in total, with
/// about 4.54 letters per word (closest to GitHub's 4.53).
inline corpus github_like_corpus() {
    constexpr std::size_t docs = 100;
    const std::vector<std::string> four{ "code", "test", "work", "file", "line", "able" };
    const std::vector<std::string> five{ "merge", "build", "fixed", "tests", "issue" };

    std::vector<document> out;
    for (std::size_t d = 0; d < docs; ++d) {
        const std::size_t words = d < 78 ? 28 : 27;
        const std::size_t typos = d < 97 ? 3 : 2;
        const bool caps = d < 44;

        std::vector<std::string> tokens;
        if (caps) {
            tokens.emplace_back("THE");
        }
        for (std::size_t t = 0; t < typos; ++t) {
            tokens.emplace_back("qzxvk");
        }
        // fill with a five/four-letter mix that lands near 4.53 letters per word
        std::size_t letters = 0;
        for (const std::string &t : tokens) {
            letters += t.size();
        }
        while (tokens.size() < words) {
            const double target = 4.53 * static_cast<double>(tokens.size() + 1);
            const bool long_word = static_cast<double>(letters + 4) < target;
            const std::string &w = long_word ? five[tokens.size() % five.size()] : four[tokens.size() % four.size()];
            tokens.push_back(w);
            letters += w.size();
        }

        std::string text;
        for (const std::string &t : tokens) {
            text += text.empty() ? t : " " + t;
        }
        if (d < 24) {
            text += "?";
        }
        if (d < 48) {
            text += "!";
        }
        if (d < 40) {
            text += " :)";
        }
        const std::size_t chars = d < 55 ? 166 : 165;
        if (text.size() < chars) {
            text.append(chars - text.size(), ' ');
        }
        out.push_back(document{ "gh" + std::to_string(d), text, {}, {} });
    }
    return corpus{ std::move(out) };
}

}  // namespace sentiprofile::fixture

#endif  // SENTIPROFILE_TESTS_FIXTURES_HPP_
