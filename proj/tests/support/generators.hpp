#ifndef SENTIPROFILE_TESTS_GENERATORS_HPP_
#define SENTIPROFILE_TESTS_GENERATORS_HPP_

// Small seeded generators for the property tests.

#include "sentiprofile/corpus.hpp"
#include "sentiprofile/polarity.hpp"

#include <cstddef>  // std::size_t
#include <cstdint>  // std::uint64_t
#include <random>   // std::mt19937_64, std::uniform_int_distribution
#include <string>   // std::string, std::to_string
#include <vector>   // std::vector

namespace sentiprofile::gen {

class source {
  public:
    explicit source(const std::uint64_t seed) :
        engine_{ seed } { }

    /// Uniform in [lo, hi].
    std::size_t between(const std::size_t lo, const std::size_t hi) { return std::uniform_int_distribution<std::size_t>{ lo, hi }(engine_); }

    bool coin(const double p_true = 0.5) { return std::bernoulli_distribution{ p_true }(engine_); }

    polarity label() { return all_polarities[between(0, num_polarities - 1)]; }

    std::vector<polarity> labels(const std::size_t n) {
        std::vector<polarity> out(n);
        for (polarity &p : out) {
            p = label();
        }
        return out;
    }

    /// Printable text mixing letters, punctuation, quotes, commas, line breaks
    /// and a few multi-byte characters.
    std::string text(const std::size_t max_len = 40) {
        static const std::vector<std::string> pieces{ "a", "B", "z", "Q", " ", " ", ",", "\"", "!", "?", ":)", "\n", "é", "😀", "x", "'", "-", "7", "<3", "\r\n" };
        std::string s;
        const std::size_t n = between(1, max_len);
        for (std::size_t i = 0; i < n; ++i) {
            s += pieces[between(0, pieces.size() - 1)];
        }
        if (s.find_first_not_of(" \r\n") == std::string::npos) {
            s += "w";
        }
        return s;
    }

    corpus labeled_corpus(const std::size_t n) {
        std::vector<document> docs;
        for (std::size_t i = 0; i < n; ++i) {
            const polarity p = label();
            docs.push_back(document{ "d" + std::to_string(i), text(), p, std::string{ to_string(p) } });
        }
        return corpus{ std::move(docs) };
    }

    std::mt19937_64 &engine() noexcept { return engine_; }

  private:
    std::mt19937_64 engine_;
};

/// Corpus with the given number of documents per class, in class blocks.
inline corpus corpus_with_classes(const std::size_t neg, const std::size_t neu, const std::size_t pos) {
    std::vector<document> docs;
    const auto add = [&](const std::size_t count, const polarity p) {
        for (std::size_t i = 0; i < count; ++i) {
            docs.push_back(document{ std::string{ to_string(p) } + "-" + std::to_string(i), "text " + std::to_string(i), p, std::string{ to_string(p) } });
        }
    };
    add(neg, polarity::negative);
    add(neu, polarity::neutral);
    add(pos, polarity::positive);
    return corpus{ std::move(docs) };
}

}  // namespace sentiprofile::gen

#endif  // SENTIPROFILE_TESTS_GENERATORS_HPP_
