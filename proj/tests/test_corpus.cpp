#include "sentiprofile/corpus.hpp"
#include "sentiprofile/csv.hpp"
#include "sentiprofile/error.hpp"

#include "support/generators.hpp"

#include "doctest.h"

#include <algorithm>  // std::shuffle
#include <sstream>    // std::istringstream, std::ostringstream
#include <string>     // std::string
#include <vector>     // std::vector

using namespace sentiprofile;

namespace {

corpus read_text(const std::string &content, const corpus_format format, const ingest_options &opts = {}) {
    std::istringstream in{ content };
    return read_corpus(in, format, opts, "mem");
}

std::string message_of(const auto &fn) {
    try {
        fn();
    } catch (const data_error &e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_SUITE("csv") {
    TEST_CASE("quoted fields keep separators, quotes and line breaks") {
        std::istringstream in{ "\xEF\xBB\xBFid,text\r\n1,\"a, \"\"b\"\"\nc\"\r\n\r\n2,plain\n" };
        const auto rows = csv::read(in, "mem");
        REQUIRE(rows.size() == 3);
        CHECK(rows[0].fields == std::vector<std::string>{ "id", "text" });
        CHECK(rows[1].fields == std::vector<std::string>{ "1", "a, \"b\"\nc" });
        CHECK(rows[1].line == 2);
        CHECK(rows[2].line == 5);
    }

    TEST_CASE("an unterminated quote names the starting line") {
        std::istringstream in{ "id,text\n1,\"open\n" };
        CHECK_THROWS_WITH_AS(static_cast<void>(csv::read(in, "f.csv")), doctest::Contains("f.csv:2"), data_error);
    }

    TEST_CASE("escape round-trips arbitrary fields") {
        gen::source rng{ 11 };
        for (int round = 0; round < 200; ++round) {
            std::vector<std::string> row;
            const std::size_t n = rng.between(1, 5);
            for (std::size_t i = 0; i < n; ++i) {
                row.push_back(rng.text(12));
            }
            std::ostringstream out;
            csv::write_row(out, row);
            std::istringstream in{ out.str() };
            const auto rows = csv::read(in, "mem");
            REQUIRE(rows.size() == 1);
            CHECK(rows.front().fields == row);
        }
    }
}

TEST_SUITE("corpus") {
    TEST_CASE("jsonl with three polarity labels") {
        const corpus c = read_text(R"({"id":"a","text":"good","label":"positive"}
{"id":"b","text":"meh","label":"neutral"}
{"id":"c","text":"bad","label":"negative"}
)",
                                   corpus_format::jsonl);
        REQUIRE(c.size() == 3);
        CHECK(c.fully_labeled());
        CHECK(c[0].label == polarity::positive);
        CHECK(c[2].label == polarity::negative);
    }

    TEST_CASE("empty input gives an empty corpus") {
        CHECK(read_text("", corpus_format::jsonl).empty());
        CHECK(read_text("", corpus_format::csv).empty());
    }

    TEST_CASE("missing ids are zero-padded record indices") {
        const corpus c = read_text("text,label\nfirst,positive\nsecond,negative\n", corpus_format::csv);
        REQUIRE(c.size() == 2);
        CHECK(c[0].id == "000000");
        CHECK(c[1].id == "000001");
    }

    TEST_CASE("label mapping resolves emotion labels") {
        ingest_options opts;
        opts.mapping = label_mapping::from_json_string(R"({"Excited":"positive","Stress":"negative"})");
        const corpus c = read_text("id,text,label\n1,great release,Excited\n2,deadline,Stress\n", corpus_format::csv, opts);
        CHECK(c[0].label == polarity::positive);
        CHECK(c[1].label == polarity::negative);
        CHECK(c[0].raw_label == "Excited");
    }

    TEST_CASE("ingestion errors name the row") {
        CHECK(message_of([] { static_cast<void>(read_text("id,text,label\n1,a,positive\n1,b,negative\n", corpus_format::csv)); }).find("mem:3") != std::string::npos);
        CHECK(message_of([] { static_cast<void>(read_text("id,text,label\n1,a,Joy\n", corpus_format::csv)); }).find("Joy") != std::string::npos);
        CHECK(message_of([] { static_cast<void>(read_text("{\"id\":\"x\",\"text\":\"\"}\n", corpus_format::jsonl)); }).find("mem:1") != std::string::npos);
        CHECK_THROWS_AS(static_cast<void>(read_text("{\"id\":\"x\"\n", corpus_format::jsonl)), data_error);
        CHECK_THROWS_AS(static_cast<void>(read_text("id,label\n1,positive\n", corpus_format::csv)), data_error);
    }

    TEST_CASE("empty text is accepted only on request") {
        ingest_options opts;
        opts.allow_empty_text = true;
        CHECK(read_text("id,text\n1,\n", corpus_format::csv, opts).size() == 1);
    }

    TEST_CASE("unresolved labels stay raw when resolution is off") {
        ingest_options opts;
        opts.resolve_labels = false;
        const corpus c = read_text("id,text,label\n1,a,Joy\n", corpus_format::csv, opts);
        CHECK_FALSE(c[0].label.has_value());
        CHECK(c[0].raw_label == "Joy");
    }

    TEST_CASE("apply_label_mapping maps, drops and lists unmapped labels") {
        ingest_options raw;
        raw.resolve_labels = false;
        const corpus c = read_text("id,text,label\n1,a,Excited\n2,b,Sarcasm\n3,c,Stress\n", corpus_format::csv, raw);

        label_mapping m;
        m.map("Excited", polarity::positive).map("Stress", polarity::negative).drop("Sarcasm");
        const corpus mapped = apply_label_mapping(c, m);
        REQUIRE(mapped.size() == 2);
        CHECK(mapped[0].id == "1");
        CHECK(mapped[0].label == polarity::positive);
        CHECK(mapped[1].label == polarity::negative);
        CHECK(mapped[1].text == "c");

        label_mapping partial;
        partial.map("Excited", polarity::positive);
        const std::string msg = message_of([&] { static_cast<void>(apply_label_mapping(c, partial)); });
        CHECK(msg.find("Sarcasm") != std::string::npos);
        CHECK(msg.find("Stress") != std::string::npos);
    }

    TEST_CASE("identity mapping leaves a polarity corpus unchanged") {
        gen::source rng{ 3 };
        const corpus c = rng.labeled_corpus(30);
        CHECK(apply_label_mapping(c, label_mapping::identity()) == c);
    }

    TEST_CASE("bad mapping files are rejected") {
        CHECK_THROWS_AS(static_cast<void>(label_mapping::from_json_string(R"({"x":"happy"})")), data_error);
        CHECK_THROWS_AS(static_cast<void>(label_mapping::from_json_string("[1]")), data_error);
    }

    TEST_CASE("class_distribution counts every bucket") {
        CHECK(class_distribution(corpus{}).total() == 0);
        const corpus unlabeled{ { document{ "1", "a", {}, {} }, document{ "2", "b", {}, {} }, document{ "3", "c", {}, {} }, document{ "4", "d", {}, {} } } };
        const class_counts u = class_distribution(unlabeled);
        CHECK(u.unlabeled == 4);
        CHECK(u.negative + u.neutral + u.positive == 0);

        const class_counts gh = class_distribution(gen::corpus_with_classes(2561, 5409, 2699));
        CHECK(gh.negative == 2561);
        CHECK(gh.neutral == 5409);
        CHECK(gh.positive == 2699);
        CHECK(gh.total() == 10669);
    }

    TEST_CASE("class_distribution is permutation invariant") {
        gen::source rng{ 5 };
        for (int round = 0; round < 20; ++round) {
            const corpus c = rng.labeled_corpus(rng.between(0, 60));
            std::vector<document> docs = c.documents();
            std::shuffle(docs.begin(), docs.end(), rng.engine());
            CHECK(class_distribution(corpus{ docs }) == class_distribution(c));
        }
    }

    TEST_CASE("write then read round-trips in both formats") {
        gen::source rng{ 7 };
        for (int round = 0; round < 50; ++round) {
            const corpus c = rng.labeled_corpus(rng.between(0, 25));
            for (const corpus_format f : { corpus_format::csv, corpus_format::jsonl }) {
                std::ostringstream out;
                write_corpus(out, c, f);
                CHECK(read_text(out.str(), f) == c);
            }
        }
    }

    TEST_CASE("pool keeps argument order and prefixes ids") {
        const corpus a{ { document{ "1", "x", polarity::positive, "positive" } }, "gh1" };
        const corpus b{ { document{ "1", "y", polarity::negative, "negative" } }, "gh2" };
        const std::vector<corpus> parts{ a, b };
        const corpus pooled = pool(parts);
        REQUIRE(pooled.size() == 2);
        CHECK(pooled[0].id == "gh1/1");
        CHECK(pooled[1].id == "gh2/1");
        CHECK(pooled[1].text == "y");
    }

    TEST_CASE("duplicate or empty ids are rejected") {
        CHECK_THROWS_AS(corpus({ document{ "1", "a", {}, {} }, document{ "1", "b", {}, {} } }), data_error);
        CHECK_THROWS_AS(corpus({ document{ "", "a", {}, {} } }), data_error);
    }

    TEST_CASE("strip_markup removes tags but keeps hearts") {
        CHECK(strip_markup("<p>Thanks &amp; <b>bye</b></p>") == "Thanks & bye");
        CHECK(strip_markup("I <3 this </3") == "I <3 this </3");
        CHECK(strip_markup("a &lt; b") == "a < b");
    }

    TEST_CASE("format detection by extension") {
        CHECK(format_from_extension("x/data.csv") == corpus_format::csv);
        CHECK(format_from_extension("data.jsonl") == corpus_format::jsonl);
        CHECK_FALSE(format_from_extension("data.txt").has_value());
        CHECK(parse_corpus_format("jsonl") == corpus_format::jsonl);
    }
}
