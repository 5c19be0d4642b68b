#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "fulfill/corpus_io.hpp"
#include "fulfill/errors.hpp"
#include "fulfill/extractor.hpp"
#include "fulfill/tokenize.hpp"
#include "fixture_corpus.hpp"

using namespace fulfill;

namespace {

std::vector<DesireInstance> some_instances() {
    auto fx = testfx::fixture_corpus();
    LexiconSet lex = default_lexicons();
    Tokenizer tok;
    auto pats = generate_patterns(default_pattern_config());
    std::vector<DesireInstance> out;
    for (const auto& n : fx.narratives) {
        auto insts = match_desires(n, pats, lex, tok.stop_words());
        out.insert(out.end(), insts.begin(), insts.end());
    }
    return out;
}

}  // namespace

TEST_CASE("narrative round trip") {
    Tokenizer tok;
    auto fx = testfx::fixture_corpus();
    std::stringstream buf;
    write_narratives(buf, fx.narratives);
    auto back = read_narratives(buf, "buf", tok);
    CHECK(back == fx.narratives);
}

TEST_CASE("narrative from raw text") {
    Tokenizer tok;
    std::stringstream in(R"({"Id": "n1", "Text": "I ran home. The door was open.", "Source": "test"})");
    auto ns = read_narratives(in, "in", tok);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0].id == "n1");
    CHECK(ns[0].source == "test");
    REQUIRE(ns[0].sentences.size() == 2);
    CHECK(ns[0].sentences[0].text == "I ran home.");
    CHECK(ns[0].sentences[1].index == 1);
    // writing emits Sentences; reading that back reproduces the narratives
    std::stringstream buf;
    write_narratives(buf, ns);
    CHECK(read_narratives(buf, "buf", tok) == ns);
}

TEST_CASE("narrative errors") {
    Tokenizer tok;
    std::stringstream dup(
        "{\"Id\": \"a\", \"Text\": \"One.\"}\n{\"Id\": \"a\", \"Text\": \"Two.\"}\n");
    CHECK_THROWS_AS(read_narratives(dup, "dup", tok), DataError);
    std::stringstream bad("not json\n");
    CHECK_THROWS_AS(read_narratives(bad, "bad", tok), DataError);
    std::stringstream noid("{\"Text\": \"One.\"}\n");
    CHECK_THROWS_AS(read_narratives(noid, "noid", tok), DataError);
}

TEST_CASE("instance round trip unlabeled and labeled") {
    Tokenizer tok;
    auto insts = some_instances();
    REQUIRE(insts.size() > 10);

    std::vector<InstanceRecord> recs;
    for (const auto& inst : insts) recs.push_back(to_record(inst));
    // give a few of them gold blocks
    recs[0].label = FulfillmentLabel::Fulfilled;
    recs[0].agreement_score = 3;
    recs[0].evidence = {"The road was empty and we made good time."};
    recs[0].overlap_score = 2;
    recs[1].label = FulfillmentLabel::UnknownFromContext;
    recs[1].agreement_score = 2;
    recs[2].label = FulfillmentLabel::Unfulfilled;
    recs[2].agreement_score = 2;
    recs[2].overlap_score = 1;
    recs[3].instance.is_hypothetical = true;

    std::stringstream buf;
    write_instances(buf, recs);
    auto back = read_instances(buf, "buf", tok);
    CHECK(back == recs);
}

TEST_CASE("gold wrappers require labels") {
    auto insts = some_instances();
    InstanceRecord unlabeled = to_record(insts[0]);
    CHECK_THROWS_AS(to_gold(unlabeled), DataError);

    GoldInstance g;
    g.instance = insts[0];
    g.label = FulfillmentLabel::Fulfilled;
    g.agreement_score = 3;
    InstanceRecord rec = to_record(g);
    REQUIRE(rec.label.has_value());
    CHECK(to_gold(rec) == g);
}

TEST_CASE("instance errors") {
    Tokenizer tok;
    std::stringstream bad("{\"Instance-Id\": \"x\"}\n");
    CHECK_THROWS_AS(read_instances(bad, "bad", tok), DataError);
    std::stringstream garbage("{{{\n");
    CHECK_THROWS_AS(read_instances(garbage, "garbage", tok), DataError);
}

TEST_CASE("annotation round trip") {
    std::vector<AnnotationRecord> anns;
    AnnotationRecord a;
    a.instance_id = "fx00:1:1";
    a.annotator_id = "ann1";
    a.label = FulfillmentLabel::Fulfilled;
    a.evidence_spans = {{-1, {3, 9}}, {0, {0, 12}}};
    a.hypothetical = false;
    anns.push_back(a);
    AnnotationRecord b;
    b.instance_id = "fx00:1:1";
    b.annotator_id = "ann2";
    b.label = FulfillmentLabel::UnknownFromContext;
    b.hypothetical = true;
    b.subject_marked = TokenSpan{0, 1};
    anns.push_back(b);

    std::stringstream buf;
    write_annotations(buf, anns);
    auto back = read_annotations(buf, "buf");
    CHECK(back == anns);
}

TEST_CASE("annotation parsing") {
    std::stringstream in(
        "# comment line\n"
        "i1\tann1\tFulfilled\t0:2-10;1:0-4\t0\n"
        "i1\tann2\tUnfulfilled\t\t1\n"
        "i1\tann3\tUnknown\t-2:0-7\t0\t1-2\n");
    auto anns = read_annotations(in, "in");
    REQUIRE(anns.size() == 3);
    CHECK(anns[0].evidence_spans.size() == 2);
    CHECK(anns[0].evidence_spans[0].sentence_offset == 0);
    CHECK(anns[0].evidence_spans[0].span == CharSpan{2, 10});
    CHECK(anns[1].evidence_spans.empty());
    CHECK(anns[1].hypothetical);
    CHECK(anns[2].evidence_spans[0].sentence_offset == -2);
    REQUIRE(anns[2].subject_marked.has_value());
    CHECK(*anns[2].subject_marked == TokenSpan{1, 2});
}

TEST_CASE("annotation errors") {
    auto parse = [](const std::string& text) {
        std::stringstream in(text);
        return read_annotations(in, "in");
    };
    CHECK_THROWS_AS(parse("i1\tann1\tFulfilled\n"), DataError);           // too few columns
    CHECK_THROWS_AS(parse("i1\tann1\tNone\t\t0\n"), DataError);           // None not annotatable
    CHECK_THROWS_AS(parse("i1\tann1\tMaybe\t\t0\n"), DataError);          // unknown label
    CHECK_THROWS_AS(parse("i1\tann1\tFulfilled\t0:9-2\t0\n"), DataError); // inverted span
    CHECK_THROWS_AS(parse("i1\tann1\tFulfilled\tzz\t0\n"), DataError);    // bad evidence
    CHECK_THROWS_AS(parse("i1\tann1\tFulfilled\t\t7\n"), DataError);      // bad hypothetical
}
