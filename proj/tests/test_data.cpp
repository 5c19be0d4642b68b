#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// The shipped files under data/ mirror the built-in defaults. These checks
// keep the two in sync so editing one side without the other shows up.

#include <string>

#include "fulfill/extractor.hpp"
#include "fulfill/lexicons.hpp"
#include "fulfill/tokenize.hpp"

using namespace fulfill;

namespace {
const std::string kData = FULFILL_DATA_DIR;
}

TEST_CASE("shipped stop word list matches the built-in") {
    CHECK(read_stop_words(kData + "/stopwords.txt") == default_stop_words());
}

TEST_CASE("shipped pattern config matches the built-in") {
    PatternConfig shipped = read_pattern_config(kData + "/patterns.cfg");
    PatternConfig builtin = default_pattern_config();
    CHECK(shipped.min_corpus_count == builtin.min_corpus_count);
    REQUIRE(shipped.specs.size() == builtin.specs.size());
    for (std::size_t i = 0; i < shipped.specs.size(); ++i) {
        INFO("spec ", i, " lemma ", builtin.specs[i].lemma);
        CHECK(shipped.specs[i].lemma == builtin.specs[i].lemma);
        CHECK(shipped.specs[i].particle == builtin.specs[i].particle);
        CHECK(shipped.specs[i].templates == builtin.specs[i].templates);
        CHECK_FALSE(shipped.specs[i].forms.has_value());
        CHECK_FALSE(builtin.specs[i].forms.has_value());
    }
}

TEST_CASE("shipped marker lists match the built-ins") {
    LexiconSet lex = load_lexicons(kData + "/lexicons");
    CHECK(lex.meeting_markers == default_meeting_markers());
    CHECK(lex.violating_markers == default_violating_markers());
    CHECK(lex.meeting_markers.size() == 15);
    CHECK(lex.violating_markers.size() == 31);
}

TEST_CASE("shipped lexicons load and are reachable") {
    LexiconSet lex = load_lexicons(kData + "/lexicons");
    CHECK(lex.connotation.size() > 100);
    CHECK(lex.sentiment.size() > 100);
    CHECK(!lex.synonyms.empty());
    CHECK(!lex.antonyms.empty());

    // Entries are keyed by toolkit lemma forms; a key the lemmatizer can
    // never produce from itself would be dead weight.
    for (const auto& [lemma, p] : lex.connotation) {
        (void)p;
        INFO("connotation key ", lemma);
        CHECK(lemma_of(lemma) == lemma);
    }
    for (const auto& [lemma, p] : lex.sentiment) {
        (void)p;
        INFO("sentiment key ", lemma);
        CHECK(lemma_of(lemma) == lemma);
    }
    for (const auto& [lemma, rel] : lex.synonyms) {
        INFO("synonym key ", lemma);
        CHECK(lemma_of(lemma) == lemma);
        CHECK(!rel.count(lemma));
    }
    for (const auto& [lemma, rel] : lex.antonyms) {
        INFO("antonym key ", lemma);
        CHECK(lemma_of(lemma) == lemma);
        CHECK(!rel.count(lemma));
    }
}
