#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fulfill/types.hpp"

namespace fulfill {

enum class Polarity { Negative = -1, Neutral = 0, Positive = 1 };

int polarity_sign(Polarity p);
std::string to_string(Polarity p);
Polarity parse_polarity(const std::string& s);  // throws DataError

// Lowercased surfaces, the form marker matching runs on.
std::vector<std::string> folded_surfaces(const Sentence& s);

// Discourse markers as token sequences over lowercased surfaces. At each
// position the longest matching phrase wins and consumes its tokens.
class MarkerSet {
public:
    MarkerSet() = default;
    explicit MarkerSet(const std::set<std::string>& phrases);

    // Length in tokens of the longest phrase matching at position i, 0 if none.
    std::size_t match_length_at(const std::vector<std::string>& folded,
                                std::size_t i) const;
    std::size_t count_in(const Sentence& s) const;
    bool empty() const { return phrases_.empty(); }

private:
    std::vector<std::vector<std::string>> phrases_;  // longest first
};

struct LexiconSet {
    std::map<std::string, Polarity> connotation;            // lemma -> polarity
    std::map<std::string, std::set<std::string>> synonyms;  // lemma -> lemmas
    std::map<std::string, std::set<std::string>> antonyms;
    std::set<std::string> meeting_markers;    // phrases, lowercased
    std::set<std::string> violating_markers;
    std::map<std::string, Polarity> sentiment;

    // Compiled marker matchers; refreshed by validate_and_compile().
    MarkerSet meeting_compiled;
    MarkerSet violating_compiled;

    // Checks marker invariants (disjoint lists, "so" meeting, "but"
    // violating, synonym/antonym disjointness) and compiles the matchers.
    // Throws DataError on violation.
    void validate_and_compile();

    Polarity connotation_of(const std::string& lemma) const;
    Polarity sentiment_of(const std::string& lemma) const;
};

std::set<std::string> default_meeting_markers();    // 15 phrases
std::set<std::string> default_violating_markers();  // 31 phrases

// Directory layout: connotation.tsv, sentiment.tsv, wordnet.tsv,
// markers/meeting.txt, markers/violating.txt. A missing lexicon file leaves
// its table empty; missing marker files fall back to the built-in lists.
LexiconSet load_lexicons(const std::string& dir);

// Built-in marker lists, empty lexical tables.
LexiconSet default_lexicons();

// Majority vote over sentiment-lexicon hits; a negation token ("not", "n't",
// "never", "no") within the 3 tokens before a hit flips it. Tie or no hits
// comes out Neutral.
Polarity sentence_sentiment(const Sentence& s, const LexiconSet& lex);

// Pre-scored sentence polarities keyed by (narrative id, sentence index),
// loaded from TSV lines "narrative_id<TAB>sentence_index<TAB>polarity".
class SentimentTable {
public:
    SentimentTable() = default;
    static SentimentTable load(const std::string& path);

    void set(const std::string& narrative_id, std::size_t sentence_index, Polarity p);
    std::optional<Polarity> lookup(const std::string& narrative_id,
                                   std::size_t sentence_index) const;
    bool empty() const { return table_.empty(); }

private:
    std::map<std::pair<std::string, std::size_t>, Polarity> table_;
};

// Pre-scored polarity when available, lexicon vote otherwise.
Polarity sentiment_for(const Sentence& s, const std::string& narrative_id,
                       const LexiconSet& lex, const SentimentTable& table);

}  // namespace fulfill
