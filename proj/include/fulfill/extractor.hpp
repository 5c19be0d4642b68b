#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fulfill/lexicons.hpp"
#include "fulfill/tokenize.hpp"
#include "fulfill/types.hpp"

namespace fulfill {

enum class TemplateKind {
    SimplePast,              // [verb]ed
    PastProgressive,         // was [verb]ing
    PastPerfect,             // had [verb]ed
    PastPerfectProgressive,  // had been [verb]ing
    NegatedPast,             // didn't [verb]
    ModalNegative,           // couldn't [verb], opt-in per lemma
};

// Wire names: simple-past, past-progressive, past-perfect,
// past-perfect-progressive, negated-past, modal-negative.
std::string to_string(TemplateKind k);
TemplateKind parse_template(const std::string& s);  // throws DataError

struct DesirePattern {
    std::string id;                   // "<lemma>:<template>"
    std::string verb_lemma;
    TemplateKind kind = TemplateKind::SimplePast;
    std::string particle;             // "to", "for", or empty
    std::vector<std::string> tokens;  // lowercased sequence to match, non-empty
};

// Rendered surface form, clitics attached: "didn't want to".
std::string pattern_text(const DesirePattern& p);

struct PatternSpec {
    std::string lemma;
    std::string particle = "to";
    // Empty means the five standard past templates; ModalNegative is never
    // implied and must be listed.
    std::vector<TemplateKind> templates;
    std::optional<VerbForms> forms;  // override for verbs the rules cannot inflect
};

struct PatternConfig {
    std::vector<PatternSpec> specs;
    // Lemma-frequency threshold used when the stock verb list was chosen at
    // source-corpus scale; advisory for small corpora (see apply_min_count).
    std::size_t min_corpus_count = 1000;
};

PatternConfig default_pattern_config();  // the 16 stock verbs
// Text config: "min_corpus_count = N" lines plus one verb per line,
// "lemma [particle=...] [templates=a,b] [past=...] [pastpart=...] [prespart=...]".
PatternConfig read_pattern_config(const std::string& path);

// One concrete pattern per (lemma, enabled template), sorted by that key.
// Throws DataError when a needed inflection is unavailable, naming the lemma.
std::vector<DesirePattern> generate_patterns(const PatternConfig& config);

struct PatternMatch {
    std::size_t pattern_index = 0;  // into the pattern vector passed in
    TokenSpan span;

    bool operator==(const PatternMatch&) const = default;
};

// Leftmost-longest, non-overlapping matches on lowercased surfaces. Length
// ties at a shared start go to the earlier pattern in the vector.
std::vector<PatternMatch> match_sentence(const Sentence& s,
                                         const std::vector<DesirePattern>& pats);

struct DesireClause {
    std::optional<TokenSpan> subject_span;
    std::vector<std::size_t> focal_word_indices;
    bool is_first_person = false;
};

// Subject: nearest token before the match that is a pronoun or a non-function
// word, skipping adverbs and negation; one non-qualifying token ends the scan.
// Focal words: content words strictly after the match, stopping at the first
// discourse marker from either class.
DesireClause parse_desire_clause(const Sentence& s, TokenSpan match_span,
                                 const std::set<std::string>& stop_words,
                                 const MarkerSet& meeting, const MarkerSet& violating);

bool is_first_person_subject(const Sentence& s, std::optional<TokenSpan> subject_span);

// All instances for one narrative; context windows of `context_window`
// sentences each way, truncated only at narrative boundaries.
std::vector<DesireInstance> match_desires(const Narrative& n,
                                          const std::vector<DesirePattern>& pats,
                                          const LexiconSet& lex,
                                          const std::set<std::string>& stop_words,
                                          std::size_t context_window = 5);

std::map<std::string, std::size_t> lemma_counts(const std::vector<DesireInstance>& insts);

// Drops instances whose verb lemma occurs fewer than `threshold` times.
std::vector<DesireInstance> apply_min_count(std::vector<DesireInstance> insts,
                                            std::size_t threshold);

}  // namespace fulfill
