#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fulfill {

// Half-open [begin, end) range over token indices.
struct TokenSpan {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
    bool operator==(const TokenSpan&) const = default;
};

// Half-open [begin, end) range over byte offsets.
struct CharSpan {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
    bool overlaps(const CharSpan& o) const { return begin < o.end && o.begin < end; }
    bool operator==(const CharSpan&) const = default;
};

struct Token {
    std::string surface;        // original casing
    std::string lemma;          // lowercase
    bool is_content_word = false;
    // byte offsets into the owning sentence's text
    std::size_t char_start = 0;
    std::size_t char_end = 0;

    bool operator==(const Token&) const = default;
};

struct Sentence {
    std::size_t index = 0;      // 0-based position in the source narrative
    std::string text;
    std::vector<Token> tokens;

    bool operator==(const Sentence&) const = default;
};

struct Narrative {
    std::string id;
    std::vector<Sentence> sentences;   // indices 0..n-1 contiguous
    std::string source;                // e.g. blog domain; may be empty

    bool operator==(const Narrative&) const = default;
};

enum class FulfillmentLabel { Fulfilled, Unfulfilled, UnknownFromContext, None };

// Wire strings: "Fulfilled", "Unfulfilled", "Unknown", "None".
std::string to_string(FulfillmentLabel label);
FulfillmentLabel parse_label(const std::string& s);   // throws DataError

// A matched desire expression with its context window. Context sentences are
// stored as copies so instances are self-contained once written to disk; the
// prior context ends at desire_sentence_index - 1 and the post context starts
// at desire_sentence_index + 1, each truncated only at narrative boundaries.
struct DesireInstance {
    std::string id;                       // unique within a corpus
    std::string narrative_id;
    std::size_t desire_sentence_index = 0;
    std::string pattern_id;
    std::string verb_lemma;
    TokenSpan match_span;                 // token range in desire_sentence
    std::optional<TokenSpan> subject_span;
    std::vector<std::size_t> focal_word_indices;  // strictly after match_span
    Sentence desire_sentence;
    std::vector<Sentence> prior_context;  // oldest first; <= 5 sentences
    std::vector<Sentence> post_context;   // nearest first; <= 5 sentences
    std::optional<bool> is_hypothetical;

    bool operator==(const DesireInstance&) const = default;
};

// Signed context offset: -5..-1 prior, 0 desire sentence, +1..+5 post.
// Returns nullptr when the window does not extend that far.
const Sentence* context_sentence(const DesireInstance& inst, int offset);

struct EvidenceRef {
    int sentence_offset = 0;   // signed context offset as above
    CharSpan span;             // byte range within that sentence's text

    bool operator==(const EvidenceRef&) const = default;
};

struct AnnotationRecord {
    std::string instance_id;
    std::string annotator_id;
    FulfillmentLabel label = FulfillmentLabel::UnknownFromContext;  // never None
    std::vector<EvidenceRef> evidence_spans;
    std::optional<TokenSpan> subject_marked;
    bool hypothetical = false;

    bool operator==(const AnnotationRecord&) const = default;
};

struct GoldInstance {
    DesireInstance instance;
    FulfillmentLabel label = FulfillmentLabel::None;
    int agreement_score = 0;            // annotators matching the gold label, 0..3
    std::vector<std::string> evidence;  // merged spans in narrative order
    int overlap_score = 0;              // annotator pairs with overlapping evidence, 0..3

    bool operator==(const GoldInstance&) const = default;
};

// Invariant checks; throw DataError with a diagnostic on violation.
void validate(const Sentence& s);
void validate(const Narrative& n);
void validate(const DesireInstance& inst);
void validate(const GoldInstance& g);

}  // namespace fulfill
