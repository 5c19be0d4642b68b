#include "fulfill/types.hpp"

#include <cctype>

#include "fulfill/errors.hpp"

namespace fulfill {

std::string to_string(FulfillmentLabel label) {
    switch (label) {
        case FulfillmentLabel::Fulfilled: return "Fulfilled";
        case FulfillmentLabel::Unfulfilled: return "Unfulfilled";
        case FulfillmentLabel::UnknownFromContext: return "Unknown";
        case FulfillmentLabel::None: return "None";
    }
    throw DataError("invalid fulfillment label value");
}

FulfillmentLabel parse_label(const std::string& s) {
    if (s == "Fulfilled") return FulfillmentLabel::Fulfilled;
    if (s == "Unfulfilled") return FulfillmentLabel::Unfulfilled;
    if (s == "Unknown") return FulfillmentLabel::UnknownFromContext;
    if (s == "None") return FulfillmentLabel::None;
    throw DataError("unknown fulfillment label '" + s + "'");
}

const Sentence* context_sentence(const DesireInstance& inst, int offset) {
    if (offset == 0) return &inst.desire_sentence;
    if (offset < 0) {
        std::size_t back = static_cast<std::size_t>(-offset);  // 1 = nearest
        if (back > inst.prior_context.size()) return nullptr;
        return &inst.prior_context[inst.prior_context.size() - back];
    }
    std::size_t fwd = static_cast<std::size_t>(offset);
    if (fwd > inst.post_context.size()) return nullptr;
    return &inst.post_context[fwd - 1];
}

void validate(const Sentence& s) {
    std::size_t prev_end = 0;
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
        const Token& t = s.tokens[i];
        if (t.char_start >= t.char_end)
            throw DataError("sentence " + std::to_string(s.index) + ": token " +
                            std::to_string(i) + " has empty or inverted char span");
        if (t.char_start < prev_end)
            throw DataError("sentence " + std::to_string(s.index) + ": token " +
                            std::to_string(i) + " overlaps or precedes the previous token");
        if (t.char_end > s.text.size())
            throw DataError("sentence " + std::to_string(s.index) + ": token " +
                            std::to_string(i) + " extends past the sentence text");
        if (s.text.compare(t.char_start, t.char_end - t.char_start, t.surface) != 0)
            throw DataError("sentence " + std::to_string(s.index) + ": token " +
                            std::to_string(i) + " surface does not match the text slice");
        // gaps between tokens must be whitespace only
        for (std::size_t p = prev_end; p < t.char_start; ++p) {
            if (!std::isspace(static_cast<unsigned char>(s.text[p])))
                throw DataError("sentence " + std::to_string(s.index) +
                                ": non-whitespace gap before token " + std::to_string(i));
        }
        prev_end = t.char_end;
    }
}

void validate(const Narrative& n) {
    if (n.id.empty()) throw DataError("narrative has empty id");
    for (std::size_t i = 0; i < n.sentences.size(); ++i) {
        if (n.sentences[i].index != i)
            throw DataError("narrative '" + n.id + "': sentence index " +
                            std::to_string(n.sentences[i].index) + " at position " +
                            std::to_string(i) + " (indices must be contiguous)");
        validate(n.sentences[i]);
    }
}

void validate(const DesireInstance& inst) {
    const std::string where = "instance '" + inst.id + "'";
    if (inst.prior_context.size() > 5)
        throw DataError(where + ": prior context has " +
                        std::to_string(inst.prior_context.size()) + " sentences (max 5)");
    if (inst.post_context.size() > 5)
        throw DataError(where + ": post context has " +
                        std::to_string(inst.post_context.size()) + " sentences (max 5)");
    // prior indices strictly ascend and end at desire_sentence_index - 1;
    // a short prior window is only legal at the narrative start
    std::size_t k = inst.prior_context.size();
    if (k > 0) {
        if (inst.desire_sentence_index < k)
            throw DataError(where + ": prior context longer than available sentences");
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t want = inst.desire_sentence_index - k + i;
            if (inst.prior_context[i].index != want)
                throw DataError(where + ": prior context indices not consecutive up to the desire sentence");
        }
    }
    if (k < 5 && k != inst.desire_sentence_index)
        throw DataError(where + ": prior context truncated away from the narrative boundary");
    for (std::size_t i = 0; i < inst.post_context.size(); ++i) {
        if (inst.post_context[i].index != inst.desire_sentence_index + 1 + i)
            throw DataError(where + ": post context indices not consecutive after the desire sentence");
    }
    if (inst.desire_sentence.index != inst.desire_sentence_index)
        throw DataError(where + ": desire sentence carries a different index");
    if (inst.match_span.begin >= inst.match_span.end ||
        inst.match_span.end > inst.desire_sentence.tokens.size())
        throw DataError(where + ": match span out of range");
    for (std::size_t f : inst.focal_word_indices) {
        if (f < inst.match_span.end || f >= inst.desire_sentence.tokens.size())
            throw DataError(where + ": focal word index " + std::to_string(f) +
                            " not strictly after the match span");
    }
    if (inst.subject_span) {
        if (inst.subject_span->begin >= inst.subject_span->end ||
            inst.subject_span->end > inst.desire_sentence.tokens.size())
            throw DataError(where + ": subject span out of range");
    }
}

void validate(const GoldInstance& g) {
    validate(g.instance);
    const std::string where = "instance '" + g.instance.id + "'";
    if (g.agreement_score < 0 || g.agreement_score > 3)
        throw DataError(where + ": agreement score " + std::to_string(g.agreement_score) +
                        " outside 0..3");
    if (g.overlap_score < 0 || g.overlap_score > 3)
        throw DataError(where + ": overlap score " + std::to_string(g.overlap_score) +
                        " outside 0..3");
    if (g.label == FulfillmentLabel::None && g.agreement_score != 0)
        throw DataError(where + ": label None requires agreement score 0");
}

}  // namespace fulfill
