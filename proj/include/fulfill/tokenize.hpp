#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fulfill/types.hpp"

namespace fulfill {

// Deterministic rule-based segmentation: sentence boundaries at ./!/? runs
// guarded by an abbreviation list, whitespace/punctuation tokenization with
// contraction splitting ("didn't" -> "did" + "n't"), suffix-stripping
// lemmatizer with an exception table, and stop-word based content flagging.
struct TokenizerOptions {
    std::set<std::string> stop_words;     // lowercase; empty -> built-in default
    std::set<std::string> abbreviations;  // lowercase, no trailing dot; empty -> built-in default
};

class Tokenizer {
public:
    Tokenizer();
    explicit Tokenizer(TokenizerOptions opts);

    // Split into sentences and tokenize each. Empty text -> empty list.
    std::vector<Sentence> run(const std::string& text) const;

    // Tokenize text as exactly one sentence (no boundary detection).
    Sentence run_single(const std::string& text, std::size_t index) const;

    const std::set<std::string>& stop_words() const { return stop_;  }

private:
    std::set<std::string> stop_;
    std::set<std::string> abbrev_;

    std::vector<std::pair<std::size_t, std::size_t>> split_spans(const std::string& text) const;
    void tokenize_into(Sentence& s) const;
};

// Convenience wrapper over a default-constructed Tokenizer.
std::vector<Sentence> tokenize(const std::string& text);

// Lowercase lemma for a lowercase surface form. Pure function.
std::string lemma_of(const std::string& lower);

const std::set<std::string>& default_stop_words();

// One word per line, '#' comments. Throws DataError when unreadable or empty.
std::set<std::string> read_stop_words(const std::string& path);
const std::set<std::string>& default_abbreviations();

// One lowercase entry per line; '#' comments and blank lines ignored.
std::set<std::string> load_word_list(const std::string& path);

// Past-form morphology shared by the lemmatizer and the pattern generator.
struct VerbForms {
    std::string past;
    std::string past_participle;
    std::string present_participle;
};

// Known irregular verbs (sought/thought/...); nullopt for regular lemmas.
std::optional<VerbForms> irregular_forms(const std::string& lemma);

// Regular inflection rules (e-drop, y->ied, consonant doubling). Throws
// DataError for defective modals (can, must, ...) that have no usable forms.
VerbForms inflect(const std::string& lemma);

std::string lower_copy(const std::string& s);

}  // namespace fulfill
