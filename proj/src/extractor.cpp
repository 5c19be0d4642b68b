#include "fulfill/extractor.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fulfill/errors.hpp"

namespace fulfill {
namespace {

const char* kTemplateNames[] = {
    "simple-past", "past-progressive", "past-perfect",
    "past-perfect-progressive", "negated-past", "modal-negative",
};

const TemplateKind kStandardTemplates[] = {
    TemplateKind::SimplePast, TemplateKind::PastProgressive,
    TemplateKind::PastPerfect, TemplateKind::PastPerfectProgressive,
    TemplateKind::NegatedPast,
};

bool alpha_token(const std::string& surface) {
    char c = surface.empty() ? '\0' : surface[0];
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           static_cast<unsigned char>(c) >= 0x80;
}

bool adverb_like(const std::string& folded) {
    static const std::set<std::string> adverbs = {
        "really", "just", "always", "still", "almost", "also", "often",
        "sometimes", "finally", "desperately", "badly", "so", "very", "too",
        "even", "actually", "certainly", "definitely", "truly", "secretly",
        "recently", "suddenly", "then", "honestly", "simply", "mostly",
    };
    if (adverbs.count(folded)) return true;
    return folded.size() > 3 && folded.compare(folded.size() - 2, 2, "ly") == 0;
}

bool negation_token(const std::string& folded) {
    return folded == "not" || folded == "n't" || folded == "never" || folded == "no";
}

bool pronoun_token(const std::string& folded) {
    static const std::set<std::string> pronouns = {
        "i", "we", "you", "he", "she", "it", "they", "one", "someone",
        "somebody", "everyone", "everybody", "nobody",
    };
    return pronouns.count(folded) > 0;
}

}  // namespace

std::string to_string(TemplateKind k) {
    return kTemplateNames[static_cast<int>(k)];
}

TemplateKind parse_template(const std::string& s) {
    for (int i = 0; i < 6; ++i)
        if (s == kTemplateNames[i]) return static_cast<TemplateKind>(i);
    throw DataError("unknown template '" + s + "'");
}

std::string pattern_text(const DesirePattern& p) {
    std::string out;
    for (const auto& t : p.tokens) {
        if (!out.empty() && t.rfind("n't", 0) != 0 && t[0] != '\'') out += ' ';
        out += t;
    }
    return out;
}

PatternConfig default_pattern_config() {
    PatternConfig cfg;
    auto verb = [&](std::string lemma, std::string particle = "to",
                    std::vector<TemplateKind> templates = {}) {
        PatternSpec s;
        s.lemma = std::move(lemma);
        s.particle = std::move(particle);
        s.templates = std::move(templates);
        cfg.specs.push_back(std::move(s));
    };
    verb("want");
    verb("need");
    verb("order", "");
    verb("arrange");
    verb("decide");
    verb("hope");
    verb("wait", "to", {TemplateKind::ModalNegative});
    verb("wish");
    verb("schedule", "");
    verb("ask", "for");
    verb("require", "");
    verb("request", "");
    verb("demand", "");
    verb("ache");
    verb("aim");
    verb("desire");
    return cfg;
}

PatternConfig read_pattern_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open pattern config '" + path + "'");
    PatternConfig cfg;
    cfg.specs.clear();
    std::string line;
    std::size_t lineno = 0;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> parts;
        std::string w;
        while (ls >> w) parts.push_back(w);
        if (parts.empty()) continue;
        auto bad = [&](const std::string& msg) -> DataError {
            return DataError(path + ":" + std::to_string(lineno) + ": " + msg);
        };
        // allow "min_corpus_count = N", "min_corpus_count=N"
        std::string joined;
        for (const auto& p : parts) joined += p;
        if (joined.rfind("min_corpus_count=", 0) == 0) {
            std::string v = joined.substr(std::string("min_corpus_count=").size());
            std::size_t pos = 0;
            long n = -1;
            try {
                n = std::stol(v, &pos);
            } catch (const std::exception&) {
                pos = std::string::npos;
            }
            if (pos != v.size() || n < 0) throw bad("bad min_corpus_count '" + v + "'");
            cfg.min_corpus_count = static_cast<std::size_t>(n);
            continue;
        }
        PatternSpec spec;
        spec.lemma = lower_copy(parts[0]);
        if (spec.lemma.empty() ||
            !std::all_of(spec.lemma.begin(), spec.lemma.end(),
                         [](char c) { return (c >= 'a' && c <= 'z') || c == '-'; }))
            throw bad("bad lemma '" + parts[0] + "'");
        if (!seen.insert(spec.lemma).second)
            throw bad("duplicate lemma '" + spec.lemma + "'");
        std::string past, pastpart, prespart;
        for (std::size_t i = 1; i < parts.size(); ++i) {
            auto eq = parts[i].find('=');
            if (eq == std::string::npos) throw bad("expected key=value, got '" + parts[i] + "'");
            std::string key = parts[i].substr(0, eq);
            std::string val = parts[i].substr(eq + 1);
            if (key == "particle") {
                if (val == "none") val.clear();
                if (!val.empty() && val != "to" && val != "for")
                    throw bad("particle must be to, for, or none");
                spec.particle = val;
            } else if (key == "templates") {
                std::stringstream ts(val);
                std::string t;
                while (std::getline(ts, t, ',')) {
                    if (t.empty()) continue;
                    try {
                        spec.templates.push_back(parse_template(t));
                    } catch (const DataError& e) {
                        throw bad(e.what());
                    }
                }
                if (spec.templates.empty()) throw bad("empty template list");
            } else if (key == "past") {
                past = lower_copy(val);
            } else if (key == "pastpart") {
                pastpart = lower_copy(val);
            } else if (key == "prespart") {
                prespart = lower_copy(val);
            } else {
                throw bad("unknown key '" + key + "'");
            }
        }
        if (!past.empty() || !pastpart.empty() || !prespart.empty()) {
            if (past.empty() || pastpart.empty() || prespart.empty())
                throw bad("inflection overrides need past, pastpart, and prespart");
            spec.forms = VerbForms{past, pastpart, prespart};
        }
        cfg.specs.push_back(std::move(spec));
    }
    if (cfg.specs.empty()) throw DataError(path + ": no verbs configured");
    return cfg;
}

std::vector<DesirePattern> generate_patterns(const PatternConfig& config) {
    std::vector<DesirePattern> out;
    for (const auto& spec : config.specs) {
        std::vector<TemplateKind> templates = spec.templates;
        if (templates.empty())
            templates.assign(std::begin(kStandardTemplates), std::end(kStandardTemplates));
        // Inflect lazily so a modal-negative-only entry like a defective modal
        // never asks for forms it does not have.
        std::optional<VerbForms> forms = spec.forms;
        auto form = [&](std::string VerbForms::*member) {
            if (!forms) forms = inflect(spec.lemma);
            return (*forms).*member;
        };
        for (TemplateKind kind : templates) {
            DesirePattern p;
            p.verb_lemma = spec.lemma;
            p.kind = kind;
            p.particle = spec.particle;
            p.id = spec.lemma + ":" + to_string(kind);
            switch (kind) {
                case TemplateKind::SimplePast:
                    p.tokens = {form(&VerbForms::past)};
                    break;
                case TemplateKind::PastProgressive:
                    p.tokens = {"was", form(&VerbForms::present_participle)};
                    break;
                case TemplateKind::PastPerfect:
                    p.tokens = {"had", form(&VerbForms::past_participle)};
                    break;
                case TemplateKind::PastPerfectProgressive:
                    p.tokens = {"had", "been", form(&VerbForms::present_participle)};
                    break;
                case TemplateKind::NegatedPast:
                    p.tokens = {"did", "n't", spec.lemma};
                    break;
                case TemplateKind::ModalNegative:
                    p.tokens = {"could", "n't", spec.lemma};
                    break;
            }
            if (!spec.particle.empty()) p.tokens.push_back(spec.particle);
            out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end(), [](const DesirePattern& a, const DesirePattern& b) {
        if (a.verb_lemma != b.verb_lemma) return a.verb_lemma < b.verb_lemma;
        return a.kind < b.kind;
    });
    return out;
}

std::vector<PatternMatch> match_sentence(const Sentence& s,
                                         const std::vector<DesirePattern>& pats) {
    std::vector<PatternMatch> out;
    auto folded = folded_surfaces(s);
    std::size_t i = 0;
    while (i < folded.size()) {
        std::size_t best_len = 0;
        std::size_t best_idx = 0;
        for (std::size_t pi = 0; pi < pats.size(); ++pi) {
            const auto& toks = pats[pi].tokens;
            if (toks.empty() || i + toks.size() > folded.size()) continue;
            if (toks.size() <= best_len) continue;
            bool match = true;
            for (std::size_t k = 0; k < toks.size(); ++k) {
                if (folded[i + k] != toks[k]) { match = false; break; }
            }
            if (match) {
                best_len = toks.size();
                best_idx = pi;
            }
        }
        if (best_len > 0) {
            out.push_back({best_idx, {i, i + best_len}});
            i += best_len;
        } else {
            ++i;
        }
    }
    return out;
}

DesireClause parse_desire_clause(const Sentence& s, TokenSpan match_span,
                                 const std::set<std::string>& stop_words,
                                 const MarkerSet& meeting, const MarkerSet& violating) {
    DesireClause clause;
    auto folded = folded_surfaces(s);

    // subject: walk left over adverbs and negation, then judge one token
    std::size_t pos = match_span.begin;
    while (pos > 0) {
        const std::string& f = folded[pos - 1];
        if (adverb_like(f) || negation_token(f)) {
            --pos;
            continue;
        }
        if (pronoun_token(f) ||
            (alpha_token(s.tokens[pos - 1].surface) && !stop_words.count(f)))
            clause.subject_span = TokenSpan{pos - 1, pos};
        break;
    }
    clause.is_first_person = is_first_person_subject(s, clause.subject_span);

    for (std::size_t j = match_span.end; j < s.tokens.size();) {
        std::size_t m = std::max(meeting.match_length_at(folded, j),
                                 violating.match_length_at(folded, j));
        if (m > 0) break;
        if (s.tokens[j].is_content_word) clause.focal_word_indices.push_back(j);
        ++j;
    }
    return clause;
}

bool is_first_person_subject(const Sentence& s, std::optional<TokenSpan> subject_span) {
    if (!subject_span || subject_span->size() != 1) return false;
    std::string f = lower_copy(s.tokens[subject_span->begin].surface);
    return f == "i" || f == "we";
}

std::vector<DesireInstance> match_desires(const Narrative& n,
                                          const std::vector<DesirePattern>& pats,
                                          const LexiconSet& lex,
                                          const std::set<std::string>& stop_words,
                                          std::size_t context_window) {
    std::vector<DesireInstance> out;
    for (std::size_t si = 0; si < n.sentences.size(); ++si) {
        const Sentence& sent = n.sentences[si];
        for (const auto& m : match_sentence(sent, pats)) {
            const DesirePattern& pat = pats[m.pattern_index];
            DesireInstance inst;
            inst.id = n.id + ":" + std::to_string(si) + ":" + std::to_string(m.span.begin);
            inst.narrative_id = n.id;
            inst.desire_sentence_index = si;
            inst.pattern_id = pat.id;
            inst.verb_lemma = pat.verb_lemma;
            inst.match_span = m.span;
            auto clause = parse_desire_clause(sent, m.span, stop_words,
                                              lex.meeting_compiled, lex.violating_compiled);
            inst.subject_span = clause.subject_span;
            inst.focal_word_indices = clause.focal_word_indices;
            inst.desire_sentence = sent;
            std::size_t lo = si >= context_window ? si - context_window : 0;
            for (std::size_t k = lo; k < si; ++k)
                inst.prior_context.push_back(n.sentences[k]);
            std::size_t hi = std::min(n.sentences.size(), si + context_window + 1);
            for (std::size_t k = si + 1; k < hi; ++k)
                inst.post_context.push_back(n.sentences[k]);
            out.push_back(std::move(inst));
        }
    }
    return out;
}

std::map<std::string, std::size_t> lemma_counts(const std::vector<DesireInstance>& insts) {
    std::map<std::string, std::size_t> counts;
    for (const auto& inst : insts) ++counts[inst.verb_lemma];
    return counts;
}

std::vector<DesireInstance> apply_min_count(std::vector<DesireInstance> insts,
                                            std::size_t threshold) {
    if (threshold <= 1) return insts;
    auto counts = lemma_counts(insts);
    std::vector<DesireInstance> kept;
    kept.reserve(insts.size());
    for (auto& inst : insts)
        if (counts[inst.verb_lemma] >= threshold) kept.push_back(std::move(inst));
    return kept;
}

}  // namespace fulfill
