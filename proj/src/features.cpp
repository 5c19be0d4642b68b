#include "fulfill/features.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fulfill/errors.hpp"
#include "fulfill/extractor.hpp"
#include "fulfill/format.hpp"
#include "fulfill/tokenize.hpp"

namespace fulfill {
namespace {

bool is_word_token(const Token& t) {
    if (t.surface.empty()) return false;
    char c = t.surface[0];
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           static_cast<unsigned char>(c) >= 0x80 ||
           ((c == '\'' || static_cast<unsigned char>(c) >= 0x80) && t.surface.size() > 1);
}

const std::vector<std::set<std::string>>& pronoun_groups() {
    static const std::vector<std::set<std::string>> groups = {
        {"i", "me", "my", "mine", "myself"},
        {"we", "us", "our", "ours", "ourselves"},
        {"you", "your", "yours", "yourself", "yourselves"},
        {"he", "him", "his", "himself"},
        {"she", "her", "hers", "herself"},
        {"it", "its", "itself"},
        {"they", "them", "their", "theirs", "themselves"},
    };
    return groups;
}

const std::set<std::string>* group_of(const std::string& folded) {
    for (const auto& g : pronoun_groups())
        if (g.count(folded)) return &g;
    return nullptr;
}

bool scope_has_prior(ContextScope s) {
    return s == ContextScope::DesirePrior || s == ContextScope::DesireContext;
}
bool scope_has_post(ContextScope s) {
    return s == ContextScope::DesirePost || s == ContextScope::DesireContext;
}

void bump(FeatureVector& fv, std::string name, double by) {
    if (by != 0.0) fv[std::move(name)] += by;
}

}  // namespace

std::string to_string(FeatureFamily f) {
    switch (f) {
        case FeatureFamily::Desire: return "Desire";
        case FeatureFamily::Discourse: return "Discourse";
        case FeatureFamily::Connotation: return "Connotation";
        case FeatureFamily::SentimentFlow: return "SentimentFlow";
        case FeatureFamily::BOW: return "BOW";
    }
    return "?";
}

FeatureFamily parse_family(const std::string& s) {
    std::string t = lower_copy(s);
    if (t == "desire") return FeatureFamily::Desire;
    if (t == "discourse") return FeatureFamily::Discourse;
    if (t == "connotation") return FeatureFamily::Connotation;
    if (t == "sentimentflow" || t == "sentiment-flow" || t == "sentflow")
        return FeatureFamily::SentimentFlow;
    if (t == "bow") return FeatureFamily::BOW;
    throw UsageError("unknown feature family '" + s + "'");
}

std::set<FeatureFamily> parse_family_list(const std::string& s) {
    if (lower_copy(s) == "all") return all_families();
    std::set<FeatureFamily> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        out.insert(parse_family(item.substr(b, e - b + 1)));
    }
    if (out.empty()) throw UsageError("empty feature family list '" + s + "'");
    return out;
}

std::string families_to_string(const std::set<FeatureFamily>& fams) {
    if (fams == all_families()) return "ALL";
    std::string out;
    for (FeatureFamily f : fams) {
        if (!out.empty()) out += ',';
        out += to_string(f);
    }
    return out;
}

std::string to_string(ContextScope s) {
    switch (s) {
        case ContextScope::DesireOnly: return "desire";
        case ContextScope::DesirePrior: return "desire+prior";
        case ContextScope::DesirePost: return "desire+post";
        case ContextScope::DesireContext: return "desire+context";
    }
    return "?";
}

ContextScope parse_scope(const std::string& s) {
    std::string t = lower_copy(s);
    if (t == "desire" || t == "desire-only") return ContextScope::DesireOnly;
    if (t == "desire+prior") return ContextScope::DesirePrior;
    if (t == "desire+post") return ContextScope::DesirePost;
    if (t == "desire+context") return ContextScope::DesireContext;
    throw UsageError("unknown context scope '" + s + "'");
}

std::set<FeatureFamily> all_families() {
    return {FeatureFamily::Desire, FeatureFamily::Discourse, FeatureFamily::Connotation,
            FeatureFamily::SentimentFlow, FeatureFamily::BOW};
}

std::set<std::string> default_verb_inventory() {
    std::set<std::string> out;
    for (const auto& spec : default_pattern_config().specs) out.insert(spec.lemma);
    return out;
}

std::string feature_name(FeatureFamily fam, const std::string& base) {
    std::string prefix;
    switch (fam) {
        case FeatureFamily::Desire: prefix = "desire"; break;
        case FeatureFamily::Discourse: prefix = "discourse"; break;
        case FeatureFamily::Connotation: prefix = "connotation"; break;
        case FeatureFamily::SentimentFlow: prefix = "sentflow"; break;
        case FeatureFamily::BOW: prefix = "bow"; break;
    }
    return prefix + ":" + base;
}

std::string feature_name(FeatureFamily fam, const std::string& base, int offset) {
    std::string idx = offset > 0 ? "+" + std::to_string(offset) : std::to_string(offset);
    return feature_name(fam, base) + ":" + idx;
}

std::vector<int> scoped_offsets(const DesireInstance& inst, ContextScope scope) {
    std::vector<int> out;
    if (scope_has_prior(scope))
        for (int i = -static_cast<int>(inst.prior_context.size()); i <= -1; ++i)
            out.push_back(i);
    if (scope_has_post(scope))
        for (int i = 1; i <= static_cast<int>(inst.post_context.size()); ++i)
            out.push_back(i);
    return out;
}

FeatureVector extract_desire_features(const DesireInstance& inst, const LexiconSet& lex,
                                      ContextScope scope,
                                      const std::set<std::string>& verb_inventory) {
    FeatureVector fv;
    std::string verb =
        verb_inventory.count(inst.verb_lemma) ? inst.verb_lemma : std::string("OTHER");
    fv[feature_name(FeatureFamily::Desire, "Desire-Verb=" + verb)] = 1.0;
    bool first_person = is_first_person_subject(inst.desire_sentence, inst.subject_span);
    fv[feature_name(FeatureFamily::Desire, "First-Person-Subject")] =
        first_person ? 1.0 : 0.0;

    std::vector<std::string> focal_lemmas;
    for (std::size_t idx : inst.focal_word_indices)
        focal_lemmas.push_back(inst.desire_sentence.tokens[idx].lemma);

    std::string subject_folded;
    const std::set<std::string>* subject_group = nullptr;
    if (inst.subject_span) {
        subject_folded =
            lower_copy(inst.desire_sentence.tokens[inst.subject_span->begin].surface);
        subject_group = group_of(subject_folded);
    }

    for (int off : scoped_offsets(inst, scope)) {
        const Sentence* ctx = context_sentence(inst, off);
        double word_hits = 0, syn_hits = 0, ant_hits = 0;
        for (const auto& fl : focal_lemmas) {
            const std::set<std::string>* syns = nullptr;
            const std::set<std::string>* ants = nullptr;
            if (auto it = lex.synonyms.find(fl); it != lex.synonyms.end())
                syns = &it->second;
            if (auto it = lex.antonyms.find(fl); it != lex.antonyms.end())
                ants = &it->second;
            for (const auto& tok : ctx->tokens) {
                if (!is_word_token(tok)) continue;
                if (tok.lemma == fl) ++word_hits;
                if (syns && syns->count(tok.lemma)) ++syn_hits;
                if (ants && ants->count(tok.lemma)) ++ant_hits;
            }
        }
        bump(fv, feature_name(FeatureFamily::Desire, "Focal-Word-Mention", off), word_hits);
        bump(fv, feature_name(FeatureFamily::Desire, "Focal-Synonym-Mention", off), syn_hits);
        bump(fv, feature_name(FeatureFamily::Desire, "Focal-Antonym-Mention", off), ant_hits);
        if (inst.subject_span) {
            bool mentioned = false;
            for (const auto& tok : ctx->tokens) {
                std::string f = lower_copy(tok.surface);
                if (subject_group ? subject_group->count(f) > 0 : f == subject_folded) {
                    mentioned = true;
                    break;
                }
            }
            if (mentioned)
                fv[feature_name(FeatureFamily::Desire, "Desire-Subject-Mention", off)] = 1.0;
        }
    }
    return fv;
}

FeatureVector extract_discourse_features(const DesireInstance& inst, const LexiconSet& lex,
                                         ContextScope scope) {
    FeatureVector fv;
    auto folded = folded_surfaces(inst.desire_sentence);
    bool so = std::find(folded.begin(), folded.end(), "so") != folded.end();
    bool but = std::find(folded.begin(), folded.end(), "but") != folded.end();
    fv[feature_name(FeatureFamily::Discourse, "So-Present")] = so ? 1.0 : 0.0;
    fv[feature_name(FeatureFamily::Discourse, "But-Present")] = but ? 1.0 : 0.0;
    for (int off : scoped_offsets(inst, scope)) {
        const Sentence* ctx = context_sentence(inst, off);
        bump(fv, feature_name(FeatureFamily::Discourse, "Violated-Expectation", off),
             static_cast<double>(lex.violating_compiled.count_in(*ctx)));
        bump(fv, feature_name(FeatureFamily::Discourse, "Meeting-Expectation", off),
             static_cast<double>(lex.meeting_compiled.count_in(*ctx)));
    }
    return fv;
}

FeatureVector extract_connotation_features(const DesireInstance& inst,
                                           const LexiconSet& lex, ContextScope scope) {
    FeatureVector fv;
    std::vector<Polarity> focal_polarities;
    for (std::size_t idx : inst.focal_word_indices) {
        Polarity p = lex.connotation_of(inst.desire_sentence.tokens[idx].lemma);
        if (p != Polarity::Neutral) focal_polarities.push_back(p);
    }
    if (focal_polarities.empty()) return fv;
    for (int off : scoped_offsets(inst, scope)) {
        const Sentence* ctx = context_sentence(inst, off);
        double agree = 0, disagree = 0;
        for (Polarity fp : focal_polarities) {
            for (const auto& tok : ctx->tokens) {
                if (!is_word_token(tok)) continue;
                Polarity cp = lex.connotation_of(tok.lemma);
                if (cp == Polarity::Neutral) continue;
                if (cp == fp) ++agree;
                else ++disagree;
            }
        }
        bump(fv, feature_name(FeatureFamily::Connotation, "Connotation-Agree", off), agree);
        bump(fv, feature_name(FeatureFamily::Connotation, "Connotation-Disagree", off),
             disagree);
    }
    return fv;
}

FeatureVector extract_sentiment_flow_features(const DesireInstance& inst,
                                              const LexiconSet& lex, ContextScope scope,
                                              const SentimentTable& scored) {
    FeatureVector fv;
    Polarity desire_pol =
        sentiment_for(inst.desire_sentence, inst.narrative_id, lex, scored);
    if (desire_pol == Polarity::Neutral) return fv;
    for (int off : scoped_offsets(inst, scope)) {
        const Sentence* ctx = context_sentence(inst, off);
        Polarity ctx_pol = sentiment_for(*ctx, inst.narrative_id, lex, scored);
        if (ctx_pol == Polarity::Neutral) continue;
        if (ctx_pol == desire_pol)
            fv[feature_name(FeatureFamily::SentimentFlow, "Sentiment-Agree", off)] = 1.0;
        else
            fv[feature_name(FeatureFamily::SentimentFlow, "Sentiment-Disagree", off)] = 1.0;
    }
    return fv;
}

FeatureVector extract_bow(const DesireInstance& inst, ContextScope scope,
                          const std::optional<std::set<std::string>>& vocab) {
    FeatureVector fv;
    auto add_sentence = [&](const Sentence& s) {
        for (const auto& tok : s.tokens) {
            if (!is_word_token(tok)) continue;
            if (vocab && !vocab->count(tok.lemma)) continue;
            fv[feature_name(FeatureFamily::BOW, tok.lemma)] += 1.0;
        }
    };
    add_sentence(inst.desire_sentence);
    for (int off : scoped_offsets(inst, scope)) add_sentence(*context_sentence(inst, off));
    return fv;
}

FeatureVector featurize(const DesireInstance& inst, const LexiconSet& lex,
                        const FeatureConfig& config, const SentimentTable& scored) {
    if (config.enabled_families.empty())
        throw UsageError("no feature families enabled");
    const std::set<std::string>& verbs =
        config.verb_inventory.empty() ? default_verb_inventory() : config.verb_inventory;
    FeatureVector out;
    auto merge = [&](FeatureVector part) {
        for (auto& [name, value] : part) {
            auto [it, inserted] = out.emplace(name, value);
            if (!inserted)
                throw std::logic_error("feature name collision on '" + name + "'");
        }
    };
    for (FeatureFamily fam : config.enabled_families) {
        switch (fam) {
            case FeatureFamily::Desire:
                merge(extract_desire_features(inst, lex, config.context_scope, verbs));
                break;
            case FeatureFamily::Discourse:
                merge(extract_discourse_features(inst, lex, config.context_scope));
                break;
            case FeatureFamily::Connotation:
                merge(extract_connotation_features(inst, lex, config.context_scope));
                break;
            case FeatureFamily::SentimentFlow:
                merge(extract_sentiment_flow_features(inst, lex, config.context_scope,
                                                      scored));
                break;
            case FeatureFamily::BOW:
                merge(extract_bow(inst, config.context_scope, config.bow_vocab));
                break;
        }
    }
    if (!config.only_features.empty()) {
        for (auto it = out.begin(); it != out.end();) {
            if (config.only_features.count(it->first)) ++it;
            else it = out.erase(it);
        }
    }
    for (const auto& name : config.exclude_features) out.erase(name);
    return out;
}

std::set<std::string> build_bow_vocab(const std::vector<DesireInstance>& insts,
                                      ContextScope scope) {
    std::set<std::string> vocab;
    for (const auto& inst : insts) {
        auto add_sentence = [&](const Sentence& s) {
            for (const auto& tok : s.tokens)
                if (is_word_token(tok)) vocab.insert(tok.lemma);
        };
        add_sentence(inst.desire_sentence);
        for (int off : scoped_offsets(inst, scope))
            add_sentence(*context_sentence(inst, off));
    }
    return vocab;
}

void write_feature_records(std::ostream& out, const std::vector<FeatureRecord>& rs) {
    for (const auto& r : rs) {
        out << r.instance_id;
        for (const auto& [name, value] : r.features)
            out << '\t' << name << ':' << format_double(value);
        out << '\n';
    }
}

void write_feature_records(const std::string& path, const std::vector<FeatureRecord>& rs) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path + "'");
    write_feature_records(out, rs);
    if (!out) throw DataError("error writing '" + path + "'");
}

std::vector<FeatureRecord> read_feature_records(std::istream& in, const std::string& name) {
    std::vector<FeatureRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto bad = [&](const std::string& msg) -> DataError {
            return DataError(name + ":" + std::to_string(lineno) + ": " + msg);
        };
        FeatureRecord rec;
        std::size_t start = 0;
        bool first = true;
        while (start <= line.size()) {
            std::size_t tab = line.find('\t', start);
            std::string field = line.substr(
                start, tab == std::string::npos ? std::string::npos : tab - start);
            if (first) {
                if (field.empty()) throw bad("empty instance id");
                rec.instance_id = field;
                first = false;
            } else if (!field.empty()) {
                std::size_t colon = field.rfind(':');
                if (colon == std::string::npos || colon == 0 || colon + 1 == field.size())
                    throw bad("bad feature pair '" + field + "'");
                std::string fname = field.substr(0, colon);
                std::string fval = field.substr(colon + 1);
                std::size_t pos = 0;
                double v = 0;
                try {
                    v = std::stod(fval, &pos);
                } catch (const std::exception&) {
                    pos = std::string::npos;
                }
                if (pos != fval.size()) throw bad("bad feature value '" + fval + "'");
                if (!rec.features.emplace(fname, v).second)
                    throw bad("duplicate feature '" + fname + "'");
            }
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<FeatureRecord> read_feature_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    return read_feature_records(in, path);
}

}  // namespace fulfill
