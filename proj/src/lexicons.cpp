#include "fulfill/lexicons.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fulfill/errors.hpp"
#include "fulfill/tokenize.hpp"

namespace fulfill {
namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> f;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            f.push_back(line.substr(start));
            break;
        }
        f.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return f;
}

// Applies fn(fields, lineno) to each non-blank, non-comment line.
template <typename Fn>
void for_tsv_lines(const std::string& path, Fn fn) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        fn(split_tabs(line), lineno);
    }
}

[[noreturn]] void fail(const std::string& path, std::size_t lineno, const std::string& msg) {
    throw DataError(path + ":" + std::to_string(lineno) + ": " + msg);
}

}  // namespace

int polarity_sign(Polarity p) { return static_cast<int>(p); }

std::string to_string(Polarity p) {
    switch (p) {
        case Polarity::Positive: return "Positive";
        case Polarity::Negative: return "Negative";
        case Polarity::Neutral: return "Neutral";
    }
    return "Neutral";
}

Polarity parse_polarity(const std::string& s) {
    std::string t = lower_copy(s);
    if (t == "positive" || t == "pos" || t == "+1" || t == "1") return Polarity::Positive;
    if (t == "negative" || t == "neg" || t == "-1") return Polarity::Negative;
    if (t == "neutral" || t == "neu" || t == "0") return Polarity::Neutral;
    throw DataError("unknown polarity '" + s + "'");
}

MarkerSet::MarkerSet(const std::set<std::string>& phrases) {
    for (const auto& p : phrases) {
        auto toks = split_ws(lower_copy(p));
        if (!toks.empty()) phrases_.push_back(std::move(toks));
    }
    std::stable_sort(phrases_.begin(), phrases_.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
}

std::vector<std::string> folded_surfaces(const Sentence& s) {
    std::vector<std::string> folded;
    folded.reserve(s.tokens.size());
    for (const auto& t : s.tokens) folded.push_back(lower_copy(t.surface));
    return folded;
}

std::size_t MarkerSet::match_length_at(const std::vector<std::string>& folded,
                                       std::size_t i) const {
    for (const auto& phrase : phrases_) {
        if (i + phrase.size() > folded.size()) continue;
        bool match = true;
        for (std::size_t k = 0; k < phrase.size(); ++k) {
            if (folded[i + k] != phrase[k]) { match = false; break; }
        }
        if (match) return phrase.size();
    }
    return 0;
}

std::size_t MarkerSet::count_in(const Sentence& s) const {
    if (phrases_.empty()) return 0;
    auto folded = folded_surfaces(s);
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < folded.size()) {
        std::size_t len = match_length_at(folded, i);
        if (len > 0) {
            ++count;
            i += len;
        } else {
            ++i;
        }
    }
    return count;
}

void LexiconSet::validate_and_compile() {
    for (const auto& m : meeting_markers)
        if (violating_markers.count(m))
            throw DataError("marker '" + m + "' appears in both marker lists");
    if (!meeting_markers.count("so"))
        throw DataError("meeting marker list must contain 'so'");
    if (!violating_markers.count("but"))
        throw DataError("violating marker list must contain 'but'");
    for (const auto& [lemma, syns] : synonyms) {
        auto it = antonyms.find(lemma);
        if (it == antonyms.end()) continue;
        for (const auto& s : syns)
            if (it->second.count(s))
                throw DataError("'" + s + "' is both synonym and antonym of '" + lemma + "'");
    }
    meeting_compiled = MarkerSet(meeting_markers);
    violating_compiled = MarkerSet(violating_markers);
}

Polarity LexiconSet::connotation_of(const std::string& lemma) const {
    auto it = connotation.find(lemma);
    return it == connotation.end() ? Polarity::Neutral : it->second;
}

Polarity LexiconSet::sentiment_of(const std::string& lemma) const {
    auto it = sentiment.find(lemma);
    return it == sentiment.end() ? Polarity::Neutral : it->second;
}

std::set<std::string> default_meeting_markers() {
    return {
        "accordingly", "so", "ultimately", "finally", "thus", "therefore",
        "hence", "consequently", "as a result", "in the end", "indeed",
        "in fact", "thereby", "in sum", "overall",
    };
}

std::set<std::string> default_violating_markers() {
    return {
        "although", "rather", "yet", "but", "however", "though",
        "even though", "even if", "nevertheless", "nonetheless", "instead",
        "whereas", "conversely", "by contrast", "in contrast",
        "on the contrary", "on the other hand", "still", "otherwise",
        "unless", "except", "regardless", "much as", "alternatively",
        "as an alternative", "by comparison", "nor", "on the one hand",
        "lest", "as if", "as though",
    };
}

LexiconSet default_lexicons() {
    LexiconSet lex;
    lex.meeting_markers = default_meeting_markers();
    lex.violating_markers = default_violating_markers();
    lex.validate_and_compile();
    return lex;
}

LexiconSet load_lexicons(const std::string& dir) {
    namespace fs = std::filesystem;
    LexiconSet lex;

    auto conn_path = (fs::path(dir) / "connotation.tsv").string();
    if (fs::exists(conn_path)) {
        for_tsv_lines(conn_path, [&](const std::vector<std::string>& f, std::size_t ln) {
            if (f.size() != 2) fail(conn_path, ln, "expected 'lemma<TAB>polarity'");
            try {
                lex.connotation[lower_copy(f[0])] = parse_polarity(f[1]);
            } catch (const DataError& e) {
                fail(conn_path, ln, e.what());
            }
        });
    }

    auto sent_path = (fs::path(dir) / "sentiment.tsv").string();
    if (fs::exists(sent_path)) {
        for_tsv_lines(sent_path, [&](const std::vector<std::string>& f, std::size_t ln) {
            if (f.size() != 2) fail(sent_path, ln, "expected 'lemma<TAB>polarity'");
            try {
                lex.sentiment[lower_copy(f[0])] = parse_polarity(f[1]);
            } catch (const DataError& e) {
                fail(sent_path, ln, e.what());
            }
        });
    }

    auto wn_path = (fs::path(dir) / "wordnet.tsv").string();
    if (fs::exists(wn_path)) {
        for_tsv_lines(wn_path, [&](const std::vector<std::string>& f, std::size_t ln) {
            if (f.size() != 3) fail(wn_path, ln, "expected 'lemma<TAB>relation<TAB>lemma'");
            std::string a = lower_copy(f[0]);
            std::string rel = lower_copy(f[1]);
            std::string b = lower_copy(f[2]);
            if (a.empty() || b.empty() || a == b)
                fail(wn_path, ln, "bad lemma pair");
            if (rel == "synonym" || rel == "syn") {
                lex.synonyms[a].insert(b);
                lex.synonyms[b].insert(a);
            } else if (rel == "antonym" || rel == "ant") {
                lex.antonyms[a].insert(b);
                lex.antonyms[b].insert(a);
            } else {
                fail(wn_path, ln, "unknown relation '" + f[1] + "'");
            }
        });
    }

    auto read_markers = [](const std::string& path) {
        std::set<std::string> out;
        for_tsv_lines(path, [&](const std::vector<std::string>& f, std::size_t ln) {
            if (f.empty() || f[0].empty()) fail(path, ln, "empty marker");
            out.insert(lower_copy(f[0]));
        });
        return out;
    };
    auto meet_path = (fs::path(dir) / "markers" / "meeting.txt").string();
    lex.meeting_markers =
        fs::exists(meet_path) ? read_markers(meet_path) : default_meeting_markers();
    auto viol_path = (fs::path(dir) / "markers" / "violating.txt").string();
    lex.violating_markers =
        fs::exists(viol_path) ? read_markers(viol_path) : default_violating_markers();

    lex.validate_and_compile();
    return lex;
}

Polarity sentence_sentiment(const Sentence& s, const LexiconSet& lex) {
    static const std::set<std::string> negators = {"not", "n't", "never", "no"};
    int score = 0;
    std::vector<std::string> folded;
    folded.reserve(s.tokens.size());
    for (const auto& t : s.tokens) folded.push_back(lower_copy(t.surface));
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
        int sign = polarity_sign(lex.sentiment_of(s.tokens[i].lemma));
        if (sign == 0) continue;
        for (std::size_t back = 1; back <= 3 && back <= i; ++back) {
            if (negators.count(folded[i - back])) {
                sign = -sign;
                break;
            }
        }
        score += sign;
    }
    if (score > 0) return Polarity::Positive;
    if (score < 0) return Polarity::Negative;
    return Polarity::Neutral;
}

SentimentTable SentimentTable::load(const std::string& path) {
    SentimentTable t;
    for_tsv_lines(path, [&](const std::vector<std::string>& f, std::size_t ln) {
        if (f.size() != 3)
            fail(path, ln, "expected 'narrative_id<TAB>sentence_index<TAB>polarity'");
        std::size_t pos = 0;
        long idx = 0;
        try {
            idx = std::stol(f[1], &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != f[1].size() || idx < 0)
            fail(path, ln, "bad sentence index '" + f[1] + "'");
        try {
            t.set(f[0], static_cast<std::size_t>(idx), parse_polarity(f[2]));
        } catch (const DataError& e) {
            fail(path, ln, e.what());
        }
    });
    return t;
}

void SentimentTable::set(const std::string& narrative_id, std::size_t sentence_index,
                         Polarity p) {
    table_[{narrative_id, sentence_index}] = p;
}

std::optional<Polarity> SentimentTable::lookup(const std::string& narrative_id,
                                               std::size_t sentence_index) const {
    auto it = table_.find({narrative_id, sentence_index});
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

Polarity sentiment_for(const Sentence& s, const std::string& narrative_id,
                       const LexiconSet& lex, const SentimentTable& table) {
    if (auto p = table.lookup(narrative_id, s.index)) return *p;
    return sentence_sentiment(s, lex);
}

}  // namespace fulfill
