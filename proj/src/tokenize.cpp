#include "fulfill/tokenize.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "fulfill/errors.hpp"

namespace fulfill {
namespace {

bool ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}
bool ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool ascii_digit(char c) { return c >= '0' && c <= '9'; }
bool ascii_alnum(char c) { return ascii_alpha(c) || ascii_digit(c); }
char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? char(c - 'A' + 'a') : c; }
bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }
bool is_vowelish(char c) { return is_vowel(c) || c == 'y'; }

std::size_t match_u8(const std::string& t, std::size_t i, const char* seq) {
    std::size_t n = std::char_traits<char>::length(seq);
    if (i + n <= t.size() && t.compare(i, n, seq) == 0) return n;
    return 0;
}

// ASCII apostrophe or U+2019; returns byte length, 0 if neither.
std::size_t apostrophe_len(const std::string& t, std::size_t i) {
    if (i < t.size() && t[i] == '\'') return 1;
    return match_u8(t, i, "\xe2\x80\x99");
}

// Multibyte punctuation we recognize explicitly; other non-ASCII bytes are
// treated as word characters.
std::size_t punct_u8_len(const std::string& t, std::size_t i) {
    static const char* seqs[] = {
        "\xe2\x80\x98",  // left single quote
        "\xe2\x80\x99",  // right single quote
        "\xe2\x80\x9c",  // left double quote
        "\xe2\x80\x9d",  // right double quote
        "\xe2\x80\x93",  // en dash
        "\xe2\x80\x94",  // em dash
        "\xe2\x80\xa6",  // ellipsis
    };
    for (const char* s : seqs)
        if (std::size_t n = match_u8(t, i, s)) return n;
    return 0;
}

std::size_t ellipsis_len(const std::string& t, std::size_t i) {
    return match_u8(t, i, "\xe2\x80\xa6");
}

bool closing_trail_char(const std::string& t, std::size_t i, std::size_t* len) {
    if (i >= t.size()) return false;
    char c = t[i];
    if (c == '"' || c == '\'' || c == ')' || c == ']') { *len = 1; return true; }
    if (std::size_t n = match_u8(t, i, "\xe2\x80\x99")) { *len = n; return true; }
    if (std::size_t n = match_u8(t, i, "\xe2\x80\x9d")) { *len = n; return true; }
    return false;
}

struct IrregularVerb {
    const char* lemma;
    const char* past;
    const char* past_participle;
    const char* present_participle;
};

const IrregularVerb kIrregulars[] = {
    {"be", "was", "been", "being"},       {"become", "became", "become", "becoming"},
    {"begin", "began", "begun", "beginning"}, {"break", "broke", "broken", "breaking"},
    {"bring", "brought", "brought", "bringing"}, {"build", "built", "built", "building"},
    {"buy", "bought", "bought", "buying"}, {"catch", "caught", "caught", "catching"},
    {"choose", "chose", "chosen", "choosing"}, {"come", "came", "come", "coming"},
    {"deal", "dealt", "dealt", "dealing"}, {"do", "did", "done", "doing"},
    {"drink", "drank", "drunk", "drinking"}, {"drive", "drove", "driven", "driving"},
    {"eat", "ate", "eaten", "eating"},     {"fall", "fell", "fallen", "falling"},
    {"feel", "felt", "felt", "feeling"},   {"fight", "fought", "fought", "fighting"},
    {"find", "found", "found", "finding"}, {"fly", "flew", "flown", "flying"},
    {"forget", "forgot", "forgotten", "forgetting"}, {"get", "got", "gotten", "getting"},
    {"give", "gave", "given", "giving"},   {"go", "went", "gone", "going"},
    {"grow", "grew", "grown", "growing"},  {"have", "had", "had", "having"},
    {"hear", "heard", "heard", "hearing"}, {"hold", "held", "held", "holding"},
    {"keep", "kept", "kept", "keeping"},   {"know", "knew", "known", "knowing"},
    {"lead", "led", "led", "leading"},     {"leave", "left", "left", "leaving"},
    {"lose", "lost", "lost", "losing"},    {"make", "made", "made", "making"},
    {"mean", "meant", "meant", "meaning"}, {"meet", "met", "met", "meeting"},
    {"pay", "paid", "paid", "paying"},     {"put", "put", "put", "putting"},
    {"ride", "rode", "ridden", "riding"},  {"rise", "rose", "risen", "rising"},
    {"run", "ran", "run", "running"},      {"say", "said", "said", "saying"},
    {"see", "saw", "seen", "seeing"},      {"seek", "sought", "sought", "seeking"},
    {"sell", "sold", "sold", "selling"},   {"send", "sent", "sent", "sending"},
    {"sing", "sang", "sung", "singing"},   {"sit", "sat", "sat", "sitting"},
    {"sleep", "slept", "slept", "sleeping"}, {"speak", "spoke", "spoken", "speaking"},
    {"spend", "spent", "spent", "spending"}, {"stand", "stood", "stood", "standing"},
    {"swim", "swam", "swum", "swimming"},  {"take", "took", "taken", "taking"},
    {"teach", "taught", "taught", "teaching"}, {"tell", "told", "told", "telling"},
    {"think", "thought", "thought", "thinking"}, {"throw", "threw", "thrown", "throwing"},
    {"understand", "understood", "understood", "understanding"},
    {"wake", "woke", "woken", "waking"},   {"wear", "wore", "worn", "wearing"},
    {"win", "won", "won", "winning"},      {"write", "wrote", "written", "writing"},
};

// Forms the suffix rules would get wrong, plus every inflection of the verbs
// the default pattern config ships with: those lemmas are the precision-
// critical class, so they bypass the rules entirely.
const std::pair<const char*, const char*> kLemmaExtra[] = {
    {"is", "be"}, {"are", "be"}, {"am", "be"}, {"were", "be"},
    {"does", "do"}, {"has", "have"}, {"goes", "go"}, {"says", "say"},
    {"ca", "can"}, {"wo", "will"}, {"sha", "shall"}, {"n't", "not"},
    {"'m", "be"}, {"'re", "be"}, {"'ve", "have"}, {"'ll", "will"}, {"'d", "would"},
    {"men", "man"}, {"women", "woman"}, {"children", "child"},
    {"agreed", "agree"}, {"freed", "free"}, {"guaranteed", "guarantee"},
    {"added", "add"}, {"adding", "add"}, {"used", "use"}, {"using", "use"},
    {"changed", "change"}, {"changing", "change"}, {"managed", "manage"},
    {"managing", "manage"}, {"challenged", "challenge"}, {"charged", "charge"},
    {"damaged", "damage"}, {"encouraged", "encourage"}, {"engaged", "engage"},
    {"focused", "focus"}, {"focusing", "focus"}, {"focuses", "focus"},
    {"shoes", "shoe"}, {"heroes", "hero"},
    {"morning", "morning"}, {"evening", "evening"}, {"during", "during"},
    {"ceiling", "ceiling"}, {"anything", "anything"}, {"something", "something"},
    {"nothing", "nothing"}, {"everything", "everything"},
    {"died", "die"}, {"dying", "die"}, {"lied", "lie"}, {"lying", "lie"},
    {"tied", "tie"}, {"tying", "tie"},
    {"wanted", "want"}, {"wanting", "want"}, {"wants", "want"},
    {"needed", "need"}, {"needing", "need"}, {"needs", "need"},
    {"ordered", "order"}, {"ordering", "order"}, {"orders", "order"},
    {"arranged", "arrange"}, {"arranging", "arrange"}, {"arranges", "arrange"},
    {"decided", "decide"}, {"deciding", "decide"}, {"decides", "decide"},
    {"hoped", "hope"}, {"hoping", "hope"}, {"hopes", "hope"},
    {"waited", "wait"}, {"waiting", "wait"}, {"waits", "wait"},
    {"wished", "wish"}, {"wishing", "wish"}, {"wishes", "wish"},
    {"scheduled", "schedule"}, {"scheduling", "schedule"}, {"schedules", "schedule"},
    {"asked", "ask"}, {"asking", "ask"}, {"asks", "ask"},
    {"required", "require"}, {"requiring", "require"}, {"requires", "require"},
    {"requested", "request"}, {"requesting", "request"}, {"requests", "request"},
    {"demanded", "demand"}, {"demanding", "demand"}, {"demands", "demand"},
    {"ached", "ache"}, {"aching", "ache"}, {"aches", "ache"},
    {"aimed", "aim"}, {"aiming", "aim"}, {"aims", "aim"},
    {"desired", "desire"}, {"desiring", "desire"}, {"desires", "desire"},
};

const std::map<std::string, std::string>& lemma_exceptions() {
    static const std::map<std::string, std::string> table = [] {
        std::map<std::string, std::string> m;
        for (const auto& v : kIrregulars) {
            m[v.past] = v.lemma;
            m[v.past_participle] = v.lemma;
            m[v.present_participle] = v.lemma;
        }
        for (const auto& [form, lemma] : kLemmaExtra) m[form] = lemma;
        return m;
    }();
    return table;
}

bool monosyllabic(const std::string& s) {
    int groups = 0;
    bool in_group = false;
    for (char c : s) {
        if (is_vowelish(c)) {
            if (!in_group) ++groups;
            in_group = true;
        } else {
            in_group = false;
        }
    }
    return groups == 1;
}

bool doubled_inflection_tail(const std::string& s) {
    if (s.size() < 3) return false;
    char a = s[s.size() - 1], b = s[s.size() - 2];
    static const std::string doublers = "bdgmnprt";
    return a == b && doublers.find(a) != std::string::npos && is_vowel(s[s.size() - 3]);
}

// Shared stem repair after stripping -ed / -ing.
std::string repair_stem(std::string s) {
    if (doubled_inflection_tail(s)) { s.pop_back(); return s; }
    char last = s.empty() ? '\0' : s.back();
    if (last == 'c' || last == 'v' || last == 'z' || last == 'u') return s + 'e';
    if (last == 's' && s.size() >= 3 && is_vowel(s[s.size() - 2])) return s + 'e';
    if (s.size() >= 2 && is_vowelish(s.back())) return s;             // play, enjoy
    if (s.size() >= 2 && !is_vowelish(s[s.size() - 2])) return s;     // want, ask
    if (s.size() >= 3 && monosyllabic(s) && !is_vowelish(s.back()) &&
        last != 'w' && last != 'x' && is_vowel(s[s.size() - 2]) &&
        !is_vowelish(s[s.size() - 3]))
        return s + 'e';                                               // hop -> hope, not look
    return s;
}

bool has_vowel(const std::string& s) {
    return std::any_of(s.begin(), s.end(), is_vowelish);
}

}  // namespace

std::string lower_copy(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size();) {
        if (std::size_t n = match_u8(s, i, "\xe2\x80\x99")) {
            out.push_back('\'');
            i += n;
        } else {
            out.push_back(ascii_lower(s[i]));
            ++i;
        }
    }
    return out;
}

std::string lemma_of(const std::string& w) {
    if (w.empty()) return w;
    const auto& exc = lemma_exceptions();
    if (auto it = exc.find(w); it != exc.end()) return it->second;
    std::size_t n = w.size();
    auto ends = [&](const char* suf) {
        std::size_t m = std::char_traits<char>::length(suf);
        return n >= m && w.compare(n - m, m, suf) == 0;
    };
    if (ends("ies") && n > 4) return w.substr(0, n - 3) + "y";
    if (ends("ied")) {
        if (n > 4) return w.substr(0, n - 3) + "y";
        return w.substr(0, n - 1);  // died -> die
    }
    if (ends("sses")) return w.substr(0, n - 2);
    if (ends("es") && n > 3) {
        std::string stem = w.substr(0, n - 2);
        char last = stem.back();
        bool soft = last == 'x' || last == 'z' || last == 'o' ||
                    (stem.size() >= 2 && stem[stem.size() - 2] == 'c' && last == 'h') ||
                    (stem.size() >= 2 && stem[stem.size() - 2] == 's' && last == 'h');
        if (soft) return stem;
        // otherwise fall through to the plain -s rule (hopes -> hope, causes -> cause)
    }
    if (w.back() == 's' && n > 3 && !ends("ss") && !ends("us") && !ends("is"))
        return w.substr(0, n - 1);
    if (ends("ed") && n >= 4) {
        if (ends("eed")) return w;  // base verbs like exceed; pasts of -ee verbs sit in the table
        return repair_stem(w.substr(0, n - 2));
    }
    if (ends("ing") && n >= 5) {
        std::string stem = w.substr(0, n - 3);
        if (!has_vowel(stem)) return w;  // thing, sting
        return repair_stem(std::move(stem));
    }
    return w;
}

std::optional<VerbForms> irregular_forms(const std::string& lemma) {
    for (const auto& v : kIrregulars)
        if (lemma == v.lemma)
            return VerbForms{v.past, v.past_participle, v.present_participle};
    return std::nullopt;
}

VerbForms inflect(const std::string& lemma) {
    static const std::set<std::string> defective = {
        "can", "could", "may", "might", "must", "shall",
        "should", "will", "would", "ought"};
    if (lemma.empty() || !std::all_of(lemma.begin(), lemma.end(),
                                      [](char c) { return c >= 'a' && c <= 'z'; }))
        throw DataError("cannot inflect lemma '" + lemma + "': not a lowercase word");
    if (defective.count(lemma))
        throw DataError("lemma '" + lemma + "' has no past-form inflections");
    if (auto irr = irregular_forms(lemma)) return *irr;

    std::size_t n = lemma.size();
    char last = lemma.back();
    bool cy = last == 'y' && n >= 2 && !is_vowel(lemma[n - 2]);
    bool cvc = n >= 3 && !is_vowelish(last) && last != 'w' && last != 'x' &&
               is_vowel(lemma[n - 2]) && !is_vowel(lemma[n - 3]) && monosyllabic(lemma);

    VerbForms f;
    if (last == 'e') {
        f.past = lemma + "d";
    } else if (cy) {
        f.past = lemma.substr(0, n - 1) + "ied";
    } else if (cvc) {
        f.past = lemma + last + "ed";
    } else {
        f.past = lemma + "ed";
    }
    f.past_participle = f.past;
    if (last == 'e' && !(n >= 2 && lemma[n - 2] == 'e')) {
        f.present_participle = lemma.substr(0, n - 1) + "ing";
    } else if (cvc) {
        f.present_participle = lemma + last + "ing";
    } else {
        f.present_participle = lemma + "ing";
    }
    return f;
}

const std::set<std::string>& default_stop_words() {
    static const std::set<std::string> words = {
        "a", "an", "the", "this", "that", "these", "those",
        "i", "me", "my", "mine", "myself", "we", "us", "our", "ours", "ourselves",
        "you", "your", "yours", "yourself", "yourselves",
        "he", "him", "his", "himself", "she", "her", "hers", "herself",
        "it", "its", "itself", "they", "them", "their", "theirs", "themselves",
        "who", "whom", "whose", "which", "what", "where", "when", "why", "how",
        "am", "is", "are", "was", "were", "be", "been", "being",
        "have", "has", "had", "having",
        "will", "would", "shall", "should", "can", "could", "may", "might",
        "must", "ought",
        "and", "or", "but", "nor", "so", "yet", "if", "then", "than", "because",
        "while", "although", "though",
        "as", "of", "at", "by", "for", "with", "about", "against", "between",
        "into", "through", "during", "before", "after", "above", "below",
        "to", "from", "up", "down", "in", "out", "on", "off", "over", "under",
        "all", "any", "both", "each", "few", "more", "most", "other", "some",
        "such", "no", "not", "n't", "only", "own", "same", "too", "very",
        "just", "also", "there", "here",
        "'s", "'m", "'re", "'ve", "'ll", "'d",
    };
    return words;
}

const std::set<std::string>& default_abbreviations() {
    static const std::set<std::string> abbrevs = {
        "mr", "mrs", "ms", "dr", "prof", "rev", "sr", "jr", "st", "mt",
        "vs", "etc", "approx", "dept", "est", "fig", "inc", "ltd", "co",
        "corp", "ave", "blvd", "rd", "apt",
        "e.g", "i.e", "u.s", "u.k", "a.m", "p.m",
        "jan", "feb", "mar", "apr", "jun", "jul", "aug", "sep", "sept",
        "oct", "nov", "dec", "mon", "tue", "wed", "thu", "fri", "sat", "sun",
    };
    return abbrevs;
}

std::set<std::string> load_word_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open word list '" + path + "'");
    std::set<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || ascii_space(line.back())))
            line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && ascii_space(line[start])) ++start;
        line.erase(0, start);
        if (line.empty() || line[0] == '#') continue;
        out.insert(lower_copy(line));
    }
    return out;
}

Tokenizer::Tokenizer() : Tokenizer(TokenizerOptions{}) {}

Tokenizer::Tokenizer(TokenizerOptions opts)
    : stop_(opts.stop_words.empty() ? default_stop_words() : std::move(opts.stop_words)),
      abbrev_(opts.abbreviations.empty() ? default_abbreviations()
                                         : std::move(opts.abbreviations)) {}

std::vector<std::pair<std::size_t, std::size_t>>
Tokenizer::split_spans(const std::string& text) const {
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    std::size_t n = text.size();
    std::size_t start = 0;
    std::size_t i = 0;
    auto push_span = [&](std::size_t from, std::size_t to) {
        while (from < to && ascii_space(text[from])) ++from;
        while (to > from && ascii_space(text[to - 1])) --to;
        if (from < to) spans.emplace_back(from, to);
    };
    while (i < n) {
        bool final_punct = text[i] == '.' || text[i] == '!' || text[i] == '?';
        std::size_t ell = final_punct ? 0 : ellipsis_len(text, i);
        if (!final_punct && ell == 0) {
            ++i;
            continue;
        }
        std::size_t run_begin = i;
        int period_count = 0;
        int other_count = 0;
        std::size_t j = i;
        while (j < n) {
            if (text[j] == '.') { ++period_count; ++j; }
            else if (text[j] == '!' || text[j] == '?') { ++other_count; ++j; }
            else if (std::size_t e = ellipsis_len(text, j)) { ++other_count; j += e; }
            else break;
        }
        std::size_t k = j;
        std::size_t trail_len = 0;
        while (closing_trail_char(text, k, &trail_len)) k += trail_len;
        bool at_break = k >= n || ascii_space(text[k]);
        bool boundary = at_break;
        if (boundary && period_count == 1 && other_count == 0) {
            // single period: guard against abbreviations and initials
            std::size_t w_end = run_begin;
            std::size_t w_begin = w_end;
            while (w_begin > 0 &&
                   (ascii_alpha(text[w_begin - 1]) || text[w_begin - 1] == '.'))
                --w_begin;
            if (w_begin < w_end) {
                std::string word = lower_copy(text.substr(w_begin, w_end - w_begin));
                while (!word.empty() && word.front() == '.') word.erase(word.begin());
                bool single_initial = word.size() == 1 && ascii_alpha(word[0]);
                if (single_initial || abbrev_.count(word)) boundary = false;
            }
        }
        if (boundary) {
            push_span(start, k);
            start = k;
        }
        i = k > j ? k : j;
    }
    push_span(start, n);
    return spans;
}

void Tokenizer::tokenize_into(Sentence& s) const {
    const std::string& t = s.text;
    std::size_t n = t.size();
    std::size_t i = 0;
    auto emit = [&](std::size_t from, std::size_t to, bool word) {
        Token tok;
        tok.surface = t.substr(from, to - from);
        tok.char_start = from;
        tok.char_end = to;
        if (word) {
            std::string folded = lower_copy(tok.surface);
            tok.lemma = lemma_of(folded);
            tok.is_content_word = !stop_.count(folded) && !stop_.count(tok.lemma);
        } else {
            tok.lemma = tok.surface;
            tok.is_content_word = false;
        }
        s.tokens.push_back(std::move(tok));
    };
    while (i < n) {
        if (ascii_space(t[i])) { ++i; continue; }
        std::size_t p = punct_u8_len(t, i);
        bool apostrophe_start = apostrophe_len(t, i) > 0;
        if (ascii_alnum(t[i]) ||
            (static_cast<unsigned char>(t[i]) >= 0x80 && p == 0) ||
            (apostrophe_start && i + apostrophe_len(t, i) < n &&
             ascii_alnum(t[i + apostrophe_len(t, i)]))) {
            // word token (a leading apostrophe begins a clitic like 's)
            std::size_t b = i;
            if (apostrophe_start) b += apostrophe_len(t, i);
            while (b < n) {
                char c = t[b];
                if (ascii_alnum(c)) { ++b; continue; }
                if (static_cast<unsigned char>(c) >= 0x80) {
                    std::size_t pl = punct_u8_len(t, b);
                    std::size_t al = apostrophe_len(t, b);
                    if (al > 0 && b + al < n && ascii_alnum(t[b + al])) { b += al; continue; }
                    if (pl > 0) break;
                    ++b;  // other non-ASCII byte: part of the word
                    continue;
                }
                if (c == '\'' && b + 1 < n && ascii_alnum(t[b + 1])) { ++b; continue; }
                if (c == '-' && b + 1 < n && ascii_alnum(t[b + 1])) { ++b; continue; }
                if ((c == '.' || c == ',') && b > i && ascii_digit(t[b - 1]) &&
                    b + 1 < n && ascii_digit(t[b + 1])) { ++b; continue; }
                break;
            }
            // contraction splitting
            std::size_t split_at = std::string::npos;
            // trailing n't (couldn't -> could + n't)
            for (std::size_t q = i; q + 1 < b; ++q) {
                std::size_t al = apostrophe_len(t, q);
                if (al == 0) continue;
                if (q > i && ascii_lower(t[q - 1]) == 'n' && q + al < b &&
                    ascii_lower(t[q + al]) == 't' && q + al + 1 == b && q - 1 > i) {
                    split_at = q - 1;
                }
            }
            if (split_at == std::string::npos) {
                // clitics: 's 'm 'd 're 've 'll
                for (std::size_t q = b; q-- > i + 1;) {
                    std::size_t al = apostrophe_len(t, q);
                    if (al == 0) continue;
                    std::string suf = lower_copy(t.substr(q + al, b - q - al));
                    if (suf == "s" || suf == "m" || suf == "d" || suf == "re" ||
                        suf == "ve" || suf == "ll")
                        split_at = q;
                    break;
                }
            }
            if (split_at != std::string::npos && split_at > i) {
                emit(i, split_at, true);
                emit(split_at, b, true);
            } else {
                emit(i, b, true);
            }
            i = b;
        } else if (p > 0) {
            emit(i, i + p, false);
            i += p;
        } else {
            emit(i, i + 1, false);
            ++i;
        }
    }
}

std::vector<Sentence> Tokenizer::run(const std::string& text) const {
    std::vector<Sentence> out;
    for (const auto& [from, to] : split_spans(text)) {
        Sentence s;
        s.index = out.size();
        s.text = text.substr(from, to - from);
        tokenize_into(s);
        out.push_back(std::move(s));
    }
    return out;
}

Sentence Tokenizer::run_single(const std::string& text, std::size_t index) const {
    std::size_t from = 0, to = text.size();
    while (from < to && ascii_space(text[from])) ++from;
    while (to > from && ascii_space(text[to - 1])) --to;
    Sentence s;
    s.index = index;
    s.text = text.substr(from, to - from);
    tokenize_into(s);
    return s;
}

std::vector<Sentence> tokenize(const std::string& text) {
    static const Tokenizer t;
    return t.run(text);
}

std::set<std::string> read_stop_words(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open stop word file '" + path + "'");
    std::set<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t");
        out.insert(lower_copy(line.substr(b, e - b + 1)));
    }
    // An empty set would silently fall back to the built-in list.
    if (out.empty()) throw DataError(path + ": no stop words");
    return out;
}

}  // namespace fulfill
