#include "fulfill/corpus_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "fulfill/errors.hpp"
#include "json.hpp"

namespace fulfill {
namespace {

using njson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& name, std::size_t lineno, const std::string& msg) {
    throw DataError(name + ":" + std::to_string(lineno) + ": " + msg);
}

const njson& field(const njson& obj, const char* key, const std::string& name,
                   std::size_t lineno) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(name, lineno, std::string("missing field '") + key + "'");
    return *it;
}

std::string get_string(const njson& j, const char* key, const std::string& name,
                       std::size_t lineno) {
    const njson& v = field(j, key, name, lineno);
    if (!v.is_string()) fail(name, lineno, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::size_t get_uint(const njson& v, const char* key, const std::string& name,
                     std::size_t lineno) {
    if (!v.is_number_integer() || (v.is_number_integer() && v.get<long long>() < 0))
        fail(name, lineno, std::string("field '") + key + "' must be a non-negative integer");
    return static_cast<std::size_t>(v.get<long long>());
}

TokenSpan get_span(const njson& j, const char* key, const std::string& name,
                   std::size_t lineno) {
    const njson& v = field(j, key, name, lineno);
    if (!v.is_array() || v.size() != 2)
        fail(name, lineno, std::string("field '") + key + "' must be a [begin, end] pair");
    return {get_uint(v[0], key, name, lineno), get_uint(v[1], key, name, lineno)};
}

std::vector<std::string> get_string_array(const njson& j, const char* key,
                                          const std::string& name, std::size_t lineno) {
    const njson& v = field(j, key, name, lineno);
    if (!v.is_array())
        fail(name, lineno, std::string("field '") + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string())
            fail(name, lineno, std::string("field '") + key + "' must hold strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

njson parse_line(const std::string& line, const std::string& name, std::size_t lineno) {
    njson j;
    try {
        j = njson::parse(line);
    } catch (const njson::parse_error& e) {
        fail(name, lineno, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail(name, lineno, "record is not a JSON object");
    return j;
}

std::string dump_line(const njson& j) {
    return j.dump(-1, ' ', false, njson::error_handler_t::replace);
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path + "'");
    return out;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

long parse_long(const std::string& s, const std::string& name, std::size_t lineno,
                const char* what) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        fail(name, lineno, std::string("bad ") + what + " '" + s + "'");
    }
    if (pos != s.size()) fail(name, lineno, std::string("bad ") + what + " '" + s + "'");
    return v;
}

}  // namespace

GoldInstance to_gold(const InstanceRecord& r) {
    if (!r.label)
        throw DataError("instance '" + r.instance.id + "' has no fulfillment label");
    GoldInstance g;
    g.instance = r.instance;
    g.label = *r.label;
    g.agreement_score = r.agreement_score;
    g.evidence = r.evidence;
    g.overlap_score = r.overlap_score;
    return g;
}

InstanceRecord to_record(const GoldInstance& g) {
    InstanceRecord r;
    r.instance = g.instance;
    r.label = g.label;
    r.agreement_score = g.agreement_score;
    r.evidence = g.evidence;
    r.overlap_score = g.overlap_score;
    return r;
}

InstanceRecord to_record(const DesireInstance& inst) {
    InstanceRecord r;
    r.instance = inst;
    return r;
}

std::vector<Narrative> read_narratives(std::istream& in, const std::string& name,
                                       const Tokenizer& tok) {
    std::vector<Narrative> out;
    std::set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) continue;
        njson j = parse_line(line, name, lineno);
        Narrative n;
        n.id = get_string(j, "Id", name, lineno);
        if (n.id.empty()) fail(name, lineno, "empty narrative Id");
        if (!seen.insert(n.id).second)
            fail(name, lineno, "duplicate narrative Id '" + n.id + "'");
        if (auto it = j.find("Source"); it != j.end() && it->is_string())
            n.source = it->get<std::string>();
        if (j.contains("Sentences")) {
            auto sents = get_string_array(j, "Sentences", name, lineno);
            for (std::size_t i = 0; i < sents.size(); ++i)
                n.sentences.push_back(tok.run_single(sents[i], i));
        } else if (j.contains("Text")) {
            n.sentences = tok.run(get_string(j, "Text", name, lineno));
        } else {
            fail(name, lineno, "narrative needs 'Sentences' or 'Text'");
        }
        try {
            validate(n);
        } catch (const DataError& e) {
            fail(name, lineno, e.what());
        }
        out.push_back(std::move(n));
    }
    return out;
}

std::vector<Narrative> read_narratives(const std::string& path, const Tokenizer& tok) {
    auto in = open_in(path);
    return read_narratives(in, path, tok);
}

void write_narratives(std::ostream& out, const std::vector<Narrative>& ns) {
    for (const auto& n : ns) {
        njson j;
        j["Id"] = n.id;
        if (!n.source.empty()) j["Source"] = n.source;
        njson sents = njson::array();
        for (const auto& s : n.sentences) sents.push_back(s.text);
        j["Sentences"] = std::move(sents);
        out << dump_line(j) << '\n';
    }
}

void write_narratives(const std::string& path, const std::vector<Narrative>& ns) {
    auto out = open_out(path);
    write_narratives(out, ns);
    if (!out) throw DataError("error writing '" + path + "'");
}

std::vector<InstanceRecord> read_instances(std::istream& in, const std::string& name,
                                           const Tokenizer& tok) {
    std::vector<InstanceRecord> out;
    std::set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) continue;
        njson j = parse_line(line, name, lineno);
        InstanceRecord r;
        DesireInstance& inst = r.instance;
        inst.id = get_string(j, "Instance-Id", name, lineno);
        if (inst.id.empty()) fail(name, lineno, "empty Instance-Id");
        if (!seen.insert(inst.id).second)
            fail(name, lineno, "duplicate Instance-Id '" + inst.id + "'");
        inst.narrative_id = get_string(j, "Narrative-Id", name, lineno);
        inst.desire_sentence_index =
            get_uint(field(j, "Desire-Sentence-Index", name, lineno),
                     "Desire-Sentence-Index", name, lineno);
        inst.pattern_id = get_string(j, "Pattern-Id", name, lineno);
        inst.verb_lemma = get_string(j, "Verb-Lemma", name, lineno);
        inst.match_span = get_span(j, "Match-Span", name, lineno);
        if (j.contains("Subject-Span") && !j["Subject-Span"].is_null())
            inst.subject_span = get_span(j, "Subject-Span", name, lineno);
        {
            const njson& v = field(j, "Focal-Word-Indices", name, lineno);
            if (!v.is_array())
                fail(name, lineno, "field 'Focal-Word-Indices' must be an array");
            for (const auto& e : v)
                inst.focal_word_indices.push_back(
                    get_uint(e, "Focal-Word-Indices", name, lineno));
        }
        if (auto it = j.find("Is-Hypothetical"); it != j.end() && !it->is_null()) {
            if (!it->is_boolean())
                fail(name, lineno, "field 'Is-Hypothetical' must be a boolean");
            inst.is_hypothetical = it->get<bool>();
        }
        auto prior = get_string_array(j, "Prior-Context", name, lineno);
        std::string desire_text =
            get_string(j, "Desire-Expression-Sentence", name, lineno);
        auto post = get_string_array(j, "Post-Context", name, lineno);
        if (prior.size() > inst.desire_sentence_index)
            fail(name, lineno, "prior context longer than the sentence index allows");
        for (std::size_t i = 0; i < prior.size(); ++i)
            inst.prior_context.push_back(tok.run_single(
                prior[i], inst.desire_sentence_index - prior.size() + i));
        inst.desire_sentence = tok.run_single(desire_text, inst.desire_sentence_index);
        for (std::size_t i = 0; i < post.size(); ++i)
            inst.post_context.push_back(
                tok.run_single(post[i], inst.desire_sentence_index + 1 + i));
        if (j.contains("Fulfillment-Label")) {
            r.label = parse_label(get_string(j, "Fulfillment-Label", name, lineno));
            r.agreement_score = static_cast<int>(
                get_uint(field(j, "Fulfillment-Agreement-Score", name, lineno),
                         "Fulfillment-Agreement-Score", name, lineno));
            if (j.contains("Evidence"))
                r.evidence = get_string_array(j, "Evidence", name, lineno);
            if (auto it = j.find("Evidence-Overlap-Score"); it != j.end())
                r.overlap_score = static_cast<int>(
                    get_uint(*it, "Evidence-Overlap-Score", name, lineno));
        }
        try {
            validate(inst);
            if (r.label) validate(to_gold(r));
        } catch (const DataError& e) {
            fail(name, lineno, e.what());
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<InstanceRecord> read_instances(const std::string& path, const Tokenizer& tok) {
    auto in = open_in(path);
    return read_instances(in, path, tok);
}

void write_instances(std::ostream& out, const std::vector<InstanceRecord>& rs) {
    for (const auto& r : rs) {
        const DesireInstance& inst = r.instance;
        njson j;
        j["Instance-Id"] = inst.id;
        j["Narrative-Id"] = inst.narrative_id;
        j["Desire-Sentence-Index"] = inst.desire_sentence_index;
        j["Pattern-Id"] = inst.pattern_id;
        j["Verb-Lemma"] = inst.verb_lemma;
        j["Match-Span"] = njson::array({inst.match_span.begin, inst.match_span.end});
        if (inst.subject_span)
            j["Subject-Span"] =
                njson::array({inst.subject_span->begin, inst.subject_span->end});
        j["Focal-Word-Indices"] = inst.focal_word_indices;
        if (inst.is_hypothetical) j["Is-Hypothetical"] = *inst.is_hypothetical;
        njson prior = njson::array();
        for (const auto& s : inst.prior_context) prior.push_back(s.text);
        j["Prior-Context"] = std::move(prior);
        j["Desire-Expression-Sentence"] = inst.desire_sentence.text;
        njson post = njson::array();
        for (const auto& s : inst.post_context) post.push_back(s.text);
        j["Post-Context"] = std::move(post);
        if (r.label) {
            j["Fulfillment-Label"] = to_string(*r.label);
            j["Fulfillment-Agreement-Score"] = r.agreement_score;
            j["Evidence"] = r.evidence;
            j["Evidence-Overlap-Score"] = r.overlap_score;
        }
        out << dump_line(j) << '\n';
    }
}

void write_instances(const std::string& path, const std::vector<InstanceRecord>& rs) {
    auto out = open_out(path);
    write_instances(out, rs);
    if (!out) throw DataError("error writing '" + path + "'");
}

std::vector<GoldInstance> read_gold(const std::string& path, const Tokenizer& tok) {
    std::vector<GoldInstance> out;
    for (const auto& r : read_instances(path, tok)) out.push_back(to_gold(r));
    return out;
}

void write_gold(const std::string& path, const std::vector<GoldInstance>& gs) {
    std::vector<InstanceRecord> rs;
    rs.reserve(gs.size());
    for (const auto& g : gs) rs.push_back(to_record(g));
    write_instances(path, rs);
}

std::vector<AnnotationRecord> read_annotations(std::istream& in, const std::string& name) {
    std::vector<AnnotationRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty() || line[0] == '#') continue;
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
        if (f.size() < 5)
            fail(name, lineno, "expected at least 5 tab-separated fields, got " +
                                   std::to_string(f.size()));
        AnnotationRecord rec;
        rec.instance_id = f[0];
        rec.annotator_id = f[1];
        if (rec.instance_id.empty() || rec.annotator_id.empty())
            fail(name, lineno, "empty instance or annotator id");
        try {
            rec.label = parse_label(f[2]);
        } catch (const DataError& e) {
            fail(name, lineno, e.what());
        }
        if (rec.label == FulfillmentLabel::None)
            fail(name, lineno, "annotators never assign 'None'");
        if (!f[3].empty()) {
            std::stringstream ss(f[3]);
            std::string item;
            while (std::getline(ss, item, ';')) {
                if (item.empty()) continue;
                std::size_t colon = item.find(':');
                std::size_t dash = item.find('-', colon == std::string::npos ? 0 : colon + 1);
                if (colon == std::string::npos || dash == std::string::npos)
                    fail(name, lineno, "bad evidence item '" + item + "'");
                EvidenceRef ev;
                ev.sentence_offset = static_cast<int>(
                    parse_long(item.substr(0, colon), name, lineno, "sentence offset"));
                long b = parse_long(item.substr(colon + 1, dash - colon - 1), name,
                                    lineno, "evidence span");
                long e = parse_long(item.substr(dash + 1), name, lineno, "evidence span");
                if (b < 0 || e <= b)
                    fail(name, lineno, "bad evidence span '" + item + "'");
                ev.span = {static_cast<std::size_t>(b), static_cast<std::size_t>(e)};
                rec.evidence_spans.push_back(ev);
            }
        }
        if (f[4] == "0") {
            rec.hypothetical = false;
        } else if (f[4] == "1") {
            rec.hypothetical = true;
        } else {
            fail(name, lineno, "hypothetical flag must be 0 or 1, got '" + f[4] + "'");
        }
        if (f.size() >= 6 && !f[5].empty()) {
            std::size_t dash = f[5].find('-');
            if (dash == std::string::npos)
                fail(name, lineno, "bad subject span '" + f[5] + "'");
            long b = parse_long(f[5].substr(0, dash), name, lineno, "subject span");
            long e = parse_long(f[5].substr(dash + 1), name, lineno, "subject span");
            if (b < 0 || e <= b) fail(name, lineno, "bad subject span '" + f[5] + "'");
            rec.subject_marked =
                TokenSpan{static_cast<std::size_t>(b), static_cast<std::size_t>(e)};
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<AnnotationRecord> read_annotations(const std::string& path) {
    auto in = open_in(path);
    return read_annotations(in, path);
}

void write_annotations(std::ostream& out, const std::vector<AnnotationRecord>& rs) {
    for (const auto& r : rs) {
        out << r.instance_id << '\t' << r.annotator_id << '\t' << to_string(r.label)
            << '\t';
        for (std::size_t i = 0; i < r.evidence_spans.size(); ++i) {
            const auto& ev = r.evidence_spans[i];
            if (i) out << ';';
            out << ev.sentence_offset << ':' << ev.span.begin << '-' << ev.span.end;
        }
        out << '\t' << (r.hypothetical ? '1' : '0');
        if (r.subject_marked)
            out << '\t' << r.subject_marked->begin << '-' << r.subject_marked->end;
        out << '\n';
    }
}

void write_annotations(const std::string& path, const std::vector<AnnotationRecord>& rs) {
    auto out = open_out(path);
    write_annotations(out, rs);
    if (!out) throw DataError("error writing '" + path + "'");
}

}  // namespace fulfill
