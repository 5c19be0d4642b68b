// Command line front end. Every subcommand reads and writes the documented
// file formats; `run` drives the whole pipeline from one manifest so a full
// experiment is reproducible from a single seed.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fulfill/aggregator.hpp"
#include "fulfill/batch.hpp"
#include "fulfill/corpus_io.hpp"
#include "fulfill/errors.hpp"
#include "fulfill/evaluation.hpp"
#include "fulfill/extractor.hpp"
#include "fulfill/format.hpp"
#include "fulfill/lexicons.hpp"
#include "fulfill/tokenize.hpp"

namespace fs = std::filesystem;
using namespace fulfill;

namespace {

LexiconSet lexicons_from(const std::string& dir) {
    return dir.empty() ? default_lexicons() : load_lexicons(dir);
}

// Content-word flags are derived wherever text is (re)tokenized, so every
// subcommand that reads narratives or instances takes the same flag.
Tokenizer tokenizer_from(const std::string& stopword_path) {
    if (stopword_path.empty()) return Tokenizer{};
    TokenizerOptions opts;
    opts.stop_words = read_stop_words(stopword_path);
    return Tokenizer(std::move(opts));
}

SentimentTable sentiment_from(const std::string& path) {
    return path.empty() ? SentimentTable{} : SentimentTable::load(path);
}

FeatureConfig config_from(const std::string& families, const std::string& scope) {
    FeatureConfig cfg;
    cfg.enabled_families = parse_family_list(families);
    cfg.context_scope = parse_scope(scope);
    return cfg;
}

void with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path + "'");
    fn(out);
    if (!out) throw DataError("error writing '" + path + "'");
}

std::vector<DesireInstance> instances_of(const std::vector<GoldInstance>& gold) {
    std::vector<DesireInstance> out;
    out.reserve(gold.size());
    for (const auto& g : gold) out.push_back(g.instance);
    return out;
}

// Predictions TSV: instance_id <TAB> label <TAB> P(Fulfilled).
void write_predictions(std::ostream& out, const std::vector<DesireInstance>& insts,
                       const std::vector<Prediction>& preds) {
    for (std::size_t i = 0; i < insts.size(); ++i)
        out << insts[i].id << '\t' << to_string(preds[i].label) << '\t'
            << format_double(preds[i].probability) << '\n';
}

std::map<std::string, FulfillmentLabel> read_predictions(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::map<std::string, FulfillmentLabel> out;
    std::string line;
    std::size_t ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::size_t t1 = line.find('\t');
        std::size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
        if (t1 == std::string::npos || t1 == 0)
            throw DataError(path + ":" + std::to_string(ln) + ": bad prediction line");
        std::string id = line.substr(0, t1);
        std::string lab = t2 == std::string::npos ? line.substr(t1 + 1)
                                                  : line.substr(t1 + 1, t2 - t1 - 1);
        if (!out.emplace(id, parse_label(lab)).second)
            throw DataError(path + ":" + std::to_string(ln) + ": duplicate instance '" + id + "'");
    }
    return out;
}

void write_eval(std::ostream& out, const std::vector<std::pair<std::string, EvalResult>>& rows) {
    print_eval_table(out, rows);
    out << '\n';
    for (const auto& [name, r] : rows) {
        std::size_t ful = 0, unf = 0;
        if (auto it = r.support.find(FulfillmentLabel::Fulfilled); it != r.support.end())
            ful = it->second;
        if (auto it = r.support.find(FulfillmentLabel::Unfulfilled); it != r.support.end())
            unf = it->second;
        out << name << ": " << (ful + unf) << " instances (" << ful << " Fulfilled, " << unf
            << " Unfulfilled), macro F1 " << format_fixed(r.overall.f1, 4) << '\n';
    }
}

struct CommonFlags {
    std::string lexicons;
    std::string sentiment;
    std::string stopwords;
    std::string features = "ALL";
    std::string scope = "desire+context";
    bool serial = false;

    ExecMode mode() const { return serial ? ExecMode::Serial : ExecMode::Parallel; }
    Tokenizer tokenizer() const { return tokenizer_from(stopwords); }
};

void add_feature_flags(CLI::App* cmd, CommonFlags& fl) {
    cmd->add_option("--lexicons", fl.lexicons, "lexicon directory (built-in markers if omitted)");
    cmd->add_option("--sentiment", fl.sentiment, "pre-scored sentence sentiment TSV");
    cmd->add_option("--stopwords", fl.stopwords, "stop word list (built-in if omitted)");
    cmd->add_option("--features", fl.features, "ALL or comma list of feature families");
    cmd->add_option("--scope", fl.scope, "desire|desire+prior|desire+post|desire+context");
    cmd->add_flag("--serial", fl.serial, "run single-threaded");
}

struct HyperFlags {
    std::string model = "lr";
    double l2_lambda = 1.0;
    double learning_rate = 0.1;
    std::size_t epochs = 500;
    std::uint32_t seed = 13;
    double nb_alpha = 1.0;
    double threshold = 0.5;

    TrainOptions options() const {
        TrainOptions opts;
        opts.model = model;
        opts.lr.l2_lambda = l2_lambda;
        opts.lr.learning_rate = learning_rate;
        opts.lr.epochs = epochs;
        opts.lr.seed = seed;
        opts.lr.threshold = threshold;
        opts.nb_alpha = nb_alpha;
        return opts;
    }
};

void add_hyper_flags(CLI::App* cmd, HyperFlags& hy) {
    cmd->add_option("--model", hy.model, "lr or nb");
    cmd->add_option("--lambda", hy.l2_lambda, "LR L2 strength");
    cmd->add_option("--learning-rate", hy.learning_rate, "LR base step size");
    cmd->add_option("--epochs", hy.epochs, "LR gradient steps");
    cmd->add_option("--seed", hy.seed, "top-level random seed");
    cmd->add_option("--alpha", hy.nb_alpha, "NB smoothing");
    cmd->add_option("--threshold", hy.threshold, "decision threshold on P(Fulfilled)");
}

void parse_ratios(const std::string& s, double out[3]) {
    std::stringstream ss(s);
    std::string item;
    int n = 0;
    while (std::getline(ss, item, ',')) {
        if (n == 3) throw UsageError("expected three comma-separated ratios, got '" + s + "'");
        try {
            std::size_t pos = 0;
            out[n] = std::stod(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad ratio '" + item + "' in '" + s + "'");
        }
        ++n;
    }
    if (n != 3) throw UsageError("expected three comma-separated ratios, got '" + s + "'");
}

// Featurization flags recorded in a model file, used at prediction time
// unless overridden on the command line.
FeatureConfig config_from_model(const AnyModel& model, const std::string& families,
                                const std::string& scope) {
    std::string f = families, s = scope;
    if (const auto* lr = std::get_if<LinearModel>(&model)) {
        if (f.empty()) f = lr->families;
        if (s.empty()) s = lr->scope;
    } else {
        const auto& nb = std::get<NBModel>(model);
        if (f.empty()) f = nb.families;
        if (s.empty()) s = nb.scope;
    }
    return config_from(f, s);
}

int cmd_extract(const std::string& in, const std::string& out, const std::string& patterns,
                const std::string& lexicons, const std::string& stopwords, std::size_t window,
                long long min_count, bool serial) {
    Tokenizer tok = tokenizer_from(stopwords);
    PatternConfig pc = patterns.empty() ? default_pattern_config() : read_pattern_config(patterns);
    std::vector<DesirePattern> pats = generate_patterns(pc);
    LexiconSet lex = lexicons_from(lexicons);
    std::vector<Narrative> ns = read_narratives(in, tok);
    std::vector<DesireInstance> insts =
        extract_all(ns, pats, lex, tok.stop_words(), serial ? ExecMode::Serial : ExecMode::Parallel,
                    window);
    if (min_count >= 0)
        insts = apply_min_count(std::move(insts), static_cast<std::size_t>(min_count));
    std::vector<InstanceRecord> recs;
    recs.reserve(insts.size());
    for (const auto& inst : insts) recs.push_back(to_record(inst));
    write_instances(out, recs);
    std::cerr << "extracted " << recs.size() << " instances from " << ns.size()
              << " narratives\n";
    return 0;
}

int cmd_aggregate(const std::string& in, const std::string& annotations, const std::string& out,
                  const std::string& stopwords, double snap) {
    Tokenizer tok = tokenizer_from(stopwords);
    std::vector<InstanceRecord> recs = read_instances(in, tok);
    std::vector<AnnotationRecord> anns = read_annotations(annotations);
    AggregateOptions opts;
    opts.sentence_snap_coverage = snap;
    std::vector<InstanceRecord> gold = aggregate(recs, anns, opts);
    write_instances(out, gold);
    std::size_t labeled = 0;
    for (const auto& r : gold)
        if (r.label) ++labeled;
    std::cerr << "aggregated " << labeled << " of " << gold.size() << " instances\n";
    return 0;
}

int cmd_featurize(const std::string& in, const std::string& out, const CommonFlags& fl) {
    Tokenizer tok = fl.tokenizer();
    std::vector<InstanceRecord> recs = read_instances(in, tok);
    LexiconSet lex = lexicons_from(fl.lexicons);
    SentimentTable st = sentiment_from(fl.sentiment);
    FeatureConfig cfg = config_from(fl.features, fl.scope);
    std::vector<DesireInstance> insts;
    insts.reserve(recs.size());
    for (const auto& r : recs) insts.push_back(r.instance);
    std::vector<FeatureVector> fvs = featurize_all(insts, lex, cfg, st, fl.mode());
    std::vector<FeatureRecord> frs;
    frs.reserve(fvs.size());
    for (std::size_t i = 0; i < fvs.size(); ++i)
        frs.push_back({insts[i].id, std::move(fvs[i])});
    write_feature_records(out, frs);
    return 0;
}

int cmd_train(const std::string& in, const std::string& model_out, const CommonFlags& fl,
              const HyperFlags& hy) {
    Tokenizer tok = fl.tokenizer();
    std::vector<GoldInstance> gold = filter_binary(read_gold(in, tok));
    LexiconSet lex = lexicons_from(fl.lexicons);
    SentimentTable st = sentiment_from(fl.sentiment);
    FeatureConfig cfg = with_frozen_vocab(config_from(fl.features, fl.scope), gold);
    AnyModel model = train_model(to_examples(gold, lex, cfg, st), hy.options());
    stamp_provenance(model, cfg);
    save_model(model_out, model);
    std::cerr << "trained " << model_kind(model) << " on " << gold.size() << " instances\n";
    return 0;
}

int cmd_predict(const std::string& in, const std::string& model_path, const std::string& out,
                const CommonFlags& fl) {
    Tokenizer tok = fl.tokenizer();
    std::vector<InstanceRecord> recs = read_instances(in, tok);
    AnyModel model = load_model(model_path);
    LexiconSet lex = lexicons_from(fl.lexicons);
    SentimentTable st = sentiment_from(fl.sentiment);
    FeatureConfig cfg = config_from_model(model, fl.features, fl.scope);
    std::vector<DesireInstance> insts;
    insts.reserve(recs.size());
    for (const auto& r : recs) insts.push_back(r.instance);
    std::vector<FeatureVector> fvs = featurize_all(insts, lex, cfg, st, fl.mode());
    std::vector<Prediction> preds = predict_all(model, fvs, fl.mode());
    with_output(out, [&](std::ostream& os) { write_predictions(os, insts, preds); });
    return 0;
}

int cmd_evaluate(const std::string& in, const std::string& model_path, const std::string& pred_path,
                 const std::string& out, const std::string& name, const CommonFlags& fl) {
    Tokenizer tok = fl.tokenizer();
    std::vector<GoldInstance> gold = filter_binary(read_gold(in, tok));
    if (gold.empty()) throw DataError(in + ": no binary-labeled instances to evaluate");
    std::vector<FulfillmentLabel> predictions, labels;
    if (!pred_path.empty()) {
        std::map<std::string, FulfillmentLabel> by_id = read_predictions(pred_path);
        for (const auto& g : gold) {
            auto it = by_id.find(g.instance.id);
            if (it == by_id.end())
                throw DataError(pred_path + ": no prediction for instance '" + g.instance.id + "'");
            predictions.push_back(it->second);
            labels.push_back(g.label);
        }
    } else {
        AnyModel model = load_model(model_path);
        LexiconSet lex = lexicons_from(fl.lexicons);
        SentimentTable st = sentiment_from(fl.sentiment);
        FeatureConfig cfg = config_from_model(model, fl.features, fl.scope);
        std::vector<DesireInstance> insts = instances_of(gold);
        std::vector<FeatureVector> fvs = featurize_all(insts, lex, cfg, st, fl.mode());
        for (const auto& p : predict_all(model, fvs, fl.mode())) predictions.push_back(p.label);
        for (const auto& g : gold) labels.push_back(g.label);
    }
    EvalResult r = evaluate(predictions, labels);
    with_output(out, [&](std::ostream& os) { write_eval(os, {{name, r}}); });
    return 0;
}

int cmd_ablate(const std::string& train_path, const std::string& dev_path, const std::string& out,
               const CommonFlags& fl, const HyperFlags& hy) {
    Tokenizer tok = fl.tokenizer();
    std::vector<GoldInstance> train = filter_binary(read_gold(train_path, tok));
    std::vector<GoldInstance> dev = filter_binary(read_gold(dev_path, tok));
    LexiconSet lex = lexicons_from(fl.lexicons);
    SentimentTable st = sentiment_from(fl.sentiment);
    auto rows = ablate(train, dev, standard_ablations(parse_scope(fl.scope)), hy.options(), lex, st);
    with_output(out, [&](std::ostream& os) { write_eval(os, rows); });
    return 0;
}

int cmd_rank(const std::string& in, const std::string& out, std::size_t top,
             const CommonFlags& fl) {
    Tokenizer tok = fl.tokenizer();
    std::vector<GoldInstance> gold = filter_binary(read_gold(in, tok));
    LexiconSet lex = lexicons_from(fl.lexicons);
    SentimentTable st = sentiment_from(fl.sentiment);
    FeatureConfig cfg = with_frozen_vocab(config_from(fl.features, fl.scope), gold);
    std::vector<TrainExample> examples = to_examples(gold, lex, cfg, st);
    FeatureRanking ranking = info_gain(examples);
    with_output(out, [&](std::ostream& os) {
        os << "# label entropy " << format_double(label_entropy(examples)) << " bits\n";
        std::size_t n = top == 0 ? ranking.size() : std::min(top, ranking.size());
        for (std::size_t i = 0; i < n; ++i)
            os << ranking[i].name << '\t' << format_double(ranking[i].info_gain) << '\n';
    });
    return 0;
}

int cmd_report_agreement(const std::string& annotations, const std::string& out) {
    std::vector<AnnotationRecord> anns = read_annotations(annotations);
    AgreementReport r = agreement_report(build_matrix(anns));
    with_output(out, [&](std::ostream& os) { print_report(os, r); });
    return 0;
}

int cmd_split(const std::string& in, const std::string& train_out, const std::string& dev_out,
              const std::string& test_out, const std::string& ratios, std::uint32_t seed,
              const std::string& stopwords) {
    Tokenizer tok = tokenizer_from(stopwords);
    std::vector<GoldInstance> gold = filter_binary(read_gold(in, tok));
    double r[3];
    parse_ratios(ratios, r);
    SplitResult s = split_corpus(gold, r[0], r[1], r[2], seed);
    write_gold(train_out, s.train);
    write_gold(dev_out, s.dev);
    write_gold(test_out, s.test);
    std::cerr << "split " << gold.size() << " -> " << s.train.size() << "/" << s.dev.size() << "/"
              << s.test.size() << '\n';
    return 0;
}

// Plain key = value lines, '#' comments. Unknown keys are an error so typos
// do not silently fall back to defaults.
class Manifest {
public:
    explicit Manifest(const std::string& path) : path_(path) {
        std::ifstream in(path);
        if (!in) throw DataError("cannot open '" + path + "'");
        std::string line;
        std::size_t ln = 0;
        while (std::getline(in, line)) {
            ++ln;
            if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
            std::string t = trim(line);
            if (t.empty()) continue;
            std::size_t eq = t.find('=');
            if (eq == std::string::npos)
                throw UsageError(path + ":" + std::to_string(ln) + ": expected 'key = value'");
            std::string key = trim(t.substr(0, eq));
            std::string value = trim(t.substr(eq + 1));
            if (key.empty())
                throw UsageError(path + ":" + std::to_string(ln) + ": empty key");
            if (!kv_.emplace(key, value).second)
                throw UsageError(path + ":" + std::to_string(ln) + ": duplicate key '" + key + "'");
        }
    }

    std::string require(const std::string& key) {
        auto it = kv_.find(key);
        if (it == kv_.end()) throw UsageError(path_ + ": missing required key '" + key + "'");
        used_.insert(key);
        return it->second;
    }

    std::string get(const std::string& key, const std::string& fallback) {
        auto it = kv_.find(key);
        if (it == kv_.end()) return fallback;
        used_.insert(key);
        return it->second;
    }

    double get_double(const std::string& key, double fallback) {
        auto it = kv_.find(key);
        if (it == kv_.end()) return fallback;
        used_.insert(key);
        try {
            std::size_t pos = 0;
            double v = std::stod(it->second, &pos);
            if (pos != it->second.size()) throw std::invalid_argument(it->second);
            return v;
        } catch (const std::exception&) {
            throw UsageError(path_ + ": bad number for '" + key + "': '" + it->second + "'");
        }
    }

    long long get_int(const std::string& key, long long fallback) {
        auto it = kv_.find(key);
        if (it == kv_.end()) return fallback;
        used_.insert(key);
        try {
            std::size_t pos = 0;
            long long v = std::stoll(it->second, &pos);
            if (pos != it->second.size()) throw std::invalid_argument(it->second);
            return v;
        } catch (const std::exception&) {
            throw UsageError(path_ + ": bad integer for '" + key + "': '" + it->second + "'");
        }
    }

    bool get_bool(const std::string& key, bool fallback) {
        auto it = kv_.find(key);
        if (it == kv_.end()) return fallback;
        used_.insert(key);
        std::string v = lower_copy(it->second);
        if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
        if (v == "0" || v == "false" || v == "no" || v == "off") return false;
        throw UsageError(path_ + ": bad boolean for '" + key + "': '" + it->second + "'");
    }

    void finish() const {
        for (const auto& [key, value] : kv_)
            if (!used_.count(key))
                throw UsageError(path_ + ": unknown manifest key '" + key + "'");
    }

private:
    static std::string trim(const std::string& s) {
        std::size_t b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return "";
        std::size_t e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }

    std::string path_;
    std::map<std::string, std::string> kv_;
    std::set<std::string> used_;
};

int cmd_run(const std::string& manifest_path, bool serial) {
    Manifest m(manifest_path);
    std::string narratives = m.require("narratives");
    std::string annotations = m.require("annotations");
    std::string outdir = m.require("outdir");
    std::string patterns = m.get("patterns", "");
    std::string lexdir = m.get("lexicons", "");
    std::string sentiment = m.get("sentiment", "");
    std::string stopwords = m.get("stopwords", "");
    std::string features = m.get("features", "ALL");
    std::string scope = m.get("scope", "desire+context");
    std::string ratios = m.get("ratios", "0.72,0.14,0.14");
    HyperFlags hy;
    hy.model = m.get("model", "lr");
    hy.l2_lambda = m.get_double("lambda", 1.0);
    hy.learning_rate = m.get_double("learning_rate", 0.1);
    hy.epochs = static_cast<std::size_t>(m.get_int("epochs", 500));
    hy.seed = static_cast<std::uint32_t>(m.get_int("seed", 13));
    hy.nb_alpha = m.get_double("alpha", 1.0);
    hy.threshold = m.get_double("threshold", 0.5);
    long long min_count = m.get_int("min_count", -1);
    std::size_t window = static_cast<std::size_t>(m.get_int("window", 5));
    double snap = m.get_double("snap_coverage", 0.6);
    bool do_ablation = m.get_bool("ablation", true);
    bool do_ranking = m.get_bool("ranking", true);
    bool do_agreement = m.get_bool("agreement", true);
    m.finish();

    fs::create_directories(outdir);
    auto at = [&](const char* name) { return (fs::path(outdir) / name).string(); };
    ExecMode mode = serial ? ExecMode::Serial : ExecMode::Parallel;

    Tokenizer tok = tokenizer_from(stopwords);
    LexiconSet lex = lexicons_from(lexdir);
    SentimentTable st = sentiment_from(sentiment);
    PatternConfig pc = patterns.empty() ? default_pattern_config() : read_pattern_config(patterns);
    std::vector<DesirePattern> pats = generate_patterns(pc);

    std::vector<Narrative> ns = read_narratives(narratives, tok);
    std::vector<DesireInstance> insts = extract_all(ns, pats, lex, tok.stop_words(), mode, window);
    if (min_count >= 0)
        insts = apply_min_count(std::move(insts), static_cast<std::size_t>(min_count));
    std::vector<InstanceRecord> recs;
    recs.reserve(insts.size());
    for (const auto& inst : insts) recs.push_back(to_record(inst));
    write_instances(at("instances.jsonl"), recs);

    std::vector<AnnotationRecord> anns = read_annotations(annotations);
    AggregateOptions aopts;
    aopts.sentence_snap_coverage = snap;
    std::vector<InstanceRecord> gold_recs = aggregate(recs, anns, aopts);
    write_instances(at("gold.jsonl"), gold_recs);

    std::vector<GoldInstance> gold;
    for (const auto& r : gold_recs)
        if (r.label) gold.push_back(to_gold(r));
    gold = filter_binary(gold);

    double r3[3];
    parse_ratios(ratios, r3);
    SplitResult split = split_corpus(gold, r3[0], r3[1], r3[2], hy.seed);
    write_gold(at("train.jsonl"), split.train);
    write_gold(at("dev.jsonl"), split.dev);
    write_gold(at("test.jsonl"), split.test);

    FeatureConfig cfg = with_frozen_vocab(config_from(features, scope), split.train);
    AnyModel model = train_model(to_examples(split.train, lex, cfg, st), hy.options());
    stamp_provenance(model, cfg);
    save_model(at("model.txt"), model);

    std::vector<std::pair<std::string, EvalResult>> rows;
    for (const auto& [split_name, part, pred_file] :
         {std::tuple{"Dev", &split.dev, "predictions_dev.tsv"},
          std::tuple{"Test", &split.test, "predictions_test.tsv"}}) {
        std::vector<DesireInstance> part_insts = instances_of(*part);
        std::vector<FeatureVector> fvs = featurize_all(part_insts, lex, cfg, st, mode);
        std::vector<Prediction> preds = predict_all(model, fvs, mode);
        with_output(at(pred_file), [&](std::ostream& os) {
            write_predictions(os, part_insts, preds);
        });
        std::vector<FulfillmentLabel> pl, gl;
        for (const auto& p : preds) pl.push_back(p.label);
        for (const auto& g : *part) gl.push_back(g.label);
        rows.emplace_back(split_name, evaluate(pl, gl));
    }
    with_output(at("eval.txt"), [&](std::ostream& os) { write_eval(os, rows); });

    if (do_ablation) {
        auto arows =
            ablate(split.train, split.dev, standard_ablations(cfg.context_scope), hy.options(),
                   lex, st);
        with_output(at("ablation.txt"), [&](std::ostream& os) { write_eval(os, arows); });
    }
    if (do_ranking) {
        std::vector<TrainExample> examples = to_examples(split.train, lex, cfg, st);
        FeatureRanking ranking = info_gain(examples);
        with_output(at("ranking.tsv"), [&](std::ostream& os) {
            os << "# label entropy " << format_double(label_entropy(examples)) << " bits\n";
            for (const auto& rf : ranking)
                os << rf.name << '\t' << format_double(rf.info_gain) << '\n';
        });
    }
    if (do_agreement) {
        AgreementReport rep = agreement_report(build_matrix(anns));
        with_output(at("agreement.txt"), [&](std::ostream& os) { print_report(os, rep); });
    }
    std::cerr << "pipeline complete: " << outdir << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desire fulfillment toolkit"};
    app.require_subcommand(1);

    int rc = 0;

    // extract
    auto* ex = app.add_subcommand("extract", "match desire patterns in narratives");
    struct {
        std::string in, out, patterns, lexicons, stopwords;
        std::size_t window = 5;
        long long min_count = -1;
        bool serial = false;
    } exf;
    ex->add_option("--in", exf.in, "narratives JSONL")->required();
    ex->add_option("--out", exf.out, "instances JSONL")->required();
    ex->add_option("--patterns", exf.patterns, "pattern config file (built-in verbs if omitted)");
    ex->add_option("--lexicons", exf.lexicons, "lexicon directory");
    ex->add_option("--stopwords", exf.stopwords, "stop word list (built-in if omitted)");
    ex->add_option("--window", exf.window, "context window size in sentences");
    ex->add_option("--min-count", exf.min_count, "drop lemmas matched fewer times than this");
    ex->add_flag("--serial", exf.serial, "run single-threaded");
    ex->callback([&] {
        rc = cmd_extract(exf.in, exf.out, exf.patterns, exf.lexicons, exf.stopwords,
                         exf.window, exf.min_count, exf.serial);
    });

    // aggregate
    auto* ag = app.add_subcommand("aggregate", "merge annotator judgments into gold labels");
    struct {
        std::string in, annotations, out, stopwords;
        double snap = 0.6;
    } agf;
    ag->add_option("--in", agf.in, "instances JSONL")->required();
    ag->add_option("--annotations", agf.annotations, "annotation TSV")->required();
    ag->add_option("--out", agf.out, "gold instances JSONL")->required();
    ag->add_option("--snap-coverage", agf.snap, "evidence sentence-snap threshold");
    ag->add_option("--stopwords", agf.stopwords, "stop word list (built-in if omitted)");
    ag->callback([&] { rc = cmd_aggregate(agf.in, agf.annotations, agf.out, agf.stopwords, agf.snap); });

    // featurize
    auto* fe = app.add_subcommand("featurize", "export feature vectors");
    struct {
        std::string in, out;
        CommonFlags fl;
    } fef;
    fe->add_option("--in", fef.in, "instances JSONL")->required();
    fe->add_option("--out", fef.out, "feature TSV")->required();
    add_feature_flags(fe, fef.fl);
    fe->callback([&] { rc = cmd_featurize(fef.in, fef.out, fef.fl); });

    // train
    auto* tr = app.add_subcommand("train", "train a fulfillment classifier");
    struct {
        std::string in, model_out;
        CommonFlags fl;
        HyperFlags hy;
    } trf;
    tr->add_option("--in", trf.in, "labeled gold JSONL")->required();
    tr->add_option("--model-out", trf.model_out, "model file to write")->required();
    add_feature_flags(tr, trf.fl);
    add_hyper_flags(tr, trf.hy);
    tr->callback([&] { rc = cmd_train(trf.in, trf.model_out, trf.fl, trf.hy); });

    // predict
    auto* pr = app.add_subcommand("predict", "label instances with a trained model");
    struct {
        std::string in, model, out;
        CommonFlags fl;
    } prf;
    prf.fl.features.clear();  // default to the flags stored in the model
    prf.fl.scope.clear();
    pr->add_option("--in", prf.in, "instances JSONL")->required();
    pr->add_option("--model", prf.model, "model file")->required();
    pr->add_option("--out", prf.out, "predictions TSV (stdout if omitted)");
    add_feature_flags(pr, prf.fl);
    pr->callback([&] { rc = cmd_predict(prf.in, prf.model, prf.out, prf.fl); });

    // evaluate
    auto* ev = app.add_subcommand("evaluate", "score predictions against gold labels");
    struct {
        std::string in, model, pred, out, name = "Model";
        CommonFlags fl;
    } evf;
    evf.fl.features.clear();
    evf.fl.scope.clear();
    ev->add_option("--in", evf.in, "labeled gold JSONL")->required();
    auto* ev_model = ev->add_option("--model", evf.model, "model file to apply");
    auto* ev_pred = ev->add_option("--pred", evf.pred, "precomputed predictions TSV");
    ev_model->excludes(ev_pred);
    ev->add_option("--out", evf.out, "table file (stdout if omitted)");
    ev->add_option("--name", evf.name, "row label");
    add_feature_flags(ev, evf.fl);
    ev->callback([&] {
        if (evf.model.empty() && evf.pred.empty())
            throw UsageError("evaluate needs --model or --pred");
        rc = cmd_evaluate(evf.in, evf.model, evf.pred, evf.out, evf.name, evf.fl);
    });

    // ablate
    auto* ab = app.add_subcommand("ablate", "compare the standard feature sets");
    struct {
        std::string train, dev, out;
        CommonFlags fl;
        HyperFlags hy;
    } abf;
    ab->add_option("--train", abf.train, "training gold JSONL")->required();
    ab->add_option("--dev", abf.dev, "evaluation gold JSONL")->required();
    ab->add_option("--out", abf.out, "table file (stdout if omitted)");
    add_feature_flags(ab, abf.fl);
    add_hyper_flags(ab, abf.hy);
    ab->callback([&] { rc = cmd_ablate(abf.train, abf.dev, abf.out, abf.fl, abf.hy); });

    // rank-features
    auto* rk = app.add_subcommand("rank-features", "rank features by information gain");
    struct {
        std::string in, out;
        std::size_t top = 0;
        CommonFlags fl;
    } rkf;
    rk->add_option("--in", rkf.in, "labeled gold JSONL")->required();
    rk->add_option("--out", rkf.out, "ranking TSV (stdout if omitted)");
    rk->add_option("--top", rkf.top, "keep only the top N features (0 = all)");
    add_feature_flags(rk, rkf.fl);
    rk->callback([&] { rc = cmd_rank(rkf.in, rkf.out, rkf.top, rkf.fl); });

    // report-agreement
    auto* ra = app.add_subcommand("report-agreement", "inter-annotator agreement statistics");
    struct {
        std::string annotations, out;
    } raf;
    ra->add_option("--annotations", raf.annotations, "annotation TSV")->required();
    ra->add_option("--out", raf.out, "report file (stdout if omitted)");
    ra->callback([&] { rc = cmd_report_agreement(raf.annotations, raf.out); });

    // split
    auto* sp = app.add_subcommand("split", "narrative-disjoint train/dev/test split");
    struct {
        std::string in, train_out, dev_out, test_out, stopwords;
        std::string ratios = "0.72,0.14,0.14";
        std::uint32_t seed = 13;
    } spf;
    sp->add_option("--in", spf.in, "labeled gold JSONL")->required();
    sp->add_option("--train-out", spf.train_out, "train JSONL")->required();
    sp->add_option("--dev-out", spf.dev_out, "dev JSONL")->required();
    sp->add_option("--test-out", spf.test_out, "test JSONL")->required();
    sp->add_option("--ratios", spf.ratios, "train,dev,test ratios");
    sp->add_option("--seed", spf.seed, "shuffle seed");
    sp->add_option("--stopwords", spf.stopwords, "stop word list (built-in if omitted)");
    sp->callback([&] {
        rc = cmd_split(spf.in, spf.train_out, spf.dev_out, spf.test_out, spf.ratios, spf.seed,
                       spf.stopwords);
    });

    // run
    auto* rn = app.add_subcommand("run", "drive the full pipeline from a manifest");
    struct {
        std::string manifest;
        bool serial = false;
    } rnf;
    rn->add_option("--manifest", rnf.manifest, "key = value manifest file")->required();
    rn->add_flag("--serial", rnf.serial, "run single-threaded");
    rn->callback([&] { rc = cmd_run(rnf.manifest, rnf.serial); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const TrainingError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
