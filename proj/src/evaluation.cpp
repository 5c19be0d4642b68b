#include "fulfill/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "fulfill/errors.hpp"
#include "fulfill/format.hpp"

namespace fulfill {
namespace {

double safe_div(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

double f1_of(double p, double r) { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

// H(p) over a two-way split, in bits
double entropy2(double a, double b) {
    double n = a + b;
    if (n == 0.0) return 0.0;
    double h = 0.0;
    for (double x : {a, b}) {
        if (x == 0.0) continue;
        double p = x / n;
        h -= p * std::log2(p);
    }
    return h;
}

}  // namespace

EvalResult evaluate(const std::vector<FulfillmentLabel>& predictions,
                    const std::vector<FulfillmentLabel>& gold) {
    if (predictions.size() != gold.size())
        throw DataError("evaluate: " + std::to_string(predictions.size()) +
                        " predictions vs " + std::to_string(gold.size()) + " gold labels");
    if (gold.empty()) throw DataError("evaluate: empty input");
    for (const auto& v : {predictions, gold})
        for (FulfillmentLabel l : v)
            if (l != FulfillmentLabel::Fulfilled && l != FulfillmentLabel::Unfulfilled)
                throw DataError("evaluate: non-binary label '" + to_string(l) + "'");

    EvalResult out;
    for (FulfillmentLabel cls : {FulfillmentLabel::Fulfilled, FulfillmentLabel::Unfulfilled}) {
        double tp = 0, fp = 0, fn = 0;
        std::size_t support = 0;
        for (std::size_t i = 0; i < gold.size(); ++i) {
            bool is_gold = gold[i] == cls;
            bool is_pred = predictions[i] == cls;
            if (is_gold) ++support;
            if (is_gold && is_pred) ++tp;
            else if (!is_gold && is_pred) ++fp;
            else if (is_gold && !is_pred) ++fn;
        }
        ClassMetrics m;
        m.precision = safe_div(tp, tp + fp);
        m.recall = safe_div(tp, tp + fn);
        m.f1 = f1_of(m.precision, m.recall);
        out.per_class[cls] = m;
        out.support[cls] = support;
    }
    const auto& f = out.per_class[FulfillmentLabel::Fulfilled];
    const auto& u = out.per_class[FulfillmentLabel::Unfulfilled];
    out.overall.precision = (f.precision + u.precision) / 2.0;
    out.overall.recall = (f.recall + u.recall) / 2.0;
    out.overall.f1 = (f.f1 + u.f1) / 2.0;
    return out;
}

std::string eval_header() {
    return "Features\tFul-P\tFul-R\tFul-F1\tUnf-P\tUnf-R\tUnf-F1\tPrecision\tRecall\tF1";
}

std::string eval_row(const std::string& name, const EvalResult& r) {
    auto f = r.per_class.at(FulfillmentLabel::Fulfilled);
    auto u = r.per_class.at(FulfillmentLabel::Unfulfilled);
    std::ostringstream out;
    out << name;
    for (double v : {f.precision, f.recall, f.f1, u.precision, u.recall, u.f1,
                     r.overall.precision, r.overall.recall, r.overall.f1})
        out << '\t' << format_fixed(v, 4);
    return out.str();
}

void print_eval_table(std::ostream& out,
                      const std::vector<std::pair<std::string, EvalResult>>& rows) {
    out << eval_header() << '\n';
    for (const auto& [name, r] : rows) out << eval_row(name, r) << '\n';
}

double label_entropy(const std::vector<TrainExample>& dataset) {
    double n_f = 0, n_u = 0;
    for (const auto& [fv, label] : dataset) {
        (void)fv;
        if (label == FulfillmentLabel::Fulfilled) ++n_f;
        else ++n_u;
    }
    return entropy2(n_f, n_u);
}

FeatureRanking info_gain(const std::vector<TrainExample>& dataset) {
    if (dataset.empty()) throw DataError("info_gain: empty dataset");
    for (const auto& [fv, label] : dataset) {
        (void)fv;
        if (label != FulfillmentLabel::Fulfilled && label != FulfillmentLabel::Unfulfilled)
            throw DataError("info_gain: non-binary label '" + to_string(label) + "'");
    }
    double h_label = label_entropy(dataset);
    double n = static_cast<double>(dataset.size());
    double total_f = 0;
    for (const auto& [fv, label] : dataset) {
        (void)fv;
        if (label == FulfillmentLabel::Fulfilled) ++total_f;
    }

    // per feature: rows where the value is non-zero ("present"), split by label
    std::map<std::string, std::pair<double, double>> present;  // name -> (ful, unf)
    for (const auto& [fv, label] : dataset) {
        bool ful = label == FulfillmentLabel::Fulfilled;
        for (const auto& [name, value] : fv) {
            if (value == 0.0) continue;
            auto& cell = present[name];
            if (ful) cell.first += 1;
            else cell.second += 1;
        }
    }

    FeatureRanking ranking;
    ranking.reserve(present.size());
    for (const auto& [name, cell] : present) {
        double p_f = cell.first, p_u = cell.second;
        double a_f = total_f - p_f, a_u = (n - total_f) - p_u;
        double n_p = p_f + p_u, n_a = a_f + a_u;
        double cond = (n_p / n) * entropy2(p_f, p_u) + (n_a / n) * entropy2(a_f, a_u);
        double ig = h_label - cond;
        if (ig < 0.0 && ig > -1e-12) ig = 0.0;  // float noise on constant-ish features
        ranking.push_back({name, ig});
    }
    std::sort(ranking.begin(), ranking.end(),
              [](const RankedFeature& a, const RankedFeature& b) {
                  if (a.info_gain != b.info_gain) return a.info_gain > b.info_gain;
                  return a.name < b.name;
              });
    return ranking;
}

std::vector<AblationSpec> standard_ablations(ContextScope scope) {
    std::vector<AblationSpec> out;
    FeatureConfig all;
    all.context_scope = scope;
    out.push_back({"ALL", all});

    FeatureConfig discourse;
    discourse.enabled_families = {FeatureFamily::Discourse};
    discourse.context_scope = scope;
    out.push_back({"Discourse", discourse});

    FeatureConfig but_only;
    but_only.enabled_families = {FeatureFamily::Discourse};
    but_only.context_scope = scope;
    but_only.only_features = {feature_name(FeatureFamily::Discourse, "But-Present")};
    out.push_back({"But-Present", but_only});

    FeatureConfig all_but = all;
    all_but.exclude_features = {feature_name(FeatureFamily::Discourse, "But-Present")};
    out.push_back({"ALL w/o But-Present", all_but});
    return out;
}

FeatureConfig with_frozen_vocab(FeatureConfig config,
                                const std::vector<GoldInstance>& train) {
    if (config.enabled_families.count(FeatureFamily::BOW) && !config.bow_vocab) {
        std::vector<DesireInstance> insts;
        insts.reserve(train.size());
        for (const auto& g : train) insts.push_back(g.instance);
        config.bow_vocab = build_bow_vocab(insts, config.context_scope);
    }
    return config;
}

std::vector<TrainExample> to_examples(const std::vector<GoldInstance>& gold,
                                      const LexiconSet& lex, const FeatureConfig& config,
                                      const SentimentTable& scored) {
    std::vector<TrainExample> out;
    out.reserve(gold.size());
    for (const auto& g : gold)
        out.emplace_back(featurize(g.instance, lex, config, scored), g.label);
    return out;
}

AnyModel train_model(const std::vector<TrainExample>& train, const TrainOptions& opts) {
    if (opts.model == "lr") return train_lr(train, opts.lr);
    if (opts.model == "nb") return train_nb(train, opts.nb_alpha);
    throw UsageError("unknown model kind '" + opts.model + "' (expected lr or nb)");
}

void stamp_provenance(AnyModel& m, const FeatureConfig& config) {
    std::string fams = families_to_string(config.enabled_families);
    std::string scope = to_string(config.context_scope);
    if (auto* lr = std::get_if<LinearModel>(&m)) {
        lr->families = fams;
        lr->scope = scope;
    } else {
        auto& nb = std::get<NBModel>(m);
        nb.families = fams;
        nb.scope = scope;
    }
}

std::vector<std::pair<std::string, EvalResult>> ablate(
    const std::vector<GoldInstance>& train, const std::vector<GoldInstance>& dev,
    const std::vector<AblationSpec>& sets, const TrainOptions& opts,
    const LexiconSet& lex, const SentimentTable& scored) {
    std::set<std::string> names;
    for (const auto& s : sets)
        if (!names.insert(s.name).second)
            throw UsageError("duplicate feature set name '" + s.name + "'");

    std::vector<std::pair<std::string, EvalResult>> rows;
    for (const auto& s : sets) {
        FeatureConfig cfg = with_frozen_vocab(s.config, train);
        AnyModel model = train_model(to_examples(train, lex, cfg, scored), opts);
        std::vector<FulfillmentLabel> pred, gold_labels;
        pred.reserve(dev.size());
        gold_labels.reserve(dev.size());
        for (const auto& g : dev) {
            pred.push_back(predict_any(model, featurize(g.instance, lex, cfg, scored)).label);
            gold_labels.push_back(g.label);
        }
        rows.emplace_back(s.name, evaluate(pred, gold_labels));
    }
    return rows;
}

std::vector<GoldInstance> filter_binary(const std::vector<GoldInstance>& gold) {
    std::vector<GoldInstance> out;
    for (const auto& g : gold)
        if (g.label == FulfillmentLabel::Fulfilled ||
            g.label == FulfillmentLabel::Unfulfilled)
            out.push_back(g);
    return out;
}

SplitResult split_corpus(const std::vector<GoldInstance>& gold, double train_ratio,
                         double dev_ratio, double test_ratio, std::uint32_t seed) {
    for (double r : {train_ratio, dev_ratio, test_ratio})
        if (r < 0.0 || !std::isfinite(r)) throw UsageError("split ratios must be >= 0");
    if (std::abs(train_ratio + dev_ratio + test_ratio - 1.0) > 1e-9)
        throw UsageError("split ratios must sum to 1");
    if (gold.empty()) throw DataError("split_corpus: empty corpus");

    // group by narrative, preserving first-appearance order
    std::vector<std::pair<std::string, std::vector<std::size_t>>> groups;
    std::map<std::string, std::size_t> group_of;
    for (std::size_t i = 0; i < gold.size(); ++i) {
        const std::string& nid = gold[i].instance.narrative_id;
        auto [it, inserted] = group_of.emplace(nid, groups.size());
        if (inserted) groups.push_back({nid, {}});
        groups[it->second].second.push_back(i);
    }

    // Fisher-Yates with an explicit draw so every platform shuffles alike
    std::mt19937 gen(seed);
    for (std::size_t i = groups.size(); i-- > 1;) {
        std::size_t j = static_cast<std::size_t>(gen() % (i + 1));
        std::swap(groups[i], groups[j]);
    }

    double n = static_cast<double>(gold.size());
    double train_target = train_ratio * n;
    double dev_target = dev_ratio * n;
    SplitResult out;
    std::size_t train_count = 0, dev_count = 0;
    for (const auto& [nid, members] : groups) {
        (void)nid;
        std::vector<GoldInstance>* dest;
        if (static_cast<double>(train_count) < train_target) {
            dest = &out.train;
            train_count += members.size();
        } else if (static_cast<double>(dev_count) < dev_target) {
            dest = &out.dev;
            dev_count += members.size();
        } else {
            dest = &out.test;
        }
        for (std::size_t i : members) dest->push_back(gold[i]);
    }
    auto need = [&](double ratio, const std::vector<GoldInstance>& split) {
        return ratio > 0.0 && split.empty();
    };
    if (need(train_ratio, out.train) || need(dev_ratio, out.dev) ||
        need(test_ratio, out.test))
        throw DataError("corpus too small for the requested non-empty splits");
    return out;
}

}  // namespace fulfill
