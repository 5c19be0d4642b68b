#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fulfill/classifier.hpp"
#include "fulfill/errors.hpp"
#include "fulfill/evaluation.hpp"
#include "fulfill/extractor.hpp"
#include "fulfill/features.hpp"
#include "fulfill/lexicons.hpp"
#include "fulfill/tokenize.hpp"

using namespace fulfill;

namespace {

constexpr auto F = FulfillmentLabel::Fulfilled;
constexpr auto U = FulfillmentLabel::Unfulfilled;
constexpr auto K = FulfillmentLabel::UnknownFromContext;

FeatureVector fv(std::initializer_list<std::pair<const std::string, double>> init) {
    return FeatureVector(init);
}

// Binary entropy of an a:b split, used as the oracle for the info gain checks.
double h2(double a, double b) {
    double n = a + b;
    double h = 0.0;
    for (double x : {a, b}) {
        if (x == 0.0) continue;
        h -= (x / n) * std::log2(x / n);
    }
    return h;
}

GoldInstance gold_from_text(const std::string& nid, const std::string& text,
                            FulfillmentLabel label) {
    Tokenizer tok;
    Narrative n;
    n.id = nid;
    n.sentences = tok.run(text);
    static const auto pats = generate_patterns(default_pattern_config());
    auto insts = match_desires(n, pats, default_lexicons(), default_stop_words());
    REQUIRE(insts.size() == 1);
    GoldInstance g;
    g.instance = insts[0];
    g.label = label;
    g.agreement_score = 3;
    return g;
}

// Alternating labels; the unfulfilled texts carry "but" inside the desire
// sentence, the fulfilled ones carry no discourse marker at all.
std::vector<GoldInstance> but_corpus(const std::vector<std::string>& words) {
    std::vector<GoldInstance> out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        bool ful = i % 2 == 0;
        std::string text =
            ful ? "I wanted to visit the " + words[i] +
                      " and the trip worked out fine. We stayed a long while."
                : "I wanted to visit the " + words[i] +
                      " but the plan fell through. We stayed at home instead.";
        out.push_back(gold_from_text("n_" + words[i], text, ful ? F : U));
    }
    return out;
}

std::vector<GoldInstance> light_gold(
    const std::vector<std::pair<std::string, int>>& narratives) {
    std::vector<GoldInstance> out;
    int k = 0;
    for (const auto& [nid, count] : narratives)
        for (int i = 0; i < count; ++i) {
            GoldInstance g;
            g.instance.id = "i" + std::to_string(k);
            g.instance.narrative_id = nid;
            g.label = k % 2 == 0 ? F : U;
            out.push_back(g);
            ++k;
        }
    return out;
}

std::vector<std::string> ids_of(const std::vector<GoldInstance>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& g : v) out.push_back(g.instance.id);
    return out;
}

std::set<std::string> narratives_of(const std::vector<GoldInstance>& v) {
    std::set<std::string> out;
    for (const auto& g : v) out.insert(g.instance.narrative_id);
    return out;
}

}  // namespace

TEST_CASE("evaluate hand worksheet") {
    // gold F F U against predictions F U U:
    //   Fulfilled:   tp 1, fp 0, fn 1 -> P 1, R 1/2, F1 2/3
    //   Unfulfilled: tp 1, fp 1, fn 0 -> P 1/2, R 1, F1 2/3
    EvalResult r = evaluate({F, U, U}, {F, F, U});
    const auto& f = r.per_class.at(F);
    const auto& u = r.per_class.at(U);
    CHECK(f.precision == 1.0);
    CHECK(f.recall == 0.5);
    CHECK(f.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(u.precision == 0.5);
    CHECK(u.recall == 1.0);
    CHECK(u.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(r.overall.precision == 0.75);
    CHECK(r.overall.recall == 0.75);
    CHECK(r.overall.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(r.support.at(F) == 2);
    CHECK(r.support.at(U) == 1);
}

TEST_CASE("evaluate on perfect and constant predictors") {
    EvalResult perfect = evaluate({F, U, F, U}, {F, U, F, U});
    for (auto cls : {F, U}) {
        CHECK(perfect.per_class.at(cls).precision == 1.0);
        CHECK(perfect.per_class.at(cls).recall == 1.0);
        CHECK(perfect.per_class.at(cls).f1 == 1.0);
    }
    CHECK(perfect.overall.f1 == 1.0);

    // Always guessing Fulfilled on gold F U U.
    EvalResult lazy = evaluate({F, F, F}, {F, U, U});
    CHECK(lazy.per_class.at(F).precision == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(lazy.per_class.at(F).recall == 1.0);
    CHECK(lazy.per_class.at(F).f1 == 0.5);
    CHECK(lazy.per_class.at(U).precision == 0.0);
    CHECK(lazy.per_class.at(U).recall == 0.0);
    CHECK(lazy.per_class.at(U).f1 == 0.0);
    CHECK(lazy.overall.f1 == 0.25);
}

TEST_CASE("evaluate input validation") {
    CHECK_THROWS_AS(evaluate({F, U}, {F, U, U}), DataError);
    CHECK_THROWS_AS(evaluate({}, {}), DataError);
    CHECK_THROWS_AS(evaluate({F, K}, {F, U}), DataError);
    CHECK_THROWS_AS(evaluate({F, U}, {F, FulfillmentLabel::None}), DataError);
}

TEST_CASE("evaluate is permutation invariant and obeys the f1 bounds") {
    std::mt19937 gen(4711);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + gen() % 40;
        std::vector<FulfillmentLabel> pred, gold;
        for (std::size_t i = 0; i < n; ++i) {
            pred.push_back(gen() % 2 ? F : U);
            gold.push_back(gen() % 2 ? F : U);
        }
        EvalResult r = evaluate(pred, gold);

        for (auto cls : {F, U}) {
            const auto& m = r.per_class.at(cls);
            for (double v : {m.precision, m.recall, m.f1}) {
                CHECK(v >= 0.0);
                CHECK(v <= 1.0);
            }
            CHECK(m.f1 <= std::min(2.0 * m.precision, 2.0 * m.recall) + 1e-12);
            CHECK(m.f1 <= std::max(m.precision, m.recall) + 1e-12);
        }
        const auto& f = r.per_class.at(F);
        const auto& u = r.per_class.at(U);
        CHECK(r.overall.precision == (f.precision + u.precision) / 2.0);
        CHECK(r.overall.recall == (f.recall + u.recall) / 2.0);
        CHECK(r.overall.f1 == (f.f1 + u.f1) / 2.0);
        CHECK(r.support.at(F) + r.support.at(U) == n);

        // Shuffling predictions and gold together changes nothing.
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), gen);
        std::vector<FulfillmentLabel> pred2, gold2;
        for (std::size_t i : idx) {
            pred2.push_back(pred[i]);
            gold2.push_back(gold[i]);
        }
        EvalResult r2 = evaluate(pred2, gold2);
        for (auto cls : {F, U}) {
            CHECK(r2.per_class.at(cls).precision == r.per_class.at(cls).precision);
            CHECK(r2.per_class.at(cls).recall == r.per_class.at(cls).recall);
            CHECK(r2.per_class.at(cls).f1 == r.per_class.at(cls).f1);
            CHECK(r2.support.at(cls) == r.support.at(cls));
        }
        CHECK(r2.overall.f1 == r.overall.f1);
    }
}

TEST_CASE("eval table formatting") {
    CHECK(eval_header() ==
          "Features\tFul-P\tFul-R\tFul-F1\tUnf-P\tUnf-R\tUnf-F1\tPrecision\tRecall\tF1");

    EvalResult r = evaluate({F, U, U}, {F, F, U});
    CHECK(eval_row("run", r) ==
          "run\t1.0000\t0.5000\t0.6667\t0.5000\t1.0000\t0.6667"
          "\t0.7500\t0.7500\t0.6667");

    std::ostringstream out;
    print_eval_table(out, {{"run", r}});
    CHECK(out.str() == eval_header() + "\n" + eval_row("run", r) + "\n");
}

TEST_CASE("label entropy") {
    std::vector<TrainExample> balanced;
    for (int i = 0; i < 8; ++i) balanced.emplace_back(fv({}), i % 2 == 0 ? F : U);
    CHECK(label_entropy(balanced) == 1.0);

    std::vector<TrainExample> pure;
    for (int i = 0; i < 5; ++i) pure.emplace_back(fv({}), F);
    CHECK(label_entropy(pure) == 0.0);

    std::vector<TrainExample> skew;
    for (int i = 0; i < 3; ++i) skew.emplace_back(fv({}), F);
    skew.emplace_back(fv({}), U);
    CHECK(label_entropy(skew) == doctest::Approx(h2(3, 1)).epsilon(1e-12));
    CHECK(std::abs(label_entropy(skew) - 0.8112781244591328) < 1e-12);
}

TEST_CASE("info gain of a constant feature is zero") {
    std::vector<TrainExample> data;
    for (int i = 0; i < 6; ++i) data.emplace_back(fv({{"x", 1.0}}), i % 2 == 0 ? F : U);
    auto ranking = info_gain(data);
    REQUIRE(ranking.size() == 1);
    CHECK(ranking[0].name == "x");
    CHECK(ranking[0].info_gain == 0.0);
}

TEST_CASE("info gain of a label identical feature equals the label entropy") {
    std::vector<TrainExample> data;
    for (int i = 0; i < 3; ++i) data.emplace_back(fv({{"x", 1.0}, {"pad", 1.0}}), F);
    for (int i = 0; i < 2; ++i) data.emplace_back(fv({{"pad", 1.0}}), U);
    auto ranking = info_gain(data);
    REQUIRE(ranking.size() == 2);
    CHECK(ranking[0].name == "x");
    CHECK(ranking[0].info_gain == label_entropy(data));
    CHECK(ranking[1].name == "pad");
    CHECK(ranking[1].info_gain == 0.0);
}

TEST_CASE("info gain eight row worksheet") {
    // 4 Fulfilled and 4 Unfulfilled rows; "x" present on 3 of the F rows and
    // 1 of the U rows. H(label) = 1 bit, conditional entropy is H(3:1), so
    // the gain is 1 - 0.8112781244591328.
    std::vector<TrainExample> data;
    data.emplace_back(fv({{"x", 1.0}}), F);
    data.emplace_back(fv({{"x", 1.0}}), F);
    data.emplace_back(fv({{"x", 1.0}}), F);
    data.emplace_back(fv({}), F);
    data.emplace_back(fv({{"x", 1.0}}), U);
    data.emplace_back(fv({}), U);
    data.emplace_back(fv({}), U);
    data.emplace_back(fv({}), U);
    auto ranking = info_gain(data);
    REQUIRE(ranking.size() == 1);
    CHECK(std::abs(ranking[0].info_gain - 0.18872187554086717) < 1e-9);
    CHECK(ranking[0].info_gain ==
          doctest::Approx(1.0 - 0.5 * h2(3, 1) - 0.5 * h2(1, 3)).epsilon(1e-12));
}

TEST_CASE("info gain sees presence not magnitude") {
    std::vector<TrainExample> raw, binarized;
    std::mt19937 gen(99);
    const double magnitudes[] = {0.5, 1.0, 2.0, 7.0};
    for (int i = 0; i < 24; ++i) {
        FeatureVector a, b;
        for (std::string name : {"p", "q", "r"}) {
            if (gen() % 2 == 0) continue;
            a[name] = magnitudes[gen() % 4];
            b[name] = 1.0;
        }
        auto label = gen() % 3 == 0 ? F : U;
        raw.emplace_back(a, label);
        binarized.emplace_back(b, label);
    }
    auto ra = info_gain(raw);
    auto rb = info_gain(binarized);
    REQUIRE(ra.size() == rb.size());
    for (std::size_t i = 0; i < ra.size(); ++i) {
        CHECK(ra[i].name == rb[i].name);
        CHECK(ra[i].info_gain == rb[i].info_gain);
    }
}

TEST_CASE("info gain ordering with lexicographic ties") {
    // strong: matches the label exactly. aaa and bbb: identical columns,
    // present on one F row. weak: present on 2 F and 1 U rows. noise: always
    // present. Expected gains 1.0, 0.1909, 0.1909, 0.0817, 0.
    std::vector<TrainExample> data;
    data.emplace_back(fv({{"strong", 1.0}, {"aaa", 1.0}, {"bbb", 1.0}, {"weak", 1.0}, {"noise", 1.0}}), F);
    data.emplace_back(fv({{"strong", 1.0}, {"weak", 1.0}, {"noise", 1.0}}), F);
    data.emplace_back(fv({{"strong", 1.0}, {"noise", 1.0}}), F);
    data.emplace_back(fv({{"weak", 1.0}, {"noise", 1.0}}), U);
    data.emplace_back(fv({{"noise", 1.0}}), U);
    data.emplace_back(fv({{"noise", 1.0}}), U);
    auto ranking = info_gain(data);
    REQUIRE(ranking.size() == 5);
    CHECK(ranking[0].name == "strong");
    CHECK(ranking[1].name == "aaa");
    CHECK(ranking[2].name == "bbb");
    CHECK(ranking[3].name == "weak");
    CHECK(ranking[4].name == "noise");
    CHECK(ranking[0].info_gain == 1.0);
    CHECK(ranking[1].info_gain == ranking[2].info_gain);
    CHECK(ranking[1].info_gain ==
          doctest::Approx(1.0 - (5.0 / 6.0) * h2(2, 3)).epsilon(1e-12));
    CHECK(ranking[3].info_gain == doctest::Approx(1.0 - h2(2, 1)).epsilon(1e-12));
    CHECK(ranking[4].info_gain == 0.0);
}

TEST_CASE("info gain stays between zero and the label entropy") {
    std::mt19937 gen(2024);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + gen() % 28;
        std::vector<TrainExample> data;
        std::set<std::string> expected_names;
        for (std::size_t i = 0; i < n; ++i) {
            FeatureVector v;
            for (int d = 0; d < 6; ++d) {
                double value = static_cast<double>(gen() % 4);  // 0 means absent
                if (value == 0.0) continue;
                std::string name = "f" + std::to_string(d);
                v[name] = value;
                expected_names.insert(name);
            }
            data.emplace_back(v, gen() % 2 ? F : U);
        }
        auto ranking = info_gain(data);
        double h = label_entropy(data);
        CHECK(ranking.size() == expected_names.size());
        for (std::size_t i = 0; i < ranking.size(); ++i) {
            CHECK(ranking[i].info_gain >= 0.0);
            CHECK(ranking[i].info_gain <= h + 1e-12);
            if (i > 0) {
                bool ordered = ranking[i - 1].info_gain > ranking[i].info_gain ||
                               (ranking[i - 1].info_gain == ranking[i].info_gain &&
                                ranking[i - 1].name < ranking[i].name);
                CHECK(ordered);
            }
        }
    }
}

TEST_CASE("info gain input validation") {
    CHECK_THROWS_AS(info_gain({}), DataError);
    std::vector<TrainExample> data;
    data.emplace_back(fv({{"x", 1.0}}), F);
    data.emplace_back(fv({{"x", 1.0}}), K);
    CHECK_THROWS_AS(info_gain(data), DataError);
}

TEST_CASE("standard ablation sets") {
    auto sets = standard_ablations(ContextScope::DesirePost);
    REQUIRE(sets.size() == 4);
    CHECK(sets[0].name == "ALL");
    CHECK(sets[1].name == "Discourse");
    CHECK(sets[2].name == "But-Present");
    CHECK(sets[3].name == "ALL w/o But-Present");

    const std::string but = feature_name(FeatureFamily::Discourse, "But-Present");
    CHECK(sets[0].config.enabled_families == all_families());
    CHECK(sets[0].config.only_features.empty());
    CHECK(sets[0].config.exclude_features.empty());
    CHECK(sets[1].config.enabled_families ==
          std::set<FeatureFamily>{FeatureFamily::Discourse});
    CHECK(sets[2].config.enabled_families ==
          std::set<FeatureFamily>{FeatureFamily::Discourse});
    CHECK(sets[2].config.only_features == std::set<std::string>{but});
    CHECK(sets[3].config.enabled_families == all_families());
    CHECK(sets[3].config.exclude_features == std::set<std::string>{but});
    for (const auto& s : sets) CHECK(s.config.context_scope == ContextScope::DesirePost);
}

TEST_CASE("ablate matches a hand run pipeline") {
    auto train = but_corpus({"harbor", "market", "garden", "museum", "castle", "valley",
                             "bridge", "temple", "forest", "island", "canyon", "meadow"});
    auto dev = but_corpus({"shore", "plaza", "tower", "abbey", "grove", "cliff"});
    LexiconSet lex = default_lexicons();
    TrainOptions opts;

    FeatureConfig cfg;
    auto rows = ablate(train, dev, {{"ALL", cfg}}, opts, lex);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].first == "ALL");

    FeatureConfig frozen = with_frozen_vocab(cfg, train);
    AnyModel model = train_model(to_examples(train, lex, frozen), opts);
    std::vector<FulfillmentLabel> pred, gold;
    for (const auto& g : dev) {
        pred.push_back(predict_any(model, featurize(g.instance, lex, frozen)).label);
        gold.push_back(g.label);
    }
    EvalResult direct = evaluate(pred, gold);
    CHECK(eval_row("ALL", rows[0].second) == eval_row("ALL", direct));
    for (auto cls : {F, U}) {
        CHECK(rows[0].second.per_class.at(cls).precision == direct.per_class.at(cls).precision);
        CHECK(rows[0].second.per_class.at(cls).recall == direct.per_class.at(cls).recall);
        CHECK(rows[0].second.per_class.at(cls).f1 == direct.per_class.at(cls).f1);
    }
    CHECK(rows[0].second.overall.f1 == direct.overall.f1);
}

TEST_CASE("ablate rejects duplicate set names") {
    auto train = but_corpus({"harbor", "market", "garden", "museum"});
    auto dev = but_corpus({"shore", "plaza"});
    FeatureConfig cfg;
    CHECK_THROWS_AS(
        ablate(train, dev, {{"ALL", cfg}, {"ALL", cfg}}, TrainOptions{}, default_lexicons()),
        UsageError);
}

TEST_CASE("standard ablations separate a but marked corpus") {
    auto train = but_corpus({"harbor", "market", "garden", "museum", "castle", "valley",
                             "bridge", "temple", "forest", "island", "canyon", "meadow"});
    auto dev = but_corpus({"shore", "plaza", "tower", "abbey", "grove", "cliff"});
    auto rows = ablate(train, dev, standard_ablations(ContextScope::DesireContext),
                       TrainOptions{}, default_lexicons());
    REQUIRE(rows.size() == 4);
    CHECK(rows[1].first == "Discourse");
    CHECK(rows[1].second.overall.f1 == 1.0);
    CHECK(rows[2].first == "But-Present");
    CHECK(rows[2].second.overall.f1 == 1.0);
}

TEST_CASE("frozen vocab freezes on the training narratives") {
    auto train = but_corpus({"harbor", "market"});
    FeatureConfig cfg;
    CHECK(!cfg.bow_vocab);
    FeatureConfig frozen = with_frozen_vocab(cfg, train);
    REQUIRE(frozen.bow_vocab);
    CHECK(frozen.bow_vocab->count("harbor") == 1);
    CHECK(frozen.bow_vocab->count("plaza") == 0);

    // An existing vocabulary wins over the training set.
    FeatureConfig preset;
    preset.bow_vocab = std::set<std::string>{"zzz"};
    CHECK(with_frozen_vocab(preset, train).bow_vocab == std::set<std::string>{"zzz"});

    // No BOW family, no vocabulary.
    FeatureConfig no_bow;
    no_bow.enabled_families = {FeatureFamily::Discourse};
    CHECK(!with_frozen_vocab(no_bow, train).bow_vocab);
}

TEST_CASE("to_examples mirrors featurize") {
    auto gold = but_corpus({"harbor", "market", "garden"});
    LexiconSet lex = default_lexicons();
    FeatureConfig cfg = with_frozen_vocab(FeatureConfig{}, gold);
    auto examples = to_examples(gold, lex, cfg);
    REQUIRE(examples.size() == gold.size());
    for (std::size_t i = 0; i < gold.size(); ++i) {
        CHECK(examples[i].first == featurize(gold[i].instance, lex, cfg));
        CHECK(examples[i].second == gold[i].label);
    }
}

TEST_CASE("train_model dispatches on the model kind") {
    std::vector<TrainExample> data;
    for (int i = 0; i < 3; ++i) {
        data.emplace_back(fv({{"a", 1.0}}), F);
        data.emplace_back(fv({{"b", 1.0}}), U);
    }
    TrainOptions lr_opts;
    CHECK(std::holds_alternative<LinearModel>(train_model(data, lr_opts)));

    TrainOptions nb_opts;
    nb_opts.model = "nb";
    CHECK(std::holds_alternative<NBModel>(train_model(data, nb_opts)));

    TrainOptions bad;
    bad.model = "svm";
    CHECK_THROWS_AS(train_model(data, bad), UsageError);
}

TEST_CASE("stamp_provenance tags both model kinds") {
    std::vector<TrainExample> data;
    for (int i = 0; i < 3; ++i) {
        data.emplace_back(fv({{"a", 1.0}}), F);
        data.emplace_back(fv({{"b", 1.0}}), U);
    }
    FeatureConfig cfg;
    cfg.enabled_families = {FeatureFamily::Discourse};
    cfg.context_scope = ContextScope::DesirePost;

    AnyModel lr = train_lr(data, {});
    stamp_provenance(lr, cfg);
    CHECK(std::get<LinearModel>(lr).families == families_to_string(cfg.enabled_families));
    CHECK(std::get<LinearModel>(lr).scope == to_string(cfg.context_scope));

    AnyModel nb = train_nb(data, 1.0);
    stamp_provenance(nb, cfg);
    CHECK(std::get<NBModel>(nb).families == families_to_string(cfg.enabled_families));
    CHECK(std::get<NBModel>(nb).scope == to_string(cfg.context_scope));
}

TEST_CASE("filter_binary keeps order and drops the rest") {
    auto gold = light_gold({{"n0", 1}, {"n1", 1}, {"n2", 1}, {"n3", 1}, {"n4", 1}});
    gold[1].label = FulfillmentLabel::None;
    gold[3].label = K;
    auto kept = filter_binary(gold);
    REQUIRE(kept.size() == 3);
    CHECK(kept[0].instance.id == "i0");
    CHECK(kept[1].instance.id == "i2");
    CHECK(kept[2].instance.id == "i4");
}

TEST_CASE("split keeps narratives whole and partitions the corpus") {
    std::vector<std::pair<std::string, int>> narrs;
    for (int i = 0; i < 12; ++i) narrs.push_back({"n" + std::to_string(i), i % 4 + 1});
    auto gold = light_gold(narrs);
    std::vector<std::string> want_ids = ids_of(gold);
    std::sort(want_ids.begin(), want_ids.end());

    for (std::uint32_t seed : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u}) {
        auto s = split_corpus(gold, 0.5, 0.25, 0.25, seed);
        CHECK(!s.train.empty());
        CHECK(!s.dev.empty());
        CHECK(!s.test.empty());

        std::vector<std::string> got_ids = ids_of(s.train);
        for (const auto& part : {s.dev, s.test})
            for (const auto& id : ids_of(part)) got_ids.push_back(id);
        std::sort(got_ids.begin(), got_ids.end());
        CHECK(got_ids == want_ids);

        auto nt = narratives_of(s.train), nd = narratives_of(s.dev),
             ns = narratives_of(s.test);
        for (const auto& nid : nd) CHECK(nt.count(nid) == 0);
        for (const auto& nid : ns) {
            CHECK(nt.count(nid) == 0);
            CHECK(nd.count(nid) == 0);
        }
    }
}

TEST_CASE("split is deterministic for a fixed seed") {
    std::vector<std::pair<std::string, int>> narrs;
    for (int i = 0; i < 20; ++i) narrs.push_back({"n" + std::to_string(i), i % 3 + 1});
    auto gold = light_gold(narrs);
    auto a = split_corpus(gold, 0.6, 0.2, 0.2, 42);
    auto b = split_corpus(gold, 0.6, 0.2, 0.2, 42);
    CHECK(a.train == b.train);
    CHECK(a.dev == b.dev);
    CHECK(a.test == b.test);
}

TEST_CASE("split with ratios one zero zero sends everything to train") {
    auto gold = light_gold({{"n0", 2}, {"n1", 1}, {"n2", 3}});
    auto s = split_corpus(gold, 1.0, 0.0, 0.0, 7);
    CHECK(s.train.size() == gold.size());
    CHECK(s.dev.empty());
    CHECK(s.test.empty());
    auto got = ids_of(s.train);
    auto want = ids_of(gold);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
}

TEST_CASE("split at the published corpus scale") {
    // 2,319 single-instance narratives cut 1656/327/336.
    std::vector<std::pair<std::string, int>> narrs;
    for (int i = 0; i < 2319; ++i) narrs.push_back({"n" + std::to_string(i), 1});
    auto gold = light_gold(narrs);
    auto s = split_corpus(gold, 1656.0 / 2319.0, 327.0 / 2319.0, 336.0 / 2319.0, 11);
    CHECK(s.train.size() + s.dev.size() + s.test.size() == gold.size());
    CHECK(std::llabs(static_cast<long long>(s.train.size()) - 1656) <= 2);
    CHECK(std::llabs(static_cast<long long>(s.dev.size()) - 327) <= 2);
    CHECK(std::llabs(static_cast<long long>(s.test.size()) - 336) <= 2);
}

TEST_CASE("split input validation") {
    auto gold = light_gold({{"n0", 1}, {"n1", 1}, {"n2", 1}});
    CHECK_THROWS_AS(split_corpus(gold, 0.5, 0.25, 0.2, 1), UsageError);
    CHECK_THROWS_AS(split_corpus(gold, -0.1, 0.6, 0.5, 1), UsageError);
    CHECK_THROWS_AS(split_corpus({}, 0.5, 0.25, 0.25, 1), DataError);

    // Two narratives cannot feed three non-empty splits.
    auto two = light_gold({{"n0", 1}, {"n1", 1}});
    CHECK_THROWS_AS(split_corpus(two, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 1), DataError);

    // Three can, one narrative per split.
    auto s = split_corpus(gold, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 1);
    CHECK(s.train.size() == 1);
    CHECK(s.dev.size() == 1);
    CHECK(s.test.size() == 1);
}
