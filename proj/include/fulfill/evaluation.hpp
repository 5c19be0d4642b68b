#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fulfill/classifier.hpp"
#include "fulfill/features.hpp"
#include "fulfill/lexicons.hpp"
#include "fulfill/types.hpp"

namespace fulfill {

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;

    bool operator==(const ClassMetrics&) const = default;
};

struct EvalResult {
    std::map<FulfillmentLabel, ClassMetrics> per_class;
    ClassMetrics overall;  // unweighted mean over Fulfilled and Unfulfilled
    std::map<FulfillmentLabel, std::size_t> support;

    bool operator==(const EvalResult&) const = default;
};

// Binary labels only; throws DataError on mismatch, empty input, or other labels.
EvalResult evaluate(const std::vector<FulfillmentLabel>& predictions,
                    const std::vector<FulfillmentLabel>& gold);

// Tab-separated table; metric column order is fixed:
// Ful-P Ful-R Ful-F1 Unf-P Unf-R Unf-F1 Precision Recall F1
std::string eval_header();
std::string eval_row(const std::string& name, const EvalResult& r);
void print_eval_table(std::ostream& out,
                      const std::vector<std::pair<std::string, EvalResult>>& rows);

struct RankedFeature {
    std::string name;
    double info_gain = 0.0;

    bool operator==(const RankedFeature&) const = default;
};
using FeatureRanking = std::vector<RankedFeature>;

double label_entropy(const std::vector<TrainExample>& dataset);  // bits

// IG under presence binarization (value 0 vs anything else), descending,
// ties broken by name.
FeatureRanking info_gain(const std::vector<TrainExample>& dataset);

struct AblationSpec {
    std::string name;
    FeatureConfig config;
};

// ALL, Discourse, But-Present, ALL w/o But-Present.
std::vector<AblationSpec> standard_ablations(ContextScope scope);

// Freezes the BOW vocabulary from the training instances when the config
// enables BOW and has no vocabulary yet.
FeatureConfig with_frozen_vocab(FeatureConfig config,
                                const std::vector<GoldInstance>& train);

std::vector<TrainExample> to_examples(const std::vector<GoldInstance>& gold,
                                      const LexiconSet& lex, const FeatureConfig& config,
                                      const SentimentTable& scored = {});

struct TrainOptions {
    std::string model = "lr";  // "lr" or "nb"
    LRHyper lr;
    double nb_alpha = 1.0;
};

AnyModel train_model(const std::vector<TrainExample>& train, const TrainOptions& opts);

// Records the featurization flags on the model so prediction from a saved
// file can rebuild the same feature space.
void stamp_provenance(AnyModel& m, const FeatureConfig& config);

// One row per named feature set, trained on `train`, scored on `dev`.
// Duplicate set names are a UsageError.
std::vector<std::pair<std::string, EvalResult>> ablate(
    const std::vector<GoldInstance>& train, const std::vector<GoldInstance>& dev,
    const std::vector<AblationSpec>& sets, const TrainOptions& opts,
    const LexiconSet& lex, const SentimentTable& scored = {});

std::vector<GoldInstance> filter_binary(const std::vector<GoldInstance>& gold);

struct SplitResult {
    std::vector<GoldInstance> train, dev, test;
};

// Seeded shuffle of narrative groups, then greedy fill to the instance-count
// targets; instances of one narrative never straddle splits.
SplitResult split_corpus(const std::vector<GoldInstance>& gold, double train_ratio,
                         double dev_ratio, double test_ratio, std::uint32_t seed);

}  // namespace fulfill
