#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fulfill/features.hpp"
#include "fulfill/types.hpp"

namespace fulfill {

struct Prediction {
    FulfillmentLabel label = FulfillmentLabel::Unfulfilled;
    double probability = 0.5;  // P(Fulfilled), strictly inside (0,1)

    bool operator==(const Prediction&) const = default;
};

using TrainExample = std::pair<FeatureVector, FulfillmentLabel>;

struct LRHyper {
    double l2_lambda = 1.0;
    double learning_rate = 0.1;
    std::size_t epochs = 500;
    std::uint32_t seed = 13;
    // Step-halving when a step would raise the loss; keeps the loss curve
    // monotone and the whole run deterministic.
    bool line_search = true;
    double threshold = 0.5;
    // Min-max scale each column before training, for BOW-heavy runs. Counts
    // are non-negative and absent features read as zero, so the column min is
    // zero and the transform is division by the column max. The scale folds
    // back into the stored weights, so the model still applies to raw vectors.
    bool scale_features = false;
};

struct TrainMeta {
    std::size_t epochs = 0;  // epochs actually run
    double learning_rate = 0.1;
    bool line_search = true;
    std::uint32_t seed = 13;
    double final_loss = 0.0;

    bool operator==(const TrainMeta&) const = default;
};

struct LinearModel {
    std::map<std::string, std::size_t> feature_index;  // name -> column
    std::vector<double> weights;                       // by column
    double bias = 0.0;
    double l2_lambda = 1.0;
    double threshold = 0.5;
    // Featurization provenance so a saved model can be applied to fresh text
    // without re-stating the flags used at training time.
    std::string families = "ALL";
    std::string scope = "desire+context";
    TrainMeta meta;

    bool operator==(const LinearModel&) const = default;
};

// Multinomial NB stored as raw per-class counts so the file round-trips
// exactly; likelihoods are derived at prediction time.
struct NBModel {
    std::map<std::string, std::size_t> feature_index;
    double prior_fulfilled = 0.5;
    std::vector<double> count_fulfilled;    // summed feature values per class
    std::vector<double> count_unfulfilled;
    double total_fulfilled = 0.0;
    double total_unfulfilled = 0.0;
    double alpha = 1.0;
    double threshold = 0.5;
    std::string families = "ALL";
    std::string scope = "desire+context";

    bool operator==(const NBModel&) const = default;
};

// Dense training problem with a frozen column order; rows are canonically
// sorted so any permutation of the input trains the identical model.
struct LRProblem {
    std::vector<std::vector<std::pair<std::size_t, double>>> rows;  // sparse
    std::vector<double> labels;  // 1 = Fulfilled, 0 = Unfulfilled
    std::size_t dim = 0;
    double l2_lambda = 0.0;
};

// Validates labels and class coverage; throws TrainingError.
LRProblem build_problem(const std::vector<TrainExample>& train, double l2_lambda,
                        std::map<std::string, std::size_t>* feature_index = nullptr);

// J = (1/N) sum cross-entropy + (lambda / 2N) ||w||^2, bias unregularized.
double lr_loss(const LRProblem& p, const std::vector<double>& w, double b);
void lr_gradient(const LRProblem& p, const std::vector<double>& w, double b,
                 std::vector<double>& grad_w, double& grad_b);

// Full-batch deterministic gradient descent from zero init.
LinearModel train_lr(const std::vector<TrainExample>& train, const LRHyper& hyper = {});

Prediction predict(const LinearModel& m, const FeatureVector& fv);

// Additive smoothing alpha; with alpha = 0, features unseen in either class
// are skipped entirely at prediction time (their likelihood factor excluded),
// rather than producing log(0).
NBModel train_nb(const std::vector<TrainExample>& train, double alpha = 1.0);

Prediction predict_nb(const NBModel& m, const FeatureVector& fv);

using AnyModel = std::variant<LinearModel, NBModel>;

Prediction predict_any(const AnyModel& m, const FeatureVector& fv);
std::string model_kind(const AnyModel& m);  // "lr" or "nb"

// Versioned human-diffable text format; round-trips every field exactly.
void save_model(std::ostream& out, const AnyModel& m);
void save_model(const std::string& path, const AnyModel& m);
AnyModel load_model(std::istream& in, const std::string& name);
AnyModel load_model(const std::string& path);

}  // namespace fulfill
