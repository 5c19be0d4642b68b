#include <algorithm>
#include <cmath>

#include "fulfill/classifier.hpp"
#include "fulfill/errors.hpp"
#include "fulfill/format.hpp"

namespace fulfill {
namespace {

double sigmoid(double z) {
    if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
    double e = std::exp(z);
    return e / (1.0 + e);
}

// log(1 + e^z) without overflow
double softplus(double z) {
    return std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z)));
}

double clamp_prob(double p) {
    return std::min(std::max(p, 1e-12), 1.0 - 1e-12);
}

double row_dot(const std::vector<std::pair<std::size_t, double>>& row,
               const std::vector<double>& w, double b) {
    double z = b;
    for (const auto& [col, val] : row) z += w[col] * val;
    return z;
}

}  // namespace

LRProblem build_problem(const std::vector<TrainExample>& train, double l2_lambda,
                        std::map<std::string, std::size_t>* feature_index_out) {
    if (train.empty()) throw TrainingError("empty training set");
    bool has_f = false, has_u = false;
    for (const auto& [fv, label] : train) {
        (void)fv;
        if (label == FulfillmentLabel::Fulfilled) has_f = true;
        else if (label == FulfillmentLabel::Unfulfilled) has_u = true;
        else
            throw TrainingError("training labels must be Fulfilled or Unfulfilled, got '" +
                                to_string(label) + "'");
    }
    if (!has_f || !has_u)
        throw TrainingError("training set contains a single class; need both "
                            "Fulfilled and Unfulfilled");

    std::map<std::string, std::size_t> index;
    for (const auto& [fv, label] : train) {
        (void)label;
        for (const auto& [name, value] : fv) {
            if (!std::isfinite(value))
                throw TrainingError("non-finite value for feature '" + name + "'");
            index.emplace(name, 0);
        }
    }
    std::size_t col = 0;
    for (auto& [name, c] : index) { (void)name; c = col++; }

    LRProblem p;
    p.dim = col;
    p.l2_lambda = l2_lambda;

    // Canonical row order: float addition is not associative, so sorting by a
    // content key makes training invariant under input permutation.
    struct Keyed {
        std::string key;
        std::vector<std::pair<std::size_t, double>> row;
        double y;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(train.size());
    for (const auto& [fv, label] : train) {
        Keyed k;
        k.y = label == FulfillmentLabel::Fulfilled ? 1.0 : 0.0;
        k.key = k.y == 1.0 ? "F|" : "U|";
        for (const auto& [name, value] : fv) {
            if (value == 0.0) continue;
            k.row.emplace_back(index.at(name), value);
            k.key += name;
            k.key += '=';
            k.key += format_double(value);
            k.key += '\t';
        }
        keyed.push_back(std::move(k));
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const Keyed& a, const Keyed& b) { return a.key < b.key; });
    for (auto& k : keyed) {
        p.rows.push_back(std::move(k.row));
        p.labels.push_back(k.y);
    }
    if (feature_index_out) *feature_index_out = std::move(index);
    return p;
}

double lr_loss(const LRProblem& p, const std::vector<double>& w, double b) {
    double n = static_cast<double>(p.rows.size());
    double loss = 0.0;
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        double z = row_dot(p.rows[i], w, b);
        loss += softplus(z) - p.labels[i] * z;
    }
    loss /= n;
    if (p.l2_lambda > 0) {
        double sq = 0.0;
        for (double wi : w) sq += wi * wi;
        loss += p.l2_lambda * sq / (2.0 * n);
    }
    return loss;
}

void lr_gradient(const LRProblem& p, const std::vector<double>& w, double b,
                 std::vector<double>& grad_w, double& grad_b) {
    double n = static_cast<double>(p.rows.size());
    grad_w.assign(w.size(), 0.0);
    grad_b = 0.0;
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        double err = sigmoid(row_dot(p.rows[i], w, b)) - p.labels[i];
        for (const auto& [col, val] : p.rows[i]) grad_w[col] += err * val;
        grad_b += err;
    }
    for (double& g : grad_w) g /= n;
    grad_b /= n;
    if (p.l2_lambda > 0)
        for (std::size_t j = 0; j < w.size(); ++j) grad_w[j] += p.l2_lambda * w[j] / n;
}

LinearModel train_lr(const std::vector<TrainExample>& train, const LRHyper& hyper) {
    LinearModel m;
    LRProblem p = build_problem(train, hyper.l2_lambda, &m.feature_index);
    std::vector<double> col_scale;
    if (hyper.scale_features) {
        std::vector<double> col_max(p.dim, 0.0);
        for (const auto& row : p.rows)
            for (const auto& [col, val] : row)
                col_max[col] = std::max(col_max[col], std::abs(val));
        col_scale.assign(p.dim, 1.0);
        for (std::size_t j = 0; j < p.dim; ++j)
            if (col_max[j] > 0) col_scale[j] = 1.0 / col_max[j];
        for (auto& row : p.rows)
            for (auto& [col, val] : row) val *= col_scale[col];
    }
    m.weights.assign(p.dim, 0.0);
    m.bias = 0.0;
    m.l2_lambda = hyper.l2_lambda;
    m.threshold = hyper.threshold;
    m.meta.learning_rate = hyper.learning_rate;
    m.meta.line_search = hyper.line_search;
    m.meta.seed = hyper.seed;

    double loss = lr_loss(p, m.weights, m.bias);
    std::vector<double> grad_w;
    std::vector<double> trial_w(p.dim);
    double grad_b = 0.0;
    std::size_t epoch = 0;
    for (; epoch < hyper.epochs; ++epoch) {
        lr_gradient(p, m.weights, m.bias, grad_w, grad_b);
        double step = hyper.learning_rate;
        if (hyper.line_search) {
            bool accepted = false;
            while (step > 1e-12) {
                for (std::size_t j = 0; j < p.dim; ++j)
                    trial_w[j] = m.weights[j] - step * grad_w[j];
                double trial_b = m.bias - step * grad_b;
                double trial_loss = lr_loss(p, trial_w, trial_b);
                if (std::isfinite(trial_loss) && trial_loss <= loss) {
                    m.weights.swap(trial_w);
                    m.bias = trial_b;
                    loss = trial_loss;
                    accepted = true;
                    break;
                }
                step /= 2.0;
            }
            if (!accepted) break;  // no descent direction step left; converged
        } else {
            for (std::size_t j = 0; j < p.dim; ++j) m.weights[j] -= step * grad_w[j];
            m.bias -= step * grad_b;
            loss = lr_loss(p, m.weights, m.bias);
            if (!std::isfinite(loss))
                throw TrainingError(
                    "loss diverged at epoch " + std::to_string(epoch + 1) +
                    "; lower the learning rate or enable line search");
        }
    }
    m.meta.epochs = epoch;
    m.meta.final_loss = loss;
    if (hyper.scale_features)
        for (std::size_t j = 0; j < p.dim; ++j) m.weights[j] *= col_scale[j];
    return m;
}

Prediction predict(const LinearModel& m, const FeatureVector& fv) {
    double z = m.bias;
    for (const auto& [name, value] : fv) {
        auto it = m.feature_index.find(name);
        if (it != m.feature_index.end()) z += m.weights[it->second] * value;
    }
    Prediction out;
    out.probability = clamp_prob(sigmoid(z));
    out.label = out.probability >= m.threshold ? FulfillmentLabel::Fulfilled
                                               : FulfillmentLabel::Unfulfilled;
    return out;
}

}  // namespace fulfill
