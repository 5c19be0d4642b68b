#include <cmath>

#include "fulfill/classifier.hpp"
#include "fulfill/errors.hpp"

namespace fulfill {

NBModel train_nb(const std::vector<TrainExample>& train, double alpha) {
    if (train.empty()) throw TrainingError("empty training set");
    if (alpha < 0) throw TrainingError("smoothing alpha must be non-negative");
    std::size_t n_f = 0, n_u = 0;
    for (const auto& [fv, label] : train) {
        if (label == FulfillmentLabel::Fulfilled) ++n_f;
        else if (label == FulfillmentLabel::Unfulfilled) ++n_u;
        else
            throw TrainingError("training labels must be Fulfilled or Unfulfilled, got '" +
                                to_string(label) + "'");
        for (const auto& [name, value] : fv) {
            if (!std::isfinite(value) || value < 0)
                throw TrainingError("NB needs non-negative counts; feature '" + name +
                                    "' has value " + std::to_string(value));
        }
    }
    if (n_f == 0 || n_u == 0)
        throw TrainingError("training set contains a single class; need both "
                            "Fulfilled and Unfulfilled");

    NBModel m;
    m.alpha = alpha;
    m.prior_fulfilled = static_cast<double>(n_f) / static_cast<double>(n_f + n_u);
    for (const auto& [fv, label] : train) {
        (void)label;
        for (const auto& [name, value] : fv) {
            (void)value;
            m.feature_index.emplace(name, 0);
        }
    }
    std::size_t col = 0;
    for (auto& [name, c] : m.feature_index) { (void)name; c = col++; }
    m.count_fulfilled.assign(col, 0.0);
    m.count_unfulfilled.assign(col, 0.0);
    for (const auto& [fv, label] : train) {
        auto& counts = label == FulfillmentLabel::Fulfilled ? m.count_fulfilled
                                                            : m.count_unfulfilled;
        for (const auto& [name, value] : fv) counts[m.feature_index.at(name)] += value;
    }
    for (double c : m.count_fulfilled) m.total_fulfilled += c;
    for (double c : m.count_unfulfilled) m.total_unfulfilled += c;
    return m;
}

Prediction predict_nb(const NBModel& m, const FeatureVector& fv) {
    double v = static_cast<double>(m.feature_index.size());
    double denom_f = m.total_fulfilled + m.alpha * v;
    double denom_u = m.total_unfulfilled + m.alpha * v;
    double log_f = std::log(m.prior_fulfilled);
    double log_u = std::log(1.0 - m.prior_fulfilled);
    for (const auto& [name, value] : fv) {
        if (value == 0.0) continue;
        auto it = m.feature_index.find(name);
        if (it == m.feature_index.end()) continue;
        double cf = m.count_fulfilled[it->second] + m.alpha;
        double cu = m.count_unfulfilled[it->second] + m.alpha;
        // alpha = 0 can zero a likelihood; such features are excluded rather
        // than driving a class to -inf
        if (cf <= 0.0 || cu <= 0.0) continue;
        log_f += value * (std::log(cf) - std::log(denom_f));
        log_u += value * (std::log(cu) - std::log(denom_u));
    }
    double hi = std::max(log_f, log_u);
    double ef = std::exp(log_f - hi);
    double eu = std::exp(log_u - hi);
    Prediction out;
    out.probability = std::min(std::max(ef / (ef + eu), 1e-12), 1.0 - 1e-12);
    out.label = out.probability >= m.threshold ? FulfillmentLabel::Fulfilled
                                               : FulfillmentLabel::Unfulfilled;
    return out;
}

}  // namespace fulfill
