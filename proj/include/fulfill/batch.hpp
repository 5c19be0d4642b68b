#pragma once

#include <set>
#include <vector>

#include "fulfill/classifier.hpp"
#include "fulfill/extractor.hpp"
#include "fulfill/features.hpp"

namespace fulfill {

// Parallel kernels fan out over OpenMP when compiled in; results are written
// to preassigned slots, so output order never depends on scheduling and both
// modes produce identical values.
enum class ExecMode { Serial, Parallel };

bool parallel_enabled();  // true when built with OpenMP

std::vector<DesireInstance> extract_all(const std::vector<Narrative>& corpus,
                                        const std::vector<DesirePattern>& pats,
                                        const LexiconSet& lex,
                                        const std::set<std::string>& stop_words,
                                        ExecMode mode, std::size_t context_window = 5);

std::vector<FeatureVector> featurize_all(const std::vector<DesireInstance>& insts,
                                         const LexiconSet& lex,
                                         const FeatureConfig& config,
                                         const SentimentTable& scored, ExecMode mode);

std::vector<Prediction> predict_all(const AnyModel& model,
                                    const std::vector<FeatureVector>& fvs, ExecMode mode);

}  // namespace fulfill
