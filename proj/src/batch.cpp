#include "fulfill/batch.hpp"

#include <exception>

namespace fulfill {

bool parallel_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

namespace {

// Run fn(i) for i in [0, n). Exceptions may not cross an OpenMP region, so the
// first one is captured and rethrown after the loop.
template <typename Fn>
void for_each_index(std::size_t n, ExecMode mode, Fn fn) {
  if (mode == ExecMode::Serial || !parallel_enabled()) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    if (err) continue;
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(fulfill_batch_err)
#endif
      {
        if (!err) err = std::current_exception();
      }
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace

std::vector<DesireInstance> extract_all(const std::vector<Narrative>& corpus,
                                        const std::vector<DesirePattern>& pats,
                                        const LexiconSet& lex,
                                        const std::set<std::string>& stop_words,
                                        ExecMode mode, std::size_t context_window) {
  std::vector<std::vector<DesireInstance>> per(corpus.size());
  for_each_index(corpus.size(), mode, [&](std::size_t i) {
    per[i] = match_desires(corpus[i], pats, lex, stop_words, context_window);
  });
  std::vector<DesireInstance> out;
  std::size_t total = 0;
  for (const auto& v : per) total += v.size();
  out.reserve(total);
  for (auto& v : per)
    for (auto& inst : v) out.push_back(std::move(inst));
  return out;
}

std::vector<FeatureVector> featurize_all(const std::vector<DesireInstance>& insts,
                                         const LexiconSet& lex,
                                         const FeatureConfig& config,
                                         const SentimentTable& scored, ExecMode mode) {
  std::vector<FeatureVector> out(insts.size());
  for_each_index(insts.size(), mode, [&](std::size_t i) {
    out[i] = featurize(insts[i], lex, config, scored);
  });
  return out;
}

std::vector<Prediction> predict_all(const AnyModel& model,
                                    const std::vector<FeatureVector>& fvs, ExecMode mode) {
  std::vector<Prediction> out(fvs.size());
  for_each_index(fvs.size(), mode, [&](std::size_t i) { out[i] = predict_any(model, fvs[i]); });
  return out;
}

}  // namespace fulfill
