#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fulfill/lexicons.hpp"
#include "fulfill/types.hpp"

namespace fulfill {

// Sparse vector; absent name means value 0. std::map keeps iteration (and
// every serialization) deterministic.
using FeatureVector = std::map<std::string, double>;

enum class FeatureFamily { Desire, Discourse, Connotation, SentimentFlow, BOW };

std::string to_string(FeatureFamily f);
FeatureFamily parse_family(const std::string& s);  // throws UsageError
// Accepts "ALL" or a comma-separated family list.
std::set<FeatureFamily> parse_family_list(const std::string& s);
// Inverse of parse_family_list; the full set renders as "ALL".
std::string families_to_string(const std::set<FeatureFamily>& fams);

enum class ContextScope { DesireOnly, DesirePrior, DesirePost, DesireContext };

// Wire names: desire, desire+prior, desire+post, desire+context.
std::string to_string(ContextScope s);
ContextScope parse_scope(const std::string& s);  // throws UsageError

std::set<FeatureFamily> all_families();

struct FeatureConfig {
    std::set<FeatureFamily> enabled_families = all_families();
    ContextScope context_scope = ContextScope::DesireContext;
    std::optional<std::set<std::string>> bow_vocab;  // frozen lemma vocabulary
    // Desire-Verb one-hot inventory; lemmas outside it fall into OTHER.
    std::set<std::string> verb_inventory;
    // Post-extraction name filters for ablations; empty set = no filter.
    std::set<std::string> only_features;
    std::set<std::string> exclude_features;
};

std::set<std::string> default_verb_inventory();  // the 16 stock lemmas

// Name assembly: "desire:Focal-Word-Mention:-3", "discourse:But-Present".
std::string feature_name(FeatureFamily fam, const std::string& base);
std::string feature_name(FeatureFamily fam, const std::string& base, int offset);

// Signed context offsets present on this instance and allowed by the scope,
// ascending (prior before post).
std::vector<int> scoped_offsets(const DesireInstance& inst, ContextScope scope);

FeatureVector extract_desire_features(const DesireInstance& inst, const LexiconSet& lex,
                                      ContextScope scope,
                                      const std::set<std::string>& verb_inventory);
FeatureVector extract_discourse_features(const DesireInstance& inst, const LexiconSet& lex,
                                         ContextScope scope);
FeatureVector extract_connotation_features(const DesireInstance& inst,
                                           const LexiconSet& lex, ContextScope scope);
FeatureVector extract_sentiment_flow_features(const DesireInstance& inst,
                                              const LexiconSet& lex, ContextScope scope,
                                              const SentimentTable& scored = {});
FeatureVector extract_bow(const DesireInstance& inst, ContextScope scope,
                          const std::optional<std::set<std::string>>& vocab);

// Union of the enabled families under the configured scope, then the name
// filters. Throws std::logic_error on cross-family name collision.
FeatureVector featurize(const DesireInstance& inst, const LexiconSet& lex,
                        const FeatureConfig& config, const SentimentTable& scored = {});

// Training-time vocabulary freeze for BOW.
std::set<std::string> build_bow_vocab(const std::vector<DesireInstance>& insts,
                                      ContextScope scope);

// Export format: instance_id, then one tab-separated "name:value" per
// feature. Values are %.17g; names may contain ':' so parsing splits on the
// last colon of each pair.
struct FeatureRecord {
    std::string instance_id;
    FeatureVector features;

    bool operator==(const FeatureRecord&) const = default;
};

void write_feature_records(std::ostream& out, const std::vector<FeatureRecord>& rs);
void write_feature_records(const std::string& path, const std::vector<FeatureRecord>& rs);
std::vector<FeatureRecord> read_feature_records(std::istream& in, const std::string& name);
std::vector<FeatureRecord> read_feature_records(const std::string& path);

}  // namespace fulfill
