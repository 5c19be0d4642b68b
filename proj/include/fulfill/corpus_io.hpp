#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fulfill/tokenize.hpp"
#include "fulfill/types.hpp"

namespace fulfill {

// One line of the instance interchange file. Labeled records carry the
// aggregate block; unlabeled ones leave `label` empty.
struct InstanceRecord {
    DesireInstance instance;
    std::optional<FulfillmentLabel> label;
    int agreement_score = 0;
    std::vector<std::string> evidence;
    int overlap_score = 0;

    bool operator==(const InstanceRecord&) const = default;
};

GoldInstance to_gold(const InstanceRecord& r);         // throws DataError if unlabeled
InstanceRecord to_record(const GoldInstance& g);
InstanceRecord to_record(const DesireInstance& inst);  // unlabeled

// Narrative JSONL: {"Id": ..., "Sentences": [...]} or {"Id": ..., "Text": ...},
// optional "Source". Text is re-tokenized on read; reading a file this module
// wrote reproduces the in-memory narratives exactly.
std::vector<Narrative> read_narratives(std::istream& in, const std::string& name,
                                       const Tokenizer& tok);
std::vector<Narrative> read_narratives(const std::string& path, const Tokenizer& tok);
void write_narratives(std::ostream& out, const std::vector<Narrative>& ns);
void write_narratives(const std::string& path, const std::vector<Narrative>& ns);

std::vector<InstanceRecord> read_instances(std::istream& in, const std::string& name,
                                           const Tokenizer& tok);
std::vector<InstanceRecord> read_instances(const std::string& path, const Tokenizer& tok);
void write_instances(std::ostream& out, const std::vector<InstanceRecord>& rs);
void write_instances(const std::string& path, const std::vector<InstanceRecord>& rs);

// Convenience wrappers for files where every record must be labeled.
std::vector<GoldInstance> read_gold(const std::string& path, const Tokenizer& tok);
void write_gold(const std::string& path, const std::vector<GoldInstance>& gs);

// Annotation TSV, one judgment per line:
//   instance_id <TAB> annotator_id <TAB> label <TAB> evidence <TAB> hypothetical [<TAB> subject]
// evidence is ';'-joined "offset:start-end" byte spans with signed sentence
// offsets (0 = desire sentence), or empty; hypothetical is 0 or 1; the
// optional subject column is a "start-end" token span.
std::vector<AnnotationRecord> read_annotations(std::istream& in, const std::string& name);
std::vector<AnnotationRecord> read_annotations(const std::string& path);
void write_annotations(std::ostream& out, const std::vector<AnnotationRecord>& rs);
void write_annotations(const std::string& path, const std::vector<AnnotationRecord>& rs);

}  // namespace fulfill
