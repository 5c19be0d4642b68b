#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fulfill/corpus_io.hpp"
#include "fulfill/types.hpp"

namespace fulfill {

struct AggregateOptions {
    // Evidence spans covering at least this fraction of their sentence are
    // widened to the whole sentence.
    double sentence_snap_coverage = 0.6;
};

// Majority label with its vote count; three distinct labels give (None, 0).
// Throws DataError unless exactly 3 labels, none of them None.
std::pair<FulfillmentLabel, int> majority_vote(const std::vector<FulfillmentLabel>& labels);

struct MergedEvidence {
    std::vector<std::string> rendered;  // narrative order, non-overlapping
    int overlap_score = 0;              // annotator pairs sharing >= 1 char
};

// Character-level union with same-sentence coalescing of overlapping or
// adjacent spans, then sentence snapping. Spans outside the instance window
// are a DataError.
MergedEvidence merge_evidence(const DesireInstance& inst,
                              const std::vector<AnnotationRecord>& records,
                              const AggregateOptions& opts = {});

// Instances x annotators nominal labels, missing entries allowed.
struct LabelMatrix {
    std::vector<std::string> annotators;    // column order, sorted by id
    std::vector<std::string> instance_ids;  // row order, first appearance
    std::vector<std::vector<std::optional<FulfillmentLabel>>> rows;
};

LabelMatrix build_matrix(const std::vector<AnnotationRecord>& records);

// Nominal-metric alpha over pairable values via the coincidence matrix.
// All-identical labels give 1.0; fewer than 2 pairable rows is a DataError.
double krippendorff_alpha(const LabelMatrix& m);

// Mean over annotators of Cohen's kappa against the per-row majority label;
// rows without a majority are excluded. Degenerate identical marginals give 1.
double kappa_vs_majority(const LabelMatrix& m);

struct AgreementReport {
    double krippendorff_alpha_pairwise = 0.0;
    double mean_kappa_vs_majority = 0.0;
    double total_agreement_rate = 0.0;  // over rows with all annotators present
    double two_one_rate = 0.0;
    std::map<FulfillmentLabel, double> per_label_total_agreement;
    std::size_t complete_rows = 0;
};

AgreementReport agreement_report(const LabelMatrix& m);
void print_report(std::ostream& out, const AgreementReport& r);

// Joins annotations onto instances. An instance with exactly 3 annotations
// gets a gold block (majority label, merged evidence, hypothetical majority);
// zero annotations passes through unlabeled; any other count is a DataError.
std::vector<InstanceRecord> aggregate(const std::vector<InstanceRecord>& instances,
                                      const std::vector<AnnotationRecord>& annotations,
                                      const AggregateOptions& opts = {});

}  // namespace fulfill
