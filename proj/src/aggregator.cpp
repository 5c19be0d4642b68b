#include "fulfill/aggregator.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "fulfill/errors.hpp"
#include "fulfill/format.hpp"

namespace fulfill {
namespace {

const FulfillmentLabel kAnnotatable[] = {
    FulfillmentLabel::Fulfilled,
    FulfillmentLabel::Unfulfilled,
    FulfillmentLabel::UnknownFromContext,
};

int label_id(FulfillmentLabel l) { return static_cast<int>(l); }

// Majority over however many labels are present; nullopt when tied.
std::optional<FulfillmentLabel> row_majority(
    const std::vector<std::optional<FulfillmentLabel>>& row) {
    std::map<FulfillmentLabel, int> votes;
    int present = 0;
    for (const auto& l : row) {
        if (!l) continue;
        ++votes[*l];
        ++present;
    }
    if (present == 0) return std::nullopt;
    for (const auto& [label, count] : votes)
        if (2 * count > present) return label;
    return std::nullopt;
}

}  // namespace

std::pair<FulfillmentLabel, int> majority_vote(const std::vector<FulfillmentLabel>& labels) {
    if (labels.size() != 3)
        throw DataError("majority vote needs exactly 3 labels, got " +
                        std::to_string(labels.size()));
    std::map<FulfillmentLabel, int> votes;
    for (FulfillmentLabel l : labels) {
        if (l == FulfillmentLabel::None)
            throw DataError("annotator labels must not be 'None'");
        ++votes[l];
    }
    for (const auto& [label, count] : votes)
        if (count >= 2) return {label, count};
    return {FulfillmentLabel::None, 0};
}

MergedEvidence merge_evidence(const DesireInstance& inst,
                              const std::vector<AnnotationRecord>& records,
                              const AggregateOptions& opts) {
    if (records.size() > 3)
        throw DataError("merge_evidence expects at most 3 annotation records");
    for (const auto& rec : records) {
        for (const auto& ev : rec.evidence_spans) {
            const Sentence* s = context_sentence(inst, ev.sentence_offset);
            if (!s)
                throw DataError("evidence for '" + inst.id + "' names sentence offset " +
                                std::to_string(ev.sentence_offset) +
                                " outside the context window");
            if (ev.span.end > s->text.size() || ev.span.begin >= ev.span.end)
                throw DataError("evidence span " + std::to_string(ev.span.begin) + "-" +
                                std::to_string(ev.span.end) + " for '" + inst.id +
                                "' exceeds sentence offset " +
                                std::to_string(ev.sentence_offset));
        }
    }

    MergedEvidence out;
    for (std::size_t a = 0; a < records.size(); ++a) {
        for (std::size_t b = a + 1; b < records.size(); ++b) {
            bool hit = false;
            for (const auto& ea : records[a].evidence_spans) {
                for (const auto& eb : records[b].evidence_spans) {
                    if (ea.sentence_offset == eb.sentence_offset &&
                        ea.span.overlaps(eb.span)) {
                        hit = true;
                        break;
                    }
                }
                if (hit) break;
            }
            if (hit) ++out.overlap_score;
        }
    }

    std::map<int, std::vector<CharSpan>> by_sentence;
    for (const auto& rec : records)
        for (const auto& ev : rec.evidence_spans)
            by_sentence[ev.sentence_offset].push_back(ev.span);

    for (auto& [offset, spans] : by_sentence) {
        const Sentence* s = context_sentence(inst, offset);
        std::sort(spans.begin(), spans.end(), [](const CharSpan& x, const CharSpan& y) {
            return x.begin != y.begin ? x.begin < y.begin : x.end < y.end;
        });
        auto coalesce = [](std::vector<CharSpan>& sp) {
            std::vector<CharSpan> merged;
            for (const auto& cur : sp) {
                if (!merged.empty() && cur.begin <= merged.back().end)
                    merged.back().end = std::max(merged.back().end, cur.end);
                else
                    merged.push_back(cur);
            }
            sp = std::move(merged);
        };
        coalesce(spans);
        bool snapped = false;
        for (auto& sp : spans) {
            if (!s->text.empty() &&
                static_cast<double>(sp.size()) >=
                    opts.sentence_snap_coverage * static_cast<double>(s->text.size())) {
                sp = {0, s->text.size()};
                snapped = true;
            }
        }
        if (snapped) {
            std::sort(spans.begin(), spans.end(),
                      [](const CharSpan& x, const CharSpan& y) {
                          return x.begin != y.begin ? x.begin < y.begin : x.end < y.end;
                      });
            coalesce(spans);
        }
        for (const auto& sp : spans)
            out.rendered.push_back(s->text.substr(sp.begin, sp.size()));
    }
    return out;
}

LabelMatrix build_matrix(const std::vector<AnnotationRecord>& records) {
    LabelMatrix m;
    std::map<std::string, std::size_t> ann_col;
    for (const auto& r : records) ann_col.emplace(r.annotator_id, 0);
    for (auto& [id, col] : ann_col) {
        col = m.annotators.size();
        m.annotators.push_back(id);
    }
    std::map<std::string, std::size_t> row_of;
    for (const auto& r : records) {
        auto [it, inserted] = row_of.emplace(r.instance_id, m.rows.size());
        if (inserted) {
            m.instance_ids.push_back(r.instance_id);
            m.rows.emplace_back(m.annotators.size());
        }
        auto& cell = m.rows[it->second][ann_col.at(r.annotator_id)];
        if (cell)
            throw DataError("duplicate annotation for instance '" + r.instance_id +
                            "' by annotator '" + r.annotator_id + "'");
        cell = r.label;
    }
    return m;
}

double krippendorff_alpha(const LabelMatrix& m) {
    double o[3][3] = {};
    std::size_t pairable_rows = 0;
    for (const auto& row : m.rows) {
        std::vector<FulfillmentLabel> present;
        for (const auto& cell : row)
            if (cell) present.push_back(*cell);
        if (present.size() < 2) continue;
        ++pairable_rows;
        double w = 1.0 / static_cast<double>(present.size() - 1);
        for (std::size_t i = 0; i < present.size(); ++i)
            for (std::size_t j = 0; j < present.size(); ++j)
                if (i != j) o[label_id(present[i])][label_id(present[j])] += w;
    }
    if (pairable_rows < 2)
        throw DataError("Krippendorff's alpha needs at least 2 rows with 2+ labels");
    double marginal[3] = {};
    double n = 0;
    for (int c = 0; c < 3; ++c)
        for (int k = 0; k < 3; ++k) {
            marginal[c] += o[c][k];
            n += o[c][k];
        }
    double observed_off = 0, expected_off = 0;
    for (int c = 0; c < 3; ++c)
        for (int k = 0; k < 3; ++k)
            if (c != k) {
                observed_off += o[c][k];
                expected_off += marginal[c] * marginal[k];
            }
    if (expected_off == 0.0) return 1.0;  // a single category everywhere
    return 1.0 - (n - 1.0) * observed_off / expected_off;
}

double kappa_vs_majority(const LabelMatrix& m) {
    std::vector<std::optional<FulfillmentLabel>> gold;
    gold.reserve(m.rows.size());
    for (const auto& row : m.rows) gold.push_back(row_majority(row));

    double kappa_sum = 0;
    std::size_t annotators_used = 0;
    for (std::size_t col = 0; col < m.annotators.size(); ++col) {
        double agree = 0, total = 0;
        double ann_marginal[3] = {}, gold_marginal[3] = {};
        for (std::size_t r = 0; r < m.rows.size(); ++r) {
            if (!gold[r] || !m.rows[r][col]) continue;
            FulfillmentLabel a = *m.rows[r][col];
            FulfillmentLabel g = *gold[r];
            total += 1;
            if (a == g) agree += 1;
            ann_marginal[label_id(a)] += 1;
            gold_marginal[label_id(g)] += 1;
        }
        if (total == 0) continue;
        double po = agree / total;
        double pe = 0;
        for (int c = 0; c < 3; ++c)
            pe += (ann_marginal[c] / total) * (gold_marginal[c] / total);
        // pe = 1 only when both sides always use one identical label, so po = 1
        double k = pe >= 1.0 ? 1.0 : (po - pe) / (1.0 - pe);
        kappa_sum += k;
        ++annotators_used;
    }
    if (annotators_used == 0)
        throw DataError("no annotator has rows with a computable majority");
    return kappa_sum / static_cast<double>(annotators_used);
}

AgreementReport agreement_report(const LabelMatrix& m) {
    AgreementReport rep;
    rep.krippendorff_alpha_pairwise = krippendorff_alpha(m);
    rep.mean_kappa_vs_majority = kappa_vs_majority(m);

    std::size_t complete = 0, unanimous = 0, two_one = 0;
    std::map<FulfillmentLabel, std::size_t> label_rows, label_unanimous;
    for (const auto& row : m.rows) {
        std::vector<FulfillmentLabel> present;
        for (const auto& cell : row)
            if (cell) present.push_back(*cell);
        if (present.size() != m.annotators.size() || present.empty()) continue;
        ++complete;
        bool all_same = std::all_of(present.begin(), present.end(),
                                    [&](FulfillmentLabel l) { return l == present[0]; });
        if (all_same) ++unanimous;
        auto maj = row_majority(row);
        if (maj) {
            ++label_rows[*maj];
            if (all_same) ++label_unanimous[*maj];
            if (!all_same) ++two_one;
        }
    }
    rep.complete_rows = complete;
    if (complete > 0) {
        rep.total_agreement_rate = static_cast<double>(unanimous) / complete;
        rep.two_one_rate = static_cast<double>(two_one) / complete;
    }
    for (FulfillmentLabel l : kAnnotatable) {
        auto it = label_rows.find(l);
        if (it == label_rows.end() || it->second == 0) continue;
        rep.per_label_total_agreement[l] =
            static_cast<double>(label_unanimous[l]) / static_cast<double>(it->second);
    }
    return rep;
}

void print_report(std::ostream& out, const AgreementReport& r) {
    out << "complete_rows " << r.complete_rows << '\n';
    out << "krippendorff_alpha " << format_fixed(r.krippendorff_alpha_pairwise, 6) << '\n';
    out << "mean_kappa_vs_majority " << format_fixed(r.mean_kappa_vs_majority, 6) << '\n';
    out << "total_agreement_rate " << format_fixed(r.total_agreement_rate, 6) << '\n';
    out << "two_one_rate " << format_fixed(r.two_one_rate, 6) << '\n';
    for (const auto& [label, rate] : r.per_label_total_agreement)
        out << "total_agreement[" << to_string(label) << "] " << format_fixed(rate, 6)
            << '\n';
}

std::vector<InstanceRecord> aggregate(const std::vector<InstanceRecord>& instances,
                                      const std::vector<AnnotationRecord>& annotations,
                                      const AggregateOptions& opts) {
    std::map<std::string, std::vector<AnnotationRecord>> by_instance;
    for (const auto& a : annotations) by_instance[a.instance_id].push_back(a);

    std::set<std::string> known;
    for (const auto& r : instances) known.insert(r.instance.id);
    for (const auto& [id, recs] : by_instance) {
        (void)recs;
        if (!known.count(id))
            throw DataError("annotations reference unknown instance '" + id + "'");
    }

    std::vector<InstanceRecord> out;
    out.reserve(instances.size());
    for (const auto& r : instances) {
        auto it = by_instance.find(r.instance.id);
        if (it == by_instance.end()) {
            InstanceRecord pass = r;
            pass.label.reset();
            pass.evidence.clear();
            pass.agreement_score = 0;
            pass.overlap_score = 0;
            out.push_back(std::move(pass));
            continue;
        }
        const auto& recs = it->second;
        if (recs.size() != 3)
            throw DataError("instance '" + r.instance.id + "' has " +
                            std::to_string(recs.size()) + " annotations; need 3");
        InstanceRecord g = r;
        std::vector<FulfillmentLabel> labels;
        int hypothetical_votes = 0;
        for (const auto& rec : recs) {
            labels.push_back(rec.label);
            if (rec.hypothetical) ++hypothetical_votes;
        }
        auto [label, score] = majority_vote(labels);
        auto merged = merge_evidence(r.instance, recs, opts);
        g.label = label;
        g.agreement_score = score;
        g.evidence = merged.rendered;
        g.overlap_score = merged.overlap_score;
        g.instance.is_hypothetical = hypothetical_votes >= 2;
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace fulfill
