// Serial vs parallel timing on a synthetic corpus. The parallel kernels must
// produce bit-identical results, so this doubles as a quick sanity check.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fulfill/batch.hpp"
#include "fulfill/corpus_io.hpp"
#include "fulfill/evaluation.hpp"
#include "fulfill/extractor.hpp"
#include "fulfill/tokenize.hpp"

using namespace fulfill;

namespace {

const char* kPool[] = {
    "morning", "walked", "store", "friend", "coffee", "slowly", "happy", "tired",
    "found",   "lost",   "money", "ticket", "train",  "house",  "quiet", "loud",
    "smiled",  "cried",  "rain",  "sun",    "street", "garden", "book",  "letter",
    "finally", "waited", "door",  "window", "dinner", "phone",  "call",  "plan",
};
const char* kDesires[] = {
    "I wanted to go home",         "She hoped to win the race",
    "He had decided to buy it",    "We were hoping to leave early",
    "They had been waiting to start", "I did n't want to stay",
};

std::vector<Narrative> make_corpus(std::size_t narratives, std::size_t sentences,
                                   const Tokenizer& tok) {
    std::mt19937 gen(7);
    std::vector<Narrative> out;
    out.reserve(narratives);
    for (std::size_t n = 0; n < narratives; ++n) {
        std::ostringstream text;
        for (std::size_t s = 0; s < sentences; ++s) {
            if (s) text << ' ';
            if (s % 3 == 1) {
                text << kDesires[gen() % std::size(kDesires)] << '.';
                continue;
            }
            std::size_t len = 6 + gen() % 8;
            text << "The";
            for (std::size_t w = 0; w < len; ++w) text << ' ' << kPool[gen() % std::size(kPool)];
            text << '.';
        }
        Narrative nar;
        nar.id = "bench-" + std::to_string(n);
        nar.sentences = tok.run(text.str());
        out.push_back(std::move(nar));
    }
    return out;
}

LexiconSet make_lexicons() {
    LexiconSet lex = default_lexicons();
    // Alternate polarities over the pool so connotation and sentiment
    // features have work to do.
    for (std::size_t i = 0; i < std::size(kPool); ++i) {
        Polarity p = i % 2 ? Polarity::Positive : Polarity::Negative;
        lex.connotation[kPool[i]] = p;
        if (i % 3 == 0) lex.sentiment[kPool[i]] = p;
    }
    lex.validate_and_compile();
    return lex;
}

template <typename Fn>
double time_ms(Fn fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const char* stage, double serial_ms, double parallel_ms, bool equal) {
    std::cout << stage << '\t' << serial_ms << '\t' << parallel_ms << '\t'
              << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << '\t'
              << (equal ? "yes" : "NO") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t narratives = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 400;
    std::size_t sentences = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 60;

    Tokenizer tok;
    std::vector<Narrative> corpus = make_corpus(narratives, sentences, tok);
    LexiconSet lex = make_lexicons();
    std::vector<DesirePattern> pats = generate_patterns(default_pattern_config());

    std::cout << "narratives " << narratives << ", sentences/narrative " << sentences
              << ", OpenMP " << (parallel_enabled() ? "on" : "off") << '\n';
    std::cout << "stage\tserial_ms\tparallel_ms\tspeedup\tequal\n";

    std::vector<DesireInstance> is, ip;
    double es = time_ms([&] {
        is = extract_all(corpus, pats, lex, tok.stop_words(), ExecMode::Serial);
    });
    double ep = time_ms([&] {
        ip = extract_all(corpus, pats, lex, tok.stop_words(), ExecMode::Parallel);
    });
    report("extract", es, ep, is == ip);

    FeatureConfig cfg;
    std::vector<FeatureVector> fs, fp;
    double ts = time_ms([&] { fs = featurize_all(is, lex, cfg, {}, ExecMode::Serial); });
    double tp = time_ms([&] { fp = featurize_all(is, lex, cfg, {}, ExecMode::Parallel); });
    report("featurize", ts, tp, fs == fp);

    // Synthetic alternating labels; the model content is irrelevant to timing.
    std::vector<TrainExample> train;
    for (std::size_t i = 0; i < fs.size(); ++i)
        train.emplace_back(fs[i], i % 2 ? FulfillmentLabel::Fulfilled
                                        : FulfillmentLabel::Unfulfilled);
    LRHyper hyper;
    hyper.epochs = 30;
    AnyModel model = train_lr(train, hyper);

    std::vector<Prediction> ps, pp;
    double qs = time_ms([&] { ps = predict_all(model, fs, ExecMode::Serial); });
    double qp = time_ms([&] { pp = predict_all(model, fs, ExecMode::Parallel); });
    report("predict", qs, qp, ps == pp);

    bool all_equal = is == ip && fs == fp && ps == pp;
    std::cout << (all_equal ? "parallel output identical to serial\n"
                            : "MISMATCH between serial and parallel output\n");
    return all_equal ? 0 : 1;
}
