#pragma once

// Hand-written fixture corpus: 30 short narratives with 45 planted desire
// expressions covering all six templates, plus near-miss narratives that must
// produce nothing. Planted entries record where each match lives and how big
// its context windows are; the tests treat this table as ground truth.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fulfill/tokenize.hpp"
#include "fulfill/types.hpp"

namespace fulfill::testfx {

struct Planted {
    std::size_t narrative = 0;
    std::size_t sentence = 0;
    std::string pattern_id;
    std::vector<std::string> match_tokens;  // folded surfaces, in order
    std::size_t prior_len = 0;
    std::size_t post_len = 0;
};

struct FixtureCorpus {
    std::vector<Narrative> narratives;
    std::vector<Planted> planted;  // ordered by (narrative, sentence, position)
};

// First token position where the folded surfaces of `s` contain `seq`.
inline std::optional<TokenSpan> find_tokens(const Sentence& s,
                                            const std::vector<std::string>& seq) {
    if (seq.empty() || s.tokens.size() < seq.size()) return std::nullopt;
    for (std::size_t i = 0; i + seq.size() <= s.tokens.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < seq.size(); ++j) {
            if (lower_copy(s.tokens[i + j].surface) != seq[j]) {
                ok = false;
                break;
            }
        }
        if (ok) return TokenSpan{i, i + seq.size()};
    }
    return std::nullopt;
}

inline FixtureCorpus fixture_corpus() {
    const std::vector<std::vector<std::string>> texts = {
        // fx00
        {"My sister and I drove to the lake on a gray morning.",
         "I wanted to see the old house one more time.",
         "The road was empty and we made good time."},
        // fx01
        {"Wanted to sleep before the long shift.",
         "The noise from the street made that impossible."},
        // fx02
        {"She hoped to hear from the lawyer before Friday."},
        // fx03
        {"The moving van arrived two days late.",
         "Half the boxes were crushed at one corner.",
         "A neighbor lent us her trolley.",
         "The stairwell smelled of fresh paint.",
         "Rain started around four.",
         "We carried the sofa in through the garden.",
         "He had wanted to move to the coast for years.",
         "The flat faced a row of plane trees instead.",
         "His records filled one entire wall.",
         "The kettle was the first thing unpacked.",
         "By the weekend the place looked almost lived in.",
         "In October he finally ordered the boxes."},
        // fx04
        {"The bus dropped me at the edge of town.",
         "I needed to find a cheap room before dark.",
         "The first two inns were full.",
         "By then I had decided to stay another week."},
        // fx05
        {"The fair opened at six.",
         "I wanted to leave early but Tom hoped to see the fireworks.",
         "We compromised on nine."},
        // fx06
        {"The party ran long past midnight.",
         "Someone kept refilling my glass.",
         "I didn't want to bother the neighbors at that hour.",
         "We moved the music inside.",
         "The last guests left at two."},
        // fx07
        {"I couldn't wait to open the letter.",
         "The envelope was heavy and smelled of lavender.",
         "Inside were three photographs.",
         "None of them showed my grandmother."},
        // fx08
        {"Saturday began slow and cold.",
         "Frost covered the parked cars.",
         "We walked the long way around the park.",
         "She was wanting to try the new bakery on Pine Street.",
         "The queue ran out the door.",
         "We settled for tea at the kiosk."},
        // fx09
        {"The ferry schedule changed in May.",
         "Crossings ran only twice a day.",
         "They had been wanting to visit the island since spring.",
         "Tickets sold out the first morning.",
         "A second boat was added in July.",
         "They finally crossed on a calm Tuesday.",
         "The lighthouse was smaller than the postcards showed."},
        // fx10: near misses only
        {"He wants to go fishing every weekend.",
         "The wanted poster hung by the door."},
        // fx11: near misses only
        {"She wanted the red bicycle in the window.",
         "I was wanting desperately to scream.",
         "We talked about the things we could not name."},
        // fx12
        {"The cafe was nearly empty that afternoon.",
         "I ordered a pot of tea and waited.",
         "The waiter brought shortbread on a chipped plate.",
         "Later I requested a quiet table by the window."},
        // fx13
        {"I asked for directions at the petrol station.",
         "The attendant drew a map on a receipt.",
         "His lines crossed themselves twice.",
         "A woman at the pump corrected the last turn.",
         "In the end we arranged to meet at noon."},
        // fx14
        {"My back tooth started aching on Monday.",
         "My dentist scheduled a cleaning for the following Tuesday.",
         "The ache faded before the appointment came."},
        // fx15
        {"The flat listing went up on a Thursday.",
         "Twelve people viewed it the first day.",
         "The landlord required a deposit of two hundred dollars.",
         "I signed the papers in his kitchen."},
        // fx16
        {"The foreman demanded an answer by morning.",
         "Nobody on the crew spoke up.",
         "The scaffolding came down that same week."},
        // fx17
        {"She had asked for my address weeks before.",
         "Nothing arrived through January.",
         "Then a parcel appeared, wrapped in brown paper.",
         "Inside was the scarf from the market in Split.",
         "A note apologized for the delay.",
         "I wished to thank her properly."},
        // fx18
        {"The posts went in crooked on the first try.",
         "We aimed to finish the fence before the rain came.",
         "Clouds piled up over the far field.",
         "The last rail went on under a wet sky."},
        // fx19
        {"The results arrived in a thin envelope.",
         "Thin envelopes were supposed to be bad.",
         "I ached to tell someone the good news.",
         "Nobody was home on our street.",
         "Instead I scheduled a call for Sunday."},
        // fx20
        {"The train sat outside the station for an hour.",
         "He desired to know the reason for the delay.",
         "The conductor walked past without a word."},
        // fx21
        {"The harbor was still dark when I came down.",
         "I had hoped to catch the early ferry.",
         "It left four minutes ahead of schedule.",
         "The next crossing was at noon.",
         "The captain demanded calm.",
         "Passengers pressed against the gate anyway.",
         "A gull worked the crowd for chips.",
         "I didn't need to hurry after all."},
        // fx22
        {"I was hoping to borrow your ladder.",
         "The gutters are full of maple seeds again.",
         "We had been hoping to sell the car by summer.",
         "The garage wants it gone either way."},
        // fx23
        {"I wanted to learn the piano as a child.",
         "Our flat had no room for one.",
         "A paper keyboard taped to the table had to do.",
         "The notes lived only in my head.",
         "My teacher asked for patience I did not have.",
         "Scales felt like punishment.",
         "Then one winter the music began to make sense.",
         "Practice stopped feeling like a chore.",
         "Still, I hoped to play one song properly before the recital."},
        // fx24
        {"My mother wanted to open a shop of her own.",
         "The bank turned her down twice.",
         "Her brother wished to help with the lease."},
        // fx25
        {"The contest rules ran to three pages.",
         "I really wanted to win the baking contest.",
         "My layer cake leaned like a tired tower.",
         "The icing held it together, barely.",
         "I hoped to place well but the judges seemed bored.",
         "The ribbon went to a plate of lemon bars."},
        // fx26
        {"The shop floor changed managers again.",
         "The new rota put me on nights.",
         "By June I had wanted to quit twice.",
         "A transfer notice went up in July.",
         "The day shift took me back without comment."},
        // fx27
        {"The invitation came on thick cream paper.",
         "The date fell in the middle of harvest.",
         "I didn't want to miss the wedding.",
         "My cousin covered my rows for the weekend.",
         "The drive south took nine hours.",
         "We couldn't wait to get back on the road.",
         "The reception ran out of cake before the toasts."},
        // fx28
        {"Rose had been aching to change jobs.",
         "Her desk faced a wall of filing cabinets.",
         "The posting in the lobby listed a field position.",
         "Applications closed at the end of the month.",
         "She needed to know whether the offer still stood.",
         "The phone line rang busy all afternoon.",
         "An email bounced back twice.",
         "A secretary finally took her name.",
         "The interview letter came nine days later.",
         "She decided to call them in the morning."},
        // fx29
        {"The porters were gone by the time we docked.",
         "The clerk arranged to send the trunks ahead.",
         "Only one trunk reached the hotel.",
         "The other toured the coast without us."},
    };

    FixtureCorpus fx;
    Tokenizer tok;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        std::string joined;
        for (const auto& s : texts[i]) {
            if (!joined.empty()) joined += ' ';
            joined += s;
        }
        Narrative n;
        n.id = "fx" + std::string(i < 10 ? "0" : "") + std::to_string(i);
        n.sentences = tok.run(joined);
        fx.narratives.push_back(std::move(n));
    }

    fx.planted = {
        {0, 1, "want:simple-past", {"wanted", "to"}, 1, 1},
        {1, 0, "want:simple-past", {"wanted", "to"}, 0, 1},
        {2, 0, "hope:simple-past", {"hoped", "to"}, 0, 0},
        {3, 6, "want:past-perfect", {"had", "wanted", "to"}, 5, 5},
        {3, 11, "order:simple-past", {"ordered"}, 5, 0},
        {4, 1, "need:simple-past", {"needed", "to"}, 1, 2},
        {4, 3, "decide:past-perfect", {"had", "decided", "to"}, 3, 0},
        {5, 1, "want:simple-past", {"wanted", "to"}, 1, 1},
        {5, 1, "hope:simple-past", {"hoped", "to"}, 1, 1},
        {6, 2, "want:negated-past", {"did", "n't", "want", "to"}, 2, 2},
        {7, 0, "wait:modal-negative", {"could", "n't", "wait", "to"}, 0, 3},
        {8, 3, "want:past-progressive", {"was", "wanting", "to"}, 3, 2},
        {9, 2, "want:past-perfect-progressive", {"had", "been", "wanting", "to"}, 2, 4},
        {12, 1, "order:simple-past", {"ordered"}, 1, 2},
        {12, 3, "request:simple-past", {"requested"}, 3, 0},
        {13, 0, "ask:simple-past", {"asked", "for"}, 0, 4},
        {13, 4, "arrange:simple-past", {"arranged", "to"}, 4, 0},
        {14, 1, "schedule:simple-past", {"scheduled"}, 1, 1},
        {15, 2, "require:simple-past", {"required"}, 2, 1},
        {16, 0, "demand:simple-past", {"demanded"}, 0, 2},
        {17, 0, "ask:past-perfect", {"had", "asked", "for"}, 0, 5},
        {17, 5, "wish:simple-past", {"wished", "to"}, 5, 0},
        {18, 1, "aim:simple-past", {"aimed", "to"}, 1, 2},
        {19, 2, "ache:simple-past", {"ached", "to"}, 2, 2},
        {19, 4, "schedule:simple-past", {"scheduled"}, 4, 0},
        {20, 1, "desire:simple-past", {"desired", "to"}, 1, 1},
        {21, 1, "hope:past-perfect", {"had", "hoped", "to"}, 1, 5},
        {21, 4, "demand:simple-past", {"demanded"}, 4, 3},
        {21, 7, "need:negated-past", {"did", "n't", "need", "to"}, 5, 0},
        {22, 0, "hope:past-progressive", {"was", "hoping", "to"}, 0, 3},
        {22, 2, "hope:past-perfect-progressive", {"had", "been", "hoping", "to"}, 2, 1},
        {23, 0, "want:simple-past", {"wanted", "to"}, 0, 5},
        {23, 4, "ask:simple-past", {"asked", "for"}, 4, 4},
        {23, 8, "hope:simple-past", {"hoped", "to"}, 5, 0},
        {24, 0, "want:simple-past", {"wanted", "to"}, 0, 2},
        {24, 2, "wish:simple-past", {"wished", "to"}, 2, 0},
        {25, 1, "want:simple-past", {"wanted", "to"}, 1, 4},
        {25, 4, "hope:simple-past", {"hoped", "to"}, 4, 1},
        {26, 2, "want:past-perfect", {"had", "wanted", "to"}, 2, 2},
        {27, 2, "want:negated-past", {"did", "n't", "want", "to"}, 2, 4},
        {27, 5, "wait:modal-negative", {"could", "n't", "wait", "to"}, 5, 1},
        {28, 0, "ache:past-perfect-progressive", {"had", "been", "aching", "to"}, 0, 5},
        {28, 4, "need:simple-past", {"needed", "to"}, 4, 5},
        {28, 9, "decide:simple-past", {"decided", "to"}, 5, 0},
        {29, 1, "arrange:simple-past", {"arranged", "to"}, 1, 2},
    };
    return fx;
}

// Sentence counts the narratives above were written to have; the tokenizer
// must reproduce them exactly or every downstream index is off.
inline std::vector<std::size_t> fixture_sentence_counts() {
    return {3, 2, 1, 12, 4, 3, 5, 4, 6, 7, 2, 3, 4, 5, 3,
            4, 3, 6, 4, 5, 3, 8, 4, 9, 3, 6, 5, 7, 10, 4};
}

}  // namespace fulfill::testfx
