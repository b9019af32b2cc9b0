/*
 * Copyright (C) 2026 The lscsim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "fixtures.hpp"

#include <sstream>

#include "lscsim/error.hpp"
#include "lscsim/metrics.hpp"

namespace lscsim::test {

std::string plant_corpus_text() {
    return
        "001\tThis||| reduces|reduce|| the||| number||| of||| expensive||| "
        "plant|plant|NOUN|s1 shutdowns|shutdown|| and||| startups|startup|| .|||\n"
        "002\tThe||| pilot||| plant|plant|NOUN|s1 was||| equipped|equip|| with||| a||| "
        "3||| hp.|hp|| turbine||| aerator||| (||| Figure||| 2||| )||| .|||\n"
        "003\tRemove||| about||| half||| the||| branches|branch|| from||| each||| "
        "plant|plant|NOUN|s2 ,||| leaving|leave|| only||| the||| strongest|strong|| "
        "with||| the||| largest||| buds|bud|| .|||\n"
        "004\t``||| On||| the||| side||| toward||| the||| horizon||| --||| the||| "
        "southern||| hemisphere||| --||| it||| is|be|| spring||| ;||| "
        "plants|plant|NOUN|s2 are||| being||| taught|teach|| to||| grow||| ''||| .|||\n"
        "005\tCan||| you||| share||| medical||| facilities|facility|| and||| staff||| "
        "with||| neighboring||| plants|plant|NOUN|s1 ??|||\n";
}

AnnotatedCorpus plant_corpus() {
    std::istringstream in(plant_corpus_text());
    return parse_corpus(in);
}

const std::vector<std::string>& plant_extracted_lines() {
    static const std::vector<std::string> lines = {
        "this reduce the number of expensive plant shutdown and startup",
        "the pilot plant was equip with a 3 hp turbine aerator figure 2",
        "remove about half the branch from each plant leave only the strong with the largest bud",
        "on the side toward the horizon the southern hemisphere it be spring plant are being "
        "teach to grow",
        "can you share medical facility and staff with neighboring plant",
    };
    return lines;
}

TargetPlan plant_target_plan() {
    TargetPlan plan;
    plan.lemma = make_lemma_key("plant", "NOUN");
    plan.senses_c1 = {"s2"};
    plan.senses_c2 = {"s1"};
    return plan;
}

std::uint64_t plant_nontarget_seed() {
    // Found by scanning seeds for a fill split whose C1 carries two s1
    // sentences and one s2 sentence; frozen for reproducibility and
    // re-verified by the tests that use it.
    const AnnotatedCorpus corpus = plant_corpus();
    const LemmaKey plant = make_lemma_key("plant", "NOUN");
    for (std::uint64_t seed = 1; seed < 4096; ++seed) {
        Rng rng(seed);
        const SplitResult split = split_corpus(corpus, {}, rng);
        std::vector<std::string> uses_c1, uses_c2;
        for (const Occurrence& occ : corpus.lemma_index().at(plant)) {
            (split.assignment[occ.sentence].side == Side::C1 ? uses_c1 : uses_c2)
                .push_back(occ.sense);
        }
        const auto t1 = build_sfd(plant, uses_c1, {"s1", "s2"});
        const auto t2 = build_sfd(plant, uses_c2, {"s1", "s2"});
        if (t1.counts == std::vector<std::uint64_t>{2, 1} &&
            t2.counts == std::vector<std::uint64_t>{1, 1})
            return seed;
    }
    throw Error("no fill seed found for the non-target plant split");
}

}  // namespace lscsim::test
