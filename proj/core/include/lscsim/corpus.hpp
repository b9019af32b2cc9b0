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
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace lscsim {

/// Coarse part-of-speech tags. Sense inventories are POS-specific, so a
/// lemma is identified by (lemma, coarse POS) throughout.
enum class Pos : std::uint8_t { Noun, Verb, Adjective, Adverb, Other };

const char* to_string(Pos pos);

/// Maps a raw tag (Penn-style "NN", "VBD", "JJ", "RB" or universal
/// "NOUN", "VERB", "ADJ", "ADV") onto the coarse set; anything
/// unrecognized becomes Pos::Other.
Pos coarse_pos(std::string_view raw_tag);

/// One corpus token. Empty strings stand for absent annotations.
struct Token {
    std::string surface;
    std::string lemma;
    std::string pos;
    std::string sense;

    bool has_lemma() const { return !lemma.empty(); }
    bool has_sense() const { return !sense.empty(); }

    bool operator==(const Token&) const = default;
};

struct Sentence {
    std::string id;
    std::vector<Token> tokens;

    bool operator==(const Sentence&) const = default;
};

/// Identity of a sense-annotated lemma: lowercase lemma plus coarse POS.
struct LemmaKey {
    std::string lemma;
    Pos pos = Pos::Other;

    auto operator<=>(const LemmaKey&) const = default;
};

LemmaKey make_lemma_key(std::string_view lemma, std::string_view raw_pos);
std::string to_string(const LemmaKey& key);

/// Location of one annotated use: indices into the corpus sentence list.
struct Occurrence {
    std::uint32_t sentence = 0;
    std::uint32_t token = 0;
    std::string sense;

    bool operator==(const Occurrence&) const = default;
};

/// A sense-annotated corpus. Immutable once built; safe to read from many
/// threads. The lemma index lists every annotated use, in corpus order.
class AnnotatedCorpus {
public:
    AnnotatedCorpus() = default;

    /// Validates invariants (unique sentence ids, non-empty surfaces,
    /// sense implies lemma, non-empty token lists) and builds the index.
    static AnnotatedCorpus from_sentences(std::vector<Sentence> sentences);

    const std::vector<Sentence>& sentences() const { return sentences_; }
    const std::map<LemmaKey, std::vector<Occurrence>>& lemma_index() const { return index_; }

    bool empty() const { return sentences_.empty(); }

    bool operator==(const AnnotatedCorpus& other) const {
        return sentences_ == other.sentences_ && index_ == other.index_;
    }

private:
    std::vector<Sentence> sentences_;
    std::map<LemmaKey, std::vector<Occurrence>> index_;
};

/// Parses the canonical one-sentence-per-line format:
///   sentence_id TAB token(SP token)*
/// where token = surface|lemma|pos|sense_key, empty fields allowed after
/// the surface. Literal '|', TAB, SP and '\' in fields are escaped as
/// \p, \t, \s, \\. Throws ParseError with the offending line number.
AnnotatedCorpus parse_corpus(std::istream& in);
AnnotatedCorpus parse_corpus_file(const std::string& path);

/// Writes the canonical format; parse_corpus(serialize_corpus(c)) == c.
void serialize_corpus(const AnnotatedCorpus& corpus, std::ostream& out);

/// Plain-token extraction used when exporting split corpora: drops
/// punctuation-only tokens, replaces each remaining token by its lemma if
/// present (else the lowercased surface), and splits underscore-joined
/// phrases into their parts.
std::vector<std::string> extract_plain_tokens(const Sentence& sentence);

/// Convenience: extraction applied to every sentence.
std::vector<std::vector<std::string>> extract_plain_corpus(const AnnotatedCorpus& corpus);

struct InventoryEntry {
    std::vector<std::string> senses;  // deterministic order: sorted by sense key
    std::uint64_t annotated = 0;      // number of sense-annotated uses
    std::uint64_t total = 0;          // extracted-token frequency of the lemma string

    bool operator==(const InventoryEntry&) const = default;
};

/// Per-lemma sense inventory with annotated and total counts. Totals are
/// counted over the plain-token extraction of the corpus (the text models
/// eventually see), matching lemma strings case-insensitively.
std::map<LemmaKey, InventoryEntry> lemma_inventory(const AnnotatedCorpus& corpus);

}  // namespace lscsim
