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
#include "lscsim/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_map>

#include "lscsim/error.hpp"

namespace lscsim {

namespace {

std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
    if (s.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (std::toupper(static_cast<unsigned char>(s[i])) != prefix[i]) return false;
    }
    return true;
}

// Punctuation = every byte is ASCII and non-alphanumeric. Multi-byte UTF-8
// sequences are treated as word characters.
bool is_punctuation_only(std::string_view surface) {
    if (surface.empty()) return true;
    for (unsigned char c : surface) {
        if (c >= 0x80 || std::isalnum(c)) return false;
    }
    return true;
}

std::string escape_field(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
            case '|': out += "\\p"; break;
            case '\t': out += "\\t"; break;
            case ' ': out += "\\s"; break;
            case '\\': out += "\\\\"; break;
            default: out += c;
        }
    }
    return out;
}

std::string unescape_field(std::string_view raw, std::size_t line_no) {
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] != '\\') {
            out += raw[i];
            continue;
        }
        if (i + 1 == raw.size()) throw ParseError(line_no, "dangling escape character");
        switch (raw[++i]) {
            case 'p': out += '|'; break;
            case 't': out += '\t'; break;
            case 's': out += ' '; break;
            case '\\': out += '\\'; break;
            default:
                throw ParseError(line_no, std::string("invalid escape \\") + raw[i]);
        }
    }
    return out;
}

std::vector<std::string_view> split_on(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == sep) {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

Token parse_token(std::string_view raw, std::size_t line_no) {
    const auto fields = split_on(raw, '|');
    if (fields.empty() || fields.size() > 4)
        throw ParseError(line_no, "token must have 1..4 |-separated fields: '" + std::string(raw) + "'");
    Token tok;
    tok.surface = unescape_field(fields[0], line_no);
    if (fields.size() > 1) tok.lemma = unescape_field(fields[1], line_no);
    if (fields.size() > 2) tok.pos = unescape_field(fields[2], line_no);
    if (fields.size() > 3) tok.sense = unescape_field(fields[3], line_no);
    if (tok.surface.empty()) throw ParseError(line_no, "token with empty surface");
    if (tok.has_sense() && !tok.has_lemma())
        throw ParseError(line_no, "sense-annotated token '" + tok.surface + "' has no lemma");
    // A token carrying several sense annotations at once is rejected rather
    // than silently collapsed to one of them.
    if (tok.sense.find(';') != std::string::npos)
        throw ParseError(line_no, "token '" + tok.surface + "' carries multiple sense annotations");
    return tok;
}

}  // namespace

const char* to_string(Pos pos) {
    switch (pos) {
        case Pos::Noun: return "NOUN";
        case Pos::Verb: return "VERB";
        case Pos::Adjective: return "ADJ";
        case Pos::Adverb: return "ADV";
        case Pos::Other: return "OTHER";
    }
    return "OTHER";
}

Pos coarse_pos(std::string_view raw_tag) {
    if (starts_with_ci(raw_tag, "ADJ") || starts_with_ci(raw_tag, "J")) return Pos::Adjective;
    if (starts_with_ci(raw_tag, "ADV") || starts_with_ci(raw_tag, "R")) return Pos::Adverb;
    if (starts_with_ci(raw_tag, "N")) return Pos::Noun;
    if (starts_with_ci(raw_tag, "V")) return Pos::Verb;
    return Pos::Other;
}

LemmaKey make_lemma_key(std::string_view lemma, std::string_view raw_pos) {
    return LemmaKey{to_lower_ascii(lemma), coarse_pos(raw_pos)};
}

std::string to_string(const LemmaKey& key) {
    return key.lemma + "/" + to_string(key.pos);
}

AnnotatedCorpus AnnotatedCorpus::from_sentences(std::vector<Sentence> sentences) {
    AnnotatedCorpus corpus;
    std::set<std::string_view> seen_ids;
    for (std::size_t s = 0; s < sentences.size(); ++s) {
        const Sentence& sent = sentences[s];
        if (sent.id.empty()) throw ParseError("sentence with empty id");
        if (!seen_ids.insert(sent.id).second)
            throw ParseError("duplicate sentence id '" + sent.id + "'");
        if (sent.tokens.empty())
            throw ParseError("sentence '" + sent.id + "' has no tokens");
        for (std::size_t t = 0; t < sent.tokens.size(); ++t) {
            const Token& tok = sent.tokens[t];
            if (tok.surface.empty())
                throw ParseError("sentence '" + sent.id + "': token with empty surface");
            if (tok.has_sense() && !tok.has_lemma())
                throw ParseError("sentence '" + sent.id + "': sense-annotated token has no lemma");
            if (tok.has_sense()) {
                const LemmaKey key = make_lemma_key(tok.lemma, tok.pos);
                corpus.index_[key].push_back(Occurrence{
                    static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t), tok.sense});
            }
        }
    }
    corpus.sentences_ = std::move(sentences);
    return corpus;
}

AnnotatedCorpus parse_corpus(std::istream& in) {
    std::vector<Sentence> sentences;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError(line_no, "missing TAB after sentence id");
        Sentence sent;
        sent.id = unescape_field(std::string_view(line).substr(0, tab), line_no);
        if (sent.id.empty()) throw ParseError(line_no, "empty sentence id");
        const std::string_view rest = std::string_view(line).substr(tab + 1);
        if (rest.empty()) throw ParseError(line_no, "sentence '" + sent.id + "' has no tokens");
        for (std::string_view raw : split_on(rest, ' ')) {
            if (raw.empty())
                throw ParseError(line_no, "empty token (double space?)");
            sent.tokens.push_back(parse_token(raw, line_no));
        }
        sentences.push_back(std::move(sent));
    }
    try {
        return AnnotatedCorpus::from_sentences(std::move(sentences));
    } catch (const ParseError& e) {
        throw ParseError(std::string("corpus: ") + e.what());
    }
}

AnnotatedCorpus parse_corpus_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus file: " + path);
    return parse_corpus(in);
}

void serialize_corpus(const AnnotatedCorpus& corpus, std::ostream& out) {
    for (const Sentence& sent : corpus.sentences()) {
        out << escape_field(sent.id);
        char sep = '\t';
        for (const Token& tok : sent.tokens) {
            out << sep << escape_field(tok.surface) << '|' << escape_field(tok.lemma) << '|'
                << escape_field(tok.pos) << '|' << escape_field(tok.sense);
            sep = ' ';
        }
        out << '\n';
    }
}

std::vector<std::string> extract_plain_tokens(const Sentence& sentence) {
    std::vector<std::string> out;
    out.reserve(sentence.tokens.size());
    for (const Token& tok : sentence.tokens) {
        if (is_punctuation_only(tok.surface)) continue;
        const std::string word = tok.has_lemma() ? tok.lemma : to_lower_ascii(tok.surface);
        if (word.find('_') == std::string::npos) {
            out.push_back(word);
            continue;
        }
        for (std::string_view part : split_on(word, '_')) {
            if (!part.empty()) out.emplace_back(part);
        }
    }
    return out;
}

std::vector<std::vector<std::string>> extract_plain_corpus(const AnnotatedCorpus& corpus) {
    std::vector<std::vector<std::string>> lines;
    lines.reserve(corpus.sentences().size());
    for (const Sentence& sent : corpus.sentences()) lines.push_back(extract_plain_tokens(sent));
    return lines;
}

std::map<LemmaKey, InventoryEntry> lemma_inventory(const AnnotatedCorpus& corpus) {
    std::map<LemmaKey, InventoryEntry> inventory;
    for (const auto& [key, occurrences] : corpus.lemma_index()) {
        InventoryEntry entry;
        entry.annotated = occurrences.size();
        std::set<std::string> senses;
        for (const Occurrence& occ : occurrences) senses.insert(occ.sense);
        entry.senses.assign(senses.begin(), senses.end());
        inventory.emplace(key, std::move(entry));
    }
    if (inventory.empty()) return inventory;

    // Total frequency of the lemma string over the extracted corpus,
    // case-insensitive (keys are lowercase).
    std::unordered_map<std::string, std::uint64_t> extracted_counts;
    for (const Sentence& sent : corpus.sentences()) {
        for (std::string& word : extract_plain_tokens(sent)) {
            extracted_counts[to_lower_ascii(word)]++;
        }
    }
    for (auto& [key, entry] : inventory) {
        const auto it = extracted_counts.find(key.lemma);
        entry.total = it == extracted_counts.end() ? 0 : it->second;
    }
    return inventory;
}

}  // namespace lscsim
