#pragma once

// Lexicon, tokenizer, and the two-production sentence parser.
// Supported shapes:  D N V D N   and   D N VP.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "gqsem/errors.hpp"

namespace gqsem {

// Word-class maps from surface word to denotation name. The four classes
// must be pairwise disjoint.
struct Lexicon {
    std::map<std::string, std::string> determiners;
    std::map<std::string, std::string> nouns;
    std::map<std::string, std::string> verbs;
    std::map<std::string, std::string> vps;

    // Throws AmbiguousClassError on overlap.
    void validate() const;
};

struct TransitiveAst {
    std::string d1, n1, v, d2, n2;
    friend bool operator==(const TransitiveAst&, const TransitiveAst&) = default;
};

struct IntransitiveAst {
    std::string d, n, vp;
    friend bool operator==(const IntransitiveAst&, const IntransitiveAst&) = default;
};

using SentenceAst = std::variant<TransitiveAst, IntransitiveAst>;

enum class Reading { SubjectWide, ObjectWide, Branching };
const char* reading_name(Reading r);

// Whitespace-split, lowercased, punctuation-stripped tokens in input order.
std::vector<std::string> tokenize(const std::string& text);

SentenceAst parse(const std::vector<std::string>& tokens, const Lexicon& lex);

// Words of an AST joined with single spaces (the parse round-trip inverse).
std::string render(const SentenceAst& ast);

} // namespace gqsem
