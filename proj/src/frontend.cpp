#include "gqsem/frontend.hpp"

#include <cctype>

namespace gqsem {

const char* reading_name(Reading r) {
    switch (r) {
        case Reading::SubjectWide: return "subject-wide";
        case Reading::ObjectWide: return "object-wide";
        case Reading::Branching: return "branching";
    }
    return "?";
}

void Lexicon::validate() const {
    auto check_disjoint = [](const std::map<std::string, std::string>& a,
                             const std::map<std::string, std::string>& b) {
        for (const auto& [word, _] : a) {
            if (b.count(word)) throw AmbiguousClassError(word);
        }
    };
    check_disjoint(determiners, nouns);
    check_disjoint(determiners, verbs);
    check_disjoint(determiners, vps);
    check_disjoint(nouns, verbs);
    check_disjoint(nouns, vps);
    check_disjoint(verbs, vps);
}

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> out;
    std::string word;
    for (char c : text) {
        const auto uc = static_cast<unsigned char>(c);
        if (std::isalnum(uc) || c == '_' || c == '-' || c == '\'') {
            word += char(std::tolower(uc));
        } else if (!word.empty()) {
            out.push_back(word);
            word.clear();
        }
    }
    if (!word.empty()) out.push_back(word);
    return out;
}

namespace {

enum class WordClass { Determiner, Noun, Verb, Vp, Unknown };

WordClass classify(const std::string& word, const Lexicon& lex) {
    int hits = 0;
    WordClass cls = WordClass::Unknown;
    if (lex.determiners.count(word)) { ++hits; cls = WordClass::Determiner; }
    if (lex.nouns.count(word)) { ++hits; cls = WordClass::Noun; }
    if (lex.verbs.count(word)) { ++hits; cls = WordClass::Verb; }
    if (lex.vps.count(word)) { ++hits; cls = WordClass::Vp; }
    if (hits > 1) throw AmbiguousClassError(word);
    return cls;
}

void require_class(const std::string& word, WordClass got, WordClass want,
                   const char* role) {
    if (got == WordClass::Unknown) throw UnknownWordError(word);
    if (got != want) {
        throw ShapeMismatchError("expected a " + std::string(role) + " at '" + word +
                                 "'; supported shapes are 'D N V D N' and 'D N VP'");
    }
}

} // namespace

SentenceAst parse(const std::vector<std::string>& tokens, const Lexicon& lex) {
    if (tokens.size() != 3 && tokens.size() != 5) {
        throw ShapeMismatchError("sentence has " + std::to_string(tokens.size()) +
                                 " words; supported shapes are 'D N V D N' and 'D N VP'");
    }
    std::vector<WordClass> cls;
    cls.reserve(tokens.size());
    for (const auto& t : tokens) cls.push_back(classify(t, lex));

    if (tokens.size() == 5) {
        require_class(tokens[0], cls[0], WordClass::Determiner, "determiner");
        require_class(tokens[1], cls[1], WordClass::Noun, "noun");
        require_class(tokens[2], cls[2], WordClass::Verb, "verb");
        require_class(tokens[3], cls[3], WordClass::Determiner, "determiner");
        require_class(tokens[4], cls[4], WordClass::Noun, "noun");
        return TransitiveAst{tokens[0], tokens[1], tokens[2], tokens[3], tokens[4]};
    }
    require_class(tokens[0], cls[0], WordClass::Determiner, "determiner");
    require_class(tokens[1], cls[1], WordClass::Noun, "noun");
    require_class(tokens[2], cls[2], WordClass::Vp, "verb phrase");
    return IntransitiveAst{tokens[0], tokens[1], tokens[2]};
}

std::string render(const SentenceAst& ast) {
    if (const auto* t = std::get_if<TransitiveAst>(&ast)) {
        return t->d1 + " " + t->n1 + " " + t->v + " " + t->d2 + " " + t->n2;
    }
    const auto& i = std::get<IntransitiveAst>(ast);
    return i.d + " " + i.n + " " + i.vp;
}

} // namespace gqsem
