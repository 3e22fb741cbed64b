#pragma once

// Truth evaluation of parsed sentences against a finite model, through
// three backends:
//   oracle       the generalised-quantifier clauses evaluated directly
//   categorical  sentence composites in the relational instantiation
//   vector       the exact-integer matrix mirror; truth is positivity
// plus branching quantification in both set-search and diagram form.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gqsem/frontend.hpp"
#include "gqsem/lin_map.hpp"
#include "gqsem/quantifier.hpp"
#include "gqsem/rel_morphism.hpp"
#include "gqsem/universe.hpp"

namespace gqsem {

inline constexpr std::size_t kDefaultCompositeSizeCap = 5; // |U| for categorical
inline constexpr std::size_t kDefaultVectorSizeCap = 6;    // |U| for vector backend
inline constexpr std::size_t kDefaultBranchingSizeCap = 6; // |U| for branching search

struct EvalCaps {
    std::size_t categorical_size = kDefaultCompositeSizeCap;
    std::size_t vector_size = kDefaultVectorSizeCap;
    std::size_t branching_size = kDefaultBranchingSizeCap;
    std::size_t morphism = kDefaultMorphismCap;
};

// A Barwise–Cooper style model: one universe plus denotations for every
// lexicon entry.
struct Model {
    std::shared_ptr<const Universe> universe;
    std::map<std::string, Subset> nouns;
    std::map<std::string, Subset> vps;
    std::map<std::string, BinRel> verbs;
    std::map<std::string, GeneralizedQuantifier> quantifiers;
    Lexicon lexicon;

    // Checks lexicon disjointness and that every lexicon entry resolves to a
    // denotation of the right kind. Throws on violation.
    void validate() const;

    const GeneralizedQuantifier& determiner(const std::string& word) const;
    const Subset& noun(const std::string& word) const;
    const BinRel& verb(const std::string& word) const;
    const Subset& vp(const std::string& word) const;
};

enum class Backend { Oracle, Categorical, Vector };
const char* backend_name(Backend b);

struct Witness {
    std::optional<Subset> scope_set; // linear readings: the evaluated brace set
    std::optional<std::pair<Subset, Subset>> branching_pair;
};

struct CaseResult {
    bool truth = false;
    std::optional<std::int64_t> scalar; // vector backend only
    std::optional<Witness> witness;
};

struct EvalReport {
    SentenceAst ast;
    // One entry per requested (reading, backend), in enum order.
    std::vector<std::tuple<Reading, Backend, CaseResult>> results;
    std::vector<std::string> notes;

    const CaseResult* find(Reading r, Backend b) const;
};

// Caches the conservativization composites, which are the only expensive
// part of a sentence evaluation. Keyed by quantifier name; use one cache per
// model (or per fixed universe + quantifier set).
class DetCache {
public:
    const RelMorphism& conservativized(const GeneralizedQuantifier& q, const Universe& u,
                                       std::size_t size_cap, std::size_t morphism_cap);
    const LinMap& conservativized_matrix(const GeneralizedQuantifier& q, const Universe& u,
                                         std::size_t size_cap, std::size_t morphism_cap);

private:
    std::map<std::string, RelMorphism> rel_;
    std::map<std::string, LinMap> lin_;
};

// ---- oracle (the normative truth definitions) ------------------------------

// "d n vp" is true iff the vp denotation is in d applied to the noun.
bool oracle_intransitive(const Model& m, const IntransitiveAst& ast);

struct LinearDetail {
    bool truth = false;
    Subset scope_set; // subject-wide: {a in n1 | ...}; object-wide: {b in n2 | ...}
};

// The unfolded scope readings for "d1 n1 v d2 n2".
LinearDetail oracle_reading_detail(const Model& m, const TransitiveAst& ast, Reading r);
bool oracle_reading(const Model& m, const TransitiveAst& ast, Reading r);

// ---- categorical and vector backends ---------------------------------------

LinearDetail categorical_truth_detail(const Model& m, const SentenceAst& ast, Reading r,
                                      const EvalCaps& caps = {},
                                      DetCache* cache = nullptr);
bool categorical_truth(const Model& m, const SentenceAst& ast, Reading r,
                       const EvalCaps& caps = {}, DetCache* cache = nullptr);

// Witness count of the embedded sentence composite; positive exactly when
// the categorical backend is true.
std::int64_t vector_truth(const Model& m, const SentenceAst& ast, Reading r,
                          const EvalCaps& caps = {}, DetCache* cache = nullptr);

// ---- branching --------------------------------------------------------------

struct BranchingResult {
    bool truth = false;
    bool upward = true; // which monotone case applied
    std::optional<std::pair<Subset, Subset>> witness;
};

// Exhaustive search over witness pairs (X, Y), X within the subject noun and
// Y within the object noun, first witness in ascending submask order.
BranchingResult branching_barwise(const Model& m, const TransitiveAst& ast,
                                  const EvalCaps& caps = {});

// The same question asked diagrammatically: det-noun states contracted
// against a verb state whose graph encodes the monotone coupling.
bool branching_diagram(const Model& m, const TransitiveAst& ast,
                       const EvalCaps& caps = {}, DetCache* cache = nullptr);

// Witness-pair count of the embedded branching diagram.
std::int64_t branching_vector(const Model& m, const TransitiveAst& ast,
                              const EvalCaps& caps = {}, DetCache* cache = nullptr);

// ---- aggregation ------------------------------------------------------------

// Parses, evaluates every requested (reading, backend) pair, and records
// cross-backend disagreements in the notes.
EvalReport evaluate(const Model& m, const std::string& text,
                    std::vector<Reading> readings, std::vector<Backend> backends,
                    const EvalCaps& caps = {}, DetCache* cache = nullptr);

} // namespace gqsem
