#include "gqsem/evaluator.hpp"

#include <algorithm>

namespace gqsem {

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Oracle: return "oracle";
        case Backend::Categorical: return "categorical";
        case Backend::Vector: return "vector";
    }
    return "?";
}

void Model::validate() const {
    if (!universe) throw ModelValidationError("model has no universe");
    lexicon.validate();
    auto require = [](const auto& map, const std::string& name, const char* kind) {
        if (!map.count(name)) {
            throw UnknownNameError(std::string("lexicon refers to unknown ") + kind +
                                   " denotation '" + name + "'");
        }
    };
    for (const auto& [word, name] : lexicon.determiners) require(quantifiers, name, "quantifier");
    for (const auto& [word, name] : lexicon.nouns) require(nouns, name, "noun");
    for (const auto& [word, name] : lexicon.verbs) require(verbs, name, "verb");
    for (const auto& [word, name] : lexicon.vps) require(vps, name, "verb-phrase");
}

namespace {

template <typename MapT>
const typename MapT::mapped_type& resolve(const MapT& denotations,
                                          const std::map<std::string, std::string>& words,
                                          const std::string& word, const char* kind) {
    auto w = words.find(word);
    if (w == words.end()) throw UnknownWordError(word);
    auto d = denotations.find(w->second);
    if (d == denotations.end()) {
        throw UnknownNameError(std::string("unknown ") + kind + " denotation '" +
                               w->second + "'");
    }
    return d->second;
}

} // namespace

const GeneralizedQuantifier& Model::determiner(const std::string& word) const {
    return resolve(quantifiers, lexicon.determiners, word, "quantifier");
}
const Subset& Model::noun(const std::string& word) const {
    return resolve(nouns, lexicon.nouns, word, "noun");
}
const BinRel& Model::verb(const std::string& word) const {
    return resolve(verbs, lexicon.verbs, word, "verb");
}
const Subset& Model::vp(const std::string& word) const {
    return resolve(vps, lexicon.vps, word, "verb-phrase");
}

const CaseResult* EvalReport::find(Reading r, Backend b) const {
    for (const auto& [rr, bb, res] : results) {
        if (rr == r && bb == b) return &res;
    }
    return nullptr;
}

// ---- oracle -----------------------------------------------------------------

bool oracle_intransitive(const Model& m, const IntransitiveAst& ast) {
    const auto& d = m.determiner(ast.d);
    return d.holds(m.noun(ast.n), m.vp(ast.vp));
}

LinearDetail oracle_reading_detail(const Model& m, const TransitiveAst& ast, Reading r) {
    if (r == Reading::Branching) {
        throw ShapeMismatchError("oracle_reading evaluates linear readings only");
    }
    const Universe& u = *m.universe;
    const auto& d1 = m.determiner(ast.d1);
    const auto& d2 = m.determiner(ast.d2);
    const Subset& n1 = m.noun(ast.n1);
    const Subset& n2 = m.noun(ast.n2);
    const BinRel& v = m.verb(ast.v);

    if (r == Reading::SubjectWide) {
        Mask scope = 0;
        for (std::size_t a = 0; a < u.size(); ++a) {
            if (!n1.contains(a)) continue;
            if (d2.holds(n2, intersect(n2, v.fiber(a)))) scope |= Mask(1) << a;
        }
        const Subset s(u, scope);
        return {d1.holds(n1, s), s};
    }
    const BinRel vc = converse(v);
    Mask scope = 0;
    for (std::size_t b = 0; b < u.size(); ++b) {
        if (!n2.contains(b)) continue;
        if (d1.holds(n1, intersect(n1, vc.fiber(b)))) scope |= Mask(1) << b;
    }
    const Subset s(u, scope);
    return {d2.holds(n2, s), s};
}

bool oracle_reading(const Model& m, const TransitiveAst& ast, Reading r) {
    return oracle_reading_detail(m, ast, r).truth;
}

// ---- shared categorical machinery -------------------------------------------

namespace {

RelMorphism determiner_table(const GeneralizedQuantifier& q, const Universe& u,
                             std::size_t morphism_cap) {
    return morphism_from_subset_pairs(u, as_table(q, u, u.size()), morphism_cap);
}

void require_size(const Universe& u, std::size_t size_cap, const char* backend) {
    if (u.size() > size_cap) {
        throw CapExceededError(std::string(backend) + " backend: universe size " +
                               std::to_string(u.size()) + " exceeds cap " +
                               std::to_string(size_cap));
    }
}

// State I -> W of all conservativized scopes of d at noun n, i.e. the image
// of the noun state under the transposed composite: { D ∩ n | (n, D) in d }.
RelMorphism conservativized_state(const RelMorphism& cons, const Subset& n,
                                  std::size_t cap) {
    return compose(subset_state(n), transpose(cons), cap);
}

// Test W -> I accepting exactly the sets T with T ∩ noun a member of the
// state k: pair with the noun, intersect, compare by cup.
RelMorphism membership_test(const RelMorphism& k, const Subset& noun, std::size_t cap) {
    const Universe& u = noun.universe();
    const RelMorphism id_w = identity(u, ObjectType::w(1), cap);
    RelMorphism t = tensor_product(id_w, subset_state(noun), cap); // W -> W*W
    t = compose(t, intersect_w(u, cap), cap);                      // -> W
    t = compose(t, tensor_product(id_w, k, cap), cap);             // -> W*W
    return compose(t, cup_w(u, cap), cap);                         // -> I
}

ObjectType verb_state_type() {
    ObjectType t = ObjectType::w(1);
    t.atoms.push_back(Atom::S);
    t.atoms.push_back(Atom::W);
    return t;
}

// Verb as a state I -> W*S*W listing entity fibers: subject form pairs each
// singleton {a} with its row, object form pairs each converse row with {b}.
RelMorphism verb_fiber_state(const BinRel& v, bool subject_form, std::size_t cap) {
    const Universe& u = v.universe();
    const std::uint64_t w = u.powerset_size();
    std::vector<std::pair<Point, Point>> graph;
    const BinRel vc = converse(v);
    for (std::size_t e = 0; e < u.size(); ++e) {
        const Point sing = Point(1) << e;
        if (subject_form) {
            graph.emplace_back(0, sing * w + Point(v.fiber(e).bits()));
        } else {
            graph.emplace_back(0, Point(vc.fiber(e).bits()) * w + sing);
        }
    }
    return RelMorphism(u, ObjectType::unit(), verb_state_type(), std::move(graph), cap);
}

// The set of entities whose fiber passes the inner test. The passing
// singletons are collected by the composer; folding them into one subset is
// the union aggregation the generators cannot express (it is the dual
// monoid on W), so it is an evaluator step, not a categorical generator.
Subset comprehend(const RelMorphism& verb_state, const RelMorphism& inner_test,
                  bool subject_form, std::size_t cap) {
    const Universe& u = verb_state.universe();
    const RelMorphism id_w = identity(u, ObjectType::w(1), cap);
    const RelMorphism id_s = identity(u, ObjectType::s(), cap);
    RelMorphism sigma = subject_form
        ? compose(verb_state,
                  tensor_product(tensor_product(id_w, id_s, cap), inner_test, cap), cap)
        : compose(verb_state,
                  tensor_product(tensor_product(inner_test, id_s, cap), id_w, cap), cap);
    // sigma : I -> W*S or I -> S*W; either way the packed point is the mask.
    Mask bits = 0;
    for (const auto& [x, y] : sigma.graph()) bits |= Mask(y);
    return Subset(u, bits);
}

struct CatPieces {
    RelMorphism k1, k2; // conservativized det-noun states
};

CatPieces build_states(const Model& m, const GeneralizedQuantifier& q1,
                       const GeneralizedQuantifier& q2, const Subset& n1,
                       const Subset& n2, const EvalCaps& caps, DetCache* cache,
                       DetCache& local) {
    DetCache& c = cache ? *cache : local;
    const Universe& u = *m.universe;
    const RelMorphism& cons1 =
        c.conservativized(q1, u, caps.categorical_size, caps.morphism);
    const RelMorphism& cons2 =
        c.conservativized(q2, u, caps.categorical_size, caps.morphism);
    return {conservativized_state(cons1, n1, caps.morphism),
            conservativized_state(cons2, n2, caps.morphism)};
}

} // namespace

const RelMorphism& DetCache::conservativized(const GeneralizedQuantifier& q,
                                             const Universe& u, std::size_t size_cap,
                                             std::size_t morphism_cap) {
    auto it = rel_.find(q.name());
    if (it == rel_.end()) {
        require_size(u, size_cap, "categorical");
        RelMorphism cons = conservativize(determiner_table(q, u, morphism_cap),
                                          morphism_cap);
        it = rel_.emplace(q.name(), std::move(cons)).first;
    }
    return it->second;
}

const LinMap& DetCache::conservativized_matrix(const GeneralizedQuantifier& q,
                                               const Universe& u, std::size_t size_cap,
                                               std::size_t morphism_cap) {
    auto it = lin_.find(q.name());
    if (it == lin_.end()) {
        require_size(u, size_cap, "vector");
        LinMap cons = lin_conservativize(
            embed(determiner_table(q, u, morphism_cap), morphism_cap), morphism_cap);
        it = lin_.emplace(q.name(), std::move(cons)).first;
    }
    return it->second;
}

// ---- categorical backend ------------------------------------------------------

LinearDetail categorical_truth_detail(const Model& m, const SentenceAst& ast, Reading r,
                                      const EvalCaps& caps, DetCache* cache) {
    const Universe& u = *m.universe;
    require_size(u, caps.categorical_size, "categorical");
    if (r == Reading::Branching) {
        throw ShapeMismatchError("categorical_truth evaluates linear readings; "
                                 "use branching_diagram for branching");
    }
    DetCache local;
    const RelMorphism cup = cup_w(u, caps.morphism);
    const RelMorphism mu = intersect_w(u, caps.morphism);

    if (const auto* in = std::get_if<IntransitiveAst>(&ast)) {
        const auto& d = m.determiner(in->d);
        const Subset& n = m.noun(in->n);
        const Subset& vp = m.vp(in->vp);
        DetCache& c = cache ? *cache : local;
        const RelMorphism& cons =
            c.conservativized(d, u, caps.categorical_size, caps.morphism);
        const RelMorphism k = conservativized_state(cons, n, caps.morphism);
        RelMorphism scope =
            compose(tensor_product(subset_state(n), subset_state(vp), caps.morphism), mu,
                    caps.morphism);
        RelMorphism sentence =
            compose(tensor_product(k, scope, caps.morphism), cup, caps.morphism);
        return {sentence.relates_unit(), intersect(n, vp)};
    }

    const auto& t = std::get<TransitiveAst>(ast);
    const auto& q1 = m.determiner(t.d1);
    const auto& q2 = m.determiner(t.d2);
    const Subset& n1 = m.noun(t.n1);
    const Subset& n2 = m.noun(t.n2);
    const BinRel& v = m.verb(t.v);
    const CatPieces p = build_states(m, q1, q2, n1, n2, caps, cache, local);

    const bool subject_wide = (r == Reading::SubjectWide);
    // Wide-scope side keeps its det-noun state for the final comparison; the
    // narrow-scope side is folded into the per-entity fiber test.
    const RelMorphism& outer_k = subject_wide ? p.k1 : p.k2;
    const RelMorphism& inner_k = subject_wide ? p.k2 : p.k1;
    const Subset& outer_n = subject_wide ? n1 : n2;
    const Subset& inner_n = subject_wide ? n2 : n1;

    const RelMorphism inner = membership_test(inner_k, inner_n, caps.morphism);
    const RelMorphism vs = verb_fiber_state(v, subject_wide, caps.morphism);
    const Subset passing = comprehend(vs, inner, subject_wide, caps.morphism);

    // The restriction of the comprehension to the outer noun happens by the
    // monoid map up front, then the cup compares against the det-noun state.
    RelMorphism scope = compose(
        tensor_product(subset_state(outer_n), subset_state(passing), caps.morphism), mu,
        caps.morphism);
    RelMorphism sentence =
        compose(tensor_product(outer_k, scope, caps.morphism), cup, caps.morphism);
    return {sentence.relates_unit(), intersect(outer_n, passing)};
}

bool categorical_truth(const Model& m, const SentenceAst& ast, Reading r,
                       const EvalCaps& caps, DetCache* cache) {
    return categorical_truth_detail(m, ast, r, caps, cache).truth;
}

// ---- vector backend -----------------------------------------------------------

namespace {

std::int64_t k_count(const LinMap& cons_mat, const Subset& noun, Mask scope) {
    // Row ``scope`` of the transposed composite at the noun column.
    return cons_mat.value_at(Point(noun.bits()), Point(scope));
}

} // namespace

std::int64_t vector_truth(const Model& m, const SentenceAst& ast, Reading r,
                          const EvalCaps& caps, DetCache* cache) {
    const Universe& u = *m.universe;
    require_size(u, caps.vector_size, "vector");
    DetCache local;
    DetCache& c = cache ? *cache : local;

    if (const auto* in = std::get_if<IntransitiveAst>(&ast)) {
        const LinMap& cons = c.conservativized_matrix(m.determiner(in->d), u,
                                                      caps.vector_size, caps.morphism);
        const Subset& n = m.noun(in->n);
        return k_count(cons, n, intersect(n, m.vp(in->vp)).bits());
    }

    const auto& t = std::get<TransitiveAst>(ast);
    if (r == Reading::Branching) return branching_vector(m, t, caps, cache);

    const auto& q1 = m.determiner(t.d1);
    const auto& q2 = m.determiner(t.d2);
    const Subset& n1 = m.noun(t.n1);
    const Subset& n2 = m.noun(t.n2);
    const BinRel& v = m.verb(t.v);
    const LinMap& cons1 =
        c.conservativized_matrix(q1, u, caps.vector_size, caps.morphism);
    const LinMap& cons2 =
        c.conservativized_matrix(q2, u, caps.vector_size, caps.morphism);

    const bool subject_wide = (r == Reading::SubjectWide);
    const LinMap& outer_mat = subject_wide ? cons1 : cons2;
    const LinMap& inner_mat = subject_wide ? cons2 : cons1;
    const Subset& outer_n = subject_wide ? n1 : n2;
    const Subset& inner_n = subject_wide ? n2 : n1;
    const BinRel fibers = subject_wide ? v : converse(v);

    // Inner witness counts per entity; passing entities form the scope set
    // and their counts multiply (independent subsystems of the composite).
    Mask passing = 0;
    std::int64_t inner_weight = 1;
    for (std::size_t e = 0; e < u.size(); ++e) {
        const std::int64_t c_e =
            k_count(inner_mat, inner_n, intersect(inner_n, fibers.fiber(e)).bits());
        if (c_e > 0) {
            passing |= Mask(1) << e;
            inner_weight *= c_e;
        }
    }
    const Mask scope = outer_n.bits() & passing;
    return k_count(outer_mat, outer_n, scope) * inner_weight;
}

// ---- branching ----------------------------------------------------------------

namespace {

bool branching_upward(const Model& m, const TransitiveAst& ast, const EvalCaps& caps) {
    const Universe& u = *m.universe;
    const auto& q1 = m.determiner(ast.d1);
    const auto& q2 = m.determiner(ast.d2);
    const Monotonicity m1 = monotonicity(q1, u, caps.branching_size);
    const Monotonicity m2 = monotonicity(q2, u, caps.branching_size);
    auto can_up = [](Monotonicity mo) {
        return mo == Monotonicity::Upward || mo == Monotonicity::Both;
    };
    auto can_down = [](Monotonicity mo) {
        return mo == Monotonicity::Downward || mo == Monotonicity::Both;
    };
    if (can_up(m1) && can_up(m2)) return true;
    if (can_down(m1) && can_down(m2)) return false;
    throw MixedMonotonicityError(
        "branching needs two upward or two downward monotone determiners; '" +
        q1.name() + "' is " + monotonicity_name(m1) + ", '" + q2.name() + "' is " +
        monotonicity_name(m2));
}

// X x Y against v: containment one way or the other, by rows.
bool coupling_holds(const BinRel& v, Mask x, Mask y, bool upward) {
    const Universe& u = v.universe();
    for (std::size_t a = 0; a < u.size(); ++a) {
        const Mask row = v.fiber(a).bits();
        if (upward) {
            if ((x >> a & 1u) && (y & ~row) != 0) return false; // Y must sit inside row
        } else {
            if (x >> a & 1u) {
                if ((row & ~y) != 0) return false; // row must sit inside Y
            } else {
                if (row != 0) return false; // pairs outside X are not covered
            }
        }
    }
    return true;
}

} // namespace

BranchingResult branching_barwise(const Model& m, const TransitiveAst& ast,
                                  const EvalCaps& caps) {
    const Universe& u = *m.universe;
    require_size(u, caps.branching_size, "branching");
    const bool upward = branching_upward(m, ast, caps);
    const auto& q1 = m.determiner(ast.d1);
    const auto& q2 = m.determiner(ast.d2);
    const Subset& n1 = m.noun(ast.n1);
    const Subset& n2 = m.noun(ast.n2);
    const BinRel& v = m.verb(ast.v);

    // Ascending submask enumeration gives the deterministic first witness.
    for (Mask x = 0;; x = (x - n1.bits()) & n1.bits()) {
        if (q1.holds(n1, Subset(u, x))) {
            for (Mask y = 0;; y = (y - n2.bits()) & n2.bits()) {
                if (q2.holds(n2, Subset(u, y)) && coupling_holds(v, x, y, upward)) {
                    return {true, upward,
                            std::make_pair(Subset(u, x), Subset(u, y))};
                }
                if (y == n2.bits()) break;
            }
        }
        if (x == n1.bits()) break;
    }
    return {false, upward, std::nullopt};
}

bool branching_diagram(const Model& m, const TransitiveAst& ast, const EvalCaps& caps,
                       DetCache* cache) {
    const Universe& u = *m.universe;
    require_size(u, caps.branching_size, "branching");
    require_size(u, caps.categorical_size, "categorical");
    const bool upward = branching_upward(m, ast, caps);
    DetCache local;
    const CatPieces p =
        build_states(m, m.determiner(ast.d1), m.determiner(ast.d2), m.noun(ast.n1),
                     m.noun(ast.n2), caps, cache, local);

    const BinRel& v = m.verb(ast.v);
    const std::uint64_t w = u.powerset_size();
    std::vector<std::pair<Point, Point>> graph;
    for (Mask x = 0; x < Mask(w); ++x) {
        for (Mask y = 0; y < Mask(w); ++y) {
            if (coupling_holds(v, x, y, upward)) {
                graph.emplace_back(0, Point(x) * w + Point(y));
            }
        }
    }
    const RelMorphism vs(u, ObjectType::unit(), verb_state_type(), std::move(graph),
                         caps.morphism);

    const RelMorphism legs =
        tensor_product(tensor_product(p.k1, vs, caps.morphism), p.k2, caps.morphism);
    const RelMorphism sentence = apply_factors(
        legs,
        {cup_w(u, caps.morphism), identity(u, ObjectType::s(), caps.morphism),
         cup_w(u, caps.morphism)},
        caps.morphism);
    return !sentence.graph().empty();
}

std::int64_t branching_vector(const Model& m, const TransitiveAst& ast,
                              const EvalCaps& caps, DetCache* cache) {
    const Universe& u = *m.universe;
    require_size(u, caps.vector_size, "vector");
    const bool upward = branching_upward(m, ast, caps);
    DetCache local;
    DetCache& c = cache ? *cache : local;
    const LinMap& cons1 = c.conservativized_matrix(m.determiner(ast.d1), u,
                                                   caps.vector_size, caps.morphism);
    const LinMap& cons2 = c.conservativized_matrix(m.determiner(ast.d2), u,
                                                   caps.vector_size, caps.morphism);
    const Subset& n1 = m.noun(ast.n1);
    const Subset& n2 = m.noun(ast.n2);
    const BinRel& v = m.verb(ast.v);

    // Contraction of the embedded diagram: both cups are basis deltas, so the
    // scalar is the coupling-weighted product of the two det-noun columns.
    std::int64_t total = 0;
    const std::uint64_t w = u.powerset_size();
    for (Mask x = 0; x < Mask(w); ++x) {
        const std::int64_t cx = k_count(cons1, n1, x);
        if (cx == 0) continue;
        for (Mask y = 0; y < Mask(w); ++y) {
            if (!coupling_holds(v, x, y, upward)) continue;
            total += cx * k_count(cons2, n2, y);
        }
    }
    return total;
}

// ---- aggregation ----------------------------------------------------------------

EvalReport evaluate(const Model& m, const std::string& text,
                    std::vector<Reading> readings, std::vector<Backend> backends,
                    const EvalCaps& caps, DetCache* cache) {
    const SentenceAst ast = parse(tokenize(text), m.lexicon);
    EvalReport report;
    report.ast = ast;

    auto wanted = [](auto& items, auto value) {
        return std::find(items.begin(), items.end(), value) != items.end();
    };
    const Reading all_readings[] = {Reading::SubjectWide, Reading::ObjectWide,
                                    Reading::Branching};
    const Backend all_backends[] = {Backend::Oracle, Backend::Categorical,
                                    Backend::Vector};

    DetCache local;
    DetCache& shared = cache ? *cache : local;

    for (Reading r : all_readings) {
        if (!wanted(readings, r)) continue;
        for (Backend b : all_backends) {
            if (!wanted(backends, b)) continue;
            CaseResult res;
            if (r == Reading::Branching) {
                const auto* t = std::get_if<TransitiveAst>(&ast);
                if (!t) {
                    throw ShapeMismatchError(
                        "branching applies to transitive sentences only");
                }
                switch (b) {
                    case Backend::Oracle: {
                        const BranchingResult br = branching_barwise(m, *t, caps);
                        res.truth = br.truth;
                        if (br.witness) {
                            Witness wit;
                            wit.branching_pair = br.witness;
                            res.witness = wit;
                        }
                        break;
                    }
                    case Backend::Categorical:
                        res.truth = branching_diagram(m, *t, caps, &shared);
                        break;
                    case Backend::Vector: {
                        const std::int64_t s = branching_vector(m, *t, caps, &shared);
                        res.truth = s > 0;
                        res.scalar = s;
                        break;
                    }
                }
            } else {
                switch (b) {
                    case Backend::Oracle: {
                        if (const auto* t = std::get_if<TransitiveAst>(&ast)) {
                            const LinearDetail d = oracle_reading_detail(m, *t, r);
                            res.truth = d.truth;
                            Witness wit;
                            wit.scope_set = d.scope_set;
                            res.witness = wit;
                        } else {
                            res.truth =
                                oracle_intransitive(m, std::get<IntransitiveAst>(ast));
                        }
                        break;
                    }
                    case Backend::Categorical: {
                        const LinearDetail d =
                            categorical_truth_detail(m, ast, r, caps, &shared);
                        res.truth = d.truth;
                        Witness wit;
                        wit.scope_set = d.scope_set;
                        res.witness = wit;
                        break;
                    }
                    case Backend::Vector: {
                        const std::int64_t s = vector_truth(m, ast, r, caps, &shared);
                        res.truth = s > 0;
                        res.scalar = s;
                        break;
                    }
                }
            }
            report.results.emplace_back(r, b, res);
        }
    }

    for (Reading r : all_readings) {
        const CaseResult* first = nullptr;
        Backend first_backend = Backend::Oracle;
        for (Backend b : all_backends) {
            const CaseResult* res = report.find(r, b);
            if (!res) continue;
            if (!first) {
                first = res;
                first_backend = b;
            } else if (res->truth != first->truth) {
                report.notes.push_back(std::string("DISAGREEMENT: ") + reading_name(r) +
                                       ": " + backend_name(first_backend) + "=" +
                                       (first->truth ? "true" : "false") + " but " +
                                       backend_name(b) + "=" +
                                       (res->truth ? "true" : "false"));
            }
        }
    }
    return report;
}

} // namespace gqsem
