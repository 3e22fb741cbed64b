#pragma once

// The relational instantiation of the categorical semantics: typed objects
// over the atoms W (the powerset of the session universe) and S (the
// singleton sentence object), morphisms as materialized sparse graphs, the
// structural generators, a generic composer, law checkers, and the
// conservativization composite for determiners.

#include <cstdint>
#include <string>
#include <vector>

#include "gqsem/universe.hpp"

namespace gqsem {

inline constexpr std::size_t kDefaultMorphismCap = std::size_t(1) << 20;
inline constexpr std::size_t kDefaultLawCheckCap = 4;

enum class Atom : std::uint8_t { W, S };

// A formal tensor product of atoms; the empty list is the monoidal unit I.
struct ObjectType {
    std::vector<Atom> atoms;

    static ObjectType unit() { return {}; }
    static ObjectType w(std::size_t count = 1);
    static ObjectType s();

    std::size_t arity() const { return atoms.size(); }
    bool is_unit() const { return atoms.empty(); }
    std::string to_string() const; // "I", "W", "W*S*W", ...

    friend bool operator==(const ObjectType& a, const ObjectType& b) {
        return a.atoms == b.atoms;
    }
};

ObjectType tensor_type(const ObjectType& a, const ObjectType& b);

// A point of an interpreted object, packed as one mixed-radix index:
// W slots range over bitmasks (radix 2^|U|), S slots are the single token
// (radix 1, contributing nothing). Slot 0 is the most significant digit, so
// ascending packed values enumerate slot tuples lexicographically.
using Point = std::uint64_t;

class PointCodec {
public:
    PointCodec(const ObjectType& type, std::size_t universe_size);

    std::uint64_t total() const { return total_; }
    std::size_t arity() const { return dims_.size(); }
    std::uint64_t slot(Point p, std::size_t i) const { return (p / strides_[i]) % dims_[i]; }
    std::uint64_t slot_dim(std::size_t i) const { return dims_[i]; }

private:
    std::vector<std::uint64_t> dims_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t total_;
};

std::uint64_t type_dimension(const ObjectType& type, std::size_t universe_size);

// A relation between interpreted objects, materialized as a sorted list of
// (domain point, codomain point) pairs. Construction beyond the pair cap
// fails loudly rather than degrade.
class RelMorphism {
public:
    RelMorphism(const Universe& u, ObjectType dom, ObjectType cod,
                std::vector<std::pair<Point, Point>> graph,
                std::size_t cap = kDefaultMorphismCap);

    const Universe& universe() const { return *uni_; }
    const ObjectType& dom() const { return dom_; }
    const ObjectType& cod() const { return cod_; }
    const std::vector<std::pair<Point, Point>>& graph() const { return graph_; }

    bool relates(Point x, Point y) const;
    // For endpoints typed I -> I: whether the unit point relates to itself.
    bool relates_unit() const { return !graph_.empty(); }

    friend bool operator==(const RelMorphism& a, const RelMorphism& b) {
        return a.uni_ == b.uni_ && a.dom_ == b.dom_ && a.cod_ == b.cod_ &&
               a.graph_ == b.graph_;
    }

private:
    const Universe* uni_;
    ObjectType dom_, cod_;
    std::vector<std::pair<Point, Point>> graph_;
};

// ---- generators -----------------------------------------------------------

RelMorphism identity(const Universe& u, const ObjectType& t,
                     std::size_t cap = kDefaultMorphismCap);

// Cup (evaluation) W⊗W -> I: relates (A, A) to the unit for every subset A.
RelMorphism cup_w(const Universe& u, std::size_t cap = kDefaultMorphismCap);
// Cap (coevaluation) I -> W⊗W, the converse of the cup.
RelMorphism cap_w(const Universe& u, std::size_t cap = kDefaultMorphismCap);
// Comonoid: copy W -> W⊗W and discard W -> I.
RelMorphism copy_w(const Universe& u, std::size_t cap = kDefaultMorphismCap);
RelMorphism discard_w(const Universe& u, std::size_t cap = kDefaultMorphismCap);
// Monoid: binary intersection W⊗W -> W and its unit I -> W (the full set).
RelMorphism intersect_w(const Universe& u, std::size_t cap = kDefaultMorphismCap);
RelMorphism top_w(const Universe& u, std::size_t cap = kDefaultMorphismCap);
// Symmetry on W⊗W (slot swap).
RelMorphism swap_ww(const Universe& u, std::size_t cap = kDefaultMorphismCap);

// State I -> W selecting one subset.
RelMorphism subset_state(const Subset& s);
// State I -> W whose graph is a set of subsets.
RelMorphism subsets_state(const Universe& u, const std::vector<Subset>& members,
                          std::size_t cap = kDefaultMorphismCap);

// A determiner table as a morphism W -> W; pairs are (restrictor, scope).
RelMorphism morphism_from_subset_pairs(const Universe& u,
                                       const std::vector<std::pair<Subset, Subset>>& pairs,
                                       std::size_t cap = kDefaultMorphismCap);

// ---- combinators ----------------------------------------------------------

// Apply f, then g (diagrammatic order); f.cod must equal g.dom.
RelMorphism compose(const RelMorphism& f, const RelMorphism& g,
                    std::size_t cap = kDefaultMorphismCap);

RelMorphism tensor_product(const RelMorphism& f, const RelMorphism& g,
                           std::size_t cap = kDefaultMorphismCap);

// compose(m, tensor_product(factors...)) computed factor-wise, without
// materializing the stage tensor. The stage tensors of the determiner
// composite reach 2^{6|U|}-point objects; their graphs would dwarf the cap
// even though the running composite stays small.
RelMorphism apply_factors(const RelMorphism& m,
                          const std::vector<RelMorphism>& factors,
                          std::size_t cap = kDefaultMorphismCap);

// Graph converse with dom and cod exchanged.
RelMorphism transpose(const RelMorphism& f);

// ---- law checks -----------------------------------------------------------

struct BialgebraLawReport {
    bool counit_mult = false;  // discard ∘ intersect  =  discard ⊗ discard
    bool comult_unit = false;  // copy ∘ top  =  top ⊗ top
    bool interchange = false;  // copy ∘ intersect  =  (⊗ of intersects) ∘ mid swap ∘ (⊗ of copies)
    bool unit_counit = false;  // discard ∘ top  =  identity on I
    bool all() const { return counit_mult && comult_unit && interchange && unit_counit; }
};

struct SnakeLawReport {
    bool left = false;  // (1 ⊗ cup) ∘ (cap ⊗ 1)  =  identity on W
    bool right = false; // (cup ⊗ 1) ∘ (1 ⊗ cap)  =  identity on W
    bool all() const { return left && right; }
};

// Evaluate the four bialgebra equations for arbitrary candidate structure
// maps (used both for the standard generators and for probe variants).
BialgebraLawReport check_bialgebra_equations(const RelMorphism& copy,
                                             const RelMorphism& discard,
                                             const RelMorphism& mult,
                                             const RelMorphism& unit_state,
                                             std::size_t cap = kDefaultMorphismCap);

SnakeLawReport check_snake_equations_for(const RelMorphism& cup,
                                         const RelMorphism& cap_morphism,
                                         std::size_t cap = kDefaultMorphismCap);

// The standard instantiation over P(U), capped at the law-check size.
BialgebraLawReport check_bialgebra_laws(const Universe& u,
                                        std::size_t size_cap = kDefaultLawCheckCap,
                                        std::size_t cap = kDefaultMorphismCap);
SnakeLawReport check_snake_equations(const Universe& u,
                                     std::size_t size_cap = kDefaultLawCheckCap,
                                     std::size_t cap = kDefaultMorphismCap);

// ---- determiners ----------------------------------------------------------

// The five-stage conservativization composite over a determiner d : W -> W:
//
//   (1 ⊗ cup) ∘ (1 ⊗ intersect ⊗ cup ⊗ 1) ∘ (1 ⊗ d ⊗ copy ⊗ 1 ⊗ 1)
//                ∘ (1 ⊗ cap ⊗ 1 ⊗ 1) ∘ (cap ⊗ 1)
//
// with stage arities W -> W^3 -> W^5 -> W^6 -> W^3 -> W, built through
// apply_factors so only the running composite is materialized.
RelMorphism conservativize(const RelMorphism& d,
                           std::size_t cap = kDefaultMorphismCap);

// Image of a noun state under a determiner morphism: { X | (n, X) in d }.
std::vector<Subset> det_noun_state(const RelMorphism& d, const Subset& n);

// ---- serialization --------------------------------------------------------

// Canonical text: one "x -> y" line per graph pair, points printed as
// slot tuples with W slots as decimal bitmasks and S slots as '*'.
std::string to_canonical_text(const RelMorphism& f);

} // namespace gqsem
