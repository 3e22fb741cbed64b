#pragma once

// The vector-space instantiation over bases indexed by subsets of the
// universe. Everything is exact integer arithmetic: embedded relations are
// 0/1 matrices and their composites are witness counts, so law checks are
// equality checks, not tolerance checks.

#include <cstdint>
#include <string>
#include <vector>

#include "gqsem/rel_morphism.hpp"
#include "gqsem/universe.hpp"

namespace gqsem {

inline constexpr std::size_t kDefaultVectorCap = 6;     // max |U| for dense work
inline constexpr std::size_t kDefaultVectorLawCap = 3;  // max |U| for law checks

struct LinEntry {
    Point col = 0; // domain basis point
    Point row = 0; // codomain basis point
    std::int64_t value = 0;
};

// A linear map between the spaces spanned by the points of two object
// types, stored sparsely by (column, row). Duplicate coordinates passed to
// the constructor are summed; zero entries are dropped.
class LinMap {
public:
    LinMap(const Universe& u, ObjectType dom, ObjectType cod,
           std::vector<LinEntry> entries, std::size_t cap = kDefaultMorphismCap);

    const Universe& universe() const { return *uni_; }
    const ObjectType& dom() const { return dom_; }
    const ObjectType& cod() const { return cod_; }
    const std::vector<LinEntry>& entries() const { return entries_; }

    std::int64_t value_at(Point row, Point col) const;

    friend bool operator==(const LinMap& a, const LinMap& b) {
        if (a.uni_ != b.uni_ || !(a.dom_ == b.dom_) || !(a.cod_ == b.cod_)) return false;
        if (a.entries_.size() != b.entries_.size()) return false;
        for (std::size_t i = 0; i < a.entries_.size(); ++i) {
            const auto& p = a.entries_[i];
            const auto& q = b.entries_[i];
            if (p.col != q.col || p.row != q.row || p.value != q.value) return false;
        }
        return true;
    }

private:
    const Universe* uni_;
    ObjectType dom_, cod_;
    std::vector<LinEntry> entries_; // sorted by (col, row), values nonzero
};

// 0/1 matrix of a relational morphism: entry (row y, column x) is 1 exactly
// when the relation has the pair (x, y).
LinMap embed(const RelMorphism& f, std::size_t cap = kDefaultMorphismCap);

LinMap lin_identity(const Universe& u, const ObjectType& t,
                    std::size_t cap = kDefaultMorphismCap);

// Structural maps built directly from their basis-vector definitions (the
// inner-product cup, the diagonal cap, copy, the all-ones discard row, the
// intersection product, and the full-set unit column). These are constructed
// independently of embed() and tested against it.
LinMap lin_cup_w(const Universe& u, std::size_t cap = kDefaultMorphismCap);
LinMap lin_cap_w(const Universe& u, std::size_t cap = kDefaultMorphismCap);
LinMap lin_copy_w(const Universe& u, std::size_t cap = kDefaultMorphismCap);
LinMap lin_discard_w(const Universe& u, std::size_t cap = kDefaultMorphismCap);
LinMap lin_intersect_w(const Universe& u, std::size_t cap = kDefaultMorphismCap);
LinMap lin_top_w(const Universe& u, std::size_t cap = kDefaultMorphismCap);
LinMap lin_swap_ww(const Universe& u, std::size_t cap = kDefaultMorphismCap);

// Apply f, then g: the matrix product of g with f.
LinMap lin_compose(const LinMap& f, const LinMap& g,
                   std::size_t cap = kDefaultMorphismCap);
LinMap lin_tensor(const LinMap& f, const LinMap& g,
                  std::size_t cap = kDefaultMorphismCap);
LinMap lin_transpose(const LinMap& f);

// Factor-wise compose(m, tensor(factors...)), the matrix mirror of
// apply_factors; path multiplicities multiply along factors and sum on
// collisions.
LinMap lin_apply_factors(const LinMap& m, const std::vector<LinMap>& factors,
                         std::size_t cap = kDefaultMorphismCap);

// The five-stage conservativization composite in matrix form. Entry
// (row N, column B) counts the scopes D with (B, D) in d and D ∩ B = N.
LinMap lin_conservativize(const LinMap& d, std::size_t cap = kDefaultMorphismCap);

// The single entry of a map typed I -> I (0 when absent).
std::int64_t scalar_of(const LinMap& f);

// Nonzero pattern as sorted (dom point, cod point) pairs, comparable with a
// relational graph.
std::vector<std::pair<Point, Point>> support(const LinMap& f);

struct VectLawReport {
    BialgebraLawReport bialgebra;
    SnakeLawReport snakes;
    bool all() const { return bialgebra.all() && snakes.all(); }
};

// Exact matrix-equality verification of the bialgebra equations and both
// snake equations in the vector instantiation.
VectLawReport check_vect_laws(const Universe& u,
                              std::size_t size_cap = kDefaultVectorLawCap,
                              std::size_t cap = kDefaultMorphismCap);

// Canonical text: one "row col value" line, sorted by (row, col).
std::string to_canonical_text(const LinMap& f);

} // namespace gqsem
