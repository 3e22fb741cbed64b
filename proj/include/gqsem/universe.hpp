#pragma once

// Ground model data: a named finite universe, subsets of it stored as
// bitmasks, and binary relations stored as per-entity row masks.

#include <cstdint>
#include <string>
#include <vector>

#include "gqsem/errors.hpp"

namespace gqsem {

using Mask = std::uint32_t;

inline constexpr std::size_t kDefaultUniverseCap = 12;

// An ordered list of distinct entity names. Identity matters: subsets and
// relations are bound to the universe object they were created against, and
// mixing values from two universes is an error even if the name lists agree.
// Universes are therefore not copyable; hold them by (shared) pointer.
class Universe {
public:
    explicit Universe(std::vector<std::string> entities,
                      std::size_t cap = kDefaultUniverseCap);

    Universe(const Universe&) = delete;
    Universe& operator=(const Universe&) = delete;

    std::size_t size() const { return entities_.size(); }
    const std::vector<std::string>& entities() const { return entities_; }
    const std::string& entity_name(std::size_t i) const;

    // Index of a named entity; throws UnknownNameError if absent.
    std::size_t index_of(const std::string& name) const;
    bool has_entity(const std::string& name) const;

    Mask full_mask() const { return size() == 0 ? 0u : (Mask(1) << size()) - 1u; }
    std::size_t powerset_size() const { return std::size_t(1) << size(); }

private:
    std::vector<std::string> entities_;
};

// A subset of one universe's entities, one bit per entity index.
class Subset {
public:
    Subset(const Universe& u, Mask bits);

    static Subset empty(const Universe& u) { return Subset(u, 0); }
    static Subset full(const Universe& u) { return Subset(u, u.full_mask()); }
    static Subset singleton(const Universe& u, std::size_t index);
    static Subset of_names(const Universe& u, const std::vector<std::string>& names);

    Mask bits() const { return bits_; }
    const Universe& universe() const { return *uni_; }

    bool contains(std::size_t index) const { return (bits_ >> index) & 1u; }
    std::size_t count() const;
    bool is_empty() const { return bits_ == 0; }

    std::vector<std::string> names() const;
    std::string to_string() const; // "{m1,m2}"

    friend bool operator==(const Subset& a, const Subset& b) {
        return a.uni_ == b.uni_ && a.bits_ == b.bits_;
    }

private:
    const Universe* uni_;
    Mask bits_;
};

Subset intersect(const Subset& a, const Subset& b);
Subset unite(const Subset& a, const Subset& b);
Subset difference(const Subset& a, const Subset& b);
bool is_subset_of(const Subset& a, const Subset& b);

// All subsets of u, ascending by bitmask value. Throws CapExceededError
// when the universe is larger than cap.
std::vector<Subset> enumerate_powerset(const Universe& u,
                                       std::size_t cap = kDefaultUniverseCap);

// A binary relation over one universe, stored as one object-mask row per
// subject index.
class BinRel {
public:
    explicit BinRel(const Universe& u);
    BinRel(const Universe& u, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

    const Universe& universe() const { return *uni_; }

    bool contains(std::size_t subject, std::size_t object) const;
    void insert(std::size_t subject, std::size_t object);

    std::size_t pair_count() const;
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const; // sorted

    // Row of the relation at one subject: { b | (a, b) in v }.
    Subset fiber(std::size_t subject) const;

    friend bool operator==(const BinRel& a, const BinRel& b) {
        return a.uni_ == b.uni_ && a.rows_ == b.rows_;
    }

private:
    friend BinRel converse(const BinRel& v);
    friend Subset forward_image(const BinRel& v, const Subset& x);

    const Universe* uni_;
    std::vector<Mask> rows_;
};

// { b | exists a in x with (a, b) in v }
Subset forward_image(const BinRel& v, const Subset& x);

// (a, b) in result iff (b, a) in v
BinRel converse(const BinRel& v);

namespace detail {
void require_same_universe(const Universe* a, const Universe* b, const char* op);
} // namespace detail

} // namespace gqsem
