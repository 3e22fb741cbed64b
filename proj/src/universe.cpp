#include "gqsem/universe.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace gqsem {

Universe::Universe(std::vector<std::string> entities, std::size_t cap)
    : entities_(std::move(entities)) {
    if (entities_.size() > cap) {
        throw CapExceededError("universe has " + std::to_string(entities_.size()) +
                               " entities, cap is " + std::to_string(cap));
    }
    std::unordered_set<std::string> seen;
    for (const auto& name : entities_) {
        if (name.empty()) {
            throw ModelValidationError("entity names must be nonempty");
        }
        if (!seen.insert(name).second) {
            throw ModelValidationError("duplicate entity name '" + name + "'");
        }
    }
}

const std::string& Universe::entity_name(std::size_t i) const {
    if (i >= entities_.size()) {
        throw UnknownNameError("entity index " + std::to_string(i) + " out of range");
    }
    return entities_[i];
}

std::size_t Universe::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < entities_.size(); ++i) {
        if (entities_[i] == name) return i;
    }
    throw UnknownNameError("entity '" + name + "' not in universe");
}

bool Universe::has_entity(const std::string& name) const {
    return std::find(entities_.begin(), entities_.end(), name) != entities_.end();
}

namespace detail {
void require_same_universe(const Universe* a, const Universe* b, const char* op) {
    if (a != b) {
        throw UniverseMismatchError(std::string(op) + ": operands bound to different universes");
    }
}
} // namespace detail

Subset::Subset(const Universe& u, Mask bits) : uni_(&u), bits_(bits) {
    if (bits & ~u.full_mask()) {
        throw ModelValidationError("subset bitmask has bits outside the universe");
    }
}

Subset Subset::singleton(const Universe& u, std::size_t index) {
    if (index >= u.size()) {
        throw UnknownNameError("entity index " + std::to_string(index) + " out of range");
    }
    return Subset(u, Mask(1) << index);
}

Subset Subset::of_names(const Universe& u, const std::vector<std::string>& names) {
    Mask bits = 0;
    for (const auto& n : names) bits |= Mask(1) << u.index_of(n);
    return Subset(u, bits);
}

std::size_t Subset::count() const { return std::size_t(std::popcount(bits_)); }

std::vector<std::string> Subset::names() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < uni_->size(); ++i) {
        if (contains(i)) out.push_back(uni_->entity_name(i));
    }
    return out;
}

std::string Subset::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& n : names()) {
        if (!first) out += ",";
        out += n;
        first = false;
    }
    return out + "}";
}

Subset intersect(const Subset& a, const Subset& b) {
    detail::require_same_universe(&a.universe(), &b.universe(), "intersect");
    return Subset(a.universe(), a.bits() & b.bits());
}

Subset unite(const Subset& a, const Subset& b) {
    detail::require_same_universe(&a.universe(), &b.universe(), "unite");
    return Subset(a.universe(), a.bits() | b.bits());
}

Subset difference(const Subset& a, const Subset& b) {
    detail::require_same_universe(&a.universe(), &b.universe(), "difference");
    return Subset(a.universe(), a.bits() & ~b.bits());
}

bool is_subset_of(const Subset& a, const Subset& b) {
    detail::require_same_universe(&a.universe(), &b.universe(), "is_subset_of");
    return (a.bits() & ~b.bits()) == 0;
}

std::vector<Subset> enumerate_powerset(const Universe& u, std::size_t cap) {
    if (u.size() > cap) {
        throw CapExceededError("powerset enumeration over " + std::to_string(u.size()) +
                               " entities exceeds cap " + std::to_string(cap));
    }
    std::vector<Subset> out;
    out.reserve(u.powerset_size());
    for (Mask m = 0; m < Mask(u.powerset_size()); ++m) {
        out.push_back(Subset(u, m));
    }
    return out;
}

BinRel::BinRel(const Universe& u) : uni_(&u), rows_(u.size(), 0) {}

BinRel::BinRel(const Universe& u,
               const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
    : BinRel(u) {
    for (auto [a, b] : pairs) insert(a, b);
}

bool BinRel::contains(std::size_t subject, std::size_t object) const {
    if (subject >= rows_.size() || object >= uni_->size()) return false;
    return (rows_[subject] >> object) & 1u;
}

void BinRel::insert(std::size_t subject, std::size_t object) {
    if (subject >= uni_->size() || object >= uni_->size()) {
        throw ModelValidationError("relation pair index out of range");
    }
    rows_[subject] |= Mask(1) << object;
}

std::size_t BinRel::pair_count() const {
    std::size_t n = 0;
    for (Mask row : rows_) n += std::size_t(std::popcount(row));
    return n;
}

std::vector<std::pair<std::size_t, std::size_t>> BinRel::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < rows_.size(); ++a) {
        for (std::size_t b = 0; b < uni_->size(); ++b) {
            if ((rows_[a] >> b) & 1u) out.emplace_back(a, b);
        }
    }
    return out;
}

Subset BinRel::fiber(std::size_t subject) const {
    if (subject >= uni_->size()) {
        throw UnknownNameError("fiber: entity index " + std::to_string(subject) +
                               " out of range");
    }
    return Subset(*uni_, rows_[subject]);
}

Subset forward_image(const BinRel& v, const Subset& x) {
    detail::require_same_universe(&v.universe(), &x.universe(), "forward_image");
    Mask out = 0;
    for (std::size_t a = 0; a < v.universe().size(); ++a) {
        if (x.contains(a)) out |= v.rows_[a];
    }
    return Subset(v.universe(), out);
}

BinRel converse(const BinRel& v) {
    BinRel out(v.universe());
    for (std::size_t a = 0; a < v.universe().size(); ++a) {
        for (std::size_t b = 0; b < v.universe().size(); ++b) {
            if ((v.rows_[a] >> b) & 1u) out.insert(b, a);
        }
    }
    return out;
}

} // namespace gqsem
