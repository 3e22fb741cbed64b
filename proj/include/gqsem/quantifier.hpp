#pragma once

// Generalised quantifiers as relations over the powerset of a universe:
// builtin families, explicit pair tables, and the conservativity and
// monotonicity checkers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gqsem/universe.hpp"

namespace gqsem {

inline constexpr std::size_t kDefaultTableCap = 6;

enum class BuiltinKind {
    Some,
    All,
    No,
    AtLeast, // k
    AtMost,  // k
    Exactly, // k
    Most,    // strict majority: |a ∩ x| > |a \ x|
    Few,     // |a ∩ x| < ceil(|a| / 3)
};

const char* builtin_kind_name(BuiltinKind kind);
std::optional<BuiltinKind> builtin_kind_from_name(const std::string& name);
bool builtin_kind_takes_k(BuiltinKind kind);

enum class Monotonicity { Upward, Downward, Both, Neither };
const char* monotonicity_name(Monotonicity m);

class GeneralizedQuantifier {
public:
    static GeneralizedQuantifier builtin(std::string name, BuiltinKind kind,
                                         std::uint32_t k = 0);
    // Pairs must all be bound to one universe.
    static GeneralizedQuantifier table(std::string name,
                                       std::vector<std::pair<Subset, Subset>> pairs);

    const std::string& name() const { return name_; }
    bool is_table() const { return is_table_; }
    BuiltinKind kind() const { return kind_; }
    std::uint32_t parameter() const { return k_; }
    const std::vector<std::pair<Subset, Subset>>& table_pairs() const { return pairs_; }

    // True when the quantifier relates restrictor a to scope x.
    bool holds(const Subset& a, const Subset& x) const;

private:
    GeneralizedQuantifier() = default;

    std::string name_;
    bool is_table_ = false;
    BuiltinKind kind_ = BuiltinKind::Some;
    std::uint32_t k_ = 0;
    std::vector<std::pair<Subset, Subset>> pairs_; // sorted by (a.bits, x.bits)
};

// Every pair (a, x) with q.holds(a, x), ascending by (a.bits, x.bits).
std::vector<std::pair<Subset, Subset>> as_table(const GeneralizedQuantifier& q,
                                                const Universe& u,
                                                std::size_t cap = kDefaultTableCap);

// Exhaustive check of a q x  iff  a q (x ∩ a) over all subset pairs.
bool is_conservative(const GeneralizedQuantifier& q, const Universe& u,
                     std::size_t cap = kDefaultTableCap);

// Monotonicity in the scope (second) argument, checked exhaustively.
Monotonicity monotonicity(const GeneralizedQuantifier& q, const Universe& u,
                          std::size_t cap = kDefaultTableCap);

} // namespace gqsem
