#include "gqsem/quantifier.hpp"

#include <algorithm>
#include <bit>

namespace gqsem {

const char* builtin_kind_name(BuiltinKind kind) {
    switch (kind) {
        case BuiltinKind::Some: return "some";
        case BuiltinKind::All: return "all";
        case BuiltinKind::No: return "no";
        case BuiltinKind::AtLeast: return "at_least";
        case BuiltinKind::AtMost: return "at_most";
        case BuiltinKind::Exactly: return "exactly";
        case BuiltinKind::Most: return "most";
        case BuiltinKind::Few: return "few";
    }
    return "?";
}

std::optional<BuiltinKind> builtin_kind_from_name(const std::string& name) {
    if (name == "some") return BuiltinKind::Some;
    if (name == "all") return BuiltinKind::All;
    if (name == "no") return BuiltinKind::No;
    if (name == "at_least") return BuiltinKind::AtLeast;
    if (name == "at_most") return BuiltinKind::AtMost;
    if (name == "exactly") return BuiltinKind::Exactly;
    if (name == "most") return BuiltinKind::Most;
    if (name == "few") return BuiltinKind::Few;
    return std::nullopt;
}

bool builtin_kind_takes_k(BuiltinKind kind) {
    return kind == BuiltinKind::AtLeast || kind == BuiltinKind::AtMost ||
           kind == BuiltinKind::Exactly;
}

const char* monotonicity_name(Monotonicity m) {
    switch (m) {
        case Monotonicity::Upward: return "upward";
        case Monotonicity::Downward: return "downward";
        case Monotonicity::Both: return "both";
        case Monotonicity::Neither: return "neither";
    }
    return "?";
}

GeneralizedQuantifier GeneralizedQuantifier::builtin(std::string name, BuiltinKind kind,
                                                     std::uint32_t k) {
    GeneralizedQuantifier q;
    q.name_ = std::move(name);
    q.is_table_ = false;
    q.kind_ = kind;
    q.k_ = k;
    return q;
}

GeneralizedQuantifier GeneralizedQuantifier::table(
    std::string name, std::vector<std::pair<Subset, Subset>> pairs) {
    for (const auto& [a, x] : pairs) {
        detail::require_same_universe(&a.universe(), &x.universe(), "quantifier table");
        detail::require_same_universe(&a.universe(), &pairs.front().first.universe(),
                                      "quantifier table");
    }
    std::sort(pairs.begin(), pairs.end(), [](const auto& p, const auto& q) {
        return std::make_pair(p.first.bits(), p.second.bits()) <
               std::make_pair(q.first.bits(), q.second.bits());
    });
    pairs.erase(std::unique(pairs.begin(), pairs.end(),
                            [](const auto& p, const auto& q) {
                                return p.first == q.first && p.second == q.second;
                            }),
                pairs.end());
    GeneralizedQuantifier q;
    q.name_ = std::move(name);
    q.is_table_ = true;
    q.pairs_ = std::move(pairs);
    return q;
}

bool GeneralizedQuantifier::holds(const Subset& a, const Subset& x) const {
    detail::require_same_universe(&a.universe(), &x.universe(), "holds");
    if (is_table_) {
        if (!pairs_.empty()) {
            detail::require_same_universe(&pairs_.front().first.universe(),
                                          &a.universe(), "holds");
        }
        return std::any_of(pairs_.begin(), pairs_.end(), [&](const auto& p) {
            return p.first == a && p.second == x;
        });
    }
    const auto inter = std::size_t(std::popcount(a.bits() & x.bits()));
    const auto rest = std::size_t(std::popcount(a.bits() & ~x.bits()));
    switch (kind_) {
        case BuiltinKind::Some: return inter != 0;
        case BuiltinKind::All: return rest == 0;
        case BuiltinKind::No: return inter == 0;
        case BuiltinKind::AtLeast: return inter >= k_;
        case BuiltinKind::AtMost: return inter <= k_;
        case BuiltinKind::Exactly: return inter == k_;
        case BuiltinKind::Most: return inter > rest;
        case BuiltinKind::Few: return inter < (a.count() + 2) / 3;
    }
    return false;
}

std::vector<std::pair<Subset, Subset>> as_table(const GeneralizedQuantifier& q,
                                                const Universe& u, std::size_t cap) {
    const auto subsets = enumerate_powerset(u, cap);
    std::vector<std::pair<Subset, Subset>> out;
    for (const auto& a : subsets) {
        for (const auto& x : subsets) {
            if (q.holds(a, x)) out.emplace_back(a, x);
        }
    }
    return out;
}

bool is_conservative(const GeneralizedQuantifier& q, const Universe& u,
                     std::size_t cap) {
    const auto subsets = enumerate_powerset(u, cap);
    for (const auto& a : subsets) {
        for (const auto& x : subsets) {
            if (q.holds(a, x) != q.holds(a, intersect(x, a))) return false;
        }
    }
    return true;
}

Monotonicity monotonicity(const GeneralizedQuantifier& q, const Universe& u,
                          std::size_t cap) {
    const auto subsets = enumerate_powerset(u, cap);
    bool up = true;
    bool down = true;
    for (const auto& a : subsets) {
        for (const auto& x : subsets) {
            if (!q.holds(a, x)) continue;
            // Supersets x' = x | extra, extra ranging over subsets of ~x.
            const Mask rest = u.full_mask() & ~x.bits();
            for (Mask extra = rest;; extra = (extra - 1) & rest) {
                if (extra != 0 && !q.holds(a, Subset(u, x.bits() | extra))) {
                    up = false;
                }
                if (extra == 0) break;
            }
            // Subsets of x.
            for (Mask sub = x.bits();; sub = (sub - 1) & x.bits()) {
                if (sub != x.bits() && !q.holds(a, Subset(u, sub))) down = false;
                if (sub == 0) break;
            }
            if (!up && !down) return Monotonicity::Neither;
        }
    }
    if (up && down) return Monotonicity::Both;
    if (up) return Monotonicity::Upward;
    if (down) return Monotonicity::Downward;
    return Monotonicity::Neither;
}

} // namespace gqsem
