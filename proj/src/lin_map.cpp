#include "gqsem/lin_map.hpp"

#include <algorithm>
#include <sstream>

namespace gqsem {

namespace {

bool entry_less(const LinEntry& a, const LinEntry& b) {
    return std::make_pair(a.col, a.row) < std::make_pair(b.col, b.row);
}

std::vector<LinEntry> normalize(std::vector<LinEntry> entries, std::size_t cap,
                                const char* what) {
    std::sort(entries.begin(), entries.end(), entry_less);
    std::vector<LinEntry> out;
    out.reserve(entries.size());
    for (const auto& e : entries) {
        if (!out.empty() && out.back().col == e.col && out.back().row == e.row) {
            out.back().value += e.value;
        } else {
            out.push_back(e);
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const LinEntry& e) { return e.value == 0; }),
              out.end());
    if (out.size() > cap) {
        throw CapExceededError(std::string(what) + ": matrix has " +
                               std::to_string(out.size()) + " entries, cap is " +
                               std::to_string(cap));
    }
    return out;
}

} // namespace

LinMap::LinMap(const Universe& u, ObjectType dom, ObjectType cod,
               std::vector<LinEntry> entries, std::size_t cap)
    : uni_(&u), dom_(std::move(dom)), cod_(std::move(cod)) {
    const PointCodec dc(dom_, u.size());
    const PointCodec cc(cod_, u.size());
    for (const auto& e : entries) {
        if (e.col >= dc.total() || e.row >= cc.total()) {
            throw TypeMismatchError("matrix entry outside " + dom_.to_string() + " -> " +
                                    cod_.to_string());
        }
    }
    entries_ = normalize(std::move(entries), cap, "lin_map");
}

std::int64_t LinMap::value_at(Point row, Point col) const {
    LinEntry probe{col, row, 0};
    auto it = std::lower_bound(entries_.begin(), entries_.end(), probe, entry_less);
    if (it != entries_.end() && it->col == col && it->row == row) return it->value;
    return 0;
}

LinMap embed(const RelMorphism& f, std::size_t cap) {
    std::vector<LinEntry> entries;
    entries.reserve(f.graph().size());
    for (const auto& [x, y] : f.graph()) entries.push_back({x, y, 1});
    return LinMap(f.universe(), f.dom(), f.cod(), std::move(entries), cap);
}

LinMap lin_identity(const Universe& u, const ObjectType& t, std::size_t cap) {
    return embed(identity(u, t, cap), cap);
}

LinMap lin_cup_w(const Universe& u, std::size_t cap) {
    // cup(|A> ⊗ |B>) = <A|B>, the Kronecker delta on the subset basis.
    const std::uint64_t w = u.powerset_size();
    std::vector<LinEntry> entries;
    for (Point a = 0; a < w; ++a) {
        for (Point b = 0; b < w; ++b) {
            if (a == b) entries.push_back({a * w + b, 0, 1});
        }
    }
    return LinMap(u, ObjectType::w(2), ObjectType::unit(), std::move(entries), cap);
}

LinMap lin_cap_w(const Universe& u, std::size_t cap) {
    // cap(1) = sum over the basis of |A> ⊗ |A>.
    const std::uint64_t w = u.powerset_size();
    std::vector<LinEntry> entries;
    for (Point a = 0; a < w; ++a) entries.push_back({0, a * w + a, 1});
    return LinMap(u, ObjectType::unit(), ObjectType::w(2), std::move(entries), cap);
}

LinMap lin_copy_w(const Universe& u, std::size_t cap) {
    // copy|A> = |A> ⊗ |A>
    const std::uint64_t w = u.powerset_size();
    std::vector<LinEntry> entries;
    for (Point a = 0; a < w; ++a) entries.push_back({a, a * w + a, 1});
    return LinMap(u, ObjectType::w(1), ObjectType::w(2), std::move(entries), cap);
}

LinMap lin_discard_w(const Universe& u, std::size_t cap) {
    // discard|A> = 1: the all-ones row.
    const std::uint64_t w = u.powerset_size();
    std::vector<LinEntry> entries;
    for (Point a = 0; a < w; ++a) entries.push_back({a, 0, 1});
    return LinMap(u, ObjectType::w(1), ObjectType::unit(), std::move(entries), cap);
}

LinMap lin_intersect_w(const Universe& u, std::size_t cap) {
    // intersect(|A> ⊗ |B>) = |A ∩ B>
    const std::uint64_t w = u.powerset_size();
    std::vector<LinEntry> entries;
    for (Point a = 0; a < w; ++a) {
        for (Point b = 0; b < w; ++b) entries.push_back({a * w + b, a & b, 1});
    }
    return LinMap(u, ObjectType::w(2), ObjectType::w(1), std::move(entries), cap);
}

LinMap lin_top_w(const Universe& u, std::size_t cap) {
    // The basis column of the full set.
    return LinMap(u, ObjectType::unit(), ObjectType::w(1),
                  {{0, Point(u.full_mask()), 1}}, cap);
}

LinMap lin_swap_ww(const Universe& u, std::size_t cap) {
    const std::uint64_t w = u.powerset_size();
    std::vector<LinEntry> entries;
    for (Point a = 0; a < w; ++a) {
        for (Point b = 0; b < w; ++b) entries.push_back({a * w + b, b * w + a, 1});
    }
    return LinMap(u, ObjectType::w(2), ObjectType::w(2), std::move(entries), cap);
}

LinMap lin_compose(const LinMap& f, const LinMap& g, std::size_t cap) {
    detail::require_same_universe(&f.universe(), &g.universe(), "lin_compose");
    if (!(f.cod() == g.dom())) {
        throw TypeMismatchError("lin_compose: " + f.cod().to_string() +
                                " does not match " + g.dom().to_string());
    }
    const auto& ge = g.entries();
    std::vector<LinEntry> out;
    for (const auto& fe : f.entries()) {
        LinEntry probe{fe.row, 0, 0};
        auto it = std::lower_bound(ge.begin(), ge.end(), probe, entry_less);
        for (; it != ge.end() && it->col == fe.row; ++it) {
            out.push_back({fe.col, it->row, fe.value * it->value});
            if (out.size() > 4 * cap) {
                throw CapExceededError("lin_compose: intermediate exceeded cap");
            }
        }
    }
    return LinMap(f.universe(), f.dom(), g.cod(), std::move(out), cap);
}

LinMap lin_tensor(const LinMap& f, const LinMap& g, std::size_t cap) {
    detail::require_same_universe(&f.universe(), &g.universe(), "lin_tensor");
    const std::size_t n = f.universe().size();
    const std::uint64_t g_dom = type_dimension(g.dom(), n);
    const std::uint64_t g_cod = type_dimension(g.cod(), n);
    std::vector<LinEntry> out;
    out.reserve(f.entries().size() * g.entries().size());
    for (const auto& fe : f.entries()) {
        for (const auto& ge : g.entries()) {
            out.push_back({fe.col * g_dom + ge.col, fe.row * g_cod + ge.row,
                           fe.value * ge.value});
            if (out.size() > 4 * cap) {
                throw CapExceededError("lin_tensor: intermediate exceeded cap");
            }
        }
    }
    return LinMap(f.universe(), tensor_type(f.dom(), g.dom()),
                  tensor_type(f.cod(), g.cod()), std::move(out), cap);
}

LinMap lin_transpose(const LinMap& f) {
    std::vector<LinEntry> out;
    out.reserve(f.entries().size());
    for (const auto& e : f.entries()) out.push_back({e.row, e.col, e.value});
    return LinMap(f.universe(), f.cod(), f.dom(), std::move(out));
}

LinMap lin_apply_factors(const LinMap& m, const std::vector<LinMap>& factors,
                         std::size_t cap) {
    const Universe& u = m.universe();
    const std::size_t n = u.size();

    ObjectType stage_dom = ObjectType::unit();
    ObjectType stage_cod = ObjectType::unit();
    for (const auto& f : factors) {
        detail::require_same_universe(&f.universe(), &u, "lin_apply_factors");
        stage_dom = tensor_type(stage_dom, f.dom());
        stage_cod = tensor_type(stage_cod, f.cod());
    }
    if (!(stage_dom == m.cod())) {
        throw TypeMismatchError("lin_apply_factors: stage expects " +
                                stage_dom.to_string() + ", composite provides " +
                                m.cod().to_string());
    }

    struct Succ {
        Point row;
        std::int64_t value;
    };
    std::vector<std::vector<std::vector<Succ>>> succ(factors.size());
    std::vector<std::uint64_t> dom_dim(factors.size()), cod_dim(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        dom_dim[i] = type_dimension(factors[i].dom(), n);
        cod_dim[i] = type_dimension(factors[i].cod(), n);
        succ[i].resize(dom_dim[i]);
        for (const auto& e : factors[i].entries()) {
            succ[i][e.col].push_back({e.row, e.value});
        }
    }
    std::vector<std::uint64_t> dom_stride(factors.size(), 1);
    std::vector<std::uint64_t> cod_stride(factors.size(), 1);
    for (std::size_t i = factors.size(); i-- > 1;) {
        dom_stride[i - 1] = dom_stride[i] * dom_dim[i];
        cod_stride[i - 1] = cod_stride[i] * cod_dim[i];
    }

    std::vector<LinEntry> out;
    std::vector<const std::vector<Succ>*> lists(factors.size());
    std::vector<std::size_t> pick(factors.size());
    for (const auto& me : m.entries()) {
        bool dead = false;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const std::uint64_t digit = (me.row / dom_stride[i]) % dom_dim[i];
            lists[i] = &succ[i][digit];
            if (lists[i]->empty()) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        if (factors.empty()) {
            out.push_back({me.col, 0, me.value});
            continue;
        }
        std::fill(pick.begin(), pick.end(), 0);
        while (true) {
            Point packed = 0;
            std::int64_t value = me.value;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                const Succ& s = (*lists[i])[pick[i]];
                packed += s.row * cod_stride[i];
                value *= s.value;
            }
            out.push_back({me.col, packed, value});
            if (out.size() > 4 * cap) {
                throw CapExceededError("lin_apply_factors: intermediate exceeded cap");
            }
            std::size_t i = factors.size();
            while (i-- > 0) {
                if (++pick[i] < lists[i]->size()) break;
                pick[i] = 0;
                if (i == 0) goto next_entry;
            }
        }
    next_entry:;
    }
    return LinMap(u, m.dom(), stage_cod, std::move(out), cap);
}

LinMap lin_conservativize(const LinMap& d, std::size_t cap) {
    const Universe& u = d.universe();
    if (!(d.dom() == ObjectType::w(1)) || !(d.cod() == ObjectType::w(1))) {
        throw TypeMismatchError("lin_conservativize expects a determiner typed W -> W");
    }
    const LinMap id_w = lin_identity(u, ObjectType::w(1), cap);
    const LinMap cup = lin_cup_w(u, cap);
    const LinMap cap_m = lin_cap_w(u, cap);

    LinMap m = lin_identity(u, ObjectType::w(1), cap);
    m = lin_apply_factors(m, {cap_m, id_w}, cap);
    m = lin_apply_factors(m, {id_w, cap_m, id_w, id_w}, cap);
    m = lin_apply_factors(m, {id_w, d, lin_copy_w(u, cap), id_w, id_w}, cap);
    m = lin_apply_factors(m, {id_w, lin_intersect_w(u, cap), cup, id_w}, cap);
    m = lin_apply_factors(m, {id_w, cup}, cap);
    return m;
}

std::int64_t scalar_of(const LinMap& f) {
    if (!f.dom().is_unit() || !f.cod().is_unit()) {
        throw TypeMismatchError("scalar_of expects a map typed I -> I, got " +
                                f.dom().to_string() + " -> " + f.cod().to_string());
    }
    return f.entries().empty() ? 0 : f.entries().front().value;
}

std::vector<std::pair<Point, Point>> support(const LinMap& f) {
    std::vector<std::pair<Point, Point>> out;
    out.reserve(f.entries().size());
    for (const auto& e : f.entries()) out.emplace_back(e.col, e.row);
    std::sort(out.begin(), out.end());
    return out;
}

VectLawReport check_vect_laws(const Universe& u, std::size_t size_cap, std::size_t cap) {
    if (u.size() > size_cap) {
        throw CapExceededError("vector law check over " + std::to_string(u.size()) +
                               " entities exceeds cap " + std::to_string(size_cap));
    }
    const LinMap id_w = lin_identity(u, ObjectType::w(1), cap);
    const LinMap id_i = lin_identity(u, ObjectType::unit(), cap);
    const LinMap copy = lin_copy_w(u, cap);
    const LinMap discard = lin_discard_w(u, cap);
    const LinMap mult = lin_intersect_w(u, cap);
    const LinMap unit_state = lin_top_w(u, cap);
    const LinMap swap = lin_swap_ww(u, cap);
    const LinMap cup = lin_cup_w(u, cap);
    const LinMap cap_m = lin_cap_w(u, cap);

    VectLawReport r;
    r.bialgebra.counit_mult =
        lin_compose(mult, discard, cap) == lin_tensor(discard, discard, cap);
    r.bialgebra.comult_unit =
        lin_compose(unit_state, copy, cap) == lin_tensor(unit_state, unit_state, cap);
    const LinMap mid = lin_tensor(lin_tensor(id_w, swap, cap), id_w, cap);
    r.bialgebra.interchange =
        lin_compose(mult, copy, cap) ==
        lin_compose(lin_compose(lin_tensor(copy, copy, cap), mid, cap),
                    lin_tensor(mult, mult, cap), cap);
    r.bialgebra.unit_counit = lin_compose(unit_state, discard, cap) == id_i;
    r.snakes.left = lin_compose(lin_tensor(cap_m, id_w, cap),
                                lin_tensor(id_w, cup, cap), cap) == id_w;
    r.snakes.right = lin_compose(lin_tensor(id_w, cap_m, cap),
                                 lin_tensor(cup, id_w, cap), cap) == id_w;
    return r;
}

std::string to_canonical_text(const LinMap& f) {
    std::vector<LinEntry> rows = f.entries();
    std::sort(rows.begin(), rows.end(), [](const LinEntry& a, const LinEntry& b) {
        return std::make_pair(a.row, a.col) < std::make_pair(b.row, b.col);
    });
    std::ostringstream os;
    os << f.dom().to_string() << " -> " << f.cod().to_string() << "\n";
    for (const auto& e : rows) os << e.row << " " << e.col << " " << e.value << "\n";
    return os.str();
}

} // namespace gqsem
