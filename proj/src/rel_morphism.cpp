#include "gqsem/rel_morphism.hpp"

#include <algorithm>
#include <sstream>

namespace gqsem {

ObjectType ObjectType::w(std::size_t count) {
    ObjectType t;
    t.atoms.assign(count, Atom::W);
    return t;
}

ObjectType ObjectType::s() {
    ObjectType t;
    t.atoms.push_back(Atom::S);
    return t;
}

std::string ObjectType::to_string() const {
    if (atoms.empty()) return "I";
    std::string out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) out += "*";
        out += (atoms[i] == Atom::W) ? "W" : "S";
    }
    return out;
}

ObjectType tensor_type(const ObjectType& a, const ObjectType& b) {
    ObjectType t = a;
    t.atoms.insert(t.atoms.end(), b.atoms.begin(), b.atoms.end());
    return t;
}

PointCodec::PointCodec(const ObjectType& type, std::size_t universe_size) {
    const std::uint64_t w_dim = std::uint64_t(1) << universe_size;
    dims_.reserve(type.arity());
    for (Atom a : type.atoms) dims_.push_back(a == Atom::W ? w_dim : 1);
    strides_.assign(dims_.size(), 1);
    total_ = 1;
    for (std::size_t i = dims_.size(); i-- > 0;) {
        strides_[i] = total_;
        if (dims_[i] != 0 && total_ > (std::uint64_t(1) << 62) / dims_[i]) {
            throw CapExceededError("object type " + type.to_string() +
                                   " has too many points to index");
        }
        total_ *= dims_[i];
    }
}

std::uint64_t type_dimension(const ObjectType& type, std::size_t universe_size) {
    return PointCodec(type, universe_size).total();
}

namespace {

void sort_unique_capped(std::vector<std::pair<Point, Point>>& graph, std::size_t cap,
                        const char* what) {
    std::sort(graph.begin(), graph.end());
    graph.erase(std::unique(graph.begin(), graph.end()), graph.end());
    if (graph.size() > cap) {
        throw CapExceededError(std::string(what) + ": graph has " +
                               std::to_string(graph.size()) + " pairs, cap is " +
                               std::to_string(cap));
    }
}

void require_composable(const RelMorphism& f, const RelMorphism& g) {
    detail::require_same_universe(&f.universe(), &g.universe(), "compose");
    if (!(f.cod() == g.dom())) {
        throw TypeMismatchError("compose: " + f.cod().to_string() + " does not match " +
                                g.dom().to_string());
    }
}

} // namespace

RelMorphism::RelMorphism(const Universe& u, ObjectType dom, ObjectType cod,
                         std::vector<std::pair<Point, Point>> graph, std::size_t cap)
    : uni_(&u), dom_(std::move(dom)), cod_(std::move(cod)), graph_(std::move(graph)) {
    const PointCodec dc(dom_, u.size());
    const PointCodec cc(cod_, u.size());
    for (const auto& [x, y] : graph_) {
        if (x >= dc.total() || y >= cc.total()) {
            throw TypeMismatchError("graph pair outside " + dom_.to_string() + " -> " +
                                    cod_.to_string());
        }
    }
    sort_unique_capped(graph_, cap, "morphism");
}

bool RelMorphism::relates(Point x, Point y) const {
    return std::binary_search(graph_.begin(), graph_.end(), std::make_pair(x, y));
}

RelMorphism identity(const Universe& u, const ObjectType& t, std::size_t cap) {
    const std::uint64_t dim = type_dimension(t, u.size());
    if (dim > cap) {
        throw CapExceededError("identity on " + t.to_string() + " needs " +
                               std::to_string(dim) + " pairs, cap is " +
                               std::to_string(cap));
    }
    std::vector<std::pair<Point, Point>> graph;
    graph.reserve(dim);
    for (Point p = 0; p < dim; ++p) graph.emplace_back(p, p);
    return RelMorphism(u, t, t, std::move(graph), cap);
}

RelMorphism cup_w(const Universe& u, std::size_t cap) {
    const std::uint64_t w = u.powerset_size();
    std::vector<std::pair<Point, Point>> graph;
    graph.reserve(w);
    for (Point a = 0; a < w; ++a) graph.emplace_back(a * w + a, 0);
    return RelMorphism(u, ObjectType::w(2), ObjectType::unit(), std::move(graph), cap);
}

RelMorphism cap_w(const Universe& u, std::size_t cap) {
    const std::uint64_t w = u.powerset_size();
    std::vector<std::pair<Point, Point>> graph;
    graph.reserve(w);
    for (Point a = 0; a < w; ++a) graph.emplace_back(0, a * w + a);
    return RelMorphism(u, ObjectType::unit(), ObjectType::w(2), std::move(graph), cap);
}

RelMorphism copy_w(const Universe& u, std::size_t cap) {
    const std::uint64_t w = u.powerset_size();
    std::vector<std::pair<Point, Point>> graph;
    graph.reserve(w);
    for (Point a = 0; a < w; ++a) graph.emplace_back(a, a * w + a);
    return RelMorphism(u, ObjectType::w(1), ObjectType::w(2), std::move(graph), cap);
}

RelMorphism discard_w(const Universe& u, std::size_t cap) {
    const std::uint64_t w = u.powerset_size();
    std::vector<std::pair<Point, Point>> graph;
    graph.reserve(w);
    for (Point a = 0; a < w; ++a) graph.emplace_back(a, 0);
    return RelMorphism(u, ObjectType::w(1), ObjectType::unit(), std::move(graph), cap);
}

RelMorphism intersect_w(const Universe& u, std::size_t cap) {
    const std::uint64_t w = u.powerset_size();
    std::vector<std::pair<Point, Point>> graph;
    graph.reserve(w * w);
    for (Point a = 0; a < w; ++a) {
        for (Point b = 0; b < w; ++b) graph.emplace_back(a * w + b, a & b);
    }
    return RelMorphism(u, ObjectType::w(2), ObjectType::w(1), std::move(graph), cap);
}

RelMorphism top_w(const Universe& u, std::size_t cap) {
    return RelMorphism(u, ObjectType::unit(), ObjectType::w(1),
                       {{0, Point(u.full_mask())}}, cap);
}

RelMorphism swap_ww(const Universe& u, std::size_t cap) {
    const std::uint64_t w = u.powerset_size();
    std::vector<std::pair<Point, Point>> graph;
    graph.reserve(w * w);
    for (Point a = 0; a < w; ++a) {
        for (Point b = 0; b < w; ++b) graph.emplace_back(a * w + b, b * w + a);
    }
    return RelMorphism(u, ObjectType::w(2), ObjectType::w(2), std::move(graph), cap);
}

RelMorphism subset_state(const Subset& s) {
    return RelMorphism(s.universe(), ObjectType::unit(), ObjectType::w(1),
                       {{0, Point(s.bits())}});
}

RelMorphism subsets_state(const Universe& u, const std::vector<Subset>& members,
                          std::size_t cap) {
    std::vector<std::pair<Point, Point>> graph;
    graph.reserve(members.size());
    for (const Subset& s : members) {
        detail::require_same_universe(&s.universe(), &u, "subsets_state");
        graph.emplace_back(0, Point(s.bits()));
    }
    return RelMorphism(u, ObjectType::unit(), ObjectType::w(1), std::move(graph), cap);
}

RelMorphism morphism_from_subset_pairs(const Universe& u,
                                       const std::vector<std::pair<Subset, Subset>>& pairs,
                                       std::size_t cap) {
    std::vector<std::pair<Point, Point>> graph;
    graph.reserve(pairs.size());
    for (const auto& [a, x] : pairs) {
        detail::require_same_universe(&a.universe(), &u, "morphism_from_subset_pairs");
        detail::require_same_universe(&x.universe(), &u, "morphism_from_subset_pairs");
        graph.emplace_back(Point(a.bits()), Point(x.bits()));
    }
    return RelMorphism(u, ObjectType::w(1), ObjectType::w(1), std::move(graph), cap);
}

RelMorphism compose(const RelMorphism& f, const RelMorphism& g, std::size_t cap) {
    require_composable(f, g);
    const auto& gg = g.graph();
    std::vector<std::pair<Point, Point>> out;
    for (const auto& [x, y] : f.graph()) {
        auto lo = std::lower_bound(gg.begin(), gg.end(),
                                   std::make_pair(y, std::uint64_t(0)));
        for (auto it = lo; it != gg.end() && it->first == y; ++it) {
            out.emplace_back(x, it->second);
            if (out.size() > 4 * cap) {
                throw CapExceededError("compose: intermediate graph exceeded cap");
            }
        }
    }
    sort_unique_capped(out, cap, "compose");
    return RelMorphism(f.universe(), f.dom(), g.cod(), std::move(out), cap);
}

RelMorphism tensor_product(const RelMorphism& f, const RelMorphism& g, std::size_t cap) {
    detail::require_same_universe(&f.universe(), &g.universe(), "tensor");
    const std::size_t n = f.universe().size();
    const std::uint64_t g_dom_dim = type_dimension(g.dom(), n);
    const std::uint64_t g_cod_dim = type_dimension(g.cod(), n);
    if (f.graph().size() != 0 && g.graph().size() > cap / f.graph().size() + 1) {
        throw CapExceededError("tensor: graph would exceed cap");
    }
    std::vector<std::pair<Point, Point>> out;
    out.reserve(f.graph().size() * g.graph().size());
    for (const auto& [fx, fy] : f.graph()) {
        for (const auto& [gx, gy] : g.graph()) {
            out.emplace_back(fx * g_dom_dim + gx, fy * g_cod_dim + gy);
        }
    }
    sort_unique_capped(out, cap, "tensor");
    return RelMorphism(f.universe(), tensor_type(f.dom(), g.dom()),
                       tensor_type(f.cod(), g.cod()), std::move(out), cap);
}

RelMorphism apply_factors(const RelMorphism& m, const std::vector<RelMorphism>& factors,
                          std::size_t cap) {
    const Universe& u = m.universe();
    const std::size_t n = u.size();

    ObjectType stage_dom = ObjectType::unit();
    ObjectType stage_cod = ObjectType::unit();
    for (const auto& f : factors) {
        detail::require_same_universe(&f.universe(), &u, "apply_factors");
        stage_dom = tensor_type(stage_dom, f.dom());
        stage_cod = tensor_type(stage_cod, f.cod());
    }
    if (!(stage_dom == m.cod())) {
        throw TypeMismatchError("apply_factors: stage expects " + stage_dom.to_string() +
                                ", composite provides " + m.cod().to_string());
    }

    // Successor lists per factor, indexed by the factor's domain points.
    std::vector<std::vector<std::vector<Point>>> succ(factors.size());
    std::vector<std::uint64_t> dom_dim(factors.size()), cod_dim(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        dom_dim[i] = type_dimension(factors[i].dom(), n);
        cod_dim[i] = type_dimension(factors[i].cod(), n);
        succ[i].resize(dom_dim[i]);
        for (const auto& [x, y] : factors[i].graph()) succ[i][x].push_back(y);
    }
    std::vector<std::uint64_t> dom_stride(factors.size(), 1);
    std::vector<std::uint64_t> cod_stride(factors.size(), 1);
    for (std::size_t i = factors.size(); i-- > 1;) {
        dom_stride[i - 1] = dom_stride[i] * dom_dim[i];
        cod_stride[i - 1] = cod_stride[i] * cod_dim[i];
    }

    std::vector<std::pair<Point, Point>> out;
    std::vector<const std::vector<Point>*> lists(factors.size());
    std::vector<std::size_t> pick(factors.size());
    for (const auto& [x, y] : m.graph()) {
        bool dead = false;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const std::uint64_t digit = factors.empty() ? 0 : (y / dom_stride[i]) % dom_dim[i];
            lists[i] = &succ[i][digit];
            if (lists[i]->empty()) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        if (factors.empty()) {
            out.emplace_back(x, 0);
            continue;
        }
        std::fill(pick.begin(), pick.end(), 0);
        while (true) {
            Point packed = 0;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                packed += (*lists[i])[pick[i]] * cod_stride[i];
            }
            out.emplace_back(x, packed);
            if (out.size() > 4 * cap) {
                throw CapExceededError("apply_factors: intermediate graph exceeded cap");
            }
            std::size_t i = factors.size();
            while (i-- > 0) {
                if (++pick[i] < lists[i]->size()) break;
                pick[i] = 0;
                if (i == 0) goto next_pair;
            }
        }
    next_pair:;
    }
    sort_unique_capped(out, cap, "apply_factors");
    return RelMorphism(u, m.dom(), stage_cod, std::move(out), cap);
}

RelMorphism transpose(const RelMorphism& f) {
    std::vector<std::pair<Point, Point>> graph;
    graph.reserve(f.graph().size());
    for (const auto& [x, y] : f.graph()) graph.emplace_back(y, x);
    return RelMorphism(f.universe(), f.cod(), f.dom(), std::move(graph));
}

BialgebraLawReport check_bialgebra_equations(const RelMorphism& copy,
                                             const RelMorphism& discard,
                                             const RelMorphism& mult,
                                             const RelMorphism& unit_state,
                                             std::size_t cap) {
    const Universe& u = copy.universe();
    const RelMorphism id_w = identity(u, ObjectType::w(1), cap);
    const RelMorphism swap = swap_ww(u, cap);

    BialgebraLawReport r;
    r.counit_mult = compose(mult, discard, cap) ==
                    tensor_product(discard, discard, cap);
    r.comult_unit = compose(unit_state, copy, cap) ==
                    tensor_product(unit_state, unit_state, cap);
    const RelMorphism lhs = compose(mult, copy, cap);
    const RelMorphism copies = tensor_product(copy, copy, cap);
    const RelMorphism mid = tensor_product(tensor_product(id_w, swap, cap), id_w, cap);
    const RelMorphism mults = tensor_product(mult, mult, cap);
    r.interchange = lhs == compose(compose(copies, mid, cap), mults, cap);
    r.unit_counit = compose(unit_state, discard, cap) ==
                    identity(u, ObjectType::unit(), cap);
    return r;
}

SnakeLawReport check_snake_equations_for(const RelMorphism& cup,
                                         const RelMorphism& cap_morphism,
                                         std::size_t cap) {
    const Universe& u = cup.universe();
    const RelMorphism id_w = identity(u, ObjectType::w(1), cap);
    const RelMorphism want = id_w;
    SnakeLawReport r;
    r.left = compose(tensor_product(cap_morphism, id_w, cap),
                     tensor_product(id_w, cup, cap), cap) == want;
    r.right = compose(tensor_product(id_w, cap_morphism, cap),
                      tensor_product(cup, id_w, cap), cap) == want;
    return r;
}

BialgebraLawReport check_bialgebra_laws(const Universe& u, std::size_t size_cap,
                                        std::size_t cap) {
    if (u.size() > size_cap) {
        throw CapExceededError("law check over " + std::to_string(u.size()) +
                               " entities exceeds cap " + std::to_string(size_cap));
    }
    return check_bialgebra_equations(copy_w(u, cap), discard_w(u, cap),
                                     intersect_w(u, cap), top_w(u, cap), cap);
}

SnakeLawReport check_snake_equations(const Universe& u, std::size_t size_cap,
                                     std::size_t cap) {
    if (u.size() > size_cap) {
        throw CapExceededError("snake check over " + std::to_string(u.size()) +
                               " entities exceeds cap " + std::to_string(size_cap));
    }
    return check_snake_equations_for(cup_w(u, cap), cap_w(u, cap), cap);
}

RelMorphism conservativize(const RelMorphism& d, std::size_t cap) {
    const Universe& u = d.universe();
    if (!(d.dom() == ObjectType::w(1)) || !(d.cod() == ObjectType::w(1))) {
        throw TypeMismatchError("conservativize expects a determiner typed W -> W, got " +
                                d.dom().to_string() + " -> " + d.cod().to_string());
    }
    const RelMorphism id_w = identity(u, ObjectType::w(1), cap);
    const RelMorphism cup = cup_w(u, cap);
    const RelMorphism cap_m = cap_w(u, cap);

    RelMorphism m = identity(u, ObjectType::w(1), cap);
    m = apply_factors(m, {cap_m, id_w}, cap);                              // W -> W^3
    m = apply_factors(m, {id_w, cap_m, id_w, id_w}, cap);                  // W^3 -> W^5
    m = apply_factors(m, {id_w, d, copy_w(u, cap), id_w, id_w}, cap);      // W^5 -> W^6
    m = apply_factors(m, {id_w, intersect_w(u, cap), cup, id_w}, cap);     // W^6 -> W^3
    m = apply_factors(m, {id_w, cup}, cap);                                // W^3 -> W
    return m;
}

std::vector<Subset> det_noun_state(const RelMorphism& d, const Subset& n) {
    detail::require_same_universe(&d.universe(), &n.universe(), "det_noun_state");
    if (!(d.dom() == ObjectType::w(1)) || !(d.cod() == ObjectType::w(1))) {
        throw TypeMismatchError("det_noun_state expects a determiner typed W -> W");
    }
    std::vector<Subset> out;
    for (const auto& [x, y] : d.graph()) {
        if (x == Point(n.bits())) out.push_back(Subset(d.universe(), Mask(y)));
    }
    return out;
}

namespace {

void print_point(std::ostream& os, const PointCodec& codec, Point p) {
    os << "(";
    for (std::size_t i = 0; i < codec.arity(); ++i) {
        if (i) os << ",";
        if (codec.slot_dim(i) == 1) {
            os << "*";
        } else {
            os << codec.slot(p, i);
        }
    }
    os << ")";
}

} // namespace

std::string to_canonical_text(const RelMorphism& f) {
    const PointCodec dc(f.dom(), f.universe().size());
    const PointCodec cc(f.cod(), f.universe().size());
    std::ostringstream os;
    os << f.dom().to_string() << " -> " << f.cod().to_string() << "\n";
    for (const auto& [x, y] : f.graph()) {
        print_point(os, dc, x);
        os << " -> ";
        print_point(os, cc, y);
        os << "\n";
    }
    return os.str();
}

} // namespace gqsem
