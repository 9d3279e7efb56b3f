#include "permkit/group.hpp"

#include <algorithm>
#include <utility>

namespace permkit {

PermGroup::PermGroup(std::size_t max_order) : max_order_(max_order) {
    elements_.insert(Perm());
}

void PermGroup::insert(const Perm& generator) {
    if (contains(generator)) return;

    // Close a working copy and swap it in at the end, so a GroupTooLarge
    // throw leaves the group exactly as it was.
    std::set<Perm> closure = elements_;
    closure.insert(generator);
    if (closure.size() > max_order_) throw GroupTooLarge(closure.size(), max_order_);

    std::vector<Perm> frontier{generator};
    while (!frontier.empty()) {
        const std::vector<Perm> members(closure.begin(), closure.end());
        std::vector<Perm> added;
        for (const Perm& fresh : frontier) {
            for (const Perm& member : members) {
                // Both orders: x*y new does not imply y*x known, and with
                // both in play every pair of elements eventually meets,
                // which is what makes the fixed point closed.
                for (Perm product : {fresh * member, member * fresh}) {
                    if (closure.insert(product).second) {
                        if (closure.size() > max_order_)
                            throw GroupTooLarge(closure.size(), max_order_);
                        added.push_back(std::move(product));
                    }
                }
            }
        }
        frontier = std::move(added);
    }
    elements_ = std::move(closure);
}

bool PermGroup::is_abelian() const {
    for (auto i = elements_.begin(); i != elements_.end(); ++i) {
        for (auto j = std::next(i); j != elements_.end(); ++j)
            if (!i->commutes_with(*j)) return false;
    }
    return true;
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
    if (g.order() % order() != 0) return false;  // Lagrange
    for (const Perm& p : elements_)
        if (!g.contains(p)) return false;
    return true;
}

bool PermGroup::is_normal_in(const PermGroup& g) const {
    for (const Perm& outer : g.elements_) {
        const Perm outer_inverse = outer.inverse();
        for (const Perm& inner : elements_)
            if (!contains(outer * inner * outer_inverse)) return false;
    }
    return true;
}

PermGroup PermGroup::subgroup_search(const std::function<bool(const Perm&)>& keep) const {
    PermGroup found(max_order_);
    for (const Perm& p : elements_)
        if (keep(p)) found.insert(p);
    return found;
}

PermGroup PermGroup::normalizer(const PermGroup& h) const {
    return subgroup_search([&h](const Perm& p) {
        const Perm p_inverse = p.inverse();
        for (const Perm& inner : h.elements_)
            if (!h.contains(p * inner * p_inverse)) return false;
        return true;
    });
}

PermGroup PermGroup::centralizer(const PermGroup& h) const {
    if (is_trivial() || h.is_trivial()) return *this;
    return subgroup_search([&h](const Perm& p) {
        for (const Perm& inner : h.elements_)
            if (!p.commutes_with(inner)) return false;
        return true;
    });
}

PermGroup PermGroup::center() const { return centralizer(*this); }

std::vector<std::vector<Point>> PermGroup::orbits(const std::vector<Point>& points) const {
    std::vector<std::vector<Point>> result;
    std::set<Point> placed;
    for (const Point point : points) {
        if (placed.count(point)) continue;
        // The group is fully enumerated, so one sweep of g[point] is the
        // whole orbit; no fixed-point iteration needed.
        std::set<Point> orbit;
        for (const Perm& p : elements_) orbit.insert(p.apply(point));
        placed.insert(orbit.begin(), orbit.end());
        result.emplace_back(orbit.begin(), orbit.end());
    }
    return result;
}

bool PermGroup::is_transitive(const std::vector<Point>& points, bool strict) const {
    const auto parts = orbits(points);
    if (strict) return parts.size() == 1;
    std::size_t moved_orbits = 0;
    for (const auto& orbit : parts)
        if (orbit.size() > 1) ++moved_orbits;
    return moved_orbits == 1;
}

PermGroup PermGroup::stabilizer(Point point) const {
    return subgroup_search([point](const Perm& p) { return p.apply(point) == point; });
}

PermGroup commutator_subgroup(const PermGroup& h, const PermGroup& k) {
    PermGroup result(std::max(h.max_order(), k.max_order()));
    for (const Perm& a : h.perms())
        for (const Perm& b : k.perms()) result.insert(a.commutator(b));
    return result;
}

}  // namespace permkit
