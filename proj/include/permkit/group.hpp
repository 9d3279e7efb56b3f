#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "permkit/perm.hpp"

namespace permkit {

/// A finite permutation group stored by full enumeration. insert() closes
/// the element set under composition, so the group always is a group; the
/// configured maximum order bounds how far a closure may grow.
///
/// Full enumeration keeps every query a simple scan, at the price of being
/// usable only for small groups. That is a deliberate trade: within the
/// limit, answers are exact and the code stays transparent.
class PermGroup {
public:
    static constexpr std::size_t kDefaultMaxOrder = 100000;

    /// The trivial group; it grows through insert().
    explicit PermGroup(std::size_t max_order = kDefaultMaxOrder);

    std::size_t max_order() const { return max_order_; }

    /// Adds a generator and closes under composition. Throws GroupTooLarge
    /// (reporting the attained partial count) if the closure would exceed
    /// max_order(); the group is left unchanged in that case.
    void insert(const Perm& generator);

    std::size_t order() const { return elements_.size(); }
    bool is_trivial() const { return elements_.size() == 1; }
    bool contains(const Perm& p) const { return elements_.count(p) != 0; }

    /// The elements, ordered by the canonical mapping key. Deterministic:
    /// equal groups iterate identically.
    const std::set<Perm>& perms() const { return elements_; }

    bool is_abelian() const;

    /// True when this group is a subgroup of g. Checks the Lagrange
    /// divisibility condition first, then membership of every element.
    bool is_subgroup_of(const PermGroup& g) const;

    /// True when this group is normal in g: conjugation by any element of
    /// g maps this group into itself. Does not require being a subgroup.
    bool is_normal_in(const PermGroup& g) const;

    /// Closure of the elements satisfying keep. The result is a group with
    /// this group's max_order(); keep should describe a subgroup-friendly
    /// property or the closure may add elements that fail it.
    PermGroup subgroup_search(const std::function<bool(const Perm&)>& keep) const;

    /// Elements g with g * h * ~g in h for all h: the largest subgroup of
    /// this group in which h is normal (when h is a subgroup).
    PermGroup normalizer(const PermGroup& h) const;

    /// Elements commuting with every element of h.
    PermGroup centralizer(const PermGroup& h) const;

    /// Elements commuting with everything: centralizer of the group itself.
    PermGroup center() const;

    /// Orbits of the given points under the group action. Each orbit is
    /// sorted increasingly; orbits appear in first-seen order of the input
    /// and each point lands in exactly one orbit. An orbit may reach
    /// points outside the input if the group moves some input point there.
    std::vector<std::vector<Point>> orbits(const std::vector<Point>& points) const;

    /// Strict: the points form a single orbit. Lax (strict = false): a
    /// single orbit of size > 1, any number of fixed points besides it.
    bool is_transitive(const std::vector<Point>& points, bool strict = true) const;

    /// Subgroup of elements fixing the given point.
    PermGroup stabilizer(Point point) const;

private:
    std::set<Perm> elements_;
    std::size_t max_order_;
};

/// Group generated by all commutators h * k * ~h * ~k over both groups.
/// commutator_subgroup(g, g) is the derived subgroup of g.
PermGroup commutator_subgroup(const PermGroup& h, const PermGroup& k);

}  // namespace permkit
