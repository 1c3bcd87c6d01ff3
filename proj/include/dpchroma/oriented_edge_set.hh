#pragma once

#include "dpchroma/errors.hh"
#include "dpchroma/graph.hh"

#include <string>
#include <vector>

namespace dpchroma {

/// A distinguished edge set in which every member carries a direction
/// tail -> head. Non-members carry no direction.
class OrientedEdgeSet {
public:
    OrientedEdgeSet() = default;
    explicit OrientedEdgeSet(const Graph & g) : edges_(g.edge_count()), tail_(g.edge_count(), 0), head_(g.edge_count(), 0) {}

    /// Every member of `members` directed from its lower endpoint.
    static OrientedEdgeSet low_to_high(const Graph & g, const EdgeSubset & members)
    {
        OrientedEdgeSet s(g);
        for (auto e : members.members())
            s.add(g, e, g.edge(e).u);
        return s;
    }

    void add(const Graph & g, EdgeIndex e, Vertex tail)
    {
        if (e >= g.edge_count())
            throw InputError("edge index " + std::to_string(e) + " out of range");
        const auto & edge = g.edge(e);
        if (tail != edge.u && tail != edge.v)
            throw InputError("vertex " + std::to_string(tail) + " is not an endpoint of edge " + std::to_string(e));
        edges_.set(e);
        tail_[e] = tail;
        head_[e] = edge.other(tail);
    }

    bool contains(EdgeIndex e) const { return edges_.test(e); }
    Vertex tail(EdgeIndex e) const { return tail_[e]; }
    Vertex head(EdgeIndex e) const { return head_[e]; }
    const EdgeSubset & edges() const { return edges_; }
    std::size_t size() const { return edges_.count(); }

    OrientedEdgeSet reversed() const
    {
        OrientedEdgeSet r = *this;
        for (auto e : edges_.members())
            std::swap(r.tail_[e], r.head_[e]);
        return r;
    }

    friend bool operator==(const OrientedEdgeSet & a, const OrientedEdgeSet & b)
    {
        if (!(a.edges_ == b.edges_))
            return false;
        for (auto e : a.edges_.members())
            if (a.tail_[e] != b.tail_[e])
                return false;
        return true;
    }

private:
    EdgeSubset edges_;
    std::vector<Vertex> tail_;
    std::vector<Vertex> head_;
};

} // namespace dpchroma
