#include "dpchroma/json_io.hh"

#include "dpchroma/errors.hh"

#include <string>

namespace dpchroma::io {

namespace {

    template <class T>
    T require(const json & j, const char * key)
    {
        if (!j.is_object() || !j.contains(key))
            throw InputError(std::string("missing field '") + key + "'");
        try {
            return j.at(key).get<T>();
        }
        catch (const json::exception &) {
            throw InputError(std::string("field '") + key + "' has the wrong type");
        }
    }

    json edge_list(const EdgeSubset & s)
    {
        json a = json::array();
        for (auto e : s.members())
            a.push_back(e);
        return a;
    }

    json vertices(const std::vector<Vertex> & vs)
    {
        json a = json::array();
        for (auto v : vs)
            a.push_back(v);
        return a;
    }

    template <class T>
    json optional_json(const std::optional<T> & x)
    {
        return x ? json(cycle_json(*x)) : json(nullptr);
    }

    struct EvidenceVisitor {
        const Graph & g;

        json operator()(const std::monostate &) const { return nullptr; }
        json operator()(const DpGoodCertificate & c) const { return {{"certificate", certificate_json(c)}}; }
        json operator()(const EvenGirthEdge & e) const
        {
            return {{"edge", e.edge}, {"girth", e.girth.value()}, {"cycle", cycle_json(e.cycle)}};
        }
        json operator()(const VertexOrderEvidence & v) const
        {
            json j{{"order", vertices(v.order)}};
            if (v.failed_position)
                j["failed_position"] = *v.failed_position;
            return j;
        }
        json operator()(const OrientationEvidence & o) const
        {
            return {{"r0", o.r0.is_finite() ? json(o.r0.value()) : json("infinite")},
                    {"girth_witness", optional_json(o.girth_witness)},
                    {"orientation", oriented_json(g, o.orientation)},
                    {"unbalanced_cycle", optional_json(o.unbalanced_cycle)}};
        }
        json operator()(const BipartitePathEvidence & b) const
        {
            json j{{"side_one", vertices(b.side_one)},
                   {"side_two", vertices(b.side_two)},
                   {"edges", edge_list(b.edges)},
                   {"r0", b.r0.is_finite() ? json(b.r0.value()) : json("infinite")},
                   {"girth_witness", optional_json(b.girth_witness)},
                   {"offending_cycle", optional_json(b.offending_cycle)},
                   {"offending_path", b.offending_path ? vertices(*b.offending_path) : json(nullptr)}};
            if (b.delegated)
                j["orientation"] = (*this)(*b.delegated);
            return j;
        }
        json operator()(const Cycle & c) const { return {{"cycle", cycle_json(c)}}; }
        json operator()(const SearchExhausted & s) const { return {{"explored", s.explored}}; }
    };

} // namespace

json polynomial_json(const Polynomial & p)
{
    json a = json::array();
    for (const auto & c : p.coefficients())
        a.push_back(c.str());
    return a;
}

Polynomial polynomial_from_json(const json & j)
{
    if (!j.is_array())
        throw InputError("polynomial must be an array of decimal strings");
    std::vector<BigInt> coeffs;
    for (const auto & c : j) {
        if (!c.is_string())
            throw InputError("polynomial coefficient must be a decimal string");
        try {
            coeffs.emplace_back(c.get<std::string>());
        }
        catch (const std::exception &) {
            throw InputError("bad polynomial coefficient '" + c.get<std::string>() + "'");
        }
    }
    return Polynomial(std::move(coeffs));
}

json cover_json(const Cover & c)
{
    return {{"m", c.m}, {"perms", c.perms}};
}

Cover cover_from_json(const Graph & g, const json & j)
{
    Cover c;
    c.m = require<std::size_t>(j, "m");
    if (c.m < 1 || c.m > max_fold)
        throw InputError("cover fold count out of range");
    const auto & perms = j.at("perms");
    try {
        if (perms.is_array()) {
            c.perms = perms.get<std::vector<Permutation>>();
        }
        else if (perms.is_object()) {
            c.perms.assign(g.edge_count(), identity_permutation(c.m));
            for (const auto & [key, value] : perms.items()) {
                std::size_t e = std::stoul(key);
                if (e >= g.edge_count())
                    throw InputError("cover names edge " + key + " which does not exist");
                c.perms[e] = value.get<Permutation>();
            }
        }
        else
            throw InputError("cover 'perms' must be an array or an object");
    }
    catch (const json::exception &) {
        throw InputError("cover 'perms' has the wrong shape");
    }
    catch (const std::invalid_argument &) {
        throw InputError("cover 'perms' keys must be edge indices");
    }
    validate_cover(g, c);
    return c;
}

json count_report_json(const CountReport & r)
{
    json j{{"value", std::to_string(r.value)}, {"method", std::string(to_string(r.method))}};
    if (r.argmin)
        j["cover"] = cover_json(*r.argmin);
    if (r.minimizers)
        j["minimizers"] = *r.minimizers;
    if (r.covers_examined)
        j["covers_examined"] = *r.covers_examined;
    return j;
}

json cycle_json(const Cycle & c)
{
    return vertices(c.vertices);
}

Cycle cycle_from_json(const json & j)
{
    try {
        return Cycle{j.get<std::vector<Vertex>>()};
    }
    catch (const json::exception &) {
        throw InputError("cycle must be an array of vertices");
    }
}

json girth_json(const GirthResult & r)
{
    return {{"value", r.girth.is_finite() ? json(r.girth.value()) : json("infinite")},
            {"witness", optional_json(r.witness)}};
}

json balance_json(const BalanceVerdict & b)
{
    return {{"balanced", b.balanced}, {"witness", optional_json(b.witness)}};
}

json oriented_json(const Graph & g, const OrientedEdgeSet & s)
{
    json a = json::array();
    for (auto e : s.edges().members())
        a.push_back({{"edge", e}, {"tail", s.tail(e)}, {"head", s.head(e)}});
    (void)g;
    return a;
}

json certificate_json(const DpGoodCertificate & c)
{
    json cycles = json::array();
    for (const auto & cy : c.witness_cycles)
        cycles.push_back(cycle_json(cy));
    return {{"tree", edge_list(c.tree)}, {"labeling", c.labeling}, {"witness_cycles", cycles}};
}

DpGoodCertificate certificate_from_json(const Graph & g, const json & j)
{
    DpGoodCertificate c;
    c.tree = EdgeSubset(g.edge_count());
    for (auto e : require<std::vector<EdgeIndex>>(j, "tree")) {
        if (e >= g.edge_count())
            throw InputError("certificate tree names edge " + std::to_string(e) + " which does not exist");
        c.tree.set(e);
    }
    c.labeling = require<std::vector<EdgeIndex>>(j, "labeling");
    for (const auto & cy : require<json>(j, "witness_cycles"))
        c.witness_cycles.push_back(cycle_from_json(cy));
    return c;
}

json verdict_json(const Graph & g, const ClassifierVerdict & v)
{
    return {{"condition", v.condition},
            {"status", std::string(to_string(v.status))},
            {"implied", std::string(to_string(v.implied))},
            {"summary", v.summary},
            {"evidence", std::visit(EvidenceVisitor{g}, v.evidence)}};
}

} // namespace dpchroma::io
