#include "dpchroma/cli.hh"

#include "dpchroma/chromatic.hh"
#include "dpchroma/classifier.hh"
#include "dpchroma/cover.hh"
#include "dpchroma/errors.hh"
#include "dpchroma/fixtures.hh"
#include "dpchroma/girth.hh"
#include "dpchroma/json_io.hh"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace dpchroma::cli {

namespace {

    using io::json;

    struct Common {
        std::string fixture;
        std::string graph_path;
        std::string format = "text";
        std::uint64_t budget_covers = default_cover_budget;
        std::size_t budget_cycles = default_cycle_cap;
        std::size_t budget_trees = default_tree_budget;
        std::size_t jobs = 1;
    };

    struct Options {
        Common common;
        std::vector<std::uint64_t> at;
        std::string cover_path;
        std::vector<std::size_t> folds;
        std::string estar;
        std::optional<std::size_t> edge;
        std::string edges;
        std::size_t bound = 3;
        std::string cert_path;
        std::string order;
        std::string side_one;
        std::string side_two;
    };

    std::string read_file(const std::string & path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw InputError("cannot open '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    json read_json_file(const std::string & path)
    {
        try {
            return json::parse(read_file(path));
        }
        catch (const json::parse_error & ex) {
            throw InputError("'" + path + "' is not valid JSON: " + ex.what());
        }
    }

    Graph load_graph(const Common & c)
    {
        if (c.fixture.empty() == c.graph_path.empty())
            throw InputError("give exactly one of --fixture or --graph");
        if (!c.fixture.empty())
            return fixtures::by_name(c.fixture);
        return parse_graph(read_file(c.graph_path));
    }

    std::vector<std::string> split_commas(const std::string & s)
    {
        std::vector<std::string> out;
        std::string cur;
        for (char ch : s) {
            if (ch == ',') {
                out.push_back(cur);
                cur.clear();
            }
            else if (ch != ' ')
                cur += ch;
        }
        if (!cur.empty() || !out.empty())
            out.push_back(cur);
        return out;
    }

    std::size_t to_index(const std::string & tok)
    {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(tok, &pos);
        }
        catch (const std::exception &) {
            throw InputError("expected a non-negative integer, got '" + tok + "'");
        }
        if (pos != tok.size() || tok.empty() || tok.front() == '-')
            throw InputError("expected a non-negative integer, got '" + tok + "'");
        return static_cast<std::size_t>(v);
    }

    std::vector<std::size_t> index_list(const std::string & s)
    {
        std::vector<std::size_t> out;
        for (const auto & tok : split_commas(s))
            out.push_back(to_index(tok));
        return out;
    }

    EdgeSubset edge_set(const Graph & g, const std::string & s)
    {
        EdgeSubset out(g.edge_count());
        for (auto e : index_list(s)) {
            if (e >= g.edge_count())
                throw InputError("edge index " + std::to_string(e) + " out of range");
            out.set(e);
        }
        return out;
    }

    /// "3" is edge 3 directed from its lower endpoint; "5>2" is the edge
    /// {2,5} directed from 5.
    OrientedEdgeSet oriented_set(const Graph & g, const std::string & s)
    {
        OrientedEdgeSet out(g);
        for (const auto & tok : split_commas(s)) {
            auto gt = tok.find('>');
            if (gt == std::string::npos) {
                auto e = to_index(tok);
                if (e >= g.edge_count())
                    throw InputError("edge index " + std::to_string(e) + " out of range");
                out.add(g, e, g.edge(e).u);
                continue;
            }
            auto tail = to_index(tok.substr(0, gt));
            auto head = to_index(tok.substr(gt + 1));
            auto e = g.edge_between(tail, head);
            if (!e)
                throw InputError("'" + tok + "' is not an edge");
            out.add(g, *e, tail);
        }
        return out;
    }

    std::string cycle_text(const Cycle & c)
    {
        std::string s;
        for (std::size_t i = 0; i < c.vertices.size(); ++i)
            s += (i ? "-" : "") + std::to_string(c.vertices[i]);
        return s;
    }

    std::string girth_text(const GirthResult & r)
    {
        if (r.girth.is_infinite())
            return "girth infinite";
        return "girth " + r.girth.to_string() + "; witness " + cycle_text(*r.witness);
    }

    std::string polynomial_text(const Polynomial & p)
    {
        auto expanded = p.to_string("m");
        auto shifted = p.shifted(1);
        auto terms = [](const Polynomial & q) {
            return std::count_if(q.coefficients().begin(), q.coefficients().end(),
                                 [](const BigInt & c) { return c != 0; });
        };
        if (terms(shifted) < terms(p))
            return shifted.to_string("(m-1)");
        return expanded;
    }

    std::string permutation_text(const Permutation & p)
    {
        if (auto k = shift_amount(p))
            return *k == 1 ? "shift" : "shift by " + std::to_string(*k);
        std::string s = "[";
        for (std::size_t i = 0; i < p.size(); ++i)
            s += (i ? "," : "") + std::to_string(p[i]);
        return s + "]";
    }

    std::string cover_summary(const Cover & c)
    {
        std::string s;
        for (std::size_t e = 0; e < c.perms.size(); ++e) {
            if (is_identity(c.perms[e]))
                continue;
            s += (s.empty() ? "" : ", ") + permutation_text(c.perms[e]) + " on edge " + std::to_string(e);
        }
        return s.empty() ? "canonical cover" : s;
    }

    std::int64_t chromatic_value(const Polynomial & p, std::size_t m)
    {
        BigInt v = p.evaluate(BigInt(m));
        if (v > std::numeric_limits<std::int64_t>::max())
            throw CountOverflow("chromatic value exceeds 64 bits");
        return static_cast<std::int64_t>(v);
    }

    std::string relation(std::int64_t a, std::int64_t b)
    {
        return a < b ? "<" : a == b ? "=" : ">";
    }

    struct Output {
        const Common & common;
        std::ostream & out;

        bool json_mode() const { return common.format == "json"; }
        void emit(const json & j) const { out << j.dump(2) << '\n'; }
    };

    void print_verdict_text(std::ostream & out, const Graph & g, const ClassifierVerdict & v)
    {
        out << "[" << to_string(v.status) << "] " << v.condition << ": " << v.summary;
        if (v.status == VerdictStatus::satisfied)
            out << " (implied " << to_string(v.implied) << ")";
        out << '\n';
        if (const auto * cert = std::get_if<DpGoodCertificate>(&v.evidence)) {
            out << "  tree edges:";
            for (auto e : cert->tree.members())
                out << ' ' << e;
            out << '\n';
            for (std::size_t i = 0; i < cert->labeling.size(); ++i)
                out << "  e" << (i + 1) << " = edge " << cert->labeling[i] << " (" << g.edge(cert->labeling[i]).u
                    << "-" << g.edge(cert->labeling[i]).v << "), girth " << cert->witness_cycles[i].length()
                    << ", cycle " << cycle_text(cert->witness_cycles[i]) << '\n';
        }
        else if (const auto * ev = std::get_if<EvenGirthEdge>(&v.evidence))
            out << "  cycle " << cycle_text(ev->cycle) << '\n';
        else if (const auto * c = std::get_if<Cycle>(&v.evidence))
            out << "  cycle " << cycle_text(*c) << '\n';
        else if (const auto * o = std::get_if<OrientationEvidence>(&v.evidence)) {
            out << "  r0 = " << o->r0.to_string();
            if (o->girth_witness)
                out << ", girth witness " << cycle_text(*o->girth_witness);
            out << '\n';
            if (o->unbalanced_cycle)
                out << "  unbalanced on " << cycle_text(*o->unbalanced_cycle) << '\n';
        }
        else if (const auto * b = std::get_if<BipartitePathEvidence>(&v.evidence)) {
            out << "  r0 = " << b->r0.to_string();
            if (b->girth_witness)
                out << ", girth witness " << cycle_text(*b->girth_witness);
            out << '\n';
            if (b->offending_cycle)
                out << "  crossing arc on " << cycle_text(*b->offending_cycle) << '\n';
        }
    }

    void emit_verdicts(const Output & o, const Graph & g, const std::vector<ClassifierVerdict> & vs, bool aggregate)
    {
        if (o.json_mode()) {
            json arr = json::array();
            for (const auto & v : vs)
                arr.push_back(io::verdict_json(g, v));
            if (!aggregate && arr.size() == 1) {
                o.emit(arr[0]);
                return;
            }
            json j{{"verdicts", arr}};
            if (aggregate)
                j["implied"] = std::string(to_string(implied_class(vs)));
            o.emit(j);
            return;
        }
        for (const auto & v : vs)
            print_verdict_text(o.out, g, v);
        if (aggregate)
            o.out << "implied class: " << to_string(implied_class(vs))
                  << " (sufficient conditions only; membership is never asserted beyond them)\n";
    }

    void cmd_chromatic(const Output & o, const Graph & g, const Options & opt)
    {
        auto p = chromatic_polynomial(g);
        if (o.json_mode()) {
            json evals = json::object();
            for (auto m : opt.at)
                evals[std::to_string(m)] = p.evaluate(BigInt(m)).str();
            o.emit({{"polynomial", io::polynomial_json(p)}, {"evaluations", evals}});
            return;
        }
        o.out << "P = " << polynomial_text(p);
        for (auto m : opt.at)
            o.out << "; P(" << m << ") = " << p.evaluate(BigInt(m));
        o.out << '\n';
        if (polynomial_text(p) != p.to_string("m"))
            o.out << "expanded: " << p.to_string("m") << '\n';
    }

    void cmd_dpcount(const Output & o, const Graph & g, const Options & opt)
    {
        auto cover = io::cover_from_json(g, read_json_file(opt.cover_path));
        auto bt = count_transversals(g, cover);
        std::optional<CountReport> ie;
        std::string ie_note;
        try {
            ie = count_incl_excl(g, cover);
        }
        catch (const BudgetExceeded & ex) {
            ie_note = ex.what();
        }
        auto report = sloping_report(g, cover);
        if (o.json_mode()) {
            json sl = json::array();
            for (auto e : report.sloping.members())
                sl.push_back(e);
            o.emit({{"backtracking", io::count_report_json(bt)},
                    {"inclusion_exclusion", ie ? io::count_report_json(*ie) : json(nullptr)},
                    {"sloping", sl}});
            return;
        }
        o.out << "backtracking: " << bt.value << '\n';
        if (ie)
            o.out << "inclusion-exclusion: " << ie->value << '\n';
        else
            o.out << "inclusion-exclusion: skipped (" << ie_note << ")\n";
        o.out << "sloping edges:";
        for (auto e : report.sloping.members())
            o.out << ' ' << e;
        o.out << '\n';
    }

    void cmd_dpexact(const Output & o, const Graph & g, const Options & opt)
    {
        if (opt.folds.size() != 1)
            throw InputError("dpexact needs exactly one --m");
        auto m = opt.folds.front();
        auto r = dp_exact(g, m, o.common.budget_covers, o.common.jobs);
        auto p = chromatic_value(chromatic_polynomial(g), m);
        if (o.json_mode()) {
            o.emit({{"dp", io::count_report_json(r)}, {"chromatic", std::to_string(p)},
                    {"relation", relation(r.value, p)}});
            return;
        }
        o.out << "P_DP = " << r.value << ' ' << relation(r.value, p) << " P = " << p << "; argmin: "
              << cover_summary(*r.argmin) << '\n';
        o.out << "minimizers: " << *r.minimizers << " of " << *r.covers_examined << " covers\n";
    }

    void cmd_twist(const Output & o, const Graph & g, const Options & opt)
    {
        if (opt.folds.empty())
            throw InputError("twist needs --m");
        auto estar = oriented_set(g, opt.estar);
        auto poly = chromatic_polynomial(g);
        json arr = json::array();
        for (auto m : opt.folds) {
            if (m < 2)
                throw InputError("twisted covers need m >= 2");
            auto cover = twisted_cover(g, estar, m);
            auto r = count_transversals(g, cover);
            auto p = chromatic_value(poly, m);
            if (o.json_mode())
                arr.push_back({{"m", m}, {"count", io::count_report_json(r)}, {"chromatic", std::to_string(p)},
                               {"relation", relation(r.value, p)}, {"cover", io::cover_json(cover)}});
            else
                o.out << "m = " << m << ": twisted count = " << r.value << ' ' << relation(r.value, p) << " P = " << p
                      << '\n';
        }
        if (o.json_mode())
            o.emit({{"estar", io::oriented_json(g, estar)}, {"results", arr}});
    }

    void cmd_girth(const Output & o, const Graph & g, const Options & opt)
    {
        std::vector<EdgeIndex> which;
        if (opt.edge) {
            if (*opt.edge >= g.edge_count())
                throw InputError("edge index out of range");
            which.push_back(*opt.edge);
        }
        else
            for (EdgeIndex e = 0; e < g.edge_count(); ++e)
                which.push_back(e);

        if (o.json_mode()) {
            if (opt.edge) {
                o.emit(io::girth_json(edge_girth(g, *opt.edge)));
                return;
            }
            json arr = json::array();
            for (auto e : which)
                arr.push_back(io::girth_json(edge_girth(g, e)));
            o.emit(arr);
            return;
        }
        for (auto e : which)
            o.out << "edge " << e << " (" << g.edge(e).u << "-" << g.edge(e).v << "): " << girth_text(edge_girth(g, e))
                  << '\n';
    }

    void cmd_setgirth(const Output & o, const Graph & g, const Options & opt)
    {
        auto r = edge_set_girth(g, edge_set(g, opt.edges));
        if (o.json_mode())
            o.emit(io::girth_json(r));
        else
            o.out << girth_text(r) << '\n';
    }

    void cmd_balance(const Output & o, const Graph & g, const Options & opt)
    {
        if (opt.bound < 3)
            throw InputError("--bound must be at least 3");
        auto b = check_balance(g, oriented_set(g, opt.estar), opt.bound, o.common.budget_cycles);
        if (o.json_mode())
            o.emit(io::balance_json(b));
        else if (b.balanced)
            o.out << "balanced on every cycle shorter than " << opt.bound << '\n';
        else
            o.out << "unbalanced on cycle " << cycle_text(*b.witness) << '\n';
    }

    void cmd_dpgood(const Output & o, const Graph & g, const Options & opt)
    {
        if (!opt.cert_path.empty()) {
            auto cert = io::certificate_from_json(g, read_json_file(opt.cert_path));
            auto check = verify_dp_good_certificate(g, cert);
            if (o.json_mode())
                o.emit({{"valid", check.ok()}, {"fault", std::string(to_string(check.fault))},
                        {"position", check.position}, {"reason", check.reason}});
            else if (check.ok())
                o.out << "certificate valid\n";
            else
                o.out << "certificate invalid: " << to_string(check.fault) << " at position " << check.position
                      << " (" << check.reason << ")\n";
            return;
        }
        emit_verdicts(o, g, {check_dp_good(g, o.common.budget_trees)}, false);
    }

    void cmd_vorder(const Output & o, const Graph & g, const Options & opt)
    {
        std::optional<std::vector<Vertex>> order;
        if (!opt.order.empty())
            order = index_list(opt.order);
        emit_verdicts(o, g, {check_vertex_order(g, order)}, false);
    }

    void cmd_thm5(const Output & o, const Graph & g, const Options & opt)
    {
        emit_verdicts(o, g, {check_balanced_orientation(g, oriented_set(g, opt.estar), o.common.budget_cycles)}, false);
    }

    void cmd_cor5(const Output & o, const Graph & g, const Options & opt)
    {
        emit_verdicts(o, g,
                      {check_separated_sides(g, index_list(opt.side_one), index_list(opt.side_two), edge_set(g, opt.edges),
                                        o.common.budget_cycles)},
                      false);
    }

    void cmd_classify(const Output & o, const Graph & g, const Options & opt)
    {
        Budgets budgets;
        budgets.trees = o.common.budget_trees;
        budgets.cycles = o.common.budget_cycles;
        std::vector<BipartiteCandidate> extra;
        if (!opt.edges.empty())
            extra.push_back({index_list(opt.side_one), index_list(opt.side_two), edge_set(g, opt.edges)});
        emit_verdicts(o, g, classify(g, budgets, extra), true);
    }

} // namespace

int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Chromatic polynomials, DP colour functions and sufficient-condition checks for small graphs",
                 "dp-chroma"};
    app.require_subcommand(1);
    Options opt;

    using Handler = std::function<void(const Output &, const Graph &, const Options &)>;
    std::map<CLI::App *, Handler> handlers;

    auto add = [&](const std::string & name, const std::string & help, Handler h) {
        auto * sub = app.add_subcommand(name, help);
        auto & c = opt.common;
        sub->add_option("--fixture", c.fixture,
                        "cycle:n, path:n, complete:n, complete_multipartite:a,b,..., fig1, fig3b");
        sub->add_option("--graph", c.graph_path, "edge-list file");
        sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--budget-covers", c.budget_covers, "cover budget for dpexact");
        sub->add_option("--budget-cycles", c.budget_cycles, "cycle enumeration cap");
        sub->add_option("--budget-trees", c.budget_trees, "spanning tree budget");
        sub->add_option("--jobs", c.jobs, "parallel workers for dpexact")->check(CLI::PositiveNumber);
        handlers[sub] = std::move(h);
        return sub;
    };

    add("chromatic", "chromatic polynomial", cmd_chromatic)->add_option("--at", opt.at, "evaluate at m");
    add("dpcount", "count colourings of a cover", cmd_dpcount)
        ->add_option("--cover", opt.cover_path, "cover JSON file")
        ->required();
    add("dpexact", "exact DP colour function by cover search", cmd_dpexact)
        ->add_option("--m", opt.folds, "fold count")
        ->required();
    {
        auto * s = add("twist", "count colourings of the cyclic-shift cover", cmd_twist);
        s->add_option("--estar", opt.estar, "edges: i or tail>head, comma separated")->required();
        s->add_option("--m", opt.folds, "fold count(s)")->required();
    }
    add("girth", "girth of one edge (or all edges)", cmd_girth)->add_option("--edge", opt.edge, "edge index");
    add("setgirth", "girth of an edge set", cmd_setgirth)
        ->add_option("--edges", opt.edges, "edge indices, comma separated")
        ->required();
    {
        auto * s = add("balance", "balance of an oriented edge set on short cycles", cmd_balance);
        s->add_option("--estar", opt.estar, "edges: i or tail>head")->required();
        s->add_option("--bound", opt.bound, "check cycles shorter than this")->required();
    }
    add("dpgood", "search for (or verify with --cert) a DP-good certificate", cmd_dpgood)
        ->add_option("--cert", opt.cert_path, "certificate JSON to verify");
    add("vorder", "connected back-neighbourhood vertex order", cmd_vorder)
        ->add_option("--order", opt.order, "vertex order to check, comma separated");
    add("thm5", "even edge-set girth with balanced orientation", cmd_thm5)
        ->add_option("--estar", opt.estar, "edges: i or tail>head")
        ->required();
    {
        auto * s = add("cor5", "bipartite edge set without crossing arcs", cmd_cor5);
        s->add_option("--v1", opt.side_one, "first vertex set")->required();
        s->add_option("--v2", opt.side_two, "second vertex set")->required();
        s->add_option("--edges", opt.edges, "edge indices between the sets")->required();
    }
    {
        auto * s = add("classify", "run every sufficient-condition check", cmd_classify);
        s->add_option("--v1", opt.side_one, "extra candidate: first vertex set");
        s->add_option("--v2", opt.side_two, "extra candidate: second vertex set");
        s->add_option("--edges", opt.edges, "extra candidate: edge indices");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    }
    catch (const CLI::ParseError & ex) {
        err << "error: " << ex.what() << "\n\n" << app.help();
        return exit_input_error;
    }

    try {
        CLI::App * chosen = app.get_subcommands().front();
        Graph g = load_graph(opt.common);
        handlers.at(chosen)(Output{opt.common, out}, g, opt);
        return exit_ok;
    }
    catch (const InputError & ex) {
        err << "error: " << ex.what() << "\n\n" << app.help();
        return exit_input_error;
    }
    catch (const BudgetExceeded & ex) {
        err << "budget exceeded: " << ex.what() << '\n';
        return exit_budget;
    }
    catch (const CountOverflow & ex) {
        err << "budget exceeded: " << ex.what() << '\n';
        return exit_budget;
    }
}

} // namespace dpchroma::cli
