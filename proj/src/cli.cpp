#include "pert/cli.hpp"

#include "pert/error.hpp"
#include "pert/graphs.hpp"
#include "pert/io.hpp"
#include "pert/realise.hpp"
#include "pert/service.hpp"
#include "pert/session.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace pert::cli {

namespace {

struct Options {
    std::size_t max_chains = kDefaultMaxChains;
    std::size_t max_terms = 64;
    bool dot = false;
    bool serial = false;
    bool dump_systems = false;
    bool normalize = false;
    std::string input = "-";
    std::string costs;
    std::string poly_file;
    std::string network_file;
    std::string direction;
    int activity = 0;
    int n = 0;
    int k = 0;
    int limit = kDefaultRealiseLimit;
    int port = 8080;
    std::string host = "127.0.0.1";
    std::vector<std::string> factors;
};

class Context {
public:
    Context(const Options& o, std::istream& in, std::ostream& out) : o_(o), in_(in), out_(out) {}

    std::string read(const std::string& path) {
        if (path == "-") return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
        std::ifstream f(path);
        if (!f) throw Error(ErrorKind::Input, "IOError", "cannot read " + path);
        return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
    }

    io::json read_json(const std::string& path) {
        auto text = read(path);
        auto j = io::json::parse(text, nullptr, false);
        if (j.is_discarded()) throw Error(ErrorKind::Input, "MalformedInput", path + " is not valid JSON");
        return j;
    }

    ProjectNetwork network(const std::string& path) {
        return io::network_from_json(read_json(path), {o_.normalize});
    }

    TropicalPolynomial polynomial(const std::string& path) { return io::read_polynomial(read(path), o_.max_chains); }

    // Polynomial plus a cost vector: --costs wins, then network costs.
    std::pair<TropicalPolynomial, CostVector> polynomial_and_costs(const std::string& path) {
        auto text = read(path);
        auto j = io::json::parse(text, nullptr, false);
        std::optional<CostVector> costs;
        std::optional<TropicalPolynomial> f;
        if (!j.is_discarded() && j.is_object() && j.contains("activities")) {
            auto net = io::network_from_json(j, {o_.normalize});
            costs = net.costs();
            f = eft_polynomial(net, o_.max_chains);
        } else {
            f = io::read_polynomial(text, o_.max_chains);
        }
        if (!o_.costs.empty()) costs = io::parse_costs(o_.costs);
        if (!costs) throw Error(ErrorKind::Input, "MissingCosts", "--costs is required for a polynomial input");
        return {std::move(*f), std::move(*costs)};
    }

    void emit(const io::json& j) { out_ << j.dump() << "\n"; }
    void emit(const std::string& s) { out_ << s; }

    const Options& options() const { return o_; }

private:
    const Options& o_;
    std::istream& in_;
    std::ostream& out_;
};

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Input:
    case ErrorKind::Dimension: return 2;
    case ErrorKind::Domain:
    case ErrorKind::Limit: return 1;
    }
    return 2;
}

LabeledGraph compute_graph(Context& ctx, bool newton, std::ostream& err) {
    const auto& o = ctx.options();
    auto f = ctx.polynomial(o.input);
    answers::check_term_budget(f, o.max_terms);
    if (o.dump_systems) {
        for (std::size_t a = 0; a < f.size(); ++a)
            for (std::size_t b = a + 1; b < f.size(); ++b) {
                err << "# " << format_term(f.term(a)) << " " << format_term(f.term(b)) << "\n";
                err << dump_system(newton ? newton_edge_system(f, a, b) : adjacency_system(f, a, b));
            }
    }
    const auto exec = o.serial ? Execution::Serial : Execution::Parallel;
    return newton ? newton_skeleton(f, exec) : adjacency_graph(f, exec);
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Tropical analysis of PERT project networks", "pertgeo"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.add_option("--max-chains", o.max_chains, "Cap on enumerated paths");
    app.add_option("--max-terms", o.max_terms, "Term budget for adjacency/Newton graphs");

    auto input_opt = [&](CLI::App* sub) {
        sub->add_option("-i,--input", o.input, "Input file, '-' for stdin");
        sub->fallthrough();
        return sub;
    };

    auto* validate = input_opt(app.add_subcommand("validate", "Validate a network file"));
    validate->add_flag("--normalize", o.normalize, "Drop short-cut arcs instead of rejecting them");
    auto* paths = input_opt(app.add_subcommand("paths", "List maximal chains (paths)"));
    auto* eft = input_opt(app.add_subcommand("eft", "Earliest-finishing-time polynomial and critical paths"));
    eft->add_option("--costs", o.costs, "Override costs, e.g. 5,3,3/2");
    auto* realise_cmd = input_opt(app.add_subcommand("realise", "Find a PERT chart for a polynomial"));
    realise_cmd->add_option("--limit", o.limit, "Largest variable count to search");
    auto* verify = app.add_subcommand("verify", "Check a chart realises a polynomial");
    verify->add_option("--poly", o.poly_file)->required();
    verify->add_option("--network", o.network_file)->required();
    verify->fallthrough();
    auto* adjacency = input_opt(app.add_subcommand("adjacency", "Adjacency graph G(F)"));
    auto* newton = input_opt(app.add_subcommand("newton", "Newton polytope skeleton N(F)"));
    for (auto* sub : {adjacency, newton}) {
        sub->add_flag("--dot", o.dot, "Emit Graphviz DOT");
        sub->add_flag("--serial", o.serial, "Use the serial reference kernel");
        sub->add_flag("--dump-systems", o.dump_systems, "Print each feasibility system to stderr");
    }
    paths->add_flag("--dot", o.dot, "Emit the Hasse diagram as DOT");
    validate->add_flag("--dot", o.dot, "Emit the Hasse diagram as DOT");
    auto* whatif = input_opt(app.add_subcommand("whatif", "Critical-path transitions when one cost moves"));
    whatif->add_option("--activity", o.activity)->required();
    whatif->add_option("--direction", o.direction)->required()->check(CLI::IsMember({"up", "down"}));
    whatif->add_option("--costs", o.costs, "Cost vector, e.g. 5,3,3,4,2,4");
    auto* gen = app.add_subcommand("gen-fnk", "All k-subsets of [n]");
    gen->add_option("n", o.n)->required();
    gen->add_option("k", o.k)->required();
    auto* dual_cmd = input_opt(app.add_subcommand("dual", "Complement every term"));
    auto* product_cmd = app.add_subcommand("product", "Product of polynomials in disjoint variables");
    product_cmd->add_option("factors", o.factors, "Polynomial files")->required()->expected(2, 64);
    auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
    serve_cmd->add_option("--port", o.port);
    serve_cmd->add_option("--host", o.host);
    serve_cmd->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    Context ctx(o, in, out);
    try {
        if (*validate) {
            auto net = ctx.network(o.input);
            if (o.dot)
                ctx.emit(io::network_to_dot(net));
            else
                ctx.emit(io::network_to_json(net));
        } else if (*paths) {
            auto net = ctx.network(o.input);
            ctx.emit(io::json{{"paths", io::terms_to_json(maximal_chains(net, o.max_chains))}});
        } else if (*eft) {
            auto [f, t] = ctx.polynomial_and_costs(o.input);
            ctx.emit(answers::eft(f, t));
        } else if (*realise_cmd) {
            auto f = ctx.polynomial(o.input);
            auto r = realise(f, o.limit);
            if (!r.witness) {
                err << io::realisation_failure_to_json(r.reason).dump() << "\n";
                return 1;
            }
            ctx.emit(io::network_to_json(*r.witness));
        } else if (*verify) {
            auto f = ctx.polynomial(o.poly_file);
            auto net = ctx.network(o.network_file);
            bool okay = verify_realisation(f, net);
            ctx.emit(io::json{{"verified", okay}});
            return okay ? 0 : 1;
        } else if (*adjacency || *newton) {
            const bool is_newton = static_cast<bool>(*newton);
            auto g = compute_graph(ctx, is_newton, err);
            if (o.dot)
                ctx.emit(io::graph_to_dot(g, is_newton ? "newton" : "adjacency"));
            else
                ctx.emit(answers::graph(g));
        } else if (*whatif) {
            auto [f, t] = ctx.polynomial_and_costs(o.input);
            answers::check_term_budget(f, o.max_terms);
            auto g = adjacency_graph(f);
            ctx.emit(answers::whatif(f, g, t, o.activity, answers::parse_direction(o.direction)));
        } else if (*gen) {
            ctx.emit(io::poly_to_json(gen_fnk(o.n, o.k)));
        } else if (*dual_cmd) {
            ctx.emit(io::poly_to_json(dual(ctx.polynomial(o.input))));
        } else if (*product_cmd) {
            auto f = ctx.polynomial(o.factors.front());
            for (std::size_t k = 1; k < o.factors.size(); ++k) f = product(f, ctx.polynomial(o.factors[k]));
            ctx.emit(io::poly_to_json(f));
        } else if (*serve_cmd) {
            if (!serve(o.host, o.port, {o.max_chains, o.max_terms})) {
                err << io::json{{"error", "IOError"}, {"message", "cannot bind port " + std::to_string(o.port)}}.dump()
                    << "\n";
                return 2;
            }
        }
    } catch (const Error& e) {
        err << io::json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << io::json{{"error", "InternalError"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }
    return 0;
}

} // namespace pert::cli
