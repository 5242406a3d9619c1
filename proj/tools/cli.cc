#include "cli.hh"

#include <vecchoose/constructions.hh>
#include <vecchoose/errors.hh>
#include <vecchoose/hardness.hh>
#include <vecchoose/io.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>

using namespace vecchoose;

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace fs = std::filesystem;

namespace
{
    struct Settings
    {
        string field = "2";
        std::uint64_t seed = 0;
        std::uint64_t budget_nodes = 0;
        double budget_seconds = 300;
        string out_dir;
        string format = "text";
        bool with_assignment = false;
        bool require_choice = false;

        string graph_path, assignment_path, choice_path, cnf_path;
        string kind;
        vector<size_t> params;
        string experiment;
        size_t k = 0, seeds = 0;
    };

    /// Thrown for bad input; maps to the usage exit code.
    struct UsageError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    template <typename Parse>
    auto read_input(const string & path, Parse && parse)
    {
        string text;
        try {
            text = read_file(path);
        }
        catch (const IoError & e) {
            throw UsageError(e.what());
        }
        try {
            return parse(text);
        }
        catch (const Error & e) {
            throw UsageError(path + ": " + e.what());
        }
    }

    auto load_graph(const string & path) -> Graph
    {
        return read_input(path, [] (const string & text) { return parse_graph(text); });
    }

    auto load_assignment(const Graph & g, const string & path) -> SubspaceAssignment
    {
        return read_input(path, [&] (const string & text) { return parse_assignment(g, text); });
    }

    auto parse_field(const string & text) -> Field
    {
        try {
            return Field::parse(text);
        }
        catch (const Error & e) {
            throw UsageError(string("--field: ") + e.what());
        }
    }

    auto thread_cap() -> size_t
    {
        const char * value = std::getenv("VECCHOOSE_THREADS");
        if (! value || ! *value)
            return 1;
        char * end = nullptr;
        long n = std::strtol(value, &end, 10);
        if (*end || n < 1)
            throw UsageError("VECCHOOSE_THREADS must be a positive integer");
        return size_t(n);
    }

    class Output
    {
        private:
            fs::path _dir;
            std::ostream & _out;

        public:
            Output(const string & dir, std::ostream & out) : _dir(dir), _out(out)
            {
                if (! dir.empty()) {
                    std::error_code ec;
                    fs::create_directories(_dir, ec);
                    if (ec)
                        throw UsageError("cannot create " + dir + ": " + ec.message());
                }
            }

            auto has_dir() const -> bool { return ! _dir.empty(); }

            auto write(const string & name, const string & content) -> void
            {
                if (_dir.empty())
                    throw UsageError("--out is required");
                write_file_atomic(_dir / name, content);
                _out << "wrote " << (_dir / name).string() << "\n";
            }

            auto graph(const Graph & g, const string & format) -> void
            {
                write("graph.txt", print_graph(g));
                if (format == "dot")
                    write("graph.dot", print_dot(g));
            }
    };

    auto check_rational(const SubspaceAssignment & a, std::ostream & out) -> int
    {
        RealCycleVerdict verdict;
        try {
            verdict = real_cycle_choice(a);
        }
        catch (const PreconditionViolated & e) {
            throw UsageError(string("over Q only cycles of 2-dimensional subspaces are decided: ") + e.what());
        }
        out << "verdict " << (verdict.witness ? "choosable" : "no_choice") << "\n";
        out << "method cycle_obstruction\n";
        out << "real_choice " << (verdict.exists ? "yes" : "no") << "\n";
        if (verdict.obstruction)
            out << "polynomial " << verdict.obstruction->polynomial.to_string() << "\n";
        if (verdict.degenerate_step)
            out << "degenerate_step " << *verdict.degenerate_step << "\n";
        out << "field Q\nambient " << a.ambient << "\n";
        if (verdict.witness)
            out << "witness " << verdict.witness->size() << "\n" << print_choice(*verdict.witness);
        return cli::success;
    }

    auto run_check(const Settings & s, std::ostream & out) -> int
    {
        auto g = load_graph(s.graph_path);
        auto a = load_assignment(g, s.assignment_path);
        if (a.field.is_rationals())
            return check_rational(a, out);

        SearchOptions options;
        options.seed = s.seed;
        options.node_budget = s.budget_nodes;
        options.time_budget_seconds = s.budget_seconds;
        auto cert = find_choice(a, options);
        string text = s.format == "csv"
            ? "verdict,nodes,order,seed\n" + verdict_name(cert.verdict) + "," + std::to_string(cert.nodes) + ","
                + cert.order + "," + std::to_string(cert.seed) + "\n"
            : print_certificate(cert, a.field, a.ambient);
        out << text;
        Output files(s.out_dir, out);
        if (files.has_dir())
            files.write(s.format == "csv" ? "certificate.csv" : "certificate.txt", text);
        if (cert.verdict == Verdict::inconclusive)
            return cli::budget;
        if (cert.verdict == Verdict::no_choice && s.require_choice)
            return cli::refuted;
        return cli::success;
    }

    auto run_verify(const Settings & s, std::ostream & out) -> int
    {
        auto g = load_graph(s.graph_path);
        auto a = load_assignment(g, s.assignment_path);
        auto c = read_input(s.choice_path, [&] (const string & text) {
            return parse_choice(a.field, a.ambient, g.size(), text);
        });
        auto report = verify_choice(a, c);
        if (report.valid) {
            out << "valid\n";
            return cli::success;
        }
        out << "invalid\n";
        if (report.bad_vertex)
            out << "vertex " << *report.bad_vertex << "\n";
        if (report.bad_edge)
            out << "edge " << report.bad_edge->first << " " << report.bad_edge->second << "\n";
        out << "reason " << report.reason << "\n";
        return cli::refuted;
    }

    auto run_construct(const Settings & s, std::ostream & out) -> int
    {
        Field field = parse_field(s.field);
        Output files(s.out_dir, out);
        auto need = [&] (size_t count, const string & shape) {
            if (s.params.size() != count)
                throw UsageError("construct " + s.kind + " takes " + shape);
        };

        if (s.kind == "cycle_bad") {
            need(1, "<l>");
            auto a = cycle_bad_assignment(s.params[0], field);
            files.graph(a.graph, s.format);
            files.write("assignment.txt", print_assignment(a));
            return cli::success;
        }
        if (s.kind == "exists") {
            need(2, "<n1> <n2>");
            auto h = build_exists_graph(s.params[0], s.params[1]);
            files.graph(h.graph, s.format);
            files.write("f.txt", print_dimensions(h.f));
            if (s.with_assignment)
                files.write("assignment.txt", print_assignment(gadget_forcing_assignment(h, field, 8, 8)));
            return cli::success;
        }
        if (s.kind == "partition") {
            if (s.params.empty())
                throw UsageError("construct partition takes <q> [removed vertices...]");
            vector<size_t> removed(s.params.begin() + 1, s.params.end());
            auto p = projective_plane_partition(std::uint32_t(s.params[0]), removed);
            files.graph(p.partition.graph, s.format);
            files.write("partition.txt", print_partition(p.partition));
            if (s.with_assignment)
                files.write("assignment.txt", print_assignment(partition_assignment(p.partition, field)));
            out << "lines_used " << p.lines_used << "\ncertified " << (p.certified ? "yes" : "no") << "\n";
            return cli::success;
        }
        AdversarialKind kind;
        try {
            kind = parse_adversarial_kind(s.kind);
        }
        catch (const InvalidParameter &) {
            throw UsageError("unknown construction '" + s.kind + "'; expected cycle_bad, exists, partition, "
                    "coordinate_blocks, tensor, vandermonde, projective_reps, ksubsets or even_block");
        }
        auto a = adversarial_assignment(kind, field, s.params);
        files.graph(a.graph, s.format);
        files.write("assignment.txt", print_assignment(a));
        return cli::success;
    }

    auto run_reduce(const Settings & s, std::ostream & out) -> int
    {
        auto cnf = read_input(s.cnf_path, [] (const string & text) { return parse_dimacs(text); });
        auto r = build_reduction(cnf);
        Output files(s.out_dir, out);
        files.graph(r.graph, s.format);
        files.write("f.txt", print_dimensions(r.f));
        files.write("labels.txt", print_labels(r.graph));
        if (s.with_assignment)
            files.write("assignment.txt", print_assignment(reduction_unsat_assignment(r, parse_field(s.field))));
        out << "vertices " << r.graph.size() << "\nedges " << r.graph.edges().size() << "\n";
        return cli::success;
    }

    auto run_experiment(const Settings & s, std::ostream & out, std::ostream & err) -> int
    {
        if (s.experiment != "partitions")
            throw UsageError("unknown experiment '" + s.experiment + "'");
        auto g = load_graph(s.graph_path);
        if (s.k == 0)
            throw UsageError("k must be positive");
        std::uint64_t budget = s.budget_nodes ? s.budget_nodes : 10'000'000;
        string csv = "seed,verdict,method,examined\n";
        size_t yes = 0, refuted = 0, open = 0;
        for (std::uint64_t seed = s.seed ; seed < s.seed + s.seeds ; ++seed) {
            auto p = random_edge_partition(g, s.k, seed);
            PartitionCheck check;
            string method = "exhaustive";
            try {
                check = check_k_partitioned_exhaustive(p, budget);
            }
            catch (const BudgetExceeded &) {
                method = "randomized";
                check = check_k_partitioned_randomized(p, seed, 10'000);
            }
            ++(check.verdict == PartitionVerdict::certified_yes ? yes : check.verdict == PartitionVerdict::refuted ? refuted : open);
            csv += std::to_string(seed) + "," + partition_verdict_name(check.verdict) + "," + method + ","
                + std::to_string(check.examined) + "\n";
        }
        Output files(s.out_dir, out);
        if (files.has_dir())
            files.write("partitions.csv", csv);
        else
            out << csv;
        err << "certified_yes " << yes << ", refuted " << refuted << ", inconclusive " << open << "\n";
        return cli::success;
    }
}

auto cli::run(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
{
    Settings s;
    CLI::App app{ "Orthogonal vector choices for subspace assignments", "vecchoose" };
    app.require_subcommand(1);

    auto common = [&] (CLI::App * sub) {
        sub->add_option("--field", s.field, "Field: a prime or Q");
        sub->add_option("--seed", s.seed, "Seed recorded in outputs");
        sub->add_option("--budget-nodes", s.budget_nodes, "Search node limit")->check(CLI::PositiveNumber);
        sub->add_option("--budget-seconds", s.budget_seconds, "Search time limit")->check(CLI::PositiveNumber);
        sub->add_option("--out", s.out_dir, "Output directory");
        sub->add_option("--format", s.format, "Output format")->check(CLI::IsMember({ "text", "csv", "dot" }));
        sub->add_flag("--with-assignment", s.with_assignment, "Also write an assignment file");
    };

    auto check = app.add_subcommand("check", "Search for a choice of an assignment");
    common(check);
    check->add_option("graph", s.graph_path)->required();
    check->add_option("assignment", s.assignment_path)->required();
    check->add_flag("--require-choice", s.require_choice, "Exit 1 when no choice exists");

    auto construct = app.add_subcommand("construct", "Write a named construction");
    common(construct);
    construct->add_option("kind", s.kind)->required();
    construct->add_option("params", s.params);

    auto reduce = app.add_subcommand("reduce", "Compile a 3-CNF formula into a graph");
    common(reduce);
    reduce->add_option("cnf", s.cnf_path)->required();

    auto experiment = app.add_subcommand("experiment", "Sweep random edge partitions");
    common(experiment);
    experiment->add_option("name", s.experiment)->required();
    experiment->add_option("graph", s.graph_path)->required();
    experiment->add_option("k", s.k)->required();
    experiment->add_option("seeds", s.seeds)->required();

    auto verify = app.add_subcommand("verify", "Check a choice against an assignment");
    common(verify);
    verify->add_option("graph", s.graph_path)->required();
    verify->add_option("assignment", s.assignment_path)->required();
    verify->add_option("choice", s.choice_path)->required();

    try {
        vector<string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? success : usage;
    }

    try {
        thread_cap();
        if (check->parsed())
            return run_check(s, out);
        if (construct->parsed())
            return run_construct(s, out);
        if (reduce->parsed())
            return run_reduce(s, out);
        if (experiment->parsed())
            return run_experiment(s, out, err);
        return run_verify(s, out);
    }
    catch (const UsageError & e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    catch (const BudgetExceeded & e) {
        err << "budget exceeded: " << e.what() << "\n";
        return budget;
    }
    catch (const Error & e) {
        err << "error: " << e.kind() << ": " << e.what() << "\n";
        return usage;
    }
}
