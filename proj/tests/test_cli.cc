#include <doctest.h>

#include "cli.hh"

#include <vecchoose/constructions.hh>
#include <vecchoose/io.hh>

#include <filesystem>
#include <sstream>

using namespace vecchoose;

namespace fs = std::filesystem;

namespace
{
    struct Result
    {
        int code;
        std::string out, err;
    };

    auto run(std::vector<std::string> args) -> Result
    {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return { code, out.str(), err.str() };
    }

    struct Scratch
    {
        fs::path dir;

        explicit Scratch(const std::string & name) : dir(fs::temp_directory_path() / ("vecchoose_cli_" + name))
        {
            fs::remove_all(dir);
            fs::create_directories(dir);
        }

        ~Scratch() { fs::remove_all(dir); }

        auto operator/ (const std::string & name) const -> std::string { return (dir / name).string(); }
    };

    const char * one_clause = "p cnf 3 1\n1 2 3 0\n";
}

TEST_CASE("check on the bad triangle")
{
    Scratch s("check");
    auto r = run({ "construct", "cycle_bad", "3", "--field", "3", "--out", s / "tri" });
    REQUIRE(r.code == 0);
    r = run({ "check", s / "tri/graph.txt", s / "tri/assignment.txt" });
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict no_choice") == 0);
    CHECK(run({ "check", s / "tri/graph.txt", s / "tri/assignment.txt", "--require-choice" }).code == 1);

    run({ "construct", "cycle_bad", "3", "--field", "Q", "--out", s / "q" });
    r = run({ "check", s / "q/graph.txt", s / "q/assignment.txt" });
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict no_choice") == 0);
    CHECK(r.out.find("real_choice no") != std::string::npos);

    run({ "construct", "even_block", "4", "--field", "Q", "--out", s / "qb" });
    CHECK(run({ "check", s / "qb/graph.txt", s / "qb/assignment.txt" }).code == 2);
}

TEST_CASE("reduce and check the one-clause formula")
{
    Scratch s("reduce");
    write_file_atomic(s / "one.cnf", one_clause);
    auto r = run({ "reduce", s / "one.cnf", "--out", s / "red", "--with-assignment", "--field", "2", "--format", "dot" });
    REQUIRE(r.code == 0);
    auto g = parse_graph(read_file(s / "red/graph.txt"));
    CHECK(g.size() == 43);
    CHECK(fs::exists(s / "red/graph.dot"));
    CHECK(parse_dimensions(43, read_file(s / "red/f.txt")).size() == 43);
    CHECK(read_file(s / "red/labels.txt").find("l 0 x1.in") == 0);

    r = run({ "check", s / "red/graph.txt", s / "red/assignment.txt", "--seed", "7", "--out", s / "c1" });
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict choosable") == 0);
    run({ "check", s / "red/graph.txt", s / "red/assignment.txt", "--seed", "7", "--out", s / "c2" });
    CHECK(read_file(s / "c1/certificate.txt") == read_file(s / "c2/certificate.txt"));
    CHECK(read_file(s / "c1/certificate.txt").find("seed 7") != std::string::npos);

    // the certificate's witness is a choice file body
    auto cert = parse_certificate(read_file(s / "c1/certificate.txt"));
    REQUIRE(cert.certificate.witness);
    write_file_atomic(s / "choice.txt", print_choice(*cert.certificate.witness));
    r = run({ "verify", s / "red/graph.txt", s / "red/assignment.txt", s / "choice.txt" });
    CHECK(r.code == 0);
    CHECK(r.out == "valid\n");
}

TEST_CASE("verify names the bad edge of a corrupted choice")
{
    Scratch s("verify");
    Result r;
    write_file_atomic(s / "k2.txt", "graph 2 1\ne 0 1\n");
    write_file_atomic(s / "k2a.txt", "field 2\nambient 2\nv 0 dim 1\n1 1\nv 1 dim 1\n1 1\n");
    write_file_atomic(s / "k2c.txt", "v 0\n1 1\nv 1\n1 0\n");
    r = run({ "verify", s / "k2.txt", s / "k2a.txt", s / "k2c.txt" });
    CHECK(r.code == 1);
    CHECK(r.out.find("vertex 1") != std::string::npos);
    write_file_atomic(s / "k2a.txt", "field 3\nambient 2\nv 0 dim 1\n1 0\nv 1 dim 1\n1 1\n");
    write_file_atomic(s / "k2c.txt", "v 0\n1 0\nv 1\n1 1\n");
    r = run({ "verify", s / "k2.txt", s / "k2a.txt", s / "k2c.txt" });
    CHECK(r.code == 1);
    CHECK(r.out.find("edge 0 1") != std::string::npos);
}

TEST_CASE("usage errors and budgets")
{
    Scratch s("usage");
    CHECK(run({}).code == 2);
    CHECK(run({ "frobnicate" }).code == 2);
    CHECK(run({ "check", s / "missing.txt", s / "missing.txt" }).code == 2);
    write_file_atomic(s / "bad.txt", "graph 2 1\ne 0 5\n");
    auto r = run({ "check", s / "bad.txt", s / "bad.txt" });
    CHECK(r.code == 2);
    CHECK(r.err.find("bad.txt: ParseError: line 2") != std::string::npos);
    CHECK(run({ "construct", "nonsense", "--out", s / "x" }).code == 2);
    CHECK(run({ "construct", "cycle_bad", "3", "--field", "4", "--out", s / "x" }).code == 2);
    CHECK(run({ "check", "a", "b", "--budget-nodes", "0" }).code == 2);
    CHECK(run({ "check", "a", "b", "--format", "xml" }).code == 2);
    CHECK(run({ "construct", "cycle_bad", "3" }).code == 2);

    run({ "construct", "ksubsets", "3", "--field", "2", "--out", s / "ks" });
    r = run({ "check", s / "ks/graph.txt", s / "ks/assignment.txt", "--budget-nodes", "1" });
    CHECK(r.code == 3);
    CHECK(r.out.find("verdict inconclusive") == 0);
    r = run({ "check", s / "ks/graph.txt", s / "ks/assignment.txt", "--format", "csv" });
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict,nodes,order,seed\nno_choice,") == 0);
}

TEST_CASE("partition experiment sweep")
{
    Scratch s("experiment");
    write_file_atomic(s / "k4.txt", print_graph(complete_graph(4)));
    auto r = run({ "experiment", "partitions", s / "k4.txt", "2", "5", "--seed", "10" });
    CHECK(r.code == 0);
    CHECK(r.out.find("seed,verdict,method,examined\n10,") == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
    CHECK(run({ "experiment", "partitions", s / "k4.txt", "2", "5", "--seed", "10" }).out == r.out);
    CHECK(run({ "experiment", "colourings", s / "k4.txt", "2", "5" }).code == 2);

    r = run({ "construct", "partition", "2", "--field", "2", "--with-assignment", "--out", s / "fano" });
    CHECK(r.code == 0);
    CHECK(r.out.find("certified yes") != std::string::npos);
    auto g = parse_graph(read_file(s / "fano/graph.txt"));
    CHECK(g.size() == 6);
    auto p = parse_partition(g, read_file(s / "fano/partition.txt"));
    CHECK(p.k == 2);
    CHECK(parse_assignment(g, read_file(s / "fano/assignment.txt")) == partition_assignment(p, Field::prime(2)));
}

TEST_CASE("every construction writes re-readable files")
{
    Scratch s("construct");
    std::vector<std::vector<std::string>> kinds = {
        { "coordinate_blocks", "2", "2" }, { "tensor", "2", "2", "3" }, { "vandermonde", "3", "2" },
        { "projective_reps", "2", "2" }, { "ksubsets", "2" }, { "even_block", "4" }, { "cycle_bad", "5" },
    };
    for (auto & kind : kinds) {
        auto args = kind;
        args.insert(args.begin(), "construct");
        args.insert(args.end(), { "--field", "5", "--out", s / kind[0] });
        REQUIRE(run(args).code == 0);
        auto graph_text = read_file(s / (kind[0] + "/graph.txt"));
        auto g = parse_graph(graph_text);
        CHECK(print_graph(g) == graph_text);
        auto assignment_text = read_file(s / (kind[0] + "/assignment.txt"));
        CHECK(print_assignment(parse_assignment(g, assignment_text)) == assignment_text);
    }
}
