#include <doctest.h>

#include "support.hh"

#include <vecchoose/constructions.hh>
#include <vecchoose/errors.hh>
#include <vecchoose/hardness.hh>
#include <vecchoose/io.hh>

#include <algorithm>
#include <filesystem>
#include <numeric>

using namespace vecchoose;
using namespace testing;

namespace
{
    auto random_graph(std::size_t n, double density, std::mt19937_64 & rng) -> Graph
    {
        Graph g(n);
        std::bernoulli_distribution keep(density);
        for (std::size_t u = 0 ; u < n ; ++u)
            for (std::size_t v = u + 1 ; v < n ; ++v)
                if (keep(rng))
                    g.add_edge(u, v);
        return g;
    }

    auto random_field(std::mt19937_64 & rng) -> Field
    {
        static const std::uint64_t primes[] = { 2, 3, 5, 7, 0 };
        auto p = primes[rng() % 5];
        return p ? gf(p) : Field::rationals();
    }
}

TEST_CASE("graph files round-trip")
{
    std::mt19937_64 rng(1);
    for (int trial = 0 ; trial < 50 ; ++trial) {
        auto g = random_graph(1 + trial % 9, 0.4, rng);
        if (trial % 3 == 0)
            g.set_label(0, "vertex zero " + std::to_string(trial));
        auto text = print_graph(g);
        auto back = parse_graph(text);
        CHECK(back == g);
        CHECK(print_graph(back) == text);
    }
    auto reduction = build_reduction(parse_dimacs("p cnf 3 1\n1 2 3 0\n"));
    CHECK(parse_graph(print_graph(reduction.graph)) == reduction.graph);
    CHECK(print_dot(path_graph(1)) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
}

TEST_CASE("graph parse errors carry line numbers")
{
    auto message = [] (const char * text) -> std::string {
        try {
            parse_graph(text);
        }
        catch (const ParseError & e) {
            return e.what();
        }
        return "";
    };
    CHECK(message("graph 2 1\ne 0 2\n").find("line 2") != std::string::npos);
    CHECK(message("graph 2 1\ne 0 0\n").find("line 2") != std::string::npos);
    CHECK(message("graph 2 1\n").find("end of input") != std::string::npos);
    CHECK(message("graf 2 1\n").find("line 1") != std::string::npos);
    CHECK(message("graph 2 0\n\n# comment\nx 0\n").find("line 4") != std::string::npos);
    CHECK(parse_graph("# leading comment\ngraph 2 1\r\ne 1 0\r\n").adjacent(0, 1));
}

TEST_CASE("assignment files round-trip")
{
    std::mt19937_64 rng(2);
    for (int trial = 0 ; trial < 50 ; ++trial) {
        auto g = random_graph(1 + trial % 6, 0.5, rng);
        auto f = random_field(rng);
        std::size_t t = 1 + trial % 5;
        DimensionMap dims;
        for (std::size_t v = 0 ; v < g.size() ; ++v)
            dims.push_back(rng() % (t + 1));
        auto a = random_assignment(g, f, t, dims, rng);
        auto text = print_assignment(a);
        auto back = parse_assignment(g, text);
        CHECK(back == a);
        CHECK(print_assignment(back) == text);
    }
    auto g = path_graph(1);
    CHECK_THROWS_AS(parse_assignment(g, "field 3\nambient 2\nv 0 dim 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_assignment(g, "field 3\nambient 2\nv 0 dim 1\n1 0\nv 0 dim 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_assignment(g, "field 3\nambient 2\nv 0 dim 2\n1 0\n2 0\nv 1 dim 0\n"), ParseError);
    CHECK_THROWS_AS(parse_assignment(g, "field 4\nambient 2\nv 0 dim 0\nv 1 dim 0\n"), ParseError);
    CHECK_THROWS_AS(parse_assignment(g, "field Q\nambient 2\nv 0 dim 1\n1/0 1\nv 1 dim 0\n"), ParseError);
    auto q = parse_assignment(g, "field Q\nambient 2\nv 1 dim 1\n2/4 -3\nv 0 dim 0\n");
    CHECK(q.spaces[1].contains(vec(Field::rationals(), { 1, -6 })));
}

TEST_CASE("choice, dimension and partition files round-trip")
{
    std::mt19937_64 rng(3);
    for (int trial = 0 ; trial < 50 ; ++trial) {
        auto f = random_field(rng);
        std::size_t n = 1 + trial % 7, t = 1 + trial % 4;
        Choice c;
        for (std::size_t v = 0 ; v < n ; ++v)
            c.push_back(random_vector(f, t, rng));
        auto text = print_choice(c);
        CHECK(parse_choice(f, t, n, text) == c);

        DimensionMap dims;
        for (std::size_t v = 0 ; v < n ; ++v)
            dims.push_back(2 + rng() % 2);
        CHECK(parse_dimensions(n, print_dimensions(dims)) == dims);

        auto g = random_graph(2 + trial % 6, 0.6, rng);
        auto p = random_edge_partition(g, 1 + trial % 3, trial);
        auto ptext = print_partition(p);
        auto back = parse_partition(g, ptext);
        CHECK(back == p);
        CHECK(print_partition(back) == ptext);
    }
    CHECK_THROWS_AS(parse_choice(gf(2), 2, 1, "v 0\n1 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_dimensions(2, "f 0 2\n"), ParseError);
    auto g = path_graph(1);
    CHECK_THROWS_AS(parse_partition(g, "partition 2\np 0 0:0\np 1\n"), ParseError);
    CHECK_THROWS_AS(parse_partition(g, "partition 2\np 0 0:2\np 1 0:0\n"), ParseError);
    CHECK_THROWS_AS(parse_partition(g, "partition 2\np 0 1:0\np 1 0:0\n"), ParseError);
}

TEST_CASE("certificates round-trip and reproduce")
{
    std::mt19937_64 rng(4);
    for (int trial = 0 ; trial < 50 ; ++trial) {
        auto f = gf(trial % 2 ? 2 : 3);
        auto g = random_graph(3 + trial % 4, 0.6, rng);
        auto a = random_assignment(g, f, 3, uniform_dims(g, 1 + trial % 2), rng);
        SearchOptions options;
        options.seed = trial;
        auto cert = find_choice(a, options);
        auto text = print_certificate(cert, f, a.ambient);
        CHECK(text == print_certificate(find_choice(a, options), f, a.ambient));
        auto back = parse_certificate(text);
        CHECK(back.certificate.verdict == cert.verdict);
        CHECK(back.certificate.witness == cert.witness);
        CHECK(back.field == f);
        CHECK(print_certificate(back.certificate, back.field, back.ambient) == text);
    }
    CHECK_THROWS_AS(parse_certificate("verdict maybe\n"), ParseError);
}

TEST_CASE("dimacs round-trip on random formulas")
{
    std::mt19937_64 rng(5);
    for (int trial = 0 ; trial < 50 ; ++trial) {
        Cnf cnf{ 3 + std::size_t(trial % 5), {} };
        for (int i = 0 ; i < trial % 7 ; ++i) {
            std::vector<std::size_t> vars(cnf.num_vars);
            std::iota(vars.begin(), vars.end(), 1);
            std::shuffle(vars.begin(), vars.end(), rng);
            cnf.clauses.push_back({ Literal{ vars[0], bool(rng() & 1) }, Literal{ vars[1], bool(rng() & 1) },
                    Literal{ vars[2], bool(rng() & 1) } });
        }
        auto text = print_dimacs(cnf);
        CHECK(parse_dimacs(text) == cnf);
        CHECK(print_dimacs(parse_dimacs(text)) == text);
    }
}

TEST_CASE("atomic writes")
{
    auto dir = std::filesystem::temp_directory_path() / "vecchoose_io_test";
    std::filesystem::create_directories(dir);
    auto path = dir / "graph.txt";
    write_file_atomic(path, "graph 1 0\n");
    write_file_atomic(path, "graph 2 0\n");
    CHECK(read_file(path) == "graph 2 0\n");
    CHECK(! std::filesystem::exists(dir / "graph.txt.tmp"));
    CHECK_THROWS_AS(read_file(dir / "missing"), IoError);
    CHECK_THROWS_AS(write_file_atomic(dir / "no" / "such" / "dir", "x"), IoError);
    std::filesystem::remove_all(dir);
}
