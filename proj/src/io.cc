#include <vecchoose/io.hh>
#include <vecchoose/errors.hh>

#include <charconv>
#include <fstream>
#include <sstream>

using namespace vecchoose;

using std::optional;
using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace
{
    struct Line
    {
        size_t number = 0;
        string_view text;
        vector<string_view> words;
    };

    auto split_words(string_view line) -> vector<string_view>
    {
        vector<string_view> words;
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            size_t start = i;
            while (i < line.size() && ! std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            if (i > start)
                words.push_back(line.substr(start, i - start));
        }
        return words;
    }

    class Reader
    {
        private:
            vector<Line> _lines;
            size_t _next = 0;

        public:
            explicit Reader(string_view text)
            {
                size_t number = 0, start = 0;
                while (start <= text.size()) {
                    size_t end = text.find('\n', start);
                    if (end == string_view::npos)
                        end = text.size();
                    string_view line = text.substr(start, end - start);
                    if (! line.empty() && line.back() == '\r')
                        line.remove_suffix(1);
                    ++number;
                    auto words = split_words(line);
                    if (! words.empty() && words[0][0] != '#')
                        _lines.push_back({ number, line, std::move(words) });
                    start = end + 1;
                }
            }

            auto done() const -> bool { return _next == _lines.size(); }
            auto peek() const -> const Line * { return done() ? nullptr : &_lines[_next]; }

            auto next(const string & what) -> const Line &
            {
                if (done())
                    throw ParseError("unexpected end of input, expected " + what);
                return _lines[_next++];
            }
    };

    [[noreturn]] auto fail(const Line & line, const string & message) -> void
    {
        throw ParseError("line " + std::to_string(line.number) + ": " + message);
    }

    auto number(const Line & line, size_t index) -> size_t
    {
        if (index >= line.words.size())
            fail(line, "missing field " + std::to_string(index + 1));
        auto w = line.words[index];
        size_t value = 0;
        auto [end, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
        if (ec != std::errc{} || end != w.data() + w.size())
            fail(line, "expected a nonnegative integer, got '" + string(w) + "'");
        return value;
    }

    auto expect(const Line & line, string_view keyword, size_t words) -> void
    {
        if (line.words[0] != keyword)
            fail(line, "expected '" + string(keyword) + "', got '" + string(line.words[0]) + "'");
        if (words && line.words.size() != words)
            fail(line, "'" + string(keyword) + "' takes " + std::to_string(words - 1) + " fields");
    }

    /// Everything after the first two words, verbatim.
    auto rest_after_two(const Line & line) -> string
    {
        if (line.words.size() < 3)
            fail(line, "missing label");
        auto start = line.words[2].data() - line.text.data();
        auto end = line.words.back().data() + line.words.back().size() - line.text.data();
        return string(line.text.substr(start, end - start));
    }

    auto parse_row(const Line & line, const Field & field, size_t ambient) -> Vector
    {
        if (line.words.size() != ambient)
            fail(line, "row has " + std::to_string(line.words.size()) + " entries, expected " + std::to_string(ambient));
        vector<Scalar> entries;
        for (auto w : line.words) {
            try {
                entries.push_back(Scalar::parse(field, w));
            }
            catch (const Error & e) {
                fail(line, e.what());
            }
        }
        return Vector(field, std::move(entries));
    }

    auto vertex_id(const Line & line, size_t index, size_t vertices) -> size_t
    {
        size_t v = number(line, index);
        if (v >= vertices)
            fail(line, "vertex " + std::to_string(v) + " outside 0.." + std::to_string(vertices - 1));
        return v;
    }

    auto field_and_ambient(Reader & in) -> std::pair<Field, size_t>
    {
        auto & fl = in.next("field");
        expect(fl, "field", 2);
        Field field;
        try {
            field = Field::parse(fl.words[1]);
        }
        catch (const Error & e) {
            fail(fl, e.what());
        }
        auto & al = in.next("ambient");
        expect(al, "ambient", 2);
        return { field, number(al, 1) };
    }

    auto print_field_and_ambient(const Field & field, size_t ambient) -> string
    {
        return "field " + field.to_string() + "\nambient " + std::to_string(ambient) + "\n";
    }

    auto read_choice_rows(Reader & in, const Field & field, size_t ambient, size_t vertices) -> Choice
    {
        vector<optional<Vector>> rows(vertices);
        for (size_t i = 0 ; i < vertices ; ++i) {
            auto & header = in.next("v <id>");
            expect(header, "v", 2);
            size_t v = vertex_id(header, 1, vertices);
            if (rows[v])
                fail(header, "vertex " + std::to_string(v) + " appears twice");
            rows[v] = parse_row(in.next("a row"), field, ambient);
        }
        Choice c;
        for (auto & r : rows)
            c.push_back(*r);
        return c;
    }

    auto print_choice_rows(const Choice & c) -> string
    {
        string out;
        for (size_t v = 0 ; v < c.size() ; ++v)
            out += "v " + std::to_string(v) + "\n" + c[v].to_string() + "\n";
        return out;
    }

    auto finish(Reader & in) -> void
    {
        if (auto line = in.peek())
            fail(*line, "unexpected trailing content");
    }
}

auto vecchoose::print_graph(const Graph & g) -> string
{
    string out = "graph " + std::to_string(g.size()) + " " + std::to_string(g.edges().size()) + "\n";
    for (auto & [u, v] : g.edges())
        out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out + print_labels(g);
}

auto vecchoose::print_labels(const Graph & g) -> string
{
    string out;
    for (auto & [v, label] : g.labels())
        out += "l " + std::to_string(v) + " " + label + "\n";
    return out;
}

auto vecchoose::parse_graph(string_view text) -> Graph
{
    Reader in(text);
    auto & header = in.next("graph header");
    expect(header, "graph", 3);
    size_t n = number(header, 1), m = number(header, 2);
    Graph g(n);
    for (size_t i = 0 ; i < m ; ++i) {
        auto & line = in.next("edge");
        expect(line, "e", 3);
        size_t u = vertex_id(line, 1, n), v = vertex_id(line, 2, n);
        try {
            g.add_edge(u, v);
        }
        catch (const Error & e) {
            fail(line, e.what());
        }
    }
    while (auto line = in.peek()) {
        in.next("label");
        expect(*line, "l", 0);
        g.set_label(vertex_id(*line, 1, n), rest_after_two(*line));
    }
    return g;
}

auto vecchoose::print_dot(const Graph & g) -> string
{
    string out = "graph G {\n";
    for (size_t v = 0 ; v < g.size() ; ++v) {
        out += "  " + std::to_string(v);
        if (auto l = g.label(v)) {
            string escaped;
            for (char c : *l) {
                if (c == '"' || c == '\\')
                    escaped += '\\';
                escaped += c;
            }
            out += " [label=\"" + escaped + "\"]";
        }
        out += ";\n";
    }
    for (auto & [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    return out + "}\n";
}

auto vecchoose::print_assignment(const SubspaceAssignment & a) -> string
{
    string out = print_field_and_ambient(a.field, a.ambient);
    for (size_t v = 0 ; v < a.spaces.size() ; ++v) {
        out += "v " + std::to_string(v) + " dim " + std::to_string(a.spaces[v].dim()) + "\n";
        for (auto & row : a.spaces[v].basis())
            out += row.to_string() + "\n";
    }
    return out;
}

auto vecchoose::parse_assignment(const Graph & g, string_view text) -> SubspaceAssignment
{
    Reader in(text);
    auto [field, ambient] = field_and_ambient(in);
    vector<optional<Subspace>> spaces(g.size());
    for (size_t i = 0 ; i < g.size() ; ++i) {
        auto & header = in.next("v <id> dim <d>");
        expect(header, "v", 4);
        if (header.words[2] != "dim")
            fail(header, "expected 'dim'");
        size_t v = vertex_id(header, 1, g.size()), d = number(header, 3);
        if (spaces[v])
            fail(header, "vertex " + std::to_string(v) + " appears twice");
        vector<Vector> rows;
        for (size_t r = 0 ; r < d ; ++r)
            rows.push_back(parse_row(in.next("a basis row"), field, ambient));
        auto s = Subspace::span(field, ambient, rows);
        if (s.dim() != d)
            fail(header, "basis rows of vertex " + std::to_string(v) + " are dependent");
        spaces[v] = s;
    }
    finish(in);
    SubspaceAssignment a{ g, field, ambient, {} };
    for (auto & s : spaces)
        a.spaces.push_back(*s);
    return a;
}

auto vecchoose::print_choice(const Choice & c) -> string
{
    return print_choice_rows(c);
}

auto vecchoose::parse_choice(const Field & field, size_t ambient, size_t vertices, string_view text) -> Choice
{
    Reader in(text);
    auto c = read_choice_rows(in, field, ambient, vertices);
    finish(in);
    return c;
}

auto vecchoose::print_dimensions(const DimensionMap & f) -> string
{
    string out;
    for (size_t v = 0 ; v < f.size() ; ++v)
        out += "f " + std::to_string(v) + " " + std::to_string(f[v]) + "\n";
    return out;
}

auto vecchoose::parse_dimensions(size_t vertices, string_view text) -> DimensionMap
{
    Reader in(text);
    vector<optional<size_t>> f(vertices);
    for (size_t i = 0 ; i < vertices ; ++i) {
        auto & line = in.next("f <v> <d>");
        expect(line, "f", 3);
        size_t v = vertex_id(line, 1, vertices);
        if (f[v])
            fail(line, "vertex " + std::to_string(v) + " appears twice");
        f[v] = number(line, 2);
    }
    finish(in);
    DimensionMap result;
    for (auto & d : f)
        result.push_back(*d);
    return result;
}

auto vecchoose::print_partition(const EdgePartition & p) -> string
{
    string out = "partition " + std::to_string(p.k) + "\n";
    for (size_t v = 0 ; v < p.graph.size() ; ++v) {
        out += "p " + std::to_string(v);
        for (auto e : p.graph.incident(v))
            out += " " + std::to_string(e) + ":" + std::to_string(p.part(e, v));
        out += "\n";
    }
    return out;
}

auto vecchoose::parse_partition(const Graph & g, string_view text) -> EdgePartition
{
    Reader in(text);
    auto & header = in.next("partition <k>");
    expect(header, "partition", 2);
    EdgePartition p{ g, number(header, 1), {} };
    if (p.k == 0)
        fail(header, "k must be positive");
    vector<std::array<optional<size_t>, 2>> parts(g.edges().size());
    vector<bool> seen(g.size(), false);
    for (size_t i = 0 ; i < g.size() ; ++i) {
        auto & line = in.next("p <v> ...");
        expect(line, "p", 0);
        size_t v = vertex_id(line, 1, g.size());
        if (seen[v])
            fail(line, "vertex " + std::to_string(v) + " appears twice");
        seen[v] = true;
        for (size_t w = 2 ; w < line.words.size() ; ++w) {
            auto word = line.words[w];
            auto colon = word.find(':');
            if (colon == string_view::npos)
                fail(line, "expected <edge>:<part>, got '" + string(word) + "'");
            Line pieces{ line.number, word, { word.substr(0, colon), word.substr(colon + 1) } };
            size_t e = number(pieces, 0), part = number(pieces, 1);
            if (e >= g.edges().size())
                fail(line, "edge " + std::to_string(e) + " does not exist");
            if (part >= p.k)
                fail(line, "part " + std::to_string(part) + " outside 0.." + std::to_string(p.k - 1));
            auto [a, b] = g.edges()[e];
            if (a != v && b != v)
                fail(line, "edge " + std::to_string(e) + " is not incident to vertex " + std::to_string(v));
            auto & slot = parts[e][a == v ? 0 : 1];
            if (slot)
                fail(line, "edge " + std::to_string(e) + " listed twice");
            slot = part;
        }
    }
    finish(in);
    for (size_t e = 0 ; e < parts.size() ; ++e) {
        if (! parts[e][0] || ! parts[e][1])
            throw ParseError("edge " + std::to_string(e) + " lacks a part at one endpoint");
        p.parts.push_back({ *parts[e][0], *parts[e][1] });
    }
    return p;
}

auto vecchoose::parse_verdict(string_view name) -> Verdict
{
    for (auto v : { Verdict::choosable, Verdict::no_choice, Verdict::inconclusive })
        if (verdict_name(v) == name)
            return v;
    throw ParseError("unknown verdict '" + string(name) + "'");
}

auto vecchoose::print_certificate(const SearchCertificate & c, const Field & field, size_t ambient) -> string
{
    string out = "verdict " + verdict_name(c.verdict) + "\n";
    out += "nodes " + std::to_string(c.nodes) + "\n";
    out += "order " + c.order + "\n";
    out += "seed " + std::to_string(c.seed) + "\n";
    out += print_field_and_ambient(field, ambient);
    if (c.witness)
        out += "witness " + std::to_string(c.witness->size()) + "\n" + print_choice_rows(*c.witness);
    return out;
}

auto vecchoose::parse_certificate(string_view text) -> CertificateFile
{
    Reader in(text);
    CertificateFile file;
    auto & verdict = in.next("verdict");
    expect(verdict, "verdict", 2);
    try {
        file.certificate.verdict = parse_verdict(verdict.words[1]);
    }
    catch (const Error & e) {
        fail(verdict, e.what());
    }
    auto & nodes = in.next("nodes");
    expect(nodes, "nodes", 2);
    file.certificate.nodes = number(nodes, 1);
    auto & order = in.next("order");
    expect(order, "order", 2);
    file.certificate.order = string(order.words[1]);
    auto & seed = in.next("seed");
    expect(seed, "seed", 2);
    file.certificate.seed = number(seed, 1);
    std::tie(file.field, file.ambient) = field_and_ambient(in);
    if (auto line = in.peek()) {
        in.next("witness");
        expect(*line, "witness", 2);
        file.certificate.witness = read_choice_rows(in, file.field, file.ambient, number(*line, 1));
    }
    finish(in);
    return file;
}

auto vecchoose::read_file(const std::filesystem::path & path) -> string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw IoError("cannot open " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

auto vecchoose::write_file_atomic(const std::filesystem::path & path, string_view content) -> void
{
    auto temporary = path;
    temporary += ".tmp";
    {
        std::ofstream out(temporary, std::ios::binary | std::ios::trunc);
        if (! out)
            throw IoError("cannot write " + temporary.string());
        out.write(content.data(), std::streamsize(content.size()));
        if (! out.flush())
            throw IoError("failed writing " + temporary.string());
    }
    std::error_code ec;
    std::filesystem::rename(temporary, path, ec);
    if (ec)
        throw IoError("cannot rename " + temporary.string() + " to " + path.string() + ": " + ec.message());
}
