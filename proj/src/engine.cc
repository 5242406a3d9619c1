#include <vecchoose/engine.hh>
#include <vecchoose/errors.hh>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <unordered_map>

using namespace vecchoose;

using std::optional;
using std::size_t;
using std::string;
using std::uint32_t;
using std::uint64_t;
using std::vector;

auto SubspaceAssignment::validate() const -> void
{
    if (spaces.size() != graph.size())
        throw InvalidParameter("assignment has " + std::to_string(spaces.size()) + " subspaces for "
                + std::to_string(graph.size()) + " vertices");
    for (size_t v = 0 ; v < spaces.size() ; ++v) {
        if (! (spaces[v].field() == field))
            throw FieldMismatch("vertex " + std::to_string(v) + " is over " + spaces[v].field().to_string()
                    + ", assignment over " + field.to_string());
        if (spaces[v].ambient() != ambient)
            throw AmbientMismatch("vertex " + std::to_string(v) + " lives in dimension "
                    + std::to_string(spaces[v].ambient()) + ", assignment in " + std::to_string(ambient));
    }
}

auto SubspaceAssignment::dimensions() const -> DimensionMap
{
    DimensionMap result;
    for (auto & s : spaces)
        result.push_back(s.dim());
    return result;
}

auto vecchoose::verify_choice(const SubspaceAssignment & a, const Choice & c) -> VerifyReport
{
    VerifyReport report;
    if (c.size() != a.graph.size()) {
        report.valid = false;
        report.reason = "choice covers " + std::to_string(c.size()) + " of " + std::to_string(a.graph.size()) + " vertices";
        return report;
    }
    for (size_t v = 0 ; v < c.size() ; ++v) {
        if (! (c[v].field() == a.field))
            throw FieldMismatch("choice at vertex " + std::to_string(v) + " is over " + c[v].field().to_string());
        if (c[v].size() != a.ambient)
            throw AmbientMismatch("choice at vertex " + std::to_string(v) + " has length " + std::to_string(c[v].size()));
        if (c[v].is_zero()) {
            report.valid = false;
            report.bad_vertex = v;
            report.reason = "vector at vertex " + std::to_string(v) + " is zero";
            return report;
        }
        if (! a.spaces[v].contains(c[v])) {
            report.valid = false;
            report.bad_vertex = v;
            report.reason = "vector at vertex " + std::to_string(v) + " is outside its subspace";
            return report;
        }
    }
    for (auto & [u, v] : a.graph.edges())
        if (! dot(c[u], c[v]).is_zero()) {
            report.valid = false;
            report.bad_edge = Edge{ u, v };
            report.reason = "edge " + std::to_string(u) + " " + std::to_string(v) + " is not orthogonal";
            return report;
        }
    return report;
}

auto vecchoose::available_space(const SubspaceAssignment & a, const PartialChoice & c, size_t v) -> Subspace
{
    Subspace result = a.spaces[v];
    for (auto u : a.graph.neighbours(v))
        if (c[u])
            result = restrict_orthogonal(result, *c[u]);
    return result;
}

auto vecchoose::extend_greedily(const SubspaceAssignment & a, PartialChoice & c, const vector<size_t> & order) -> void
{
    for (auto v : order) {
        auto space = available_space(a, c, v);
        if (space.dim() == 0)
            throw InternalError("no vector left for vertex " + std::to_string(v));
        c[v] = space.first_nonzero();
    }
}

auto vecchoose::completed(const PartialChoice & c) -> Choice
{
    Choice result;
    for (size_t v = 0 ; v < c.size() ; ++v) {
        if (! c[v])
            throw InternalError("vertex " + std::to_string(v) + " was never decided");
        result.push_back(*c[v]);
    }
    return result;
}

auto vecchoose::verdict_name(Verdict v) -> string
{
    switch (v) {
        case Verdict::choosable:    return "choosable";
        case Verdict::no_choice:    return "no_choice";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace
{
    /// Arithmetic modulo a prime below 2^31 on raw residues.
    struct ModP
    {
        uint32_t p;
        size_t t;

        auto mul(uint32_t a, uint32_t b) const -> uint32_t { return static_cast<uint32_t>(uint64_t{a} * b % p); }
        auto add(uint32_t a, uint32_t b) const -> uint32_t { uint32_t s = a + b; return s >= p ? s - p : s; }
        auto sub(uint32_t a, uint32_t b) const -> uint32_t { return a >= b ? a - b : a + (p - b); }

        auto inv(uint32_t a) const -> uint32_t
        {
            uint64_t result = 1, base = a, e = p - 2;
            while (e) {
                if (e & 1)
                    result = result * base % p;
                base = base * base % p;
                e >>= 1;
            }
            return static_cast<uint32_t>(result);
        }

        auto dot(const uint32_t * x, const uint32_t * y) const -> uint32_t
        {
            uint64_t sum = 0;
            for (size_t i = 0 ; i < t ; ++i) {
                sum += uint64_t{x[i]} * y[i] % p;
                if (sum >= (uint64_t{1} << 62))
                    sum %= p;
            }
            return static_cast<uint32_t>(sum % p);
        }

        /// Reduced row echelon form of rows stored flat, zero rows dropped.
        auto rref(vector<uint32_t> & rows) const -> void
        {
            size_t n = rows.size() / t, r = 0;
            for (size_t c = 0 ; c < t && r < n ; ++c) {
                size_t sel = r;
                while (sel < n && rows[sel * t + c] == 0)
                    ++sel;
                if (sel == n)
                    continue;
                if (sel != r)
                    std::swap_ranges(rows.begin() + sel * t, rows.begin() + (sel + 1) * t, rows.begin() + r * t);
                uint32_t iv = inv(rows[r * t + c]);
                for (size_t k = c ; k < t ; ++k)
                    rows[r * t + k] = mul(rows[r * t + k], iv);
                for (size_t o = 0 ; o < n ; ++o) {
                    uint32_t f = rows[o * t + c];
                    if (o == r || f == 0)
                        continue;
                    for (size_t k = c ; k < t ; ++k)
                        rows[o * t + k] = sub(rows[o * t + k], mul(f, rows[r * t + k]));
                }
                ++r;
            }
            rows.resize(r * t);
        }

        /// space intersected with x^perp; returns false if unchanged.
        auto restrict_to(const vector<uint32_t> & space, const uint32_t * x, vector<uint32_t> & out) const -> bool
        {
            size_t d = space.size() / t;
            vector<uint32_t> products(d);
            size_t pivot = d;
            for (size_t i = 0 ; i < d ; ++i) {
                products[i] = dot(&space[i * t], x);
                if (pivot == d && products[i] != 0)
                    pivot = i;
            }
            if (pivot == d)
                return false;
            out.clear();
            out.reserve((d - 1) * t);
            uint32_t iv = inv(products[pivot]);
            for (size_t i = 0 ; i < d ; ++i) {
                if (i == pivot)
                    continue;
                uint32_t f = mul(products[i], iv);
                for (size_t k = 0 ; k < t ; ++k)
                    out.push_back(sub(space[i * t + k], mul(f, space[pivot * t + k])));
            }
            rref(out);
            return true;
        }

        /// Canonical projective points of the row space, in the order of
        /// projective_coefficients.
        auto points(const vector<uint32_t> & space) const -> vector<vector<uint32_t>>
        {
            size_t d = space.size() / t;
            vector<vector<uint32_t>> result;
            for (size_t lead = 0 ; lead < d ; ++lead) {
                size_t tail = d - lead - 1;
                vector<uint32_t> counter(tail, 0);
                while (true) {
                    vector<uint32_t> x(space.begin() + lead * t, space.begin() + (lead + 1) * t);
                    for (size_t i = 0 ; i < tail ; ++i)
                        if (counter[i])
                            for (size_t k = 0 ; k < t ; ++k)
                                x[k] = add(x[k], mul(counter[i], space[(lead + 1 + i) * t + k]));
                    result.push_back(std::move(x));
                    size_t pos = 0;
                    while (pos < tail && ++counter[pos] == p)
                        counter[pos++] = 0;
                    if (pos == tail)
                        break;
                }
            }
            return result;
        }
    };

    struct KeyHash
    {
        auto operator() (const vector<uint32_t> & key) const -> size_t
        {
            uint64_t h = 1469598103934665603ull;
            for (auto w : key) {
                h ^= w;
                h *= 1099511628211ull;
            }
            return static_cast<size_t>(h);
        }
    };

    struct MemoEntry
    {
        bool success;
        vector<uint32_t> witness;
    };

    struct OutOfBudget
    {
    };

    auto to_residues(const Subspace & s) -> vector<uint32_t>
    {
        vector<uint32_t> result;
        for (auto & b : s.basis())
            for (auto & e : b.entries())
                result.push_back(e.residue());
        return result;
    }

    auto to_vector(const Field & field, const uint32_t * x, size_t t) -> Vector
    {
        vector<Scalar> entries;
        for (size_t k = 0 ; k < t ; ++k)
            entries.push_back(Scalar::from_int(field, x[k]));
        return Vector(field, std::move(entries));
    }

    auto default_rank(const Graph & g, const optional<vector<size_t>> & hint) -> vector<size_t>
    {
        size_t n = g.size();
        vector<size_t> order;
        if (hint) {
            order = *hint;
            vector<bool> seen(n, false);
            for (auto v : order) {
                if (v >= n || seen[v])
                    throw InvalidParameter("order hint is not a list of distinct vertices");
                seen[v] = true;
            }
            for (size_t v = 0 ; v < n ; ++v)
                if (! seen[v])
                    order.push_back(v);
        }
        else {
            order.resize(n);
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&] (size_t a, size_t b) { return g.degree(a) > g.degree(b); });
        }
        vector<size_t> rank(n);
        for (size_t i = 0 ; i < n ; ++i)
            rank[order[i]] = i;
        return rank;
    }

    class Search
    {
        private:
            const SubspaceAssignment & _a;
            const SearchOptions & _options;
            ModP _k;
            size_t _n;
            vector<size_t> _rank;
            vector<vector<uint32_t>> _avail;
            vector<unsigned> _modified;
            vector<bool> _decided;
            vector<vector<uint32_t>> _chosen;
            vector<std::pair<size_t, vector<uint32_t>>> _undo;
            std::unordered_map<vector<uint32_t>, MemoEntry, KeyHash> _memo;
            size_t _memo_words = 0;
            std::chrono::steady_clock::time_point _start;

            auto tick() -> void
            {
                ++nodes;
                if (_options.node_budget && nodes > _options.node_budget)
                    throw OutOfBudget{};
                if (_options.time_budget_seconds > 0 && (nodes & 255) == 0) {
                    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - _start;
                    if (elapsed.count() > _options.time_budget_seconds)
                        throw OutOfBudget{};
                }
            }

            auto undo_to(size_t mark) -> void
            {
                while (_undo.size() > mark) {
                    auto & [v, old] = _undo.back();
                    _avail[v] = std::move(old);
                    --_modified[v];
                    _undo.pop_back();
                }
            }

            auto key_for(const vector<size_t> & comp) const -> vector<uint32_t>
            {
                vector<uint32_t> key((_n + 31) / 32, 0);
                for (auto v : comp)
                    key[v / 32] |= uint32_t{1} << (v % 32);
                for (auto v : comp)
                    if (_modified[v]) {
                        key.push_back(static_cast<uint32_t>(v));
                        key.push_back(static_cast<uint32_t>(_avail[v].size() / _k.t));
                        key.insert(key.end(), _avail[v].begin(), _avail[v].end());
                    }
                return key;
            }

            auto remember(vector<uint32_t> && key, MemoEntry && entry) -> void
            {
                size_t words = key.size() + entry.witness.size() + 8;
                if (_memo_words + words > _options.memo_words) {
                    _memo.clear();
                    _memo_words = 0;
                }
                _memo_words += words;
                _memo.emplace(std::move(key), std::move(entry));
            }

            /// Connected pieces of the undecided vertices in group, each
            /// sorted, ordered by size then least vertex.
            auto split(const vector<size_t> & group) -> vector<vector<size_t>>
            {
                if (! _options.split_components)
                    return { group };
                vector<vector<size_t>> result;
                vector<bool> seen(_n, false);
                for (auto root : group) {
                    if (seen[root])
                        continue;
                    vector<size_t> piece{ root }, stack{ root };
                    seen[root] = true;
                    while (! stack.empty()) {
                        size_t u = stack.back();
                        stack.pop_back();
                        for (auto w : _a.graph.neighbours(u))
                            if (! _decided[w] && ! seen[w]) {
                                seen[w] = true;
                                piece.push_back(w);
                                stack.push_back(w);
                            }
                    }
                    std::sort(piece.begin(), piece.end());
                    result.push_back(std::move(piece));
                }
                std::stable_sort(result.begin(), result.end(), [] (const auto & x, const auto & y) {
                        return x.size() != y.size() ? x.size() < y.size() : x.front() < y.front(); });
                return result;
            }

            auto select(const vector<size_t> & comp) const -> size_t
            {
                size_t best = comp.front();
                for (auto v : comp) {
                    size_t dv = _avail[v].size(), db = _avail[best].size();
                    if (dv < db || (dv == db && _rank[v] < _rank[best]))
                        best = v;
                }
                return best;
            }

            auto solve(const vector<size_t> & comp) -> bool
            {
                tick();
                vector<uint32_t> key;
                if (_options.memoize) {
                    key = key_for(comp);
                    auto hit = _memo.find(key);
                    if (hit != _memo.end()) {
                        if (hit->second.success)
                            for (size_t i = 0 ; i < comp.size() ; ++i) {
                                _decided[comp[i]] = true;
                                _chosen[comp[i]].assign(hit->second.witness.begin() + i * _k.t,
                                        hit->second.witness.begin() + (i + 1) * _k.t);
                            }
                        return hit->second.success;
                    }
                }

                size_t v = select(comp);
                vector<size_t> rest;
                for (auto u : comp)
                    if (u != v)
                        rest.push_back(u);

                vector<uint32_t> scratch;
                for (auto & x : _k.points(_avail[v])) {
                    tick();
                    size_t mark = _undo.size();
                    _decided[v] = true;
                    _chosen[v] = x;
                    bool ok = true;
                    for (auto u : _a.graph.neighbours(v)) {
                        if (_decided[u])
                            continue;
                        if (_k.restrict_to(_avail[u], x.data(), scratch)) {
                            _undo.emplace_back(u, std::move(_avail[u]));
                            _avail[u] = scratch;
                            ++_modified[u];
                            if (_avail[u].empty()) {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if (ok && ! rest.empty())
                        for (auto & piece : split(rest))
                            if (! solve(piece)) {
                                ok = false;
                                break;
                            }
                    if (ok) {
                        if (_options.memoize) {
                            vector<uint32_t> witness;
                            for (auto u : comp)
                                witness.insert(witness.end(), _chosen[u].begin(), _chosen[u].end());
                            remember(std::move(key), MemoEntry{ true, std::move(witness) });
                        }
                        return true;
                    }
                    for (auto u : comp)
                        _decided[u] = false;
                    undo_to(mark);
                }
                if (_options.memoize)
                    remember(std::move(key), MemoEntry{ false, {} });
                return false;
            }

        public:
            uint64_t nodes = 0;

            Search(const SubspaceAssignment & a, const SearchOptions & options) :
                _a(a),
                _options(options),
                _k{ a.field.characteristic(), a.ambient },
                _n(a.graph.size()),
                _rank(default_rank(a.graph, options.order_hint)),
                _modified(_n, 0),
                _decided(_n, false),
                _chosen(_n),
                _start(std::chrono::steady_clock::now())
            {
                for (auto & s : a.spaces)
                    _avail.push_back(to_residues(s));
            }

            auto run() -> optional<Choice>
            {
                for (size_t v = 0 ; v < _n ; ++v)
                    if (_avail[v].empty())
                        return std::nullopt;
                vector<size_t> all(_n);
                std::iota(all.begin(), all.end(), 0);
                if (! all.empty())
                    for (auto & piece : split(all))
                        if (! solve(piece))
                            return std::nullopt;
                Choice result;
                for (size_t v = 0 ; v < _n ; ++v)
                    result.push_back(to_vector(_a.field, _chosen[v].data(), _k.t));
                return result;
            }

            auto enumerate(const std::function<auto (const Choice &) -> bool> & visit, uint64_t & count) -> bool
            {
                size_t best = _n;
                for (size_t v = 0 ; v < _n ; ++v)
                    if (! _decided[v] && (best == _n || _avail[v].size() < _avail[best].size()
                                || (_avail[v].size() == _avail[best].size() && _rank[v] < _rank[best])))
                        best = v;
                if (best == _n) {
                    ++count;
                    Choice c;
                    for (size_t v = 0 ; v < _n ; ++v)
                        c.push_back(to_vector(_a.field, _chosen[v].data(), _k.t));
                    return visit(c);
                }
                vector<uint32_t> scratch;
                for (auto & x : _k.points(_avail[best])) {
                    size_t mark = _undo.size();
                    _decided[best] = true;
                    _chosen[best] = x;
                    bool ok = true;
                    for (auto u : _a.graph.neighbours(best)) {
                        if (_decided[u])
                            continue;
                        if (_k.restrict_to(_avail[u], x.data(), scratch)) {
                            _undo.emplace_back(u, std::move(_avail[u]));
                            _avail[u] = scratch;
                            ++_modified[u];
                            if (_avail[u].empty()) {
                                ok = false;
                                break;
                            }
                        }
                    }
                    bool keep_going = ! ok || enumerate(visit, count);
                    _decided[best] = false;
                    undo_to(mark);
                    if (! keep_going)
                        return false;
                }
                return true;
            }
    };

    auto check_finite(const SubspaceAssignment & a) -> void
    {
        a.validate();
        if (a.field.is_rationals())
            throw InfiniteField("exhaustive search needs a finite field; use cycle_obstruction or verify_choice over Q");
    }
}

auto vecchoose::find_choice(const SubspaceAssignment & a, const SearchOptions & options) -> SearchCertificate
{
    check_finite(a);
    SearchCertificate certificate;
    certificate.order = options.order_hint ? "hint" : "degree-desc";
    certificate.seed = options.seed;
    auto start = std::chrono::steady_clock::now();
    Search search(a, options);
    try {
        auto witness = search.run();
        if (witness) {
            if (! verify_choice(a, *witness).valid)
                throw InternalError("search produced an invalid witness");
            certificate.verdict = Verdict::choosable;
            certificate.witness = std::move(witness);
        }
        else
            certificate.verdict = Verdict::no_choice;
    }
    catch (const OutOfBudget &) {
        certificate.verdict = Verdict::inconclusive;
    }
    certificate.nodes = search.nodes;
    certificate.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return certificate;
}

auto vecchoose::enumerate_choices(const SubspaceAssignment & a, const std::function<auto (const Choice &) -> bool> & visit) -> uint64_t
{
    check_finite(a);
    for (auto & s : a.spaces)
        if (s.dim() == 0)
            return 0;
    SearchOptions options;
    Search search(a, options);
    uint64_t count = 0;
    search.enumerate(visit, count);
    return count;
}
